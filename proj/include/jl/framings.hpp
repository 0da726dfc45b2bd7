#pragma once

#include <string>
#include <vector>

#include "jl/alphabet.hpp"

namespace jl {

/// Rotation numbers of a framing on a symplectic basis, plus optional
/// rotation samples on non-separating simple closed curves (used in genus 1,
/// where the orbit invariant is a gcd over such curves).
struct FramingData {
    int genus = 1;
    std::vector<int> rot_a;  // rot(a_1..a_g)
    std::vector<int> rot_b;  // rot(b_1..b_g)
    std::vector<std::pair<std::string, int>> scc;  // (description, rotation)
};

/// Arf(xi) = sum_j f(a_j) f(b_j) mod 2 with f(c) = 1 + rot(c) mod 2.
int arf(const FramingData& f);

struct OrbitDescriptor {
    std::string kind;       // "arf" (g >= 2) or "gcd" (g = 1)
    int arf_invariant = 0;
    long gcd_value = 0;          // g = 1 only: gcd of the supplied samples
    bool parity_consistent = true;  // g = 1: gcd = 1 + Arf mod 2
    std::string to_string() const;
};

/// Mapping-class-group orbit data of the framing: the Arf bit for g >= 2;
/// for g = 1 the gcd of the supplied scc rotations with the mod-2
/// consistency check against 1 + Arf. Throws InsufficientDataError when
/// g = 1 and no scc samples are given.
OrbitDescriptor classify_orbit(const FramingData& f);

}  // namespace jl

#include "jl/framings.hpp"

#include <numeric>

namespace jl {

namespace {
int mod2(long x) { return static_cast<int>(((x % 2) + 2) % 2); }
}  // namespace

int arf(const FramingData& f) {
    if (f.genus < 1 || static_cast<int>(f.rot_a.size()) != f.genus ||
        static_cast<int>(f.rot_b.size()) != f.genus)
        throw std::invalid_argument("framing data needs rotation numbers for a full symplectic basis");
    int s = 0;
    for (int j = 0; j < f.genus; ++j)
        s += mod2(1 + f.rot_a[static_cast<std::size_t>(j)]) * mod2(1 + f.rot_b[static_cast<std::size_t>(j)]);
    return mod2(s);
}

std::string OrbitDescriptor::to_string() const {
    if (kind == "arf") return "orbit: Arf " + std::to_string(arf_invariant);
    return "orbit: A = " + std::to_string(gcd_value) + " (Arf " + std::to_string(arf_invariant) +
           (parity_consistent ? ", parity consistent)" : ", PARITY INCONSISTENT)");
}

OrbitDescriptor classify_orbit(const FramingData& f) {
    OrbitDescriptor d;
    d.arf_invariant = arf(f);
    if (f.genus >= 2) {
        d.kind = "arf";
        return d;
    }
    d.kind = "gcd";
    if (f.scc.empty())
        throw InsufficientDataError(
            "genus-1 orbit needs rotation numbers of non-separating simple closed curves");
    long g = 0;
    for (auto& [desc, rot] : f.scc) g = std::gcd(g, static_cast<long>(rot));
    d.gcd_value = g;
    d.parity_consistent = mod2(g) == mod2(1 + d.arf_invariant);
    return d;
}

}  // namespace jl

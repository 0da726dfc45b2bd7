#pragma once

#include <map>
#include <vector>

#include "jl/rational.hpp"

namespace jl {

/// Exact-rational Laurent polynomial in x_1..x_n; the carrier for Sp(2g)
/// characters (n = g, Weyl-invariant under permutations and inversions).
class Laurent {
public:
    explicit Laurent(int nvars) : nvars_(nvars) {}
    static Laurent constant(int nvars, Rat c) {
        Laurent p(nvars);
        if (c != 0) p.terms_.emplace(std::vector<int>(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }
    static Laurent monomial(std::vector<int> expo, Rat c) {
        Laurent p(static_cast<int>(expo.size()));
        if (c != 0) p.terms_.emplace(std::move(expo), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Rat& s);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Rat& s) { return a *= s; }
    friend Laurent operator*(const Rat& s, Laurent a) { return a *= s; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const {
        Laurent r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Substitution x_i -> x_i^d (the d-th Adams operation on characters).
    Laurent adams(int d) const;

    Rat evaluate_at_one() const {
        Rat s(0);
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Invariance under the hyperoctahedral Weyl group (coordinate
    /// permutations and inversions x_i <-> 1/x_i).
    bool is_weyl_invariant() const;

    std::string to_string() const;

private:
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

}  // namespace jl

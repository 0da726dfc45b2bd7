#include "jl/laurent.hpp"

#include <algorithm>

namespace jl {

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}
Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}
Laurent& Laurent::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r(a.nvars());
    std::vector<int> e(static_cast<std::size_t>(a.nvars()));
    for (auto& [ea, ca] : a.terms()) {
        for (auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Laurent Laurent::adams(int d) const {
    Laurent r(nvars_);
    for (auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        for (auto& x : e2) x *= d;
        r.add_term(e2, c);
    }
    return r;
}

bool Laurent::is_weyl_invariant() const {
    auto coeff = [&](const std::vector<int>& e) {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    };
    for (auto& [e, c] : terms_) {
        // inversion of each coordinate
        for (int i = 0; i < nvars_; ++i) {
            std::vector<int> e2 = e;
            e2[static_cast<std::size_t>(i)] = -e2[static_cast<std::size_t>(i)];
            if (coeff(e2) != c) return false;
        }
        // adjacent transpositions generate the permutations
        for (int i = 0; i + 1 < nvars_; ++i) {
            std::vector<int> e2 = e;
            std::swap(e2[static_cast<std::size_t>(i)], e2[static_cast<std::size_t>(i) + 1]);
            if (coeff(e2) != c) return false;
        }
    }
    return true;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

}  // namespace jl

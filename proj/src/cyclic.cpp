#include "jl/cyclic.hpp"

namespace jl {

Word canonical_rotation(const Word& w) {
    if (w.size() < 2) return w;
    Word best = w;
    Word rot = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

CyclicPoly cyclic_project(const TensorPoly& t) {
    CyclicPoly r(t.alphabet());
    for (auto& [w, c] : t.terms()) r.add_term(w, c);
    return r;
}

std::string CyclicPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : sorted_terms()) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*|" + word_to_string(alpha_, w) + "|";
    }
    return s;
}

std::string CyclicPair::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*|" + word_to_string(alpha_, k.first) + "|(x)|" +
             word_to_string(alpha_, k.second) + "|";
    }
    return s;
}

}  // namespace jl

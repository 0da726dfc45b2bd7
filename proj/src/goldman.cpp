#include "jl/goldman.hpp"

#include <set>

namespace jl {

namespace {
void require_symplectic(const Alphabet& a, const char* what) {
    if (!a.is_symplectic())
        throw ModelMismatchError(std::string(what) + " is implemented for the symplectic model only");
}
}  // namespace

CyclicPoly goldman_bracket(const CyclicPoly& x, const CyclicPoly& y) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    require_symplectic(x.alphabet(), "goldman_bracket");
    const Alphabet& a = x.alphabet();
    CyclicPoly out(a);
    for (auto& [xw, xc] : x.terms()) {
        for (auto& [yw, yc] : y.terms()) {
            for (std::size_t j = 0; j < xw.size(); ++j) {
                for (std::size_t k = 0; k < yw.size(); ++k) {
                    Rat p = a.pairing(static_cast<unsigned char>(xw[j]), static_cast<unsigned char>(yw[k]));
                    if (p == 0) continue;
                    Word w = xw.substr(j + 1) + xw.substr(0, j) + yw.substr(k + 1) + yw.substr(0, k);
                    out.add_term(w, xc * yc * p);
                }
            }
        }
    }
    return out;
}

CyclicPair turaev_cobracket(const CyclicPoly& x) {
    require_symplectic(x.alphabet(), "turaev_cobracket");
    const Alphabet& a = x.alphabet();
    CyclicPair out(a);
    for (auto& [w, c] : x.terms()) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            for (std::size_t k = j + 1; k < w.size(); ++k) {
                Rat p = a.pairing(static_cast<unsigned char>(w[j]), static_cast<unsigned char>(w[k]));
                if (p == 0) continue;
                Word inner = w.substr(j + 1, k - j - 1);
                Word outer = w.substr(k + 1) + w.substr(0, j);
                Rat s = c * p;
                out.add_term(inner, outer, s);
                out.add_term(outer, inner, -s);
            }
        }
    }
    return out;
}

CyclicPair reduced_cobracket(const CyclicPoly& x) { return turaev_cobracket(x).drop_empty_factors(); }

TensorPoly kk_action(const CyclicPoly& x, const TensorPoly& t) {
    require_same_alphabet(x.alphabet(), t.alphabet());
    require_symplectic(x.alphabet(), "kk_action");
    const Alphabet& a = x.alphabet();
    TensorPoly out(a);
    for (auto& [xw, xc] : x.terms()) {
        for (auto& [yw, yc] : t.terms()) {
            for (std::size_t j = 0; j < xw.size(); ++j) {
                for (std::size_t k = 0; k < yw.size(); ++k) {
                    Rat p = a.pairing(static_cast<unsigned char>(xw[j]), static_cast<unsigned char>(yw[k]));
                    if (p == 0) continue;
                    Word w = yw.substr(0, k) + xw.substr(j + 1) + xw.substr(0, j) + yw.substr(k + 1);
                    out.add_term(w, xc * yc * p);
                }
            }
        }
    }
    return out;
}

CyclicPair adjoint_on_pair(const CyclicPoly& c, const CyclicPair& p) {
    CyclicPair out(p.alphabet());
    for (auto& [key, coef] : p.terms()) {
        CyclicPoly left = CyclicPoly::necklace(p.alphabet(), key.first);
        CyclicPoly right = CyclicPoly::necklace(p.alphabet(), key.second);
        out.add_pair(goldman_bracket(c, left), right, coef);
        out.add_pair(left, goldman_bracket(c, right), coef);
    }
    return out;
}

CyclicPoly bracket_of_pair(const CyclicPair& p) {
    CyclicPoly out(p.alphabet());
    for (auto& [key, coef] : p.terms()) {
        CyclicPoly left = CyclicPoly::necklace(p.alphabet(), key.first);
        CyclicPoly right = CyclicPoly::necklace(p.alphabet(), key.second);
        out += goldman_bracket(left, right) * coef;
    }
    return out;
}

CyclicPoly theta_power_cyclic(const Alphabet& a, int k) {
    TensorPoly p = TensorPoly::unit(a);
    TensorPoly th = theta_tensor(a);
    for (int i = 0; i < k; ++i) p = p * th;
    return cyclic_project(p);
}

std::vector<Word> necklace_basis(const Alphabet& a, int weight) {
    std::set<Word> keys;
    Word w(static_cast<std::size_t>(weight), 0);
    int n = a.size();
    // enumerate all words, keep canonical representatives
    while (true) {
        keys.insert(canonical_rotation(w));
        int i = weight - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == static_cast<char>(n - 1)) w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return {keys.begin(), keys.end()};
}

}  // namespace jl

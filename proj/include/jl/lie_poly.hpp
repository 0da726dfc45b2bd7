#pragma once

#include "jl/tensor_poly.hpp"

namespace jl {

struct NotLieElementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_lyndon(const Word& w);

/// Standard factorization w = uv of a Lyndon word of length >= 2: v is the
/// longest proper Lyndon suffix; u is then Lyndon with u < v.
std::pair<Word, Word> standard_factorization(const Word& w);

/// All Lyndon words of the given length over nletters letters, in
/// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(int nletters, int length);

/// Lyndon words of the given length whose multidegree (per-letter count
/// signature under the alphabet's grading) equals md.
std::vector<Word> lyndon_words_multidegree(const Alphabet& a, int length, const std::vector<int>& md);

/// Tensor expansion of the Lyndon basis element L_w (the bracketing of w by
/// standard factorization). Memoized globally; thread-safe.
const TensorPoly& lyndon_expansion(const Alphabet& a, const Word& w);

/// Element of the free Lie algebra L(H) in Lyndon-basis coordinates.
class LiePoly {
public:
    explicit LiePoly(Alphabet a) : alpha_(std::move(a)) {}
    static LiePoly letter(const Alphabet& a, int idx) {
        LiePoly p(a);
        p.terms_.emplace(Word(1, static_cast<char>(idx)), Rat(1));
        return p;
    }
    static LiePoly basis_element(const Alphabet& a, const Word& lyndon, Rat c = Rat(1)) {
        LiePoly p(a);
        if (c != 0) p.terms_.emplace(lyndon, std::move(c));
        return p;
    }

    const Alphabet& alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LiePoly& operator+=(const LiePoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    LiePoly& operator-=(const LiePoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    LiePoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
    friend LiePoly operator*(LiePoly a, const Rat& s) { return a *= s; }
    friend LiePoly operator*(const Rat& s, LiePoly a) { return a *= s; }
    LiePoly operator-() const {
        LiePoly r(*this);
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    bool operator==(const LiePoly& o) const { return alpha_ == o.alpha_ && terms_ == o.terms_; }

    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (auto& [w, c] : terms_) {
            if (d && *d != static_cast<int>(w.size())) return std::nullopt;
            d = static_cast<int>(w.size());
        }
        return d;
    }

    TensorPoly to_tensor() const;

    /// Inverse of to_tensor. The Lyndon expansion L_w = w + (lex-greater
    /// anagrams of w) makes the conversion triangular: repeatedly strip the
    /// lex-least surviving word, which must be Lyndon. Throws
    /// NotLieElementError if a non-Lie residue remains.
    static LiePoly from_tensor(const TensorPoly& t);

    std::vector<std::pair<Word, Rat>> sorted_terms() const {
        std::vector<std::pair<Word, Rat>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) {
            if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
            return x.first < y.first;
        });
        return v;
    }

    std::string to_string() const;

private:
    Alphabet alpha_;
    TermMap terms_;  // keys are Lyndon words
};

/// Lie bracket [u,v], computed in the tensor algebra and converted back to
/// Lyndon coordinates.
LiePoly lie_bracket(const LiePoly& u, const LiePoly& v);

/// The symplectic element theta = sum_j [a_j, b_j] as a Lie element.
LiePoly theta_lie(const Alphabet& a);
/// Its tensor form sum_j (a_j b_j - b_j a_j).
TensorPoly theta_tensor(const Alphabet& a);

/// ad_x^n(y) for letters x, y.
LiePoly ad_power(const Alphabet& a, int x, int n, int y);

/// Dimension of the degree-m part of the free Lie algebra on k letters
/// (Witt's formula), usable as an independent oracle.
long long witt_dimension(int k, int m);
/// Number of necklaces of length n over k letters.
long long necklace_count(int k, int n);

}  // namespace jl

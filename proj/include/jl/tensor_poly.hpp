#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jl/alphabet.hpp"

namespace jl {

using TermMap = std::unordered_map<Word, Rat>;

/// Sparse exact-rational linear combination of words, graded by word length.
/// Zero coefficients are never stored. Values are immutable in spirit: all
/// operations return fresh polynomials and mutators are only used while
/// assembling a result.
class TensorPoly {
public:
    explicit TensorPoly(Alphabet a) : alpha_(std::move(a)) {}
    static TensorPoly unit(const Alphabet& a) {
        TensorPoly p(a);
        p.terms_.emplace(Word{}, Rat(1));
        return p;
    }
    static TensorPoly letter(const Alphabet& a, int idx) {
        TensorPoly p(a);
        p.terms_.emplace(Word(1, static_cast<char>(idx)), Rat(1));
        return p;
    }
    static TensorPoly monomial(const Alphabet& a, Word w, Rat c) {
        TensorPoly p(a);
        if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
        return p;
    }

    const Alphabet& alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

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

    TensorPoly& operator+=(const TensorPoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    TensorPoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(TensorPoly a, const Rat& s) { return a *= s; }
    friend TensorPoly operator*(const Rat& s, TensorPoly a) { return a *= s; }
    TensorPoly operator-() const {
        TensorPoly r(*this);
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    /// Concatenation product.
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
        require_same_alphabet(a.alpha_, b.alpha_);
        TensorPoly r(a.alpha_);
        for (auto& [u, cu] : a.terms_)
            for (auto& [v, cv] : b.terms_) r.add_term(u + v, cu * cv);
        return r;
    }

    bool operator==(const TensorPoly& o) const { return alpha_ == o.alpha_ && terms_ == o.terms_; }

    /// Degree of a homogeneous polynomial; nullopt for 0 or inhomogeneous.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (auto& [w, c] : terms_) {
            if (d && *d != static_cast<int>(w.size())) return std::nullopt;
            d = static_cast<int>(w.size());
        }
        return d;
    }

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
    TermMap terms_;
};

/// Commutator ab - ba in the tensor algebra.
inline TensorPoly commutator(const TensorPoly& a, const TensorPoly& b) { return a * b - b * a; }

}  // namespace jl

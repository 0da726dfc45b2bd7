#pragma once

#include <map>
#include <utility>

#include "jl/tensor_poly.hpp"

namespace jl {

/// Lexicographically least rotation of a word; the canonical key for the
/// necklace it represents.
Word canonical_rotation(const Word& w);

/// Linear combination of necklace-canonical cyclic words: the weight-graded
/// model of the loop algebra Q-lambda(S). Every stored key is its own
/// canonical rotation; the empty word (trivial loop class) is a legal key.
class CyclicPoly {
public:
    explicit CyclicPoly(Alphabet a) : alpha_(std::move(a)) {}
    static CyclicPoly unit(const Alphabet& a) {
        CyclicPoly p(a);
        p.terms_.emplace(Word{}, Rat(1));
        return p;
    }
    static CyclicPoly necklace(const Alphabet& a, const Word& w, Rat c = Rat(1)) {
        CyclicPoly p(a);
        p.add_term(w, c);
        return p;
    }

    const Alphabet& alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Word& w) const {
        auto it = terms_.find(canonical_rotation(w));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        Word k = canonical_rotation(w);
        auto [it, fresh] = terms_.try_emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CyclicPoly& operator+=(const CyclicPoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    CyclicPoly& operator-=(const CyclicPoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    CyclicPoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
    friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }
    friend CyclicPoly operator*(CyclicPoly a, const Rat& s) { return a *= s; }
    friend CyclicPoly operator*(const Rat& s, CyclicPoly a) { return a *= s; }
    CyclicPoly operator-() const {
        CyclicPoly r(*this);
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    bool operator==(const CyclicPoly& o) const { return alpha_ == o.alpha_ && terms_ == o.terms_; }

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

/// Projection T(H) -> |T(H)| onto the cyclic quotient.
CyclicPoly cyclic_project(const TensorPoly& t);

/// Sparse element of |T(H)| tensor |T(H)|, the codomain of the cobracket.
class CyclicPair {
public:
    explicit CyclicPair(Alphabet a) : alpha_(std::move(a)) {}

    const Alphabet& alphabet() const { return alpha_; }
    const std::map<std::pair<Word, Word>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& l, const Word& r, const Rat& c) {
        if (c == 0) return;
        auto key = std::make_pair(canonical_rotation(l), canonical_rotation(r));
        auto [it, fresh] = terms_.try_emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add_pair(const CyclicPoly& l, const CyclicPoly& r, const Rat& scale = Rat(1)) {
        for (auto& [wl, cl] : l.terms())
            for (auto& [wr, cr] : r.terms()) add_term(wl, wr, scale * cl * cr);
    }

    CyclicPair& operator+=(const CyclicPair& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    CyclicPair& operator-=(const CyclicPair& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend CyclicPair operator+(CyclicPair a, const CyclicPair& b) { return a += b; }
    friend CyclicPair operator-(CyclicPair a, const CyclicPair& b) { return a -= b; }
    bool operator==(const CyclicPair& o) const { return alpha_ == o.alpha_ && terms_ == o.terms_; }

    /// Drops every term in which either factor is the empty word.
    CyclicPair drop_empty_factors() const {
        CyclicPair r(alpha_);
        for (auto& [k, c] : terms_)
            if (!k.first.empty() && !k.second.empty()) r.terms_.emplace(k, c);
        return r;
    }

    std::string to_string() const;

private:
    Alphabet alpha_;
    std::map<std::pair<Word, Word>, Rat> terms_;
};

}  // namespace jl

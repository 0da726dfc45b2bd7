#include "jl/lie_poly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace jl {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    // w is Lyndon iff it is strictly smaller than all its proper suffixes.
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w.compare(w.substr(i)) >= 0) return false;
    return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    // v = longest proper Lyndon suffix; equivalently the lex-least proper suffix.
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i)
        if (w.compare(i, Word::npos, w, best, Word::npos) < 0) best = i;
    return {w.substr(0, best), w.substr(best)};
}

std::vector<Word> lyndon_words(int nletters, int length) {
    // Duval's algorithm; emits in lexicographic order.
    std::vector<Word> out;
    if (length <= 0 || nletters <= 0) return out;
    Word w(1, 0);
    while (true) {
        if (static_cast<int>(w.size()) == length) out.push_back(w);
        std::size_t m = w.size();
        while (static_cast<int>(w.size()) < length) w += w[w.size() % m];
        while (!w.empty() && w.back() == static_cast<char>(nletters - 1)) w.pop_back();
        if (w.empty()) break;
        ++w.back();
    }
    return out;
}

std::vector<Word> lyndon_words_multidegree(const Alphabet& a, int length, const std::vector<int>& md) {
    std::vector<Word> out;
    for (auto& w : lyndon_words(a.size(), length))
        if (a.multidegree(w) == md) out.push_back(w);
    return out;
}

namespace {

struct ExpansionCache {
    std::shared_mutex mtx;
    // keyed by the full alphabet: the cached polynomials carry their
    // alphabet, so same-size models must not share entries
    std::map<std::tuple<SurfaceModel, int, int, int, Word>, TensorPoly> table;
};

ExpansionCache& expansion_cache() {
    static ExpansionCache c;
    return c;
}

TensorPoly expand_lyndon(const Alphabet& a, const Word& w) {
    if (w.size() == 1) return TensorPoly::letter(a, static_cast<unsigned char>(w[0]));
    auto [u, v] = standard_factorization(w);
    const TensorPoly& pu = lyndon_expansion(a, u);
    const TensorPoly& pv = lyndon_expansion(a, v);
    return pu * pv - pv * pu;
}

}  // namespace

const TensorPoly& lyndon_expansion(const Alphabet& a, const Word& w) {
    auto key = std::make_tuple(a.model(), a.genus(), a.punctures(), a.eliminated_puncture(), w);
    auto& cache = expansion_cache();
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    TensorPoly p = expand_lyndon(a, w);
    std::unique_lock lock(cache.mtx);
    auto [it, fresh] = cache.table.try_emplace(std::move(key), std::move(p));
    return it->second;
}

TensorPoly LiePoly::to_tensor() const {
    TensorPoly r(alpha_);
    for (auto& [w, c] : terms_) {
        const TensorPoly& e = lyndon_expansion(alpha_, w);
        for (auto& [ew, ec] : e.terms()) r.add_term(ew, c * ec);
    }
    return r;
}

LiePoly LiePoly::from_tensor(const TensorPoly& t) {
    LiePoly out(t.alphabet());
    // deg-lex order makes the lead term begin(); subtracting the expansion
    // of its Lyndon word only touches lex-greater anagrams
    struct DegLex {
        bool operator()(const Word& x, const Word& y) const {
            if (x.size() != y.size()) return x.size() < y.size();
            return x < y;
        }
    };
    std::map<Word, Rat, DegLex> work(t.terms().begin(), t.terms().end());
    while (!work.empty()) {
        Word w = work.begin()->first;
        Rat c = work.begin()->second;
        if (!is_lyndon(w))
            throw NotLieElementError("tensor polynomial is not a Lie element (lead word " +
                                     word_to_string(t.alphabet(), w) + ")");
        out.terms_.emplace(w, c);
        const TensorPoly& e = lyndon_expansion(t.alphabet(), w);
        for (auto& [ew, ec] : e.terms()) {
            auto [it, fresh] = work.try_emplace(ew, Rat(0));
            it->second -= c * ec;
            if (it->second == 0) work.erase(it);
        }
    }
    return out;
}

std::string LiePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : sorted_terms()) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*L[" + word_to_string(alpha_, w) + "]";
    }
    return s;
}

std::string TensorPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : sorted_terms()) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*" + word_to_string(alpha_, w);
    }
    return s;
}

LiePoly lie_bracket(const LiePoly& u, const LiePoly& v) {
    require_same_alphabet(u.alphabet(), v.alphabet());
    return LiePoly::from_tensor(commutator(u.to_tensor(), v.to_tensor()));
}

LiePoly theta_lie(const Alphabet& a) {
    if (!a.is_symplectic()) throw ModelMismatchError("theta lives in the symplectic model");
    LiePoly t(a);
    for (int j = 0; j < a.genus(); ++j) {
        Word w;
        w += static_cast<char>(2 * j);
        w += static_cast<char>(2 * j + 1);
        t.add_term(w, 1);  // [a_j, b_j] is the Lyndon basis element of a_j b_j
    }
    return t;
}

TensorPoly theta_tensor(const Alphabet& a) { return theta_lie(a).to_tensor(); }

LiePoly ad_power(const Alphabet& a, int x, int n, int y) {
    LiePoly acc = LiePoly::letter(a, y);
    LiePoly lx = LiePoly::letter(a, x);
    for (int i = 0; i < n; ++i) acc = lie_bracket(lx, acc);
    return acc;
}

namespace {
long long int_pow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
int moebius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}
int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}
}  // namespace

long long witt_dimension(int k, int m) {
    long long s = 0;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) s += moebius(d) * int_pow(k, m / d);
    return s / m;
}

long long necklace_count(int k, int n) {
    if (n == 0) return 1;
    long long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += euler_phi(d) * int_pow(k, n / d);
    return s / n;
}

}  // namespace jl

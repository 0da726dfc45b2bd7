#include "jl/pbw.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "jl/linalg.hpp"

namespace jl {

TensorPoly pbw_symmetrize(const Alphabet& a, const std::vector<LiePoly>& factors) {
    if (factors.empty()) return TensorPoly::unit(a);
    std::vector<TensorPoly> tensors;
    tensors.reserve(factors.size());
    for (auto& f : factors) {
        require_same_alphabet(a, f.alphabet());
        tensors.push_back(f.to_tensor());
    }
    std::vector<std::size_t> idx(factors.size());
    std::iota(idx.begin(), idx.end(), 0);
    TensorPoly sum(a);
    long nperm = 0;
    std::sort(idx.begin(), idx.end());
    do {
        TensorPoly prod = tensors[idx[0]];
        for (std::size_t i = 1; i < idx.size(); ++i) prod = prod * tensors[idx[i]];
        sum += prod;
        ++nperm;
    } while (std::next_permutation(idx.begin(), idx.end()));
    Rat inv(1);
    inv /= nperm;
    return sum * inv;
}

namespace {
void multisets_rec(const std::vector<Word>& pool, std::size_t from, int total, int nfactors,
                   std::vector<Word>& cur, std::vector<std::vector<Word>>& out) {
    if (nfactors == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        int len = static_cast<int>(pool[i].size());
        if (len > total - (nfactors - 1)) continue;  // each remaining factor needs >= 1
        cur.push_back(pool[i]);
        multisets_rec(pool, i, total - len, nfactors - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<Word>> lyndon_multisets(const Alphabet& a, int total, int nfactors) {
    std::vector<Word> pool;
    for (int len = 1; len <= total; ++len)
        for (auto& w : lyndon_words(a.size(), len)) pool.push_back(w);
    std::sort(pool.begin(), pool.end(), [](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    std::vector<std::vector<Word>> out;
    std::vector<Word> cur;
    multisets_rec(pool, 0, total, nfactors, cur, out);
    return out;
}

CyclicPoly sym_basis_vector(const Alphabet& a, const std::vector<Word>& multiset) {
    std::vector<LiePoly> factors;
    factors.reserve(multiset.size());
    for (auto& w : multiset) factors.push_back(LiePoly::basis_element(a, w));
    return cyclic_project(pbw_symmetrize(a, factors));
}

std::vector<CyclicPoly> sym_space_spanning(const Alphabet& a, int w, int n) {
    std::vector<CyclicPoly> out;
    if (n == 0) {
        if (w == 0) out.push_back(CyclicPoly::unit(a));
        return out;
    }
    for (auto& ms : lyndon_multisets(a, w, n)) {
        CyclicPoly v = sym_basis_vector(a, ms);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<CyclicPoly> sym_components(const CyclicPoly& c) {
    const Alphabet& a = c.alphabet();
    if (c.is_zero()) return {};
    auto deg = c.homogeneous_degree();
    if (!deg) throw std::invalid_argument("sym_components requires a homogeneous input");
    int w = *deg;
    std::vector<CyclicPoly> comps(static_cast<std::size_t>(w) + 1, CyclicPoly(a));
    if (w == 0) {
        comps[0] = c;
        return comps;
    }

    // Spanning vectors for every n, tagged with n; solve per multidegree.
    struct Tagged {
        int n;
        CyclicPoly v;
    };
    std::vector<Tagged> span;
    for (int n = 1; n <= w; ++n)
        for (auto& v : sym_space_spanning(a, w, n)) span.push_back({n, v});

    std::map<std::vector<int>, std::vector<std::size_t>> by_md;
    for (std::size_t i = 0; i < span.size(); ++i)
        by_md[a.multidegree(span[i].v.terms().begin()->first)].push_back(i);

    std::map<std::vector<int>, TermMap> c_md;
    for (auto& [word, coef] : c.terms()) c_md[a.multidegree(word)].emplace(word, coef);

    for (auto& [md, cterms] : c_md) {
        auto it = by_md.find(md);
        if (it == by_md.end()) throw std::logic_error("cyclic element outside the PBW span");
        const auto& cols = it->second;
        // rows: cyclic words appearing in the relevant spanning vectors
        std::map<Word, int> row_of;
        for (std::size_t ci : cols)
            for (auto& [word, coef] : span[ci].v.terms())
                row_of.emplace(word, 0);
        int nr = 0;
        for (auto& [word, r] : row_of) r = nr++;
        QMat m(static_cast<std::size_t>(nr));
        for (auto& row : m) row.assign(cols.size(), Rat(0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (auto& [word, coef] : span[cols[j]].v.terms()) m[static_cast<std::size_t>(row_of[word])][j] = coef;
        QVec b(static_cast<std::size_t>(nr), Rat(0));
        for (auto& [word, coef] : cterms) {
            auto rt = row_of.find(word);
            if (rt == row_of.end()) throw std::logic_error("cyclic element outside the PBW span");
            b[static_cast<std::size_t>(rt->second)] = coef;
        }
        auto x = solve(std::move(m), std::move(b), static_cast<int>(cols.size()));
        if (!x) throw std::logic_error("PBW decomposition solve failed");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if ((*x)[j] == 0) continue;
            comps[static_cast<std::size_t>(span[cols[j]].n)] += span[cols[j]].v * (*x)[j];
        }
    }
    return comps;
}

CyclicPoly sym_component_project(const CyclicPoly& c, int n) {
    if (c.is_zero()) return c;
    auto comps = sym_components(c);
    if (n < 0 || n >= static_cast<int>(comps.size())) return CyclicPoly(c.alphabet());
    return comps[static_cast<std::size_t>(n)];
}

}  // namespace jl

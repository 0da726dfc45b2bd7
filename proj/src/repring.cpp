#include "jl/repring.hpp"

#include <algorithm>
#include <numeric>

namespace jl {

Laurent defining_character(int g) {
    Laurent chi(g);
    for (int i = 0; i < g; ++i) {
        std::vector<int> e(static_cast<std::size_t>(g), 0);
        e[static_cast<std::size_t>(i)] = 1;
        chi.add_term(e, 1);
        e[static_cast<std::size_t>(i)] = -1;
        chi.add_term(e, 1);
    }
    return chi;
}

namespace {

/// det(x_i^{b_j} - x_i^{-b_j})_{i,j} expanded over permutations; each factor
/// is a two-term Laurent polynomial so the expansion stays small.
Laurent alternant(const std::vector<int>& b, int g) {
    std::vector<int> perm(static_cast<std::size_t>(g));
    std::iota(perm.begin(), perm.end(), 0);
    Laurent det(g);
    // iterate over all permutations with sign
    std::vector<int> idx = perm;
    auto sign_of = [](std::vector<int> p) {
        int s = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    };
    std::sort(idx.begin(), idx.end());
    do {
        Laurent prod = Laurent::constant(g, sign_of(idx));
        for (int i = 0; i < g; ++i) {
            Laurent f(g);
            std::vector<int> e(static_cast<std::size_t>(g), 0);
            e[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            f.add_term(e, 1);
            e[static_cast<std::size_t>(i)] = -b[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            f.add_term(e, -1);
            prod = prod * f;
        }
        det += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det;
}

/// Working map ordered by descending exponent of a chosen variable (ties by
/// descending lex) so the division lead is always begin().
struct VarOrder {
    std::size_t i;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        if (a[i] != b[i]) return a[i] > b[i];
        return a > b;
    }
};
using WorkMap = std::map<std::vector<int>, Rat, VarOrder>;

void work_add(WorkMap& m, const std::vector<int>& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = m.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

/// Exact division by (x_i - x_i^{-1}): clear to (x_i^2 - 1) and run the
/// synthetic division from the top x_i-exponent down.
Laurent divide_simple_root(const Laurent& p, int i) {
    WorkMap work{VarOrder{static_cast<std::size_t>(i)}};
    for (auto& [e, c] : p.terms()) {
        auto e2 = e;
        e2[static_cast<std::size_t>(i)] += 1;
        work.emplace(std::move(e2), c);
    }
    Laurent q(p.nvars());
    long guard = 0;
    while (!work.empty()) {
        auto e = work.begin()->first;
        Rat c = work.begin()->second;
        work.erase(work.begin());
        e[static_cast<std::size_t>(i)] -= 2;
        q.add_term(e, c);
        work_add(work, e, c);
        if (++guard > (1L << 26)) throw std::logic_error("alternant division diverged");
    }
    return q;
}

/// Exact division by (x_i + x_i^{-1} - x_j - x_j^{-1}); after clearing by
/// x_i the divisor is x_i^2 + 1 - x_i x_j - x_i x_j^{-1}, monic in x_i.
Laurent divide_mixed_root(const Laurent& p, int i, int j) {
    WorkMap work{VarOrder{static_cast<std::size_t>(i)}};
    for (auto& [e, c] : p.terms()) {
        auto e2 = e;
        e2[static_cast<std::size_t>(i)] += 1;
        work.emplace(std::move(e2), c);
    }
    Laurent q(p.nvars());
    long guard = 0;
    while (!work.empty()) {
        auto e = work.begin()->first;
        Rat c = work.begin()->second;
        work.erase(work.begin());
        e[static_cast<std::size_t>(i)] -= 2;
        q.add_term(e, c);
        // subtract c * x^e * (1 - x_i x_j - x_i x_j^{-1}) (the x_i^2 part
        // was the extracted lead)
        work_add(work, e, -c);
        auto t = e;
        t[static_cast<std::size_t>(i)] += 1;
        t[static_cast<std::size_t>(j)] += 1;
        work_add(work, t, c);
        t[static_cast<std::size_t>(j)] -= 2;
        work_add(work, t, c);
        if (++guard > (1L << 26)) throw std::logic_error("alternant division diverged");
    }
    return q;
}

}  // namespace

Laurent irr_character(const Partition& lambda, int g) {
    if (static_cast<int>(lambda.size()) > g)
        throw std::invalid_argument("partition has more than g parts");
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("not a partition");
    std::vector<int> b(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
        int lam = j < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(j)] : 0;
        b[static_cast<std::size_t>(j)] = lam + g - j;  // lambda_j + rho_j, rho = (g, g-1, ..., 1)
    }
    Laurent num = alternant(b, g);
    for (int i = 0; i < g; ++i) num = divide_simple_root(std::move(num), i);
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) num = divide_mixed_root(std::move(num), i, j);
    return num;
}

Rat weyl_dimension(const Partition& lambda, int g) {
    auto lam = [&](int j) -> Rat {
        return j <= static_cast<int>(lambda.size()) ? Rat(lambda[static_cast<std::size_t>(j - 1)]) : Rat(0);
    };
    auto ip = [&](int j) -> Rat { return lam(j) + g - j + 1; };  // <lambda+rho, e_j>
    Rat dim(1);
    for (int i = 1; i <= g; ++i) {
        dim *= ip(i) / Rat(g - i + 1);  // root 2e_i: ratio of <.,e_i>
        for (int j = i + 1; j <= g; ++j) {
            dim *= (ip(i) - ip(j)) / Rat(j - i);
            dim *= (ip(i) + ip(j)) / Rat(2 * g - i - j + 2);
        }
    }
    return dim;
}

RepElement decompose(const Laurent& chi, int g) {
    if (!chi.is_weyl_invariant()) throw std::invalid_argument("character is not Weyl invariant");
    RepElement out;
    Laurent rem = chi;
    while (!rem.is_zero()) {
        // lex-greatest dominant exponent
        const std::vector<int>* best = nullptr;
        const Rat* bc = nullptr;
        for (auto& [e, c] : rem.terms()) {
            bool dominant = e.back() >= 0;
            for (std::size_t i = 0; i + 1 < e.size() && dominant; ++i) dominant = e[i] >= e[i + 1];
            if (!dominant) continue;
            if (!best || e > *best) {
                best = &e;
                bc = &c;
            }
        }
        if (!best) throw std::logic_error("invariant character with no dominant leading term");
        if (bc->get_den() != 1) throw std::invalid_argument("non-integral multiplicity in decomposition");
        long m = static_cast<long>(bc->get_num().get_si());
        Partition lambda;
        for (int x : *best)
            if (x != 0) lambda.push_back(x);
        rem -= irr_character(lambda, g) * Rat(m);
        out[lambda] += m;
        if (out[lambda] == 0) out.erase(lambda);
    }
    return out;
}

Laurent rep_character(const RepElement& rep, int g) {
    Laurent chi(g);
    for (auto& [lambda, m] : rep) chi += irr_character(lambda, g) * Rat(m);
    return chi;
}

Laurent adams_op(const Laurent& chi, int d) { return chi.adams(d); }

Laurent lambda_op(const Laurent& chi, int k) {
    // k e_k = sum_{i=1..k} (-1)^{i-1} psi^i(chi) e_{k-i}
    std::vector<Laurent> e(static_cast<std::size_t>(k) + 1, Laurent(chi.nvars()));
    e[0] = Laurent::constant(chi.nvars(), 1);
    for (int m = 1; m <= k; ++m) {
        Laurent acc(chi.nvars());
        for (int i = 1; i <= m; ++i) {
            Laurent t = chi.adams(i) * e[static_cast<std::size_t>(m - i)];
            if (i % 2 == 0) t = -t;
            acc += t;
        }
        Rat inv(1);
        inv /= m;
        e[static_cast<std::size_t>(m)] = acc * inv;
    }
    return e[static_cast<std::size_t>(k)];
}

Laurent sym_op(const Laurent& chi, int k) {
    // k h_k = sum_{i=1..k} psi^i(chi) h_{k-i}
    std::vector<Laurent> h(static_cast<std::size_t>(k) + 1, Laurent(chi.nvars()));
    h[0] = Laurent::constant(chi.nvars(), 1);
    for (int m = 1; m <= k; ++m) {
        Laurent acc(chi.nvars());
        for (int i = 1; i <= m; ++i) acc += chi.adams(i) * h[static_cast<std::size_t>(m - i)];
        Rat inv(1);
        inv /= m;
        h[static_cast<std::size_t>(m)] = acc * inv;
    }
    return h[static_cast<std::size_t>(k)];
}

Laurent character_of_multidegrees(const std::map<std::vector<int>, int>& ranks, int g) {
    Laurent chi(g);
    for (auto& [md, r] : ranks) {
        if (static_cast<int>(md.size()) != g) throw std::invalid_argument("multidegree arity mismatch");
        chi.add_term(md, r);
    }
    if (!chi.is_weyl_invariant())
        throw std::invalid_argument("subspace character is not Weyl invariant");
    return chi;
}

int moebius_mu(int n) {
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

std::vector<Rat> mobius_invert_dimension(const std::vector<Rat>& phi, int N) {
    if (phi.empty() || phi[0] != 1) throw std::invalid_argument("Phi_0 must be the trivial class 1");
    auto at = [&](int n) { return n < static_cast<int>(phi.size()) ? phi[static_cast<std::size_t>(n)] : Rat(0); };
    // Psi = -x Phi'/Phi: Psi_n = -n phi_n - sum_{i=1..n-1} phi_i Psi_{n-i}; Psi_0 = 0
    std::vector<Rat> psi(static_cast<std::size_t>(N) + 1, Rat(0));
    for (int n = 1; n <= N; ++n) {
        Rat acc = Rat(-n) * at(n);
        for (int i = 1; i < n; ++i) acc -= at(i) * psi[static_cast<std::size_t>(n - i)];
        psi[static_cast<std::size_t>(n)] = acc;
    }
    std::vector<Rat> h(static_cast<std::size_t>(N) + 1, Rat(0));
    for (int n = 1; n <= N; ++n) {
        Rat acc(0);
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            int mu = moebius_mu(d);
            if (mu == 0) continue;
            acc += Rat(mu) * psi[static_cast<std::size_t>(n / d)];  // psi^d acts trivially on dimensions
        }
        acc /= n;
        h[static_cast<std::size_t>(n)] = acc;
    }
    return h;
}

std::vector<Laurent> mobius_invert_character(const std::vector<Laurent>& phi, int N, int g) {
    if (phi.empty()) throw std::invalid_argument("empty series");
    Laurent one = Laurent::constant(g, 1);
    if (!(phi[0] == one)) throw std::invalid_argument("Phi_0 must be the class of the trivial module");
    auto at = [&](int n) { return n < static_cast<int>(phi.size()) ? phi[static_cast<std::size_t>(n)] : Laurent(g); };
    std::vector<Laurent> psi(static_cast<std::size_t>(N) + 1, Laurent(g));
    for (int n = 1; n <= N; ++n) {
        Laurent acc = at(n) * Rat(-n);
        for (int i = 1; i < n; ++i) acc -= at(i) * psi[static_cast<std::size_t>(n - i)];
        psi[static_cast<std::size_t>(n)] = std::move(acc);
    }
    std::vector<Laurent> h(static_cast<std::size_t>(N) + 1, Laurent(g));
    for (int n = 1; n <= N; ++n) {
        Laurent acc(g);
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            int mu = moebius_mu(d);
            if (mu == 0) continue;
            acc += psi[static_cast<std::size_t>(n / d)].adams(d) * Rat(mu);
        }
        Rat inv(1);
        inv /= n;
        h[static_cast<std::size_t>(n)] = acc * inv;
    }
    return h;
}

std::string partition_to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

Partition partition_from_string(const std::string& s) {
    Partition p;
    std::size_t i = 0;
    if (i >= s.size() || s[i] != '[') throw ParseError("expected '['", i);
    ++i;
    while (i < s.size() && s[i] != ']') {
        int v = 0;
        bool any = false;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            ++i;
            any = true;
        }
        if (!any) throw ParseError("expected digit in partition", i);
        p.push_back(v);
        if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size() || s[i] != ']') throw ParseError("expected ']'", i);
    return p;
}

}  // namespace jl

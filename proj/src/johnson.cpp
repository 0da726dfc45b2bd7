#include "jl/johnson.hpp"

#include <algorithm>
#include <numeric>

#include "jl/goldman.hpp"

namespace jl {

ThetaDerivation tau1(const Alphabet& a, int u1, int u2, int u3) {
    if (!a.is_symplectic()) throw ModelMismatchError("tau1 needs the symplectic model");
    std::vector<LiePoly> vals;
    vals.reserve(static_cast<std::size_t>(a.size()));
    LiePoly b23 = lie_bracket(LiePoly::letter(a, u2), LiePoly::letter(a, u3));
    LiePoly b31 = lie_bracket(LiePoly::letter(a, u3), LiePoly::letter(a, u1));
    LiePoly b12 = lie_bracket(LiePoly::letter(a, u1), LiePoly::letter(a, u2));
    for (int v = 0; v < a.size(); ++v) {
        LiePoly val(a);
        val += b23 * a.pairing(u1, v);
        val += b31 * a.pairing(u2, v);
        val += b12 * a.pairing(u3, v);
        vals.push_back(val * Rat(-1));
    }
    return ThetaDerivation::lie_valued(a, 1, std::move(vals));
}

Subspace johnson_degree1(const Alphabet& a) {
    Subspace j1(a, 1, DerKind::Lie);
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            for (int k = j + 1; k < a.size(); ++k) j1.add(tau1(a, i, j, k));
    return j1;
}

Subspace johnson_image_step(const Subspace& prev) {
    const Alphabet& a = prev.alphabet();
    Subspace j1 = johnson_degree1(a);
    Subspace next(a, prev.degree() + 1, DerKind::Lie);
    for (auto& t : j1.basis())
        for (auto& d : prev.basis()) next.add(der_bracket(t, d));
    return next;
}

Subspace johnson_image(const Alphabet& a, int m) {
    if (m < 1) throw std::invalid_argument("johnson_image needs m >= 1");
    Subspace cur = johnson_degree1(a);
    for (int k = 2; k <= m; ++k) cur = johnson_image_step(cur);
    return cur;
}

ThetaDerivation epsilon_derivation(const Alphabet& a, int n) {
    if (!a.is_symplectic() || a.genus() != 1)
        throw ModelMismatchError("epsilon derivations live in genus 1");
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    const int la = 0, lb = 1;
    LiePoly db = ad_power(a, lb, 2 * n, la);  // epsilon(b) = ad_b^{2n}(a)
    if (n == 0) {
        std::vector<LiePoly> vals{LiePoly(a), db};
        return ThetaDerivation::lie_valued(a, 0, std::move(vals));
    }
    // theta-condition: [D(a), b] = -[a, D(b)]; solve for D(a) in the Lyndon
    // coordinates of its bidegree (2 a's, 2n-1 b's).
    std::vector<int> md{3 - 2 * n};  // multidegree of D(a): deg_a - deg_b = 3 - 2n
    auto cand = lyndon_words_multidegree(a, 2 * n + 1, md);
    TensorPoly rhs_t = commutator(TensorPoly::letter(a, la), db.to_tensor()) * Rat(-1);
    std::map<Word, int> row_of;
    std::vector<std::map<Word, Rat>> cols(cand.size());
    TensorPoly lb_t = TensorPoly::letter(a, lb);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        TensorPoly colp = commutator(lyndon_expansion(a, cand[i]), lb_t);
        for (auto& [w, c] : colp.terms()) {
            cols[i].emplace(w, c);
            row_of.emplace(w, 0);
        }
    }
    for (auto& [w, c] : rhs_t.terms()) row_of.emplace(w, 0);
    int nr = 0;
    for (auto& [w, r] : row_of) r = nr++;
    QMat m(static_cast<std::size_t>(nr));
    for (auto& r : m) r.assign(cand.size(), Rat(0));
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (auto& [w, c] : cols[i]) m[static_cast<std::size_t>(row_of[w])][i] = c;
    QVec b(static_cast<std::size_t>(nr), Rat(0));
    for (auto& [w, c] : rhs_t.terms()) b[static_cast<std::size_t>(row_of[w])] = c;

    QMat mnull = m;
    if (!nullspace(std::move(mnull), static_cast<int>(cand.size())).empty())
        throw std::logic_error("epsilon solve is not unique");
    auto x = solve(std::move(m), std::move(b), static_cast<int>(cand.size()));
    if (!x) throw std::logic_error("epsilon solve has no solution");
    LiePoly da(a);
    for (std::size_t i = 0; i < cand.size(); ++i) da.add_term(cand[i], (*x)[i]);
    std::vector<LiePoly> vals{da, db};
    return ThetaDerivation::lie_valued(a, 2 * n, std::move(vals));
}

PollackResult pollack_check(int which) {
    Alphabet a = Alphabet::symplectic(1);
    auto eps = [&](int two_n) { return epsilon_derivation(a, two_n / 2); };
    ThetaDerivation res = ThetaDerivation::zero(a, which == 1 ? 14 : 18, DerKind::Lie);
    if (which == 1) {
        res = der_bracket(eps(4), eps(10)) - der_bracket(eps(6), eps(8)) * Rat(3);
    } else if (which == 2) {
        res = der_bracket(eps(4), eps(14)) * Rat(2) - der_bracket(eps(6), eps(12)) * Rat(7) +
              der_bracket(eps(8), eps(10)) * Rat(11);
    } else {
        throw std::invalid_argument("which must be 1 or 2");
    }
    return PollackResult{res.is_zero(), std::move(res)};
}

ThetaDerivation mu_odd(const Alphabet& a, int n, const Word& monomial) {
    if (!a.is_symplectic() || a.genus() < 2)
        throw ModelMismatchError("mu_odd requires genus >= 2");
    if (n < 1 || static_cast<int>(monomial.size()) != 2 * n + 1)
        throw std::invalid_argument("monomial must have 2n+1 letters, n >= 1");
    int deg = 2 * n + 1;
    ThetaDerivation total = ThetaDerivation::zero(a, deg, DerKind::Tensor);
    // sum over distinct arrangements, then restore the full permutation sum
    // by the stabilizer factor; without it the map fails to be equivariant
    Word arr = monomial;
    std::sort(arr.begin(), arr.end());
    Rat stab(1);
    for (std::size_t i = 0, j = 0; i < arr.size(); i = j) {
        int run = 1;
        for (j = i + 1; j < arr.size() && arr[j] == arr[i]; ++j) ++run;
        for (int f = 2; f <= run; ++f) stab *= f;
    }
    for (int j = 0; j < a.genus(); ++j) {
        TensorPoly aj = TensorPoly::letter(a, 2 * j);
        Word perm = arr;
        do {
            // caterpillar cut at the a_j leaf: [x_{s(0)},[...,[x_{s(2n)}, b_j]...]]
            TensorPoly tree = TensorPoly::letter(a, 2 * j + 1);
            for (auto it = perm.rbegin(); it != perm.rend(); ++it)
                tree = commutator(TensorPoly::letter(a, static_cast<unsigned char>(*it)), tree);
            total += kk_derivation(cyclic_project(aj * tree), deg + 2);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    total *= stab;
    // values of kappa on |Sym^2 L| elements are Lie; convert
    std::vector<LiePoly> vals;
    for (int l = 0; l < a.size(); ++l) vals.push_back(LiePoly::from_tensor(total.tensor_value(l)));
    return ThetaDerivation::lie_valued(a, deg, std::move(vals));
}

std::vector<Word> sym_power_monomials(const Alphabet& a, int k) {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int l = from; l < a.size(); ++l) {
            cur.push_back(static_cast<char>(l));
            self(self, l, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

MuSquared mu_squared(const Alphabet& a, int n) {
    if (!a.is_symplectic() || a.genus() < 2)
        throw ModelMismatchError("mu_squared requires genus >= 2");
    int k = 2 * n + 1;
    auto monos = sym_power_monomials(a, k);
    std::map<Word, int> mono_index;
    for (std::size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = static_cast<int>(i);

    // sp(H) action on Sym^k H from the degree-0 theta-derivations
    Subspace sp = theta_der_basis(a, 0, DerKind::Lie);
    auto act_on_monomial = [&](const ThetaDerivation& d, const Word& m) {
        std::map<int, Rat> image;  // monomial index -> coefficient
        for (std::size_t pos = 0; pos < m.size(); ++pos) {
            for (auto& [vw, vc] : d.tensor_value(static_cast<unsigned char>(m[pos])).terms()) {
                Word w = m;
                w[pos] = vw[0];
                std::sort(w.begin(), w.end());
                image[mono_index.at(w)] += vc;
            }
        }
        return image;
    };

    // wedge basis (i<j); kernel of all generators acting on Lambda^2 Sym^k H
    std::vector<std::pair<int, int>> wedge;
    for (int i = 0; i < static_cast<int>(monos.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(monos.size()); ++j) wedge.emplace_back(i, j);
    std::map<std::pair<int, int>, int> wedge_index;
    for (std::size_t t = 0; t < wedge.size(); ++t) wedge_index[wedge[t]] = static_cast<int>(t);

    QMat sys;
    for (auto& d : sp.basis()) {
        std::vector<std::map<int, Rat>> acted(monos.size());
        for (std::size_t i = 0; i < monos.size(); ++i) acted[i] = act_on_monomial(d, monos[i]);
        QMat block(wedge.size());
        for (auto& r : block) r.assign(wedge.size(), Rat(0));
        for (std::size_t t = 0; t < wedge.size(); ++t) {
            auto [i, j] = wedge[t];
            for (auto& [m2, c] : acted[static_cast<std::size_t>(i)]) {
                if (m2 == j) continue;
                auto key = m2 < j ? std::make_pair(m2, j) : std::make_pair(j, m2);
                Rat sign = m2 < j ? c : -c;
                block[static_cast<std::size_t>(wedge_index.at(key))][t] += sign;
            }
            for (auto& [m2, c] : acted[static_cast<std::size_t>(j)]) {
                if (m2 == i) continue;
                auto key = i < m2 ? std::make_pair(i, m2) : std::make_pair(m2, i);
                Rat sign = i < m2 ? c : -c;
                block[static_cast<std::size_t>(wedge_index.at(key))][t] += sign;
            }
        }
        for (auto& r : block) sys.push_back(std::move(r));
    }
    QMat inv = nullspace(std::move(sys), static_cast<int>(wedge.size()));
    if (inv.size() != 1)
        throw std::logic_error("invariant line in Lambda^2 Sym^{2n+1}H is not 1-dimensional");

    ThetaDerivation out = ThetaDerivation::zero(a, 4 * n + 2, DerKind::Lie);
    std::vector<std::optional<ThetaDerivation>> mu_cache(monos.size());
    auto mu_of = [&](int i) -> const ThetaDerivation& {
        if (!mu_cache[static_cast<std::size_t>(i)])
            mu_cache[static_cast<std::size_t>(i)] = mu_odd(a, n, monos[static_cast<std::size_t>(i)]);
        return *mu_cache[static_cast<std::size_t>(i)];
    };
    for (std::size_t t = 0; t < wedge.size(); ++t) {
        const Rat& c = inv[0][t];
        if (c == 0) continue;
        auto [i, j] = wedge[t];
        out += der_bracket(mu_of(i), mu_of(j)) * c;
    }
    return MuSquared{std::move(out), std::move(inv[0]), inv.size()};
}

CyclicPoly es_trace(const ThetaDerivation& d) {
    const Alphabet& a = d.alphabet();
    if (!a.is_symplectic()) throw ModelMismatchError("es_trace needs the symplectic model");
    // contract the H factor into the leading slot of the value and read the
    // remainder as a cyclic word; summing the contraction over every slot
    // instead vanishes identically on theta-annihilating derivations
    CyclicPoly out(a);
    auto contract = [&](int u, const TensorPoly& p, const Rat& sign) {
        for (auto& [w, c] : p.terms()) {
            if (w.empty()) continue;
            Rat pr = a.pairing(u, static_cast<unsigned char>(w[0]));
            if (pr == 0) continue;
            out.add_term(w.substr(1), sign * c * pr);
        }
    };
    for (int i = 0; i < a.genus(); ++i) {
        contract(2 * i, d.tensor_value(2 * i + 1), Rat(1));    // a_i (x) D(b_i)
        contract(2 * i + 1, d.tensor_value(2 * i), Rat(-1));   // - b_i (x) D(a_i)
    }
    return out;
}

}  // namespace jl

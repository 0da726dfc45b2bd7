#include "jl/genus0.hpp"

#include <set>

#include "jl/linalg.hpp"

namespace jl {

namespace {

/// Expansion of the puncture class e_j over the free letters of a.
TensorPoly puncture_class(const Alphabet& a, int j) {
    TensorPoly p(a);
    int idx = a.index_of_puncture(j);
    if (idx >= 0) {
        p.add_term(Word(1, static_cast<char>(idx)), 1);
        return p;
    }
    for (int l = 0; l < a.size(); ++l) p.add_term(Word(1, static_cast<char>(l)), -1);
    return p;
}

}  // namespace

SpecialDer0::SpecialDer0(int punctures, int base, std::map<int, TensorPoly> components)
    : SpecialDer0(truncated(punctures, base, std::move(components))) {
    if (!special_relation_defect().is_zero())
        throw std::invalid_argument("components violate the special relation sum [u_j, e_j] = 0");
}

SpecialDer0 SpecialDer0::truncated(int punctures, int base, std::map<int, TensorPoly> components) {
    SpecialDer0 out(Alphabet::boundary(punctures, base));
    out.comps_.assign(static_cast<std::size_t>(out.alpha_.size()), TensorPoly(out.alpha_));
    std::optional<int> deg;
    for (auto& [j, u] : components) {
        if (j == base || j < 0 || j >= punctures) throw std::invalid_argument("bad component puncture");
        require_same_alphabet(out.alpha_, u.alphabet());
        auto d = u.homogeneous_degree();
        if (d) {
            if (deg && *deg != *d) throw std::invalid_argument("components must share one degree");
            deg = d;
        }
        out.comps_[static_cast<std::size_t>(out.alpha_.index_of_puncture(j))] = u;
    }
    out.degree_ = deg.value_or(0);
    return out;
}

const TensorPoly& SpecialDer0::component(int puncture) const {
    int idx = alpha_.index_of_puncture(puncture);
    if (idx < 0) throw std::invalid_argument("base puncture has no component");
    return comps_[static_cast<std::size_t>(idx)];
}

TensorPoly SpecialDer0::special_relation_defect() const {
    TensorPoly defect(alpha_);
    for (int l = 0; l < alpha_.size(); ++l)
        defect += commutator(comps_[static_cast<std::size_t>(l)], TensorPoly::letter(alpha_, l));
    return defect;
}

ThetaDerivation SpecialDer0::as_derivation() const {
    std::vector<TensorPoly> vals;
    vals.reserve(comps_.size());
    for (int l = 0; l < alpha_.size(); ++l)
        vals.push_back(commutator(comps_[static_cast<std::size_t>(l)], TensorPoly::letter(alpha_, l)));
    return ThetaDerivation::tensor_valued(alpha_, degree_, std::move(vals));
}

SpecialDer0& SpecialDer0::operator+=(const SpecialDer0& o) {
    if (!(alpha_ == o.alpha_)) throw ModelMismatchError("special derivation model mismatch");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}
SpecialDer0& SpecialDer0::operator-=(const SpecialDer0& o) {
    if (!(alpha_ == o.alpha_)) throw ModelMismatchError("special derivation model mismatch");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}
SpecialDer0& SpecialDer0::operator*=(const Rat& s) {
    for (auto& c : comps_) c *= s;
    return *this;
}

SpecialDer0 ejk_generator(int punctures, int j, int k, int base) {
    if (j == k) throw std::invalid_argument("e_{j,j} = 0 is not a generator");
    if (j == base || k == base)
        throw std::invalid_argument("ejk_generator components require j, k distinct from the base");
    Alphabet a = Alphabet::boundary(punctures, base);
    std::map<int, TensorPoly> comps;
    comps.emplace(j, -puncture_class(a, k));
    comps.emplace(k, -puncture_class(a, j));
    return SpecialDer0(punctures, base, std::move(comps));
}

ThetaDerivation ejk_derivation(int punctures, int j, int k) {
    Alphabet a = Alphabet::boundary(punctures, 0);
    std::vector<TensorPoly> vals(static_cast<std::size_t>(a.size()), TensorPoly(a));
    if (j != k) {
        TensorPoly br = commutator(puncture_class(a, j), puncture_class(a, k));
        for (int l = 0; l < a.size(); ++l) {
            int t = a.puncture_of_index(l);
            if (t == j) vals[static_cast<std::size_t>(l)] += br;
            if (t == k) vals[static_cast<std::size_t>(l)] -= br;
        }
    }
    return ThetaDerivation::tensor_valued(a, 1, std::move(vals));
}

ThetaDerivation inner_derivation(const TensorPoly& p) {
    const Alphabet& a = p.alphabet();
    auto deg = p.homogeneous_degree();
    std::vector<TensorPoly> vals;
    for (int l = 0; l < a.size(); ++l) vals.push_back(commutator(p, TensorPoly::letter(a, l)));
    return ThetaDerivation::tensor_valued(a, deg.value_or(1), std::move(vals));
}

SpecialDer0 sder_bracket(const SpecialDer0& u, const SpecialDer0& v) {
    if (!(u.alphabet() == v.alphabet())) throw ModelMismatchError("special derivation model mismatch");
    ThetaDerivation du = u.as_derivation();
    ThetaDerivation dv = v.as_derivation();
    std::map<int, TensorPoly> comps;
    for (int j = 0; j < u.punctures(); ++j) {
        if (j == u.base()) continue;
        comps.emplace(j, du.apply(v.component(j)) - dv.apply(u.component(j)) -
                          commutator(u.component(j), v.component(j)));
    }
    return SpecialDer0(u.punctures(), u.base(), std::move(comps));
}

CyclicPoly divergence(const SpecialDer0& d) {
    const Alphabet& a = d.alphabet();
    CyclicPoly out(a);
    for (int l = 0; l < a.size(); ++l) {
        int j = a.puncture_of_index(l);
        // |e_j u_j^{(j)}| collects exactly the e_j-leading words of u_j
        for (auto& [w, c] : d.component(j).terms())
            if (!w.empty() && static_cast<unsigned char>(w[0]) == static_cast<unsigned char>(l))
                out.add_term(w, c);
    }
    return out;
}

CyclicPoly edge_map(const SpecialDer0& d, const RotationData& rot) {
    CyclicPoly out = divergence(d);
    const Alphabet& a = d.alphabet();
    for (int j = 0; j < d.punctures(); ++j) {
        if (j == d.base()) continue;
        auto it = rot.find(j);
        if (it == rot.end() || it->second == 0) continue;
        out += cyclic_project(d.component(j)) * Rat(it->second);
    }
    return out;
}

bool relations_check(int n, std::string* report) {
    if (n < 2) throw std::invalid_argument("relations_check needs n >= 2");
    int punctures = n + 1;
    Alphabet a = Alphabet::boundary(punctures, 0);
    auto note = [&](const std::string& s) {
        if (report) *report += s + "\n";
    };
    bool ok = true;

    // family 1: sum_j e_{j,k} acts as the inner derivation [e_k, .],
    // i.e. the relation holds modulo the central boundary rotation of k
    for (int k = 0; k < punctures; ++k) {
        ThetaDerivation sum = ThetaDerivation::zero(a, 1, DerKind::Tensor);
        for (int j = 0; j < punctures; ++j)
            if (j != k) sum += ejk_derivation(punctures, j, k);
        sum += inner_derivation(puncture_class(a, k));
        bool f = sum.is_zero();
        ok = ok && f;
        note("family1 k=" + std::to_string(k) + (f ? " ok" : " FAILED"));
    }
    // family 2: [e_{j,k}, e_{s,t}] = 0 for distinct indices
    for (int j = 0; j < punctures; ++j)
        for (int k = j + 1; k < punctures; ++k)
            for (int s = j; s < punctures; ++s)
                for (int t = s + 1; t < punctures; ++t) {
                    if (s == j || s == k || t == j || t == k) continue;
                    auto br = der_bracket(ejk_derivation(punctures, j, k), ejk_derivation(punctures, s, t));
                    bool f = br.is_zero();
                    ok = ok && f;
                    note("family2 [" + std::to_string(j) + std::to_string(k) + "," + std::to_string(s) +
                         std::to_string(t) + "]" + (f ? " ok" : " FAILED"));
                }
    // family 3: [e_{j,l} + e_{l,k}, e_{j,k}] = 0 for distinct j,k,l
    for (int j = 0; j < punctures; ++j)
        for (int k = 0; k < punctures; ++k)
            for (int l = 0; l < punctures; ++l) {
                if (j == k || j == l || k == l || j > k) continue;
                ThetaDerivation lhs = ejk_derivation(punctures, j, l) + ejk_derivation(punctures, l, k);
                auto br = der_bracket(lhs, ejk_derivation(punctures, j, k));
                bool f = br.is_zero();
                ok = ok && f;
                note("family3 j=" + std::to_string(j) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                     (f ? " ok" : " FAILED"));
            }
    return ok;
}

std::vector<SpecialDer0> sder_basis(int punctures, int degree) {
    if (degree < 1) throw std::invalid_argument("degree >= 1 required");
    Alphabet a = Alphabet::boundary(punctures, 0);
    struct Unknown {
        int puncture;
        Word word;
    };
    // block by boundary multidegree of [u_j, e_j] (letter counts)
    std::map<std::vector<int>, std::vector<Unknown>> blocks;
    for (int j = 1; j < punctures; ++j) {
        int lj = a.index_of_puncture(j);
        for (auto& w : lyndon_words(a.size(), degree)) {
            if (degree == 1 && static_cast<unsigned char>(w[0]) == static_cast<unsigned char>(lj))
                continue;  // orthogonality normalization
            auto md = a.multidegree(w);
            md[static_cast<std::size_t>(lj)] += 1;
            blocks[md].push_back({j, w});
        }
    }
    std::vector<SpecialDer0> out;
    for (auto& [md, unknowns] : blocks) {
        std::vector<std::map<Word, Rat>> cols(unknowns.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            int lj = a.index_of_puncture(unknowns[u].puncture);
            TensorPoly c = commutator(lyndon_expansion(a, unknowns[u].word), TensorPoly::letter(a, lj));
            for (auto& [w, coef] : c.terms()) cols[u].emplace(w, coef);
        }
        for (auto& nv : sparse_column_nullspace(std::move(cols))) {
            std::map<int, TensorPoly> comps;
            for (auto& [ci, coef] : nv) {
                const auto& [j, w] = unknowns[static_cast<std::size_t>(ci)];
                auto [it, fresh] = comps.try_emplace(j, TensorPoly(a));
                const TensorPoly& e = lyndon_expansion(a, w);
                for (auto& [ew, ec] : e.terms()) it->second.add_term(ew, coef * ec);
            }
            out.push_back(SpecialDer0(punctures, 0, std::move(comps)));
        }
    }
    return out;
}

std::vector<CyclicPoly> depth_space(const Alphabet& a3, int w, int k) {
    if (a3.is_symplectic() || a3.punctures() != 3)
        throw UnsupportedError("depth filtration needs the 3-puncture boundary model");
    // D^k is spanned by the coordinate words whose degree in each retained
    // letter is >= k; the eliminated letter's constraint is rewritable away
    // (its minimal exhibited degree is zero)
    std::vector<CyclicPoly> out;
    if (w < 2 * k) return out;
    std::vector<int> word(static_cast<std::size_t>(w), 0);
    std::set<Word> seen;
    while (true) {
        int c0 = 0;
        for (int s : word) c0 += (s == 0);
        if (c0 >= k && w - c0 >= k) {
            Word ww;
            for (int s : word) ww += static_cast<char>(s);
            Word can = canonical_rotation(ww);
            if (seen.insert(can).second) out.push_back(CyclicPoly::necklace(a3, can));
        }
        int i = w - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == 1) word[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    return out;
}

CyclicPoly depth_reduce(const CyclicPoly& c, int k) {
    const Alphabet& a = c.alphabet();
    if (a.is_symplectic() || a.punctures() != 3)
        throw UnsupportedError("depth_reduce needs the 3-puncture boundary model");
    CyclicPoly out(a);
    for (auto& [w, coef] : c.terms()) {
        int c0 = 0;
        for (unsigned char ch : w) c0 += (ch == 0);
        int c1 = static_cast<int>(w.size()) - c0;
        if (c0 >= k && c1 >= k) continue;  // lies in D^k
        out.add_term(w, coef);
    }
    return out;
}

bool in_depth(const CyclicPoly& c, int k) { return depth_reduce(c, k).is_zero(); }

SpecialDer0 sigma_polylog(int m) {
    if (m < 1) throw std::invalid_argument("m >= 1 required");
    // punctures {0, 1, inf=2}, base 1; free letters e_0 and e_inf
    Alphabet a = Alphabet::boundary(3, 1);
    TensorPoly e0 = puncture_class(a, 0);
    TensorPoly e1 = puncture_class(a, 1);  // = -(e_0 + e_inf)
    TensorPoly einf = puncture_class(a, 2);
    auto ad_pow = [&](const TensorPoly& x, int n, TensorPoly acc) {
        for (int i = 0; i < n; ++i) acc = commutator(x, acc);
        return acc;
    };
    std::map<int, TensorPoly> comps;
    comps.emplace(0, ad_pow(e0, 2 * m, e1));
    comps.emplace(2, ad_pow(einf, 2 * m, e1));
    // special only modulo depth 2; skip the exactness check
    return SpecialDer0::truncated(3, 1, std::move(comps));
}

AppendixACheck appendix_a_check(int m) {
    SpecialDer0 sig = sigma_polylog(m);
    const Alphabet& a = sig.alphabet();
    TensorPoly e0 = puncture_class(a, 0);
    TensorPoly e1 = puncture_class(a, 1);
    TensorPoly einf = puncture_class(a, 2);

    // intermediate: e_0 u_0^{(0)} = -sum_{k=1}^{2m} (-1)^k C(2m,k) e_0^k e_inf e_0^{2m-k}
    TensorPoly lead0(a);
    for (auto& [w, c] : sig.component(0).terms())
        if (!w.empty() && a.puncture_of_index(static_cast<unsigned char>(w[0])) == 0) lead0.add_term(w, c);
    TensorPoly expect(a);
    {
        Rat binom(1);
        for (int k = 1; k <= 2 * m; ++k) {
            // C(2m,k)
            binom = binom * (2 * m - k + 1) / k;
            Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
            TensorPoly word = TensorPoly::unit(a);
            for (int i = 0; i < k; ++i) word = word * e0;
            word = word * einf;
            for (int i = 0; i < 2 * m - k; ++i) word = word * e0;
            expect += word * (sign * binom * Rat(-1));
        }
    }
    bool intermediate_ok = lead0 == expect;

    CyclicPoly lhs = divergence(sig);
    CyclicPoly rhs(a);
    auto add_power = [&](const TensorPoly& e) {
        TensorPoly p = TensorPoly::unit(a);
        for (int i = 0; i < 2 * m + 1; ++i) p = p * e;
        rhs += cyclic_project(p);
    };
    add_power(e0);
    add_power(e1);
    add_power(einf);
    Rat scale(-1);
    scale /= (2 * m + 1);
    rhs *= scale;

    CyclicPoly residual = depth_reduce(lhs - rhs, 2);
    return AppendixACheck{intermediate_ok, residual.is_zero(), std::move(residual)};
}

}  // namespace jl

#include "jl/derivation.hpp"

#include <atomic>
#include <set>
#include <thread>

#include "jl/goldman.hpp"

namespace jl {

ThetaDerivation ThetaDerivation::lie_valued(const Alphabet& a, int degree, std::vector<LiePoly> values) {
    if (degree < 0) throw std::invalid_argument("Lie-valued derivations have degree >= 0");
    if (static_cast<int>(values.size()) != a.size()) throw std::invalid_argument("need one value per letter");
    ThetaDerivation d;
    d.alpha_ = a;
    d.degree_ = degree;
    d.kind_ = DerKind::Lie;
    d.tensor_vals_.reserve(values.size());
    for (auto& v : values) {
        require_same_alphabet(a, v.alphabet());
        auto vd = v.homogeneous_degree();
        if (vd && *vd != degree + 1) throw std::invalid_argument("value degree must be degree+1");
        d.tensor_vals_.push_back(v.to_tensor());
    }
    d.lie_vals_ = std::move(values);
    return d;
}

ThetaDerivation ThetaDerivation::tensor_valued(const Alphabet& a, int degree, std::vector<TensorPoly> values) {
    if (degree < -1) throw std::invalid_argument("tensor-valued derivations have degree >= -1");
    if (static_cast<int>(values.size()) != a.size()) throw std::invalid_argument("need one value per letter");
    ThetaDerivation d;
    d.alpha_ = a;
    d.degree_ = degree;
    d.kind_ = DerKind::Tensor;
    for (auto& v : values) {
        require_same_alphabet(a, v.alphabet());
        auto vd = v.homogeneous_degree();
        if (vd && *vd != degree + 1) throw std::invalid_argument("value degree must be degree+1");
    }
    d.tensor_vals_ = std::move(values);
    return d;
}

ThetaDerivation ThetaDerivation::zero(const Alphabet& a, int degree, DerKind kind) {
    if (kind == DerKind::Lie)
        return lie_valued(a, degree, std::vector<LiePoly>(static_cast<std::size_t>(a.size()), LiePoly(a)));
    return tensor_valued(a, degree, std::vector<TensorPoly>(static_cast<std::size_t>(a.size()), TensorPoly(a)));
}

const LiePoly& ThetaDerivation::lie_value(int letter) const {
    if (kind_ != DerKind::Lie) throw std::logic_error("lie_value on a tensor-valued derivation");
    return lie_vals_[static_cast<std::size_t>(letter)];
}

TensorPoly ThetaDerivation::theta_defect() const { return apply(theta_tensor(alpha_)); }

TensorPoly ThetaDerivation::apply(const TensorPoly& t) const {
    require_same_alphabet(alpha_, t.alphabet());
    TensorPoly out(alpha_);
    for (auto& [w, c] : t.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const TensorPoly& val = tensor_vals_[static_cast<unsigned char>(w[i])];
            if (val.is_zero()) continue;
            Word pre = w.substr(0, i);
            Word suf = w.substr(i + 1);
            for (auto& [vw, vc] : val.terms()) out.add_term(pre + vw + suf, c * vc);
        }
    }
    return out;
}

CyclicPoly ThetaDerivation::apply(const CyclicPoly& c) const {
    require_same_alphabet(alpha_, c.alphabet());
    CyclicPoly out(alpha_);
    for (auto& [w, coef] : c.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const TensorPoly& val = tensor_vals_[static_cast<unsigned char>(w[i])];
            if (val.is_zero()) continue;
            Word pre = w.substr(0, i);
            Word suf = w.substr(i + 1);
            for (auto& [vw, vc] : val.terms()) out.add_term(pre + vw + suf, coef * vc);
        }
    }
    return out;
}

std::optional<std::vector<int>> ThetaDerivation::multidegree() const {
    std::optional<std::vector<int>> md;
    for (int l = 0; l < alpha_.size(); ++l) {
        auto lmd = alpha_.letter_multidegree(l);
        for (auto& [w, c] : tensor_vals_[static_cast<std::size_t>(l)].terms()) {
            auto wmd = alpha_.multidegree(w);
            for (std::size_t i = 0; i < wmd.size(); ++i) wmd[i] -= lmd[i];
            if (md && *md != wmd) return std::nullopt;
            md = std::move(wmd);
        }
    }
    return md;
}

std::map<std::pair<int, Word>, Rat> ThetaDerivation::coordinates() const {
    std::map<std::pair<int, Word>, Rat> row;
    for (int l = 0; l < alpha_.size(); ++l) {
        if (kind_ == DerKind::Lie) {
            for (auto& [w, c] : lie_vals_[static_cast<std::size_t>(l)].terms()) row.emplace(std::make_pair(l, w), c);
        } else {
            for (auto& [w, c] : tensor_vals_[static_cast<std::size_t>(l)].terms()) row.emplace(std::make_pair(l, w), c);
        }
    }
    return row;
}

ThetaDerivation& ThetaDerivation::operator+=(const ThetaDerivation& o) {
    require_same_alphabet(alpha_, o.alpha_);
    if (kind_ != o.kind_) throw std::invalid_argument("derivation kind mismatch");
    for (std::size_t i = 0; i < tensor_vals_.size(); ++i) tensor_vals_[i] += o.tensor_vals_[i];
    if (kind_ == DerKind::Lie)
        for (std::size_t i = 0; i < lie_vals_.size(); ++i) lie_vals_[i] += o.lie_vals_[i];
    return *this;
}

ThetaDerivation& ThetaDerivation::operator-=(const ThetaDerivation& o) {
    require_same_alphabet(alpha_, o.alpha_);
    if (kind_ != o.kind_) throw std::invalid_argument("derivation kind mismatch");
    for (std::size_t i = 0; i < tensor_vals_.size(); ++i) tensor_vals_[i] -= o.tensor_vals_[i];
    if (kind_ == DerKind::Lie)
        for (std::size_t i = 0; i < lie_vals_.size(); ++i) lie_vals_[i] -= o.lie_vals_[i];
    return *this;
}

ThetaDerivation& ThetaDerivation::operator*=(const Rat& s) {
    for (auto& v : tensor_vals_) v *= s;
    for (auto& v : lie_vals_) v *= s;
    return *this;
}

ThetaDerivation der_bracket(const ThetaDerivation& d1, const ThetaDerivation& d2) {
    require_same_alphabet(d1.alphabet(), d2.alphabet());
    if (d1.kind() != d2.kind()) throw std::invalid_argument("derivation kind mismatch");
    const Alphabet& a = d1.alphabet();
    int degree = d1.degree() + d2.degree();
    std::vector<TensorPoly> vals;
    vals.reserve(static_cast<std::size_t>(a.size()));
    for (int l = 0; l < a.size(); ++l)
        vals.push_back(d1.apply(d2.tensor_value(l)) - d2.apply(d1.tensor_value(l)));
    if (d1.kind() == DerKind::Tensor) return ThetaDerivation::tensor_valued(a, degree, std::move(vals));
    std::vector<LiePoly> lie_vals;
    lie_vals.reserve(vals.size());
    for (auto& v : vals) lie_vals.push_back(LiePoly::from_tensor(v));
    return ThetaDerivation::lie_valued(a, degree, std::move(lie_vals));
}

CyclicPoly der_on_cyclic(const ThetaDerivation& d, const CyclicPoly& c) { return d.apply(c); }

ThetaDerivation kk_derivation(const CyclicPoly& x) {
    auto deg = x.homogeneous_degree();
    if (!deg) throw std::invalid_argument("kk_derivation requires a nonzero homogeneous cyclic element");
    return kk_derivation(x, *deg);
}

ThetaDerivation kk_derivation(const CyclicPoly& x, int weight) {
    const Alphabet& a = x.alphabet();
    auto deg = x.homogeneous_degree();
    if (deg && *deg != weight) throw std::invalid_argument("kk_derivation weight mismatch");
    if (weight < 1) throw std::invalid_argument("kk_derivation needs weight >= 1");
    std::vector<TensorPoly> vals;
    for (int l = 0; l < a.size(); ++l) vals.push_back(kk_action(x, TensorPoly::letter(a, l)));
    return ThetaDerivation::tensor_valued(a, weight - 2, std::move(vals));
}

bool Subspace::add(const ThetaDerivation& d) {
    require_same_alphabet(alpha_, d.alphabet());
    if (d.kind() != kind_ || d.degree() != degree_) throw std::invalid_argument("subspace element mismatch");
    if (!ech_.insert(d.coordinates())) return false;
    basis_.push_back(d);
    return true;
}

std::map<std::vector<int>, int> Subspace::multidegree_ranks() const {
    std::map<std::vector<int>, int> out;
    for (auto& d : basis_) {
        auto md = d.multidegree();
        if (!md) throw std::logic_error("multidegree_ranks requires homogeneous basis vectors");
        ++out[*md];
    }
    return out;
}

namespace {

std::vector<Word> value_words(const Alphabet& a, int len, DerKind kind) {
    if (kind == DerKind::Lie) return lyndon_words(a.size(), len);
    std::vector<Word> out;
    if (len == 0) {
        out.emplace_back();
        return out;
    }
    Word w(static_cast<std::size_t>(len), 0);
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == static_cast<char>(a.size() - 1)) w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace

Subspace theta_der_basis(const Alphabet& a, int m, DerKind kind, int jobs) {
    if (!a.is_symplectic()) throw ModelMismatchError("theta_der_basis needs the symplectic model");
    if (kind == DerKind::Lie && m < 0) throw std::invalid_argument("Lie kind needs m >= 0");
    if (m < -1) throw std::invalid_argument("m >= -1 required");

    // unknowns grouped by derivation multidegree
    struct Unknown {
        int letter;
        Word word;
    };
    std::map<std::vector<int>, std::vector<Unknown>> blocks;
    auto words = value_words(a, m + 1, kind);
    for (int l = 0; l < a.size(); ++l) {
        auto lmd = a.letter_multidegree(l);
        for (auto& w : words) {
            auto md = a.multidegree(w);
            for (std::size_t i = 0; i < md.size(); ++i) md[i] -= lmd[i];
            blocks[md].push_back({l, w});
        }
    }

    std::vector<std::pair<const std::vector<int>, std::vector<Unknown>>*> block_list;
    for (auto& kv : blocks) block_list.push_back(&kv);

    std::vector<std::vector<ThetaDerivation>> results(block_list.size());

    auto solve_block = [&](std::size_t bi) {
        auto& unknowns = block_list[bi]->second;
        // column of the theta-defect for each unknown:
        //   letter a_j contributes [value, b_j]; letter b_j contributes -[value, a_j]
        std::vector<std::map<Word, Rat>> cols(unknowns.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto& [l, w] = unknowns[u];
            int partner = (l % 2 == 0) ? l + 1 : l - 1;
            Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
            const TensorPoly* val = nullptr;
            TensorPoly mono(a);
            if (kind == DerKind::Lie) {
                val = &lyndon_expansion(a, w);
            } else {
                mono = TensorPoly::monomial(a, w, Rat(1));
                val = &mono;
            }
            auto& col = cols[u];
            char p = static_cast<char>(partner);
            for (auto& [vw, vc] : val->terms()) {
                auto put = [&](Word key, Rat add) {
                    auto [it, fresh] = col.try_emplace(std::move(key), Rat(0));
                    it->second += add;
                    if (it->second == 0) col.erase(it);
                };
                put(vw + p, sign * vc);
                put(p + vw, -sign * vc);
            }
        }
        auto null_vecs = sparse_column_nullspace(std::move(cols));
        auto& out = results[bi];
        for (auto& nv : null_vecs) {
            if (kind == DerKind::Lie) {
                std::vector<LiePoly> vals(static_cast<std::size_t>(a.size()), LiePoly(a));
                for (auto& [ci, coef] : nv) {
                    const auto& [l, w] = unknowns[static_cast<std::size_t>(ci)];
                    vals[static_cast<std::size_t>(l)].add_term(w, coef);
                }
                out.push_back(ThetaDerivation::lie_valued(a, m, std::move(vals)));
            } else {
                std::vector<TensorPoly> vals(static_cast<std::size_t>(a.size()), TensorPoly(a));
                for (auto& [ci, coef] : nv) {
                    const auto& [l, w] = unknowns[static_cast<std::size_t>(ci)];
                    vals[static_cast<std::size_t>(l)].add_term(w, coef);
                }
                out.push_back(ThetaDerivation::tensor_valued(a, m, std::move(vals)));
            }
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < block_list.size(); ++i) solve_block(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < block_list.size(); i = next++) solve_block(i);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Subspace sp(a, m, kind);
    for (auto& block : results)
        for (auto& d : block) sp.add(d);
    return sp;
}

CyclicPoly kappa_inverse(const ThetaDerivation& d) {
    const Alphabet& a = d.alphabet();
    int n = d.degree() + 2;
    if (n < 1) throw std::invalid_argument("kappa_inverse needs degree >= -1");
    // split the target by multidegree and solve in each block
    std::map<std::vector<int>, std::map<std::pair<int, Word>, Rat>> target;
    for (int l = 0; l < a.size(); ++l) {
        auto lmd = a.letter_multidegree(l);
        for (auto& [w, c] : d.tensor_value(l).terms()) {
            auto md = a.multidegree(w);
            for (std::size_t i = 0; i < md.size(); ++i) md[i] -= lmd[i];
            target[md].emplace(std::make_pair(l, w), c);
        }
    }
    std::map<std::vector<int>, std::vector<Word>> neck_by_md;
    for (auto& w : necklace_basis(a, n)) neck_by_md[a.multidegree(w)].push_back(w);

    CyclicPoly out(a);
    for (auto& [md, rhs] : target) {
        auto it = neck_by_md.find(md);
        if (it == neck_by_md.end()) throw std::logic_error("kappa_inverse: empty source block");
        const auto& cols = it->second;
        std::map<std::pair<int, Word>, int> row_of;
        std::vector<std::map<std::pair<int, Word>, Rat>> colvecs;
        for (auto& w : cols) {
            auto der = kk_derivation(CyclicPoly::necklace(a, w));
            auto coords = der.coordinates();
            for (auto& [k, c] : coords) row_of.emplace(k, 0);
            colvecs.push_back(std::move(coords));
        }
        for (auto& [k, c] : rhs) row_of.emplace(k, 0);
        int nr = 0;
        for (auto& [k, r] : row_of) r = nr++;
        QMat mrows(static_cast<std::size_t>(nr));
        for (auto& r : mrows) r.assign(cols.size(), Rat(0));
        for (std::size_t j = 0; j < colvecs.size(); ++j)
            for (auto& [k, c] : colvecs[j]) mrows[static_cast<std::size_t>(row_of[k])][j] = c;
        QVec b(static_cast<std::size_t>(nr), Rat(0));
        for (auto& [k, c] : rhs) b[static_cast<std::size_t>(row_of[k])] = c;
        auto x = solve(std::move(mrows), std::move(b), static_cast<int>(cols.size()));
        if (!x) throw std::logic_error("kappa_inverse: derivation not in the image of kappa");
        for (std::size_t j = 0; j < cols.size(); ++j)
            if ((*x)[j] != 0) out.add_term(cols[j], (*x)[j]);
    }
    return out;
}

}  // namespace jl

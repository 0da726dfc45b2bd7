#pragma once

#include <map>

#include "jl/cyclic.hpp"
#include "jl/derivation.hpp"
#include "jl/lie_poly.hpp"

namespace jl {

/// Special derivation of the genus-0 free Lie algebra on the puncture
/// classes: D(e_j) = [u_j, e_j] for every non-base puncture j and
/// D(e_base) = 0. Components are stored over the free letters of the
/// boundary alphabet that eliminates the base puncture, and satisfy
/// sum_j [u_j, e_j] = 0.
class SpecialDer0 {
public:
    /// components: puncture index -> u_j (all punctures except the base).
    SpecialDer0(int punctures, int base, std::map<int, TensorPoly> components);

    /// Builds without verifying the special relation, for depth-truncated
    /// representatives whose defect vanishes only modulo higher depth.
    static SpecialDer0 truncated(int punctures, int base, std::map<int, TensorPoly> components);

    int punctures() const { return alpha_.punctures(); }
    int base() const { return alpha_.eliminated_puncture(); }
    /// Degree of the components u_j (the derivation raises word length by
    /// degree()+1).
    int degree() const { return degree_; }
    const Alphabet& alphabet() const { return alpha_; }

    const TensorPoly& component(int puncture) const;

    /// sum_j [u_j, e_j]; zero iff the derivation is special for the base.
    TensorPoly special_relation_defect() const;

    /// The underlying derivation of the free tensor algebra.
    ThetaDerivation as_derivation() const;

    SpecialDer0& operator+=(const SpecialDer0& o);
    SpecialDer0& operator-=(const SpecialDer0& o);
    SpecialDer0& operator*=(const Rat& s);
    friend SpecialDer0 operator+(SpecialDer0 a, const SpecialDer0& b) { return a += b; }
    friend SpecialDer0 operator-(SpecialDer0 a, const SpecialDer0& b) { return a -= b; }
    friend SpecialDer0 operator*(SpecialDer0 a, const Rat& s) { return a *= s; }

    bool is_zero() const {
        for (auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

private:
    explicit SpecialDer0(Alphabet a) : alpha_(std::move(a)) {}

    Alphabet alpha_;  // boundary model eliminating the base puncture
    int degree_ = 0;
    std::vector<TensorPoly> comps_;  // indexed by letter index
};

/// The generator e_{j,k}: e_t -> (delta_{jt} - delta_{kt}) [e_j, e_k] in
/// component form (u_j = -e_k, u_k = -e_j, components orthogonal to their
/// own puncture class). Requires j, k distinct from the base.
SpecialDer0 ejk_generator(int punctures, int j, int k, int base = 0);

/// The same generator as a raw derivation over the standard alphabet
/// (eliminating puncture 0); valid for any distinct j, k including 0.
/// j == k gives the zero derivation (the convention e_{j,j} = 0).
ThetaDerivation ejk_derivation(int punctures, int j, int k);

/// Inner derivation v -> [p, v] on the boundary alphabet of p.
ThetaDerivation inner_derivation(const TensorPoly& p);

/// Bracket of special derivations, in component form:
/// w_j = D_u(v_j) - D_v(u_j) - [u_j, v_j].
SpecialDer0 sder_bracket(const SpecialDer0& u, const SpecialDer0& v);

/// rot: puncture index -> rotation number of the boundary loop.
using RotationData = std::map<int, int>;

/// div_base D_u = sum_j |e_j u_j^{(j)}| where u_j = sum_k e_k u_j^{(k)}.
CyclicPoly divergence(const SpecialDer0& d);

/// edge = divergence + sum_j rot(j) |u_j| (the degree-1 cyclic class of u_j).
CyclicPoly edge_map(const SpecialDer0& d, const RotationData& rot);

/// Verifies the three relation families of the genus-0 presentation in the
/// derivation representation: sum_j e_{j,k} acts as the inner derivation
/// [e_k, .] (the boundary-rotation class; zero in the presented quotient),
/// distinct-index brackets vanish, and [e_{j,l} + e_{l,k}, e_{j,k}] = 0.
bool relations_check(int n, std::string* report = nullptr);

/// Exact basis of the special derivations with Lie components of the given
/// degree, base puncture 0 (degree-1 components are normalized orthogonal
/// to their own puncture class).
std::vector<SpecialDer0> sder_basis(int punctures, int degree);

/// Weight-w basis of the depth space D^k on the 3-puncture model: cyclic
/// words whose degree in each retained letter is at least k (the degree in
/// the eliminated letter is counted on the unique expansion, where its
/// minimal exhibited value is zero).
std::vector<CyclicPoly> depth_space(const Alphabet& a3, int w, int k);

/// Canonical representative of c modulo D^k: deletes every cyclic word
/// lying in D^k (3-puncture model only).
CyclicPoly depth_reduce(const CyclicPoly& c, int k);

/// Whether c lies in D^k.
bool in_depth(const CyclicPoly& c, int k);

/// Depth-1 polylog representative of sigma_{2m+1}: base puncture 1,
/// components u_0 = ad_{e_0}^{2m}(e_1) and u_inf = ad_{e_inf}^{2m}(e_1)
/// on the punctures {0, 1, inf = 2}.
SpecialDer0 sigma_polylog(int m);

struct AppendixACheck {
    bool intermediate_ok;  // e_0 u_0^{(0)} = -sum_k (-1)^k C(2m,k) e_0^k e_inf e_0^{2m-k}
    bool identity_ok;      // div_1 sigma = -(1/(2m+1)) sum_a |e_a^{2m+1}| mod D^2
    CyclicPoly residual;   // reduced difference (zero when identity_ok)
};

/// The Appendix-A identity for sigma_{2m+1}, checked exactly mod D^2.
AppendixACheck appendix_a_check(int m);

}  // namespace jl

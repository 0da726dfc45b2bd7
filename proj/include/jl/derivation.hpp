#pragma once

#include <map>

#include "jl/cyclic.hpp"
#include "jl/lie_poly.hpp"
#include "jl/linalg.hpp"

namespace jl {

enum class DerKind : std::uint8_t { Lie, Tensor };

/// A degree-homogeneous derivation of the free Lie or tensor algebra
/// annihilating theta, stored by its values on the generators. A derivation
/// of degree m sends letters to elements of degree m+1; tensor-valued
/// derivations allow m = -1 (scalar values).
class ThetaDerivation {
public:
    static ThetaDerivation lie_valued(const Alphabet& a, int degree, std::vector<LiePoly> values);
    static ThetaDerivation tensor_valued(const Alphabet& a, int degree, std::vector<TensorPoly> values);
    static ThetaDerivation zero(const Alphabet& a, int degree, DerKind kind);

    const Alphabet& alphabet() const { return alpha_; }
    int degree() const { return degree_; }
    DerKind kind() const { return kind_; }

    const LiePoly& lie_value(int letter) const;
    const TensorPoly& tensor_value(int letter) const { return tensor_vals_[static_cast<std::size_t>(letter)]; }

    bool is_zero() const {
        for (auto& v : tensor_vals_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// D(theta) in tensor form; zero iff the theta-condition holds.
    TensorPoly theta_defect() const;
    bool annihilates_theta() const { return theta_defect().is_zero(); }

    /// Leibniz extension to the tensor algebra.
    TensorPoly apply(const TensorPoly& t) const;
    LiePoly apply(const LiePoly& p) const { return LiePoly::from_tensor(apply(p.to_tensor())); }
    /// Induced endomorphism of the cyclic quotient (independent of the
    /// chosen representatives).
    CyclicPoly apply(const CyclicPoly& c) const;

    /// Common multidegree shift when the derivation is multidegree
    /// homogeneous, else nullopt.
    std::optional<std::vector<int>> multidegree() const;

    /// Sparse coordinates (letter, value word); Lyndon words for Lie kind.
    std::map<std::pair<int, Word>, Rat> coordinates() const;

    ThetaDerivation& operator+=(const ThetaDerivation& o);
    ThetaDerivation& operator-=(const ThetaDerivation& o);
    ThetaDerivation& operator*=(const Rat& s);
    friend ThetaDerivation operator+(ThetaDerivation a, const ThetaDerivation& b) { return a += b; }
    friend ThetaDerivation operator-(ThetaDerivation a, const ThetaDerivation& b) { return a -= b; }
    friend ThetaDerivation operator*(ThetaDerivation a, const Rat& s) { return a *= s; }
    friend ThetaDerivation operator*(const Rat& s, ThetaDerivation a) { return a *= s; }

private:
    Alphabet alpha_ = Alphabet::symplectic(1);
    int degree_ = 0;
    DerKind kind_ = DerKind::Tensor;
    std::vector<LiePoly> lie_vals_;        // Lie kind only
    std::vector<TensorPoly> tensor_vals_;  // always populated
};

/// [D1, D2] on generators; the theta-condition is preserved.
ThetaDerivation der_bracket(const ThetaDerivation& d1, const ThetaDerivation& d2);

/// Endomorphism of the cyclic quotient induced by a derivation.
CyclicPoly der_on_cyclic(const ThetaDerivation& d, const CyclicPoly& c);

/// The derivation kappa(x) of T(H) attached to a homogeneous cyclic
/// element of weight >= 1 (weight 0 spans the kernel of kappa). The
/// two-argument form fixes the weight when x may be zero.
ThetaDerivation kk_derivation(const CyclicPoly& x);
ThetaDerivation kk_derivation(const CyclicPoly& x, int weight);

/// Span of theta-annihilating derivations with exact rank bookkeeping per
/// torus multidegree. Basis vectors are stored as inserted (after
/// independence filtering); all mutating operations keep an echelon form.
class Subspace {
public:
    Subspace(const Alphabet& a, int degree, DerKind kind) : alpha_(a), degree_(degree), kind_(kind) {}

    bool add(const ThetaDerivation& d);
    bool contains(const ThetaDerivation& d) const { return ech_.contains(d.coordinates()); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ThetaDerivation>& basis() const { return basis_; }
    const Alphabet& alphabet() const { return alpha_; }
    int degree() const { return degree_; }
    DerKind kind() const { return kind_; }

    /// Rank per multidegree; requires all basis vectors homogeneous.
    std::map<std::vector<int>, int> multidegree_ranks() const;

private:
    Alphabet alpha_;
    int degree_;
    DerKind kind_;
    std::vector<ThetaDerivation> basis_;
    SparseEchelon<std::pair<int, Word>> ech_;
};

/// Exact basis of Der^theta_m by nullspace solve of the theta-condition,
/// blocked by torus multidegree. jobs > 1 solves blocks concurrently.
Subspace theta_der_basis(const Alphabet& a, int m, DerKind kind, int jobs = 1);

/// Solves kappa(c) = d for the weight-(degree+2) cyclic word c; unique for
/// degree >= -1 by the graded Kawazumi-Kuno isomorphism.
CyclicPoly kappa_inverse(const ThetaDerivation& d);

}  // namespace jl

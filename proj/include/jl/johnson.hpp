#pragma once

#include "jl/derivation.hpp"

namespace jl {

/// Degree-1 Johnson map on a wedge u1^u2^u3 of distinct letters:
///   v |-> -(<u1,v>[u2,u3] + <u2,v>[u3,u1] + <u3,v>[u1,u2]).
/// Alternating in the inputs; repeated letters give the zero derivation.
ThetaDerivation tau1(const Alphabet& a, int u1, int u2, int u3);

/// Span of tau1 over the wedge basis of Lambda^3 H.
Subspace johnson_degree1(const Alphabet& a);

/// The degree-1-generated subalgebra in weight m: J_1 = tau1(Lambda^3 H),
/// J_m = [J_1, J_{m-1}]. For g >= 3 this is the image of the graded Johnson
/// homomorphism; for smaller genus it is offered as the degree-1-generated
/// subalgebra only.
Subspace johnson_image(const Alphabet& a, int m);
/// Same, reusing an already computed J_{m-1}.
Subspace johnson_image_step(const Subspace& prev);

/// The unique degree-2n theta-derivation of L(a,b) with
/// epsilon(b) = ad_b^{2n}(a); epsilon(a) is found by exact linear solve and
/// the solver asserts the solution is unique.
ThetaDerivation epsilon_derivation(const Alphabet& a, int n);

struct PollackResult {
    bool holds;
    ThetaDerivation residual;
};

/// Exact check of the first two quadratic Pollack relations:
///   1: [eps4, eps10] - 3 [eps6, eps8] = 0
///   2: 2 [eps4, eps14] - 7 [eps6, eps12] + 11 [eps8, eps10] = 0
PollackResult pollack_check(int which);

/// Nakamura's embedding of Sym^{2n+1} H: the value on a monomial
/// x_0 ... x_{2n} (a word of 2n+1 letters) is
///   sum_j sum_{sigma} kappa(|a_j [x_{sigma(0)},[...,[x_{sigma(2n)},b_j]...]]|),
/// the caterpillar tree cut at its a_j leaf. Requires g >= 2.
ThetaDerivation mu_odd(const Alphabet& a, int n, const Word& monomial);

/// Monomial basis (sorted words of length k) of Sym^k H.
std::vector<Word> sym_power_monomials(const Alphabet& a, int k);

struct MuSquared {
    ThetaDerivation value;           // degree 4n+2
    QVec invariant_coefficients;     // coordinates of the invariant bivector
    std::size_t invariant_dimension; // must be 1
};

/// Image of the generator of the unique trivial representation inside
/// Lambda^2 Sym^{2n+1} H under the bracket of mu_odd values.
MuSquared mu_squared(const Alphabet& a, int n);

/// Enomoto-Satoh trace: write D as sum_i (a_i (x) D(b_i) - b_i (x) D(a_i))
/// in H (x) H^{(m+1)}, contract the first factor into the leading slot of
/// the second, and read the remainder as a cyclic word of weight m.
CyclicPoly es_trace(const ThetaDerivation& d);

}  // namespace jl

#pragma once

#include "jl/cyclic.hpp"
#include "jl/lie_poly.hpp"

namespace jl {

/// Graded Goldman bracket on cyclic words over the symplectic model:
///   {|x_1..x_n|, |y_1..y_m|} =
///     sum_{j,k} <x_j,y_k> |x_{j+1}..x_{j-1} y_{k+1}..y_{k-1}|
/// with both remainders read cyclically. Output word length is n+m-2.
CyclicPoly goldman_bracket(const CyclicPoly& x, const CyclicPoly& y);

/// Graded Turaev cobracket:
///   delta|x_1..x_n| = sum_{j<k} <x_j,x_k>
///     (|inner| (x) |outer| - |outer| (x) |inner|)
/// with inner = x_{j+1}..x_{k-1} and outer = x_{k+1}..x_n x_1..x_{j-1}.
CyclicPair turaev_cobracket(const CyclicPoly& x);

/// Cobracket followed by deletion of terms with an empty tensor factor.
CyclicPair reduced_cobracket(const CyclicPoly& x);

/// Graded Kawazumi-Kuno action of a cyclic word on a tensor word:
///   kappa(|x_1..x_n|)(y_1..y_m) =
///     sum_{j,k} <x_j,y_k> y_1..y_{k-1} x_{j+1}..x_{j-1} y_{k+1}..y_m.
TensorPoly kk_action(const CyclicPoly& x, const TensorPoly& w);

/// Bracket of the first factors against a fixed cyclic element, applied to
/// every term of a pair: the adjoint action c . (u (x) v) =
/// {c,u} (x) v + u (x) {c,v}.
CyclicPair adjoint_on_pair(const CyclicPoly& c, const CyclicPair& p);

/// Composition bracket . cobracket (involutivity sends it to zero).
CyclicPoly bracket_of_pair(const CyclicPair& p);

/// |theta^k|: the cyclic class of the k-th power of the symplectic tensor.
CyclicPoly theta_power_cyclic(const Alphabet& a, int k);

/// All canonical cyclic words of the given weight (basis of the weight
/// graded piece of the cyclic space).
std::vector<Word> necklace_basis(const Alphabet& a, int weight);

}  // namespace jl

#pragma once

#include "jl/cyclic.hpp"
#include "jl/lie_poly.hpp"

namespace jl {

/// Symmetrization (1/k!) sum_sigma u_{sigma(1)} ... u_{sigma(k)} of Lie
/// factors in the tensor algebra; the empty list gives the unit.
TensorPoly pbw_symmetrize(const Alphabet& a, const std::vector<LiePoly>& factors);

/// Multisets (nondecreasing tuples) of Lyndon words with the given total
/// length and number of factors.
std::vector<std::vector<Word>> lyndon_multisets(const Alphabet& a, int total, int nfactors);

/// |L_{u_1} ... L_{u_k}| for a multiset of Lyndon words: a spanning vector
/// of |Sym^k L(H)| in the cyclic space.
CyclicPoly sym_basis_vector(const Alphabet& a, const std::vector<Word>& multiset);

/// Spanning set of |Sym^n L(H)|_w.
std::vector<CyclicPoly> sym_space_spanning(const Alphabet& a, int w, int n);

/// All components of a homogeneous cyclic element under the PBW-type
/// decomposition |T(H)|_w = (+)_n |Sym^n L(H)|_w; index n runs 0..w.
std::vector<CyclicPoly> sym_components(const CyclicPoly& c);

/// Component of c in |Sym^n L(H)|.
CyclicPoly sym_component_project(const CyclicPoly& c, int n);

}  // namespace jl

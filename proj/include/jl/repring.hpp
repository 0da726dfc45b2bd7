#pragma once

#include <map>

#include "jl/laurent.hpp"

namespace jl {

/// Partition with at most g parts, weakly decreasing, no trailing zeros.
using Partition = std::vector<int>;

/// Formal integer combination of Sp(2g) irreducibles; multiplicities may be
/// negative (virtual characters are pervasive in Euler characteristics).
using RepElement = std::map<Partition, long>;

/// Character of the defining representation H: sum_i (x_i + 1/x_i).
Laurent defining_character(int g);

/// Irreducible character of V_lambda for Sp(2g) by the Weyl character
/// formula, as the exact quotient of alternants.
Laurent irr_character(const Partition& lambda, int g);

/// Dimension of V_lambda by the Weyl dimension formula (independent of the
/// character route; usable as an oracle).
Rat weyl_dimension(const Partition& lambda, int g);

/// Expands a Weyl-invariant virtual character into irreducibles by greedy
/// highest-weight subtraction; throws on non-invariant input.
RepElement decompose(const Laurent& chi, int g);

Laurent rep_character(const RepElement& rep, int g);

/// Adams operation psi^d (x_i -> x_i^d).
Laurent adams_op(const Laurent& chi, int d);
/// Exterior power via the Newton recurrence over Adams operations.
Laurent lambda_op(const Laurent& chi, int k);
/// Symmetric power via the Newton recurrence.
Laurent sym_op(const Laurent& chi, int k);

/// Character of a multidegree-graded subspace: sum over multidegrees of
/// rank * x^mu; checks Weyl invariance.
Laurent character_of_multidegrees(const std::map<std::vector<int>, int>& ranks, int g);

/// Moebius inversion of a graded Lie algebra from the Euler characteristics
/// of its homology (dimension mode): given Phi_n for n = 0..N with
/// Phi_0 = 1, returns h_1..h_N via
///   Psi = -x Phi'/Phi,  h_n = (1/n) sum_{d|n} mu(d) Psi_{n/d}.
std::vector<Rat> mobius_invert_dimension(const std::vector<Rat>& phi, int N);

/// Character mode: psi^d acts as the Adams operation.
std::vector<Laurent> mobius_invert_character(const std::vector<Laurent>& phi, int N, int g);

int moebius_mu(int n);

std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);

}  // namespace jl

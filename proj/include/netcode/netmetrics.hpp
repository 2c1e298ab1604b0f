#ifndef NETCODE_NETMETRICS_HPP
#define NETCODE_NETMETRICS_HPP

/**
 * Discrepancy and distance measures for matrix channels.
 *
 * Closed forms come in pairs with literal-minimization oracles; the oracles
 * exist to be checked against, so they enumerate exactly what the definition
 * quantifies over and nothing smarter.  Shapes: transfer matrix A is N x n,
 * inputs X are n x m, outputs Y are N x m, edge map F is N x ell with error
 * packets E of shape ell x m.
 */

#include <optional>

#include "netcode/discrepancy.hpp"
#include "netcode/ffmat.hpp"
#include "netcode/spaces.hpp"

namespace netcode {

int rank_distance(const Matrix& x, const Matrix& y);
int subspace_distance(const Subspace& u, const Subspace& v);
int injection_distance(const Subspace& u, const Subspace& v);
/// Injection distance without canonicalizing: operands as generating matrices.
int injection_distance_mat(const Matrix& x, const Matrix& y);

/// Rows of e that are nonzero.
int row_weight(const Matrix& e);

// Coherent model: adversary injects packets through unknown links; the
// receiver knows A.  Effort = fewest injected packets explaining Y.
int coherent_discrepancy(const Matrix& a, const Matrix& x, const Matrix& y);
/// Literal search: least r admitting D (N x r), Z (r x m) with Y = AX + DZ.
int coherent_discrepancy_oracle(const Matrix& a, const Matrix& x, const Matrix& y);
int coherent_delta(const Matrix& a, const Matrix& x1, const Matrix& x2);
/// Definitional scan over every output Y of summed discrepancy.
int coherent_delta_oracle(const Matrix& a, const Matrix& x1, const Matrix& x2);
/// Min over distinct codeword pairs.
int coherent_delta_code(const Matrix& a, const std::vector<Matrix>& code);

// Yeung-style model: both A and the edge map F are fixed and known; the
// adversary chooses error packets E, effort = number of nonzero rows of E.
ExtNat yeung_discrepancy(const Matrix& a, const Matrix& f, const Matrix& x, const Matrix& y);
ExtNat yeung_delta(const Matrix& a, const Matrix& f, const Matrix& x1, const Matrix& x2);
ExtNat yeung_delta_code(const Matrix& a, const Matrix& f, const std::vector<Matrix>& code);
/// Minimum-row-weight E with f * e = r, or nullopt; deterministic (first
/// support in subset order, particular solution from elimination).
std::optional<Matrix> min_weight_edge_solution(const Matrix& f, const Matrix& r);
/// Minimizing the Yeung discrepancy over all edge maps with ell columns
/// recovers the coherent discrepancy.
ExtNat min_discrepancy_over_edge_maps(const Matrix& a, const Matrix& x, const Matrix& y, int ell);

// Noncoherent model: the adversary also picks A, constrained to
// rank A >= n - rho.  Closed form: max{rank X - rho, rank Y} - dim(<X> ^ <Y>).
int noncoherent_discrepancy(const Matrix& x, const Matrix& y, int rho);
/// Literal minimization over transfer matrices with N rows.
int noncoherent_discrepancy_oracle(const Matrix& x, const Matrix& y, int rho, int big_n);
/// Same value through the subspace-distance identity
/// (d_S - rho + |rank X - rank Y - rho|) / 2.
int noncoherent_discrepancy_subspace_form(const Matrix& x, const Matrix& y, int rho);

/// Both operands reduced: A is L x rows(x) with rank >= rows(x) - rho, B is
/// L x rows(y) with rank >= rows(y) - sigma; value min rank(BY - AX).
/// Closed form [max{rank X - rho, rank Y - sigma} - dim(<X> ^ <Y>)]^+,
/// independent of L; requires L >= max(rows(x) - rho, rows(y) - sigma).
int two_sided_discrepancy(const Matrix& x, const Matrix& y, int rho, int sigma, int big_l);
int two_sided_discrepancy_oracle(const Matrix& x, const Matrix& y, int rho, int sigma, int big_l);

/// [injection_distance - rho]^+.
int noncoherent_delta(const Matrix& x1, const Matrix& x2, int rho);
/// Definitional scan over outputs with big_n rows.
int noncoherent_delta_oracle(const Matrix& x1, const Matrix& x2, int rho, int big_n);
int noncoherent_delta_code(const std::vector<Matrix>& code, int rho);

// Channel adapters: inputs indexed over F_q^{n x m}, outputs over F_q^{N x m},
// both in matrix enumeration order.
Channel coherent_channel(const Matrix& a, int n, int m);
Channel yeung_channel(const Matrix& a, const Matrix& f, int n, int m);
Channel noncoherent_channel(const Field& fld, int n, int big_n, int m, int rho);

} // namespace netcode

#endif

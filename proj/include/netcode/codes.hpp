#ifndef NETCODE_CODES_HPP
#define NETCODE_CODES_HPP

/**
 * Rank-metric codes as explicit codeword lists, the classical evaluation
 * construction over GF(q^m) via q-linearized polynomials, minimum distances,
 * cardinality bounds, and row-space lifting.
 *
 * Codes are always materialized in full: every downstream check is an
 * exhaustive sweep at desk scale, and explicit lists keep the decoders and
 * adversaries trivial to audit.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "netcode/discrepancy.hpp"
#include "netcode/ffmat.hpp"
#include "netcode/spaces.hpp"

namespace netcode {

using BigInt = boost::multiprecision::cpp_int;

/**
 * GF(q^m) built as polynomials over a base field modulo the smallest monic
 * irreducible of degree m (non-leading coefficients enumerated as an
 * ascending base-q integer, mirroring the base-field convention).  Elements
 * are coefficient vectors of length m over the base field, index = degree,
 * which doubles as their expansion into F_q^m coordinates.
 */
class ExtField {
  public:
    using Elem = std::vector<std::uint8_t>;

    ExtField(Field base, int m);

    const Field& base_field() const { return base_; }
    int degree() const { return m_; }
    /// q^m; guarded against overflow.
    std::uint64_t order() const { return order_; }
    /// Length m+1, coefficient codes over the base field, monic.
    const std::vector<std::uint8_t>& modulus() const { return mod_; }

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    /// The adjoined root (coefficient vector of x).
    Elem alpha() const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, std::uint8_t c) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    /// Multiplicative inverse via a^(q^m - 2); throws division_by_zero on 0.
    Elem inv(const Elem& a) const;
    /// Frobenius a -> a^q.
    Elem pow_q(const Elem& a) const;

    /// Index <-> element bijection: base-q digits, digit i = coefficient i.
    Elem from_index(std::uint64_t idx) const;
    std::uint64_t to_index(const Elem& a) const;

  private:
    Elem reduce(std::vector<std::uint8_t> poly) const;
    void check(const Elem& a) const;

    Field base_;
    int m_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint8_t> mod_;
};

/// Uniform-shape list of n x m codewords with no duplicates.
struct MatrixCode {
    Field field;
    int n = 0;
    int m = 0;
    std::vector<Matrix> words;
};
MatrixCode make_matrix_code(Field f, int n, int m, std::vector<Matrix> words);

/// Distinct subspaces of a shared ambient space.
struct SubspaceCode {
    Field field;
    int ambient = 0;
    std::vector<Subspace> members;
};
SubspaceCode make_subspace_code(Field f, int ambient, std::vector<Subspace> members);

/**
 * Parameters of the evaluation construction: message polynomials
 * f(z) = sum_j u_j z^(q^j) with k coefficients in GF(q^m), evaluated at n
 * points linearly independent over the base field, each value expanded to an
 * m-coordinate row.  Empty points = the polynomial basis {1, alpha, ...,
 * alpha^(n-1)}.  Requires 1 <= k <= n <= m; yields q^(mk) codewords at
 * minimum rank distance n - k + 1.
 */
struct GabidulinSpec {
    Field base;
    int m = 0;
    int n = 0;
    int k = 0;
    std::vector<std::vector<std::uint8_t>> points;
};

MatrixCode gabidulin_generate(const GabidulinSpec& gs);

/// JSON descriptor {"kind":"gabidulin","q":...,"m":...,"n":...,"k":...}
/// (optional "points": list of coefficient-vector lists).
GabidulinSpec gabidulin_spec_from_json(const std::string& text);
std::string gabidulin_spec_to_json(const GabidulinSpec& gs);

/// Exhaustive pairwise minimum of the rank distance.
int min_rank_distance(const MatrixCode& c);
/// Shortcut for additively closed codes: min rank over nonzero words.
/// Requires the zero word to be present.
int min_rank_distance_linear(const MatrixCode& c);
/// Every pairwise sum is again a codeword.
bool is_additively_closed(const MatrixCode& c);

int min_injection_distance(const SubspaceCode& s);

/// Largest cardinality of an n x m code at minimum rank distance d:
/// q^(max(n,m) * (min(n,m) - d + 1)).  Requires 1 <= d <= min(n,m).
BigInt singleton_rank_bound(int q, int n, int m, int d);

/**
 * Cardinality bounds for codes used over an n-input network with column-rank
 * deficiency rho and packet alphabet of size q^m: Q^(n - rho - delta + 1)
 * with delta the code's separation under the edge-restricted adversary
 * (worst-case edge map) and under the transfer-only adversary respectively.
 * Exponents <= 0 and infinite separations are flagged degenerate with the
 * bound clamped to 1.
 */
struct NetworkBounds {
    BigInt bound_edge;
    BigInt bound_transfer;
    bool achieved_edge = false;
    bool achieved_transfer = false;
    bool degenerate = false;
};
NetworkBounds singleton_network_bounds(std::uint64_t code_size, ExtNat delta_edge,
                                       int delta_transfer, int n, int rho, int q, int m);

/// Row-space image of a matrix code, deduplicated in first-occurrence order;
/// injective reports whether no two codewords shared a row space.
struct LiftResult {
    SubspaceCode code;
    bool injective = false;
};
LiftResult lift_to_subspaces(const MatrixCode& c);

} // namespace netcode

#endif

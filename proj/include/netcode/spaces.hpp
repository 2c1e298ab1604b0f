#ifndef NETCODE_SPACES_HPP
#define NETCODE_SPACES_HPP

/**
 * Subspaces of F_q^m in canonical form.
 *
 * A subspace is held as its RREF basis with zero rows dropped, so equality is
 * plain byte equality and enumeration order is reproducible.
 */

#include <iosfwd>
#include <vector>

#include "netcode/ffmat.hpp"

namespace netcode {

class Subspace {
  public:
    Subspace() = default;
    /// The zero subspace of F_q^m.
    Subspace(Field f, int ambient);

    /// Canonical row space of any matrix with `ambient` columns.
    static Subspace row_space(const Matrix& x);

    const Field& field() const { return basis_.field(); }
    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    /// RREF basis, dim() x ambient().
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& row_vector) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool lex_less(const Subspace& a, const Subspace& b);

  private:
    Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// dim(<X> intersect <Y>) = rank X + rank Y - rank [X; Y], without
/// materializing subspaces.  X and Y need equal column counts.
int intersection_dim(const Matrix& x, const Matrix& y);

/// Number of d-dimensional subspaces of F_q^m (Gaussian binomial).
std::uint64_t gaussian_binomial(int m, int d, int q);
std::uint64_t subspace_count(const Field& f, int m);

/// All subspaces of F_q^m: dimensions ascending, pivot-column sets in
/// lexicographic order, free entries filled lexicographically.  Budget-checked.
std::vector<Subspace> enumerate_subspaces(const Field& f, int m);
std::vector<Subspace> enumerate_subspaces_of_dim(const Field& f, int m, int d);

/// Serialized as the basis matrix (possibly 0 rows).
void write_subspace(std::ostream& os, const Subspace& s);
Subspace read_subspace(std::istream& is);
std::string subspace_to_string(const Subspace& s);
Subspace subspace_from_string(const std::string& text);

} // namespace netcode

#endif

#include "netcode/spaces.hpp"

#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace netcode {

Subspace::Subspace(Field f, int ambient) : basis_(Matrix(std::move(f), 0, ambient)) {}

Subspace Subspace::row_space(const Matrix& x) {
    RrefResult rr = rref(x);
    Subspace s;
    s.basis_ = rr.r.rows_slice(0, static_cast<int>(rr.pivot_cols.size()));
    return s;
}

bool Subspace::contains(const Matrix& row_vector) const {
    if (row_vector.rows() != 1 || row_vector.cols() != ambient())
        throw ambient_mismatch("membership test needs a row vector of the ambient width");
    return rank(vstack(basis_, row_vector)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient() || other.field() != field())
        throw ambient_mismatch("containment test across different ambients");
    return rank(vstack(basis_, other.basis_)) == dim();
}

bool lex_less(const Subspace& a, const Subspace& b) { return lex_less(a.basis_, b.basis_); }

namespace {
void require_compatible(const Subspace& u, const Subspace& v) {
    u.field().require_same(v.field());
    if (u.ambient() != v.ambient())
        throw ambient_mismatch("subspace operands live in different ambients");
}
} // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    if (u.dim() == 0 || v.dim() == 0) return Subspace(u.field(), u.ambient());
    // Left-kernel vectors (c_u | c_v) of the stacked bases satisfy
    // c_u B_u = -(c_v B_v), so c_u B_u runs exactly over the intersection.
    Matrix stacked = vstack(u.basis(), v.basis());
    Matrix kernel = left_null_space(stacked);
    Matrix members(u.field(), kernel.rows(), u.ambient());
    for (int k = 0; k < kernel.rows(); ++k) {
        std::vector<int> head(u.dim());
        for (int i = 0; i < u.dim(); ++i) head[i] = i;
        Matrix cu = kernel.row(k).cols_subset(head);
        Matrix w = cu * u.basis();
        for (int j = 0; j < u.ambient(); ++j) members(k, j) = w(0, j);
    }
    return Subspace::row_space(members);
}

int intersection_dim(const Matrix& x, const Matrix& y) {
    x.field().require_same(y.field());
    if (x.cols() != y.cols()) throw ambient_mismatch("operands have different ambient widths");
    return rank(x) + rank(y) - rank(vstack(x, y));
}

std::uint64_t gaussian_binomial(int m, int d, int q) {
    if (d < 0 || d > m) return 0;
    // Full rational product in 128-bit scratch; the quotient is exact.
    unsigned __int128 nn = 1, dd = 1;
    for (int j = 0; j < d; ++j) {
        std::uint64_t nj = 1, dj = 1;
        for (int k = 0; k < m - j; ++k) nj *= q;
        for (int k = 0; k < j + 1; ++k) dj *= q;
        nn *= (nj - 1);
        dd *= (dj - 1);
    }
    return static_cast<std::uint64_t>(nn / dd);
}

std::uint64_t subspace_count(const Field& f, int m) {
    std::uint64_t total = 0;
    for (int d = 0; d <= m; ++d) total += gaussian_binomial(m, d, f.q());
    return total;
}

namespace {

// Emit all RREF matrices with the given pivot columns, free entries filled
// lexicographically (row-major, first free position most significant).
void emit_rref_fills(const Field& f, int m, const std::vector<int>& pivots,
                     std::vector<Subspace>& out) {
    const int d = static_cast<int>(pivots.size());
    std::vector<std::pair<int, int>> free_pos;
    for (int l = 0; l < d; ++l)
        for (int c = pivots[l] + 1; c < m; ++c) {
            bool is_pivot = false;
            for (int l2 = 0; l2 < d; ++l2)
                if (pivots[l2] == c) is_pivot = true;
            if (!is_pivot) free_pos.push_back({l, c});
        }
    const std::uint64_t fills = counted_power(f.q(), free_pos.size(), "subspace enumeration");
    for (std::uint64_t t = 0; t < fills; ++t) {
        Matrix basis(f, d, m);
        for (int l = 0; l < d; ++l) basis(l, pivots[l]) = 1;
        std::uint64_t v = t;
        for (size_t k = free_pos.size(); k-- > 0;) {
            basis(free_pos[k].first, free_pos[k].second) = static_cast<std::uint8_t>(v % f.q());
            v /= f.q();
        }
        out.push_back(Subspace::row_space(basis));
    }
}

void pivot_sets(int m, int d, std::vector<int>& cur, int start,
                const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == d) {
        fn(cur);
        return;
    }
    for (int c = start; c < m; ++c) {
        cur.push_back(c);
        pivot_sets(m, d, cur, c + 1, fn);
        cur.pop_back();
    }
}

} // namespace

std::vector<Subspace> enumerate_subspaces_of_dim(const Field& f, int m, int d) {
    if (d < 0 || d > m) return {};
    check_budget(gaussian_binomial(m, d, f.q()), "subspace enumeration");
    std::vector<Subspace> out;
    std::vector<int> cur;
    pivot_sets(m, d, cur, 0, [&](const std::vector<int>& pv) { emit_rref_fills(f, m, pv, out); });
    return out;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int m) {
    check_budget(subspace_count(f, m), "subspace enumeration");
    std::vector<Subspace> out;
    for (int d = 0; d <= m; ++d) {
        auto part = enumerate_subspaces_of_dim(f, m, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

void write_subspace(std::ostream& os, const Subspace& s) { write_matrix(os, s.basis()); }

Subspace read_subspace(std::istream& is) { return Subspace::row_space(read_matrix(is)); }

std::string subspace_to_string(const Subspace& s) { return matrix_to_string(s.basis()); }

Subspace subspace_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_subspace(is);
}

} // namespace netcode

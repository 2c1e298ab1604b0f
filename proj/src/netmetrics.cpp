#include "netcode/netmetrics.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace netcode {

namespace {

void check_coherent_shapes(const Matrix& a, const Matrix& x, const Matrix& y) {
    a.field().require_same(x.field());
    a.field().require_same(y.field());
    if (a.cols() != x.rows() || a.rows() != y.rows() || x.cols() != y.cols())
        throw shape_mismatch("transfer/input/output shapes disagree");
}

void check_pair_shapes(const Matrix& x1, const Matrix& x2) {
    x1.field().require_same(x2.field());
    if (x1.rows() != x2.rows() || x1.cols() != x2.cols())
        throw shape_mismatch("operand shapes disagree");
}

// k-subsets of {0..s-1} in lexicographic order; stops early when fn returns true.
bool for_each_subset(int s, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    if (k > s) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == s - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

int rank_distance(const Matrix& x, const Matrix& y) {
    check_pair_shapes(x, y);
    return rank(y - x);
}

int subspace_distance(const Subspace& u, const Subspace& v) {
    u.field().require_same(v.field());
    if (u.ambient() != v.ambient()) throw ambient_mismatch("subspace distance across ambients");
    return u.dim() + v.dim() - 2 * intersection_dim(u.basis(), v.basis());
}

int injection_distance(const Subspace& u, const Subspace& v) {
    u.field().require_same(v.field());
    if (u.ambient() != v.ambient()) throw ambient_mismatch("injection distance across ambients");
    return std::max(u.dim(), v.dim()) - intersection_dim(u.basis(), v.basis());
}

int injection_distance_mat(const Matrix& x, const Matrix& y) {
    return std::max(rank(x), rank(y)) - intersection_dim(x, y);
}

int row_weight(const Matrix& e) {
    int wt = 0;
    for (int i = 0; i < e.rows(); ++i) {
        for (int j = 0; j < e.cols(); ++j) {
            if (e(i, j) != 0) {
                ++wt;
                break;
            }
        }
    }
    return wt;
}

int coherent_discrepancy(const Matrix& a, const Matrix& x, const Matrix& y) {
    check_coherent_shapes(a, x, y);
    return rank(y - a * x);
}

int coherent_discrepancy_oracle(const Matrix& a, const Matrix& x, const Matrix& y) {
    check_coherent_shapes(a, x, y);
    const Matrix r = y - a * x;
    const Field& f = a.field();
    const int cap = std::min(r.rows(), r.cols());
    for (int inj = 0; inj <= cap; ++inj) {
        const std::uint64_t dcount =
            counted_power(f.q(), static_cast<std::uint64_t>(r.rows()) * inj, "packet matrix scan");
        const std::uint64_t zcount =
            counted_power(f.q(), static_cast<std::uint64_t>(inj) * r.cols(), "packet payload scan");
        if (dcount > enumeration_budget() / zcount)
            throw enumeration_budget_exceeded("packet factorization scan");
        MatrixStream ds(f, r.rows(), inj);
        Matrix d;
        while (ds.next(d)) {
            MatrixStream zs(f, inj, r.cols());
            Matrix z;
            while (zs.next(z)) {
                if (d * z == r) return inj;
            }
        }
    }
    // inj = rank(r) always admits a factorization
    throw unreachable_pair("no packet factorization found");
}

int coherent_delta(const Matrix& a, const Matrix& x1, const Matrix& x2) {
    check_pair_shapes(x1, x2);
    a.field().require_same(x1.field());
    if (a.cols() != x1.rows()) throw shape_mismatch("transfer/input shapes disagree");
    return rank(a * (x2 - x1));
}

int coherent_delta_oracle(const Matrix& a, const Matrix& x1, const Matrix& x2) {
    check_pair_shapes(x1, x2);
    a.field().require_same(x1.field());
    if (a.cols() != x1.rows()) throw shape_mismatch("transfer/input shapes disagree");
    counted_power(a.field().q(), static_cast<std::uint64_t>(a.rows()) * x1.cols(), "output scan");
    MatrixStream ys(a.field(), a.rows(), x1.cols());
    Matrix y;
    int best = INT_MAX;
    while (ys.next(y)) {
        best = std::min(best,
                        coherent_discrepancy(a, x1, y) + coherent_discrepancy(a, x2, y));
    }
    return best;
}

int coherent_delta_code(const Matrix& a, const std::vector<Matrix>& code) {
    if (code.size() < 2) throw singleton_code("separation needs two codewords");
    int best = INT_MAX;
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            if (code[i] == code[j]) throw identical_inputs("duplicate codeword");
            best = std::min(best, coherent_delta(a, code[i], code[j]));
        }
    }
    return best;
}

std::optional<Matrix> min_weight_edge_solution(const Matrix& f, const Matrix& r) {
    f.field().require_same(r.field());
    if (f.rows() != r.rows()) throw shape_mismatch("edge map/target row counts disagree");
    const int s = f.cols();
    if (s >= 63) throw enumeration_budget_exceeded("edge support search");
    check_budget(std::uint64_t(1) << s, "edge support search");
    std::optional<Matrix> out;
    for (int k = 0; k <= s && !out; ++k) {
        for_each_subset(s, k, [&](const std::vector<int>& sub) {
            auto part = solve_matrix(f.cols_subset(sub), r);
            if (!part) return false;
            Matrix e = zeros(f.field(), s, r.cols());
            for (int l = 0; l < k; ++l) {
                for (int j = 0; j < r.cols(); ++j) e(sub[l], j) = (*part)(l, j);
            }
            // first solvable support size: every row of the particular solution
            // is nonzero, else a smaller support would have been solvable
            out = e;
            return true;
        });
    }
    return out;
}

ExtNat yeung_discrepancy(const Matrix& a, const Matrix& f, const Matrix& x, const Matrix& y) {
    check_coherent_shapes(a, x, y);
    a.field().require_same(f.field());
    if (f.rows() != a.rows()) throw shape_mismatch("edge map/transfer row counts disagree");
    auto sol = min_weight_edge_solution(f, y - a * x);
    return sol ? ExtNat(row_weight(*sol)) : ExtNat::infinity();
}

ExtNat yeung_delta(const Matrix& a, const Matrix& f, const Matrix& x1, const Matrix& x2) {
    check_pair_shapes(x1, x2);
    a.field().require_same(x1.field());
    a.field().require_same(f.field());
    if (a.cols() != x1.rows() || f.rows() != a.rows())
        throw shape_mismatch("transfer/edge map/input shapes disagree");
    // outputs reachable from both ends differ by F(E1 - E2) = A(X2 - X1), and
    // row supports of a single solution can be partitioned between the two
    // ends, so the pair separation is the least weight solving that equation
    auto sol = min_weight_edge_solution(f, a * (x2 - x1));
    return sol ? ExtNat(row_weight(*sol)) : ExtNat::infinity();
}

ExtNat yeung_delta_code(const Matrix& a, const Matrix& f, const std::vector<Matrix>& code) {
    if (code.size() < 2) throw singleton_code("separation needs two codewords");
    ExtNat best = ExtNat::infinity();
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            if (code[i] == code[j]) throw identical_inputs("duplicate codeword");
            best = netcode::min(best, yeung_delta(a, f, code[i], code[j]));
        }
    }
    return best;
}

ExtNat min_discrepancy_over_edge_maps(const Matrix& a, const Matrix& x, const Matrix& y,
                                      int ell) {
    check_coherent_shapes(a, x, y);
    if (ell < 0) throw invalid_parameters("negative edge count");
    counted_power(a.field().q(), static_cast<std::uint64_t>(a.rows()) * ell, "edge map scan");
    MatrixStream fs(a.field(), a.rows(), ell);
    Matrix f;
    ExtNat best = ExtNat::infinity();
    while (fs.next(f)) {
        best = netcode::min(best, yeung_discrepancy(a, f, x, y));
        if (best == ExtNat(0)) break;
    }
    return best;
}

int noncoherent_discrepancy(const Matrix& x, const Matrix& y, int rho) {
    x.field().require_same(y.field());
    if (x.cols() != y.cols()) throw shape_mismatch("packet lengths disagree");
    if (rho < 0) throw invalid_parameters("negative rank deficiency allowance");
    return std::max(rank(x) - rho, rank(y)) - intersection_dim(x, y);
}

int noncoherent_discrepancy_oracle(const Matrix& x, const Matrix& y, int rho, int big_n) {
    x.field().require_same(y.field());
    if (x.cols() != y.cols()) throw shape_mismatch("packet lengths disagree");
    if (y.rows() != big_n) throw shape_mismatch("output row count disagrees");
    if (rho < 0) throw invalid_parameters("negative rank deficiency allowance");
    const int n = x.rows();
    const int need = std::max(0, n - rho);
    if (need > std::min(big_n, n))
        throw invalid_parameters("no transfer matrix meets the rank bound");
    counted_power(x.field().q(), static_cast<std::uint64_t>(big_n) * n, "transfer matrix scan");
    MatrixStream as(x.field(), big_n, n);
    Matrix a;
    int best = INT_MAX;
    while (as.next(a)) {
        if (rank(a) < need) continue;
        best = std::min(best, rank(y - a * x));
        if (best == 0) break;
    }
    return best;
}

int noncoherent_discrepancy_subspace_form(const Matrix& x, const Matrix& y, int rho) {
    x.field().require_same(y.field());
    if (x.cols() != y.cols()) throw shape_mismatch("packet lengths disagree");
    if (rho < 0) throw invalid_parameters("negative rank deficiency allowance");
    const int k = rank(x);
    const int s = rank(y);
    const int w = intersection_dim(x, y);
    const int num = (k + s - 2 * w) - rho + std::abs(k - s - rho);
    // num is even in both branches of the absolute value
    return num / 2;
}

int two_sided_discrepancy(const Matrix& x, const Matrix& y, int rho, int sigma, int big_l) {
    x.field().require_same(y.field());
    if (x.cols() != y.cols()) throw shape_mismatch("packet lengths disagree");
    if (rho < 0 || sigma < 0) throw invalid_parameters("negative rank deficiency allowance");
    if (big_l < std::max({x.rows() - rho, y.rows() - sigma, 0}))
        throw invalid_l("reduction row count below both rank bounds");
    const int c = std::max(rank(x) - rho, rank(y) - sigma) - intersection_dim(x, y);
    return std::max(c, 0);
}

int two_sided_discrepancy_oracle(const Matrix& x, const Matrix& y, int rho, int sigma,
                                 int big_l) {
    x.field().require_same(y.field());
    if (x.cols() != y.cols()) throw shape_mismatch("packet lengths disagree");
    if (rho < 0 || sigma < 0) throw invalid_parameters("negative rank deficiency allowance");
    if (big_l < std::max({x.rows() - rho, y.rows() - sigma, 0}))
        throw invalid_l("reduction row count below both rank bounds");
    const Field& f = x.field();
    const std::uint64_t acount =
        counted_power(f.q(), static_cast<std::uint64_t>(big_l) * x.rows(), "input reduction scan");
    const std::uint64_t bcount =
        counted_power(f.q(), static_cast<std::uint64_t>(big_l) * y.rows(), "output reduction scan");
    if (acount > enumeration_budget() / bcount)
        throw enumeration_budget_exceeded("two-sided reduction scan");
    const std::vector<Matrix> bs =
        enumerate_matrices_rank_at_least(f, big_l, y.rows(), std::max(0, y.rows() - sigma));
    MatrixStream as(f, big_l, x.rows());
    Matrix a;
    int best = INT_MAX;
    while (as.next(a)) {
        if (rank(a) < x.rows() - rho) continue;
        for (const Matrix& b : bs) {
            best = std::min(best, rank(b * y - a * x));
            if (best == 0) return best;
        }
    }
    return best;
}

int noncoherent_delta(const Matrix& x1, const Matrix& x2, int rho) {
    x1.field().require_same(x2.field());
    if (x1.cols() != x2.cols()) throw shape_mismatch("packet lengths disagree");
    if (rho < 0) throw invalid_parameters("negative rank deficiency allowance");
    return std::max(injection_distance_mat(x1, x2) - rho, 0);
}

int noncoherent_delta_oracle(const Matrix& x1, const Matrix& x2, int rho, int big_n) {
    x1.field().require_same(x2.field());
    if (x1.cols() != x2.cols()) throw shape_mismatch("packet lengths disagree");
    if (rho < 0) throw invalid_parameters("negative rank deficiency allowance");
    counted_power(x1.field().q(), static_cast<std::uint64_t>(big_n) * x1.cols(), "output scan");
    MatrixStream ys(x1.field(), big_n, x1.cols());
    Matrix y;
    int best = INT_MAX;
    while (ys.next(y)) {
        best = std::min(best, noncoherent_discrepancy(x1, y, rho) +
                                  noncoherent_discrepancy(x2, y, rho));
        if (best == 0) break;
    }
    return best;
}

int noncoherent_delta_code(const std::vector<Matrix>& code, int rho) {
    if (code.size() < 2) throw singleton_code("separation needs two codewords");
    int best = INT_MAX;
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            if (code[i] == code[j]) throw identical_inputs("duplicate codeword");
            best = std::min(best, noncoherent_delta(code[i], code[j], rho));
        }
    }
    return best;
}

Channel coherent_channel(const Matrix& a, int n, int m) {
    if (a.cols() != n) throw shape_mismatch("transfer column count disagrees");
    const Field f = a.field();
    const std::uint64_t nx = counted_power(f.q(), static_cast<std::uint64_t>(n) * m, "channel inputs");
    const std::uint64_t ny =
        counted_power(f.q(), static_cast<std::uint64_t>(a.rows()) * m, "channel outputs");
    const int big_n = a.rows();
    return channel_from_fn(
        nx, ny,
        [a, f, n, m, big_n](std::size_t xi, std::size_t yi) {
            return ExtNat(coherent_discrepancy(a, matrix_from_index(f, n, m, xi),
                                               matrix_from_index(f, big_n, m, yi)));
        },
        "coherent");
}

Channel yeung_channel(const Matrix& a, const Matrix& f, int n, int m) {
    if (a.cols() != n) throw shape_mismatch("transfer column count disagrees");
    a.field().require_same(f.field());
    if (f.rows() != a.rows()) throw shape_mismatch("edge map/transfer row counts disagree");
    const Field fld = a.field();
    const std::uint64_t nx =
        counted_power(fld.q(), static_cast<std::uint64_t>(n) * m, "channel inputs");
    const std::uint64_t ny =
        counted_power(fld.q(), static_cast<std::uint64_t>(a.rows()) * m, "channel outputs");
    const int big_n = a.rows();
    return channel_from_fn(
        nx, ny,
        [a, f, fld, n, m, big_n](std::size_t xi, std::size_t yi) {
            return yeung_discrepancy(a, f, matrix_from_index(fld, n, m, xi),
                                     matrix_from_index(fld, big_n, m, yi));
        },
        "yeung");
}

Channel noncoherent_channel(const Field& fld, int n, int big_n, int m, int rho) {
    if (rho < 0) throw invalid_parameters("negative rank deficiency allowance");
    if (big_n < n - rho) throw invalid_parameters("no transfer matrix meets the rank bound");
    const std::uint64_t nx =
        counted_power(fld.q(), static_cast<std::uint64_t>(n) * m, "channel inputs");
    const std::uint64_t ny =
        counted_power(fld.q(), static_cast<std::uint64_t>(big_n) * m, "channel outputs");
    return channel_from_fn(
        nx, ny,
        [fld, n, big_n, m, rho](std::size_t xi, std::size_t yi) {
            return ExtNat(noncoherent_discrepancy(matrix_from_index(fld, n, m, xi),
                                                  matrix_from_index(fld, big_n, m, yi), rho));
        },
        "noncoherent");
}

} // namespace netcode

#include "netcode/ffmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace netcode {

std::uint64_t enumeration_budget() {
    // Read every call so tests can flip the variable at runtime.
    if (const char* env = std::getenv("NETCODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t(1) << 24;
}

void check_budget(std::uint64_t count, const std::string& what) {
    if (count > enumeration_budget())
        throw enumeration_budget_exceeded(what + ": " + std::to_string(count) +
                                          " items exceed budget " +
                                          std::to_string(enumeration_budget()));
}

std::uint64_t counted_power(std::uint64_t base, std::uint64_t exp, const std::string& what) {
    const std::uint64_t budget = enumeration_budget();
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > budget / base)
            throw enumeration_budget_exceeded(what + ": " + std::to_string(base) + "^" +
                                              std::to_string(exp) + " exceeds budget " +
                                              std::to_string(budget));
        r *= base;
    }
    check_budget(r, what);
    return r;
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, index = degree.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    const int dm = poly_deg(m);
    int da = poly_deg(a);
    while (da >= dm) {
        // m is monic, so the quotient digit is just the leading coefficient.
        int c = a[da];
        for (int i = 0; i <= dm; ++i) {
            int k = da - dm + i;
            a[k] = ((a[k] - c * m[i]) % p + p) % p;
        }
        da = poly_deg(a);
    }
    a.resize(dm > 0 ? dm : 1, 0);
    return a;
}

bool poly_is_irreducible(const Poly& m, int p) {
    const int e = poly_deg(m);
    if (e <= 0) return false;
    if (e == 1) return true;
    // Trial division by every monic polynomial of degree 1..e/2.
    for (int d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly div(d + 1, 0);
            div[d] = 1;
            std::uint64_t v = t;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (poly_deg(poly_mod(m, div, p)) < 0) return false;
        }
    }
    return true;
}

int code_from_poly(const Poly& a, int p, int e) {
    int c = 0;
    for (int i = e - 1; i >= 0; --i) c = c * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return c;
}

Poly poly_from_code(int code, int p, int e) {
    Poly a(e > 0 ? e : 1, 0);
    for (int i = 0; i < e; ++i) {
        a[i] = code % p;
        code /= p;
    }
    return a;
}

} // namespace

Field Field::make(int p, int e, std::vector<int> modulus, int max_q) {
    if (!is_prime(p)) throw non_prime_characteristic("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw invalid_parameters("extension degree must be >= 1");
    std::uint64_t q64 = 1;
    for (int i = 0; i < e; ++i) {
        q64 *= static_cast<std::uint64_t>(p);
        if (q64 > static_cast<std::uint64_t>(max_q))
            throw field_too_large("field order exceeds bound " + std::to_string(max_q));
    }
    const int q = static_cast<int>(q64);

    if (modulus.empty()) {
        // Smallest monic irreducible of degree e, non-leading coefficients
        // enumerated as an ascending base-p integer.
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly m(e + 1, 0);
            m[e] = 1;
            std::uint64_t v = t;
            for (int i = 0; i < e; ++i) {
                m[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (poly_is_irreducible(m, p)) {
                modulus.assign(m.begin(), m.end());
                break;
            }
        }
    } else {
        if (static_cast<int>(modulus.size()) != e + 1 || modulus[e] != 1)
            throw invalid_parameters("modulus must be monic of degree e");
        for (int c : modulus)
            if (c < 0 || c >= p) throw invalid_parameters("modulus coefficient out of range");
        if (!poly_is_irreducible(modulus, p))
            throw reducible_modulus("modulus is reducible over GF(" + std::to_string(p) + ")");
    }

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = e;
    d->q = q;
    d->modulus = modulus;

    Poly mod_poly(modulus.begin(), modulus.end());
    auto raw_mul = [&](int a, int b) {
        Poly r = poly_mod(poly_mul(poly_from_code(a, p, e), poly_from_code(b, p, e), p), mod_poly, p);
        return code_from_poly(r, p, e);
    };

    d->add_tab.resize(static_cast<size_t>(q) * q);
    d->neg_tab.resize(q);
    for (int a = 0; a < q; ++a) {
        Poly pa = poly_from_code(a, p, e);
        Poly na(e, 0);
        for (int i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
        d->neg_tab[a] = static_cast<std::uint8_t>(code_from_poly(na, p, e));
        for (int b = 0; b < q; ++b) {
            Poly pb = poly_from_code(b, p, e);
            Poly s(e, 0);
            for (int i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
            d->add_tab[static_cast<size_t>(a) * q + b] = static_cast<std::uint8_t>(code_from_poly(s, p, e));
        }
    }

    // Smallest generator of the multiplicative group.
    int gen = 1;
    for (int g = 2; g < q; ++g) {
        int order = 1, x = g;
        while (x != 1) {
            x = raw_mul(x, g);
            ++order;
        }
        if (order == q - 1) {
            gen = g;
            break;
        }
    }

    d->exp_tab.resize(q - 1 > 0 ? q - 1 : 1);
    d->log_tab.assign(q, 0);
    int x = 1;
    for (int i = 0; i < q - 1; ++i) {
        d->exp_tab[i] = static_cast<std::uint8_t>(x);
        d->log_tab[x] = i;
        x = raw_mul(x, gen);
    }
    if (q == 2) {
        d->exp_tab[0] = 1;
        d->log_tab[1] = 0;
    }

    d->inv_tab.resize(q);
    for (int a = 1; a < q; ++a) {
        int l = d->log_tab[a];
        d->inv_tab[a] = d->exp_tab[(q - 1 - l) % (q - 1 > 0 ? q - 1 : 1)];
    }

    Field f;
    f.d_ = std::move(d);
    return f;
}

Field Field::from_order(int q, int max_q) {
    if (q < 2) throw invalid_parameters("field order must be >= 2");
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0, v = q;
    while (v > 1) {
        if (v % p != 0) throw non_prime_characteristic(std::to_string(q) + " is not a prime power");
        v /= p;
        ++e;
    }
    return make(p, e, {}, max_q);
}

std::uint8_t Field::pow(std::uint8_t a, std::uint64_t n) const {
    std::uint8_t r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus;
}

void Field::require_same(const Field& other) const {
    if (*this != other) throw field_mismatch("operands live in different fields");
}

Matrix::Matrix(Field f, int rows, int cols, std::vector<std::uint8_t> codes)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(codes)) {
    if (rows < 0 || cols < 0 || a_.size() != static_cast<size_t>(rows) * cols)
        throw shape_mismatch("entry count does not match shape");
    for (std::uint8_t c : a_)
        if (c >= f_.q()) throw invalid_parameters("entry code out of range for field");
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint8_t c) { return c == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::row(int i) const { return rows_slice(i, 1); }

Matrix Matrix::rows_slice(int first, int count) const {
    if (first < 0 || count < 0 || first + count > rows_) throw shape_mismatch("row slice out of range");
    Matrix r(f_, count, cols_);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(first + i, j);
    return r;
}

Matrix Matrix::cols_subset(const std::vector<int>& idx) const {
    Matrix r(f_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] < 0 || idx[j] >= cols_) throw shape_mismatch("column index out of range");
            r(i, static_cast<int>(j)) = (*this)(i, idx[j]);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    a.f_.require_same(b.f_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("matrix addition shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    a.f_.require_same(b.f_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("matrix subtraction shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& c : r.a_) c = f_.neg(c);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    a.f_.require_same(b.f_);
    if (a.cols_ != b.rows_) throw shape_mismatch("matrix product inner dimension mismatch");
    Matrix r(a.f_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const std::uint8_t aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const std::uint8_t v = a.f_.mul(aik, b(k, j));
                r(i, j) = a.f_.add(r(i, j), v);
            }
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool lex_less(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.a_ < b.a_;
}

Matrix zeros(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }

Matrix identity(const Field& f, int n) {
    Matrix r(f, n, n);
    for (int i = 0; i < n; ++i) r(i, i) = 1;
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    a.field().require_same(b.field());
    if (a.cols() != b.cols()) throw shape_mismatch("vstack column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    a.field().require_same(b.field());
    if (a.rows() != b.rows()) throw shape_mismatch("hstack row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

RrefResult rref(const Matrix& x) {
    const Field& f = x.field();
    Matrix r = x;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < r.rows(); ++i)
            if (r(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(piv, j));
        const std::uint8_t s = f.inv(r(row, col));
        if (s != 1)
            for (int j = 0; j < r.cols(); ++j) r(row, j) = f.mul(s, r(row, j));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            const std::uint8_t c = r(i, col);
            if (c == 0) continue;
            for (int j = 0; j < r.cols(); ++j) r(i, j) = f.sub(r(i, j), f.mul(c, r(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& x) {
    // Elimination only, no back-substitution.
    const Field& f = x.field();
    Matrix r = x;
    int rk = 0;
    for (int col = 0; col < r.cols() && rk < r.rows(); ++col) {
        int piv = -1;
        for (int i = rk; i < r.rows(); ++i)
            if (r(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = col; j < r.cols(); ++j) std::swap(r(rk, j), r(piv, j));
        const std::uint8_t s = f.inv(r(rk, col));
        for (int i = rk + 1; i < r.rows(); ++i) {
            const std::uint8_t c = r(i, col);
            if (c == 0) continue;
            const std::uint8_t cs = f.mul(c, s);
            for (int j = col; j < r.cols(); ++j) r(i, j) = f.sub(r(i, j), f.mul(cs, r(rk, j)));
        }
        ++rk;
    }
    return rk;
}

Matrix null_space(const Matrix& x) {
    RrefResult rr = rref(x);
    const int m = x.cols();
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < m; ++c) {
            if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix basis(x.field(), static_cast<int>(free_cols.size()), m);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        basis(static_cast<int>(k), free_cols[k]) = 1;
        for (size_t l = 0; l < rr.pivot_cols.size(); ++l)
            basis(static_cast<int>(k), rr.pivot_cols[l]) =
                x.field().neg(rr.r(static_cast<int>(l), free_cols[k]));
    }
    return basis;
}

Matrix left_null_space(const Matrix& x) { return null_space(x.transpose()); }

std::optional<Matrix> solve_left(const Matrix& x, const Matrix& target_row) {
    x.field().require_same(target_row.field());
    if (target_row.rows() != 1 || target_row.cols() != x.cols())
        throw shape_mismatch("target must be a row vector of matching width");
    auto e = solve_matrix(x.transpose(), target_row.transpose());
    if (!e) return std::nullopt;
    return e->transpose();
}

std::optional<Matrix> solve_matrix(const Matrix& f, const Matrix& r) {
    f.field().require_same(r.field());
    if (f.rows() != r.rows()) throw shape_mismatch("solve: row counts differ");
    RrefResult rr = rref(hstack(f, r));
    for (int c : rr.pivot_cols)
        if (c >= f.cols()) return std::nullopt;
    Matrix e(f.field(), f.cols(), r.cols());
    for (size_t l = 0; l < rr.pivot_cols.size(); ++l)
        for (int j = 0; j < r.cols(); ++j)
            e(rr.pivot_cols[l], j) = rr.r(static_cast<int>(l), f.cols() + j);
    return e;
}

FullRankDecomposition full_rank_decomposition(const Matrix& x) {
    RrefResult rr = rref(x);
    const int r = static_cast<int>(rr.pivot_cols.size());
    Matrix q = rr.r.rows_slice(0, r);
    Matrix p = x.cols_subset(rr.pivot_cols);
    return {std::move(p), std::move(q)};
}

RankSplit split_by_rank(const Matrix& x, int i) {
    FullRankDecomposition d = full_rank_decomposition(x);
    const int r = d.q.rows();
    if (i < 0 || i > r)
        throw split_out_of_range("split index " + std::to_string(i) + " outside [0, " +
                                 std::to_string(r) + "]");
    std::vector<int> head(i), tail(r - i);
    std::iota(head.begin(), head.end(), 0);
    std::iota(tail.begin(), tail.end(), i);
    Matrix w = d.p.cols_subset(head) * d.q.rows_slice(0, i);
    Matrix w2 = d.p.cols_subset(tail) * d.q.rows_slice(i, r - i);
    return {std::move(w), std::move(w2)};
}

Matrix matrix_from_index(const Field& f, int rows, int cols, std::uint64_t index) {
    Matrix x(f, rows, cols);
    for (int i = rows - 1; i >= 0; --i)
        for (int j = cols - 1; j >= 0; --j) {
            x(i, j) = static_cast<std::uint8_t>(index % f.q());
            index /= f.q();
        }
    if (index != 0) throw invalid_parameters("matrix index out of range");
    return x;
}

std::uint64_t matrix_to_index(const Matrix& x) {
    std::uint64_t idx = 0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) idx = idx * x.field().q() + x(i, j);
    return idx;
}

MatrixStream::MatrixStream(Field f, int rows, int cols) : f_(std::move(f)), rows_(rows), cols_(cols) {
    total_ = counted_power(f_.q(), static_cast<std::uint64_t>(rows) * cols, "matrix enumeration");
}

bool MatrixStream::next(Matrix& out) {
    if (idx_ >= total_) return false;
    out = matrix_from_index(f_, rows_, cols_, idx_++);
    return true;
}

std::vector<Matrix> enumerate_matrices(const Field& f, int rows, int cols) {
    MatrixStream s(f, rows, cols);
    std::vector<Matrix> r;
    r.reserve(s.size());
    Matrix x;
    while (s.next(x)) r.push_back(x);
    return r;
}

std::vector<Matrix> enumerate_matrices_of_rank(const Field& f, int rows, int cols, int rk) {
    std::vector<Matrix> r;
    MatrixStream s(f, rows, cols);
    Matrix x;
    while (s.next(x))
        if (rank(x) == rk) r.push_back(x);
    return r;
}

std::vector<Matrix> enumerate_matrices_rank_at_least(const Field& f, int rows, int cols, int rk) {
    std::vector<Matrix> r;
    MatrixStream s(f, rows, cols);
    Matrix x;
    while (s.next(x))
        if (rank(x) >= rk) r.push_back(x);
    return r;
}

void write_matrix(std::ostream& os, const Matrix& x) {
    os << x.field().q() << ' ' << x.rows() << ' ' << x.cols() << '\n';
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) {
            if (j) os << ' ';
            os << static_cast<int>(x(i, j));
        }
        os << '\n';
    }
}

std::string matrix_to_string(const Matrix& x) {
    std::ostringstream os;
    write_matrix(os, x);
    return os.str();
}

Matrix read_matrix(std::istream& is) {
    long long q = 0, rows = -1, cols = -1;
    if (!(is >> q >> rows >> cols)) throw parse_error("matrix header: expected 'q rows cols'");
    if (q < 2 || rows < 0 || cols < 0) throw parse_error("matrix header values out of range");
    Field f = Field::from_order(static_cast<int>(q));
    Matrix x(f, static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long c;
            if (!(is >> c)) throw parse_error("matrix body: missing entries");
            if (c < 0 || c >= q) throw parse_error("matrix entry out of range for field");
            x(i, j) = static_cast<std::uint8_t>(c);
        }
    return x;
}

Matrix matrix_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_matrix(is);
}

void write_matrix_list(std::ostream& os, const std::vector<Matrix>& xs) {
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << '\n';
        write_matrix(os, xs[i]);
    }
}

std::vector<Matrix> read_matrix_list(std::istream& is) {
    std::vector<Matrix> r;
    while (true) {
        // Peek for another block: skip whitespace, then expect a digit.
        is >> std::ws;
        if (!is.good() || is.peek() == std::char_traits<char>::eof()) break;
        r.push_back(read_matrix(is));
    }
    return r;
}

} // namespace netcode

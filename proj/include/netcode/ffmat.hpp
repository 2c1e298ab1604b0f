#ifndef NETCODE_FFMAT_HPP
#define NETCODE_FFMAT_HPP

/**
 * Finite fields GF(p^e) with explicit modulus, and dense matrices over them.
 *
 * Elements are integer codes in [0, q): the base-p digit string of a code is
 * the coefficient vector of the polynomial residue (least significant digit =
 * constant term).  Multiplication runs through log/antilog tables built from a
 * generator found at construction time.  Fields are capped at q <= 16 by
 * default so exhaustive sweeps stay desk-sized.
 */

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "netcode/errors.hpp"

namespace netcode {

/// Exhaustive-enumeration guard.  Reads NETCODE_BUDGET once (default 2^24).
std::uint64_t enumeration_budget();
void check_budget(std::uint64_t count, const std::string& what);
/// q^(rows*cols) without overflow; throws enumeration_budget_exceeded past the budget.
std::uint64_t counted_power(std::uint64_t base, std::uint64_t exp, const std::string& what);

class Field;

namespace detail {
struct FieldData {
    int p = 0;
    int e = 0;
    int q = 0;
    std::vector<int> modulus;          // monic, degree e, modulus[i] = coeff of x^i
    std::vector<std::uint8_t> exp_tab; // exp_tab[i] = g^i, i in [0, q-1)
    std::vector<int> log_tab;          // log_tab[c] = i with g^i = c, log_tab[0] unused
    std::vector<std::uint8_t> add_tab; // q*q, digit-wise base-p addition
    std::vector<std::uint8_t> neg_tab;
    std::vector<std::uint8_t> inv_tab; // inv_tab[0] unused
};
} // namespace detail

/// Immutable field handle with value semantics; copies share tables.
class Field {
  public:
    Field() = default;

    /// Build GF(p^e).  Default modulus: lexicographically smallest monic
    /// irreducible of degree e over GF(p) (non-leading coefficients read as a
    /// base-p integer).  max_q caps the field size.
    static Field make(int p, int e = 1, std::vector<int> modulus = {}, int max_q = 16);

    /// Field with q elements; (p, e) recovered from the prime factorization.
    static Field from_order(int q, int max_q = 16);

    bool valid() const { return d_ != nullptr; }
    int p() const { return d_->p; }
    int e() const { return d_->e; }
    int q() const { return d_->q; }
    const std::vector<int>& modulus() const { return d_->modulus; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return d_->add_tab[a * d_->q + b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, d_->neg_tab[b]); }
    std::uint8_t neg(std::uint8_t a) const { return d_->neg_tab[a]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        if (a == 0 || b == 0) return 0;
        int s = d_->log_tab[a] + d_->log_tab[b];
        if (s >= d_->q - 1) s -= d_->q - 1;
        return d_->exp_tab[s];
    }
    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw division_by_zero("inverse of zero");
        return d_->inv_tab[a];
    }
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }
    std::uint8_t pow(std::uint8_t a, std::uint64_t n) const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    void require_same(const Field& other) const;

  private:
    std::shared_ptr<const detail::FieldData> d_;
};

/// Scalar wrapper for the element-level API; checks field agreement.
class Fq {
  public:
    Fq(Field f, std::uint8_t code) : f_(std::move(f)), c_(code) {
        if (c_ >= f_.q()) throw invalid_parameters("element code out of range");
    }
    const Field& field() const { return f_; }
    std::uint8_t code() const { return c_; }

    friend Fq operator+(const Fq& a, const Fq& b) {
        a.f_.require_same(b.f_);
        return Fq(a.f_, a.f_.add(a.c_, b.c_));
    }
    friend Fq operator-(const Fq& a, const Fq& b) {
        a.f_.require_same(b.f_);
        return Fq(a.f_, a.f_.sub(a.c_, b.c_));
    }
    friend Fq operator*(const Fq& a, const Fq& b) {
        a.f_.require_same(b.f_);
        return Fq(a.f_, a.f_.mul(a.c_, b.c_));
    }
    friend Fq operator/(const Fq& a, const Fq& b) {
        a.f_.require_same(b.f_);
        return Fq(a.f_, a.f_.div(a.c_, b.c_));
    }
    Fq operator-() const { return Fq(f_, f_.neg(c_)); }
    Fq inv() const { return Fq(f_, f_.inv(c_)); }
    friend bool operator==(const Fq& a, const Fq& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

  private:
    Field f_;
    std::uint8_t c_;
};

/// Dense row-major matrix over a shared field.  0xN and Nx0 shapes are legal.
class Matrix {
  public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw shape_mismatch("negative matrix shape");
    }
    /// Row-major initialization from codes.
    Matrix(Field f, int rows, int cols, std::vector<std::uint8_t> codes);

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint8_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    std::uint8_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Fq elem(int i, int j) const { return Fq(f_, (*this)(i, j)); }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix row(int i) const;
    Matrix rows_slice(int first, int count) const;
    Matrix cols_subset(const std::vector<int>& idx) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Weak ordering on (rows, cols, entries); used for deterministic tie-breaks.
    friend bool lex_less(const Matrix& a, const Matrix& b);

  private:
    Field f_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> a_;
};

Matrix zeros(const Field& f, int rows, int cols);
Matrix identity(const Field& f, int n);
/// Stack a on top of b (column counts must agree).
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix r;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form with pivot column record.
RrefResult rref(const Matrix& x);
int rank(const Matrix& x);

/// Rows form a basis of { v : v * x = 0 } (left null space).
Matrix left_null_space(const Matrix& x);
/// Rows form a basis of { v : x * v^T = 0 } (right null space).
Matrix null_space(const Matrix& x);

/// One solution c (1 x rows(x)) of c * x = target, if any.
std::optional<Matrix> solve_left(const Matrix& x, const Matrix& target_row);
/// One solution E of f * E = r with E shaped cols(f) x cols(r), if any.
std::optional<Matrix> solve_matrix(const Matrix& f, const Matrix& r);

/// X = P * Q with P full column rank r, Q full row rank r, r = rank X.
/// Deterministic: Q is the nonzero RREF rows, P the pivot columns of X.
struct FullRankDecomposition {
    Matrix p;
    Matrix q;
};
FullRankDecomposition full_rank_decomposition(const Matrix& x);

/// W + W2 = X with rank(W) = i and rank(W2) = rank(X) - i.
/// Throws split_out_of_range unless 0 <= i <= rank(X).
struct RankSplit {
    Matrix w;
    Matrix w2;
};
RankSplit split_by_rank(const Matrix& x, int i);

/// Index <-> matrix bijection: the index is the row-major entry string read as
/// a base-q integer, entry (0,0) most significant.
Matrix matrix_from_index(const Field& f, int rows, int cols, std::uint64_t index);
std::uint64_t matrix_to_index(const Matrix& x);

/// Restartable lexicographic stream over all rows x cols matrices.
class MatrixStream {
  public:
    MatrixStream(Field f, int rows, int cols);
    std::uint64_t size() const { return total_; }
    bool next(Matrix& out);
    void reset() { idx_ = 0; }

  private:
    Field f_;
    int rows_, cols_;
    std::uint64_t total_, idx_ = 0;
};

/// Materialized enumeration with optional rank filter; budget-checked.
std::vector<Matrix> enumerate_matrices(const Field& f, int rows, int cols);
std::vector<Matrix> enumerate_matrices_of_rank(const Field& f, int rows, int cols, int r);
std::vector<Matrix> enumerate_matrices_rank_at_least(const Field& f, int rows, int cols, int r);

/// Text format: header "q rows cols", then one line of codes per row.
void write_matrix(std::ostream& os, const Matrix& x);
std::string matrix_to_string(const Matrix& x);
Matrix read_matrix(std::istream& is);
Matrix matrix_from_string(const std::string& text);
/// Blank-line-separated blocks.
void write_matrix_list(std::ostream& os, const std::vector<Matrix>& xs);
std::vector<Matrix> read_matrix_list(std::istream& is);

} // namespace netcode

#endif

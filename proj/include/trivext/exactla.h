#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivext::exactla {

using Scalar = mpq_class;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    unsigned long p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(unsigned long p);
    /* Accepts "q", "Q" or "fp:<p>". */
    static FieldSpec parse(const std::string& s);

    bool is_prime() const { return kind == Kind::prime; }
    std::string name() const;
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    Scalar reduce(const Scalar& x) const;
    Scalar from_string(const std::string& s) const;
    std::string to_string(const Scalar& x) const;
    Scalar inv(const Scalar& x) const;
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    /* acc += a*b, reduced. */
    void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;
    void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;
};

bool is_prime_number(unsigned long n);

/* Dense row-major matrix over a FieldSpec. Entries are always kept reduced. */
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec f, int rows, int cols);

    static Matrix identity(FieldSpec f, int n);
    static Matrix zero(FieldSpec f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix column(FieldSpec f, const std::vector<Scalar>& v);
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);
    static Matrix hcat(FieldSpec f, int rows, const std::vector<Matrix>& parts);
    static Matrix vcat(FieldSpec f, int cols, const std::vector<Matrix>& parts);
    static Matrix block_diag(FieldSpec f, const std::vector<Matrix>& parts);
    /* Kronecker product a (x) b. */
    static Matrix kron(const Matrix& a, const Matrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& operator()(int i, int j) const { return data_[idx(i, j)]; }
    void set(int i, int j, const Scalar& v) { data_[idx(i, j)] = field_.reduce(v); }
    /* Raw access; the caller guarantees the stored value is reduced. */
    Scalar& raw(int i, int j) { return data_[idx(i, j)]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix& operator+=(const Matrix& o);
    void add_scaled(const Matrix& o, const Scalar& s);
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Matrix& b);
    Matrix col(int j) const { return block(0, j, rows_, 1); }
    Matrix select_cols(const std::vector<int>& js) const;
    Matrix select_rows(const std::vector<int>& is) const;
    std::vector<Scalar> col_vector(int j) const;

    bool is_zero() const;
    bool is_identity() const;
    int nnz() const;

    std::string str() const;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
    void check_same(const Matrix& o, const char* what) const;

    FieldSpec field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

struct Rref {
    Matrix reduced;
    std::vector<int> pivots;
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);
/* Columns spanning the null space; one column per free variable of the rref. */
Matrix kernel_basis(const Matrix& m);
/* x with m*x = b, or nullopt when inconsistent. Throws on shape mismatch. */
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
/* Independent columns of m spanning its column space (the pivot columns). */
Matrix image_basis(const Matrix& m);

/*
 * Incrementally maintained subspace of k^n in reduced echelon form.
 * Rows are stored so that each pivot column is zero in every other row.
 */
class Echelon {
public:
    Echelon(FieldSpec f, int n);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const FieldSpec& field() const { return field_; }

    /* Reduces v in place modulo the span; returns true if v became zero. */
    bool reduce(std::vector<Scalar>& v) const;
    /* Adds v to the span; returns false if it was already contained. */
    bool add(std::vector<Scalar> v);
    void add_columns(const Matrix& m);
    bool contains(std::vector<Scalar> v) const { return reduce(v); }

    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<int> free_columns() const;
    /* Basis of the span as matrix columns. */
    Matrix basis() const;
    /* Columns spanning {v : r.v = 0 for every stored row r}. */
    Matrix null_space() const;
    /* Coordinates of v with respect to basis(); v must lie in the span. */
    std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;

private:
    FieldSpec field_;
    int n_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
    std::vector<int> pivot_row_;
};

}  // namespace trivext::exactla

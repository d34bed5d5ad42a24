#include "trivext/exactla.h"

#include <fmt/core.h>

#include <algorithm>
#include <sstream>

namespace trivext::exactla {

bool is_prime_number(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(unsigned long p)
{
    if (!is_prime_number(p))
        throw FieldError(fmt::format("{} is not prime", p));
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& s)
{
    if (s == "q" || s == "Q")
        return rationals();
    if (s.rfind("fp:", 0) == 0) {
        try {
            size_t pos = 0;
            unsigned long p = std::stoul(s.substr(3), &pos);
            if (pos + 3 == s.size())
                return prime(p);
        }
        catch (const std::logic_error&) {
        }
    }
    throw FieldError("field must be 'q' or 'fp:<prime>', got '" + s + "'");
}

std::string FieldSpec::name() const
{
    return is_prime() ? fmt::format("fp:{}", p) : std::string("q");
}

Scalar FieldSpec::reduce(const Scalar& x) const
{
    if (!is_prime())
        return x;
    mpz_class P(p);
    mpz_class num = x.get_num() % P;
    mpz_class den = x.get_den() % P;
    if (den == 0)
        throw FieldError(fmt::format("denominator divisible by {}", p));
    if (den != 1) {
        mpz_class di;
        mpz_invert(di.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
        num = num * di % P;
    }
    if (num < 0)
        num += P;
    return Scalar(num);
}

Scalar FieldSpec::from_string(const std::string& s) const
{
    Scalar v;
    if (v.set_str(s, 10) != 0)
        throw FieldError("malformed scalar '" + s + "'");
    v.canonicalize();
    if (v.get_den() == 0)
        throw FieldError("zero denominator in '" + s + "'");
    return reduce(v);
}

std::string FieldSpec::to_string(const Scalar& x) const
{
    return x.get_str(10);
}

Scalar FieldSpec::inv(const Scalar& x) const
{
    if (sgn(x) == 0)
        throw FieldError("inverse of zero");
    if (!is_prime())
        return 1 / x;
    mpz_class P(p), r;
    mpz_class n = x.get_num();
    mpz_invert(r.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
    return Scalar(r);
}

void FieldSpec::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const
{
    if (!is_prime()) {
        acc += a * b;
        return;
    }
    mpz_class t = a.get_num() * b.get_num() + acc.get_num();
    mpz_fdiv_r_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    acc = Scalar(t);
}

void FieldSpec::sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const
{
    if (!is_prime()) {
        acc -= a * b;
        return;
    }
    mpz_class t = acc.get_num() - a.get_num() * b.get_num();
    mpz_fdiv_r_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    acc = Scalar(t);
}

Matrix::Matrix(FieldSpec f, int rows, int cols) : field_(f), rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix shape");
    data_.assign(static_cast<size_t>(rows) * cols, Scalar(0));
}

Matrix Matrix::identity(FieldSpec f, int n)
{
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        m.data_[m.idx(i, i)] = 1;
    return m;
}

Matrix Matrix::column(FieldSpec f, const std::vector<Scalar>& v)
{
    Matrix m(f, static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i)
        m.set(static_cast<int>(i), 0, v[i]);
    return m;
}

void Matrix::check_same(const Matrix& o, const char* what) const
{
    if (field_ != o.field_)
        throw std::invalid_argument(std::string(what) + ": field mismatch");
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b)
{
    a.check_same(b, "hcat");
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hcat: row mismatch");
    Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b)
{
    a.check_same(b, "vcat");
    if (a.cols_ != b.cols_)
        throw std::invalid_argument("vcat: column mismatch");
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
}

Matrix Matrix::hcat(FieldSpec f, int rows, const std::vector<Matrix>& parts)
{
    int c = 0;
    for (auto& p : parts) {
        if (p.rows_ != rows)
            throw std::invalid_argument("hcat: row mismatch");
        c += p.cols_;
    }
    Matrix m(f, rows, c);
    c = 0;
    for (auto& p : parts) {
        m.set_block(0, c, p);
        c += p.cols_;
    }
    return m;
}

Matrix Matrix::vcat(FieldSpec f, int cols, const std::vector<Matrix>& parts)
{
    int r = 0;
    for (auto& p : parts) {
        if (p.cols_ != cols)
            throw std::invalid_argument("vcat: column mismatch");
        r += p.rows_;
    }
    Matrix m(f, r, cols);
    r = 0;
    for (auto& p : parts) {
        m.set_block(r, 0, p);
        r += p.rows_;
    }
    return m;
}

Matrix Matrix::block_diag(FieldSpec f, const std::vector<Matrix>& parts)
{
    int r = 0, c = 0;
    for (auto& p : parts) {
        r += p.rows_;
        c += p.cols_;
    }
    Matrix m(f, r, c);
    r = c = 0;
    for (auto& p : parts) {
        m.set_block(r, c, p);
        r += p.rows_;
        c += p.cols_;
    }
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b)
{
    a.check_same(b, "kron");
    const FieldSpec& f = a.field_;
    Matrix m(f, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            const Scalar& x = a(i, j);
            if (sgn(x) == 0)
                continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    if (sgn(b(k, l)) != 0)
                        m.data_[m.idx(i * b.rows_ + k, j * b.cols_ + l)] = f.mul(x, b(k, l));
        }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    check_same(o, "multiply");
    if (cols_ != o.rows_)
        throw std::invalid_argument(fmt::format("multiply: shape {}x{} * {}x{}", rows_, cols_, o.rows_, o.cols_));
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = data_[idx(i, k)];
            if (sgn(x) == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.data_[o.idx(k, j)];
                if (sgn(y) != 0)
                    field_.add_mul(m.data_[m.idx(i, j)], x, y);
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix m = *this;
    m += o;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    check_same(o, "add");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("add: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0)
            data_[i] = field_.add(data_[i], o.data_[i]);
    return *this;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s)
{
    check_same(o, "add_scaled");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("add_scaled: shape mismatch");
    if (sgn(s) == 0)
        return;
    for (size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0)
            field_.add_mul(data_[i], o.data_[i], s);
}

Matrix Matrix::operator-(const Matrix& o) const
{
    Matrix m = *this;
    m.add_scaled(o, Scalar(-1));
    return m;
}

Matrix Matrix::operator-() const
{
    return scaled(Scalar(-1));
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        if (sgn(data_[i]) != 0)
            m.data_[i] = field_.mul(data_[i], s);
    return m;
}

bool Matrix::operator==(const Matrix& o) const
{
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const
{
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.data_[m.idx(j, i)] = data_[idx(i, j)];
    return m;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const
{
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("block out of range");
    Matrix m(field_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            m.data_[m.idx(i, j)] = data_[idx(r0 + i, c0 + j)];
    return m;
}

void Matrix::set_block(int r0, int c0, const Matrix& b)
{
    if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("set_block out of range");
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j)
            data_[idx(r0 + i, c0 + j)] = b.data_[b.idx(i, j)];
}

Matrix Matrix::select_cols(const std::vector<int>& js) const
{
    Matrix m(field_, rows_, static_cast<int>(js.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < js.size(); ++j)
            m.data_[m.idx(i, static_cast<int>(j))] = data_[idx(i, js[j])];
    return m;
}

Matrix Matrix::select_rows(const std::vector<int>& is) const
{
    Matrix m(field_, static_cast<int>(is.size()), cols_);
    for (size_t i = 0; i < is.size(); ++i)
        for (int j = 0; j < cols_; ++j)
            m.data_[m.idx(static_cast<int>(i), j)] = data_[idx(is[i], j)];
    return m;
}

std::vector<Scalar> Matrix::col_vector(int j) const
{
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = data_[idx(i, j)];
    return v;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (data_[idx(i, j)] != (i == j ? 1 : 0))
                return false;
    return true;
}

int Matrix::nnz() const
{
    return static_cast<int>(std::count_if(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) != 0; }));
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << data_[idx(i, j)].get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

/* In-place Gauss-Jordan on a row-major buffer; pivots on the first nonzero entry. */
std::vector<int> gauss_jordan(const FieldSpec& f, int rows, int cols, std::vector<std::vector<Scalar>>& a, int ncols_pivot)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols_pivot && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(a[r], a[sel]);
        Scalar pinv = f.inv(a[r][c]);
        for (int j = c; j < cols; ++j)
            if (sgn(a[r][j]) != 0)
                a[r][j] = f.mul(a[r][j], pinv);
        std::vector<int> nz;
        for (int j = c; j < cols; ++j)
            if (sgn(a[r][j]) != 0)
                nz.push_back(j);
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0)
                continue;
            Scalar factor = a[i][c];
            for (int j : nz)
                f.sub_mul(a[i][j], factor, a[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> to_rows(const Matrix& m, int extra_cols = 0)
{
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols() + extra_cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            a[i][j] = m(i, j);
    return a;
}

}  // namespace

Rref rref(const Matrix& m)
{
    auto a = to_rows(m);
    auto piv = gauss_jordan(m.field(), m.rows(), m.cols(), a, m.cols());
    Matrix r(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.raw(i, j) = a[i][j];
    return {std::move(r), std::move(piv)};
}

int rank(const Matrix& m)
{
    auto a = to_rows(m);
    return static_cast<int>(gauss_jordan(m.field(), m.rows(), m.cols(), a, m.cols()).size());
}

Matrix kernel_basis(const Matrix& m)
{
    auto a = to_rows(m);
    auto piv = gauss_jordan(m.field(), m.rows(), m.cols(), a, m.cols());
    std::vector<char> is_piv(m.cols(), 0);
    for (int p : piv)
        is_piv[p] = 1;
    std::vector<int> free;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j])
            free.push_back(j);
    Matrix k(m.field(), m.cols(), static_cast<int>(free.size()));
    for (size_t t = 0; t < free.size(); ++t) {
        int fj = free[t];
        k.raw(fj, static_cast<int>(t)) = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            if (sgn(a[r][fj]) != 0)
                k.raw(piv[r], static_cast<int>(t)) = m.field().neg(a[r][fj]);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b)
{
    if (m.field() != b.field())
        throw std::invalid_argument("solve: field mismatch");
    if (m.rows() != b.rows())
        throw std::invalid_argument(fmt::format("solve: shape mismatch {}x{} vs {}x{}", m.rows(), m.cols(), b.rows(), b.cols()));
    const FieldSpec& f = m.field();
    int n = m.cols(), nb = b.cols();
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(n + nb));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = m(i, j);
        for (int j = 0; j < nb; ++j)
            a[i][n + j] = b(i, j);
    }
    auto piv = gauss_jordan(f, m.rows(), n + nb, a, n);
    for (size_t i = piv.size(); i < a.size(); ++i)
        for (int j = 0; j < nb; ++j)
            if (sgn(a[i][n + j]) != 0)
                return std::nullopt;
    Matrix x(f, n, nb);
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < nb; ++j)
            x.raw(piv[r], j) = a[r][n + j];
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix image_basis(const Matrix& m)
{
    auto a = to_rows(m);
    auto piv = gauss_jordan(m.field(), m.rows(), m.cols(), a, m.cols());
    return m.select_cols(piv);
}

Echelon::Echelon(FieldSpec f, int n) : field_(f), n_(n), pivot_row_(n, -1) {}

bool Echelon::reduce(std::vector<Scalar>& v) const
{
    bool zero = true;
    for (size_t r = 0; r < rows_.size(); ++r) {
        int p = pivots_[r];
        if (sgn(v[p]) == 0)
            continue;
        Scalar factor = v[p];
        const auto& row = rows_[r];
        for (int j = 0; j < n_; ++j)
            if (sgn(row[j]) != 0)
                field_.sub_mul(v[j], factor, row[j]);
    }
    for (auto& x : v)
        if (sgn(x) != 0) {
            zero = false;
            break;
        }
    return zero;
}

bool Echelon::add(std::vector<Scalar> v)
{
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("Echelon::add: length mismatch");
    if (reduce(v))
        return false;
    int p = 0;
    while (sgn(v[p]) == 0)
        ++p;
    Scalar pinv = field_.inv(v[p]);
    for (auto& x : v)
        if (sgn(x) != 0)
            x = field_.mul(x, pinv);
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0)
            continue;
        Scalar factor = row[p];
        for (int j = 0; j < n_; ++j)
            if (sgn(v[j]) != 0)
                field_.sub_mul(row[j], factor, v[j]);
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

void Echelon::add_columns(const Matrix& m)
{
    for (int j = 0; j < m.cols(); ++j)
        add(m.col_vector(j));
}

std::vector<int> Echelon::free_columns() const
{
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (pivot_row_[j] < 0)
            out.push_back(j);
    return out;
}

Matrix Echelon::basis() const
{
    Matrix m(field_, n_, dim());
    for (int r = 0; r < dim(); ++r)
        for (int j = 0; j < n_; ++j)
            m.raw(j, r) = rows_[r][j];
    return m;
}

Matrix Echelon::null_space() const
{
    auto fc = free_columns();
    Matrix k(field_, n_, static_cast<int>(fc.size()));
    for (size_t t = 0; t < fc.size(); ++t) {
        int j = fc[t];
        k.raw(j, static_cast<int>(t)) = 1;
        for (size_t r = 0; r < rows_.size(); ++r)
            if (sgn(rows_[r][j]) != 0)
                k.raw(pivots_[r], static_cast<int>(t)) = field_.neg(rows_[r][j]);
    }
    return k;
}

std::vector<Scalar> Echelon::coordinates(const std::vector<Scalar>& v) const
{
    // Rows are fully reduced, so the coefficient of row r is the entry at its pivot.
    std::vector<Scalar> c(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r)
        c[r] = v[pivots_[r]];
    return c;
}

}  // namespace trivext::exactla

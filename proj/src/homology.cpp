#include "trivext/homology.h"

#include <fmt/core.h>

#include <algorithm>
#include <climits>
#include <random>
#include <stdexcept>

namespace trivext::homology {

using exactla::Echelon;
using modrep::Cover;

namespace {

constexpr int kNothingValid = INT_MAX / 4;
constexpr int kUnknownBound = DimensionValue::unknown_bound;

Matrix zeros(const FieldSpec& f, int r, int c)
{
    return Matrix(f, r, c);
}

struct Sub {
    RightModule module;
    /* Columns of the ambient space forming the basis of the submodule. */
    Matrix basis;
};

Sub make_sub(const RightModule& m, const Matrix& cols)
{
    Echelon e(m.field(), m.dim);
    e.add_columns(cols);
    Sub s;
    s.basis = e.basis();
    s.module.alg = m.alg;
    s.module.dim = s.basis.cols();
    for (int j = 0; j < m.alg->dim; ++j) {
        Matrix img = m.act[j] * s.basis;
        Matrix c(m.field(), s.module.dim, img.cols());
        for (int q = 0; q < img.cols(); ++q) {
            auto co = e.coordinates(img.col_vector(q));
            for (int r = 0; r < s.module.dim; ++r)
                c.raw(r, q) = co[r];
        }
        s.module.act.push_back(std::move(c));
    }
    return s;
}

Matrix image_span(const RightModule& m, const std::vector<Vec>& gens)
{
    Echelon e(m.field(), m.dim);
    for (auto& v : gens) {
        for (int j = 0; j < m.alg->dim; ++j) {
            Vec w(m.dim, Scalar(0));
            const Matrix& a = m.act[j];
            for (int c = 0; c < m.dim; ++c)
                if (sgn(v[c]) != 0)
                    for (int r = 0; r < m.dim; ++r)
                        if (sgn(a(r, c)) != 0)
                            m.field().add_mul(w[r], a(r, c), v[c]);
            e.add(std::move(w));
        }
    }
    return e.basis();
}

int block_dim(const AlgebraPtr& a, int t)
{
    return a->idem_basis[t].cols();
}

}  // namespace

DimensionValue DimensionValue::plus(int k) const
{
    switch (kind) {
    case Kind::exactly:
        return exactly(n + k);
    case Kind::at_least:
        return n <= kUnknownBound ? *this : at_least(n + k);
    default:
        return *this;
    }
}

std::string DimensionValue::str() const
{
    switch (kind) {
    case Kind::exactly:
        return fmt::format("Exactly({})", n);
    case Kind::infinite:
        return "Infinite";
    case Kind::at_least:
        return n <= kUnknownBound ? "AtLeast(?)" : fmt::format("AtLeast({})", n);
    case Kind::minus_infinity:
        return "MinusInfinity";
    }
    return "?";
}

DimensionValue sup(const DimensionValue& a, const DimensionValue& b)
{
    using K = DimensionValue::Kind;
    if (a.kind == K::minus_infinity)
        return b;
    if (b.kind == K::minus_infinity)
        return a;
    if (a.kind == K::infinite || b.kind == K::infinite)
        return DimensionValue::infinite();
    if (a.kind == K::exactly && b.kind == K::exactly)
        return DimensionValue::exactly(std::max(a.n, b.n));
    return DimensionValue::at_least(std::max(a.n, b.n));
}

bool certainly_le(const DimensionValue& a, const DimensionValue& b)
{
    using K = DimensionValue::Kind;
    if (a.kind == K::minus_infinity || b.kind == K::infinite)
        return true;
    if (a.kind == K::exactly && b.kind == K::exactly)
        return a.n <= b.n;
    if (a.kind == K::exactly && b.kind == K::at_least)
        return a.n <= b.n;
    return false;
}

RightModule Complex::term(int n) const
{
    if (in_range(n))
        return terms[n - lo];
    return modrep::zero_module(alg);
}

Matrix Complex::diff(int n) const
{
    if (in_range(n) && in_range(n + 1))
        return d[n - lo];
    return zeros(alg->field, dim(n + 1), dim(n));
}

int Complex::total_dim() const
{
    int s = 0;
    for (auto& t : terms)
        s += t.dim;
    return s;
}

Matrix ChainMap::at(int n) const
{
    auto it = f.find(n);
    if (it != f.end())
        return it->second;
    return zeros(source.alg->field, target.dim(n), source.dim(n));
}

Complex zero_complex(const AlgebraPtr& a)
{
    Complex c;
    c.alg = a;
    return c;
}

Complex module_complex(const RightModule& m, int degree)
{
    Complex c;
    c.alg = m.alg;
    c.lo = degree;
    c.terms.push_back(m);
    return c;
}

Complex trimmed(Complex x)
{
    int a = 0, b = static_cast<int>(x.terms.size());
    while (a < b && x.terms[a].dim == 0)
        ++a;
    while (b > a && x.terms[b - 1].dim == 0)
        --b;
    Complex out;
    out.alg = x.alg;
    out.valid_from = x.valid_from;
    out.valid_upto = x.valid_upto;
    if (a == b)
        return out;
    out.lo = x.lo + a;
    for (int i = a; i < b; ++i)
        out.terms.push_back(std::move(x.terms[i]));
    for (int i = a; i + 1 < b; ++i)
        out.d.push_back(std::move(x.d[i]));
    return out;
}

bool d_squared_zero(const Complex& x)
{
    for (int n = x.lo; n + 1 < x.hi(); ++n)
        if (!(x.diff(n + 1) * x.diff(n)).is_zero())
            return false;
    for (int n = x.lo; n < x.hi(); ++n)
        if (!modrep::is_module_map(x.diff(n), x.terms[n - x.lo], x.terms[n + 1 - x.lo]))
            return false;
    return true;
}

bool is_chain_map(const ChainMap& f)
{
    const Complex &x = f.source, &y = f.target;
    int lo = std::min(x.lo, y.lo) - 1, hi = std::max(x.hi(), y.hi()) + 1;
    if (x.empty())
        lo = y.lo - 1, hi = y.hi() + 1;
    if (y.empty())
        lo = x.lo - 1, hi = x.hi() + 1;
    for (int n = lo; n <= hi; ++n) {
        Matrix a = f.at(n);
        if (a.rows() != y.dim(n) || a.cols() != x.dim(n))
            return false;
        if (f.at(n + 1) * x.diff(n) != y.diff(n) * a)
            return false;
        if (x.in_range(n) && y.in_range(n) && !modrep::is_module_map(a, x.terms[n - x.lo], y.terms[n - y.lo]))
            return false;
    }
    return true;
}

RightModule cohomology(const Complex& x, int n)
{
    if (!x.in_range(n))
        return modrep::zero_module(x.alg);
    const RightModule& m = x.terms[n - x.lo];
    Matrix kb = exactla::kernel_basis(x.diff(n));
    Sub z = make_sub(m, kb);
    Echelon ze(m.field(), m.dim);
    ze.add_columns(z.basis);
    Matrix im = x.diff(n - 1);
    Matrix imc(m.field(), z.module.dim, im.cols());
    for (int q = 0; q < im.cols(); ++q) {
        auto co = ze.coordinates(im.col_vector(q));
        for (int r = 0; r < z.module.dim; ++r)
            imc.raw(r, q) = co[r];
    }
    return modrep::quotient_module(z.module, imc).module;
}

int cohomology_dim(const Complex& x, int n)
{
    if (!x.in_range(n))
        return 0;
    return x.dim(n) - exactla::rank(x.diff(n)) - exactla::rank(x.diff(n - 1));
}

namespace {

bool in_window(const Complex& x, int n)
{
    if (x.valid_from && n < *x.valid_from)
        return false;
    if (x.valid_upto && n > *x.valid_upto)
        return false;
    return true;
}

}  // namespace

std::vector<int> cohomology_support(const Complex& x)
{
    std::vector<int> out;
    if (x.empty())
        return out;
    // Ranks are reused between neighbouring degrees.
    std::vector<int> rk(x.terms.size() + 1, 0);
    for (int n = x.lo; n < x.hi(); ++n)
        rk[n - x.lo + 1] = exactla::rank(x.diff(n));
    for (int n = x.lo; n <= x.hi(); ++n) {
        if (!in_window(x, n))
            continue;
        int h = x.dim(n) - rk[n - x.lo + 1] * (n < x.hi() ? 1 : 0) - rk[n - x.lo];
        if (n == x.hi())
            h = x.dim(n) - rk[n - x.lo];
        if (h != 0)
            out.push_back(n);
    }
    return out;
}

bool is_acyclic(const Complex& x)
{
    return cohomology_support(x).empty();
}

bool is_quasi_iso(const ChainMap& f)
{
    return is_acyclic(cone(f));
}

Complex shift(const Complex& x, int k)
{
    Complex y = x;
    y.lo = x.lo - k;
    if (k % 2 != 0)
        for (auto& m : y.d)
            m = -m;
    if (x.valid_from)
        y.valid_from = *x.valid_from - k;
    if (x.valid_upto)
        y.valid_upto = *x.valid_upto - k;
    return y;
}

ChainMap shift_map(const ChainMap& f, int k)
{
    ChainMap g;
    g.source = shift(f.source, k);
    g.target = shift(f.target, k);
    for (auto& [n, m] : f.f)
        g.f[n - k] = m;
    return g;
}

ChainMap identity_map(const Complex& x)
{
    ChainMap g;
    g.source = x;
    g.target = x;
    for (int n = x.lo; n <= x.hi(); ++n)
        g.f[n] = Matrix::identity(x.alg->field, x.dim(n));
    return g;
}

ChainMap zero_map(const Complex& x, const Complex& y)
{
    ChainMap g;
    g.source = x;
    g.target = y;
    return g;
}

Complex cone(const ChainMap& f)
{
    const Complex &x = f.source, &y = f.target;
    const AlgebraPtr& alg = x.alg ? x.alg : y.alg;
    const FieldSpec& fs = alg->field;
    Complex c;
    c.alg = alg;
    if (x.empty() && y.empty())
        return c;
    int lo = INT_MAX, hi = INT_MIN;
    if (!x.empty()) {
        lo = std::min(lo, x.lo - 1);
        hi = std::max(hi, x.hi() - 1);
    }
    if (!y.empty()) {
        lo = std::min(lo, y.lo);
        hi = std::max(hi, y.hi());
    }
    c.lo = lo;
    for (int n = lo; n <= hi; ++n)
        c.terms.push_back(modrep::direct_sum(x.term(n + 1), y.term(n)));
    for (int n = lo; n < hi; ++n) {
        const int a0 = x.dim(n + 1), b0 = y.dim(n), a1 = x.dim(n + 2), b1 = y.dim(n + 1);
        Matrix m(fs, a1 + b1, a0 + b0);
        m.set_block(0, 0, -x.diff(n + 1));
        m.set_block(a1, 0, f.at(n + 1));
        m.set_block(a1, a0, y.diff(n));
        c.d.push_back(std::move(m));
    }
    if (x.valid_from || y.valid_from)
        c.valid_from = std::max(x.valid_from ? *x.valid_from - 1 : INT_MIN, y.valid_from ? *y.valid_from : INT_MIN);
    if (x.valid_upto || y.valid_upto)
        c.valid_upto = std::min(x.valid_upto ? *x.valid_upto - 1 : INT_MAX, y.valid_upto ? *y.valid_upto : INT_MAX);
    return c;
}

Complex dual_complex(const Complex& x)
{
    Complex y;
    y.alg = algebra::opposite(x.alg);
    if (x.empty())
        return y;
    y.lo = -x.hi();
    for (int n = y.lo; n <= -x.lo; ++n)
        y.terms.push_back(modrep::dual(x.terms[-n - x.lo]));
    for (int n = y.lo; n < -x.lo; ++n)
        y.d.push_back(x.diff(-n - 1).transpose());
    if (x.valid_from)
        y.valid_upto = -*x.valid_from;
    if (x.valid_upto)
        y.valid_from = -*x.valid_upto;
    return y;
}

ChainMap dual_map(const ChainMap& f)
{
    ChainMap g;
    g.source = dual_complex(f.target);
    g.target = dual_complex(f.source);
    for (auto& [n, m] : f.f)
        g.f[-n] = m.transpose();
    return g;
}

/* Tor_1(m, lam/J) from a cover F -> m with kernel K: dim K/KJ - dim (K + FJ)/FJ. */
static int tor1_from_cover(const Cover& cv)
{
    const RightModule& F = cv.free;
    const auto& a = *F.alg;
    const FieldSpec& f = a.field;
    const int k = cv.kernel.cols();
    if (k == 0)
        return 0;
    Echelon fj(f, F.dim);
    for (auto& v : a.radical_generators)
        fj.add_columns(F.action(v));
    Echelon kj(f, F.dim);
    for (auto& v : a.radical_generators)
        kj.add_columns(F.action(v) * cv.kernel);
    const int fjd = fj.dim();
    fj.add_columns(cv.kernel);
    return (k - kj.dim()) - (fj.dim() - fjd);
}

bool is_projective_module(const RightModule& m)
{
    if (!m.alg->radical_known)
        throw std::invalid_argument("projectivity test needs the radical of the algebra");
    if (m.dim == 0 || m.standard)
        return true;
    return tor1_from_cover(modrep::top_cover(m)) == 0;
}

bool is_summand_of(const RightModule& m, const RightModule& n, unsigned seed)
{
    if (m.dim == 0)
        return true;
    if (m.dim > n.dim)
        return false;
    auto fs = modrep::hom_space(m, n);
    if (fs.empty())
        return false;
    auto gs = modrep::hom_space(n, m);
    if (gs.empty())
        return false;
    const FieldSpec& F = m.field();
    std::mt19937 rng(seed);
    auto coeff = [&]() {
        if (F.is_prime()) {
            std::uniform_int_distribution<unsigned long> d(0, F.p - 1);
            return Scalar(static_cast<long>(d(rng)));
        }
        std::uniform_int_distribution<int> d(-7, 7);
        return Scalar(d(rng));
    };
    for (int trial = 0; trial < 4; ++trial) {
        Matrix f(F, n.dim, m.dim), g(F, m.dim, n.dim);
        for (auto& h : fs)
            f.add_scaled(h, F.reduce(coeff()));
        for (auto& h : gs)
            g.add_scaled(h, F.reduce(coeff()));
        if (exactla::rank(g * f) == m.dim)
            return true;
    }
    return false;
}

bool is_shifted_copy(const Complex& x0, const Complex& y0, unsigned seed)
{
    if (x0.windowed() || y0.windowed())
        return false;
    Complex x = trimmed(x0), y = trimmed(y0);
    if (x.empty() || x.terms.size() != y.terms.size())
        return false;
    const int t = x.lo - y.lo;
    for (int n = y.lo; n <= y.hi(); ++n)
        if (x.dim(n + t) != y.dim(n))
            return false;
    const FieldSpec& F = x.alg->field;
    std::vector<std::vector<Matrix>> hs;
    std::vector<int> offset;
    int unknowns = 0;
    for (int n = y.lo; n <= y.hi(); ++n) {
        offset.push_back(unknowns);
        hs.push_back(modrep::hom_space(x.term(n + t), y.term(n)));
        if (hs.back().empty())
            return false;
        unknowns += static_cast<int>(hs.back().size());
    }
    int rows = 0;
    for (int n = y.lo; n < y.hi(); ++n)
        rows += y.dim(n + 1) * x.dim(n + t);
    Matrix eq(F, rows, unknowns);
    int r0 = 0;
    for (int n = y.lo; n < y.hi(); ++n) {
        const int i = n - y.lo;
        const Matrix dy = y.diff(n), dx = x.diff(n + t);
        const int cols = x.dim(n + t);
        auto put = [&](const Matrix& m, int col, bool negate) {
            for (int a = 0; a < m.rows(); ++a)
                for (int b = 0; b < m.cols(); ++b)
                    eq.raw(r0 + a * cols + b, col) = negate ? F.neg(m(a, b)) : m(a, b);
        };
        for (size_t q = 0; q < hs[i].size(); ++q)
            put(dy * hs[i][q], offset[i] + static_cast<int>(q), false);
        for (size_t q = 0; q < hs[i + 1].size(); ++q)
            put(hs[i + 1][q] * dx, offset[i + 1] + static_cast<int>(q), true);
        r0 += y.dim(n + 1) * cols;
    }
    Matrix ker = rows > 0 ? exactla::kernel_basis(eq) : Matrix::identity(F, unknowns);
    if (ker.cols() == 0)
        return false;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int trial = 0; trial < 4; ++trial) {
        Vec c(unknowns, Scalar(0));
        for (int q = 0; q < ker.cols(); ++q) {
            Scalar w = F.reduce(Scalar(d(rng)));
            for (int u = 0; u < unknowns; ++u)
                F.add_mul(c[u], ker(u, q), w);
        }
        bool iso = true;
        for (size_t i = 0; i < hs.size() && iso; ++i) {
            Matrix f(F, y.dim(y.lo + static_cast<int>(i)), x.dim(y.lo + static_cast<int>(i) + t));
            for (size_t q = 0; q < hs[i].size(); ++q)
                f.add_scaled(hs[i][q], c[offset[i] + q]);
            iso = exactla::rank(f) == f.rows();
        }
        if (iso)
            return true;
    }
    return false;
}

namespace {

/* Builds P^n from the top down. */
class Builder {
public:
    Builder(const Complex& x, const Options& opt) : x_(x), opt_(opt), f_(x.alg->field) {}

    const Complex& x_;
    const Options& opt_;
    FieldSpec f_;
    std::map<int, RightModule> P;
    std::map<int, Matrix> dP;  // P^n -> P^{n+1}
    std::map<int, Matrix> fP;  // P^n -> X^n

    int pdim(int n) const
    {
        auto it = P.find(n);
        return it == P.end() ? 0 : it->second.dim;
    }
    Matrix d_at(int n) const
    {
        auto it = dP.find(n);
        if (it != dP.end())
            return it->second;
        return zeros(f_, pdim(n + 1), pdim(n));
    }
    Matrix f_at(int n) const
    {
        auto it = fP.find(n);
        if (it != fP.end())
            return it->second;
        return zeros(f_, x_.dim(n), pdim(n));
    }
    RightModule pterm(int n) const
    {
        auto it = P.find(n);
        return it == P.end() ? modrep::zero_module(x_.alg) : it->second;
    }

    /* Z^n inside P^{n+1} (+) X^n. */
    Sub z_at(int n) const
    {
        const int p1 = pdim(n + 1), xn = x_.dim(n), p2 = pdim(n + 2), x1 = x_.dim(n + 1);
        Matrix A(f_, p2 + x1, p1 + xn);
        A.set_block(0, 0, d_at(n + 1));
        A.set_block(p2, 0, f_at(n + 1));
        A.set_block(p2, p1, -x_.diff(n));
        Matrix kb = exactla::kernel_basis(A);
        RightModule amb = modrep::direct_sum(pterm(n + 1), x_.term(n));
        return make_sub(amb, kb);
    }

    /* Installs P^n -> Z^n given by sigma (ambient coordinates). */
    void install(int n, RightModule pn, const Matrix& sigma)
    {
        const int p1 = pdim(n + 1);
        const int xn = x_.dim(n);
        dP[n] = sigma.block(0, 0, p1, sigma.cols());
        fP[n] = sigma.block(p1, 0, xn, sigma.cols());
        P[n] = std::move(pn);
    }

    Complex complex(int n_min) const
    {
        Complex c;
        c.alg = x_.alg;
        int hi = n_min - 1;
        for (auto& [n, m] : P)
            hi = std::max(hi, n);
        if (P.empty())
            return c;
        c.lo = n_min;
        for (int n = n_min; n <= hi; ++n)
            c.terms.push_back(pterm(n));
        for (int n = n_min; n < hi; ++n)
            c.d.push_back(d_at(n));
        return trimmed(c);
    }
};

enum class TowerStep { cont, terminated, periodic, cutoff };

/*
 * One step below the support of X: Z is a submodule of P^{n+1}. Adds P^n and
 * reports whether the construction has ended.
 */
TowerStep tower_step(Builder& b, int n, const Sub& z, int index, std::vector<RightModule>& history, Replacement& r)
{
    const Options& opt = b.opt_;
    if (z.module.dim == 0)
        return TowerStep::terminated;
    Cover cv = modrep::top_cover(z.module, opt.variant);
    const bool projective = tor1_from_cover(cv) == 0;
    if (projective) {
        if (cv.kernel.cols() == 0) {
            b.install(n, cv.free, z.basis * cv.pi);
        }
        else {
            // Generic terminal projective term: Z itself with the inclusion as differential.
            b.install(n, z.module, z.basis);
        }
        return TowerStep::terminated;
    }
    r.last_nonprojective = index;
    if (cv.free.dim > opt.size_budget) {
        r.budget_exceeded = true;
        return TowerStep::cutoff;
    }
    b.install(n, cv.free, z.basis * cv.pi);
    if (opt.periodicity) {
        for (size_t j = 0; j < history.size(); ++j)
            if (is_summand_of(history[j], z.module, 7919u * static_cast<unsigned>(j + 1) + static_cast<unsigned>(index)))
                return TowerStep::periodic;
    }
    history.push_back(z.module);
    if (index >= opt.cutoff - 1)
        return TowerStep::cutoff;
    return TowerStep::cont;
}

/* Continues a builder below the support of X until it ends. Returns the lowest degree built. */
int run_tower(Builder& b, int n_start, Replacement& r)
{
    std::vector<RightModule> history;
    int n = n_start;
    for (;; --n) {
        Sub z = b.z_at(n);
        int index = n_start - n;
        TowerStep st = tower_step(b, n, z, index, history, r);
        if (st == TowerStep::terminated) {
            r.terminated = true;
            return z.module.dim == 0 ? n + 1 : n;
        }
        if (st == TowerStep::periodic) {
            r.periodic = true;
            return n;
        }
        if (st == TowerStep::cutoff)
            return b.pdim(n) > 0 ? n : n + 1;
    }
}

Replacement finish(const Builder& b, Replacement r, int n_min, const Complex& x)
{
    r.P = b.complex(n_min);
    r.f = b.fP;
    r.source_lo = x.lo;
    if (r.P.empty()) {
        r.P = zero_complex(x.alg);
        r.f.clear();
    }
    // Drop maps for degrees outside the trimmed range.
    for (auto it = r.f.begin(); it != r.f.end();) {
        if (!r.P.in_range(it->first))
            it = r.f.erase(it);
        else
            ++it;
    }
    if (!r.terminated && !r.P.empty())
        r.P.valid_from = n_min + 1;
    return r;
}

}  // namespace

Replacement free_replacement(const Complex& x, const Options& opt)
{
    Replacement r;
    Builder b(x, opt);
    if (x.alg && !x.alg->radical_known)
        throw std::invalid_argument("replacement needs the radical of the algebra");
    if (x.empty()) {
        r.terminated = true;
        r.P = zero_complex(x.alg);
        return r;
    }
    int n = x.hi();
    for (; n >= x.lo; --n) {
        Sub z = b.z_at(n);
        Cover cv = modrep::top_cover(z.module, opt.variant);
        if (cv.free.dim > opt.size_budget) {
            r.budget_exceeded = true;
            return finish(b, r, n + 1, x);
        }
        b.install(n, cv.free, z.basis * cv.pi);
    }
    int n_min = run_tower(b, x.lo - 1, r);
    return finish(b, r, n_min, x);
}

Replacement free_resolution(const RightModule& m, const Options& opt)
{
    return free_replacement(module_complex(m, 0), opt);
}

ChainMap replacement_map(const Replacement& r, const Complex& x)
{
    ChainMap g;
    g.source = r.P;
    g.target = x;
    for (auto& [n, m] : r.f)
        if (r.P.in_range(n) && x.in_range(n))
            g.f[n] = m;
    return g;
}

Minimized minimize(const Complex& p, const std::map<int, Matrix>& f_in, const Complex& x)
{
    Minimized out;
    out.P = p;
    out.f = f_in;
    const AlgebraPtr& alg = p.alg;
    const FieldSpec& fs = alg->field;
    auto offsets = [&](const RightModule& m) {
        std::vector<int> off;
        int o = 0;
        for (int t : m.blocks) {
            off.push_back(o);
            o += block_dim(alg, t);
        }
        return off;
    };
    auto fmap = [&](int n) -> Matrix {
        auto it = out.f.find(n);
        if (it != out.f.end())
            return it->second;
        return zeros(fs, x.dim(n), out.P.dim(n));
    };
    bool changed = true;
    while (changed) {
        changed = false;
        Complex& P = out.P;
        for (int n = P.lo; n < P.hi() && !changed; ++n) {
            const RightModule& s = P.terms[n - P.lo];
            const RightModule& t = P.terms[n + 1 - P.lo];
            if (!s.standard || !t.standard)
                continue;
            auto so = offsets(s), to = offsets(t);
            const Matrix& d = P.d[n - P.lo];
            for (size_t g = 0; g < s.blocks.size() && !changed; ++g)
                for (size_t h = 0; h < t.blocks.size() && !changed; ++h) {
                    const int bs = block_dim(alg, s.blocks[g]), bt = block_dim(alg, t.blocks[h]);
                    if (bs != bt)
                        continue;
                    Matrix phi = d.block(to[h], so[g], bt, bs);
                    if (phi.is_zero())
                        continue;
                    auto phinv = exactla::inverse(phi);
                    if (!phinv)
                        continue;
                    // Index sets of the complements.
                    std::vector<int> keep_s, keep_t;
                    for (int i = 0; i < s.dim; ++i)
                        if (i < so[g] || i >= so[g] + bs)
                            keep_s.push_back(i);
                    for (int i = 0; i < t.dim; ++i)
                        if (i < to[h] || i >= to[h] + bt)
                            keep_t.push_back(i);
                    std::vector<int> es, et;
                    for (int i = 0; i < bs; ++i)
                        es.push_back(so[g] + i);
                    for (int i = 0; i < bt; ++i)
                        et.push_back(to[h] + i);
                    Matrix beta = d.select_rows(et).select_cols(keep_s);
                    Matrix gamma = d.select_rows(keep_t).select_cols(es);
                    Matrix delta = d.select_rows(keep_t).select_cols(keep_s);
                    Matrix corr = *phinv * beta;
                    Matrix dn = delta - gamma * corr;
                    // iota : P' -> P^n, x -> (-phi^{-1} beta x, x)
                    Matrix iota(fs, s.dim, static_cast<int>(keep_s.size()));
                    for (size_t c = 0; c < keep_s.size(); ++c) {
                        iota.raw(keep_s[c], static_cast<int>(c)) = 1;
                        for (int i = 0; i < bs; ++i)
                            iota.raw(so[g] + i, static_cast<int>(c)) = fs.neg(corr(i, static_cast<int>(c)));
                    }
                    RightModule s2 = s, t2 = t;
                    std::vector<int> sb = s.blocks, tb = t.blocks;
                    sb.erase(sb.begin() + g);
                    tb.erase(tb.begin() + h);
                    s2 = modrep::standard_projective(alg, sb);
                    t2 = modrep::standard_projective(alg, tb);
                    Matrix fn = fmap(n) * iota;
                    Matrix fn1 = fmap(n + 1).select_cols(keep_t);
                    if (n - 1 >= P.lo)
                        P.d[n - 1 - P.lo] = P.d[n - 1 - P.lo].select_rows(keep_s);
                    if (n + 1 < P.hi())
                        P.d[n + 1 - P.lo] = P.d[n + 1 - P.lo].select_cols(keep_t);
                    P.d[n - P.lo] = dn;
                    P.terms[n - P.lo] = s2;
                    P.terms[n + 1 - P.lo] = t2;
                    if (x.in_range(n))
                        out.f[n] = fn;
                    if (x.in_range(n + 1))
                        out.f[n + 1] = fn1;
                    ++out.cancelled;
                    changed = true;
                }
        }
    }
    auto vf = out.P.valid_from;
    out.P = trimmed(out.P);
    out.P.valid_from = vf;
    for (auto it = out.f.begin(); it != out.f.end();) {
        if (!out.P.in_range(it->first))
            it = out.f.erase(it);
        else
            ++it;
    }
    return out;
}

std::map<int, int> tor_with_top(const Complex& p)
{
    std::map<int, int> out;
    if (p.empty())
        return out;
    auto sq = algebra::semisimple_quotient(p.alg);
    Complex t = tensor_complex(p, sq.top_bimodule);
    for (int n = p.lo; n <= p.hi(); ++n)
        out[n] = cohomology_dim(t, n);
    return out;
}

DimensionValue pd_from_replacement(const Replacement& r, const Complex& x)
{
    auto support = cohomology_support(x);
    if (x.windowed()) {
        int b = kUnknownBound;
        for (int m : support)
            b = std::max(b, -m);
        return DimensionValue::at_least(b);
    }
    if (support.empty())
        return DimensionValue::minus_infinity();
    if (r.periodic)
        return DimensionValue::infinite();
    if (r.terminated) {
        int best = INT_MIN;
        for (auto& [n, h] : tor_with_top(r.P))
            if (h != 0)
                best = std::max(best, -n);
        if (best == INT_MIN)
            return DimensionValue::minus_infinity();
        return DimensionValue::exactly(best);
    }
    int b = INT_MIN;
    for (int m : support)
        b = std::max(b, -m);
    if (r.last_nonprojective >= 0)
        b = std::max(b, r.last_nonprojective + 2 - x.lo);
    return DimensionValue::at_least(b);
}

DimensionValue pd_complex(const Complex& x, const Options& opt)
{
    if (!x.windowed() && is_acyclic(x))
        return DimensionValue::minus_infinity();
    return pd_from_replacement(free_replacement(x, opt), x);
}

DimensionValue pd_module(const RightModule& m, const Options& opt)
{
    if (m.dim == 0)
        return DimensionValue::minus_infinity();
    if (!m.alg->radical_known)
        throw std::invalid_argument("projective dimension needs the radical of the algebra");
    std::vector<RightModule> history;
    RightModule omega = m;
    for (int i = 0; i <= opt.cutoff; ++i) {
        Cover cv = modrep::top_cover(omega, opt.variant);
        if (tor1_from_cover(cv) == 0)
            return DimensionValue::exactly(i);
        if (opt.periodicity) {
            for (size_t j = 0; j < history.size(); ++j)
                if (is_summand_of(history[j], omega, 104729u * static_cast<unsigned>(j + 1) + static_cast<unsigned>(i)))
                    return DimensionValue::infinite();
        }
        if (i == opt.cutoff || cv.free.dim > opt.size_budget)
            return DimensionValue::at_least(i + 1);
        history.push_back(omega);
        omega = make_sub(cv.free, cv.kernel).module;
    }
    return DimensionValue::at_least(opt.cutoff + 1);
}

DimensionValue injdim_module(const RightModule& m, const Options& opt)
{
    return pd_module(modrep::dual(m), opt);
}

DimensionValue injdim_complex(const Complex& x, const Options& opt)
{
    return pd_complex(dual_complex(x), opt);
}

Complex tensor_complex(const Complex& p, const Bimodule& c)
{
    Complex out;
    out.alg = c.right_alg;
    out.valid_from = p.valid_from;
    out.valid_upto = p.valid_upto;
    if (p.empty())
        return out;
    out.lo = p.lo;
    std::vector<modrep::Tensor> ts;
    for (auto& m : p.terms)
        ts.push_back(modrep::tensor_over_algebra(m, c));
    for (auto& t : ts)
        out.terms.push_back(t.module);
    for (int n = p.lo; n < p.hi(); ++n)
        out.d.push_back(modrep::tensor_map(p.diff(n), ts[n - p.lo], ts[n + 1 - p.lo]));
    return out;
}

namespace {

std::optional<int> tensor_window(const Complex& x, const Replacement& r)
{
    if (x.valid_upto)
        return kNothingValid;
    std::optional<int> w = x.valid_from;
    if (!r.terminated && !r.P.empty()) {
        int s = r.P.valid_from.value_or(r.P.lo + 1);
        w = w ? std::max(*w, s) : s;
    }
    if (!r.terminated && r.P.empty())
        w = kNothingValid;
    return w;
}

}  // namespace

Complex derived_tensor(const Complex& x, const Bimodule& c, const Options& opt)
{
    if (!modrep::same_algebra(x.alg, c.left_alg))
        throw std::invalid_argument("derived_tensor: complex and bimodule over different algebras");
    return derived_tensor_from(free_replacement(x, opt), x, c);
}

Complex derived_tensor_from(const Replacement& r, const Complex& x, const Bimodule& c)
{
    Minimized mz = minimize(r.P, r.f, x);
    Complex t = tensor_complex(mz.P, c);
    t.valid_from = tensor_window(x, r);
    t.valid_upto.reset();
    if (t.empty())
        t.alg = c.right_alg;
    return t;
}

Complex iterated_C(const Complex& x, const Bimodule& c, int a, const Options& opt)
{
    Complex y = x;
    for (int i = 0; i < a; ++i)
        y = derived_tensor(y, c, opt);
    return y;
}

Complex derived_hom_C(const Complex& x, const Bimodule& c, int a, const Options& opt)
{
    if (a == 0)
        return x;
    Bimodule cop = modrep::opposite_bimodule(c);
    return dual_complex(iterated_C(dual_complex(x), cop, a, opt));
}

namespace {

/*
 * Replacement of Y relative to a replacement of X along phi: P_Y^n = P_X^n (+) Q^n
 * with psi the inclusion, so that f_Y psi = phi f_X holds on the nose.
 */
struct RelativeReplacement {
    Replacement ry;
    std::map<int, Matrix> psi;
};

RelativeReplacement relative_replacement(const Replacement& rx, const ChainMap& phi, const Options& opt)
{
    const Complex& y = phi.target;
    const Complex& px = rx.P;
    RelativeReplacement out;
    Builder b(y, opt);
    const FieldSpec& fs = y.alg->field;
    auto fx = [&](int n) -> Matrix {
        auto it = rx.f.find(n);
        if (it != rx.f.end())
            return it->second;
        return zeros(fs, phi.source.dim(n), px.dim(n));
    };
    int top = y.empty() ? px.hi() : std::max(y.hi(), px.empty() ? INT_MIN : px.hi());
    int bottom_x = px.empty() ? INT_MAX : px.lo;
    int n = top;
    const int y_lo = y.empty() ? INT_MAX : y.lo;
    for (; n >= std::min(bottom_x, y_lo); --n) {
        Sub z = b.z_at(n);
        const int pxn = px.dim(n);
        const int p1 = b.pdim(n + 1);
        // Images of the generators coming from P_X^n.
        Matrix first(fs, p1 + y.dim(n), pxn);
        if (pxn > 0) {
            Matrix psi1 = out.psi.count(n + 1) ? out.psi[n + 1] : zeros(fs, p1, px.dim(n + 1));
            first.set_block(0, 0, psi1 * px.diff(n));
            first.set_block(p1, 0, phi.at(n) * fx(n));
        }
        // Coordinates of these images inside Z^n.
        Echelon ze(fs, z.basis.rows());
        ze.add_columns(z.basis);
        Matrix firstz(fs, z.module.dim, pxn);
        for (int q = 0; q < pxn; ++q) {
            auto co = ze.coordinates(first.col_vector(q));
            for (int r = 0; r < z.module.dim; ++r)
                firstz.raw(r, q) = co[r];
        }
        Matrix covered = image_span(z.module, [&] {
            std::vector<Vec> v;
            for (int q = 0; q < pxn; ++q)
                v.push_back(firstz.col_vector(q));
            return v;
        }());
        Cover cv = modrep::top_cover(z.module, opt.variant, &covered);
        RightModule pn = px.in_range(n) ? modrep::direct_sum(px.terms[n - px.lo], cv.free) : cv.free;
        if (pn.dim > opt.size_budget) {
            out.ry.budget_exceeded = true;
            out.ry = finish(b, out.ry, n + 1, y);
            return out;
        }
        Matrix sigma = Matrix::hcat(first, z.basis * cv.pi);
        b.install(n, pn, sigma);
        Matrix psi(fs, pn.dim, pxn);
        for (int i = 0; i < pxn; ++i)
            psi.raw(i, i) = 1;
        out.psi[n] = psi;
    }
    int n_min;
    if (!px.empty() && !rx.terminated) {
        n_min = n + 1;
        out.ry = finish(b, out.ry, n_min, y);
    }
    else {
        n_min = run_tower(b, n, out.ry);
        out.ry = finish(b, out.ry, n_min, y);
    }
    for (auto it = out.psi.begin(); it != out.psi.end();) {
        if (!out.ry.P.in_range(it->first) || !px.in_range(it->first))
            it = out.psi.erase(it);
        else
            ++it;
    }
    return out;
}

}  // namespace

ChainMap derived_tensor_map(const ChainMap& phi, const Bimodule& c, const Options& opt)
{
    Replacement rx = free_replacement(phi.source, opt);
    RelativeReplacement rr = relative_replacement(rx, phi, opt);
    const Complex& px = rx.P;
    const Complex& py = rr.ry.P;
    ChainMap out;
    out.source = tensor_complex(px, c);
    out.target = tensor_complex(py, c);
    out.source.valid_from = tensor_window(phi.source, rx);
    out.source.valid_upto.reset();
    out.target.valid_from = tensor_window(phi.target, rr.ry);
    out.target.valid_upto.reset();
    if (out.source.empty())
        out.source.alg = c.right_alg;
    if (out.target.empty())
        out.target.alg = c.right_alg;
    for (auto& [n, m] : rr.psi) {
        auto ts = modrep::tensor_over_algebra(px.terms[n - px.lo], c);
        auto tt = modrep::tensor_over_algebra(py.terms[n - py.lo], c);
        out.f[n] = modrep::tensor_map(m, ts, tt);
    }
    return out;
}

namespace {

ChainMap xi_zero(const TwoStep& t, const Options& opt)
{
    const Bimodule& c = *t.c;
    Complex m0 = module_complex(t.m0, 0);
    Replacement r = free_replacement(m0, opt);
    Minimized mz = minimize(r.P, r.f, m0);
    ChainMap out;
    out.source = tensor_complex(mz.P, c);
    out.source.valid_from = tensor_window(m0, r);
    out.source.valid_upto.reset();
    if (out.source.empty())
        out.source.alg = c.right_alg;
    out.target = t.m1.dim > 0 ? module_complex(t.m1, 0) : zero_complex(c.right_alg);
    if (mz.P.in_range(0) && t.m1.dim > 0) {
        auto tp = modrep::tensor_over_algebra(mz.P.terms[-mz.P.lo], c);
        const Matrix& f0 = mz.f.at(0);
        const FieldSpec& fs = c.field();
        Matrix g(fs, t.m1.dim, tp.module.dim);
        for (int q = 0; q < tp.module.dim; ++q) {
            const auto& [pv, cv] = tp.section[q];
            Matrix ms = f0 * Matrix::column(fs, pv);
            Matrix k = Matrix::kron(ms, Matrix::column(fs, cv));
            Matrix v = t.xi * k;
            for (int r2 = 0; r2 < t.m1.dim; ++r2)
                g.raw(r2, q) = v(r2, 0);
        }
        out.f[0] = g;
    }
    return out;
}

}  // namespace

ChainMap xi_morphism(const TwoStep& t, int a, const Options& opt)
{
    ChainMap m = xi_zero(t, opt);
    for (int i = 0; i < a; ++i)
        m = derived_tensor_map(m, *t.c, opt);
    return m;
}

ChainMap theta_morphism(const TwoStep& t, int a, const Options& opt)
{
    TwoStep dt = modrep::dual_twostep(t);
    return dual_map(xi_morphism(dt, a, opt));
}

}  // namespace trivext::homology

#include "trivext/oracle.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace trivext::oracle {

using exactla::Echelon;

namespace {

Matrix mult_matrix(const std::vector<Matrix>& act, const Vec& x, const FieldSpec& f, int dim)
{
    Matrix m(f, dim, dim);
    for (size_t i = 0; i < act.size(); ++i)
        if (sgn(x[i]) != 0)
            m.add_scaled(act[i], x[i]);
    return m;
}

Matrix act_by(const RightModule& m, const Vec& x)
{
    return mult_matrix(m.act, x, m.field(), m.dim);
}

/* Restriction of m to the invariant subspace spanned by cols. */
RightModule restrict_to(const RightModule& m, const Matrix& cols)
{
    Echelon e(m.field(), m.dim);
    e.add_columns(cols);
    Matrix basis = e.basis();
    RightModule s;
    s.alg = m.alg;
    s.dim = basis.cols();
    for (const Matrix& a : m.act) {
        Matrix img = a * basis;
        Matrix c(m.field(), s.dim, s.dim);
        for (int q = 0; q < s.dim; ++q) {
            auto co = e.coordinates(img.col_vector(q));
            for (int r = 0; r < s.dim; ++r)
                c.raw(r, q) = co[r];
        }
        s.act.push_back(std::move(c));
    }
    return s;
}

struct ProjCover {
    std::vector<int> types;
    int free_dim = 0;
    Matrix pi;
};

/* Minimal projective cover by the indecomposable projectives e_t B. */
ProjCover projective_cover(const RightModule& m)
{
    const algebra::Algebra& b = *m.alg;
    const FieldSpec& f = m.field();
    if (!b.radical_known)
        throw std::invalid_argument("oracle: the radical of the algebra is not available");
    Echelon span(f, m.dim);
    for (int s = 0; s < b.radical.cols(); ++s)
        span.add_columns(act_by(m, b.radical.col_vector(s)));
    ProjCover cv;
    std::vector<std::vector<Scalar>> cols;
    for (size_t t = 0; t < b.idempotents.size(); ++t) {
        Matrix et = act_by(m, b.idempotents[t]);
        const Matrix& eb = b.idem_basis[t];
        for (int c = 0; c < m.dim && span.dim() < m.dim; ++c) {
            Vec v = et.col_vector(c);
            if (span.contains(v))
                continue;
            cv.types.push_back(static_cast<int>(t));
            for (int q = 0; q < eb.cols(); ++q) {
                Matrix w = act_by(m, eb.col_vector(q)) * Matrix::column(f, v);
                Vec wv = w.col_vector(0);
                span.add(wv);
                cols.push_back(wv);
            }
        }
    }
    if (span.dim() != m.dim)
        throw std::logic_error("oracle: cover does not span");
    cv.free_dim = static_cast<int>(cols.size());
    cv.pi = Matrix(f, m.dim, cv.free_dim);
    for (int c = 0; c < cv.free_dim; ++c)
        for (int r = 0; r < m.dim; ++r)
            cv.pi.raw(r, c) = cols[c][r];
    return cv;
}

RightModule cover_module(const AlgebraPtr& b, const std::vector<int>& types)
{
    const FieldSpec& f = b->field;
    int n = 0;
    for (int t : types)
        n += b->idem_basis[t].cols();
    RightModule fm;
    fm.alg = b;
    fm.dim = n;
    for (int j = 0; j < b->dim; ++j) {
        Matrix a(f, n, n);
        int o = 0;
        for (int t : types) {
            a.set_block(o, o, b->idem_action[t][j]);
            o += b->idem_basis[t].cols();
        }
        fm.act.push_back(std::move(a));
    }
    return fm;
}

RightModule syzygy(const RightModule& m, const ProjCover& cv)
{
    RightModule fm = cover_module(m.alg, cv.types);
    return restrict_to(fm, exactla::kernel_basis(cv.pi));
}

std::vector<Matrix> homs(const RightModule& m, const RightModule& n)
{
    const FieldSpec& f = m.field();
    const int dm = m.dim, dn = n.dim, nv = dm * dn;
    Echelon eqs(f, nv);
    for (const Vec& g : m.alg->generators) {
        Matrix mg = act_by(m, g), ng = act_by(n, g);
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c) {
                Vec row(nv, Scalar(0));
                for (int k = 0; k < dm; ++k)
                    if (sgn(mg(k, c)) != 0)
                        f.add_mul(row[r * dm + k], mg(k, c), Scalar(1));
                for (int k = 0; k < dn; ++k)
                    if (sgn(ng(r, k)) != 0)
                        f.sub_mul(row[k * dm + c], ng(r, k), Scalar(1));
                eqs.add(std::move(row));
            }
    }
    Matrix ns = eqs.null_space();
    std::vector<Matrix> out;
    for (int q = 0; q < ns.cols(); ++q) {
        Matrix x(f, dn, dm);
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c)
                x.raw(r, c) = ns(r * dm + c, q);
        out.push_back(std::move(x));
    }
    return out;
}

bool isomorphic(const RightModule& m, const RightModule& n, unsigned seed)
{
    if (m.dim != n.dim)
        return false;
    if (m.dim == 0)
        return true;
    if (projective_cover(m).types != projective_cover(n).types)
        return false;
    auto hs = homs(m, n);
    if (hs.empty())
        return false;
    const FieldSpec& f = m.field();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix x(f, n.dim, m.dim);
        for (auto& h : hs)
            x.add_scaled(h, f.reduce(Scalar(d(rng))));
        if (exactla::rank(x) == m.dim)
            return true;
    }
    return false;
}

/* m is a direct summand of n: some g f = id_m with f : m -> n, g : n -> m. */
bool summand(const RightModule& m, const RightModule& n, unsigned seed)
{
    if (m.dim > n.dim || (m.dim < n.dim && m.dim * n.dim > 400))
        return false;
    if (m.dim == n.dim)
        return isomorphic(m, n, seed);
    auto tm = projective_cover(m).types, tn = projective_cover(n).types;
    std::sort(tm.begin(), tm.end());
    std::sort(tn.begin(), tn.end());
    if (!std::includes(tn.begin(), tn.end(), tm.begin(), tm.end()))
        return false;
    auto there = homs(m, n), back = homs(n, m);
    if (there.empty() || back.empty())
        return false;
    const FieldSpec& f = m.field();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix x(f, n.dim, m.dim), y(f, m.dim, n.dim);
        for (auto& h : there)
            x.add_scaled(h, f.reduce(Scalar(d(rng))));
        for (auto& h : back)
            y.add_scaled(h, f.reduce(Scalar(d(rng))));
        if (exactla::rank(y * x) == m.dim)
            return true;
    }
    return false;
}

RightModule dual_module(const RightModule& m)
{
    RightModule d;
    d.alg = algebra::opposite(m.alg);
    d.dim = m.dim;
    for (auto& a : m.act)
        d.act.push_back(a.transpose());
    return d;
}

}  // namespace

DimensionValue pd_direct(const RightModule& m, const OracleOptions& opt)
{
    if (m.dim == 0)
        return DimensionValue::minus_infinity();
    std::vector<RightModule> seen;
    RightModule omega = m;
    for (int i = 0;; ++i) {
        ProjCover cv = projective_cover(omega);
        if (cv.free_dim == omega.dim)
            return DimensionValue::exactly(i);
        for (size_t j = 0; j < seen.size(); ++j)
            if (summand(seen[j], omega, 31u * static_cast<unsigned>(i) + static_cast<unsigned>(j)))
                return DimensionValue::infinite();
        if (i >= opt.cutoff)
            return DimensionValue::at_least(i + 1);
        seen.push_back(omega);
        omega = syzygy(omega, cv);
        if (omega.dim > opt.size_budget)
            return DimensionValue::at_least(i + 1);
    }
}

DimensionValue injdim_direct(const RightModule& m, const OracleOptions& opt)
{
    return pd_direct(dual_module(m), opt);
}

DimensionValue gldim_direct(const AlgebraPtr& b, const OracleOptions& opt)
{
    // B/J: quotient of the regular module by the radical.
    Echelon je(b->field, b->dim);
    if (b->radical.rows() == b->dim)
        je.add_columns(b->radical);
    std::vector<int> fc = je.free_columns();
    RightModule top;
    top.alg = b;
    top.dim = static_cast<int>(fc.size());
    for (int k = 0; k < b->dim; ++k) {
        Matrix a(b->field, top.dim, top.dim);
        for (int c = 0; c < top.dim; ++c) {
            Vec v = b->right[k].col_vector(fc[c]);
            je.reduce(v);
            for (int r = 0; r < top.dim; ++r)
                a.raw(r, c) = v[fc[r]];
        }
        top.act.push_back(std::move(a));
    }
    return pd_direct(top, opt);
}

std::vector<int> syzygy_dims(const RightModule& m, int steps)
{
    std::vector<int> out;
    RightModule omega = m;
    for (int i = 0; i < steps && omega.dim > 0; ++i) {
        out.push_back(omega.dim);
        omega = syzygy(omega, projective_cover(omega));
    }
    return out;
}

GradedModule degree_zero_quotient(const GradedAlgebra& g)
{
    const algebra::Algebra& a = *g.algebra;
    std::vector<int> zero;
    for (int i = 0; i < a.dim; ++i)
        if (g.degree[i] == 0)
            zero.push_back(i);
    GradedModule m;
    m.dim = static_cast<int>(zero.size());
    m.degree.assign(m.dim, 0);
    for (int j = 0; j < a.dim; ++j) {
        Matrix act(a.field, m.dim, m.dim);
        for (int c = 0; c < m.dim; ++c)
            for (int r = 0; r < m.dim; ++r)
                act.raw(r, c) = a.right[j](zero[r], zero[c]);
        m.act.push_back(std::move(act));
    }
    return m;
}

namespace {

/* Columns spanning J(A) as a graded ideal: J(A_0) (+) A_{>=1}. */
std::vector<Vec> graded_radical(const GradedAlgebra& g)
{
    const algebra::Algebra& a = *g.algebra;
    if (!a.radical_known)
        throw std::invalid_argument("graded resolution needs the radical");
    std::vector<Vec> out;
    for (int i = 0; i < a.dim; ++i)
        if (g.degree[i] > 0)
            out.push_back(a.basis_vec(i));
    for (int s = 0; s < a.radical.cols(); ++s) {
        Vec v = a.radical.col_vector(s);
        for (int i = 0; i < a.dim; ++i)
            if (g.degree[i] > 0)
                v[i] = 0;
        out.push_back(std::move(v));
    }
    return out;
}

/* Free module (+)_g A(-d_g) with basis (g, k). */
GradedModule graded_free(const GradedAlgebra& g, const std::vector<int>& degs)
{
    const algebra::Algebra& a = *g.algebra;
    const int r = static_cast<int>(degs.size());
    GradedModule m;
    m.dim = r * a.dim;
    for (int q = 0; q < r; ++q)
        for (int k = 0; k < a.dim; ++k)
            m.degree.push_back(degs[q] + g.degree[k]);
    for (int j = 0; j < a.dim; ++j) {
        Matrix act(a.field, m.dim, m.dim);
        for (int q = 0; q < r; ++q)
            act.set_block(q * a.dim, q * a.dim, a.right[j]);
        m.act.push_back(std::move(act));
    }
    return m;
}

}  // namespace

GradedFreeComplex graded_free_resolution(const GradedAlgebra& g, const GradedModule& m0, int length)
{
    const algebra::Algebra& a = *g.algebra;
    const FieldSpec& f = a.field;
    const std::vector<Vec> jr = graded_radical(g);
    GradedFreeComplex out;
    out.alg = g;
    GradedModule m = m0;
    // Embedding of the current module into the previous free module.
    Matrix embed;
    for (int i = 0; i <= length; ++i) {
        Echelon span(f, m.dim);
        for (auto& x : jr)
            span.add_columns(mult_matrix(m.act, x, f, m.dim));
        std::vector<int> order(m.dim);
        for (int c = 0; c < m.dim; ++c)
            order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return m.degree[x] < m.degree[y]; });
        std::vector<int> degs;
        std::vector<Vec> gens;
        for (int c : order) {
            Vec v(m.dim, Scalar(0));
            v[c] = 1;
            if (span.contains(v))
                continue;
            degs.push_back(m.degree[c]);
            gens.push_back(v);
            for (int j = 0; j < a.dim; ++j)
                span.add(m.act[j].col_vector(c));
        }
        out.gen_degrees.push_back(degs);
        if (i > 0) {
            Matrix d(f, embed.rows(), static_cast<int>(gens.size()));
            for (size_t q = 0; q < gens.size(); ++q) {
                Matrix col = embed * Matrix::column(f, gens[q]);
                for (int r = 0; r < embed.rows(); ++r)
                    d.raw(r, static_cast<int>(q)) = col(r, 0);
            }
            out.d.push_back(std::move(d));
        }
        if (i == length)
            break;
        GradedModule p = graded_free(g, degs);
        Matrix pi(f, m.dim, p.dim);
        for (size_t q = 0; q < gens.size(); ++q)
            for (int k = 0; k < a.dim; ++k) {
                Matrix col = m.act[k] * Matrix::column(f, gens[q]);
                for (int r = 0; r < m.dim; ++r)
                    pi.raw(r, static_cast<int>(q) * a.dim + k) = col(r, 0);
            }
        // Homogeneous kernel, one internal degree at a time.
        Echelon ker(f, p.dim);
        std::map<int, std::vector<int>> by_deg;
        for (int c = 0; c < p.dim; ++c)
            by_deg[p.degree[c]].push_back(c);
        for (auto& [dg, cols] : by_deg) {
            Matrix kb = exactla::kernel_basis(pi.select_cols(cols));
            for (int q = 0; q < kb.cols(); ++q) {
                Vec v(p.dim, Scalar(0));
                for (size_t t = 0; t < cols.size(); ++t)
                    v[cols[t]] = kb(static_cast<int>(t), q);
                ker.add(std::move(v));
            }
        }
        Matrix basis = ker.basis();
        GradedModule k;
        k.dim = basis.cols();
        for (int c = 0; c < k.dim; ++c)
            k.degree.push_back(p.degree[ker.pivots()[c]]);
        for (int j = 0; j < a.dim; ++j) {
            Matrix img = p.act[j] * basis;
            Matrix act(f, k.dim, k.dim);
            for (int q = 0; q < k.dim; ++q) {
                auto co = ker.coordinates(img.col_vector(q));
                for (int r = 0; r < k.dim; ++r)
                    act.raw(r, q) = co[r];
            }
            k.act.push_back(std::move(act));
        }
        embed = basis;
        m = std::move(k);
        if (m.dim == 0) {
            out.gen_degrees.push_back({});
            out.d.push_back(Matrix(f, p.dim, 0));
            break;
        }
    }
    return out;
}

namespace {

/* Element of A given by block q of a generator-image column. */
Vec block_elem(const Matrix& d, int col, int q, int n)
{
    Vec v(n);
    for (int k = 0; k < n; ++k)
        v[k] = d(q * n + k, col);
    return v;
}

/* The map P_{i+1} -> P_i on the full free modules. */
Matrix full_differential(const GradedAlgebra& g, const Matrix& d)
{
    const algebra::Algebra& a = *g.algebra;
    const int n = a.dim, ri = d.rows() / n, ro = d.cols();
    Matrix full(a.field, ri * n, ro * n);
    for (int c = 0; c < ro; ++c)
        for (int k = 0; k < n; ++k) {
            // (g' b_k) -> sum_g g (a_{g g'} b_k)
            Matrix col = d.col(c);
            Matrix acted(a.field, ri * n, 1);
            for (int q = 0; q < ri; ++q)
                acted.set_block(q * n, 0, a.right[k] * col.block(q * n, 0, n, 1));
            full.set_block(0, c * n + k, acted);
        }
    return full;
}

}  // namespace

bool graded_d_squared_zero(const GradedFreeComplex& p)
{
    for (size_t i = 0; i + 1 < p.d.size(); ++i) {
        if (p.d[i + 1].cols() == 0)
            continue;
        Matrix lhs = full_differential(p.alg, p.d[i]) * p.d[i + 1];
        if (!lhs.is_zero())
            return false;
    }
    return true;
}

std::map<int, std::map<int, int>> graded_ext_degrees(const GradedAlgebra& g, int max_i)
{
    const algebra::Algebra& a = *g.algebra;
    const FieldSpec& f = a.field;
    const int n = a.dim;
    GradedFreeComplex res = graded_free_resolution(g, degree_zero_quotient(g), max_i + 1);
    const int top = *std::max_element(g.degree.begin(), g.degree.end());
    auto rank_of = [&](int i) { return i < static_cast<int>(res.gen_degrees.size()) ? static_cast<int>(res.gen_degrees[i].size()) : 0; };
    // delta^i : Hom(P_i, A) -> Hom(P_{i+1}, A), (y_g) -> (sum_g y_g a_{g g'}).
    auto delta = [&](int i) {
        const int ri = rank_of(i), ro = rank_of(i + 1);
        Matrix m(f, ro * n, ri * n);
        if (i >= static_cast<int>(res.d.size()))
            return m;
        const Matrix& d = res.d[i];
        for (int c = 0; c < ro; ++c)
            for (int q = 0; q < ri; ++q) {
                Vec el = block_elem(d, c, q, n);
                m.set_block(c * n, q * n, a.right_mult(el));
            }
        return m;
    };
    // Internal degree of coordinate (g, k) of Hom(P_i, A) for maps of degree j: deg b_k - d_g.
    auto coord_filter = [&](int i, int j) {
        std::vector<int> idx;
        const int ri = rank_of(i);
        for (int q = 0; q < ri; ++q)
            for (int k = 0; k < n; ++k)
                if (g.degree[k] - res.gen_degrees[i][q] == j)
                    idx.push_back(q * n + k);
        return idx;
    };
    std::map<int, std::map<int, int>> out;
    std::vector<Matrix> deltas;
    for (int i = 0; i <= max_i; ++i)
        deltas.push_back(delta(i));
    int min_gen = 0, max_gen = 0;
    for (int i = 0; i <= max_i && i < static_cast<int>(res.gen_degrees.size()); ++i)
        for (int d : res.gen_degrees[i])
            max_gen = std::max(max_gen, d);
    for (int i = 0; i <= max_i && i < static_cast<int>(res.gen_degrees.size()); ++i)
        for (int j = -max_gen - 1; j <= top - min_gen; ++j) {
            auto cur = coord_filter(i, j);
            if (cur.empty())
                continue;
            auto nxt = coord_filter(i + 1, j);
            Matrix dj = nxt.empty() ? Matrix(f, 0, static_cast<int>(cur.size())) : deltas[i].select_rows(nxt).select_cols(cur);
            int rk_out = nxt.empty() ? 0 : exactla::rank(dj);
            int rk_in = 0;
            if (i > 0) {
                auto prv = coord_filter(i - 1, j);
                if (!prv.empty())
                    rk_in = exactla::rank(deltas[i - 1].select_rows(cur).select_cols(prv));
            }
            int h = static_cast<int>(cur.size()) - rk_out - rk_in;
            if (h != 0)
                out[i][j] = h;
        }
    return out;
}

Verdict verify(const DimensionValue& formula, const DimensionValue& oracle)
{
    if (formula.certified() && oracle.certified())
        return formula == oracle ? Verdict::pass : Verdict::fail;
    // A lower bound is refuted by a certified value below it.
    auto refutes = [](const DimensionValue& bound, const DimensionValue& v) {
        if (!v.certified() || v.is_infinite())
            return false;
        if (bound.bound_unknown())
            return false;
        return v.is_minus_infinity() || v.n < bound.n;
    };
    if (formula.is_at_least() && refutes(formula, oracle))
        return Verdict::fail;
    if (oracle.is_at_least() && refutes(oracle, formula))
        return Verdict::fail;
    return Verdict::undetermined;
}

std::string verdict_str(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::undetermined:
        return "undetermined";
    }
    return "?";
}

}  // namespace trivext::oracle

#include "trivext/modrep.h"

#include <fmt/core.h>

#include <functional>
#include <stdexcept>

namespace trivext::modrep {

using exactla::Echelon;

namespace {

Matrix combine(const FieldSpec& f, int n, const std::vector<Matrix>& mats, const Vec& x)
{
    Matrix m(f, n, n);
    for (size_t i = 0; i < mats.size(); ++i)
        if (sgn(x[i]) != 0)
            m.add_scaled(mats[i], x[i]);
    return m;
}

Vec mat_vec(const Matrix& m, const Vec& v)
{
    const FieldSpec& f = m.field();
    Vec out(m.rows(), Scalar(0));
    for (int j = 0; j < m.cols(); ++j) {
        if (sgn(v[j]) == 0)
            continue;
        for (int i = 0; i < m.rows(); ++i)
            if (sgn(m(i, j)) != 0)
                f.add_mul(out[i], m(i, j), v[j]);
    }
    return out;
}

bool is_zero_vec(const Vec& v)
{
    for (auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

Matrix from_columns(const FieldSpec& f, int rows, const std::vector<Vec>& cols)
{
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i)
            m.raw(i, static_cast<int>(j)) = cols[j][i];
    return m;
}

/* Coordinates of the columns of m in the basis of e (all columns must lie in the span). */
Matrix coords_in(const Echelon& e, const Matrix& m)
{
    Matrix out(e.field(), e.dim(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        Vec c = e.coordinates(m.col_vector(j));
        for (int i = 0; i < e.dim(); ++i)
            out.raw(i, j) = c[i];
    }
    return out;
}

void require_module_shape(const RightModule& m, const char* what)
{
    if (!m.alg)
        throw std::invalid_argument(fmt::format("{}: module has no algebra", what));
    if (static_cast<int>(m.act.size()) != m.alg->dim)
        throw std::invalid_argument(fmt::format("{}: action list has wrong length", what));
}

}  // namespace

Matrix RightModule::action(const Vec& x) const
{
    return combine(field(), dim, act, x);
}

Matrix Bimodule::left_action(const Vec& x) const
{
    return combine(field(), dim, left, x);
}

Matrix Bimodule::right_action(const Vec& x) const
{
    return combine(field(), dim, right, x);
}

std::string ModuleReport::summary() const
{
    if (ok)
        return "ok";
    std::string s;
    for (size_t i = 0; i < failures.size() && i < 6; ++i) {
        if (i)
            s += "; ";
        s += failures[i];
    }
    if (failures.size() > 6)
        s += fmt::format("; ... ({} failures)", failures.size());
    return s;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    if (a.get() == b.get())
        return true;
    if (!a || !b || a->dim != b->dim || a->field != b->field)
        return false;
    for (int i = 0; i < a->dim; ++i)
        if (a->left[i] != b->left[i])
            return false;
    return true;
}

namespace {

void check_right_action(const algebra::Algebra& a, int dim, const std::vector<Matrix>& act, const std::string& tag,
                        ModuleReport& rep)
{
    if (static_cast<int>(act.size()) != a.dim) {
        rep.ok = false;
        rep.failures.push_back(tag + ": action list has wrong length");
        return;
    }
    for (int i = 0; i < a.dim; ++i)
        if (act[i].rows() != dim || act[i].cols() != dim || act[i].field() != a.field) {
            rep.ok = false;
            rep.failures.push_back(fmt::format("{}: matrix {} has wrong shape", tag, i));
            return;
        }
    if (!combine(a.field, dim, act, a.unit).is_identity()) {
        rep.ok = false;
        rep.failures.push_back(tag + ": unit does not act as the identity");
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec bij = a.mul(a.basis_vec(i), a.basis_vec(j));
            if (act[j] * act[i] != combine(a.field, dim, act, bij)) {
                rep.ok = false;
                rep.failures.push_back(fmt::format("{}: (v b{}) b{} != v (b{} b{})", tag, i, j, i, j));
            }
        }
}

}  // namespace

ModuleReport check_module(const RightModule& m)
{
    ModuleReport rep;
    if (!m.alg) {
        rep.ok = false;
        rep.failures.push_back("module has no algebra");
        return rep;
    }
    check_right_action(*m.alg, m.dim, m.act, "right action", rep);
    return rep;
}

ModuleReport check_bimodule(const Bimodule& c)
{
    ModuleReport rep;
    if (!c.left_alg || !c.right_alg) {
        rep.ok = false;
        rep.failures.push_back("bimodule has no algebra");
        return rep;
    }
    if (c.left_alg->field != c.right_alg->field) {
        rep.ok = false;
        rep.failures.push_back("bimodule sides have different fields");
        return rep;
    }
    check_right_action(*c.right_alg, c.dim, c.right, "right action", rep);
    // The left action is a right action of the opposite algebra.
    const auto& l = *c.left_alg;
    if (static_cast<int>(c.left.size()) != l.dim) {
        rep.ok = false;
        rep.failures.push_back("left action list has wrong length");
        return rep;
    }
    for (int i = 0; i < l.dim; ++i)
        if (c.left[i].rows() != c.dim || c.left[i].cols() != c.dim) {
            rep.ok = false;
            rep.failures.push_back(fmt::format("left action matrix {} has wrong shape", i));
            return rep;
        }
    if (!combine(l.field, c.dim, c.left, l.unit).is_identity()) {
        rep.ok = false;
        rep.failures.push_back("left action: unit does not act as the identity");
    }
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < l.dim; ++j) {
            Vec aij = l.mul(l.basis_vec(i), l.basis_vec(j));
            if (c.left[i] * c.left[j] != combine(l.field, c.dim, c.left, aij)) {
                rep.ok = false;
                rep.failures.push_back(fmt::format("left action: a{} (a{} c) != (a{} a{}) c", i, j, i, j));
            }
        }
    if (!rep.ok)
        return rep;
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < c.right_alg->dim; ++j)
            if (c.left[i] * c.right[j] != c.right[j] * c.left[i]) {
                rep.ok = false;
                rep.failures.push_back(fmt::format("actions of a{} and b{} do not commute", i, j));
            }
    return rep;
}

bool is_module_map(const Matrix& f, const RightModule& m, const RightModule& n)
{
    if (f.rows() != n.dim || f.cols() != m.dim)
        return false;
    for (auto& g : m.alg->generators)
        if (f * m.action(g) != n.action(g) * f)
            return false;
    return true;
}

RightModule zero_module(const AlgebraPtr& a)
{
    RightModule m;
    m.alg = a;
    m.dim = 0;
    m.act.assign(a->dim, Matrix(a->field, 0, 0));
    m.standard = true;
    return m;
}

RightModule regular_module(const AlgebraPtr& a)
{
    RightModule m;
    m.alg = a;
    m.dim = a->dim;
    m.act = a->right;
    return m;
}

RightModule idempotent_projective(const AlgebraPtr& a, int t)
{
    return standard_projective(a, {t});
}

RightModule standard_projective(const AlgebraPtr& a, const std::vector<int>& types)
{
    const FieldSpec& f = a->field;
    RightModule m;
    m.alg = a;
    m.standard = true;
    m.blocks = types;
    int n = 0;
    for (int t : types) {
        if (t < 0 || t >= static_cast<int>(a->idem_basis.size()))
            throw std::invalid_argument("standard_projective: idempotent index out of range");
        n += a->idem_basis[t].cols();
    }
    m.dim = n;
    for (int j = 0; j < a->dim; ++j) {
        std::vector<Matrix> parts;
        for (int t : types)
            parts.push_back(a->idem_action[t][j]);
        m.act.push_back(Matrix::block_diag(f, parts));
    }
    return m;
}

RightModule direct_sum(const RightModule& m, const RightModule& n)
{
    if (!same_algebra(m.alg, n.alg))
        throw std::invalid_argument("direct_sum: modules over different algebras");
    RightModule s;
    s.alg = m.alg;
    s.dim = m.dim + n.dim;
    for (int j = 0; j < m.alg->dim; ++j)
        s.act.push_back(Matrix::block_diag(m.field(), {m.act[j], n.act[j]}));
    if (m.standard && n.standard) {
        s.standard = true;
        s.blocks = m.blocks;
        s.blocks.insert(s.blocks.end(), n.blocks.begin(), n.blocks.end());
    }
    return s;
}

RightModule direct_sum(const AlgebraPtr& a, const std::vector<RightModule>& parts)
{
    RightModule s = zero_module(a);
    for (auto& p : parts)
        s = direct_sum(s, p);
    return s;
}

RightModule submodule(const RightModule& m, const Matrix& basis)
{
    require_module_shape(m, "submodule");
    Echelon e(m.field(), m.dim);
    e.add_columns(basis);
    Matrix b = e.basis();
    RightModule s;
    s.alg = m.alg;
    s.dim = b.cols();
    for (int j = 0; j < m.alg->dim; ++j) {
        Matrix img = m.act[j] * b;
        for (int c = 0; c < img.cols(); ++c)
            if (!e.contains(img.col_vector(c)))
                throw std::invalid_argument("submodule: subspace is not invariant");
        s.act.push_back(coords_in(e, img));
    }
    return s;
}

Quotient quotient_module(const RightModule& m, const Matrix& sub_basis)
{
    require_module_shape(m, "quotient_module");
    const FieldSpec& f = m.field();
    Echelon e(f, m.dim);
    e.add_columns(sub_basis);
    std::vector<int> fc = e.free_columns();
    const int q = static_cast<int>(fc.size());
    auto project = [&](Vec v) {
        e.reduce(v);
        Vec out(q);
        for (int s = 0; s < q; ++s)
            out[s] = v[fc[s]];
        return out;
    };
    Quotient res;
    res.module.alg = m.alg;
    res.module.dim = q;
    res.projection = Matrix(f, q, m.dim);
    for (int i = 0; i < m.dim; ++i) {
        Vec v(m.dim, Scalar(0));
        v[i] = 1;
        Vec p = project(v);
        for (int s = 0; s < q; ++s)
            res.projection.raw(s, i) = p[s];
    }
    res.section = Matrix(f, m.dim, q);
    for (int s = 0; s < q; ++s)
        res.section.raw(fc[s], s) = 1;
    for (int j = 0; j < m.alg->dim; ++j) {
        Matrix a = res.projection * m.act[j] * res.section;
        // The section picks representatives; invariance of the subspace makes this independent of the choice.
        res.module.act.push_back(std::move(a));
    }
    for (int j = 0; j < m.alg->dim; ++j) {
        Matrix img = m.act[j] * sub_basis;
        for (int c = 0; c < img.cols(); ++c)
            if (!e.contains(img.col_vector(c)))
                throw std::invalid_argument("quotient_module: subspace is not invariant");
    }
    return res;
}

Matrix radical_submodule(const RightModule& m)
{
    if (!m.alg->radical_known)
        throw std::invalid_argument("radical_submodule: radical of the algebra is not available");
    Echelon e(m.field(), m.dim);
    for (auto& v : m.alg->radical_generators)
        e.add_columns(m.action(v));
    return e.basis();
}

Cover top_cover(const RightModule& m, int variant, const Matrix* covered)
{
    require_module_shape(m, "top_cover");
    const auto& a = *m.alg;
    const FieldSpec& f = a.field;
    Cover cv;
    if (m.standard && !covered && variant == 0) {
        cv.types = m.blocks;
        cv.free = m;
        cv.pi = Matrix::identity(f, m.dim);
        cv.section = cv.pi;
        cv.kernel = Matrix(f, m.dim, 0);
        int off = 0;
        for (int t : m.blocks) {
            Vec g(m.dim, Scalar(0));
            Echelon eb(f, a.dim);
            eb.add_columns(a.idem_basis[t]);
            Vec c = eb.coordinates(a.idempotents[t]);
            for (size_t r = 0; r < c.size(); ++r)
                g[off + r] = c[r];
            cv.generators.push_back(g);
            off += a.idem_basis[t].cols();
        }
        return cv;
    }
    Echelon span(f, m.dim);
    if (a.radical_known)
        for (auto& v : a.radical_generators)
            span.add_columns(m.action(v));
    if (covered)
        span.add_columns(*covered);
    // Precompute the action matrices of the basis of each e_t A.
    std::vector<std::vector<Matrix>> idem_acts(a.idempotents.size());
    for (size_t t = 0; t < a.idempotents.size(); ++t)
        for (int s = 0; s < a.idem_basis[t].cols(); ++s)
            idem_acts[t].push_back(m.action(a.idem_basis[t].col_vector(s)));
    std::vector<Vec> pi_cols;
    const int nt = static_cast<int>(a.idempotents.size());
    for (int ti = 0; ti < nt && span.dim() < m.dim; ++ti) {
        const int t = (variant & 1) ? nt - 1 - ti : ti;
        Matrix met = exactla::image_basis(m.action(a.idempotents[t]));
        for (int ci = 0; ci < met.cols() && span.dim() < m.dim; ++ci) {
            const int c = (variant & 1) ? met.cols() - 1 - ci : ci;
            Vec v = met.col_vector(c);
            if (variant & 2) {
                // Perturb the representative by the later basis vectors of M e_t.
                for (int c2 = 0; c2 < met.cols(); ++c2)
                    if (c2 != c)
                        for (int r = 0; r < m.dim; ++r)
                            f.add_mul(v[r], met(r, c2), Scalar(c2 > c ? 1 : 0));
            }
            if (span.contains(v))
                continue;
            cv.types.push_back(static_cast<int>(t));
            cv.generators.push_back(v);
            for (auto& act : idem_acts[t]) {
                Vec w = mat_vec(act, v);
                span.add(w);
                pi_cols.push_back(std::move(w));
            }
        }
    }
    if (span.dim() != m.dim)
        throw std::logic_error("top_cover: generators do not span the module");
    cv.free = standard_projective(m.alg, cv.types);
    cv.pi = from_columns(f, m.dim, pi_cols);
    if (cv.pi.cols() == 0)
        cv.pi = Matrix(f, m.dim, 0);
    if (covered)
        return cv;
    auto s = exactla::solve(cv.pi, Matrix::identity(f, m.dim));
    if (!s)
        throw std::logic_error("top_cover: projection is not surjective");
    cv.section = std::move(*s);
    cv.kernel = exactla::kernel_basis(cv.pi);
    return cv;
}

int top_dim(const RightModule& m)
{
    return m.dim - radical_submodule(m).cols();
}

bool is_projective(const RightModule& m)
{
    if (!m.alg->radical_known)
        throw std::invalid_argument("is_projective: radical of the algebra is not available");
    return top_cover(m).kernel.cols() == 0;
}

std::vector<Matrix> hom_space_direct(const RightModule& m, const RightModule& n)
{
    const FieldSpec& f = m.field();
    const int dm = m.dim, dn = n.dim;
    const int unknowns = dm * dn;
    std::vector<Matrix> out;
    if (unknowns == 0)
        return out;
    // f is dn x dm, unknown index r*dm + c.
    Echelon e(f, unknowns);
    for (auto& g : m.alg->generators) {
        Matrix am = m.action(g), an = n.action(g);
        for (int r = 0; r < dn && e.dim() < unknowns; ++r)
            for (int c = 0; c < dm && e.dim() < unknowns; ++c) {
                // (f am - an f)(r, c)
                Vec row(unknowns, Scalar(0));
                for (int k = 0; k < dm; ++k)
                    if (sgn(am(k, c)) != 0)
                        f.add_mul(row[r * dm + k], am(k, c), Scalar(1));
                for (int k = 0; k < dn; ++k)
                    if (sgn(an(r, k)) != 0)
                        f.sub_mul(row[k * dm + c], an(r, k), Scalar(1));
                if (!is_zero_vec(row))
                    e.add(std::move(row));
            }
    }
    Matrix ns = e.null_space();
    for (int q = 0; q < ns.cols(); ++q) {
        Matrix h(f, dn, dm);
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dm; ++c)
                h.raw(r, c) = ns(r * dm + c, q);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n)
{
    if (!same_algebra(m.alg, n.alg))
        throw std::invalid_argument("hom_space: modules over different algebras");
    const auto& a = *m.alg;
    const FieldSpec& f = a.field;
    std::vector<Matrix> out;
    if (m.dim == 0 || n.dim == 0)
        return out;
    Cover cv = top_cover(m);
    const int ntypes = static_cast<int>(a.idempotents.size());
    // Basis of N e_t and the matrices W_{t,s} = action(b_s) restricted to N e_t.
    std::vector<Matrix> net(ntypes);
    std::vector<std::vector<Matrix>> w(ntypes);
    std::vector<bool> used(ntypes, false);
    for (int t : cv.types)
        used[t] = true;
    for (int t = 0; t < ntypes; ++t) {
        if (!used[t])
            continue;
        net[t] = exactla::image_basis(n.action(a.idempotents[t]));
        for (int s = 0; s < a.idem_basis[t].cols(); ++s)
            w[t].push_back(n.action(a.idem_basis[t].col_vector(s)) * net[t]);
    }
    std::vector<int> uoff;
    int unknowns = 0;
    for (int t : cv.types) {
        uoff.push_back(unknowns);
        unknowns += net[t].cols();
    }
    if (unknowns == 0)
        return out;
    // phi(x) for x in the free module, as a dn x unknowns matrix.
    auto phi_of = [&](const Vec& x) {
        Matrix p(f, n.dim, unknowns);
        int off = 0;
        for (size_t g = 0; g < cv.types.size(); ++g) {
            int t = cv.types[g];
            for (int s = 0; s < a.idem_basis[t].cols(); ++s)
                if (sgn(x[off + s]) != 0) {
                    Matrix blk = p.block(0, uoff[g], n.dim, net[t].cols());
                    blk.add_scaled(w[t][s], x[off + s]);
                    p.set_block(0, uoff[g], blk);
                }
            off += a.idem_basis[t].cols();
        }
        return p;
    };
    Echelon e(f, unknowns);
    for (int k = 0; k < cv.kernel.cols() && e.dim() < unknowns; ++k) {
        Matrix p = phi_of(cv.kernel.col_vector(k));
        for (int r = 0; r < p.rows() && e.dim() < unknowns; ++r) {
            Vec row(unknowns);
            for (int c = 0; c < unknowns; ++c)
                row[c] = p(r, c);
            if (!is_zero_vec(row))
                e.add(std::move(row));
        }
    }
    Matrix ns = e.null_space();
    for (int q = 0; q < ns.cols(); ++q) {
        // Column (g, s) of phi is W_{t,s} y_g.
        Matrix phi(f, n.dim, cv.free.dim);
        int off = 0;
        for (size_t g = 0; g < cv.types.size(); ++g) {
            int t = cv.types[g];
            Matrix y = ns.block(uoff[g], q, net[t].cols(), 1);
            for (int s = 0; s < a.idem_basis[t].cols(); ++s)
                phi.set_block(0, off + s, w[t][s] * y);
            off += a.idem_basis[t].cols();
        }
        out.push_back(phi * cv.section);
    }
    return out;
}

Bimodule regular_bimodule(const AlgebraPtr& a)
{
    Bimodule b;
    b.left_alg = a;
    b.right_alg = a;
    b.dim = a->dim;
    b.left = a->left;
    b.right = a->right;
    return b;
}

RightModule as_right_module(const Bimodule& c)
{
    RightModule m;
    m.alg = c.right_alg;
    m.dim = c.dim;
    m.act = c.right;
    return m;
}

RightModule as_left_module(const Bimodule& c)
{
    RightModule m;
    m.alg = algebra::opposite(c.left_alg);
    m.dim = c.dim;
    m.act = c.left;
    return m;
}

Bimodule opposite_bimodule(const Bimodule& c)
{
    Bimodule b;
    b.left_alg = algebra::opposite(c.right_alg);
    b.right_alg = algebra::opposite(c.left_alg);
    b.dim = c.dim;
    b.left = c.right;
    b.right = c.left;
    return b;
}

Bimodule dual_bimodule(const Bimodule& c)
{
    Bimodule b;
    b.left_alg = c.right_alg;
    b.right_alg = c.left_alg;
    b.dim = c.dim;
    for (auto& r : c.right)
        b.left.push_back(r.transpose());
    for (auto& l : c.left)
        b.right.push_back(l.transpose());
    return b;
}

Bimodule zero_bimodule(const AlgebraPtr& l, const AlgebraPtr& r)
{
    Bimodule b;
    b.left_alg = l;
    b.right_alg = r;
    b.dim = 0;
    b.left.assign(l->dim, Matrix(l->field, 0, 0));
    b.right.assign(r->dim, Matrix(l->field, 0, 0));
    return b;
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b)
{
    if (!same_algebra(a.left_alg, b.left_alg) || !same_algebra(a.right_alg, b.right_alg))
        throw std::invalid_argument("direct_sum: bimodules over different algebras");
    Bimodule s;
    s.left_alg = a.left_alg;
    s.right_alg = a.right_alg;
    s.dim = a.dim + b.dim;
    for (size_t i = 0; i < a.left.size(); ++i)
        s.left.push_back(Matrix::block_diag(a.field(), {a.left[i], b.left[i]}));
    for (size_t i = 0; i < a.right.size(); ++i)
        s.right.push_back(Matrix::block_diag(a.field(), {a.right[i], b.right[i]}));
    return s;
}

/*
 * Tensor data. With a cover F -> M with kernel K, M (x) C is the quotient of
 * F (x) C = (+)_g e_{t_g} C by the image of K (x) C.
 */
struct TensorData {
    FieldSpec field;
    AlgebraPtr alg;
    /* Left action of C, indexed by the basis of alg. */
    std::vector<Matrix> c_left;
    std::vector<int> types;
    std::vector<int> free_offset;
    std::vector<int> block_offset;
    /* e_t C basis and a left inverse, per type. */
    std::vector<Matrix> bc;
    std::vector<Matrix> li;
    Matrix section;
    int total = 0;
    Echelon relations{FieldSpec{}, 0};
    std::vector<int> free_cols;
    bool generic = false;
    int c_dim = 0;

    /* The vector of x (x) c in (+) e_t C, for x in the free module. */
    Vec lift(const Vec& x, const Vec& c) const
    {
        Vec out(total, Scalar(0));
        for (size_t g = 0; g < types.size(); ++g) {
            int t = types[g];
            const Matrix& B = alg->idem_basis[t];
            Vec elem(alg->dim, Scalar(0));
            bool any = false;
            for (int s = 0; s < B.cols(); ++s) {
                const Scalar& xs = x[free_offset[g] + s];
                if (sgn(xs) == 0)
                    continue;
                any = true;
                for (int k = 0; k < alg->dim; ++k)
                    if (sgn(B(k, s)) != 0)
                        field.add_mul(elem[k], B(k, s), xs);
            }
            if (!any)
                continue;
            Vec y(c_dim, Scalar(0));
            for (int k = 0; k < alg->dim; ++k)
                if (sgn(elem[k]) != 0) {
                    Vec lc = mat_vec(c_left[k], c);
                    for (int r = 0; r < c_dim; ++r)
                        if (sgn(lc[r]) != 0)
                            field.add_mul(y[r], elem[k], lc[r]);
                }
            Vec z = mat_vec(li[t], y);
            for (size_t r = 0; r < z.size(); ++r)
                out[block_offset[g] + r] = z[r];
        }
        return out;
    }

    Vec reduce_to_quotient(Vec v) const
    {
        relations.reduce(v);
        Vec out(free_cols.size());
        for (size_t s = 0; s < free_cols.size(); ++s)
            out[s] = v[free_cols[s]];
        return out;
    }
};

Vec Tensor::image(const Vec& m, const Vec& c) const
{
    const TensorData& d = *data;
    if (d.generic) {
        Vec v(source_dim * c_dim, Scalar(0));
        for (int i = 0; i < source_dim; ++i)
            if (sgn(m[i]) != 0)
                for (int j = 0; j < c_dim; ++j)
                    if (sgn(c[j]) != 0)
                        v[i * c_dim + j] = d.field.mul(m[i], c[j]);
        return d.reduce_to_quotient(std::move(v));
    }
    Vec x = mat_vec(d.section, m);
    return d.reduce_to_quotient(d.lift(x, c));
}

Matrix Tensor::proj() const
{
    const FieldSpec& f = data->field;
    Matrix p(f, module.dim, source_dim * c_dim);
    for (int i = 0; i < source_dim; ++i) {
        Vec m(source_dim, Scalar(0));
        m[i] = 1;
        for (int j = 0; j < c_dim; ++j) {
            Vec c(c_dim, Scalar(0));
            c[j] = 1;
            Vec v = image(m, c);
            for (int r = 0; r < module.dim; ++r)
                p.raw(r, i * c_dim + j) = v[r];
        }
    }
    return p;
}

namespace {

void finish_quotient_module(Tensor& t, const Bimodule& c, const std::function<Vec(int, int)>& right_on_basis)
{
    const TensorData& d = *t.data;
    const int q = static_cast<int>(d.free_cols.size());
    t.module.alg = c.right_alg;
    t.module.dim = q;
    for (int r = 0; r < c.right_alg->dim; ++r) {
        Matrix a(d.field, q, q);
        for (int s = 0; s < q; ++s) {
            Vec v = d.reduce_to_quotient(right_on_basis(d.free_cols[s], r));
            for (int u = 0; u < q; ++u)
                a.raw(u, s) = v[u];
        }
        t.module.act.push_back(std::move(a));
    }
}

}  // namespace

Tensor tensor_over_algebra(const RightModule& m, const Bimodule& c)
{
    if (!same_algebra(m.alg, c.left_alg))
        throw std::invalid_argument("tensor_over_algebra: module and bimodule over different algebras");
    const auto& a = *m.alg;
    const FieldSpec& f = a.field;
    Cover cv = top_cover(m);
    auto d = std::make_shared<TensorData>();
    d->field = f;
    d->alg = m.alg;
    d->c_left = c.left;
    d->types = cv.types;
    d->section = cv.section;
    d->c_dim = c.dim;
    const int ntypes = static_cast<int>(a.idempotents.size());
    d->bc.resize(ntypes);
    d->li.resize(ntypes);
    for (int t = 0; t < ntypes; ++t) {
        d->bc[t] = exactla::image_basis(c.left_action(a.idempotents[t]));
        Echelon e(f, c.dim);
        e.add_columns(d->bc[t]);
        d->bc[t] = e.basis();
        Matrix li(f, e.dim(), c.dim);
        // Coordinates are the entries at the pivots.
        for (int r = 0; r < e.dim(); ++r)
            li.raw(r, e.pivots()[r]) = 1;
        d->li[t] = std::move(li);
    }
    int foff = 0, boff = 0;
    for (int t : cv.types) {
        d->free_offset.push_back(foff);
        d->block_offset.push_back(boff);
        foff += a.idem_basis[t].cols();
        boff += d->bc[t].cols();
    }
    d->total = boff;
    d->relations = Echelon(f, boff);
    for (int k = 0; k < cv.kernel.cols(); ++k) {
        Vec kv = cv.kernel.col_vector(k);
        for (int j = 0; j < c.dim && d->relations.dim() < boff; ++j) {
            Vec cj(c.dim, Scalar(0));
            cj[j] = 1;
            Vec v = d->lift(kv, cj);
            if (!is_zero_vec(v))
                d->relations.add(std::move(v));
        }
    }
    d->free_cols = d->relations.free_columns();
    Tensor t;
    t.source_dim = m.dim;
    t.c_dim = c.dim;
    // Basis vector at column q of block g is gen_g (x) (bc_t column r).
    std::vector<std::pair<int, int>> where(boff);
    for (size_t g = 0; g < cv.types.size(); ++g)
        for (int r = 0; r < d->bc[cv.types[g]].cols(); ++r)
            where[d->block_offset[g] + r] = {static_cast<int>(g), r};
    for (int q : d->free_cols) {
        auto [g, r] = where[q];
        t.section.push_back({cv.generators[g], d->bc[cv.types[g]].col_vector(r)});
    }
    t.data = d;
    finish_quotient_module(t, c, [&](int q, int r) {
        auto [g, rr] = where[q];
        int ty = cv.types[g];
        Vec y = mat_vec(c.right[r], d->bc[ty].col_vector(rr));
        Vec z = mat_vec(d->li[ty], y);
        Vec v(boff, Scalar(0));
        for (size_t u = 0; u < z.size(); ++u)
            v[d->block_offset[g] + u] = z[u];
        return v;
    });
    return t;
}

Tensor tensor_direct(const RightModule& m, const Bimodule& c)
{
    if (!same_algebra(m.alg, c.left_alg))
        throw std::invalid_argument("tensor_direct: module and bimodule over different algebras");
    const FieldSpec& f = m.field();
    const int dm = m.dim, dc = c.dim, n = dm * dc;
    auto d = std::make_shared<TensorData>();
    d->field = f;
    d->alg = m.alg;
    d->generic = true;
    d->c_dim = dc;
    d->relations = Echelon(f, n);
    for (auto& g : m.alg->generators) {
        Matrix am = m.action(g), lc = c.left_action(g);
        for (int i = 0; i < dm && d->relations.dim() < n; ++i)
            for (int j = 0; j < dc && d->relations.dim() < n; ++j) {
                // (e_i g) (x) e_j - e_i (x) (g e_j)
                Vec v(n, Scalar(0));
                for (int k = 0; k < dm; ++k)
                    if (sgn(am(k, i)) != 0)
                        f.add_mul(v[k * dc + j], am(k, i), Scalar(1));
                for (int k = 0; k < dc; ++k)
                    if (sgn(lc(k, j)) != 0)
                        f.sub_mul(v[i * dc + k], lc(k, j), Scalar(1));
                if (!is_zero_vec(v))
                    d->relations.add(std::move(v));
            }
    }
    d->free_cols = d->relations.free_columns();
    Tensor t;
    t.source_dim = dm;
    t.c_dim = dc;
    t.data = d;
    for (int q : d->free_cols) {
        Vec mv(dm, Scalar(0)), cvv(dc, Scalar(0));
        mv[q / dc] = 1;
        cvv[q % dc] = 1;
        t.section.push_back({mv, cvv});
    }
    finish_quotient_module(t, c, [&](int q, int r) {
        Vec v(n, Scalar(0));
        int i = q / dc, j = q % dc;
        for (int k = 0; k < dc; ++k)
            v[i * dc + k] = c.right[r](k, j);
        return v;
    });
    return t;
}

Matrix tensor_map(const Matrix& g, const Tensor& tm, const Tensor& tn)
{
    const FieldSpec& f = tm.data->field;
    Matrix out(f, tn.module.dim, tm.module.dim);
    for (int q = 0; q < tm.module.dim; ++q) {
        const auto& [mv, cv] = tm.section[q];
        Vec v = tn.image(mat_vec(g, mv), cv);
        for (int r = 0; r < tn.module.dim; ++r)
            out.raw(r, q) = v[r];
    }
    return out;
}

RightModule dual(const RightModule& m)
{
    RightModule d;
    d.alg = algebra::opposite(m.alg);
    d.dim = m.dim;
    for (auto& a : m.act)
        d.act.push_back(a.transpose());
    return d;
}

Matrix dual_map(const Matrix& f)
{
    return f.transpose();
}

ModuleReport check_twostep(const TwoStep& t)
{
    ModuleReport rep;
    if (!t.c) {
        rep.ok = false;
        rep.failures.push_back("two-step module has no bimodule");
        return rep;
    }
    const Bimodule& c = *t.c;
    if (!same_algebra(c.left_alg, c.right_alg) || !same_algebra(t.m0.alg, c.left_alg) ||
        !same_algebra(t.m1.alg, c.left_alg)) {
        rep.ok = false;
        rep.failures.push_back("two-step module: algebras do not match");
        return rep;
    }
    auto r0 = check_module(t.m0), r1 = check_module(t.m1);
    if (!r0.ok)
        rep.failures.push_back("M0: " + r0.summary());
    if (!r1.ok)
        rep.failures.push_back("M1: " + r1.summary());
    if (!r0.ok || !r1.ok) {
        rep.ok = false;
        return rep;
    }
    if (t.xi.rows() != t.m1.dim || t.xi.cols() != t.m0.dim * c.dim) {
        rep.ok = false;
        rep.failures.push_back(fmt::format("xi has shape {}x{}, expected {}x{}", t.xi.rows(), t.xi.cols(), t.m1.dim,
                                           t.m0.dim * c.dim));
        return rep;
    }
    const FieldSpec& f = c.field();
    Matrix i0 = Matrix::identity(f, t.m0.dim), ic = Matrix::identity(f, c.dim);
    const auto& lam = *c.left_alg;
    for (int i = 0; i < lam.dim; ++i) {
        if (t.xi * Matrix::kron(t.m0.act[i], ic) != t.xi * Matrix::kron(i0, c.left[i])) {
            rep.ok = false;
            rep.failures.push_back(fmt::format("xi is not balanced for b{}", i));
        }
        if (t.xi * Matrix::kron(i0, c.right[i]) != t.m1.act[i] * t.xi) {
            rep.ok = false;
            rep.failures.push_back(fmt::format("xi is not linear for b{}", i));
        }
    }
    return rep;
}

TwoStep regular_twostep(const TrivialExtension& te)
{
    const Bimodule& c = *te.c;
    const FieldSpec& f = c.field();
    TwoStep t;
    t.c = te.c;
    t.m0 = regular_module(te.lam);
    t.m1 = as_right_module(c);
    t.xi = Matrix(f, c.dim, te.lam->dim * c.dim);
    for (int i = 0; i < te.lam->dim; ++i)
        for (int s = 0; s < c.dim; ++s)
            for (int r = 0; r < c.dim; ++r)
                t.xi.raw(r, i * c.dim + s) = c.left[i](r, s);
    return t;
}

Matrix xi_from_tensor_map(const Tensor& tm, const Matrix& g)
{
    return g * tm.proj();
}

RightModule assemble_trivext_module(const TwoStep& t, const TrivialExtension& te)
{
    const FieldSpec& f = te.lam->field;
    const int n = te.lam->dim, m = te.c->dim;
    const int d0 = t.m0.dim, d1 = t.m1.dim;
    if (t.xi.rows() != d1 || t.xi.cols() != d0 * m)
        throw std::invalid_argument("assemble_trivext_module: xi has the wrong shape");
    RightModule out;
    out.alg = te.algebra();
    out.dim = d0 + d1;
    for (int i = 0; i < n; ++i)
        out.act.push_back(Matrix::block_diag(f, {t.m0.act[i], t.m1.act[i]}));
    for (int s = 0; s < m; ++s) {
        Matrix a(f, d0 + d1, d0 + d1);
        for (int x = 0; x < d0; ++x)
            for (int r = 0; r < d1; ++r)
                a.raw(d0 + r, x) = t.xi(r, x * m + s);
        out.act.push_back(std::move(a));
    }
    return out;
}

RightModule restrict_along_aug(const RightModule& m, const TrivialExtension& te)
{
    RightModule out;
    out.alg = te.algebra();
    out.dim = m.dim;
    out.act = m.act;
    for (int s = 0; s < te.c->dim; ++s)
        out.act.push_back(Matrix(m.field(), m.dim, m.dim));
    return out;
}

RightModule restrict_to_base(const RightModule& m, const TrivialExtension& te)
{
    RightModule out;
    out.alg = te.lam;
    out.dim = m.dim;
    out.act.assign(m.act.begin(), m.act.begin() + te.lam->dim);
    return out;
}

std::optional<TwoStep> split_twostep(const RightModule& m, const TrivialExtension& te, int dim0)
{
    const int n = te.lam->dim, cm = te.c->dim;
    const int d1 = m.dim - dim0;
    if (dim0 < 0 || d1 < 0)
        return std::nullopt;
    const FieldSpec& f = m.field();
    TwoStep t;
    t.c = te.c;
    t.m0.alg = te.lam;
    t.m0.dim = dim0;
    t.m1.alg = te.lam;
    t.m1.dim = d1;
    for (int i = 0; i < n; ++i) {
        const Matrix& a = m.act[i];
        if (!a.block(0, dim0, dim0, d1).is_zero() || !a.block(dim0, 0, d1, dim0).is_zero())
            return std::nullopt;
        t.m0.act.push_back(a.block(0, 0, dim0, dim0));
        t.m1.act.push_back(a.block(dim0, dim0, d1, d1));
    }
    t.xi = Matrix(f, d1, dim0 * cm);
    for (int s = 0; s < cm; ++s) {
        const Matrix& a = m.act[n + s];
        if (!a.block(0, 0, dim0, m.dim).is_zero() || !a.block(dim0, dim0, d1, d1).is_zero())
            return std::nullopt;
        for (int x = 0; x < dim0; ++x)
            for (int r = 0; r < d1; ++r)
                t.xi.raw(r, x * cm + s) = a(dim0 + r, x);
    }
    return t;
}

RightModule hom_from_bimodule(const Bimodule& c, const RightModule& n, Matrix* basis_out)
{
    if (!same_algebra(c.right_alg, n.alg))
        throw std::invalid_argument("hom_from_bimodule: algebras do not match");
    const FieldSpec& f = c.field();
    RightModule cm = as_right_module(c);
    std::vector<Matrix> hs = hom_space(cm, n);
    const int dc = c.dim, dn = n.dim, h = static_cast<int>(hs.size());
    // vec(f)[x * dc + y] = f(x, y)
    auto vec = [&](const Matrix& m) {
        Vec v(dn * dc);
        for (int x = 0; x < dn; ++x)
            for (int y = 0; y < dc; ++y)
                v[x * dc + y] = m(x, y);
        return v;
    };
    Echelon e(f, dn * dc);
    Matrix basis(f, dn * dc, h);
    for (int q = 0; q < h; ++q) {
        Vec v = vec(hs[q]);
        e.add(v);
        for (int r = 0; r < dn * dc; ++r)
            basis.raw(r, q) = v[r];
    }
    // Re-express in the echelon basis so coordinates are cheap.
    basis = e.basis();
    RightModule out;
    out.alg = c.left_alg;
    out.dim = h;
    for (int i = 0; i < c.left_alg->dim; ++i) {
        Matrix a(f, h, h);
        for (int q = 0; q < h; ++q) {
            Matrix fm(f, dn, dc);
            for (int x = 0; x < dn; ++x)
                for (int y = 0; y < dc; ++y)
                    fm.raw(x, y) = basis(x * dc + y, q);
            Vec co = e.coordinates(vec(fm * c.left[i]));
            for (int u = 0; u < h; ++u)
                a.raw(u, q) = co[u];
        }
        out.act.push_back(std::move(a));
    }
    if (basis_out)
        *basis_out = basis;
    return out;
}

Coaction coaction_from_action(const TwoStep& t)
{
    const Bimodule& c = *t.c;
    const FieldSpec& f = c.field();
    Coaction co;
    co.hom = hom_from_bimodule(c, t.m1, &co.basis);
    Echelon e(f, co.basis.rows());
    e.add_columns(co.basis);
    const int dc = c.dim;
    co.theta = Matrix(f, co.hom.dim, t.m0.dim);
    for (int x = 0; x < t.m0.dim; ++x) {
        Vec v(t.m1.dim * dc);
        for (int r = 0; r < t.m1.dim; ++r)
            for (int y = 0; y < dc; ++y)
                v[r * dc + y] = t.xi(r, x * dc + y);
        Vec cc = e.coordinates(v);
        for (int u = 0; u < co.hom.dim; ++u)
            co.theta.raw(u, x) = cc[u];
    }
    return co;
}

Matrix action_from_coaction(const TwoStep& shape, const Coaction& co)
{
    const int dc = shape.c->dim;
    Matrix vecs = co.basis * co.theta;
    Matrix xi(shape.c->field(), shape.m1.dim, shape.m0.dim * dc);
    for (int x = 0; x < shape.m0.dim; ++x)
        for (int r = 0; r < shape.m1.dim; ++r)
            for (int y = 0; y < dc; ++y)
                xi.raw(r, x * dc + y) = vecs(r * dc + y, x);
    return xi;
}

TwoStep dual_twostep(const TwoStep& t)
{
    const int dc = t.c->dim;
    TwoStep d;
    d.c = std::make_shared<const Bimodule>(opposite_bimodule(*t.c));
    d.m0 = dual(t.m1);
    d.m1 = dual(t.m0);
    d.xi = Matrix(t.c->field(), t.m0.dim, t.m1.dim * dc);
    for (int m = 0; m < t.m0.dim; ++m)
        for (int fi = 0; fi < t.m1.dim; ++fi)
            for (int c = 0; c < dc; ++c)
                d.xi.raw(m, fi * dc + c) = t.xi(fi, m * dc + c);
    return d;
}

}  // namespace trivext::modrep

#include "trivext/algebra.h"
#include "trivext/modrep.h"

#include <fmt/core.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace trivext::algebra {

using exactla::Echelon;

Vec Algebra::basis_vec(int i) const
{
    Vec v(dim, Scalar(0));
    v[i] = 1;
    return v;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const
{
    Vec out(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        const Matrix& L = left[i];
        for (int j = 0; j < dim; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            Scalar xy = field.mul(x[i], y[j]);
            for (int k = 0; k < dim; ++k)
                if (sgn(L(k, j)) != 0)
                    field.add_mul(out[k], xy, L(k, j));
        }
    }
    return out;
}

Matrix Algebra::left_mult(const Vec& x) const
{
    Matrix m(field, dim, dim);
    for (int i = 0; i < dim; ++i)
        if (sgn(x[i]) != 0)
            m.add_scaled(left[i], x[i]);
    return m;
}

Matrix Algebra::right_mult(const Vec& y) const
{
    Matrix m(field, dim, dim);
    for (int i = 0; i < dim; ++i)
        if (sgn(y[i]) != 0)
            m.add_scaled(right[i], y[i]);
    return m;
}

Algebra from_table(FieldSpec f, std::vector<std::string> labels, const std::vector<TableEntry>& table, Vec unit)
{
    Algebra a;
    a.field = f;
    a.dim = static_cast<int>(labels.size());
    if (a.dim <= 0)
        throw AlgebraError("algebra must have positive dimension");
    a.labels = std::move(labels);
    a.left.assign(a.dim, Matrix(f, a.dim, a.dim));
    a.right.assign(a.dim, Matrix(f, a.dim, a.dim));
    for (const auto& e : table) {
        if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= a.dim || e.j >= a.dim || e.k >= a.dim)
            throw AlgebraError(fmt::format("structure constant index ({},{},{}) out of range", e.i, e.j, e.k));
        Scalar c = f.add(a.left[e.i](e.k, e.j), e.coeff);
        a.left[e.i].set(e.k, e.j, c);
        a.right[e.j].set(e.k, e.i, c);
    }
    if (static_cast<int>(unit.size()) != a.dim)
        throw AlgebraError("unit has wrong length");
    for (auto& u : unit)
        u = f.reduce(u);
    a.unit = std::move(unit);
    return a;
}

std::string CheckReport::summary() const
{
    if (ok)
        return "pass";
    std::string s = "fail";
    for (auto& t : assoc_failures)
        s += fmt::format(" assoc({},{},{})", t[0], t[1], t[2]);
    for (int i : unit_failures)
        s += fmt::format(" unit({})", i);
    for (auto& n : notes)
        s += " " + n;
    return s;
}

CheckReport check_algebra(const Algebra& a)
{
    CheckReport rep;
    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec bij = a.left[i].col_vector(j);
            Matrix lhs_all = a.left_mult(bij);  // (b_i b_j) * -
            for (int k = 0; k < n; ++k) {
                Vec bjk = a.left[j].col_vector(k);
                Vec rhs(n, Scalar(0));
                for (int t = 0; t < n; ++t)
                    for (int s = 0; s < n; ++s)
                        if (sgn(bjk[s]) != 0 && sgn(a.left[i](t, s)) != 0)
                            a.field.add_mul(rhs[t], bjk[s], a.left[i](t, s));
                for (int t = 0; t < n; ++t)
                    if (lhs_all(t, k) != rhs[t]) {
                        rep.assoc_failures.push_back({i, j, k});
                        break;
                    }
            }
        }
    Matrix lu = a.left_mult(a.unit), ru = a.right_mult(a.unit);
    for (int i = 0; i < n; ++i) {
        bool good = true;
        for (int k = 0; k < n; ++k) {
            Scalar want = (k == i) ? 1 : 0;
            if (lu(k, i) != want || ru(k, i) != want)
                good = false;
        }
        if (!good)
            rep.unit_failures.push_back(i);
    }
    if (a.idempotents.size() > 0) {
        Vec sum = a.zero_vec();
        for (size_t s = 0; s < a.idempotents.size(); ++s) {
            const Vec& e = a.idempotents[s];
            if (static_cast<int>(e.size()) != n) {
                rep.notes.push_back("idempotent length");
                continue;
            }
            for (int k = 0; k < n; ++k)
                sum[k] = a.field.add(sum[k], e[k]);
            for (size_t t = 0; t < a.idempotents.size(); ++t) {
                Vec p = a.mul(e, a.idempotents[t]);
                Vec want = (s == t) ? e : a.zero_vec();
                if (p != want)
                    rep.notes.push_back(fmt::format("idempotents({},{})", s, t));
            }
        }
        if (sum != a.unit)
            rep.notes.push_back("idempotents do not sum to unit");
    }
    rep.ok = rep.assoc_failures.empty() && rep.unit_failures.empty() && rep.notes.empty();
    return rep;
}

bool radical_supported(const Algebra& a)
{
    return !a.field.is_prime() || a.field.p > static_cast<unsigned long>(a.dim);
}

Matrix radical(const Algebra& a)
{
    if (!radical_supported(a))
        throw AlgebraError(fmt::format("radical needs char 0 or p > dim (p = {}, dim = {})", a.field.p, a.dim));
    const int n = a.dim;
    Vec tr(n, Scalar(0));
    for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t)
            tr[k] = a.field.add(tr[k], a.left[k](t, t));
    // T(i,j) = tr(L_{b_i b_j}); J is the left kernel of T.
    Matrix T(a.field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar s(0);
            for (int k = 0; k < n; ++k)
                if (sgn(a.left[i](k, j)) != 0)
                    a.field.add_mul(s, a.left[i](k, j), tr[k]);
            T.set(i, j, s);
        }
    return exactla::kernel_basis(T.transpose());
}

static void compute_projectives(Algebra& a)
{
    a.idem_basis.clear();
    a.idem_action.clear();
    for (auto& e : a.idempotents) {
        Matrix B = exactla::image_basis(a.left_mult(e));
        Echelon E(a.field, a.dim);
        E.add_columns(B);
        B = E.basis();
        std::vector<Matrix> acts;
        for (int j = 0; j < a.dim; ++j) {
            Matrix img = a.right[j] * B;
            Matrix w(a.field, B.cols(), B.cols());
            for (int s = 0; s < B.cols(); ++s) {
                auto c = E.coordinates(img.col_vector(s));
                for (int r = 0; r < B.cols(); ++r)
                    w.raw(r, s) = c[r];
            }
            acts.push_back(std::move(w));
        }
        a.idem_basis.push_back(std::move(B));
        a.idem_action.push_back(std::move(acts));
    }
}

void finalize(Algebra& a)
{
    if (a.idempotents.empty())
        a.idempotents = {a.unit};
    compute_projectives(a);
    a.generators.clear();
    a.radical_generators.clear();
    if (radical_supported(a)) {
        a.radical = radical(a);
        a.radical_known = true;
        Echelon J(a.field, a.dim);
        J.add_columns(a.radical);
        for (int q : J.free_columns())
            a.generators.push_back(a.basis_vec(q));
        Echelon J2(a.field, a.dim);
        for (int s = 0; s < a.radical.cols(); ++s)
            for (int t = 0; t < a.radical.cols(); ++t)
                J2.add(a.mul(a.radical.col_vector(s), a.radical.col_vector(t)));
        for (int s = 0; s < a.radical.cols(); ++s) {
            Vec v = a.radical.col_vector(s);
            if (J2.add(v)) {
                a.generators.push_back(a.radical.col_vector(s));
                a.radical_generators.push_back(a.radical.col_vector(s));
            }
        }
    }
    else {
        a.radical_known = false;
        a.radical = Matrix(a.field, a.dim, 0);
        for (int i = 0; i < a.dim; ++i)
            a.generators.push_back(a.basis_vec(i));
    }
}

AlgebraPtr make_checked(Algebra a)
{
    if (a.idempotents.empty())
        a.idempotents = {a.unit};
    auto rep = check_algebra(a);
    if (!rep.ok)
        throw AlgebraError("algebra check failed: " + rep.summary());
    finalize(a);
    return std::make_shared<const Algebra>(std::move(a));
}

AlgebraPtr field_algebra(FieldSpec f)
{
    return make_checked(from_table(f, {"1"}, {{0, 0, 0, Scalar(1)}}, {Scalar(1)}));
}

AlgebraPtr opposite(const AlgebraPtr& a)
{
    // Memo so that opposite(opposite(a)) is the same object as a.
    static std::mutex mu;
    static std::map<const Algebra*, std::pair<std::weak_ptr<const Algebra>, std::weak_ptr<const Algebra>>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(a.get());
    if (it != memo.end() && !it->second.first.expired()) {
        if (auto o = it->second.second.lock())
            return o;
    }
    Algebra o;
    o.field = a->field;
    o.dim = a->dim;
    o.labels = a->labels;
    o.left = a->right;
    o.right = a->left;
    o.unit = a->unit;
    o.idempotents = a->idempotents;
    o.generators = a->generators;
    o.radical_generators = a->radical_generators;
    o.radical = a->radical;
    o.radical_known = a->radical_known;
    compute_projectives(o);
    auto op = std::make_shared<const Algebra>(std::move(o));
    // Keep opposites alive so repeated duals share one algebra object.
    static std::vector<AlgebraPtr> keep;
    keep.push_back(op);
    memo[a.get()] = {a, op};
    memo[op.get()] = {op, a};
    return op;
}

SemisimpleQuotient semisimple_quotient(const AlgebraPtr& ap)
{
    const Algebra& a = *ap;
    if (!a.radical_known)
        throw AlgebraError("semisimple quotient needs the radical");
    Echelon J(a.field, a.dim);
    J.add_columns(a.radical);
    std::vector<int> fc = J.free_columns();
    const int q = static_cast<int>(fc.size());
    auto project = [&](Vec v) {
        J.reduce(v);
        Vec out(q);
        for (int s = 0; s < q; ++s)
            out[s] = v[fc[s]];
        return out;
    };
    SemisimpleQuotient res;
    res.map = Matrix(a.field, q, a.dim);
    for (int i = 0; i < a.dim; ++i) {
        Vec p = project(a.basis_vec(i));
        for (int s = 0; s < q; ++s)
            res.map.set(s, i, p[s]);
    }
    std::vector<std::string> labels;
    std::vector<TableEntry> table;
    for (int s = 0; s < q; ++s)
        labels.push_back(a.labels[fc[s]]);
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t) {
            Vec p = project(a.mul(a.basis_vec(fc[s]), a.basis_vec(fc[t])));
            for (int u = 0; u < q; ++u)
                if (sgn(p[u]) != 0)
                    table.push_back({s, t, u, p[u]});
        }
    Algebra qa = from_table(a.field, labels, table, project(a.unit));
    for (auto& e : a.idempotents) {
        Vec pe = project(e);
        if (std::any_of(pe.begin(), pe.end(), [](const Scalar& x) { return sgn(x) != 0; }))
            qa.idempotents.push_back(pe);
    }
    res.quotient = make_checked(std::move(qa));

    modrep::RightModule top;
    top.alg = ap;
    top.dim = q;
    modrep::Bimodule tb;
    tb.left_alg = ap;
    tb.right_alg = ap;
    tb.dim = q;
    for (int i = 0; i < a.dim; ++i) {
        Matrix r(a.field, q, q), l(a.field, q, q);
        for (int s = 0; s < q; ++s) {
            Vec pr = project(a.mul(a.basis_vec(fc[s]), a.basis_vec(i)));
            Vec pl = project(a.mul(a.basis_vec(i), a.basis_vec(fc[s])));
            for (int u = 0; u < q; ++u) {
                r.set(u, s, pr[u]);
                l.set(u, s, pl[u]);
            }
        }
        top.act.push_back(r);
        tb.right.push_back(r);
        tb.left.push_back(l);
    }
    res.top = std::move(top);
    res.top_bimodule = std::move(tb);
    return res;
}

TrivialExtension trivial_extension(const AlgebraPtr& lam, const modrep::BimodulePtr& c)
{
    if (c->left_alg.get() != lam.get() && c->left_alg->dim != lam->dim)
        throw AlgebraError("trivial_extension: bimodule is over a different algebra");
    auto rep = modrep::check_bimodule(*c);
    if (!rep.ok)
        throw AlgebraError("trivial_extension: bimodule axioms fail: " + rep.summary());
    const FieldSpec f = lam->field;
    const int n = lam->dim, m = c->dim;
    std::vector<std::string> labels = lam->labels;
    for (int s = 0; s < m; ++s)
        labels.push_back(fmt::format("c{}", s));
    std::vector<TableEntry> table;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (sgn(lam->left[i](k, j)) != 0)
                    table.push_back({i, j, k, lam->left[i](k, j)});
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) {
                if (sgn(c->left[i](t, s)) != 0)
                    table.push_back({i, n + s, n + t, c->left[i](t, s)});
                if (sgn(c->right[i](t, s)) != 0)
                    table.push_back({n + s, i, n + t, c->right[i](t, s)});
            }
    Vec unit = lam->unit;
    unit.resize(n + m, Scalar(0));
    Algebra a = from_table(f, labels, table, unit);
    for (auto e : lam->idempotents) {
        e.resize(n + m, Scalar(0));
        a.idempotents.push_back(e);
    }
    TrivialExtension te;
    te.lam = lam;
    te.c = c;
    std::vector<int> deg(n, 0);
    deg.resize(n + m, 1);
    te.graded = GradedAlgebra{make_checked(std::move(a)), deg, m > 0 ? 1 : 0};
    return te;
}

Product product(const AlgebraPtr& a0, const AlgebraPtr& a1)
{
    if (a0->field != a1->field)
        throw AlgebraError("product: field mismatch");
    if (a0->dim == 0 || a1->dim == 0)
        throw AlgebraError("product: zero-dimensional factor");
    const int n0 = a0->dim, n1 = a1->dim;
    std::vector<std::string> labels;
    for (auto& l : a0->labels)
        labels.push_back("0:" + l);
    for (auto& l : a1->labels)
        labels.push_back("1:" + l);
    std::vector<TableEntry> table;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n0; ++k)
                if (sgn(a0->left[i](k, j)) != 0)
                    table.push_back({i, j, k, a0->left[i](k, j)});
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k)
                if (sgn(a1->left[i](k, j)) != 0)
                    table.push_back({n0 + i, n0 + j, n0 + k, a1->left[i](k, j)});
    Vec e0 = a0->unit, e1(n0, Scalar(0));
    e0.resize(n0 + n1, Scalar(0));
    e1.insert(e1.end(), a1->unit.begin(), a1->unit.end());
    Vec unit(n0 + n1);
    for (int i = 0; i < n0 + n1; ++i)
        unit[i] = a0->field.add(e0[i], e1[i]);
    Algebra a = from_table(a0->field, labels, table, unit);
    for (auto e : a0->idempotents) {
        e.resize(n0 + n1, Scalar(0));
        a.idempotents.push_back(e);
    }
    for (auto& e : a1->idempotents) {
        Vec v(n0, Scalar(0));
        v.insert(v.end(), e.begin(), e.end());
        a.idempotents.push_back(v);
    }
    return Product{make_checked(std::move(a)), n0, e0, e1};
}

modrep::Bimodule inflate_bimodule(const Product& p, const modrep::Bimodule& c)
{
    const FieldSpec f = p.algebra->field;
    const int n = p.algebra->dim, n0 = p.dim0;
    modrep::Bimodule b;
    b.left_alg = p.algebra;
    b.right_alg = p.algebra;
    b.dim = c.dim;
    for (int i = 0; i < n; ++i) {
        b.left.push_back(i < n0 ? c.left[i] : Matrix(f, c.dim, c.dim));
        b.right.push_back(i >= n0 ? c.right[i - n0] : Matrix(f, c.dim, c.dim));
    }
    return b;
}

Triangular upper_triangular(const AlgebraPtr& lam0, const AlgebraPtr& lam1, const modrep::BimodulePtr& c)
{
    if (c->left_alg->dim != lam0->dim || c->right_alg->dim != lam1->dim)
        throw AlgebraError("upper_triangular: bimodule sides do not match");
    auto rep = modrep::check_bimodule(*c);
    if (!rep.ok)
        throw AlgebraError("upper_triangular: bimodule axioms fail: " + rep.summary());
    Triangular t;
    t.lam0 = lam0;
    t.lam1 = lam1;
    t.c01 = c;
    t.prod = product(lam0, lam1);
    auto inflated = std::make_shared<const modrep::Bimodule>(inflate_bimodule(t.prod, *c));
    t.ext = trivial_extension(t.prod.algebra, inflated);
    return t;
}

GradedAlgebra make_graded(const AlgebraPtr& a, std::vector<int> degree)
{
    if (static_cast<int>(degree.size()) != a->dim)
        throw AlgebraError("grading has wrong length");
    for (int d : degree)
        if (d < 0)
            throw AlgebraError("negative degree");
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j)
            for (int k = 0; k < a->dim; ++k)
                if (sgn(a->left[i](k, j)) != 0 && degree[k] != degree[i] + degree[j])
                    throw AlgebraError(fmt::format("grading not respected by b{}*b{}", i, j));
    for (int i = 0; i < a->dim; ++i)
        if (sgn(a->unit[i]) != 0 && degree[i] != 0)
            throw AlgebraError("unit not in degree 0");
    int ell = 0;
    for (int d : degree)
        ell = std::max(ell, d);
    return GradedAlgebra{a, std::move(degree), ell};
}

Beilinson beilinson(const GradedAlgebra& g, int ell)
{
    const Algebra& a = *g.algebra;
    if (ell < 1)
        throw AlgebraError("beilinson: ell must be positive");
    if (g.ell > ell)
        throw AlgebraError(fmt::format("beilinson: A has components in degree {} > ell = {}", g.ell, ell));
    const FieldSpec f = a.field;
    std::vector<std::vector<int>> by_deg(ell + 1);
    for (int i = 0; i < a.dim; ++i)
        by_deg[g.degree[i]].push_back(i);

    // Offsets of the (i,j) blocks inside nabla (j >= i) and delta (j <= i).
    std::map<std::pair<int, int>, int> noff, doff;
    std::vector<std::string> nlabels;
    int nd = 0;
    for (int i = 0; i < ell; ++i)
        for (int j = i; j < ell; ++j) {
            noff[{i, j}] = nd;
            for (int b : by_deg[j - i])
                nlabels.push_back(fmt::format("{}@{}{}", a.labels[b], i, j));
            nd += static_cast<int>(by_deg[j - i].size());
        }
    int dd = 0;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j <= i; ++j) {
            doff[{i, j}] = dd;
            dd += static_cast<int>(by_deg[ell - i + j].size());
        }
    auto pos_in = [&](int deg, int b) {
        const auto& v = by_deg[deg];
        return static_cast<int>(std::find(v.begin(), v.end(), b) - v.begin());
    };

    std::vector<TableEntry> table;
    for (auto& [ij, oij] : noff)
        for (auto& [jk, ojk] : noff) {
            if (ij.second != jk.first)
                continue;
            int i = ij.first, k = jk.second;
            int dx = ij.second - i, dy = k - jk.first;
            for (size_t s = 0; s < by_deg[dx].size(); ++s)
                for (size_t t = 0; t < by_deg[dy].size(); ++t) {
                    int bx = by_deg[dx][s], by = by_deg[dy][t];
                    for (int r = 0; r < a.dim; ++r) {
                        const Scalar& cf = a.left[bx](r, by);
                        if (sgn(cf) == 0)
                            continue;
                        int out = noff[{i, k}] + pos_in(k - i, r);
                        table.push_back({oij + static_cast<int>(s), ojk + static_cast<int>(t), out, cf});
                    }
                }
        }
    Vec nunit(nd, Scalar(0));
    for (int i = 0; i < ell; ++i)
        for (size_t s = 0; s < by_deg[0].size(); ++s)
            nunit[noff[{i, i}] + s] = a.unit[by_deg[0][s]];
    Algebra na = from_table(f, nlabels, table, nunit);
    bool homogeneous_idem = true;
    for (auto& e : a.idempotents)
        for (int b = 0; b < a.dim; ++b)
            if (sgn(e[b]) != 0 && g.degree[b] != 0)
                homogeneous_idem = false;
    for (int i = 0; i < ell; ++i) {
        std::vector<Vec> es = homogeneous_idem ? a.idempotents : std::vector<Vec>{a.unit};
        for (auto& e : es) {
            Vec v(nd, Scalar(0));
            for (size_t s = 0; s < by_deg[0].size(); ++s)
                v[noff[{i, i}] + s] = e[by_deg[0][s]];
            na.idempotents.push_back(v);
        }
    }
    Beilinson res;
    res.nabla = make_checked(std::move(na));

    modrep::Bimodule d;
    d.left_alg = res.nabla;
    d.right_alg = res.nabla;
    d.dim = dd;
    d.left.assign(nd, Matrix(f, dd, dd));
    d.right.assign(nd, Matrix(f, dd, dd));
    for (auto& [ij, oij] : noff)
        for (auto& [pq, opq] : doff) {
            int dx = ij.second - ij.first;
            int dy = ell - pq.first + pq.second;
            // nabla(i,j) * delta(j,k) -> delta(i,k) when k <= i
            if (ij.second == pq.first && pq.second <= ij.first) {
                int i = ij.first, k = pq.second;
                for (size_t s = 0; s < by_deg[dx].size(); ++s)
                    for (size_t t = 0; t < by_deg[dy].size(); ++t) {
                        int bx = by_deg[dx][s], by = by_deg[dy][t];
                        for (int r = 0; r < a.dim; ++r) {
                            const Scalar& cf = a.left[bx](r, by);
                            if (sgn(cf) == 0)
                                continue;
                            int out = doff[{i, k}] + pos_in(ell - i + k, r);
                            d.left[oij + s].set(out, opq + static_cast<int>(t), f.add(d.left[oij + s](out, opq + t), cf));
                        }
                    }
            }
            // delta(p,q) * nabla(q,k) -> delta(p,k) when k <= p
            if (pq.second == ij.first && ij.second <= pq.first) {
                int p = pq.first, k = ij.second;
                for (size_t t = 0; t < by_deg[dy].size(); ++t)
                    for (size_t s = 0; s < by_deg[dx].size(); ++s) {
                        int by = by_deg[dy][t], bx = by_deg[dx][s];
                        for (int r = 0; r < a.dim; ++r) {
                            const Scalar& cf = a.left[by](r, bx);
                            if (sgn(cf) == 0)
                                continue;
                            int out = doff[{p, k}] + pos_in(ell - p + k, r);
                            d.right[oij + s].set(out, opq + static_cast<int>(t), f.add(d.right[oij + s](out, opq + t), cf));
                        }
                    }
            }
        }
    res.delta = std::make_shared<const modrep::Bimodule>(std::move(d));
    return res;
}

TrivialExtension quasi_veronese(const GradedAlgebra& a, int ell)
{
    Beilinson b = beilinson(a, ell);
    return trivial_extension(b.nabla, b.delta);
}

AlgebraPtr path_algebra(FieldSpec f, const Quiver& q, const std::vector<std::vector<int>>& relations, int max_dim)
{
    const int nv = q.vertices;
    if (nv <= 0)
        throw AlgebraError("quiver needs at least one vertex");
    const int na = static_cast<int>(q.arrows.size());
    for (auto& [s, t, name] : q.arrows)
        if (s < 0 || t < 0 || s >= nv || t >= nv)
            throw AlgebraError("arrow endpoint out of range");
    for (auto& r : relations) {
        if (r.empty())
            throw AlgebraError("empty relation");
        for (int x : r)
            if (x < 0 || x >= na)
                throw AlgebraError("relation uses unknown arrow");
    }
    auto src = [&](int a) { return std::get<0>(q.arrows[a]); };
    auto tgt = [&](int a) { return std::get<1>(q.arrows[a]); };
    auto survives = [&](const std::vector<int>& p) {
        for (auto& r : relations)
            if (r.size() <= p.size() && std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end())
                return false;
        return true;
    };

    // paths[0..nv) are the trivial paths; longer ones follow in length-then-lex order.
    std::vector<std::vector<int>> paths;
    std::vector<int> psrc, ptgt;
    for (int v = 0; v < nv; ++v) {
        paths.push_back({});
        psrc.push_back(v);
        ptgt.push_back(v);
    }
    std::vector<std::vector<int>> layer;
    for (int a = 0; a < na; ++a)
        if (survives({a}))
            layer.push_back({a});
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        for (auto& p : layer) {
            paths.push_back(p);
            psrc.push_back(src(p.front()));
            ptgt.push_back(tgt(p.back()));
            if (static_cast<int>(paths.size()) > max_dim)
                throw AlgebraError(fmt::format("path algebra exceeds dimension bound {} (infinite-dimensional quotient?)", max_dim));
        }
        std::vector<std::vector<int>> next;
        for (auto& p : layer)
            for (int a = 0; a < na; ++a)
                if (src(a) == tgt(p.back())) {
                    auto np = p;
                    np.push_back(a);
                    if (survives(np))
                        next.push_back(np);
                }
        layer = std::move(next);
    }
    std::map<std::vector<int>, int> index;
    for (int i = nv; i < static_cast<int>(paths.size()); ++i)
        index[paths[i]] = i;
    const int n = static_cast<int>(paths.size());
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        if (i < nv) {
            labels.push_back(fmt::format("e{}", i + 1));
            continue;
        }
        std::string s;
        for (size_t t = 0; t < paths[i].size(); ++t)
            s += (t ? "*" : "") + std::get<2>(q.arrows[paths[i][t]]);
        labels.push_back(s);
    }
    std::vector<TableEntry> table;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ptgt[i] != psrc[j])
                continue;
            if (i < nv) {
                table.push_back({i, j, j, Scalar(1)});
                continue;
            }
            if (j < nv) {
                table.push_back({i, j, i, Scalar(1)});
                continue;
            }
            auto p = paths[i];
            p.insert(p.end(), paths[j].begin(), paths[j].end());
            auto it = index.find(p);
            if (it != index.end())
                table.push_back({i, j, it->second, Scalar(1)});
        }
    Vec unit(n, Scalar(0));
    for (int v = 0; v < nv; ++v)
        unit[v] = 1;
    Algebra a = from_table(f, labels, table, unit);
    for (int v = 0; v < nv; ++v) {
        Vec e(n, Scalar(0));
        e[v] = 1;
        a.idempotents.push_back(e);
    }
    return make_checked(std::move(a));
}

}  // namespace trivext::algebra

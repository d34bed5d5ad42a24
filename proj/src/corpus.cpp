#include "trivext/corpus.h"

#include <fmt/core.h>

namespace trivext::corpus {

using algebra::AlgebraError;
using algebra::TableEntry;

GradedAlgebra truncated_polynomial(FieldSpec f, int n)
{
    if (n < 1)
        throw AlgebraError("truncated_polynomial: n must be positive");
    std::vector<std::string> labels;
    std::vector<TableEntry> table;
    std::vector<int> deg;
    for (int i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : fmt::format("x^{}", i)));
        deg.push_back(i);
        for (int j = 0; i + j < n; ++j)
            table.push_back({i, j, i + j, Scalar(1)});
    }
    Vec unit(n, Scalar(0));
    unit[0] = 1;
    auto a = algebra::make_checked(algebra::from_table(f, labels, table, unit));
    return algebra::make_graded(a, deg);
}

AlgebraPtr dual_numbers(FieldSpec f)
{
    return truncated_polynomial(f, 2).algebra;
}

AlgebraPtr linear_quiver(FieldSpec f, int n, const std::vector<std::vector<int>>& relations)
{
    algebra::Quiver q;
    q.vertices = n;
    for (int i = 0; i + 1 < n; ++i)
        q.arrows.push_back({i, i + 1, fmt::format("a{}", i + 1)});
    return algebra::path_algebra(f, q, relations);
}

AlgebraPtr split_semisimple(FieldSpec f, int n)
{
    algebra::Quiver q;
    q.vertices = n;
    return algebra::path_algebra(f, q, {});
}

std::vector<Scalar> vertex_character(const AlgebraPtr& a, int vertex)
{
    // On path-like bases the character at a vertex reads off the coefficient of e_vertex.
    if (vertex < 0 || vertex >= static_cast<int>(a->idempotents.size()))
        throw AlgebraError("vertex_character: vertex out of range");
    const Vec& e = a->idempotents[vertex];
    Vec chi(a->dim, Scalar(0));
    for (int i = 0; i < a->dim; ++i)
        if (sgn(e[i]) != 0)
            chi[i] = 1;
    // Check multiplicativity on the nose.
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) {
            Vec p = a->mul(a->basis_vec(i), a->basis_vec(j));
            Scalar v(0);
            for (int k = 0; k < a->dim; ++k)
                a->field.add_mul(v, p[k], chi[k]);
            if (v != a->field.mul(chi[i], chi[j]))
                throw AlgebraError("vertex_character: basis is not adapted to the vertex");
        }
    return chi;
}

Bimodule character_bimodule(const AlgebraPtr& l, const Vec& chi_l, const AlgebraPtr& r, const Vec& chi_r)
{
    const FieldSpec& f = l->field;
    Bimodule b;
    b.left_alg = l;
    b.right_alg = r;
    b.dim = 1;
    for (int i = 0; i < l->dim; ++i) {
        Matrix m(f, 1, 1);
        m.set(0, 0, chi_l[i]);
        b.left.push_back(m);
    }
    for (int i = 0; i < r->dim; ++i) {
        Matrix m(f, 1, 1);
        m.set(0, 0, chi_r[i]);
        b.right.push_back(m);
    }
    auto rep = modrep::check_bimodule(b);
    if (!rep.ok)
        throw AlgebraError("character_bimodule: " + rep.summary());
    return b;
}

RightModule character_module(const AlgebraPtr& a, const Vec& chi)
{
    RightModule m;
    m.alg = a;
    m.dim = 1;
    for (int i = 0; i < a->dim; ++i) {
        Matrix x(a->field, 1, 1);
        x.set(0, 0, chi[i]);
        m.act.push_back(x);
    }
    auto rep = modrep::check_module(m);
    if (!rep.ok)
        throw AlgebraError("character_module: " + rep.summary());
    return m;
}

RightModule vertex_simple(const AlgebraPtr& a, int vertex)
{
    return character_module(a, vertex_character(a, vertex));
}

BimodulePtr share(Bimodule b)
{
    return std::make_shared<const Bimodule>(std::move(b));
}

}  // namespace trivext::corpus

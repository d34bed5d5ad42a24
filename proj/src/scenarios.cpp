#include "trivext/scenarios.h"

#include "trivext/corpus.h"

#include <algorithm>
#include <stdexcept>

namespace trivext::scenarios {

using corpus::share;
using modrep::Bimodule;

namespace {

Bimodule vertex_bimodule(const AlgebraPtr& l, int vl, const AlgebraPtr& r, int vr)
{
    return corpus::character_bimodule(l, corpus::vertex_character(l, vl), r, corpus::vertex_character(r, vr));
}

std::vector<RightModule> simples(const AlgebraPtr& a)
{
    std::vector<RightModule> out;
    for (size_t v = 0; v < a->idempotents.size(); ++v)
        out.push_back(corpus::vertex_simple(a, static_cast<int>(v)));
    return out;
}

std::vector<RightModule> test_modules(const AlgebraPtr& a)
{
    std::vector<RightModule> out = simples(a);
    if (a->idempotents.size() > 1)
        for (size_t v = 0; v < a->idempotents.size(); ++v)
            out.push_back(modrep::idempotent_projective(a, static_cast<int>(v)));
    out.push_back(modrep::regular_module(a));
    return out;
}

Scenario plain(std::string name, const AlgebraPtr& lam, Bimodule c)
{
    Scenario s;
    s.name = std::move(name);
    s.te = algebra::trivial_extension(lam, share(std::move(c)));
    s.modules = test_modules(lam);
    s.twosteps.push_back(modrep::regular_twostep(s.te));
    for (auto& m : simples(lam)) {
        s.twosteps.push_back(concentrated(s.te, m, 0));
        s.twosteps.push_back(concentrated(s.te, m, 1));
    }
    return s;
}

Scenario triangular(std::string name, const AlgebraPtr& lam0, const AlgebraPtr& lam1, Bimodule c)
{
    Scenario s;
    s.name = std::move(name);
    s.tri = algebra::upper_triangular(lam0, lam1, share(std::move(c)));
    s.te = s.tri->ext;
    s.modules = test_modules(s.te.lam);
    s.twosteps.push_back(modrep::regular_twostep(s.te));
    s.triples.push_back(regular_triple(*s.tri));
    for (auto& m : simples(lam0))
        s.triples.push_back(source_triple(*s.tri, m));
    for (auto& m : simples(lam1))
        s.triples.push_back(target_triple(*s.tri, m));
    return s;
}

}  // namespace

GradedAlgebra graded_a2(FieldSpec f)
{
    return algebra::make_graded(corpus::linear_quiver(f, 2), {0, 0, 1});
}

TwoStep concentrated(const TrivialExtension& te, const RightModule& m, int degree)
{
    const FieldSpec& f = te.lam->field;
    TwoStep t;
    t.c = te.c;
    if (degree == 0) {
        t.m0 = m;
        t.m1 = modrep::zero_module(te.lam);
        t.xi = Matrix(f, 0, m.dim * te.c->dim);
    }
    else {
        t.m0 = modrep::zero_module(te.lam);
        t.m1 = m;
        t.xi = Matrix(f, m.dim, 0);
    }
    return t;
}

TwoStep regular_triple(const Triangular& tr)
{
    const Bimodule& c = *tr.c01;
    TwoStep t;
    t.c = tr.c01;
    t.m0 = modrep::regular_module(tr.lam0);
    t.m1 = modrep::as_right_module(c);
    t.xi = Matrix(c.field(), c.dim, tr.lam0->dim * c.dim);
    for (int i = 0; i < tr.lam0->dim; ++i)
        for (int s = 0; s < c.dim; ++s)
            for (int r = 0; r < c.dim; ++r)
                t.xi.raw(r, i * c.dim + s) = c.left[i](r, s);
    return t;
}

TwoStep source_triple(const Triangular& tr, const RightModule& m0)
{
    TwoStep t;
    t.c = tr.c01;
    t.m0 = m0;
    t.m1 = modrep::zero_module(tr.lam1);
    t.xi = Matrix(m0.field(), 0, m0.dim * tr.c01->dim);
    return t;
}

TwoStep target_triple(const Triangular& tr, const RightModule& m1)
{
    TwoStep t;
    t.c = tr.c01;
    t.m0 = modrep::zero_module(tr.lam0);
    t.m1 = m1;
    t.xi = Matrix(m1.field(), m1.dim, 0);
    return t;
}

std::vector<Scenario> corpus(FieldSpec f)
{
    auto k = algebra::field_algebra(f);
    auto d = corpus::dual_numbers(f);
    auto kk = corpus::split_semisimple(f, 2);
    auto a2 = corpus::linear_quiver(f, 2);
    auto a3m = corpus::linear_quiver(f, 3, {{0, 1}});
    auto t3 = corpus::truncated_polynomial(f, 3).algebra;
    auto dtop = algebra::semisimple_quotient(d).top_bimodule;

    std::vector<Scenario> out;
    out.push_back(plain("a2-dual", a2, modrep::dual_bimodule(modrep::regular_bimodule(a2))));
    out.push_back(plain("a2-reg", a2, modrep::regular_bimodule(a2)));
    out.push_back(plain("a3-mono", a3m, vertex_bimodule(a3m, 2, a3m, 0)));
    out.push_back(triangular("a2-tri", k, k, modrep::regular_bimodule(k)));
    out.push_back(triangular("a3-tri", a2, k, vertex_bimodule(a2, 1, k, 0)));
    out.push_back(triangular("a3-tri-rev", k, a2, vertex_bimodule(k, 0, a2, 0)));
    out.push_back(plain("dn-reg", d, modrep::regular_bimodule(d)));
    out.push_back(plain("dn-sum", d, modrep::direct_sum(modrep::regular_bimodule(d), dtop)));
    out.push_back(plain("dn-top", d, dtop));
    out.push_back(plain("dual", k, modrep::regular_bimodule(k)));
    out.push_back(plain("k-zero", k, modrep::zero_bimodule(k, k)));
    out.push_back(plain("kk-cycle", kk, modrep::direct_sum(vertex_bimodule(kk, 0, kk, 1), vertex_bimodule(kk, 1, kk, 0))));
    out.push_back(plain("kk-off", kk, vertex_bimodule(kk, 0, kk, 1)));
    out.push_back(plain("tp3-top", t3, algebra::semisimple_quotient(t3).top_bimodule));
    std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
    return out;
}

std::vector<std::string> corpus_names()
{
    std::vector<std::string> out;
    for (auto& s : corpus())
        out.push_back(s.name);
    return out;
}

Scenario scenario(const std::string& name, FieldSpec f)
{
    for (auto& s : corpus(f))
        if (s.name == name)
            return s;
    throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<TriangularCase> triangular_ig_cases(FieldSpec f)
{
    auto k = algebra::field_algebra(f);
    auto d = corpus::dual_numbers(f);
    auto a2 = corpus::linear_quiver(f, 2);
    std::vector<TriangularCase> out;
    out.push_back({"k-k-k", algebra::upper_triangular(k, k, share(modrep::regular_bimodule(k)))});
    out.push_back({"k-k-0", algebra::upper_triangular(k, k, share(modrep::zero_bimodule(k, k)))});
    out.push_back({"a2-k-s", algebra::upper_triangular(a2, k, share(vertex_bimodule(a2, 1, k, 0)))});
    out.push_back({"dn-dn-reg", algebra::upper_triangular(d, d, share(modrep::regular_bimodule(d)))});
    out.push_back({"dn-dn-top", algebra::upper_triangular(d, d, share(vertex_bimodule(d, 0, d, 0)))});
    out.push_back({"dn-k-top", algebra::upper_triangular(d, k, share(vertex_bimodule(d, 0, k, 0)))});
    return out;
}

std::vector<VeroneseCase> veronese_cases(FieldSpec f)
{
    return {{"k[x]/x^2", corpus::truncated_polynomial(f, 2), 1},
            {"k[x]/x^3", corpus::truncated_polynomial(f, 3), 2},
            {"graded-a2", graded_a2(f), 1}};
}

RightModule random_quotient(const RightModule& m, std::mt19937& rng)
{
    const FieldSpec& f = m.field();
    std::uniform_int_distribution<int> coef(-3, 3);
    Vec v(m.dim, Scalar(0));
    for (auto& x : v)
        x = f.reduce(Scalar(coef(rng)));
    if (m.alg->radical.cols() == 0)
        return m;
    {
        Vec r(m.alg->dim, Scalar(0));
        for (int q = 0; q < m.alg->radical.cols(); ++q) {
            Scalar c = f.reduce(Scalar(coef(rng)));
            for (int i = 0; i < m.alg->dim; ++i)
                f.add_mul(r[i], m.alg->radical(i, q), c);
        }
        Matrix a(f, m.dim, m.dim);
        for (int i = 0; i < m.alg->dim; ++i)
            if (sgn(r[i]) != 0)
                a.add_scaled(m.act[i], r[i]);
        v = (a * Matrix::column(f, v)).col_vector(0);
    }
    Matrix gens(f, m.dim, m.alg->dim);
    for (int i = 0; i < m.alg->dim; ++i) {
        Matrix w = m.act[i] * Matrix::column(f, v);
        for (int r = 0; r < m.dim; ++r)
            gens.raw(r, i) = w(r, 0);
    }
    return modrep::quotient_module(m, gens).module;
}

RightModule random_module(const AlgebraPtr& lam, std::mt19937& rng)
{
    auto pick = [&]() {
        const int nv = static_cast<int>(lam->idempotents.size());
        const int v = static_cast<int>(rng() % nv);
        switch (rng() % 4) {
        case 0:
            return corpus::vertex_simple(lam, v);
        case 1:
            return modrep::idempotent_projective(lam, v);
        case 2:
            return random_quotient(modrep::idempotent_projective(lam, v), rng);
        default:
            return random_quotient(modrep::regular_module(lam), rng);
        }
    };
    RightModule m = pick();
    if (rng() % 2 == 0)
        m = modrep::direct_sum(m, pick());
    return m;
}

TwoStep random_twostep(const TrivialExtension& te, std::mt19937& rng)
{
    TwoStep t;
    t.c = te.c;
    t.m0 = random_module(te.lam, rng);
    t.m1 = random_module(te.lam, rng);
    auto tm = modrep::tensor_over_algebra(t.m0, *te.c);
    auto hs = modrep::hom_space(tm.module, t.m1);
    const FieldSpec& f = te.lam->field;
    Matrix g(f, t.m1.dim, tm.module.dim);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (auto& h : hs)
        g.add_scaled(h, f.reduce(Scalar(coef(rng))));
    t.xi = modrep::xi_from_tensor_map(tm, g);
    return t;
}

}  // namespace trivext::scenarios

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trivext/corpus.h"
#include "trivext/homology.h"

#include <algorithm>

using namespace trivext;
using namespace trivext::homology;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

/* lam -> lam, 1 -> x over the dual numbers. */
ChainMap mult_by_x(const AlgebraPtr& d)
{
    auto r = modrep::regular_module(d);
    Complex a = module_complex(r, 0);
    Complex b = module_complex(r, 1);
    Complex x;
    x.alg = d;
    x.lo = 0;
    x.terms = {r, r};
    x.d = {d->left[1]};
    (void)a;
    (void)b;
    ChainMap m;
    m.source = module_complex(r, 0);
    m.target = module_complex(r, 0);
    m.f[0] = d->left[1];
    return m;
}

Complex two_term(const RightModule& a, const RightModule& b, const Matrix& d, int lo)
{
    Complex x;
    x.alg = a.alg;
    x.lo = lo;
    x.terms = {a, b};
    x.d = {d};
    return x;
}

}  // namespace

TEST_CASE("dimension values")
{
    auto e = DimensionValue::exactly(2);
    CHECK(sup(e, DimensionValue::minus_infinity()) == e);
    CHECK(sup(e, DimensionValue::exactly(5)) == DimensionValue::exactly(5));
    CHECK(sup(e, DimensionValue::at_least(1)) == DimensionValue::at_least(2));
    CHECK(sup(e, DimensionValue::infinite()).is_infinite());
    CHECK(e.plus(-1) == DimensionValue::exactly(1));
    CHECK(DimensionValue::infinite().plus(3).is_infinite());
    CHECK(certainly_le(e, DimensionValue::infinite()));
    CHECK_FALSE(certainly_le(DimensionValue::at_least(1), e));
    CHECK(e.str() == "Exactly(2)");
}

TEST_CASE("complexes over the dual numbers")
{
    auto d = corpus::dual_numbers(Q);
    auto r = modrep::regular_module(d);
    Complex x = two_term(r, r, d->left[1], 0);
    CHECK(d_squared_zero(x));
    CHECK(cohomology_dim(x, 0) == 1);
    CHECK(cohomology_dim(x, 1) == 1);
    CHECK(cohomology(x, 0).dim == 1);
    CHECK(cohomology_support(x) == std::vector<int>{0, 1});

    auto id = identity_map(x);
    CHECK(is_chain_map(id));
    CHECK(is_acyclic(cone(id)));
    CHECK(is_quasi_iso(id));
    CHECK_FALSE(is_quasi_iso(zero_map(x, x)));

    for (int k : {-2, -1, 1, 3}) {
        Complex s = shift(x, k);
        CHECK(d_squared_zero(s));
        for (int n = -5; n <= 5; ++n)
            CHECK(cohomology_dim(s, n) == cohomology_dim(x, n + k));
        Complex ss = shift(s, -k);
        CHECK(ss.lo == x.lo);
        CHECK(ss.d[0] == x.d[0]);
    }

    auto m = mult_by_x(d);
    CHECK(is_chain_map(m));
    Complex c = cone(m);
    CHECK(d_squared_zero(c));
    CHECK(cohomology_dim(c, -1) == 1);
    CHECK(cohomology_dim(c, 0) == 1);

    Complex dx = dual_complex(x);
    CHECK(d_squared_zero(dx));
    for (int n = -3; n <= 3; ++n)
        CHECK(cohomology_dim(dx, n) == cohomology_dim(x, -n));
    CHECK(is_chain_map(dual_map(m)));
}

TEST_CASE("dual of a cone is a shifted cone of duals")
{
    auto a3 = corpus::linear_quiver(Q, 3);
    auto p0 = modrep::idempotent_projective(a3, 0);
    auto p1 = modrep::idempotent_projective(a3, 1);
    auto hs = modrep::hom_space(p1, p0);
    REQUIRE(!hs.empty());
    ChainMap f;
    f.source = module_complex(p1, 0);
    f.target = module_complex(p0, 0);
    f.f[0] = hs[0];
    Complex lhs = dual_complex(cone(f));
    Complex rhs = shift(cone(dual_map(f)), -1);
    for (int n = -4; n <= 4; ++n)
        CHECK(cohomology_dim(lhs, n) == cohomology_dim(rhs, n));
}

TEST_CASE("projective dimension of modules")
{
    auto d = corpus::dual_numbers(Q);
    auto k = corpus::vertex_simple(d, 0);
    CHECK(pd_module(k).is_infinite());
    CHECK(pd_module(modrep::regular_module(d)) == DimensionValue::exactly(0));
    CHECK(pd_module(modrep::zero_module(d)).is_minus_infinity());
    CHECK(injdim_module(k).is_infinite());

    auto a2 = corpus::linear_quiver(Q, 2);
    std::vector<int> pds;
    for (int v = 0; v < 2; ++v) {
        auto val = pd_module(corpus::vertex_simple(a2, v));
        REQUIRE(val.is_exactly());
        pds.push_back(val.n);
    }
    std::sort(pds.begin(), pds.end());
    CHECK(pds == std::vector<int>{0, 1});

    auto a3 = corpus::linear_quiver(F7, 3, {{0, 1}});
    int worst = 0;
    for (int v = 0; v < 3; ++v) {
        auto val = pd_module(corpus::vertex_simple(a3, v));
        REQUIRE(val.is_exactly());
        worst = std::max(worst, val.n);
    }
    CHECK(worst == 2);
}

TEST_CASE("projective dimension of complexes")
{
    auto d = corpus::dual_numbers(Q);
    auto r = modrep::regular_module(d);
    auto k = corpus::vertex_simple(d, 0);
    CHECK(pd_complex(module_complex(k, 0)).is_infinite());
    CHECK(pd_complex(module_complex(r, 2)) == DimensionValue::exactly(-2));
    CHECK(pd_complex(cone(identity_map(module_complex(k, 0)))).is_minus_infinity());
    CHECK(pd_complex(two_term(r, r, d->left[1], 0)) == DimensionValue::exactly(0));

    auto a2 = corpus::linear_quiver(Q, 2);
    for (int v = 0; v < 2; ++v) {
        auto s = corpus::vertex_simple(a2, v);
        auto pm = pd_module(s);
        for (int deg : {-1, 0, 2})
            CHECK(pd_complex(module_complex(s, deg)) == pm.plus(-deg));
        CHECK(injdim_complex(module_complex(s, 0)) == injdim_module(s));
    }
}

TEST_CASE("replacements are quasi-isomorphisms")
{
    auto a3 = corpus::linear_quiver(Q, 3);
    auto s0 = corpus::vertex_simple(a3, 0), s2 = corpus::vertex_simple(a3, 2);
    auto m = modrep::direct_sum(s0, s2);
    for (int variant : {0, 1, 2, 3}) {
        Options opt;
        opt.variant = variant;
        auto r = free_resolution(m, opt);
        CHECK(r.terminated);
        auto g = replacement_map(r, module_complex(m, 0));
        CHECK(d_squared_zero(r.P));
        CHECK(is_chain_map(g));
        CHECK(is_quasi_iso(g));
        auto mz = minimize(r.P, r.f, module_complex(m, 0));
        ChainMap gm;
        gm.source = mz.P;
        gm.target = module_complex(m, 0);
        gm.f = mz.f;
        CHECK(is_chain_map(gm));
        CHECK(is_quasi_iso(gm));
        CHECK(mz.P.total_dim() <= r.P.total_dim());
    }
}

TEST_CASE("derived tensor over the dual numbers")
{
    auto d = corpus::dual_numbers(Q);
    auto k = corpus::vertex_simple(d, 0);
    Options opt;
    opt.cutoff = 6;
    auto kb = corpus::share(algebra::semisimple_quotient(d).top_bimodule);
    Complex t = derived_tensor(module_complex(k, 0), *kb, opt);
    REQUIRE(t.valid_from);
    for (int n = *t.valid_from; n <= 0; ++n)
        CHECK(cohomology_dim(t, n) == 1);

    auto reg = modrep::regular_bimodule(d);
    Complex u = derived_tensor(module_complex(k, 0), reg, opt);
    for (int n = u.valid_from.value_or(u.lo); n <= 0; ++n)
        CHECK(cohomology_dim(u, n) == (n == 0 ? 1 : 0));
}

TEST_CASE("derived tensor maps")
{
    auto a2 = corpus::linear_quiver(Q, 2);
    auto reg = modrep::regular_bimodule(a2);
    auto p0 = modrep::idempotent_projective(a2, 0);
    auto p1 = modrep::idempotent_projective(a2, 1);
    for (auto [x, y] : {std::pair{p0, p1}, std::pair{p1, p0}}) {
        auto hs = modrep::hom_space(x, y);
        if (hs.empty())
            continue;
        ChainMap f;
        f.source = module_complex(x, 0);
        f.target = module_complex(y, 0);
        f.f[0] = hs[0];
        ChainMap g = derived_tensor_map(f, reg);
        CHECK(is_chain_map(g));
        Complex c1 = cone(f), c2 = cone(g);
        for (int n = -3; n <= 2; ++n)
            CHECK(cohomology_dim(c1, n) == cohomology_dim(c2, n));
    }
}

TEST_CASE("xi and theta morphisms")
{
    auto a2 = corpus::linear_quiver(Q, 2);
    auto te = algebra::trivial_extension(a2, corpus::share(modrep::regular_bimodule(a2)));
    auto t = modrep::regular_twostep(te);
    for (int a = 0; a <= 2; ++a) {
        ChainMap xi = xi_morphism(t, a);
        CHECK(is_chain_map(xi));
        ChainMap th = theta_morphism(t, a);
        CHECK(is_chain_map(th));
    }
}

TEST_CASE("summand test")
{
    auto a3 = corpus::linear_quiver(Q, 3);
    auto s0 = corpus::vertex_simple(a3, 0), s1 = corpus::vertex_simple(a3, 1);
    auto reg = modrep::regular_module(a3);
    CHECK(is_summand_of(modrep::idempotent_projective(a3, 1), reg));
    CHECK(is_summand_of(s0, modrep::direct_sum(s1, s0)));
    CHECK_FALSE(is_summand_of(s0, modrep::direct_sum(s1, s1)));
    CHECK(is_projective_module(reg));
    CHECK(is_projective_module(modrep::idempotent_projective(a3, 2)));
}

TEST_CASE("shifted copies of complexes")
{
    auto d = corpus::dual_numbers(Q);
    auto r = modrep::regular_module(d);
    Complex x = two_term(r, r, d->left[1], 0);
    for (int k : {-2, 0, 3}) {
        CHECK(is_shifted_copy(x, shift(x, k)));
        CHECK(is_shifted_copy(shift(x, k), x));
    }
    Complex y = two_term(r, r, Matrix(Q, 2, 2), 0);
    CHECK_FALSE(is_shifted_copy(x, y));
    auto a2 = corpus::linear_quiver(Q, 2);
    auto p0 = modrep::idempotent_projective(a2, 0), p1 = modrep::idempotent_projective(a2, 1);
    CHECK_FALSE(is_shifted_copy(module_complex(p0, 0), module_complex(p1, 0)));
    CHECK(is_shifted_copy(module_complex(p0, 0), module_complex(p0, 5)));
}

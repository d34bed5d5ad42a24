#include "trivext/properties.h"

#include "trivext/corpus.h"
#include "trivext/formulas.h"
#include "trivext/oracle.h"
#include "trivext/scenarios.h"

#include <fmt/core.h>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace trivext::properties {

using homology::DimensionValue;
using homology::certainly_le;
using homology::module_complex;
using algebra::AlgebraPtr;
using modrep::RightModule;
using modrep::TwoStep;

std::string PropertyResult::str() const
{
    std::string out = fmt::format("{}: {} cases, {} certified, {} failures", name, cases, certified, failures);
    if (!first_failure.empty())
        out += "; first: " + first_failure;
    return out;
}

namespace {

using Kind = DimensionValue::Kind;

const std::vector<scenarios::Scenario>& scenario_pool()
{
    static const std::vector<scenarios::Scenario> pool = scenarios::corpus();
    return pool;
}

const scenarios::Scenario& pick_scenario(std::mt19937& rng)
{
    const auto& pool = scenario_pool();
    return pool[rng() % pool.size()];
}

homology::Options small_opts()
{
    homology::Options o;
    o.cutoff = 10;
    return o;
}

/* a > b is certain. */
bool refuted(const DimensionValue& a, const DimensionValue& b)
{
    if (b.is_minus_infinity())
        return !a.is_minus_infinity() && !a.bound_unknown();
    if (!b.is_exactly())
        return false;
    if (a.is_infinite())
        return true;
    if (a.is_exactly() || (a.is_at_least() && !a.bound_unknown()))
        return a.n > b.n;
    return false;
}

DimensionValue add(const DimensionValue& a, const DimensionValue& b)
{
    if (a.is_minus_infinity() || b.is_minus_infinity())
        return DimensionValue::minus_infinity();
    if (a.is_infinite() || b.is_infinite())
        return DimensionValue::infinite();
    if (a.is_exactly() && b.is_exactly())
        return DimensionValue::exactly(a.n + b.n);
    return DimensionValue::at_least(DimensionValue::unknown_bound);
}

struct Recorder {
    PropertyResult& r;
    void fail(const std::string& what)
    {
        if (r.failures++ == 0)
            r.first_failure = what;
    }
    /* a <= b: fails when refuted, certified when provable. */
    bool le(const DimensionValue& a, const DimensionValue& b, const std::string& what)
    {
        if (refuted(a, b)) {
            fail(fmt::format("{}: {} > {}", what, a.str(), b.str()));
            return false;
        }
        return certainly_le(a, b);
    }
    bool eq(const DimensionValue& a, const DimensionValue& b, const std::string& what)
    {
        if (a.certified() && b.certified()) {
            if (a != b)
                fail(fmt::format("{}: {} != {}", what, a.str(), b.str()));
            return a == b;
        }
        if (refuted(a, b) || refuted(b, a))
            fail(fmt::format("{}: {} vs {}", what, a.str(), b.str()));
        return false;
    }
};

Matrix random_map(const RightModule& m, const RightModule& n, std::mt19937& rng)
{
    const FieldSpec& f = m.field();
    Matrix g(f, n.dim, m.dim);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (auto& h : modrep::hom_space(m, n))
        g.add_scaled(h, f.reduce(Scalar(coef(rng))));
    return g;
}

homology::ChainMap module_map(const RightModule& m, const RightModule& n, const Matrix& g)
{
    homology::ChainMap f;
    f.source = module_complex(m, 0);
    f.target = module_complex(n, 0);
    f.f[0] = g;
    return f;
}

/* Cohomology dimensions agree wherever both windows are valid. */
bool same_cohomology(const homology::Complex& x, const homology::Complex& y)
{
    int lo = std::min(x.lo, y.lo) - 1, hi = std::max(x.hi(), y.hi()) + 1;
    for (auto& c : {x, y}) {
        if (c.valid_from)
            lo = std::max(lo, *c.valid_from);
        if (c.valid_upto)
            hi = std::min(hi, *c.valid_upto);
    }
    for (int n = lo; n <= hi; ++n)
        if (homology::cohomology_dim(x, n) != homology::cohomology_dim(y, n))
            return false;
    return true;
}

std::vector<AlgebraPtr> ig_bases()
{
    const FieldSpec q = FieldSpec::rationals();
    return {algebra::field_algebra(q),
            corpus::split_semisimple(q, 2),
            corpus::dual_numbers(q),
            corpus::linear_quiver(q, 2),
            corpus::linear_quiver(q, 3, {{0, 1}}),
            corpus::truncated_polynomial(q, 3).algebra};
}

}  // namespace

PropertyResult differentials_and_chain_maps(const PropertyOptions& opt)
{
    PropertyResult r{"d^2 = 0 and chain maps"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed);
    auto ho = small_opts();
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        RightModule m = scenarios::random_module(s.te.lam, rng);
        auto x = module_complex(m, 0);
        auto rep = homology::free_replacement(x, ho);
        bool ok = homology::d_squared_zero(rep.P) && homology::is_chain_map(homology::replacement_map(rep, x));
        auto mz = homology::minimize(rep.P, rep.f, x);
        homology::ChainMap g{mz.P, x, mz.f};
        ok = ok && homology::d_squared_zero(mz.P) && homology::is_chain_map(g);
        TwoStep t = scenarios::random_twostep(s.te, rng);
        auto xi = homology::xi_morphism(t, 0, ho);
        auto th = homology::theta_morphism(t, 0, ho);
        ok = ok && homology::is_chain_map(xi) && homology::is_chain_map(th);
        ok = ok && homology::d_squared_zero(homology::cone(xi)) && homology::d_squared_zero(homology::cone(th));
        if (!ok)
            rec.fail(fmt::format("{} case {}", s.name, i));
        else
            ++r.certified;
    }
    return r;
}

PropertyResult shift_laws(const PropertyOptions& opt)
{
    PropertyResult r{"shift laws"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 1);
    auto ho = small_opts();
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        RightModule m = scenarios::random_module(s.te.lam, rng), n = scenarios::random_module(s.te.lam, rng);
        homology::Complex x = rng() % 2 ? module_complex(m, 0) : homology::cone(module_map(m, n, random_map(m, n, rng)));
        const int k = static_cast<int>(rng() % 7) - 3;
        auto sx = homology::shift(x, k);
        bool a = rec.eq(homology::pd_complex(sx, ho), homology::pd_complex(x, ho).plus(k), fmt::format("pd {} shift {}", s.name, k));
        bool b = rec.eq(homology::injdim_complex(sx, ho), homology::injdim_complex(x, ho).plus(-k), fmt::format("injdim {} shift {}", s.name, k));
        r.certified += a && b;
    }
    return r;
}

PropertyResult triangle_bound(const PropertyOptions& opt)
{
    PropertyResult r{"triangle bound"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 2);
    auto ho = small_opts();
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        RightModule m = scenarios::random_module(s.te.lam, rng), n = scenarios::random_module(s.te.lam, rng);
        auto c = homology::cone(module_map(m, n, random_map(m, n, rng)));
        auto pm = homology::pd_module(m, ho), pn = homology::pd_module(n, ho), pc = homology::pd_complex(c, ho);
        auto im = homology::injdim_module(m, ho), in = homology::injdim_module(n, ho), ic = homology::injdim_complex(c, ho);
        const std::string tag = fmt::format("{} case {}", s.name, i);
        bool all = rec.le(pn, homology::sup(pm, pc), "pd middle " + tag);
        all = rec.le(pc, homology::sup(pn, pm.plus(1)), "pd cone " + tag) && all;
        all = rec.le(pm.plus(1), homology::sup(pc, pn.plus(1)), "pd rotated " + tag) && all;
        all = rec.le(in, homology::sup(im, ic), "injdim middle " + tag) && all;
        all = rec.le(ic, homology::sup(in, im.plus(-1)), "injdim cone " + tag) && all;
        all = rec.le(im.plus(-1), homology::sup(ic, in.plus(-1)), "injdim rotated " + tag) && all;
        r.certified += all;
    }
    return r;
}

PropertyResult avramov_foxby(const PropertyOptions& opt)
{
    PropertyResult r{"Avramov-Foxby inequalities"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 3);
    auto ho = small_opts();
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        const auto& c = *s.te.c;
        RightModule m = scenarios::random_module(s.te.lam, rng);
        auto x = module_complex(m, 0);
        auto pc_right = homology::pd_module(modrep::as_right_module(c), ho);
        auto pc_left = homology::pd_module(modrep::as_left_module(c), ho);
        auto t = homology::pd_complex(homology::derived_tensor(x, c, ho), ho);
        auto h = homology::injdim_complex(homology::derived_hom_C(x, c, 1, ho), ho);
        const std::string tag = fmt::format("{} case {}", s.name, i);
        bool a = rec.le(t, add(homology::pd_module(m, ho), pc_right), "tensor " + tag);
        bool b = rec.le(h, add(pc_left, homology::injdim_module(m, ho)), "hom " + tag);
        r.certified += a && b;
    }
    return r;
}

PropertyResult duality(const PropertyOptions& opt)
{
    PropertyResult r{"duality"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 4);
    auto ho = small_opts();
    oracle::OracleOptions oo;
    oo.cutoff = ho.cutoff;
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        RightModule m = scenarios::random_module(s.te.lam, rng);
        RightModule dm = modrep::dual(m);
        const std::string tag = fmt::format("{} case {}", s.name, i);
        bool a = rec.eq(homology::pd_module(m, ho), oracle::injdim_direct(dm, oo), "pd vs injdim of dual " + tag);
        bool b = rec.eq(homology::injdim_module(dm, ho), oracle::pd_direct(m, oo), "injdim of dual vs pd " + tag);
        r.certified += a && b;
    }
    return r;
}

PropertyResult stabilization_soundness(const PropertyOptions& opt)
{
    PropertyResult r{"stabilization soundness"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 5);
    formulas::FormulaOptions fo;
    fo.hom = small_opts();
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        RightModule m = scenarios::random_module(s.te.lam, rng);
        TwoStep t = scenarios::random_twostep(s.te, rng);
        const int which = static_cast<int>(rng() % 3);
        auto eval = [&](int a_max) {
            formulas::FormulaOptions o = fo;
            o.a_max = a_max;
            if (which == 0)
                return formulas::pd_trivext_module(m, s.te, o).trace;
            if (which == 1)
                return formulas::injdim_trivext_module(m, s.te, o).trace;
            return formulas::pd_trivext_twostep(t, o).trace;
        };
        auto base = eval(fo.a_max);
        if (!base.consistent())
            rec.fail(fmt::format("{} case {}: inconsistent trace", s.name, i));
        if (!base.stabilization)
            continue;
        bool same = true;
        for (int extra : {0, 1, 4}) {
            auto again = eval(*base.stabilization + extra);
            same = same && again.result == base.result;
            if (again.result != base.result)
                rec.fail(fmt::format("{} case {}: a_max {} gives {} not {}", s.name, i, *base.stabilization + extra, again.result.str(), base.result.str()));
        }
        r.certified += same;
    }
    return r;
}

PropertyResult replacement_independence(const PropertyOptions& opt)
{
    PropertyResult r{"replacement independence"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 6);
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& s = pick_scenario(rng);
        RightModule m = scenarios::random_module(s.te.lam, rng);
        auto x = module_complex(m, 0);
        auto o0 = small_opts(), o1 = small_opts();
        o1.variant = 1 + static_cast<int>(rng() % 3);
        bool ok = same_cohomology(homology::derived_tensor(x, *s.te.c, o0), homology::derived_tensor(x, *s.te.c, o1));
        ok = ok && same_cohomology(homology::derived_hom_C(x, *s.te.c, 1, o0), homology::derived_hom_C(x, *s.te.c, 1, o1));
        if (!ok)
            rec.fail(fmt::format("{} case {} variant {}", s.name, i, o1.variant));
        else
            ++r.certified;
    }
    return r;
}

PropertyResult iwanaga_equivalence(const PropertyOptions& opt)
{
    PropertyResult r{"Iwanaga equivalence"};
    Recorder rec{r};
    std::mt19937 rng(opt.seed + 7);
    auto bases = ig_bases();
    auto ho = small_opts();
    for (int i = 0; i < opt.cases; ++i, ++r.cases) {
        const auto& lam = bases[rng() % bases.size()];
        RightModule m = scenarios::random_module(lam, rng);
        auto rep = formulas::iwanaga_equiv_check(lam, m, ho);
        if (rep.equivalent == formulas::Tri::no)
            rec.fail(fmt::format("case {}: pd {} injdim {}", i, rep.pd.str(), rep.injdim.str()));
        r.certified += rep.equivalent == formulas::Tri::yes;
    }
    return r;
}

PropertyResult asid_reduction(const PropertyOptions& opt)
{
    (void)opt;
    PropertyResult r{"asid reduction"};
    Recorder rec{r};
    for (const auto& s : scenario_pool()) {
        for (const auto& te : {s.te, formulas::opposite_extension(s.te)}) {
            formulas::AsidReduction red;
            try {
                red = formulas::asid_reduction_check(te);
            }
            catch (const std::invalid_argument&) {
                continue;
            }
            ++r.cases;
            if (red.right2 == formulas::Tri::yes && red.left2 == formulas::Tri::yes)
                ++r.certified;
            else
                rec.fail(fmt::format("{}: asid 2 right {} left {}", s.name, formulas::tri_str(red.right2), formulas::tri_str(red.left2)));
        }
    }
    return r;
}

std::vector<PropertyResult> all(const PropertyOptions& opt)
{
    return {differentials_and_chain_maps(opt), shift_laws(opt), triangle_bound(opt), avramov_foxby(opt), duality(opt),
            stabilization_soundness(opt), replacement_independence(opt), iwanaga_equivalence(opt), asid_reduction(opt)};
}

}  // namespace trivext::properties

#include "trivext/formulas.h"

#include "trivext/corpus.h"

#include <fmt/core.h>

#include <stdexcept>

namespace trivext::formulas {

using homology::cohomology;
using homology::cohomology_support;
using homology::cone;
using homology::dual_complex;
using homology::is_acyclic;
using homology::module_complex;

std::string tri_str(Tri t)
{
    switch (t) {
    case Tri::yes:
        return "yes";
    case Tri::no:
        return "no";
    case Tri::undetermined:
        return "undetermined";
    }
    return "?";
}

namespace {

Tri finiteness(const DimensionValue& v)
{
    if (v.certified_finite())
        return Tri::yes;
    if (v.is_infinite())
        return Tri::no;
    return Tri::undetermined;
}

Tri both(Tri a, Tri b)
{
    if (a == Tri::no || b == Tri::no)
        return Tri::no;
    if (a == Tri::yes && b == Tri::yes)
        return Tri::yes;
    return Tri::undetermined;
}

DimensionValue open_bound(const DimensionValue& s)
{
    if (s.is_infinite() || s.is_at_least())
        return s;
    if (s.is_minus_infinity())
        return DimensionValue::at_least(DimensionValue::unknown_bound);
    return DimensionValue::at_least(s.n);
}

RightModule top_of(const AlgebraPtr& a)
{
    return algebra::semisimple_quotient(a).top;
}

bool same_module(const RightModule& x, const RightModule& y)
{
    return x.dim == y.dim && modrep::same_algebra(x.alg, y.alg) && homology::is_summand_of(x, y, 97u + static_cast<unsigned>(x.dim));
}

/* Detects an iterate isomorphic to a shift of an earlier one; the tower then never becomes acyclic. */
class Periodicity {
public:
    bool repeats(const Complex& k, const homology::Replacement& r, const Complex& x)
    {
        bool hit = false;
        if (auto sc = single_cohomology(k)) {
            for (auto& h : singles_)
                hit = hit || same_module(h, sc->second);
            singles_.push_back(sc->second);
        }
        if (!hit && r.terminated && !x.windowed()) {
            Complex p = homology::trimmed(homology::minimize(r.P, r.f, x).P);
            for (auto& q : minimal_)
                hit = hit || homology::is_shifted_copy(q, p, 131u + static_cast<unsigned>(minimal_.size()));
            minimal_.push_back(std::move(p));
        }
        return hit;
    }

private:
    std::vector<RightModule> singles_;
    std::vector<Complex> minimal_;
};

/*
 * Iterates K_{a+1} = K_a (x)^L C (or RHom(C, K_a) when injective) and collects
 * dim(K_a) + a + offset until K_a is acyclic.
 */
FormulaTrace run_tower(Complex k, const Bimodule& c, bool injective, int offset, const DimensionValue& base,
                       const std::string& quantity, const std::string& base_label, const FormulaOptions& opt)
{
    FormulaTrace tr;
    tr.quantity = quantity;
    tr.base_label = base_label;
    tr.base = base;
    DimensionValue s = base;
    if (base.is_infinite()) {
        tr.stop = "infinite";
        tr.result = s;
        return tr;
    }
    const Bimodule cop = injective ? modrep::opposite_bimodule(c) : Bimodule{};
    const Bimodule& step_c = injective ? cop : c;
    Periodicity period;
    for (int a = 0; a <= opt.a_max; ++a) {
        TraceRecord rec;
        rec.a = a;
        rec.offset = offset;
        if (!k.windowed() && is_acyclic(k)) {
            rec.acyclic = true;
            rec.value = DimensionValue::minus_infinity();
            rec.contribution = rec.value;
            tr.records.push_back(rec);
            tr.stabilization = a;
            tr.stop = "acyclic";
            tr.result = s;
            return tr;
        }
        Complex x = injective ? dual_complex(k) : k;
        homology::Replacement r = homology::free_replacement(x, opt.hom);
        rec.value = homology::pd_from_replacement(r, x);
        rec.contribution = rec.value.plus(a + offset);
        s = sup(s, rec.contribution);
        tr.records.push_back(rec);
        if (rec.value.is_infinite()) {
            tr.stop = "infinite";
            tr.result = DimensionValue::infinite();
            return tr;
        }
        if (period.repeats(k, r, x)) {
            tr.stop = "never-acyclic";
            tr.result = DimensionValue::infinite();
            return tr;
        }
        if (a == opt.a_max)
            break;
        Complex next = homology::derived_tensor_from(r, x, step_c);
        k = injective ? dual_complex(next) : next;
        if (k.total_dim() > opt.size_budget) {
            tr.stop = "budget";
            tr.result = open_bound(s);
            return tr;
        }
    }
    tr.stop = "a_max";
    tr.result = open_bound(s);
    return tr;
}

}  // namespace

bool FormulaTrace::consistent() const
{
    DimensionValue s = base;
    for (auto& r : records) {
        if (r.contribution != r.value.plus(r.a + r.offset))
            return false;
        s = sup(s, r.contribution);
    }
    if (stop == "acyclic")
        return result == s;
    if (stop == "infinite" || stop == "never-acyclic")
        return result.is_infinite();
    if (stop == "a_max" || stop == "budget")
        return result == open_bound(s);
    return false;
}

std::string FormulaTrace::str() const
{
    std::string out = fmt::format("{}: {} = {}\n", quantity, base_label, base.str());
    for (auto& r : records) {
        if (r.acyclic)
            out += fmt::format("  a={}: acyclic\n", r.a);
        else
            out += fmt::format("  a={}: {} + {} -> {}\n", r.a, r.value.str(), r.a + r.offset, r.contribution.str());
    }
    if (stabilization)
        out += fmt::format("  stabilized at a={}\n", *stabilization);
    out += fmt::format("  stop: {}; result {}\n", stop, result.str());
    return out;
}

std::optional<std::pair<int, RightModule>> single_cohomology(const Complex& x)
{
    if (x.windowed())
        return std::nullopt;
    auto sup_deg = cohomology_support(x);
    if (sup_deg.size() != 1)
        return std::nullopt;
    return std::make_pair(sup_deg[0], cohomology(x, sup_deg[0]));
}

FormulaResult pd_trivext_twostep(const TwoStep& t, const FormulaOptions& opt)
{
    DimensionValue base = homology::pd_module(t.m0, opt.hom);
    FormulaResult res;
    if (base.is_infinite()) {
        res.trace = run_tower(Complex{}, *t.c, false, 0, base, "pd", "pd M0", opt);
    }
    else {
        Complex k0 = cone(homology::xi_morphism(t, 0, opt.hom));
        res.trace = run_tower(k0, *t.c, false, 0, base, "pd", "pd M0", opt);
    }
    res.value = res.trace.result;
    return res;
}

FormulaResult pd_trivext_module(const RightModule& m, const TrivialExtension& te, const FormulaOptions& opt)
{
    FormulaResult res;
    Complex k0 = m.dim > 0 ? module_complex(m, 0) : homology::zero_complex(m.alg);
    res.trace = run_tower(k0, *te.c, false, 0, DimensionValue::minus_infinity(), "pd", "(none)", opt);
    res.value = res.trace.result;
    return res;
}

FormulaResult injdim_trivext_twostep(const TwoStep& t, const FormulaOptions& opt)
{
    DimensionValue base = homology::injdim_module(t.m1, opt.hom);
    FormulaResult res;
    if (base.is_infinite()) {
        res.trace = run_tower(Complex{}, *t.c, true, 1, base, "injdim", "injdim M1", opt);
    }
    else {
        Complex k0 = cone(homology::theta_morphism(t, 0, opt.hom));
        res.trace = run_tower(k0, *t.c, true, 1, base, "injdim", "injdim M1", opt);
    }
    res.value = res.trace.result;
    return res;
}

FormulaResult injdim_trivext_module(const RightModule& m, const TrivialExtension& te, const FormulaOptions& opt)
{
    FormulaResult res;
    Complex k0 = m.dim > 0 ? module_complex(m, 0) : homology::zero_complex(m.alg);
    res.trace = run_tower(k0, *te.c, true, 0, DimensionValue::minus_infinity(), "injdim", "(none)", opt);
    res.value = res.trace.result;
    return res;
}

FormulaResult gldim_trivext(const TrivialExtension& te, const FormulaOptions& opt)
{
    FormulaResult res = pd_trivext_module(top_of(te.lam), te, opt);
    res.trace.quantity = "gldim";
    return res;
}

GldimFiniteness gldim_finiteness_check(const TrivialExtension& te, const FormulaOptions& opt)
{
    GldimFiniteness g;
    g.gldim_lam = homology::pd_module(top_of(te.lam), opt.hom);
    Complex k = module_complex(modrep::regular_module(te.lam), 0);
    for (int a = 1; a <= opt.a_max; ++a) {
        k = homology::derived_tensor(k, *te.c, opt.hom);
        if (!k.windowed() && is_acyclic(k)) {
            g.nilpotence = a;
            break;
        }
        if (k.windowed())
            break;
    }
    g.gldim_a = gldim_trivext(te, opt).value;
    if (g.gldim_lam.is_exactly() && g.nilpotence) {
        g.bound = *g.nilpotence * (g.gldim_lam.n + 1) - 1;
        g.finite = Tri::yes;
        g.bound_holds = homology::certainly_le(g.gldim_a, DimensionValue::exactly(*g.bound));
    }
    else if (g.gldim_lam.is_infinite() || g.gldim_a.is_infinite()) {
        g.finite = Tri::no;
    }
    return g;
}

PerfectnessReport perfectness_check(const RightModule& m, const TrivialExtension& te, const FormulaOptions& opt)
{
    PerfectnessReport rep;
    Complex k = m.dim > 0 ? module_complex(m, 0) : homology::zero_complex(m.alg);
    Periodicity period;
    for (int a = 0; a <= opt.a_max; ++a) {
        if (!k.windowed() && is_acyclic(k)) {
            rep.iterate_pd.push_back(DimensionValue::minus_infinity());
            rep.perfect = Tri::yes;
            rep.witness = a;
            return rep;
        }
        homology::Replacement r = homology::free_replacement(k, opt.hom);
        DimensionValue v = homology::pd_from_replacement(r, k);
        rep.iterate_pd.push_back(v);
        if (v.is_infinite()) {
            rep.perfect = Tri::no;
            rep.witness = a;
            return rep;
        }
        if (!v.certified())
            return rep;
        if (period.repeats(k, r, k)) {
            rep.perfect = Tri::no;
            rep.witness = a;
            return rep;
        }
        if (a == opt.a_max)
            break;
        k = homology::derived_tensor_from(r, k, *te.c);
        if (k.total_dim() > opt.size_budget)
            break;
    }
    return rep;
}

bool kernel_membership(const RightModule& m, const TrivialExtension& te, int a, const FormulaOptions& opt)
{
    if (!homology::pd_module(m, opt.hom).certified_finite())
        throw std::invalid_argument("kernel_membership: module is not perfect over the base");
    Complex k = homology::iterated_C(m.dim > 0 ? module_complex(m, 0) : homology::zero_complex(m.alg), *te.c, a, opt.hom);
    if (k.windowed())
        throw std::domain_error("kernel_membership: iterate is not perfect within the cutoff");
    return is_acyclic(k);
}

TrivialExtension opposite_extension(const TrivialExtension& te)
{
    return algebra::trivial_extension(algebra::opposite(te.lam), corpus::share(modrep::opposite_bimodule(*te.c)));
}

std::string AsidReport::str() const
{
    std::string out = fmt::format("{} asid: {}; alpha = {}\n", side, tri_str(is_asid), alpha.str());
    out += fmt::format("  1. injdim C = {} ({})\n", cond1_value.str(), tri_str(cond1));
    std::string vals;
    for (size_t i = 0; i < cond2_values.size(); ++i)
        vals += (i ? ", " : "") + cond2_values[i].str();
    out += fmt::format("  2. injdim cone at a < alpha: [{}] ({})\n", vals, tri_str(cond2));
    out += fmt::format("  3. isomorphism for large a: {}\n", tri_str(cond3));
    return out;
}

AsidReport right_asid_check(const TrivialExtension& te, const FormulaOptions& opt)
{
    AsidReport rep;
    rep.side = "right";
    rep.cond1_value = homology::injdim_module(modrep::as_right_module(*te.c), opt.hom);
    rep.cond1 = finiteness(rep.cond1_value);
    TwoStep t = modrep::regular_twostep(te);
    rep.lambda_rank = exactla::rank(modrep::coaction_from_action(t).theta);
    Complex k0 = rep.cond1_value.is_infinite() ? Complex{} : cone(homology::theta_morphism(t, 0, opt.hom));
    rep.trace = run_tower(k0, *te.c, true, 1, rep.cond1_value, "injdim", "injdim C", opt);
    bool all_finite = true, any_infinite = false;
    for (auto& r : rep.trace.records) {
        if (r.acyclic)
            continue;
        rep.cond2_values.push_back(r.value);
        all_finite = all_finite && r.value.certified_finite();
        any_infinite = any_infinite || r.value.is_infinite();
    }
    const bool complete = rep.trace.stabilization.has_value() || rep.trace.stop == "never-acyclic";
    rep.cond2 = any_infinite ? Tri::no : (all_finite && complete ? Tri::yes : Tri::undetermined);
    if (rep.trace.stabilization) {
        rep.cond3 = Tri::yes;
        rep.alpha = DimensionValue::exactly(*rep.trace.stabilization);
    }
    else {
        rep.cond3 = rep.trace.stop == "never-acyclic" ? Tri::no : Tri::undetermined;
        rep.alpha = DimensionValue::at_least(static_cast<int>(rep.trace.records.size()));
    }
    rep.is_asid = both(both(rep.cond1, rep.cond2), rep.cond3);
    return rep;
}

AsidReport left_asid_check(const TrivialExtension& te, const FormulaOptions& opt)
{
    AsidReport rep = right_asid_check(opposite_extension(te), opt);
    rep.side = "left";
    return rep;
}

DimensionValue asid_number_via_resolution(const TrivialExtension& te, const FormulaOptions& opt)
{
    oracle::OracleOptions oo;
    oo.cutoff = opt.hom.cutoff;
    DimensionValue id = oracle::injdim_direct(modrep::regular_module(te.algebra()), oo);
    const bool bounded = id.is_exactly();
    const int max_i = bounded ? id.n : std::min(opt.hom.cutoff, 6);
    auto ext = oracle::graded_ext_degrees(te.graded, max_i);
    int best = INT_MIN;
    for (auto& [i, row] : ext)
        for (auto& [j, d] : row)
            if (d != 0 && -j >= -1)
                best = std::max(best, -j);
    if (best == INT_MIN)
        return DimensionValue::at_least(DimensionValue::unknown_bound);
    if (!bounded)
        return DimensionValue::at_least(best + 1);
    return DimensionValue::exactly(best + 1);
}

std::string IgReport::str() const
{
    return fmt::format("IG: {}; injdim A_A = {}, injdim _AA = {}; alpha_r = {}, alpha_l = {}", tri_str(is_ig),
                       injdim_right.str(), injdim_left.str(), right.alpha.str(), left.alpha.str());
}

IgReport ig_check(const TrivialExtension& te, const FormulaOptions& opt)
{
    IgReport rep;
    rep.right = right_asid_check(te, opt);
    rep.left = left_asid_check(te, opt);
    rep.injdim_right = rep.right.trace.result;
    rep.injdim_left = rep.left.trace.result;
    rep.is_ig = both(rep.right.is_asid, rep.left.is_asid);
    if (rep.injdim_right.certified_finite() && rep.injdim_left.certified_finite())
        rep.zaks_ok = rep.injdim_right == rep.injdim_left;
    return rep;
}

AlgebraIg algebra_ig(const AlgebraPtr& lam, const homology::Options& opt)
{
    AlgebraIg r;
    r.right = homology::injdim_module(modrep::regular_module(lam), opt);
    r.left = homology::injdim_module(modrep::regular_module(algebra::opposite(lam)), opt);
    r.is_ig = both(finiteness(r.right), finiteness(r.left));
    return r;
}

IwanagaReport iwanaga_equiv_check(const AlgebraPtr& lam, const RightModule& m, const homology::Options& opt)
{
    if (algebra_ig(lam, opt).is_ig != Tri::yes)
        throw std::invalid_argument("iwanaga_equiv_check: base algebra is not certified IG");
    IwanagaReport r;
    r.pd = homology::pd_module(m, opt);
    r.injdim = homology::injdim_module(m, opt);
    if (r.pd.certified() && r.injdim.certified())
        r.equivalent = r.pd.certified_finite() == r.injdim.certified_finite() ? Tri::yes : Tri::no;
    return r;
}

AsidReduction asid_reduction_check(const TrivialExtension& te, const FormulaOptions& opt)
{
    if (algebra_ig(te.lam, opt.hom).is_ig != Tri::yes)
        throw std::invalid_argument("asid_reduction_check: base algebra is not certified IG");
    AsidReport r = right_asid_check(te, opt);
    AsidReport l = left_asid_check(te, opt);
    if (r.cond1 != Tri::yes || l.cond1 != Tri::yes)
        throw std::invalid_argument("asid_reduction_check: asid 1 does not hold on both sides");
    return {r.cond2, l.cond2};
}

namespace {

RightModule inflate_module(const algebra::Product& p, const RightModule& m, int side)
{
    const int n = p.algebra->dim, n0 = p.dim0;
    RightModule out;
    out.alg = p.algebra;
    out.dim = m.dim;
    for (int j = 0; j < n; ++j) {
        const bool own = side == 0 ? j < n0 : j >= n0;
        out.act.push_back(own ? m.act[side == 0 ? j : j - n0] : Matrix(m.field(), m.dim, m.dim));
    }
    return out;
}

}  // namespace

TwoStep inflate_triple(const Triangular& tr, const TwoStep& triple)
{
    TwoStep t;
    t.m0 = inflate_module(tr.prod, triple.m0, 0);
    t.m1 = inflate_module(tr.prod, triple.m1, 1);
    t.c = tr.ext.c;
    t.xi = triple.xi;
    return t;
}

DimensionValue triangular_pd(const Triangular& tr, const TwoStep& triple, const homology::Options& opt)
{
    (void)tr;
    DimensionValue p0 = homology::pd_module(triple.m0, opt);
    if (p0.is_infinite())
        return p0;
    return sup(p0, homology::pd_complex(cone(homology::xi_morphism(triple, 0, opt)), opt));
}

DimensionValue triangular_injdim(const Triangular& tr, const TwoStep& triple, const homology::Options& opt)
{
    (void)tr;
    DimensionValue i1 = homology::injdim_module(triple.m1, opt);
    if (i1.is_infinite())
        return i1;
    return sup(i1, homology::injdim_complex(cone(homology::theta_morphism(triple, 0, opt)), opt).plus(1));
}

TriangularGldim triangular_gldim(const Triangular& tr, const FormulaOptions& opt)
{
    TriangularGldim g;
    g.gldim = gldim_trivext(tr.ext, opt).value;
    RightModule s0 = top_of(tr.lam0), s1 = top_of(tr.lam1);
    DimensionValue a = homology::pd_module(s0, opt.hom);
    DimensionValue c = homology::pd_module(s1, opt.hom);
    DimensionValue b = a.is_infinite() ? a : homology::pd_complex(homology::derived_tensor(module_complex(s0, 0), *tr.c01, opt.hom), opt.hom).plus(1);
    g.chase = sup(sup(a, b), c);
    return g;
}

Tri chen_triangular_ig(const Triangular& tr, const homology::Options& opt)
{
    if (algebra_ig(tr.lam0, opt).is_ig != Tri::yes || algebra_ig(tr.lam1, opt).is_ig != Tri::yes)
        throw std::invalid_argument("chen_triangular_ig: factors are not certified IG");
    DimensionValue left = homology::pd_module(modrep::as_left_module(*tr.c01), opt);
    DimensionValue right = homology::pd_module(modrep::as_right_module(*tr.c01), opt);
    return both(finiteness(left), finiteness(right));
}

namespace {

/* Degree-0 subalgebra and the components A_i as A_0-bimodules. */
struct DegreeParts {
    AlgebraPtr a0;
    std::vector<Bimodule> parts;
};

DegreeParts degree_parts(const GradedAlgebra& g)
{
    const algebra::Algebra& a = *g.algebra;
    std::vector<std::vector<int>> by_deg(g.ell + 1);
    for (int i = 0; i < a.dim; ++i)
        by_deg[g.degree[i]].push_back(i);
    const auto& z = by_deg[0];
    std::vector<int> pos(a.dim, -1);
    for (auto& ids : by_deg)
        for (size_t q = 0; q < ids.size(); ++q)
            pos[ids[q]] = static_cast<int>(q);
    std::vector<algebra::TableEntry> table;
    std::vector<std::string> labels;
    for (int i : z) {
        labels.push_back(a.labels[i]);
        for (int j : z)
            for (int k : z)
                if (sgn(a.left[i](k, j)) != 0)
                    table.push_back({pos[i], pos[j], pos[k], a.left[i](k, j)});
    }
    Vec unit;
    for (int i : z)
        unit.push_back(a.unit[i]);
    DegreeParts out;
    algebra::Algebra a0 = algebra::from_table(a.field, labels, table, unit);
    for (auto& e : a.idempotents) {
        Vec v;
        for (int i : z)
            v.push_back(e[i]);
        a0.idempotents.push_back(v);
    }
    out.a0 = algebra::make_checked(std::move(a0));
    for (int d = 1; d <= g.ell; ++d) {
        const auto& ids = by_deg[d];
        Bimodule b;
        b.left_alg = out.a0;
        b.right_alg = out.a0;
        b.dim = static_cast<int>(ids.size());
        for (int i : z) {
            Matrix l(a.field, b.dim, b.dim), r(a.field, b.dim, b.dim);
            for (int c = 0; c < b.dim; ++c)
                for (int k = 0; k < b.dim; ++k) {
                    l.raw(k, c) = a.left[i](ids[k], ids[c]);
                    r.raw(k, c) = a.right[i](ids[k], ids[c]);
                }
            b.left.push_back(std::move(l));
            b.right.push_back(std::move(r));
        }
        out.parts.push_back(std::move(b));
    }
    return out;
}

}  // namespace

BeilinsonTransfer beilinson_ig_transfer(const GradedAlgebra& a, int ell, const FormulaOptions& opt)
{
    DegreeParts dp = degree_parts(a);
    if (algebra_ig(dp.a0, opt.hom).is_ig != Tri::yes)
        throw std::invalid_argument("beilinson_ig_transfer: degree-0 part is not certified IG");
    for (auto& b : dp.parts) {
        if (!homology::pd_module(modrep::as_right_module(b), opt.hom).certified_finite() ||
            !homology::pd_module(modrep::as_left_module(b), opt.hom).certified_finite())
            throw std::invalid_argument("beilinson_ig_transfer: a graded component has infinite or unknown pd");
    }
    BeilinsonTransfer t;
    algebra::Beilinson bl = algebra::beilinson(a, ell);
    t.nabla_ig = algebra_ig(bl.nabla, opt.hom);
    t.delta_pd_right = homology::pd_module(modrep::as_right_module(*bl.delta), opt.hom);
    t.delta_pd_left = homology::pd_module(modrep::as_left_module(*bl.delta), opt.hom);
    TrivialExtension te = algebra::trivial_extension(bl.nabla, bl.delta);
    t.veronese_ig = ig_check(te, opt).is_ig;
    oracle::OracleOptions oo;
    oo.cutoff = opt.hom.cutoff;
    DimensionValue r = oracle::injdim_direct(modrep::regular_module(a.algebra), oo);
    DimensionValue l = oracle::injdim_direct(modrep::regular_module(algebra::opposite(a.algebra)), oo);
    t.a_ig = both(finiteness(r), finiteness(l));
    t.gldim_a = oracle::gldim_direct(a.algebra, oo);
    t.gldim_veronese = gldim_trivext(te, opt).value;
    t.ig_agrees = t.a_ig != Tri::undetermined && t.a_ig == t.veronese_ig;
    Tri fa = finiteness(t.gldim_a), fv = finiteness(t.gldim_veronese);
    t.gldim_agrees = fa != Tri::undetermined && fa == fv;
    return t;
}

ReitenReport reiten_check(const TrivialExtension& te, const std::vector<RightModule>& family, const FormulaOptions& opt)
{
    ReitenReport r;
    r.gldim_le_one = homology::certainly_le(gldim_trivext(te, opt).value, DimensionValue::exactly(1));
    r.lam_le_one = homology::certainly_le(homology::pd_module(top_of(te.lam), opt.hom), DimensionValue::exactly(1));
    r.c_left_flat = homology::is_projective_module(modrep::as_left_module(*te.c));
    r.tensor_projective = true;
    for (auto& m : family)
        r.tensor_projective = r.tensor_projective && homology::is_projective_module(modrep::tensor_over_algebra(m, *te.c).module);
    r.c_squared_zero = modrep::tensor_over_algebra(modrep::as_right_module(*te.c), *te.c).module.dim == 0;
    return r;
}

}  // namespace trivext::formulas

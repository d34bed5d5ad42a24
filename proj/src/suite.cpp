#include "trivext/suite.h"

#include "trivext/scenarios.h"

#include <fmt/core.h>

#include <chrono>
#include <random>
#include <stdexcept>

namespace trivext::suite {

using formulas::Tri;
using homology::DimensionValue;
using modrep::RightModule;
using modrep::TwoStep;
using oracle::Verdict;

void Tally::add(const Comparison& c)
{
    switch (c.verdict) {
    case Verdict::pass:
        ++passed;
        return;
    case Verdict::fail:
        ++failed;
        problems.push_back(fmt::format("{}: formula {} oracle {}", c.label, c.formula.str(), c.oracle.str()));
        return;
    case Verdict::undetermined:
        if (c.oracle.certified()) {
            ++unresolved;
            problems.push_back(fmt::format("{}: formula {} undetermined, oracle {}", c.label, c.formula.str(), c.oracle.str()));
        }
        else {
            ++open;
        }
        return;
    }
}

void Tally::problem(const std::string& what)
{
    problems.push_back(what);
}

std::string Tally::str() const
{
    return fmt::format("{} pass, {} fail, {} open, {} unresolved", passed, failed, open, unresolved);
}

std::string CriterionResult::line() const
{
    return fmt::format("[{}] {}. {}: {}", pass ? "PASS" : "FAIL", id, title, summary);
}

Comparison compare(std::string label, const DimensionValue& formula, const DimensionValue& oracle)
{
    return {std::move(label), formula, oracle, oracle::verify(formula, oracle)};
}

namespace {

const std::vector<scenarios::Scenario>& pool()
{
    static const std::vector<scenarios::Scenario> p = scenarios::corpus();
    return p;
}

oracle::OracleOptions oracle_opts(const SuiteOptions& opt)
{
    oracle::OracleOptions o = opt.oracle;
    o.cutoff = opt.formula.hom.cutoff;
    return o;
}

Tri oracle_finite(const DimensionValue& v)
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

void finish(CriterionResult& r, const Tally& t, const std::string& extra = {})
{
    r.pass = t.ok();
    r.summary = t.str() + extra;
    r.details = t.problems;
}

void dimension_criterion(CriterionResult& r, const SuiteOptions& opt, bool injective)
{
    const auto oo = oracle_opts(opt);
    Tally t;
    int n = 0;
    for (const auto& s : pool()) {
        ++n;
        for (size_t i = 0; i < s.modules.size(); ++i) {
            const auto& m = s.modules[i];
            RightModule over_a = modrep::restrict_along_aug(m, s.te);
            const std::string tag = fmt::format("{} module {}", s.name, i);
            if (!injective) {
                auto f = formulas::pd_trivext_module(m, s.te, opt.formula).value;
                t.add(compare(tag, f, oracle::pd_direct(over_a, oo)));
                auto g = formulas::pd_trivext_twostep(scenarios::concentrated(s.te, m, 0), opt.formula).value;
                if (g != f)
                    t.problem(fmt::format("{}: module formula {} vs two-step formula {}", tag, f.str(), g.str()));
            }
            else {
                auto f = formulas::injdim_trivext_module(m, s.te, opt.formula).value;
                t.add(compare(tag, f, oracle::injdim_direct(over_a, oo)));
            }
        }
        for (size_t i = 0; i < s.twosteps.size(); ++i) {
            const auto& ts = s.twosteps[i];
            RightModule over_a = modrep::assemble_trivext_module(ts, s.te);
            const std::string tag = fmt::format("{} two-step {}", s.name, i);
            if (!injective)
                t.add(compare(tag, formulas::pd_trivext_twostep(ts, opt.formula).value, oracle::pd_direct(over_a, oo)));
            else
                t.add(compare(tag, formulas::injdim_trivext_twostep(ts, opt.formula).value, oracle::injdim_direct(over_a, oo)));
        }
    }
    if (n < 12)
        t.problem(fmt::format("corpus has {} scenarios", n));
    finish(r, t, fmt::format(" over {} scenarios", n));
}

void gldim_criterion(CriterionResult& r, const SuiteOptions& opt)
{
    const auto oo = oracle_opts(opt);
    Tally t;
    int bounds = 0;
    for (const auto& s : pool()) {
        auto go = oracle::gldim_direct(s.te.algebra(), oo);
        t.add(compare(s.name + " gldim", formulas::gldim_trivext(s.te, opt.formula).value, go));
        auto g = formulas::gldim_finiteness_check(s.te, opt.formula);
        if (g.finite == Tri::yes) {
            ++bounds;
            if (!g.bound_holds || !homology::certainly_le(go, DimensionValue::exactly(*g.bound)))
                t.problem(fmt::format("{}: gldim {} (oracle {}) exceeds bound {}", s.name, g.gldim_a.str(), go.str(), *g.bound));
        }
    }
    finish(r, t, fmt::format("; {} nilpotence bounds checked", bounds));
}

void ig_criterion(CriterionResult& r, const SuiteOptions& opt)
{
    const auto oo = oracle_opts(opt);
    Tally t;
    int ig_entries = 0;
    for (const auto& s : pool()) {
        auto ig = formulas::ig_check(s.te, opt.formula);
        auto ri = oracle::injdim_direct(modrep::regular_module(s.te.algebra()), oo);
        auto li = oracle::injdim_direct(modrep::regular_module(algebra::opposite(s.te.algebra())), oo);
        Tri o = both(oracle_finite(ri), oracle_finite(li));
        if (o == Tri::undetermined || ig.is_ig == Tri::undetermined) {
            if (o != Tri::undetermined)
                t.problem(fmt::format("{}: IG undetermined, oracle {}", s.name, formulas::tri_str(o)));
            else
                ++t.open;
        }
        else if (o != ig.is_ig) {
            t.problem(fmt::format("{}: IG {} but oracle {}", s.name, formulas::tri_str(ig.is_ig), formulas::tri_str(o)));
        }
        else {
            ++t.passed;
        }
        if (ig.is_ig == Tri::yes && !ig.zaks_ok)
            t.problem(fmt::format("{}: injdims differ {} vs {}", s.name, ig.injdim_right.str(), ig.injdim_left.str()));
        if (ig.is_ig == Tri::yes) {
            t.add(compare(s.name + " injdim A_A", ig.injdim_right, ri));
            t.add(compare(s.name + " injdim _AA", ig.injdim_left, li));
        }
        if (o != Tri::yes)
            continue;
        ++ig_entries;
        auto ar = formulas::asid_number_via_resolution(s.te, opt.formula);
        auto al = formulas::asid_number_via_resolution(formulas::opposite_extension(s.te), opt.formula);
        if (!ig.right.alpha.is_exactly() || ar != ig.right.alpha)
            t.problem(fmt::format("{}: right asid number {} vs graded Ext {}", s.name, ig.right.alpha.str(), ar.str()));
        if (!ig.left.alpha.is_exactly() || al != ig.left.alpha)
            t.problem(fmt::format("{}: left asid number {} vs graded Ext {}", s.name, ig.left.alpha.str(), al.str()));
    }
    finish(r, t, fmt::format("; asid numbers matched on {} IG entries", ig_entries));
}

void triangular_criterion(CriterionResult& r, const SuiteOptions& opt)
{
    const auto oo = oracle_opts(opt);
    Tally t;
    int triples = 0;
    for (const auto& s : pool()) {
        if (!s.tri)
            continue;
        const auto& tr = *s.tri;
        for (size_t i = 0; i < s.triples.size(); ++i) {
            ++triples;
            TwoStep big = formulas::inflate_triple(tr, s.triples[i]);
            RightModule over_a = modrep::assemble_trivext_module(big, tr.ext);
            const std::string tag = fmt::format("{} triple {}", s.name, i);
            auto tp = formulas::triangular_pd(tr, s.triples[i], opt.formula.hom);
            auto gp = formulas::pd_trivext_twostep(big, opt.formula).value;
            if (tp != gp)
                t.problem(fmt::format("{}: triangular pd {} vs general {}", tag, tp.str(), gp.str()));
            t.add(compare(tag + " pd", tp, oracle::pd_direct(over_a, oo)));
            auto ti = formulas::triangular_injdim(tr, s.triples[i], opt.formula.hom);
            auto gi = formulas::injdim_trivext_twostep(big, opt.formula).value;
            if (ti != gi)
                t.problem(fmt::format("{}: triangular injdim {} vs general {}", tag, ti.str(), gi.str()));
            t.add(compare(tag + " injdim", ti, oracle::injdim_direct(over_a, oo)));
        }
        auto g = formulas::triangular_gldim(tr, opt.formula);
        if (g.gldim != g.chase)
            t.problem(fmt::format("{}: gldim {} vs chase {}", s.name, g.gldim.str(), g.chase.str()));
        t.add(compare(s.name + " gldim", g.chase, oracle::gldim_direct(tr.ext.algebra(), oo)));
    }
    int chen = 0;
    for (const auto& c : scenarios::triangular_ig_cases()) {
        Tri a = formulas::chen_triangular_ig(c.tri, opt.formula.hom);
        Tri b = formulas::ig_check(c.tri.ext, opt.formula).is_ig;
        if (a == Tri::undetermined || a != b)
            t.problem(fmt::format("{}: triangular IG {} vs ig_check {}", c.name, formulas::tri_str(a), formulas::tri_str(b)));
        else
            ++chen;
    }
    if (chen < 4)
        t.problem(fmt::format("only {} triangular IG agreements", chen));
    finish(r, t, fmt::format("; {} triples, {} triangular IG agreements", triples, chen));
}

void veronese_criterion(CriterionResult& r, const SuiteOptions& opt)
{
    Tally t;
    for (const auto& c : scenarios::veronese_cases()) {
        auto b = formulas::beilinson_ig_transfer(c.a, c.ell, opt.formula);
        const std::string tag = fmt::format("{} l={}", c.name, c.ell);
        if (!b.ig_agrees)
            t.problem(fmt::format("{}: IG {} vs Veronese IG {}", tag, formulas::tri_str(b.a_ig), formulas::tri_str(b.veronese_ig)));
        else
            ++t.passed;
        if (!b.gldim_agrees)
            t.problem(fmt::format("{}: gldim {} vs Veronese gldim {}", tag, b.gldim_a.str(), b.gldim_veronese.str()));
        else
            ++t.passed;
    }
    finish(r, t);
}

void property_criterion(CriterionResult& r, const SuiteOptions& opt)
{
    Tally t;
    for (const auto& p : properties::all(opt.props)) {
        const int need = p.name == "asid reduction" ? 1 : 100;
        r.details.push_back(p.str());
        if (p.ok(need))
            ++t.passed;
        else
            t.problem(p.str());
    }
    auto details = r.details;
    finish(r, t);
    r.details.insert(r.details.begin(), details.begin(), details.end());
}

void perfectness_criterion(CriterionResult& r, const SuiteOptions& opt)
{
    const auto oo = oracle_opts(opt);
    Tally t;
    std::mt19937 rng(opt.props.seed + 99);
    int checked = 0;
    for (const auto& s : pool()) {
        if (!s.tri)
            continue;
        std::vector<RightModule> family = s.modules;
        for (int i = 0; i < 20; ++i)
            family.push_back(scenarios::random_module(s.te.lam, rng));
        for (size_t i = 0; i < family.size(); ++i) {
            const auto& m = family[i];
            const std::string tag = fmt::format("{} module {}", s.name, i);
            auto p = formulas::perfectness_check(m, s.te, opt.formula);
            auto o = oracle::pd_direct(modrep::restrict_along_aug(m, s.te), oo);
            if (o.certified()) {
                const bool finite = o.certified_finite();
                if (p.perfect == Tri::undetermined)
                    t.problem(tag + ": perfectness undetermined");
                else if ((p.perfect == Tri::yes) != finite)
                    t.problem(fmt::format("{}: perfect {} but oracle pd {}", tag, formulas::tri_str(p.perfect), o.str()));
                else
                    ++t.passed;
            }
            else {
                ++t.open;
            }
            std::vector<bool> k;
            try {
                for (int a = 0; a <= 4; ++a)
                    k.push_back(formulas::kernel_membership(m, s.te, a, opt.formula));
            }
            catch (const std::exception& e) {
                t.problem(tag + ": kernel membership threw: " + e.what());
                continue;
            }
            ++checked;
            for (int a = 0; a + 1 < static_cast<int>(k.size()); ++a)
                if (k[a] && !k[a + 1])
                    t.problem(fmt::format("{}: kernel membership not monotone at {}", tag, a));
            if (p.perfect == Tri::yes && p.witness && *p.witness < static_cast<int>(k.size())) {
                for (int a = 0; a < static_cast<int>(k.size()); ++a)
                    if (k[a] != (a >= *p.witness))
                        t.problem(fmt::format("{}: kernel membership at {} disagrees with witness {}", tag, a, *p.witness));
            }
            if (p.perfect == Tri::no && k.back())
                t.problem(tag + ": not perfect but in a kernel");
        }
    }
    finish(r, t, fmt::format("; kernel membership checked on {} modules", checked));
}

}  // namespace

CriterionResult criterion(int id, const SuiteOptions& opt)
{
    static const char* titles[] = {"",
                                   "projective formula vs oracle",
                                   "injective formula vs oracle",
                                   "global dimension",
                                   "asid and IG",
                                   "triangular coherence",
                                   "quasi-Veronese transfer",
                                   "property suites",
                                   "perfectness and kernels"};
    if (id < 1 || id > 8)
        throw std::out_of_range("criterion id must be 1..8");
    CriterionResult r;
    r.id = id;
    r.title = titles[id];
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1:
            dimension_criterion(r, opt, false);
            break;
        case 2:
            dimension_criterion(r, opt, true);
            break;
        case 3:
            gldim_criterion(r, opt);
            break;
        case 4:
            ig_criterion(r, opt);
            break;
        case 5:
            triangular_criterion(r, opt);
            break;
        case 6:
            veronese_criterion(r, opt);
            break;
        case 7:
            property_criterion(r, opt);
            break;
        case 8:
            perfectness_criterion(r, opt);
            break;
        }
    }
    catch (const std::exception& e) {
        r.pass = false;
        r.summary = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_all(const SuiteOptions& opt)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 8; ++id)
        out.push_back(criterion(id, opt));
    return out;
}

}  // namespace trivext::suite

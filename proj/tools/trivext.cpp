#include "trivext/document.h"
#include "trivext/formulas.h"
#include "trivext/oracle.h"
#include "trivext/suite.h"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace trivext;
using formulas::Tri;
using homology::DimensionValue;
using json = nlohmann::json;

namespace {

struct Settings {
    std::string input;
    std::string field;
    int cutoff = 24;
    int amax = 12;
    bool trace = false;
    std::string json_path;
    std::vector<std::string> targets;
    bool oracle = false;
    std::vector<int> criteria;
};

std::string pretty(const DimensionValue& d)
{
    switch (d.kind) {
    case DimensionValue::Kind::exactly:
        return fmt::format("Exactly {}", d.n);
    case DimensionValue::Kind::infinite:
        return "Infinite";
    case DimensionValue::Kind::at_least:
        return d.bound_unknown() ? "AtLeast ?" : fmt::format("AtLeast {}", d.n);
    case DimensionValue::Kind::minus_infinity:
        return "MinusInfinity";
    }
    return "?";
}

/* Bare number when exact. */
std::string compact(const DimensionValue& d)
{
    return d.is_exactly() ? std::to_string(d.n) : pretty(d);
}

json dv_json(const DimensionValue& d)
{
    static const char* kinds[] = {"exactly", "infinite", "at_least", "minus_infinity"};
    json j = {{"kind", kinds[static_cast<int>(d.kind)]}, {"text", d.str()}};
    if (d.is_exactly() || (d.is_at_least() && !d.bound_unknown()))
        j["value"] = d.n;
    return j;
}

json trace_json(const formulas::FormulaTrace& t)
{
    json recs = json::array();
    for (auto& r : t.records)
        recs.push_back({{"a", r.a},
                        {"value", dv_json(r.value)},
                        {"offset", r.offset},
                        {"contribution", dv_json(r.contribution)},
                        {"acyclic", r.acyclic}});
    json j = {{"quantity", t.quantity}, {"base_label", t.base_label}, {"base", dv_json(t.base)},
              {"records", recs},        {"stop", t.stop},             {"result", dv_json(t.result)}};
    j["stabilization"] = t.stabilization ? json(*t.stabilization) : json(nullptr);
    return j;
}

json asid_json(const formulas::AsidReport& r)
{
    json c2 = json::array();
    for (auto& v : r.cond2_values)
        c2.push_back(dv_json(v));
    return {{"side", r.side},
            {"asid", formulas::tri_str(r.is_asid)},
            {"alpha", dv_json(r.alpha)},
            {"cond1", {{"injdim_c", dv_json(r.cond1_value)}, {"holds", formulas::tri_str(r.cond1)}}},
            {"cond2", {{"values", c2}, {"holds", formulas::tri_str(r.cond2)}}},
            {"cond3", formulas::tri_str(r.cond3)},
            {"lambda_rank", r.lambda_rank},
            {"trace", trace_json(r.trace)}};
}

void print_trace(const formulas::FormulaTrace& t)
{
    std::string s = t.str();
    size_t p = 0;
    while (p < s.size()) {
        size_t q = s.find('\n', p);
        if (q == std::string::npos)
            q = s.size();
        fmt::print("    {}\n", s.substr(p, q - p));
        p = q + 1;
    }
}

class Run {
public:
    explicit Run(const Settings& s) : s_(s)
    {
        fopt_.a_max = s.amax;
        fopt_.hom.cutoff = s.cutoff;
        oopt_.cutoff = s.cutoff;
        report_ = {{"entries", json::array()}};
    }

    void load()
    {
        std::optional<FieldSpec> f;
        if (!s_.field.empty())
            f = FieldSpec::parse(s_.field);
        doc_ = doc::load(s_.input, f);
        report_["input"] = s_.input;
        report_["field"] = doc_.field.name();
        report_["cutoff"] = s_.cutoff;
        report_["amax"] = s_.amax;
    }

    bool selected(const std::string& name) const
    {
        return s_.targets.empty() || std::find(s_.targets.begin(), s_.targets.end(), name) != s_.targets.end();
    }

    /* Records an entry and returns its verdict against the oracle, when requested. */
    void compared(json entry, const std::string& label, const DimensionValue& f,
                  const std::function<DimensionValue()>& oracle_fn, const formulas::FormulaTrace* trace = nullptr)
    {
        entry["formula"] = dv_json(f);
        if (trace)
            entry["trace"] = trace_json(*trace);
        std::string line = fmt::format("{}: {} (formula)", label, pretty(f));
        if (s_.oracle) {
            DimensionValue o = oracle_fn();
            auto v = oracle::verify(f, o);
            entry["oracle"] = dv_json(o);
            entry["verdict"] = oracle::verdict_str(v);
            const char* sym = v == oracle::Verdict::pass ? "=" : v == oracle::Verdict::fail ? "!=" : "?";
            line += fmt::format(" {} {} (oracle)", sym, pretty(o));
            if (v == oracle::Verdict::fail)
                failed_ = true;
            if (v == oracle::Verdict::undetermined) {
                undetermined_ = true;
                line += fmt::format(" — undetermined at amax={}, cutoff={}", s_.amax, s_.cutoff);
            }
        }
        else if (!f.certified()) {
            undetermined_ = true;
            line += fmt::format(" — undetermined at amax={}, cutoff={}", s_.amax, s_.cutoff);
        }
        fmt::print("{}\n", line);
        if (s_.trace && trace)
            print_trace(*trace);
        add(std::move(entry));
    }

    void enable_oracle() { s_.oracle = true; }

    void add(json entry) { report_["entries"].push_back(std::move(entry)); }

    int check()
    {
        for (auto& [name, a] : doc_.algebras) {
            auto rep = algebra::check_algebra(*a);
            fmt::print("algebra {}: dim {}, {} idempotents, radical {}; {}\n", name, a->dim, a->idempotents.size(),
                       a->radical_known ? std::to_string(a->radical.cols()) : "unknown", rep.ok ? "ok" : rep.summary());
            add({{"kind", "algebra"}, {"name", name}, {"dim", a->dim}, {"ok", rep.ok}});
        }
        for (auto& [name, b] : doc_.bimodules) {
            fmt::print("bimodule {}: dim {}; ok\n", name, b->dim);
            add({{"kind", "bimodule"}, {"name", name}, {"dim", b->dim}, {"ok", true}});
        }
        for (auto& [name, m] : doc_.modules) {
            fmt::print("module {}: dim {}; ok\n", name, m.dim);
            add({{"kind", "module"}, {"name", name}, {"dim", m.dim}, {"ok", true}});
        }
        for (auto& [name, te] : doc_.extensions) {
            fmt::print("extension {}: dim {} = {} + {}; ok\n", name, te.algebra()->dim, te.lam->dim, te.c->dim);
            add({{"kind", "extension"}, {"name", name}, {"dim", te.algebra()->dim}, {"ok", true}});
        }
        for (auto& [name, tr] : doc_.triangulars) {
            fmt::print("triangular {}: dim {}; ok\n", name, tr.ext.algebra()->dim);
            add({{"kind", "triangular"}, {"name", name}, {"dim", tr.ext.algebra()->dim}, {"ok", true}});
        }
        for (auto& [name, t] : doc_.twosteps) {
            fmt::print("two-step {}: ({}, {}) over {}; ok\n", name, t.t.m0.dim, t.t.m1.dim, t.over);
            add({{"kind", "twostep"}, {"name", name}, {"over", t.over}, {"ok", true}});
        }
        for (auto& [name, t] : doc_.triples) {
            fmt::print("triple {}: ({}, {}) over {}; ok\n", name, t.t.m0.dim, t.t.m1.dim, t.over);
            add({{"kind", "triple"}, {"name", name}, {"over", t.over}, {"ok", true}});
        }
        for (auto& v : doc_.veronese) {
            fmt::print("veronese {}: {} with ell {}; ok\n", v.name, v.algebra, v.ell);
            add({{"kind", "veronese"}, {"name", v.name}, {"ok", true}});
        }
        return 0;
    }

    void dimensions(bool injective)
    {
        const char* q = injective ? "injdim" : "pd";
        for (auto& sc : doc_.scenarios) {
            if (!selected(sc.name))
                continue;
            const auto& te = doc_.extensions.at(sc.extension);
            for (auto& mn : sc.modules) {
                const auto& m = doc_.modules.at(mn);
                auto r = injective ? formulas::injdim_trivext_module(m, te, fopt_) : formulas::pd_trivext_module(m, te, fopt_);
                auto over_a = modrep::restrict_along_aug(m, te);
                compared({{"kind", q}, {"scenario", sc.name}, {"module", mn}}, fmt::format("{} {} {}", sc.name, q, mn),
                         r.value,
                         [&] { return injective ? oracle::injdim_direct(over_a, oopt_) : oracle::pd_direct(over_a, oopt_); },
                         &r.trace);
            }
            for (auto& tn : sc.twosteps) {
                const auto& t = doc_.twosteps.at(tn).t;
                auto r = injective ? formulas::injdim_trivext_twostep(t, fopt_) : formulas::pd_trivext_twostep(t, fopt_);
                compared({{"kind", q}, {"scenario", sc.name}, {"twostep", tn}}, fmt::format("{} {} {}", sc.name, q, tn),
                         r.value,
                         [&] {
                             auto over_a = modrep::assemble_trivext_module(t, te);
                             return injective ? oracle::injdim_direct(over_a, oopt_) : oracle::pd_direct(over_a, oopt_);
                         },
                         &r.trace);
            }
        }
    }

    void gldim()
    {
        for (auto& [name, te] : doc_.extensions) {
            if (!selected(name))
                continue;
            auto r = formulas::gldim_trivext(te, fopt_);
            auto g = formulas::gldim_finiteness_check(te, fopt_);
            json e = {{"kind", "gldim"}, {"extension", name}, {"gldim_lam", dv_json(g.gldim_lam)},
                      {"finite", formulas::tri_str(g.finite)}};
            e["nilpotence"] = g.nilpotence ? json(*g.nilpotence) : json(nullptr);
            e["bound"] = g.bound ? json(*g.bound) : json(nullptr);
            const bool saved = s_.oracle;
            s_.oracle = true;
            compared(e, fmt::format("{} gldim", name), r.value, [&] { return oracle::gldim_direct(te.algebra(), oopt_); },
                     &r.trace);
            s_.oracle = saved;
            if (g.bound)
                fmt::print("    gldim lam = {}, nilpotent at a = {}, bound {} ({})\n", compact(g.gldim_lam), *g.nilpotence,
                           *g.bound, g.bound_holds ? "holds" : "violated");
            if (!g.bound_holds)
                failed_ = true;
        }
    }

    void asid()
    {
        for (auto& [name, te] : doc_.extensions) {
            if (!selected(name))
                continue;
            for (bool left : {false, true}) {
                auto r = left ? formulas::left_asid_check(te, fopt_) : formulas::right_asid_check(te, fopt_);
                fmt::print("{} {} asid: {}; alpha = {}\n", name, r.side, formulas::tri_str(r.is_asid), compact(r.alpha));
                if (s_.trace) {
                    std::string s = r.str();
                    fmt::print("    {}\n", s.substr(s.find('\n') + 1, std::string::npos).substr(2));
                    print_trace(r.trace);
                }
                if (r.is_asid == Tri::undetermined)
                    undetermined_ = true;
                json e = asid_json(r);
                e["kind"] = "asid";
                e["extension"] = name;
                add(e);
            }
        }
    }

    void ig()
    {
        for (auto& [name, te] : doc_.extensions) {
            if (!selected(name))
                continue;
            auto r = formulas::ig_check(te, fopt_);
            std::string inj = r.injdim_right == r.injdim_left && r.injdim_right.certified()
                                  ? fmt::format("injdim A_A = {} = injdim _AA", compact(r.injdim_right))
                                  : fmt::format("injdim A_A = {}, injdim _AA = {}", compact(r.injdim_right),
                                                compact(r.injdim_left));
            std::string al = r.right.alpha == r.left.alpha && r.right.alpha.certified()
                                 ? fmt::format("α_r = α_ℓ = {}", compact(r.right.alpha))
                                 : fmt::format("α_r = {}, α_ℓ = {}", compact(r.right.alpha), compact(r.left.alpha));
            fmt::print("{} IG: {}; {}; {}\n", name, formulas::tri_str(r.is_ig), inj, al);
            json e = {{"kind", "ig"},        {"extension", name},       {"ig", formulas::tri_str(r.is_ig)},
                      {"injdim_right", dv_json(r.injdim_right)},         {"injdim_left", dv_json(r.injdim_left)},
                      {"zaks", r.zaks_ok},   {"right", asid_json(r.right)}, {"left", asid_json(r.left)}};
            if (r.is_ig == Tri::undetermined)
                undetermined_ = true;
            if (!r.zaks_ok)
                failed_ = true;
            if (s_.oracle) {
                auto ri = oracle::injdim_direct(modrep::regular_module(te.algebra()), oopt_);
                auto li = oracle::injdim_direct(modrep::regular_module(algebra::opposite(te.algebra())), oopt_);
                for (auto [side, f, o] : {std::tuple{"injdim A_A", r.injdim_right, ri},
                                          std::tuple{"injdim _AA", r.injdim_left, li}}) {
                    auto v = oracle::verify(f, o);
                    fmt::print("    {}: {} (formula) {} {} (oracle)\n", side, pretty(f),
                               v == oracle::Verdict::pass ? "=" : v == oracle::Verdict::fail ? "!=" : "?", pretty(o));
                    if (v == oracle::Verdict::fail)
                        failed_ = true;
                    if (v == oracle::Verdict::undetermined && (f.certified() || o.certified()))
                        undetermined_ = true;
                }
                e["oracle"] = {{"injdim_right", dv_json(ri)}, {"injdim_left", dv_json(li)}};
            }
            if (s_.trace) {
                print_trace(r.right.trace);
                print_trace(r.left.trace);
            }
            add(e);
        }
    }

    void perfect()
    {
        for (auto& sc : doc_.scenarios) {
            if (!selected(sc.name))
                continue;
            const auto& te = doc_.extensions.at(sc.extension);
            for (auto& mn : sc.modules) {
                auto p = formulas::perfectness_check(doc_.modules.at(mn), te, fopt_);
                std::string w = p.witness ? fmt::format(" (a = {})", *p.witness) : "";
                std::string line = fmt::format("{} perfect {}: {}{}", sc.name, mn, formulas::tri_str(p.perfect), w);
                json e = {{"kind", "perfect"}, {"scenario", sc.name}, {"module", mn}, {"perfect", formulas::tri_str(p.perfect)}};
                e["witness"] = p.witness ? json(*p.witness) : json(nullptr);
                json pds = json::array();
                for (auto& v : p.iterate_pd)
                    pds.push_back(dv_json(v));
                e["iterate_pd"] = pds;
                if (s_.oracle) {
                    auto o = oracle::pd_direct(modrep::restrict_along_aug(doc_.modules.at(mn), te), oopt_);
                    e["oracle_pd"] = dv_json(o);
                    line += fmt::format("; oracle pd over A {}", pretty(o));
                    if (o.certified() && p.perfect != Tri::undetermined && (p.perfect == Tri::yes) != o.certified_finite())
                        failed_ = true;
                }
                if (p.perfect == Tri::undetermined)
                    undetermined_ = true;
                fmt::print("{}\n", line);
                add(e);
            }
        }
    }

    void kernel()
    {
        for (auto& sc : doc_.scenarios) {
            if (!selected(sc.name))
                continue;
            const auto& te = doc_.extensions.at(sc.extension);
            for (auto& mn : sc.modules) {
                json e = {{"kind", "kernel"}, {"scenario", sc.name}, {"module", mn}};
                try {
                    std::string bits;
                    json members = json::array();
                    for (int a = 0; a <= s_.amax; ++a) {
                        bool in = formulas::kernel_membership(doc_.modules.at(mn), te, a, fopt_);
                        members.push_back(in);
                        bits += in ? '1' : '0';
                    }
                    e["members"] = members;
                    fmt::print("{} kernel {}: a = 0..{}: {}\n", sc.name, mn, s_.amax, bits);
                }
                catch (const std::exception& ex) {
                    e["error"] = ex.what();
                    fmt::print("{} kernel {}: not applicable ({})\n", sc.name, mn, ex.what());
                }
                add(e);
            }
        }
    }

    void triangular()
    {
        for (auto& [name, tr] : doc_.triangulars) {
            if (!selected(name))
                continue;
            auto g = formulas::triangular_gldim(tr, fopt_);
            compared({{"kind", "triangular_gldim"}, {"triangular", name}, {"gldim", dv_json(g.gldim)}},
                     fmt::format("{} gldim (triangular)", name), g.chase,
                     [&] { return oracle::gldim_direct(tr.ext.algebra(), oopt_); });
            try {
                Tri c = formulas::chen_triangular_ig(tr, fopt_.hom);
                fmt::print("{} triangular IG: {}\n", name, formulas::tri_str(c));
                add({{"kind", "triangular_ig"}, {"triangular", name}, {"ig", formulas::tri_str(c)}});
                if (c == Tri::undetermined)
                    undetermined_ = true;
            }
            catch (const std::exception& ex) {
                fmt::print("{} triangular IG: not applicable ({})\n", name, ex.what());
                add({{"kind", "triangular_ig"}, {"triangular", name}, {"error", ex.what()}});
            }
            for (auto& [tn, t] : doc_.triples) {
                if (t.over != name)
                    continue;
                auto over_a = [&] {
                    return modrep::assemble_trivext_module(formulas::inflate_triple(tr, t.t), tr.ext);
                };
                compared({{"kind", "triangular_pd"}, {"triangular", name}, {"triple", tn}},
                         fmt::format("{} pd {}", name, tn), formulas::triangular_pd(tr, t.t, fopt_.hom),
                         [&] { return oracle::pd_direct(over_a(), oopt_); });
                compared({{"kind", "triangular_injdim"}, {"triangular", name}, {"triple", tn}},
                         fmt::format("{} injdim {}", name, tn), formulas::triangular_injdim(tr, t.t, fopt_.hom),
                         [&] { return oracle::injdim_direct(over_a(), oopt_); });
            }
        }
    }

    void veronese()
    {
        for (auto& v : doc_.veronese) {
            if (!selected(v.name))
                continue;
            json e = {{"kind", "veronese"}, {"name", v.name}, {"algebra", v.algebra}, {"ell", v.ell}};
            try {
                auto b = formulas::beilinson_ig_transfer(doc_.graded.at(v.algebra), v.ell, fopt_);
                fmt::print("{}: A IG {} / A^[{}] IG {} ({}); gldim A {} / A^[{}] {} ({})\n", v.name,
                           formulas::tri_str(b.a_ig), v.ell, formulas::tri_str(b.veronese_ig),
                           b.ig_agrees ? "agree" : "disagree", compact(b.gldim_a), v.ell, compact(b.gldim_veronese),
                           b.gldim_agrees ? "agree" : "disagree");
                e["a_ig"] = formulas::tri_str(b.a_ig);
                e["veronese_ig"] = formulas::tri_str(b.veronese_ig);
                e["gldim_a"] = dv_json(b.gldim_a);
                e["gldim_veronese"] = dv_json(b.gldim_veronese);
                e["ig_agrees"] = b.ig_agrees;
                e["gldim_agrees"] = b.gldim_agrees;
                if (!b.ig_agrees || !b.gldim_agrees)
                    failed_ = true;
            }
            catch (const std::exception& ex) {
                fmt::print("{}: not applicable ({})\n", v.name, ex.what());
                e["error"] = ex.what();
            }
            add(e);
        }
    }

    int suite()
    {
        suite::SuiteOptions opt;
        opt.formula = fopt_;
        opt.oracle = oopt_;
        bool ok = true;
        for (int id = 1; id <= 8; ++id) {
            if (!s_.criteria.empty() && std::find(s_.criteria.begin(), s_.criteria.end(), id) == s_.criteria.end())
                continue;
            auto r = suite::criterion(id, opt);
            fmt::print("{}\n", r.line());
            if (!r.pass || s_.trace)
                for (auto& d : r.details)
                    fmt::print("    {}\n", d);
            std::fflush(stdout);
            add({{"kind", "criterion"}, {"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary},
                 {"details", r.details}});
            ok = ok && r.pass;
        }
        return ok ? 0 : 1;
    }

    /* Exit status: failures are 1; undetermined results are 1 only for verify. */
    int status(bool strict) const { return failed_ || (strict && undetermined_) ? 1 : 0; }

    void write_json(const std::string& command, int status)
    {
        if (s_.json_path.empty())
            return;
        report_["command"] = command;
        report_["status"] = status;
        report_["failed"] = failed_;
        report_["undetermined"] = undetermined_;
        std::ofstream out(s_.json_path);
        out << report_.dump(2) << "\n";
    }

private:
    Settings s_;
    doc::Document doc_;
    formulas::FormulaOptions fopt_;
    oracle::OracleOptions oopt_;
    json report_;
    bool failed_ = false;
    bool undetermined_ = false;
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homological dimensions of trivial extensions"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--field", s.field, "Override the field: q or fp:<p>");
    app.add_option("--cutoff", s.cutoff, "Resolution length cutoff")->check(CLI::PositiveNumber);
    app.add_option("--amax", s.amax, "Largest tower index a")->check(CLI::NonNegativeNumber);
    app.add_flag("--trace", s.trace, "Print the per-a trace");
    app.add_option("--json", s.json_path, "Write a machine-readable report");
    app.add_option("--target", s.targets, "Restrict to these scenario or object names");

    struct Command {
        const char* name;
        const char* help;
        bool oracle_flag;
    };
    const Command commands[] = {
        {"check", "Parse the input and run the axiom checks", false},
        {"pd", "Projective dimension over A of modules and two-step modules", true},
        {"injdim", "Injective dimension over A of modules and two-step modules", true},
        {"gldim", "Global dimension of each trivial extension against the oracle", false},
        {"asid", "Right and left asid conditions and asid numbers", false},
        {"ig", "Iwanaga-Gorenstein test of each trivial extension", true},
        {"perfect", "Perfectness of C-tensor towers of modules", true},
        {"kernel", "Membership of modules in the kernel of - (x)^L C^a", false},
        {"triangular", "Triangular algebra dimensions and IG test", true},
        {"veronese", "Quasi-Veronese transfer of IG and gldim", false},
        {"verify", "Every formula against the oracle; undetermined results fail", false},
    };
    std::map<std::string, CLI::App*> subs;
    for (auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", s.input, "JSON input document")->required()->check(CLI::ExistingFile);
        if (c.oracle_flag)
            sub->add_flag("--oracle", s.oracle, "Compare against the direct computation");
        subs[c.name] = sub;
    }
    auto* suite_cmd = app.add_subcommand("suite", "Run the built-in acceptance suite");
    suite_cmd->add_option("criteria", s.criteria, "Criterion ids (default: all)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Run run(s);
    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "suite") {
            int st = run.suite();
            run.write_json(command, st);
            return st;
        }
        run.load();
        int st = 0;
        if (command == "check")
            st = run.check();
        else if (command == "pd" || command == "injdim") {
            run.dimensions(command == "injdim");
            st = run.status(false);
        }
        else if (command == "gldim") {
            run.gldim();
            st = run.status(false);
        }
        else if (command == "asid") {
            run.asid();
            st = run.status(false);
        }
        else if (command == "ig") {
            run.ig();
            st = run.status(false);
        }
        else if (command == "perfect") {
            run.perfect();
            st = run.status(false);
        }
        else if (command == "kernel") {
            run.kernel();
            st = run.status(false);
        }
        else if (command == "triangular") {
            run.triangular();
            st = run.status(false);
        }
        else if (command == "veronese") {
            run.veronese();
            st = run.status(false);
        }
        else if (command == "verify") {
            run.enable_oracle();
            run.dimensions(false);
            run.dimensions(true);
            run.gldim();
            run.ig();
            run.triangular();
            run.veronese();
            st = run.status(true);
            fmt::print("verify: {}\n", st == 0 ? "pass" : "fail");
        }
        run.write_json(command, st);
        return st;
    }
    catch (const doc::ParseError& e) {
        std::cerr << s.input << ":" << e.what() << "\n";
        return 2;
    }
    catch (const doc::DocumentError& e) {
        std::cerr << s.input << ": " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

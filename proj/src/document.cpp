#include "trivext/document.h"

#include "trivext/corpus.h"
#include "trivext/formulas.h"
#include "trivext/scenarios.h"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace trivext::doc {

using json = nlohmann::json;
using modrep::Bimodule;

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error(fmt::format("{}:{}: {}", line_, column_, what)), line(line_), column(column_)
{
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw DocumentError(where + ": " + what);
}

const json& field_of(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        fail(where, fmt::format("missing \"{}\"", key));
    return j.at(key);
}

std::string str_of(const json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

int int_of(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    return j.get<int>();
}

Scalar scalar_of(const FieldSpec& f, const json& j, const std::string& where)
{
    try {
        if (j.is_number_integer())
            return f.reduce(Scalar(j.get<long>()));
        if (j.is_string())
            return f.from_string(j.get<std::string>());
    }
    catch (const std::exception& e) {
        fail(where, e.what());
    }
    fail(where, "expected an exact scalar (integer or string such as \"-3/4\")");
}

Vec vec_of(const FieldSpec& f, const json& j, int n, const std::string& where)
{
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        fail(where, fmt::format("expected an array of {} scalars", n));
    Vec v;
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(scalar_of(f, j[i], fmt::format("{}[{}]", where, i)));
    return v;
}

/* Row-major array of rows. */
Matrix matrix_of(const FieldSpec& f, const json& j, int rows, int cols, const std::string& where)
{
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        fail(where, fmt::format("expected {} rows", rows));
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        Vec row = vec_of(f, j[r], cols, fmt::format("{}[{}]", where, r));
        for (int c = 0; c < cols; ++c)
            m.set(r, c, row[c]);
    }
    return m;
}

std::vector<Matrix> actions_of(const FieldSpec& f, const json& j, int count, int dim, const std::string& where)
{
    if (!j.is_array() || static_cast<int>(j.size()) != count)
        fail(where, fmt::format("expected one matrix per basis vector ({})", count));
    std::vector<Matrix> out;
    for (int i = 0; i < count; ++i)
        out.push_back(matrix_of(f, j[i], dim, dim, fmt::format("{}[{}]", where, i)));
    return out;
}

std::vector<std::string> names_of(const json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected an array of names");
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(str_of(j[i], fmt::format("{}[{}]", where, i)));
    return out;
}

std::pair<int, int> line_column(const std::string& text, size_t byte)
{
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        }
        else
            ++col;
    }
    return {line, col};
}

/* Memoized resolution of named entries that may refer to each other. */
template <class T>
class Resolver {
public:
    Resolver(const json* section, std::string kind, std::function<T(const std::string&, const json&)> build)
        : section_(section), kind_(std::move(kind)), build_(std::move(build))
    {
    }

    const T& get(const std::string& name)
    {
        auto it = done_.find(name);
        if (it != done_.end())
            return it->second;
        if (!section_ || !section_->contains(name))
            throw DocumentError(fmt::format("unresolved reference to {} \"{}\"", kind_, name));
        if (!active_.insert(name).second)
            throw DocumentError(fmt::format("cyclic reference through {} \"{}\"", kind_, name));
        T value = build_(fmt::format("{} \"{}\"", kind_, name), section_->at(name));
        active_.erase(name);
        return done_.emplace(name, std::move(value)).first->second;
    }

    void all()
    {
        if (section_)
            for (auto it = section_->begin(); it != section_->end(); ++it)
                get(it.key());
    }

    std::map<std::string, T> take() { return std::move(done_); }

private:
    const json* section_;
    std::string kind_;
    std::function<T(const std::string&, const json&)> build_;
    std::map<std::string, T> done_;
    std::set<std::string> active_;
};

const json* section(const json& root, const char* key)
{
    if (!root.contains(key))
        return nullptr;
    const json& s = root.at(key);
    if (!s.is_object())
        throw DocumentError(fmt::format("\"{}\" must be an object keyed by name", key));
    return &s;
}

Bimodule vertex_bimodule(const AlgebraPtr& l, int vl, const AlgebraPtr& r, int vr, const std::string& where)
{
    if (vl < 0 || vl >= static_cast<int>(l->idempotents.size()) || vr < 0 ||
        vr >= static_cast<int>(r->idempotents.size()))
        fail(where, "vertex out of range");
    return corpus::character_bimodule(l, corpus::vertex_character(l, vl), r, corpus::vertex_character(r, vr));
}

void require_ok(const modrep::ModuleReport& rep, const std::string& where)
{
    if (!rep.ok)
        fail(where, "axiom check failed: " + rep.summary());
}

class Loader {
public:
    Loader(const json& root, FieldSpec f)
        : root_(root),
          field_(f),
          algebras_(section(root, "algebras"), "algebra",
                    [this](const std::string& w, const json& j) { return build_algebra(w, j); }),
          bimodules_(section(root, "bimodules"), "bimodule",
                     [this](const std::string& w, const json& j) { return build_bimodule(w, j); }),
          modules_(section(root, "modules"), "module",
                   [this](const std::string& w, const json& j) { return build_module(w, j); })
    {
    }

    Document run()
    {
        Document d;
        d.field = field_;
        algebras_.all();
        bimodules_.all();
        modules_.all();
        if (auto* s = section(root_, "extensions"))
            for (auto it = s->begin(); it != s->end(); ++it)
                d.extensions.emplace(it.key(), build_extension(fmt::format("extension \"{}\"", it.key()), it.value()));
        if (auto* s = section(root_, "triangulars"))
            for (auto it = s->begin(); it != s->end(); ++it)
                d.triangulars.emplace(it.key(),
                                      build_triangular(fmt::format("triangular \"{}\"", it.key()), it.value()));
        for (auto& [name, tr] : d.triangulars)
            if (!d.extensions.emplace(name, tr.ext).second)
                throw DocumentError(fmt::format("triangular \"{}\" has the name of an extension", name));
        if (auto* s = section(root_, "twosteps"))
            for (auto it = s->begin(); it != s->end(); ++it)
                d.twosteps.emplace(it.key(),
                                   build_twostep(d, fmt::format("two-step \"{}\"", it.key()), it.value()));
        if (auto* s = section(root_, "triples"))
            for (auto it = s->begin(); it != s->end(); ++it)
                d.triples.emplace(it.key(), build_triple(d, fmt::format("triple \"{}\"", it.key()), it.value()));
        if (root_.contains("veronese"))
            d.veronese = build_veronese(root_.at("veronese"));
        d.algebras = algebras_.take();
        d.graded = std::move(graded_);
        d.bimodules = bimodules_.take();
        d.modules = modules_.take();
        build_scenarios(d);
        return d;
    }

private:
    AlgebraPtr algebra(const json& j, const std::string& where) { return algebras_.get(str_of(j, where)); }
    BimodulePtr bimodule(const json& j, const std::string& where) { return bimodules_.get(str_of(j, where)); }
    const RightModule& module(const json& j, const std::string& where) { return modules_.get(str_of(j, where)); }

    AlgebraPtr build_algebra(const std::string& where, const json& j)
    {
        AlgebraPtr a;
        std::optional<std::vector<int>> grading;
        try {
            if (j.contains("builtin")) {
                std::string b = str_of(j.at("builtin"), where + ".builtin");
                int n = j.contains("n") ? int_of(j.at("n"), where + ".n") : 0;
                if (b == "field")
                    a = algebra::field_algebra(field_);
                else if (b == "dual_numbers")
                    a = corpus::dual_numbers(field_);
                else if (b == "truncated") {
                    if (n < 1)
                        fail(where, "truncated needs n >= 1");
                    auto g = corpus::truncated_polynomial(field_, n);
                    a = g.algebra;
                    grading = g.degree;
                }
                else if (b == "linear") {
                    if (n < 1)
                        fail(where, "linear needs n >= 1");
                    std::vector<std::vector<int>> rel;
                    if (j.contains("relations"))
                        rel = j.at("relations").get<std::vector<std::vector<int>>>();
                    a = corpus::linear_quiver(field_, n, rel);
                }
                else if (b == "semisimple") {
                    if (n < 1)
                        fail(where, "semisimple needs n >= 1");
                    a = corpus::split_semisimple(field_, n);
                }
                else
                    fail(where, "unknown builtin \"" + b + "\"");
            }
            else if (j.contains("quiver")) {
                const json& q = j.at("quiver");
                algebra::Quiver quiver;
                quiver.vertices = int_of(field_of(q, "vertices", where + ".quiver"), where + ".quiver.vertices");
                if (q.contains("arrows"))
                    for (auto& arr : q.at("arrows")) {
                        if (!arr.is_array() || arr.size() < 2)
                            fail(where, "arrows are [source, target, name]");
                        std::string label = arr.size() > 2 ? arr[2].get<std::string>()
                                                           : fmt::format("a{}", quiver.arrows.size());
                        quiver.arrows.emplace_back(arr[0].get<int>(), arr[1].get<int>(), label);
                    }
                std::vector<std::vector<int>> rel;
                if (j.contains("relations"))
                    rel = j.at("relations").get<std::vector<std::vector<int>>>();
                a = algebra::path_algebra(field_, quiver, rel);
            }
            else if (j.contains("opposite")) {
                a = algebra::opposite(algebra(j.at("opposite"), where + ".opposite"));
            }
            else if (j.contains("table")) {
                int dim = int_of(field_of(j, "dim", where), where + ".dim");
                std::vector<std::string> labels;
                if (j.contains("labels"))
                    labels = names_of(j.at("labels"), where + ".labels");
                else
                    for (int i = 0; i < dim; ++i)
                        labels.push_back(fmt::format("b{}", i));
                if (static_cast<int>(labels.size()) != dim)
                    fail(where, "labels must have one entry per basis vector");
                std::vector<algebra::TableEntry> table;
                const json& t = j.at("table");
                for (size_t e = 0; e < t.size(); ++e) {
                    std::string w = fmt::format("{}.table[{}]", where, e);
                    if (!t[e].is_array() || t[e].size() != 4)
                        fail(w, "entries are [i, j, k, coeff] for b_i b_j = ... + coeff b_k");
                    int i = int_of(t[e][0], w), jj = int_of(t[e][1], w), k = int_of(t[e][2], w);
                    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
                        fail(w, "index out of range");
                    table.push_back({i, jj, k, scalar_of(field_, t[e][3], w)});
                }
                Vec unit = vec_of(field_, field_of(j, "unit", where), dim, where + ".unit");
                auto raw = algebra::from_table(field_, labels, table, unit);
                if (j.contains("idempotents")) {
                    raw.idempotents.clear();
                    const json& is = j.at("idempotents");
                    for (size_t e = 0; e < is.size(); ++e)
                        raw.idempotents.push_back(vec_of(field_, is[e], dim, fmt::format("{}.idempotents[{}]", where, e)));
                }
                a = algebra::make_checked(std::move(raw));
            }
            else
                fail(where, "expected one of \"builtin\", \"quiver\", \"table\", \"opposite\"");
        }
        catch (const algebra::AlgebraError& e) {
            fail(where, e.what());
        }
        catch (const json::exception& e) {
            fail(where, e.what());
        }
        if (j.contains("grading")) {
            grading = j.at("grading").get<std::vector<int>>();
            if (static_cast<int>(grading->size()) != a->dim)
                fail(where, "grading needs one degree per basis vector");
        }
        if (grading) {
            try {
                graded_[name_of(where)] = algebra::make_graded(a, *grading);
            }
            catch (const std::exception& e) {
                fail(where, std::string("grading: ") + e.what());
            }
        }
        return a;
    }

    static std::string name_of(const std::string& where)
    {
        auto p = where.find('"');
        return where.substr(p + 1, where.size() - p - 2);
    }

    BimodulePtr build_bimodule(const std::string& where, const json& j)
    {
        Bimodule b;
        try {
            if (j.contains("regular"))
                b = modrep::regular_bimodule(algebra(j.at("regular"), where));
            else if (j.contains("dual_regular"))
                b = modrep::dual_bimodule(modrep::regular_bimodule(algebra(j.at("dual_regular"), where)));
            else if (j.contains("top"))
                b = algebra::semisimple_quotient(algebra(j.at("top"), where)).top_bimodule;
            else if (j.contains("zero")) {
                const json& z = j.at("zero");
                if (!z.is_array() || z.size() != 2)
                    fail(where, "zero is [left algebra, right algebra]");
                b = modrep::zero_bimodule(algebra(z[0], where), algebra(z[1], where));
            }
            else if (j.contains("vertex")) {
                const json& v = j.at("vertex");
                if (!v.is_array() || v.size() != 4)
                    fail(where, "vertex is [left algebra, vertex, right algebra, vertex]");
                b = vertex_bimodule(algebra(v[0], where), int_of(v[1], where), algebra(v[2], where),
                                    int_of(v[3], where), where);
            }
            else if (j.contains("sum")) {
                auto parts = names_of(j.at("sum"), where + ".sum");
                if (parts.empty())
                    fail(where, "sum needs at least one summand");
                b = *bimodules_.get(parts[0]);
                for (size_t i = 1; i < parts.size(); ++i)
                    b = modrep::direct_sum(b, *bimodules_.get(parts[i]));
            }
            else if (j.contains("dual"))
                b = modrep::dual_bimodule(*bimodule(j.at("dual"), where));
            else if (j.contains("opposite"))
                b = modrep::opposite_bimodule(*bimodule(j.at("opposite"), where));
            else if (j.contains("left_action")) {
                b.left_alg = algebra(field_of(j, "left", where), where + ".left");
                b.right_alg = algebra(field_of(j, "right", where), where + ".right");
                b.dim = int_of(field_of(j, "dim", where), where + ".dim");
                b.left = actions_of(field_, j.at("left_action"), b.left_alg->dim, b.dim, where + ".left_action");
                b.right = actions_of(field_, field_of(j, "right_action", where), b.right_alg->dim, b.dim,
                                     where + ".right_action");
            }
            else
                fail(where, "expected one of \"regular\", \"dual_regular\", \"top\", \"zero\", \"vertex\", \"sum\", "
                            "\"dual\", \"opposite\", \"left_action\"");
        }
        catch (const algebra::AlgebraError& e) {
            fail(where, e.what());
        }
        require_ok(modrep::check_bimodule(b), where);
        return corpus::share(std::move(b));
    }

    RightModule build_module(const std::string& where, const json& j)
    {
        RightModule m;
        auto vertex_arg = [&](const char* key) {
            const json& v = j.at(key);
            if (!v.is_array() || v.size() != 2)
                fail(where, fmt::format("{} is [algebra, vertex]", key));
            auto a = algebra(v[0], where);
            int t = int_of(v[1], where);
            if (t < 0 || t >= static_cast<int>(a->idempotents.size()))
                fail(where, "vertex out of range");
            return std::pair{a, t};
        };
        if (j.contains("simple")) {
            auto [a, t] = vertex_arg("simple");
            m = corpus::vertex_simple(a, t);
        }
        else if (j.contains("projective")) {
            auto [a, t] = vertex_arg("projective");
            m = modrep::idempotent_projective(a, t);
        }
        else if (j.contains("regular"))
            m = modrep::regular_module(algebra(j.at("regular"), where));
        else if (j.contains("zero"))
            m = modrep::zero_module(algebra(j.at("zero"), where));
        else if (j.contains("top"))
            m = algebra::semisimple_quotient(algebra(j.at("top"), where)).top;
        else if (j.contains("right_of"))
            m = modrep::as_right_module(*bimodule(j.at("right_of"), where));
        else if (j.contains("sum")) {
            auto parts = names_of(j.at("sum"), where + ".sum");
            if (parts.empty())
                fail(where, "sum needs at least one summand");
            m = modules_.get(parts[0]);
            for (size_t i = 1; i < parts.size(); ++i) {
                const RightModule& n = modules_.get(parts[i]);
                if (!modrep::same_algebra(m.alg, n.alg))
                    fail(where, "summands live over different algebras");
                m = modrep::direct_sum(m, n);
            }
        }
        else if (j.contains("action")) {
            m.alg = algebra(field_of(j, "algebra", where), where + ".algebra");
            m.dim = int_of(field_of(j, "dim", where), where + ".dim");
            m.act = actions_of(field_, j.at("action"), m.alg->dim, m.dim, where + ".action");
        }
        else
            fail(where, "expected one of \"simple\", \"projective\", \"regular\", \"zero\", \"top\", \"right_of\", "
                        "\"sum\", \"action\"");
        require_ok(modrep::check_module(m), where);
        return m;
    }

    TrivialExtension build_extension(const std::string& where, const json& j)
    {
        auto lam = algebra(field_of(j, "lam", where), where + ".lam");
        auto c = bimodule(field_of(j, "c", where), where + ".c");
        if (!modrep::same_algebra(c->left_alg, lam) || !modrep::same_algebra(c->right_alg, lam))
            fail(where, "the bimodule must have lam on both sides");
        try {
            return algebra::trivial_extension(lam, c);
        }
        catch (const std::exception& e) {
            fail(where, e.what());
        }
    }

    Triangular build_triangular(const std::string& where, const json& j)
    {
        auto l0 = algebra(field_of(j, "lam0", where), where + ".lam0");
        auto l1 = algebra(field_of(j, "lam1", where), where + ".lam1");
        auto c = bimodule(field_of(j, "c", where), where + ".c");
        if (!modrep::same_algebra(c->left_alg, l0) || !modrep::same_algebra(c->right_alg, l1))
            fail(where, "the bimodule must be a lam0-lam1 bimodule");
        try {
            return algebra::upper_triangular(l0, l1, c);
        }
        catch (const std::exception& e) {
            fail(where, e.what());
        }
    }

    /* xi from an explicit matrix or from a map on the tensor basis. */
    Matrix xi_of(const json& j, const RightModule& m0, const RightModule& m1, const Bimodule& c,
                 const std::string& where)
    {
        if (j.contains("xi"))
            return matrix_of(field_, j.at("xi"), m1.dim, m0.dim * c.dim, where + ".xi");
        if (j.contains("tensor_map")) {
            auto tm = modrep::tensor_over_algebra(m0, c);
            Matrix g = matrix_of(field_, j.at("tensor_map"), m1.dim, tm.module.dim, where + ".tensor_map");
            if (!modrep::is_module_map(g, tm.module, m1))
                fail(where, "tensor_map is not a module map M0 (x) C -> M1");
            return modrep::xi_from_tensor_map(tm, g);
        }
        return Matrix(field_, m1.dim, m0.dim * c.dim);
    }

    NamedTwoStep build_twostep(const Document& d, const std::string& where, const json& j)
    {
        std::string ext = str_of(field_of(j, "extension", where), where + ".extension");
        auto it = d.extensions.find(ext);
        if (it == d.extensions.end())
            throw DocumentError(fmt::format("{}: unresolved reference to extension \"{}\"", where, ext));
        const TrivialExtension& te = it->second;
        TwoStep t;
        if (j.value("regular", false))
            t = modrep::regular_twostep(te);
        else if (j.contains("concentrated")) {
            const RightModule& m = module(j.at("concentrated"), where);
            int deg = j.contains("degree") ? int_of(j.at("degree"), where + ".degree") : 0;
            if (deg != 0 && deg != 1)
                fail(where, "degree must be 0 or 1");
            if (!modrep::same_algebra(m.alg, te.lam))
                fail(where, "module is not over the base of the extension");
            t = scenarios::concentrated(te, m, deg);
        }
        else {
            t.c = te.c;
            t.m0 = module(field_of(j, "m0", where), where + ".m0");
            t.m1 = module(field_of(j, "m1", where), where + ".m1");
            if (!modrep::same_algebra(t.m0.alg, te.lam) || !modrep::same_algebra(t.m1.alg, te.lam))
                fail(where, "M0 and M1 must be modules over the base of the extension");
            t.xi = xi_of(j, t.m0, t.m1, *te.c, where);
        }
        require_ok(modrep::check_twostep(t), where);
        return {ext, t};
    }

    NamedTwoStep build_triple(const Document& d, const std::string& where, const json& j)
    {
        std::string name = str_of(field_of(j, "triangular", where), where + ".triangular");
        auto it = d.triangulars.find(name);
        if (it == d.triangulars.end())
            throw DocumentError(fmt::format("{}: unresolved reference to triangular \"{}\"", where, name));
        const Triangular& tr = it->second;
        TwoStep t;
        if (j.value("regular", false))
            t = scenarios::regular_triple(tr);
        else {
            t.c = tr.c01;
            t.m0 = j.contains("m0") ? module(j.at("m0"), where + ".m0") : modrep::zero_module(tr.lam0);
            t.m1 = j.contains("m1") ? module(j.at("m1"), where + ".m1") : modrep::zero_module(tr.lam1);
            if (!modrep::same_algebra(t.m0.alg, tr.lam0) || !modrep::same_algebra(t.m1.alg, tr.lam1))
                fail(where, "M0 must be over lam0 and M1 over lam1");
            t.xi = xi_of(j, t.m0, t.m1, *tr.c01, where);
        }
        try {
            require_ok(modrep::check_twostep(formulas::inflate_triple(tr, t)), where);
        }
        catch (const DocumentError&) {
            throw;
        }
        catch (const std::exception& e) {
            fail(where, e.what());
        }
        return {name, t};
    }

    std::vector<VeroneseSpec> build_veronese(const json& j)
    {
        if (!j.is_object())
            throw DocumentError("\"veronese\" must be an object keyed by name");
        std::vector<VeroneseSpec> out;
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string where = fmt::format("veronese \"{}\"", it.key());
            VeroneseSpec v;
            v.name = it.key();
            v.algebra = str_of(field_of(it.value(), "algebra", where), where + ".algebra");
            algebras_.get(v.algebra);
            if (!graded_.count(v.algebra))
                fail(where, "algebra \"" + v.algebra + "\" has no grading");
            v.ell = int_of(field_of(it.value(), "ell", where), where + ".ell");
            const auto& deg = graded_.at(v.algebra).degree;
            int top = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
            if (v.ell < std::max(top, 1))
                fail(where, fmt::format("ell must be at least the top degree {}", top));
            out.push_back(v);
        }
        return out;
    }

    void build_scenarios(Document& d)
    {
        if (!root_.contains("scenarios")) {
            for (auto& [name, te] : d.extensions)
                d.scenarios.push_back({name, name, d.modules_over(name), d.twosteps_over(name)});
            return;
        }
        const json& s = root_.at("scenarios");
        if (!s.is_object())
            throw DocumentError("\"scenarios\" must be an object keyed by name");
        for (auto it = s.begin(); it != s.end(); ++it) {
            std::string where = fmt::format("scenario \"{}\"", it.key());
            ScenarioSpec sc;
            sc.name = it.key();
            sc.extension = str_of(field_of(it.value(), "extension", where), where + ".extension");
            if (!d.extensions.count(sc.extension))
                throw DocumentError(fmt::format("{}: unresolved reference to extension \"{}\"", where, sc.extension));
            const AlgebraPtr& lam = d.extensions.at(sc.extension).lam;
            sc.modules = it.value().contains("modules") ? names_of(it.value().at("modules"), where + ".modules")
                                                        : d.modules_over(sc.extension);
            for (auto& m : sc.modules) {
                if (!d.modules.count(m))
                    throw DocumentError(fmt::format("{}: unresolved reference to module \"{}\"", where, m));
                if (!modrep::same_algebra(d.modules.at(m).alg, lam))
                    fail(where, "module \"" + m + "\" is not over the base of the extension");
            }
            sc.twosteps = it.value().contains("twosteps") ? names_of(it.value().at("twosteps"), where + ".twosteps")
                                                          : d.twosteps_over(sc.extension);
            for (auto& t : sc.twosteps) {
                if (!d.twosteps.count(t))
                    throw DocumentError(fmt::format("{}: unresolved reference to two-step \"{}\"", where, t));
                if (d.twosteps.at(t).over != sc.extension)
                    fail(where, "two-step \"" + t + "\" is over another extension");
            }
            d.scenarios.push_back(std::move(sc));
        }
    }

    const json& root_;
    FieldSpec field_;
    Resolver<AlgebraPtr> algebras_;
    Resolver<BimodulePtr> bimodules_;
    Resolver<RightModule> modules_;
    std::map<std::string, GradedAlgebra> graded_;
};

}  // namespace

std::vector<std::string> Document::modules_over(const std::string& extension) const
{
    std::vector<std::string> out;
    const AlgebraPtr& lam = extensions.at(extension).lam;
    for (auto& [name, m] : modules)
        if (modrep::same_algebra(m.alg, lam))
            out.push_back(name);
    return out;
}

std::vector<std::string> Document::twosteps_over(const std::string& extension) const
{
    std::vector<std::string> out;
    for (auto& [name, t] : twosteps)
        if (t.over == extension)
            out.push_back(name);
    return out;
}

Document parse(const std::string& text, std::optional<FieldSpec> field)
{
    json root;
    try {
        root = json::parse(text);
    }
    catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        auto p = msg.find(": ");
        throw ParseError(p == std::string::npos ? msg : msg.substr(p + 2), line, col);
    }
    if (!root.is_object())
        throw DocumentError("the document must be a JSON object");
    FieldSpec f = FieldSpec::rationals();
    if (field)
        f = *field;
    else if (root.contains("field")) {
        try {
            f = FieldSpec::parse(str_of(root.at("field"), "field"));
        }
        catch (const DocumentError&) {
            throw;
        }
        catch (const std::exception& e) {
            throw DocumentError(std::string("field: ") + e.what());
        }
    }
    try {
        return Loader(root, f).run();
    }
    catch (const json::exception& e) {
        throw DocumentError(e.what());
    }
}

Document load(const std::string& path, std::optional<FieldSpec> field)
{
    std::ifstream in(path);
    if (!in)
        throw DocumentError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), field);
}

}  // namespace trivext::doc

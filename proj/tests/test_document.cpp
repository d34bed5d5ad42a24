#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trivext/document.h"
#include "trivext/formulas.h"
#include "trivext/oracle.h"

using namespace trivext;
using homology::DimensionValue;

namespace {

const char* dual_numbers_doc = R"({
  "field": "q",
  "algebras": {
    "D": {"dim": 2, "labels": ["1", "x"], "unit": ["1", "0"],
          "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}
  },
  "bimodules": {"C": {"regular": "D"}, "T": {"top": "D"}},
  "modules": {
    "k": {"algebra": "D", "dim": 1, "action": [[["1"]], [["0"]]]},
    "P": {"regular": "D"}
  },
  "extensions": {"A": {"lam": "D", "c": "C"}, "B": {"lam": "D", "c": "T"}},
  "twosteps": {"reg": {"extension": "A", "regular": true}}
})";

}  // namespace

TEST_CASE("a structure table document")
{
    auto d = doc::parse(dual_numbers_doc);
    CHECK(d.algebras.at("D")->dim == 2);
    CHECK(d.modules.size() == 2);
    CHECK(d.extensions.at("A").algebra()->dim == 4);
    CHECK(d.scenarios.size() == 2);
    CHECK(d.modules_over("A") == std::vector<std::string>{"P", "k"});
    CHECK(d.twosteps_over("A") == std::vector<std::string>{"reg"});
    auto pd = formulas::pd_trivext_twostep(d.twosteps.at("reg").t);
    CHECK(pd.value == DimensionValue::exactly(0));
    auto k = d.modules.at("k");
    auto o = oracle::pd_direct(modrep::restrict_along_aug(k, d.extensions.at("B")));
    CHECK(o.is_infinite());
    CHECK(formulas::pd_trivext_module(k, d.extensions.at("B")).value.is_infinite());
}

TEST_CASE("field override")
{
    auto d = doc::parse(dual_numbers_doc, FieldSpec::prime(5));
    CHECK(d.field == FieldSpec::prime(5));
    CHECK(d.algebras.at("D")->field == FieldSpec::prime(5));
}

TEST_CASE("parse errors carry a position")
{
    try {
        doc::parse("{\n  \"algebras\": {\n    \"D\": [1, 2,,]\n  }\n}");
        FAIL("no error");
    }
    catch (const doc::ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 1);
    }
}

TEST_CASE("unresolved references and axiom failures are reported")
{
    CHECK_THROWS_AS(doc::parse(R"({"bimodules": {"C": {"regular": "missing"}}})"), doc::DocumentError);
    CHECK_THROWS_AS(doc::parse(R"({"bimodules": {"C": {"sum": ["C"]}}})"), doc::DocumentError);
    /* x acts non-nilpotently on a module where x^2 = 0 must hold. */
    std::string bad = R"({
      "algebras": {"D": {"builtin": "dual_numbers"}},
      "modules": {"m": {"algebra": "D", "dim": 1, "action": [[["1"]], [["1"]]]}}
    })";
    try {
        doc::parse(bad);
        FAIL("no error");
    }
    catch (const doc::DocumentError& e) {
        CHECK(std::string(e.what()).find("module \"m\"") != std::string::npos);
    }
    /* Not associative: x*x = 1 but x*1 = 0. */
    std::string nonassoc = R"({
      "algebras": {"D": {"dim": 2, "unit": ["1", "0"], "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 1, 0, "1"]]}}
    })";
    CHECK_THROWS_AS(doc::parse(nonassoc), doc::DocumentError);
    CHECK_THROWS_AS(doc::parse(R"({"field": "fp:4"})"), doc::DocumentError);
    CHECK_THROWS_AS(doc::parse("[1]"), doc::DocumentError);
}

TEST_CASE("quivers, triangulars and veronese entries")
{
    std::string text = R"({
      "algebras": {
        "A2": {"quiver": {"vertices": 2, "arrows": [[0, 1, "a"]]}, "grading": [0, 0, 1]},
        "k": {"builtin": "field"}
      },
      "bimodules": {"S": {"vertex": ["A2", 1, "k", 0]}},
      "modules": {"s0": {"simple": ["A2", 0]}, "t": {"regular": "k"}},
      "triangulars": {"T": {"lam0": "A2", "lam1": "k", "c": "S"}},
      "triples": {"x": {"triangular": "T", "m0": "s0"}, "y": {"triangular": "T", "m1": "t"},
                  "r": {"triangular": "T", "regular": true}},
      "veronese": {"v": {"algebra": "A2", "ell": 1}}
    })";
    auto d = doc::parse(text);
    CHECK(d.triangulars.at("T").ext.algebra()->dim == 5);
    CHECK(d.triples.size() == 3);
    CHECK(d.veronese.size() == 1);
    CHECK(d.graded.count("A2") == 1);
    const auto& tr = d.triangulars.at("T");
    auto tp = formulas::triangular_pd(tr, d.triples.at("r").t);
    CHECK(tp == DimensionValue::exactly(0));
    CHECK_THROWS_AS(doc::parse(R"({"algebras": {"k": {"builtin": "field"}}, "veronese": {"v": {"algebra": "k", "ell": 1}}})"),
                    doc::DocumentError);
}

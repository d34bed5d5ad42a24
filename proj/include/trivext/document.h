#pragma once

#include "trivext/algebra.h"
#include "trivext/modrep.h"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivext::doc {

using algebra::AlgebraPtr;
using algebra::GradedAlgebra;
using algebra::TrivialExtension;
using algebra::Triangular;
using modrep::BimodulePtr;
using modrep::RightModule;
using modrep::TwoStep;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line;
    int column;
};

/* Unresolved reference, malformed entry or failed axiom check. */
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedTwoStep {
    std::string over;
    TwoStep t;
};

struct VeroneseSpec {
    std::string name;
    std::string algebra;
    int ell = 1;
};

struct ScenarioSpec {
    std::string name;
    std::string extension;
    std::vector<std::string> modules;
    std::vector<std::string> twosteps;
};

struct Document {
    FieldSpec field;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, GradedAlgebra> graded;
    std::map<std::string, BimodulePtr> bimodules;
    std::map<std::string, RightModule> modules;
    /* Includes each triangular algebra under its own name. */
    std::map<std::string, TrivialExtension> extensions;
    std::map<std::string, Triangular> triangulars;
    /* Two-step modules over an extension. */
    std::map<std::string, NamedTwoStep> twosteps;
    /* (M0, M1, xi) over a triangular algebra. */
    std::map<std::string, NamedTwoStep> triples;
    std::vector<VeroneseSpec> veronese;
    /* Explicit scenarios, or one per extension with every module and two-step over it. */
    std::vector<ScenarioSpec> scenarios;

    /* Names of modules whose algebra is the base of the extension. */
    std::vector<std::string> modules_over(const std::string& extension) const;
    std::vector<std::string> twosteps_over(const std::string& extension) const;
};

Document parse(const std::string& text, std::optional<FieldSpec> field = std::nullopt);
Document load(const std::string& path, std::optional<FieldSpec> field = std::nullopt);

}  // namespace trivext::doc

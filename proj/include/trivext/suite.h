#pragma once

#include "trivext/formulas.h"
#include "trivext/oracle.h"
#include "trivext/properties.h"

#include <string>
#include <vector>

namespace trivext::suite {

struct SuiteOptions {
    formulas::FormulaOptions formula;
    oracle::OracleOptions oracle;
    properties::PropertyOptions props;
};

/* Outcome of one formula/oracle comparison. */
struct Comparison {
    std::string label;
    homology::DimensionValue formula;
    homology::DimensionValue oracle;
    oracle::Verdict verdict = oracle::Verdict::undetermined;
};

struct Tally {
    int passed = 0;
    int failed = 0;
    /* Undetermined with the oracle also undetermined. */
    int open = 0;
    /* Undetermined although the oracle is certified. */
    int unresolved = 0;
    std::vector<std::string> problems;

    void add(const Comparison& c);
    void problem(const std::string& what);
    bool ok() const { return failed == 0 && unresolved == 0 && problems.empty(); }
    std::string str() const;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
    double seconds = 0;
    std::string line() const;
};

Comparison compare(std::string label, const homology::DimensionValue& formula, const homology::DimensionValue& oracle);

CriterionResult criterion(int id, const SuiteOptions& opt = {});
std::vector<CriterionResult> run_all(const SuiteOptions& opt = {});

}  // namespace trivext::suite

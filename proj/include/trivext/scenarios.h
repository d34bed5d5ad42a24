#pragma once

#include "trivext/algebra.h"
#include "trivext/modrep.h"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace trivext::scenarios {

using algebra::AlgebraPtr;
using algebra::GradedAlgebra;
using algebra::TrivialExtension;
using algebra::Triangular;
using modrep::RightModule;
using modrep::TwoStep;

struct Scenario {
    std::string name;
    TrivialExtension te;
    std::optional<Triangular> tri;
    /* Modules over lam. */
    std::vector<RightModule> modules;
    /* Two-step modules over te. */
    std::vector<TwoStep> twosteps;
    /* (M0, M1, xi) over (lam0, lam1, C) when triangular. */
    std::vector<TwoStep> triples;
};

/* The fixed corpus, ordered by name. */
std::vector<Scenario> corpus(FieldSpec f = FieldSpec::rationals());
std::vector<std::string> corpus_names();
Scenario scenario(const std::string& name, FieldSpec f = FieldSpec::rationals());

/* Triangular data with IG factors for the triangular IG criterion. */
struct TriangularCase {
    std::string name;
    Triangular tri;
};

std::vector<TriangularCase> triangular_ig_cases(FieldSpec f = FieldSpec::rationals());

struct VeroneseCase {
    std::string name;
    GradedAlgebra a;
    int ell = 1;
};

std::vector<VeroneseCase> veronese_cases(FieldSpec f = FieldSpec::rationals());
/* A_2 with the arrow in degree 1. */
GradedAlgebra graded_a2(FieldSpec f);

/* (lam0, C as a right lam1-module, left multiplication). */
TwoStep regular_triple(const Triangular& tr);
/* (M, 0, 0) or (0, M, 0). */
TwoStep source_triple(const Triangular& tr, const RightModule& m0);
TwoStep target_triple(const Triangular& tr, const RightModule& m1);
/* (M0, M1, xi) over a trivial extension with M1 = 0 or M0 = 0. */
TwoStep concentrated(const TrivialExtension& te, const RightModule& m, int degree);

/* m / (v A) for a random v in m J; m itself when J = 0. */
RightModule random_quotient(const RightModule& m, std::mt19937& rng);
/* Random module over lam: sums and quotients of projectives and the corpus simples. */
RightModule random_module(const AlgebraPtr& lam, std::mt19937& rng);
/* Random two-step module: M0, M1 random and xi a random map M0 (x)_lam C -> M1. */
TwoStep random_twostep(const TrivialExtension& te, std::mt19937& rng);

}  // namespace trivext::scenarios

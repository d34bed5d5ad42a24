#pragma once

#include "trivext/types.h"

#include <array>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace trivext::algebra {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TableEntry {
    int i, j, k;
    Scalar coeff;
};

/* Builds the left/right multiplication matrices from sparse structure constants. */
Algebra from_table(FieldSpec f, std::vector<std::string> labels, const std::vector<TableEntry>& table, Vec unit);

struct CheckReport {
    bool ok = true;
    std::vector<std::array<int, 3>> assoc_failures;
    std::vector<int> unit_failures;
    std::vector<std::string> notes;
    std::string summary() const;
};

CheckReport check_algebra(const Algebra& a);

/* Validates idempotents, computes the radical (when the field allows) and a generating set. */
void finalize(Algebra& a);
/* check_algebra + finalize; throws AlgebraError on failure. */
AlgebraPtr make_checked(Algebra a);

AlgebraPtr field_algebra(FieldSpec f);
AlgebraPtr opposite(const AlgebraPtr& a);

/* True when the Dickson criterion is valid: char 0 or p > dim. */
bool radical_supported(const Algebra& a);
Matrix radical(const Algebra& a);

struct SemisimpleQuotient {
    AlgebraPtr quotient;
    /* dim(quotient) x dim(a) matrix of the projection. */
    Matrix map;
    /* a/J as a right a-module and as an a-a bimodule. */
    modrep::RightModule top;
    modrep::Bimodule top_bimodule;
};

SemisimpleQuotient semisimple_quotient(const AlgebraPtr& a);

struct TrivialExtension {
    GradedAlgebra graded;
    AlgebraPtr lam;
    modrep::BimodulePtr c;
    /* Number of basis vectors of the degree-0 part. */
    int lam_dim() const { return lam->dim; }
    const AlgebraPtr& algebra() const { return graded.algebra; }
};

/* A = lam (+) c with (r,c)(s,d) = (rs, rd + cs). Basis: lam first, then c. */
TrivialExtension trivial_extension(const AlgebraPtr& lam, const modrep::BimodulePtr& c);

struct Product {
    AlgebraPtr algebra;
    int dim0 = 0;
    Vec e0, e1;
};

Product product(const AlgebraPtr& a0, const AlgebraPtr& a1);

struct Triangular {
    TrivialExtension ext;
    AlgebraPtr lam0, lam1;
    /* The lam0-lam1 bimodule. */
    modrep::BimodulePtr c01;
    Product prod;
};

Triangular upper_triangular(const AlgebraPtr& lam0, const AlgebraPtr& lam1, const modrep::BimodulePtr& c);

/* Extends a lam0-lam1 bimodule to lam0 x lam1 on both sides. */
modrep::Bimodule inflate_bimodule(const Product& p, const modrep::Bimodule& c);

struct Beilinson {
    AlgebraPtr nabla;
    modrep::BimodulePtr delta;
};

GradedAlgebra make_graded(const AlgebraPtr& a, std::vector<int> degree);
Beilinson beilinson(const GradedAlgebra& a, int ell);
TrivialExtension quasi_veronese(const GradedAlgebra& a, int ell);

struct Quiver {
    int vertices = 0;
    /* (source, target, name) */
    std::vector<std::tuple<int, int, std::string>> arrows;
};

/* Monomial relations are arrow-index sequences. Paths compose left to right. */
AlgebraPtr path_algebra(FieldSpec f, const Quiver& q, const std::vector<std::vector<int>>& relations, int max_dim = 400);

}  // namespace trivext::algebra

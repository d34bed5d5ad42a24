#pragma once

#include "trivext/homology.h"

#include <map>
#include <string>
#include <vector>

namespace trivext::oracle {

using algebra::AlgebraPtr;
using algebra::GradedAlgebra;
using homology::DimensionValue;
using modrep::RightModule;

struct OracleOptions {
    int cutoff = 24;
    /* Syzygies larger than this stop the resolution (reported as AtLeast). */
    int size_budget = 300;
};

/* Projective dimension from a minimal projective resolution built directly over the algebra of m. */
DimensionValue pd_direct(const RightModule& m, const OracleOptions& opt = {});
/* pd of the dual module over the opposite algebra. */
DimensionValue injdim_direct(const RightModule& m, const OracleOptions& opt = {});
/* pd of B/J(B). */
DimensionValue gldim_direct(const AlgebraPtr& b, const OracleOptions& opt = {});
/* Length of the minimal resolution (dimensions of the syzygies in order). */
std::vector<int> syzygy_dims(const RightModule& m, int steps);

struct GradedModule {
    int dim = 0;
    std::vector<Matrix> act;
    std::vector<int> degree;
};

/* Graded free resolution P_i = (+)_g A(-d_g) of a graded module. */
struct GradedFreeComplex {
    GradedAlgebra alg;
    /* gen_degrees[i] lists the internal degrees of the generators of P_i. */
    std::vector<std::vector<int>> gen_degrees;
    /* d[i] : P_{i+1} -> P_i sends generator g' to sum_g g * coeff, stored as the
       (rank_i * dim A) x rank_{i+1} matrix of generator images. */
    std::vector<Matrix> d;
};

/* A/A_{>=1} as a graded right module concentrated in degree 0. */
GradedModule degree_zero_quotient(const GradedAlgebra& a);
GradedFreeComplex graded_free_resolution(const GradedAlgebra& a, const GradedModule& m, int length);
bool graded_d_squared_zero(const GradedFreeComplex& p);
/* ext[i][j] = dim Ext^i_A(A/A_{>=1}, A)_j for i <= max_i. Only nonzero entries are stored. */
std::map<int, std::map<int, int>> graded_ext_degrees(const GradedAlgebra& a, int max_i);

enum class Verdict { pass, fail, undetermined };
Verdict verify(const DimensionValue& formula, const DimensionValue& oracle);
std::string verdict_str(Verdict v);

}  // namespace trivext::oracle

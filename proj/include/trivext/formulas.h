#pragma once

#include "trivext/homology.h"
#include "trivext/oracle.h"

#include <optional>
#include <string>
#include <vector>

namespace trivext::formulas {

using algebra::AlgebraPtr;
using algebra::GradedAlgebra;
using algebra::TrivialExtension;
using algebra::Triangular;
using homology::Complex;
using homology::DimensionValue;
using modrep::Bimodule;
using modrep::RightModule;
using modrep::TwoStep;

struct FormulaOptions {
    int a_max = 12;
    /* Largest total k-dimension of an iterate before the tower gives up. */
    int size_budget = 3000;
    homology::Options hom;
};

enum class Tri { yes, no, undetermined };
std::string tri_str(Tri t);

struct TraceRecord {
    int a = 0;
    /* pd (or injdim) of the a-th object over the base. */
    DimensionValue value;
    int offset = 0;
    /* value + a + offset */
    DimensionValue contribution;
    bool acyclic = false;
};

struct FormulaTrace {
    std::string quantity;
    std::string base_label;
    DimensionValue base;
    std::vector<TraceRecord> records;
    /* First a whose object is acyclic. */
    std::optional<int> stabilization;
    /* acyclic | infinite | never-acyclic | a_max | budget */
    std::string stop;
    DimensionValue result;

    /* result agrees with the sup of base and contributions under the stopping rule. */
    bool consistent() const;
    std::string str() const;
};

struct FormulaResult {
    DimensionValue value;
    FormulaTrace trace;
};

/* sup{pd M0, pd(cone Xi^a) + a}. */
FormulaResult pd_trivext_twostep(const TwoStep& t, const FormulaOptions& opt = {});
/* sup{pd(M (x)^L C^a) + a}. */
FormulaResult pd_trivext_module(const RightModule& m, const TrivialExtension& te, const FormulaOptions& opt = {});
/* sup{injdim M1, injdim(cone Theta^a) + a + 1}. */
FormulaResult injdim_trivext_twostep(const TwoStep& t, const FormulaOptions& opt = {});
/* sup{injdim RHom(C^a, M) + a}. */
FormulaResult injdim_trivext_module(const RightModule& m, const TrivialExtension& te, const FormulaOptions& opt = {});
/* pd_trivext_module of lam/J. */
FormulaResult gldim_trivext(const TrivialExtension& te, const FormulaOptions& opt = {});

struct GldimFiniteness {
    DimensionValue gldim_lam;
    /* Least a > 0 with lam (x)^L C^a acyclic. */
    std::optional<int> nilpotence;
    std::optional<int> bound;
    DimensionValue gldim_a;
    Tri finite = Tri::undetermined;
    /* gldim A <= bound, when a bound exists. */
    bool bound_holds = true;
};

GldimFiniteness gldim_finiteness_check(const TrivialExtension& te, const FormulaOptions& opt = {});

struct PerfectnessReport {
    Tri perfect = Tri::undetermined;
    /* First a with an acyclic iterate (yes) or the failing iterate (no). */
    std::optional<int> witness;
    std::vector<DimensionValue> iterate_pd;
};

PerfectnessReport perfectness_check(const RightModule& m, const TrivialExtension& te, const FormulaOptions& opt = {});
/* m (x)^L C^a is acyclic. Throws unless pd_lam m is certified finite. */
bool kernel_membership(const RightModule& m, const TrivialExtension& te, int a, const FormulaOptions& opt = {});

struct AsidReport {
    std::string side;
    Tri is_asid = Tri::undetermined;
    /* Exactly(a) when certified; AtLeast otherwise. */
    DimensionValue alpha;
    DimensionValue cond1_value;
    Tri cond1 = Tri::undetermined;
    std::vector<DimensionValue> cond2_values;
    Tri cond2 = Tri::undetermined;
    Tri cond3 = Tri::undetermined;
    /* rank of the literal map lam -> Hom(C, C), x -> (c -> xc). */
    int lambda_rank = 0;
    FormulaTrace trace;
    std::string str() const;
};

AsidReport right_asid_check(const TrivialExtension& te, const FormulaOptions& opt = {});
AsidReport left_asid_check(const TrivialExtension& te, const FormulaOptions& opt = {});
/* The same algebra with both sides exchanged: op(lam) (+) C viewed as an op(lam)-bimodule. */
TrivialExtension opposite_extension(const TrivialExtension& te);

/* max{a >= -1 | RHom_A(lam, A)_{-a} != 0} + 1 from a graded free resolution of lam over A. */
DimensionValue asid_number_via_resolution(const TrivialExtension& te, const FormulaOptions& opt = {});

struct IgReport {
    Tri is_ig = Tri::undetermined;
    AsidReport right;
    AsidReport left;
    DimensionValue injdim_right;
    DimensionValue injdim_left;
    /* Both injdims finite implies they agree. */
    bool zaks_ok = true;
    std::string str() const;
};

IgReport ig_check(const TrivialExtension& te, const FormulaOptions& opt = {});

/* Self-injective dimension of an algebra on both sides, via the base detectors. */
struct AlgebraIg {
    Tri is_ig = Tri::undetermined;
    DimensionValue right;
    DimensionValue left;
};

AlgebraIg algebra_ig(const AlgebraPtr& lam, const homology::Options& opt = {});

struct IwanagaReport {
    DimensionValue pd;
    DimensionValue injdim;
    /* yes: both finite or both infinite; no: mismatch; undetermined: cutoff. */
    Tri equivalent = Tri::undetermined;
};

IwanagaReport iwanaga_equiv_check(const AlgebraPtr& lam, const RightModule& m, const homology::Options& opt = {});

struct AsidReduction {
    Tri right2 = Tri::undetermined;
    Tri left2 = Tri::undetermined;
};

/* Needs lam IG and asid 1 on both sides; throws otherwise. */
AsidReduction asid_reduction_check(const TrivialExtension& te, const FormulaOptions& opt = {});

/* A module over the triangular algebra as (M0 over lam0, M1 over lam1, xi : M0 (x) C -> M1). */
TwoStep inflate_triple(const Triangular& tr, const TwoStep& triple);
/* sup{pd M0, pd cone Xi_M}. */
DimensionValue triangular_pd(const Triangular& tr, const TwoStep& triple, const homology::Options& opt = {});
/* sup{injdim M1, injdim cone Theta_M + 1}. */
DimensionValue triangular_injdim(const Triangular& tr, const TwoStep& triple, const homology::Options& opt = {});

struct TriangularGldim {
    DimensionValue gldim;
    /* sup{pd M0, pd M0 (x)^L C + 1, pd M1} at the semisimple tops. */
    DimensionValue chase;
};

TriangularGldim triangular_gldim(const Triangular& tr, const FormulaOptions& opt = {});
/* pd of C on both sides; throws unless lam0 and lam1 are certified IG. */
Tri chen_triangular_ig(const Triangular& tr, const homology::Options& opt = {});

struct BeilinsonTransfer {
    AlgebraIg nabla_ig;
    DimensionValue delta_pd_right;
    DimensionValue delta_pd_left;
    /* A IG (oracle) and A^[ell] IG (formula on the trivial extension). */
    Tri a_ig = Tri::undetermined;
    Tri veronese_ig = Tri::undetermined;
    DimensionValue gldim_a;
    DimensionValue gldim_veronese;
    bool ig_agrees = false;
    bool gldim_agrees = false;
};

/* Throws unless A_0 is IG and each A_i has finite pd on both sides. */
BeilinsonTransfer beilinson_ig_transfer(const GradedAlgebra& a, int ell, const FormulaOptions& opt = {});

struct ReitenReport {
    bool gldim_le_one = false;
    bool lam_le_one = false;
    bool c_left_flat = false;
    bool tensor_projective = false;
    bool c_squared_zero = false;
    bool conditions() const { return lam_le_one && c_left_flat && tensor_projective && c_squared_zero; }
};

/* gldim A <= 1 against the four conditions, the third checked on `family`. */
ReitenReport reiten_check(const TrivialExtension& te, const std::vector<RightModule>& family, const FormulaOptions& opt = {});

/* Degree of the unique nonzero cohomology and that cohomology, when there is exactly one. */
std::optional<std::pair<int, RightModule>> single_cohomology(const Complex& x);

}  // namespace trivext::formulas

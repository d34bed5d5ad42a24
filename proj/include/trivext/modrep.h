#pragma once

#include "trivext/algebra.h"
#include "trivext/types.h"

#include <optional>
#include <string>
#include <vector>

namespace trivext::modrep {

using algebra::TrivialExtension;

struct ModuleReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::string summary() const;
};

ModuleReport check_module(const RightModule& m);
ModuleReport check_bimodule(const Bimodule& c);
/* f: m -> n commutes with the action. */
bool is_module_map(const Matrix& f, const RightModule& m, const RightModule& n);

RightModule zero_module(const AlgebraPtr& a);
RightModule regular_module(const AlgebraPtr& a);
/* e_t A for the t-th idempotent of a. */
RightModule idempotent_projective(const AlgebraPtr& a, int t);
/* Direct sum of e_{t_1} A, ..., e_{t_r} A with the concatenated standard bases. */
RightModule standard_projective(const AlgebraPtr& a, const std::vector<int>& types);
RightModule direct_sum(const RightModule& m, const RightModule& n);
RightModule direct_sum(const AlgebraPtr& a, const std::vector<RightModule>& parts);

/* Submodule spanned by the columns of basis (must be an invariant subspace; checked). */
RightModule submodule(const RightModule& m, const Matrix& basis);

struct Quotient {
    RightModule module;
    /* dim(quotient) x dim(m) */
    Matrix projection;
    /* dim(m) x dim(quotient); projection * section = 1 */
    Matrix section;
};

Quotient quotient_module(const RightModule& m, const Matrix& sub_basis);

/* A surjection from a standard projective module. Minimal when the radical is known. */
struct Cover {
    RightModule free;
    std::vector<int> types;
    std::vector<Vec> generators;
    /* dim(m) x dim(free) */
    Matrix pi;
    /* k-linear right inverse of pi. */
    Matrix section;
    /* Columns spanning ker(pi). */
    Matrix kernel;
};

/* Columns spanning m*J. */
Matrix radical_submodule(const RightModule& m);
/* variant permutes the order in which generators are chosen. When covered is
   given, only generators of m modulo that submodule are produced and section
   and kernel are left empty. */
Cover top_cover(const RightModule& m, int variant = 0, const Matrix* covered = nullptr);
/* dim m/mJ; requires the radical. */
int top_dim(const RightModule& m);
/* m is projective when the minimal cover is injective. */
bool is_projective(const RightModule& m);

std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n);
/* Hom by the full intertwining system over the generators (no cover). */
std::vector<Matrix> hom_space_direct(const RightModule& m, const RightModule& n);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/* Bimodule views. */
Bimodule regular_bimodule(const AlgebraPtr& a);
RightModule as_right_module(const Bimodule& c);
/* The left action viewed as a right module over the opposite algebra. */
RightModule as_left_module(const Bimodule& c);
Bimodule opposite_bimodule(const Bimodule& c);
/* Dual of an L-R bimodule as an R-L bimodule. */
Bimodule dual_bimodule(const Bimodule& c);
Bimodule zero_bimodule(const AlgebraPtr& l, const AlgebraPtr& r);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

struct TensorData;

/* M (x)_A C as a right module over the right algebra of C. */
struct Tensor {
    RightModule module;
    /* Preimage of each basis vector as a pure tensor m (x) c. */
    std::vector<std::pair<Vec, Vec>> section;
    std::shared_ptr<const TensorData> data;
    int source_dim = 0;
    int c_dim = 0;

    /* Class of m (x) c. */
    Vec image(const Vec& m, const Vec& c) const;
    /* dim(module) x (dim M * dim C), index m * dim C + c. */
    Matrix proj() const;
};

Tensor tensor_over_algebra(const RightModule& m, const Bimodule& c);
/* Plain coequalizer of M (x)_k C by the generator relations. */
Tensor tensor_direct(const RightModule& m, const Bimodule& c);
/* g (x) C for g: M -> N, in the bases of tm and tn. */
Matrix tensor_map(const Matrix& g, const Tensor& tm, const Tensor& tn);

RightModule dual(const RightModule& m);
/* Column vector duality of a map f: m -> n gives f^T: D n -> D m. */
Matrix dual_map(const Matrix& f);

/* Graded A-module with components in degrees 0 and 1. xi is dim M1 x (dim M0 * dim C). */
struct TwoStep {
    RightModule m0;
    RightModule m1;
    BimodulePtr c;
    Matrix xi;
};

ModuleReport check_twostep(const TwoStep& t);
TwoStep regular_twostep(const TrivialExtension& te);
/* xi is induced from a map M0 (x)_A C -> M1 given on the tensor basis. */
Matrix xi_from_tensor_map(const Tensor& tm, const Matrix& g);
RightModule assemble_trivext_module(const TwoStep& t, const TrivialExtension& te);
/* A lam-module viewed over lam (x) C with C acting by zero. */
RightModule restrict_along_aug(const RightModule& m, const TrivialExtension& te);
/* An A-module restricted to lam. */
RightModule restrict_to_base(const RightModule& m, const TrivialExtension& te);
/* Split an A-module into its degree pieces when it comes from a two-step module. */
std::optional<TwoStep> split_twostep(const RightModule& m, const TrivialExtension& te, int dim0);

struct Coaction {
    /* Hom_A(C_A, M1) as a right A-module via (f a)(c) = f(a c). */
    RightModule hom;
    /* dim(M1)*dim(C) x dim(hom); columns are vectorized maps C -> M1. */
    Matrix basis;
    /* dim(hom) x dim(M0) */
    Matrix theta;
};

RightModule hom_from_bimodule(const Bimodule& c, const RightModule& n, Matrix* basis_out = nullptr);
Coaction coaction_from_action(const TwoStep& t);
/* Inverse of coaction_from_action: recovers xi. */
Matrix action_from_coaction(const TwoStep& shape, const Coaction& co);

/* The dual two-step module (D M1, D M0, xi') over the opposite data. */
TwoStep dual_twostep(const TwoStep& t);

}  // namespace trivext::modrep

#pragma once

#include "trivext/exactla.h"

#include <memory>
#include <string>
#include <vector>

namespace trivext {

using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using Vec = std::vector<Scalar>;

namespace algebra {

/*
 * Finite-dimensional unital algebra given by structure constants.
 * left[i] is the matrix of x -> b_i x and right[j] the matrix of x -> x b_j,
 * so the coefficient of b_k in b_i b_j is left[i](k, j) = right[j](k, i).
 */
struct Algebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    Vec unit;
    /* A complete set of orthogonal idempotents; defaults to {unit}. */
    std::vector<Vec> idempotents;
    /* Elements generating the algebra; filled by finalize(). */
    std::vector<Vec> generators;
    /* Lifts of a basis of J/J^2; they generate J as a left and as a right ideal. */
    std::vector<Vec> radical_generators;
    /* Columns spanning the radical; empty matrix with zero columns if J = 0. */
    Matrix radical;
    bool radical_known = false;
    /* For each idempotent e_t: columns spanning e_t A, and the action of b_j on it. */
    std::vector<Matrix> idem_basis;
    std::vector<std::vector<Matrix>> idem_action;

    Scalar coeff(int i, int j, int k) const { return left[i](k, j); }
    Vec basis_vec(int i) const;
    Vec zero_vec() const { return Vec(dim, Scalar(0)); }
    Vec mul(const Vec& x, const Vec& y) const;
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& y) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct GradedAlgebra {
    AlgebraPtr algebra;
    /* Degree of each basis vector. */
    std::vector<int> degree;
    int ell = 0;
};

}  // namespace algebra

namespace modrep {

using algebra::AlgebraPtr;

/* Right module: act[i] is the matrix of v -> v b_i acting on column vectors. */
struct RightModule {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Matrix> act;
    /* Set when the module is literally e_{t_1} A (+) ... (+) e_{t_r} A in the standard basis. */
    bool standard = false;
    std::vector<int> blocks;

    const FieldSpec& field() const { return alg->field; }
    /* Matrix of v -> v x for an algebra element x. */
    Matrix action(const Vec& x) const;
};

/* Bimodule: left[i] is c -> a_i c (a_i in left_alg), right[j] is c -> c b_j. */
struct Bimodule {
    AlgebraPtr left_alg;
    AlgebraPtr right_alg;
    int dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    const FieldSpec& field() const { return left_alg->field; }
    Matrix left_action(const Vec& x) const;
    Matrix right_action(const Vec& x) const;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

}  // namespace modrep

}  // namespace trivext

#pragma once

#include "trivext/algebra.h"
#include "trivext/modrep.h"

#include <string>
#include <vector>

namespace trivext::corpus {

using algebra::AlgebraPtr;
using algebra::GradedAlgebra;
using modrep::Bimodule;
using modrep::BimodulePtr;
using modrep::RightModule;

/* k[x]/(x^n) with deg x = 1. */
GradedAlgebra truncated_polynomial(FieldSpec f, int n);
AlgebraPtr dual_numbers(FieldSpec f);
/* Linearly oriented A_n: 1 -> 2 -> ... -> n. */
AlgebraPtr linear_quiver(FieldSpec f, int n, const std::vector<std::vector<int>>& relations = {});
/* Product of n copies of the field. */
AlgebraPtr split_semisimple(FieldSpec f, int n);

/* Value of a one-dimensional representation on each basis vector. */
std::vector<Scalar> vertex_character(const AlgebraPtr& a, int vertex);
/* The one-dimensional bimodule where a acts through chi_l on the left and chi_r on the right. */
Bimodule character_bimodule(const AlgebraPtr& l, const Vec& chi_l, const AlgebraPtr& r, const Vec& chi_r);
/* One-dimensional module where b acts through chi. */
RightModule character_module(const AlgebraPtr& a, const Vec& chi);
/* Simple module at a vertex idempotent (split basic algebras). */
RightModule vertex_simple(const AlgebraPtr& a, int vertex);

BimodulePtr share(Bimodule b);

}  // namespace trivext::corpus

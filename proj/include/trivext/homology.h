#pragma once

#include "trivext/modrep.h"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trivext::homology {

using algebra::AlgebraPtr;
using modrep::Bimodule;
using modrep::RightModule;
using modrep::TwoStep;

/* Exactly(n) | Infinite | AtLeast(n) | MinusInfinity. */
struct DimensionValue {
    enum class Kind { exactly, infinite, at_least, minus_infinity };
    Kind kind = Kind::minus_infinity;
    int n = 0;

    static DimensionValue exactly(int n) { return {Kind::exactly, n}; }
    static DimensionValue infinite() { return {Kind::infinite, 0}; }
    static DimensionValue at_least(int n) { return {Kind::at_least, n}; }
    static DimensionValue minus_infinity() { return {Kind::minus_infinity, 0}; }
    /* Bound value of an AtLeast whose bound could not be determined. */
    static constexpr int unknown_bound = INT_MIN / 4;

    bool is_exactly() const { return kind == Kind::exactly; }
    bool is_infinite() const { return kind == Kind::infinite; }
    bool is_at_least() const { return kind == Kind::at_least; }
    bool is_minus_infinity() const { return kind == Kind::minus_infinity; }
    /* Exactly, Infinite or MinusInfinity. */
    bool certified() const { return kind != Kind::at_least; }
    /* Certified and not Infinite. */
    bool certified_finite() const { return kind == Kind::exactly || kind == Kind::minus_infinity; }
    bool bound_unknown() const { return kind == Kind::at_least && n <= unknown_bound; }

    DimensionValue plus(int k) const;
    std::string str() const;
    bool operator==(const DimensionValue& o) const { return kind == o.kind && (n == o.n || !has_value()); }
    bool operator!=(const DimensionValue& o) const { return !(*this == o); }

private:
    bool has_value() const { return kind == Kind::exactly || kind == Kind::at_least; }
};

DimensionValue sup(const DimensionValue& a, const DimensionValue& b);
/* a <= b in the order of certified values; false when it cannot be decided. */
bool certainly_le(const DimensionValue& a, const DimensionValue& b);

/*
 * Bounded cochain complex. terms[i] sits in degree lo + i and d[i] is the
 * differential from it to the next term. valid_from / valid_upto mark a window:
 * cohomology agrees with the intended object only in degrees >= valid_from
 * (resp. <= valid_upto).
 */
struct Complex {
    AlgebraPtr alg;
    int lo = 0;
    std::vector<RightModule> terms;
    std::vector<Matrix> d;
    std::optional<int> valid_from;
    std::optional<int> valid_upto;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool empty() const { return terms.empty(); }
    bool in_range(int n) const { return n >= lo && n <= hi(); }
    int dim(int n) const { return in_range(n) ? terms[n - lo].dim : 0; }
    RightModule term(int n) const;
    /* d^n : X^n -> X^{n+1}, zero outside the stored range. */
    Matrix diff(int n) const;
    bool windowed() const { return valid_from.has_value() || valid_upto.has_value(); }
    int total_dim() const;
};

struct ChainMap {
    Complex source;
    Complex target;
    std::map<int, Matrix> f;

    /* component source^n -> target^n (zero when absent) */
    Matrix at(int n) const;
};

Complex zero_complex(const AlgebraPtr& a);
Complex module_complex(const RightModule& m, int degree);
/* Drops zero terms at both ends. */
Complex trimmed(Complex x);

bool d_squared_zero(const Complex& x);
bool is_chain_map(const ChainMap& f);

RightModule cohomology(const Complex& x, int n);
int cohomology_dim(const Complex& x, int n);
/* Degrees in the stored range (and window) with nonzero cohomology. */
std::vector<int> cohomology_support(const Complex& x);
/* All cohomology in the window vanishes. */
bool is_acyclic(const Complex& x);
bool is_quasi_iso(const ChainMap& f);

/* X[k]^n = X^{n+k}, d_{X[k]} = (-1)^k d_X. */
Complex shift(const Complex& x, int k);
ChainMap shift_map(const ChainMap& f, int k);
/* cone^n = X^{n+1} (+) Y^n with d = [[-d_X, 0], [f, d_Y]]. */
Complex cone(const ChainMap& f);
ChainMap identity_map(const Complex& x);
ChainMap zero_map(const Complex& x, const Complex& y);
/* (D X)^n = D(X^{-n}) over the opposite algebra. */
Complex dual_complex(const Complex& x);
/* D f : D Y -> D X. */
ChainMap dual_map(const ChainMap& f);

struct Options {
    int cutoff = 24;
    /* Largest k-dimension allowed for one term of a replacement. */
    int size_budget = 600;
    /* Permutes generator choices; results must not depend on it. */
    int variant = 0;
    bool periodicity = true;
};

/* Summand test used by the periodicity certificates. */
bool is_summand_of(const RightModule& m, const RightModule& n, unsigned seed = 1);
/* y is isomorphic to some shift of x as a complex (found by a random chain map). Bounded inputs only. */
bool is_shifted_copy(const Complex& x, const Complex& y, unsigned seed = 1);
/* Tor_1(m, lam/J) = 0. */
bool is_projective_module(const RightModule& m);

struct Replacement {
    /* P with P^n standard projective (the last term may be a non-standard projective). */
    Complex P;
    /* f^n : P^n -> X^n */
    std::map<int, Matrix> f;
    bool terminated = false;
    /* Bottom syzygy tower became periodic (certifies infinite projective dimension). */
    bool periodic = false;
    bool budget_exceeded = false;
    /* Index of the last tower module (Z^{lo-1} is index 0) certified non-projective; -1 if none. */
    int last_nonprojective = -1;
    int source_lo = 0;
};

Replacement free_replacement(const Complex& x, const Options& opt = {});
Replacement free_resolution(const RightModule& m, const Options& opt = {});
/* f as a chain map P -> X. */
ChainMap replacement_map(const Replacement& r, const Complex& x);

/* Gaussian cancellation of isomorphic components between standard terms. */
struct Minimized {
    Complex P;
    std::map<int, Matrix> f;
    int cancelled = 0;
};

Minimized minimize(const Complex& p, const std::map<int, Matrix>& f, const Complex& x);

/* dim H^n(P (x) lam/J) for each stored degree of P. */
std::map<int, int> tor_with_top(const Complex& p);

DimensionValue pd_module(const RightModule& m, const Options& opt = {});
DimensionValue pd_complex(const Complex& x, const Options& opt = {});
DimensionValue injdim_module(const RightModule& m, const Options& opt = {});
DimensionValue injdim_complex(const Complex& x, const Options& opt = {});

/* pd from an already built replacement of x. */
DimensionValue pd_from_replacement(const Replacement& r, const Complex& x);

/* P (x) C for a replacement P of x; windowed when P is truncated. */
Complex derived_tensor(const Complex& x, const Bimodule& c, const Options& opt = {});
Complex tensor_complex(const Complex& p, const Bimodule& c);
/* Same as derived_tensor, reusing a replacement r already built for x. */
Complex derived_tensor_from(const Replacement& r, const Complex& x, const Bimodule& c);
/* phi (x)^L C via a replacement of the target relative to one of the source. */
ChainMap derived_tensor_map(const ChainMap& phi, const Bimodule& c, const Options& opt = {});
/* x (x)^L C (x)^L ... (x)^L C (a times). */
Complex iterated_C(const Complex& x, const Bimodule& c, int a, const Options& opt = {});
/* RHom(C, -) applied a times, computed as D(D(x) (x)^L C^op ...). */
Complex derived_hom_C(const Complex& x, const Bimodule& c, int a, const Options& opt = {});

/* Xi^a_M : M0 (x)^L C^{a+1} -> M1 (x)^L C^a. */
ChainMap xi_morphism(const TwoStep& t, int a, const Options& opt = {});
/* Theta^a_M : RHom(C^a, M0) -> RHom(C^{a+1}, M1). */
ChainMap theta_morphism(const TwoStep& t, int a, const Options& opt = {});

}  // namespace trivext::homology

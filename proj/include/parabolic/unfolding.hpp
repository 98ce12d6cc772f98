#pragma once

#include <optional>
#include <vector>

#include "parabolic/model_field.hpp"
#include "parabolic/series.hpp"

namespace parabolic {

// ω_ε(z) = Σ c_{m,n} z^m ε^n unfolding a parabolic point of codimension k.
struct FamilySpec {
  struct Factored {
    Bivariate v;      // ω̃ = (z̃^{k+1} − ε)·v(z̃, ε)
    Series g;         // z̃ = g(z)
    int branch = 0;   // g′(0) = ζ^branch · principal root
  };

  int k = 1;
  Bivariate omega;
  std::optional<Factored> factored;
};

struct AxesReport {
  Complex A;
  Complex B;
  std::vector<double> repelling;
  std::vector<double> attracting;
  std::vector<double> explosion;
};

// λ(δ) = (k+1) δ^k σ(δ).
struct EigenvalueFunction {
  int k = 1;
  Series lambda;
  Series sigma;
  bool canonical = false;

  static EigenvalueFunction from_sigma(int k, const Series& sigma);
  static EigenvalueFunction from_lambda(int k, const Series& lambda);
  int order() const { return lambda.order(); }
};

inline constexpr double match_tol = 1e-9;

// Largest per-degree discrepancy |a_d − b_d| / max(1, |a_d|, |b_d|) up to the common order.
double series_distance(const Series& a, const Series& b);

AxesReport check_generic(const FamilySpec& spec);

// Implicit solution ε = f(z) of ω(z, f(z)) = 0.
Series implicit_parameter(const FamilySpec& spec);

FamilySpec factor_family(const FamilySpec& spec, int branch = 0);

EigenvalueFunction eigenvalue_function(const FamilySpec& factored);

// A(ε) = Σ_{ζ^{k+1}=1} 1/λ(ζδ), δ^{k+1} = ε.
Series residue_sum(const EigenvalueFunction& lambda);

struct Canonicalization {
  Series h;                          // λ∘h is canonical
  EigenvalueFunction canonical;
  std::vector<Complex> linear_choices;  // the k rescalings a with σ(0) a^k = 1, principal first
};

Canonicalization canonicalize(const EigenvalueFunction& lambda);

// ζ with l2(δ) = l1(ζδ), ζ^{k+1} = 1. Throws AmbiguousMatch when several ζ match.
std::optional<Complex> equivalent_fixed_parameter(const EigenvalueFunction& l1, const EigenvalueFunction& l2,
                                                  double tol = match_tol);

struct FullEquivalence {
  Complex nu;  // ν^k = 1, the first matching root in principal order
  Series xi;   // l1 = l2 ∘ ξ
  std::vector<Complex> witnesses;  // every matching ν; several when the canonical form is rotation-symmetric
};

std::optional<FullEquivalence> equivalent_full(const EigenvalueFunction& l1, const EigenvalueFunction& l2,
                                               double tol = match_tol);

bool is_model_equivalent(const EigenvalueFunction& lambda, double tol = match_tol);

// (z^{k+1} − ε)σ(z), already factored with g = identity.
FamilySpec realize(const EigenvalueFunction& lambda, int eps_order = 1);

// Singularities δ_ℓ (the (k+1)-st roots of ε in the factored coordinate),
// eigenvalues λ(δ_ℓ), periods and the gap a(ε) = 2πiA(ε)/(k+1).
PeriodGon period_gon(const EigenvalueFunction& lambda, Complex epsilon);

}  // namespace parabolic

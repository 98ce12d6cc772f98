#pragma once

#include <optional>
#include <vector>

#include "parabolic/series.hpp"
#include "parabolic/unfolding.hpp"

namespace parabolic {

enum class NFKind { Polynomial, Rational };

// Polynomial form (z^{k+1} − ε)·Q_ε(z) or rational form (z^{k+1} − ε)/R_ε(z),
// with Q_ε(z) = Σ_j coefficients[j](ε) z^j, j = 0..k.
struct PolynomialNF {
  int k = 1;
  NFKind kind = NFKind::Polynomial;
  std::vector<Series> coefficients;
  bool canonical = false;  // Q_ε(0) ≡ 1

  Complex evaluate(Complex z, Complex epsilon) const;
};

// ż = P_ε(z) / (1 + A(ε) z^k), P_ε(z) = z^{k+1} + Σ_{j<k} b_j(ε) z^j.
struct KostovNF {
  int k = 1;
  std::vector<Series> b;
  Series A;
};

inline constexpr double coalescence_ratio = 1e-4;

// Coefficients (degree 0..k) of the polynomial of degree ≤ k agreeing with
// `target` at `nodes`. Coalescing nodes use the confluent (Hermite) limit.
Eigen::VectorXcd interpolate(const Series& target, std::vector<Complex> nodes);

// Nodes δ_i with δ_i^{k+1} = ε.
std::vector<Complex> roots_of(Complex epsilon, int k);

Eigen::VectorXcd lagrange_Q(const Series& sigma, int k, Complex epsilon);

// Same interpolant by the ratio of determinants (Cramer's rule).
Eigen::VectorXcd lagrange_Q_determinant(const Series& sigma, int k, Complex epsilon);

PolynomialNF polynomial_nf(const EigenvalueFunction& lambda, int eps_order = -1);
PolynomialNF polynomial_nf(const FamilySpec& factored, int eps_order = -1);

PolynomialNF rational_nf(const EigenvalueFunction& lambda, int eps_order = -1);
PolynomialNF rational_nf(const FamilySpec& factored, int eps_order = -1);

// (z, ε) ↦ (z·s(ε), ε·s(ε)^{k+1}) with s = c^{1/k} (polynomial form) or
// c^{−1/k} (rational form), c = Q_ε(0); the image has Q̃(0) ≡ 1.
struct CanonicalChange {
  Series z_scale;    // z̃ = z·z_scale(ε)
  Series parameter;  // ε̃ = parameter(ε)
  PolynomialNF nf;
};

CanonicalChange poly_to_canonical_parameter(const PolynomialNF& nf);

// Image of the family under (z, ε) ↦ (νz, νε), ν = e^{2πim/k}.
KostovNF kostov_rotate(const KostovNF& nf, int m);

// Smallest m with nf2 = kostov_rotate(nf1, m) within tol, or none.
std::optional<int> kostov_check(const KostovNF& nf1, const KostovNF& nf2, double tol = match_tol);

}  // namespace parabolic

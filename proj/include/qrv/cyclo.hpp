#pragma once

// Exact arithmetic in Z[zeta_p], zeta = e^{2 pi i / p}, on the basis
// zeta^0, ..., zeta^{p-2}. zeta^{p-1} is rewritten as -(1 + zeta + ... +
// zeta^{p-2}), so equal elements have equal coefficient vectors.

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "qrv/modint.hpp"
#include "qrv/quadfield.hpp"

namespace qrv {

class CycloElem {
 public:
  /// The zero element of Z[zeta_p].
  explicit CycloElem(i64 p);

  /// From canonical coefficients; coeffs.size() must be p - 1.
  CycloElem(i64 p, std::vector<mpz_class> coeffs);

  /// From a coefficient vector of length p on zeta^0..zeta^{p-1}.
  static CycloElem from_cyclic(i64 p, std::span<const mpz_class> cyclic);

  static CycloElem constant(i64 p, const mpz_class& c);

  i64 prime() const { return p_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when the element is a rational integer (all but coeffs[0] vanish).
  bool is_constant() const;

  /// "c0" for constants, otherwise "[c0,c1,...,c_{p-2}]".
  std::string to_string() const;

  CycloElem& operator+=(const CycloElem& y);
  CycloElem& operator-=(const CycloElem& y);

  friend bool operator==(const CycloElem&, const CycloElem&) = default;

 private:
  i64 p_;
  std::vector<mpz_class> coeffs_;
};

CycloElem operator+(CycloElem x, const CycloElem& y);
CycloElem operator-(CycloElem x, const CycloElem& y);
CycloElem operator-(CycloElem x);
CycloElem operator*(const CycloElem& x, const CycloElem& y);
CycloElem operator*(const mpz_class& c, CycloElem x);

/// zeta^{e mod p} in canonical form.
CycloElem root_power(i64 p, i64 e);

/// The Galois automorphism zeta -> zeta^a, p not dividing a.
CycloElem galois_action(const CycloElem& x, i64 a);

/// G = sum_{x=0}^{p-1} zeta^{x^2}.
CycloElem gauss_sum(i64 p);

/// Trace from Q(zeta_p) down to Q.
mpz_class trace(const CycloElem& x);

/// x = rational + irrational * sqrt(p) inside Q(sqrt(p)), p = 1 (mod 4).
struct QuadraticCoords {
  mpq_class rational;
  mpq_class irrational;
  friend bool operator==(const QuadraticCoords&, const QuadraticCoords&) = default;
};

/// Projects x onto Q(sqrt(p)) = Q(G) via traces and verifies the result by
/// rebuilding x from it. Throws std::domain_error if x is outside Q(sqrt(p)).
QuadraticCoords to_quadratic(const CycloElem& x);

/// to_quadratic as an algebraic integer (a + b sqrt(p))/2; throws
/// std::domain_error if the coordinates are not half-integers.
QuadElem to_quad_elem(const CycloElem& x);

/// The factors zeta^{a j^2} + zeta^{a k^2}, 1 <= j < k <= (p-1)/2.
std::vector<CycloElem> plus_factors(i64 p, i64 a);

/// Balanced pairwise product of a non-empty factor list.
CycloElem tree_product(std::vector<CycloElem> factors);

/// prod_{1 <= j < k <= (p-1)/2} (zeta^{a j^2} + zeta^{a k^2}) via tree_product.
CycloElem plus_product(i64 p, i64 a);

/// The same product as a sequential left fold; slow reference path.
CycloElem plus_product_sequential(i64 p, i64 a);

}  // namespace qrv

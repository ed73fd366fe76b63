#pragma once

// Exact arithmetic in real quadratic orders and class numbers of the
// quadratic fields Q(sqrt(p)) and Q(sqrt(-p)).

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qrv/modint.hpp"

namespace qrv {

/// The number (a + b sqrt(D)) / 2 of the ring of integers of Q(sqrt(D)).
class QuadElem {
 public:
  /// Throws std::invalid_argument when (a + b sqrt(D))/2 is not integral.
  QuadElem(i64 discriminant, mpz_class a, mpz_class b);

  static QuadElem integer(i64 discriminant, const mpz_class& n);
  static QuadElem one(i64 discriminant) { return integer(discriminant, 1); }

  i64 discriminant() const { return d_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_integer() const { return b_ == 0; }

  /// "(a+b*sqrt(D))/2", or the plain decimal value for rational integers.
  std::string to_string() const;

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

 private:
  i64 d_;
  mpz_class a_;
  mpz_class b_;
};

QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem quad_conj(const QuadElem& x);
mpz_class quad_norm(const QuadElem& x);

/// x^e; negative e requires x to be a unit.
QuadElem quad_pow(const QuadElem& x, i64 e);

/// Sign of the real number (a + b sqrt(D))/2.
int quad_sign(const QuadElem& x);

/// Smallest unit > 1 of the ring of integers of Q(sqrt(p)), p = 1 (mod 4),
/// normalized with a > 0 and b > 0. Its norm is checked to be -1.
QuadElem fundamental_unit(i64 p);

/// h(-p) from (2 - (2/p)) h(-p) = sum_{k=1}^{(p-1)/2} (k/p); p = 3 (mod 4), p > 3.
i64 class_number_imag(i64 p);

/// h(-p) by counting reduced positive definite forms of discriminant -p.
i64 class_number_imag_forms(i64 p);

/// h(p) as the number of rho-cycles of reduced indefinite forms of
/// discriminant p, p = 1 (mod 4).
i64 class_number_real(i64 p);

struct ClassData {
  i64 p;
  std::optional<i64> h_real;
  std::optional<i64> h_imag;
  std::optional<QuadElem> eps;
  std::string h_method;
  std::string eps_method;
};

/// Whatever of h(p), h(-p), eps_p applies to the prime p.
ClassData class_data(i64 p);

}  // namespace qrv

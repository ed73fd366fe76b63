#pragma once

// Modular arithmetic over odd primes p < 2^31: residues, characters,
// square roots, sums of two squares and prime enumeration.

#include <cstdint>
#include <optional>
#include <vector>

namespace qrv {

using i64 = std::int64_t;

/// Least nonnegative residue {x}_m, total for negative x.
constexpr i64 lnr(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

/// Floor division rounding toward negative infinity.
constexpr i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 isqrt(i64 n);
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 e, i64 m);
i64 gcd(i64 a, i64 b);

/// Deterministic for all n < 3.2e9 (Miller-Rabin with bases 2, 3, 5, 7).
bool is_prime(i64 n);

/// Throws std::invalid_argument unless p is an odd prime below 2^31.
void require_odd_prime(i64 p, const char* who);

int legendre(i64 a, i64 p);
int jacobi(i64 a, i64 n);

/// Smallest quadratic non-residue modulo p.
i64 smallest_nonresidue(i64 p);

/// The smaller square root r in [1, p-1] of a residue a modulo p.
i64 sqrt_mod(i64 a, i64 p);

i64 factorial_mod(i64 n, i64 m);

struct TwoSquares {
  i64 x;
  i64 y;
  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

/// p = x^2 + y^2 with x = 1 (mod 4) and y = ((p-1)/2)! * x (mod p).
TwoSquares two_squares(i64 p);

struct ResidueFilter {
  i64 residue;
  i64 modulus;
};

std::vector<i64> primes_in(i64 lo, i64 hi,
                           std::optional<ResidueFilter> filter = std::nullopt);

/// Legendre character table for a fixed odd prime. Immutable once built.
class ResidueTable {
 public:
  /// Tables are materialized below this bound; larger primes use Euler's
  /// criterion per lookup.
  static constexpr i64 kDenseLimit = i64{1} << 20;

  explicit ResidueTable(i64 p);

  i64 prime() const { return p_; }
  i64 half() const { return (p_ - 1) / 2; }
  bool dense() const { return !chi_.empty(); }

  /// (k/p) for any integer k.
  int chi(i64 k) const;

 private:
  i64 p_;
  std::vector<std::int8_t> chi_;
};

}  // namespace qrv

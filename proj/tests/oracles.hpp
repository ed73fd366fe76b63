#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's implementations of the quantities it re-derives.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 mod(i64 x, i64 m) { return ((x % m) + m) % m; }

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<i64> odd_primes(i64 lo, i64 hi, i64 residue = 1, i64 modulus = 1) {
  std::vector<i64> out;
  for (i64 n = std::max<i64>(lo, 3); n <= hi; ++n) {
    if (is_prime(n) && mod(n, modulus) == mod(residue, modulus)) out.push_back(n);
  }
  return out;
}

/// Legendre symbol by listing the squares.
inline int legendre(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (i64 x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

/// Jacobi symbol by trial factorization of n.
inline int jacobi(i64 a, i64 n) {
  int result = 1;
  for (i64 q = 3; n > 1; q += 2) {
    while (n % q == 0) {
      result *= legendre(a, q);
      n /= q;
    }
  }
  return result;
}

inline std::vector<i64> scaled_squares(i64 p, i64 a) {
  std::vector<i64> v;
  for (i64 j = 1; j <= (p - 1) / 2; ++j) v.push_back(mod(a * j * j, p));
  return v;
}

inline i64 s_count(i64 p, i64 a) {
  auto v = scaled_squares(p, a);
  i64 c = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = j + 1; k < v.size(); ++k) c += v[j] > v[k];
  return c;
}

inline i64 t_count(i64 p, i64 a) {
  i64 c = 0;
  for (i64 j = 1; j <= (p - 1) / 2; ++j)
    for (i64 k = j + 1; k <= (p - 1) / 2; ++k) c += 2 * mod(a * k * k - a * j * j, p) > p;
  return c;
}

inline i64 wide_gap_count(i64 p, i64 a) {
  auto v = scaled_squares(p, a);
  i64 c = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = j + 1; k < v.size(); ++k) c += 2 * std::abs(v[j] - v[k]) > p;
  return c;
}

inline i64 tri_inversions(i64 p, i64 delta) {
  std::vector<i64> v;
  for (i64 m = 1; m <= (p - 1) / 2; ++m) v.push_back(mod(delta * m * (m + 1) / 2, p));
  i64 c = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = j + 1; k < v.size(); ++k) c += v[j] > v[k];
  return c;
}

inline i64 shifted_count(i64 p, i64 a, i64 b) {
  const i64 n = (p - 1) / 2;
  i64 c = 0;
  for (i64 t = 0; t <= n; ++t)
    for (i64 s = t + 1; s <= n; ++s) c += mod(a * s * s - b, p) > mod(a * t * t - b, p);
  return c;
}

/// Sign of pi_c from its inversion count.
inline int pan_sign(i64 n, i64 c) {
  const i64 m = (n - 1) / 2;
  std::vector<i64> pi;
  for (i64 j = 1; j <= m; ++j) {
    i64 r = mod(c * j, n);
    pi.push_back(r > m ? n - r : r);
  }
  i64 inv = 0;
  for (std::size_t j = 0; j < pi.size(); ++j)
    for (std::size_t k = j + 1; k < pi.size(); ++k) inv += pi[j] > pi[k];
  return inv % 2 == 0 ? 1 : -1;
}

/// All (x, y) with x^2 + y^2 = p, x = 1 (mod 4), y = ((p-1)/2)! x (mod p).
inline std::vector<std::pair<i64, i64>> two_squares(i64 p) {
  i64 f = 1;
  for (i64 k = 2; k <= (p - 1) / 2; ++k) f = f * k % p;
  std::vector<std::pair<i64, i64>> out;
  for (i64 x = -p; x <= p; ++x) {
    if (x * x > p) continue;
    for (i64 y = -p; y <= p; ++y) {
      if (x * x + y * y == p && mod(x, 4) == 1 && mod(y - f * x, p) == 0) out.emplace_back(x, y);
    }
  }
  return out;
}

/// Smallest (a, b), b >= 1, with a^2 - p b^2 = +-4 and a > 0, searching
/// b <= max_b. Empty when the unit lies beyond the search.
inline std::optional<std::pair<i64, i64>> fundamental_unit(i64 p, i64 max_b = 2000000) {
  for (i64 b = 1; b <= max_b; ++b) {
    for (i64 sign : {-4, 4}) {
      const __int128 a2 = static_cast<__int128>(p) * b * b + sign;
      if (a2 <= 0) continue;
      i64 a = static_cast<i64>(std::sqrt(static_cast<long double>(a2)));
      while (static_cast<__int128>(a) * a > a2) --a;
      while (static_cast<__int128>(a + 1) * (a + 1) <= a2) ++a;
      if (static_cast<__int128>(a) * a == a2) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

/// Reduced positive definite forms of discriminant -p, enumerated over a box.
inline i64 class_number_imag(i64 p) {
  i64 count = 0;
  for (i64 a = 1; a <= p; ++a) {
    for (i64 b = -a; b <= a; ++b) {
      if ((b * b + p) % (4 * a) != 0) continue;
      const i64 c = (b * b + p) / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      ++count;
    }
  }
  return count;
}

/// h(p) for p = 1 (mod 4) from h log(eps) = -1/2 sum_{n=1}^{p-1} (n/p) log sin(pi n / p).
inline i64 class_number_real_analytic(i64 p, double log_eps) {
  long double sum = 0;
  for (i64 n = 1; n < p; ++n) {
    sum += legendre(n, p) * std::log(std::sin(std::numbers::pi_v<long double> * n / p));
  }
  return static_cast<i64>(std::llround(-0.5L * sum / log_eps));
}

/// log((a + b sqrt(p)) / 2) for large a, b.
inline double log_quad(const mpz_class& a, const mpz_class& b, i64 p) {
  long ea = 0, eb = 0;
  const double ma = mpz_get_d_2exp(&ea, a.get_mpz_t());
  const double mb = mpz_get_d_2exp(&eb, b.get_mpz_t());
  // Both terms positive; work relative to the larger exponent.
  const long e = std::max(ea, eb);
  const double va = std::ldexp(ma, static_cast<int>(ea - e));
  const double vb = std::ldexp(mb, static_cast<int>(eb - e)) * std::sqrt(static_cast<double>(p));
  return std::log(va + vb) + static_cast<double>(e) * std::log(2.0) - std::log(2.0);
}

/// Plus-product as a length-p vector over Z[t]/(t^p - 1), by folding
/// the binomial factors one at a time.
inline std::vector<mpz_class> plus_product_cyclic(i64 p, i64 a) {
  std::vector<mpz_class> acc(static_cast<std::size_t>(p));
  acc[0] = 1;
  const auto v = scaled_squares(p, a);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = j + 1; k < v.size(); ++k) {
      std::vector<mpz_class> next(static_cast<std::size_t>(p));
      for (i64 e = 0; e < p; ++e) {
        if (acc[e] == 0) continue;
        next[mod(e + v[j], p)] += acc[e];
        next[mod(e + v[k], p)] += acc[e];
      }
      acc = std::move(next);
    }
  }
  return acc;
}

/// Two cyclic vectors represent the same element of Z[zeta_p] iff their
/// difference is a constant vector.
inline bool same_cyclic(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
  const mpz_class d = x[0] - y[0];
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (x[k] - y[k] != d) return false;
  }
  return true;
}

/// Numerical value of a cyclic vector at zeta = e^{2 pi i / p}.
inline std::complex<long double> evaluate(const std::vector<mpz_class>& cyclic, i64 p) {
  std::complex<long double> z = 0;
  for (i64 k = 0; k < p; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / p;
    z += static_cast<long double>(cyclic[k].get_d()) * std::polar(1.0L, angle);
  }
  return z;
}

/// Numerical plus-product by direct complex multiplication.
inline std::complex<long double> plus_product_numeric(i64 p, i64 a) {
  const auto v = scaled_squares(p, a);
  std::complex<long double> z = 1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = j + 1; k < v.size(); ++k) {
      const long double two_pi = 2 * std::numbers::pi_v<long double>;
      z *= std::polar(1.0L, two_pi * v[j] / p) + std::polar(1.0L, two_pi * v[k] / p);
    }
  }
  return z;
}

}  // namespace oracle

#include "qrv/modint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qrv {

namespace {

constexpr i64 kMaxPrime = (i64{1} << 31) - 1;

}  // namespace

i64 isqrt(i64 n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  i64 r = 0;
  for (i64 bit = i64{1} << 62; bit != 0; bit >>= 2) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
  }
  return r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(lnr(a, m)) * lnr(b, m) % m);
}

i64 pow_mod(i64 base, i64 e, i64 m) {
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  i64 result = 1 % m;
  i64 b = lnr(base, m);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return result;
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 q : {2, 3, 5, 7, 11, 13}) {
    if (n % q == 0) return n == q;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 base : {2, 3, 5, 7}) {
    i64 x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(i64 p, const char* who) {
  if (p < 3 || p > kMaxPrime || !is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) +
                                " is not an odd prime below 2^31");
  }
}

int legendre(i64 a, i64 p) {
  require_odd_prime(p, "legendre");
  return jacobi(a, p);
}

int jacobi(i64 a, i64 n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  }
  a = lnr(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

i64 smallest_nonresidue(i64 p) {
  require_odd_prime(p, "smallest_nonresidue");
  i64 z = 2;
  while (jacobi(z, p) != -1) ++z;
  return z;
}

i64 sqrt_mod(i64 a, i64 p) {
  if (legendre(a, p) != 1) {
    throw std::domain_error("sqrt_mod: " + std::to_string(a) +
                            " is not a nonzero quadratic residue mod " +
                            std::to_string(p));
  }
  a = lnr(a, p);
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  i64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  i64 z = smallest_nonresidue(p);
  i64 c = pow_mod(z, q, p);
  i64 r = pow_mod(a, (q + 1) / 2, p);
  i64 t = pow_mod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    for (i64 tt = t; tt != 1; tt = mul_mod(tt, tt, p)) ++i;
    i64 b = c;
    for (int k = 0; k < m - i - 1; ++k) b = mul_mod(b, b, p);
    r = mul_mod(r, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return std::min(r, p - r);
}

i64 factorial_mod(i64 n, i64 m) {
  i64 f = 1 % m;
  for (i64 k = 2; k <= n; ++k) f = mul_mod(f, k, m);
  return f;
}

TwoSquares two_squares(i64 p) {
  require_odd_prime(p, "two_squares");
  if (p % 4 != 1) {
    throw std::invalid_argument("two_squares: p must be 1 mod 4, got " +
                                std::to_string(p));
  }
  // Euclid on (p, sqrt(-1)); the first remainder below sqrt(p) is one leg.
  i64 a = p;
  i64 b = sqrt_mod(p - 1, p);
  while (b * b > p) a = std::exchange(b, a % b);
  i64 u = b;
  i64 v = isqrt(p - u * u);
  if (u * u + v * v != p) throw std::logic_error("two_squares: descent failed");
  if (u % 2 == 0) std::swap(u, v);

  i64 x = lnr(u, 4) == 1 ? u : -u;
  i64 f = factorial_mod((p - 1) / 2, p);
  i64 y = v;
  if (lnr(y - mul_mod(f, x, p), p) != 0) y = -y;
  if (lnr(y - mul_mod(f, x, p), p) != 0) {
    throw std::logic_error("two_squares: no sign of y meets the congruence");
  }
  return {x, y};
}

std::vector<i64> primes_in(i64 lo, i64 hi, std::optional<ResidueFilter> filter) {
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("primes_in: need 2 <= lo <= hi");
  }
  if (hi > kMaxPrime) throw std::invalid_argument("primes_in: hi >= 2^31");
  if (filter && filter->modulus < 1) {
    throw std::invalid_argument("primes_in: filter modulus must be positive");
  }
  auto keep = [&](i64 n) {
    return !filter || lnr(n, filter->modulus) == lnr(filter->residue, filter->modulus);
  };

  std::vector<i64> out;
  if (hi <= (i64{1} << 24)) {
    std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
    for (i64 i = 2; i * i <= hi; ++i) {
      if (composite[i]) continue;
      for (i64 j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (i64 n = lo; n <= hi; ++n) {
      if (!composite[n] && keep(n)) out.push_back(n);
    }
  } else {
    for (i64 n = lo; n <= hi; ++n) {
      if (keep(n) && is_prime(n)) out.push_back(n);
    }
  }
  return out;
}

ResidueTable::ResidueTable(i64 p) : p_(p) {
  require_odd_prime(p, "ResidueTable");
  if (p >= kDenseLimit) return;
  chi_.assign(static_cast<std::size_t>(p), -1);
  chi_[0] = 0;
  for (i64 k = 1; k <= half(); ++k) chi_[mul_mod(k, k, p)] = 1;
}

int ResidueTable::chi(i64 k) const {
  k = lnr(k, p_);
  if (dense()) return chi_[static_cast<std::size_t>(k)];
  if (k == 0) return 0;
  return pow_mod(k, half(), p_) == 1 ? 1 : -1;
}

}  // namespace qrv

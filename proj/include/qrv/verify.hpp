#pragma once

// One checker per identity. Each checker evaluates the two sides along
// independent code paths and returns both values together with the verdict.

#include <string>
#include <vector>

#include "qrv/modint.hpp"

namespace qrv {

struct Param {
  std::string name;
  i64 value;
  friend bool operator==(const Param&, const Param&) = default;
  friend auto operator<=>(const Param&, const Param&) = default;
};

struct VerifyReport {
  std::string claim;
  i64 p = 0;
  std::vector<Param> params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// (-1)^e for any integer e.
constexpr int neg_one_pow(i64 e) { return lnr(e, 2) == 0 ? 1 : -1; }

/// p = 1 (mod 8): prod (zeta^{a j^2} + zeta^{a k^2}) = (-1)^{#{k < p/4 : (k/p) = -1}}.
VerifyReport check_thm_1_1_i(i64 p, i64 a);

/// p = 5 (mod 8): (-1)^{#{k < p/4 : (k/p) = -1}} prod = (a/p) eps_p^{-(a/p) h(p)}.
VerifyReport check_thm_1_1_ii(i64 p, i64 a);

/// p = 3 (mod 4), p >= 7: the plus-product is exactly 1.
VerifyReport check_plus_3mod4(i64 p, i64 a);

/// p = 1 (mod 4): s + t = #{k < p/4 : (k/p) = (a/p)} (mod 2).
VerifyReport check_thm_1_2(i64 p, i64 a);

/// p = 3 (mod 4): sign of the triangular-number inversions for delta = 1, 2.
VerifyReport check_thm_1_3(i64 p, int delta);

/// p = 3 (mod 4): the shifted-square sign identity for 1 <= a, b <= p-1.
VerifyReport check_thm_3_1(i64 p, i64 a, i64 b);

/// p = 3 (mod 4), p > 3: (-1)^{s(p, a)}.
VerifyReport check_lem_4_1(i64 p, i64 a);

/// p = 1 (mod 4): (-1)^{#{k < p/4 : (k/p) = -1}} = (-1)^{floor(y/4)}.
/// Adds params y and conv_sensitive (1 when truncating y/4 toward zero would
/// flip the verdict).
VerifyReport check_remark_1_1(i64 p);

/// p = 3 (mod 4), p > 3: the vanishing quarter-range character sum, together
/// with agreement of the two h(-p) computations. Sides render as "(sum,h)".
VerifyReport check_lem_5_1(i64 p);

/// Odd n > 1, gcd(c, n) = 1: sign(pi_c) = (c/n)^{(n+1)/2}.
VerifyReport check_lem_2_1(i64 n, i64 c);

/// Odd prime p: s + t = #{wide gaps} (mod 2).
VerifyReport check_lem_3_1(i64 p, i64 a);

/// p = 1 (mod 4): #{wide gaps} = #{k < p/4 : (a k/p) = 1} (mod 2).
VerifyReport check_eq_2_4(i64 p, i64 a);

}  // namespace qrv

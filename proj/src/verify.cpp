#include "qrv/verify.hpp"

#include <stdexcept>

#include "qrv/counting.hpp"
#include "qrv/cyclo.hpp"
#include "qrv/quadfield.hpp"

namespace qrv {

namespace {

void require_residue(i64 p, i64 residue, i64 modulus, const char* claim) {
  require_odd_prime(p, claim);
  if (p % modulus != residue) {
    throw std::invalid_argument(std::string(claim) + ": p=" + std::to_string(p) +
                                " is not " + std::to_string(residue) + " mod " +
                                std::to_string(modulus));
  }
}

void require_unit(i64 p, i64 a, const char* claim) {
  if (lnr(a, p) == 0) {
    throw std::invalid_argument(std::string(claim) + ": p divides a");
  }
}

VerifyReport make_report(std::string claim, i64 p, std::vector<Param> params, std::string lhs,
                         std::string rhs) {
  const bool pass = lhs == rhs;
  return {std::move(claim), p, std::move(params), std::move(lhs), std::move(rhs), pass};
}

VerifyReport make_report(std::string claim, i64 p, std::vector<Param> params, i64 lhs, i64 rhs) {
  return make_report(std::move(claim), p, std::move(params), std::to_string(lhs),
                     std::to_string(rhs));
}

// (-1)^{#{1 <= k < p/4 : (k/p) = -1}}
int quarter_nonresidue_sign(i64 p) { return neg_one_pow(count_below_quarter(p, 1, -1)); }

}  // namespace

VerifyReport check_thm_1_1_i(i64 p, i64 a) {
  require_residue(p, 1, 8, "thm_1_1_i");
  require_unit(p, a, "thm_1_1_i");
  const QuadElem rhs = QuadElem::integer(p, quarter_nonresidue_sign(p));
  std::string lhs;
  try {
    lhs = to_quad_elem(plus_product(p, a)).to_string();
  } catch (const std::domain_error&) {
    lhs = "outside Q(sqrt(" + std::to_string(p) + "))";
  }
  return make_report("thm_1_1_i", p, {{"a", a}}, lhs, rhs.to_string());
}

VerifyReport check_thm_1_1_ii(i64 p, i64 a) {
  require_residue(p, 5, 8, "thm_1_1_ii");
  require_unit(p, a, "thm_1_1_ii");
  std::string lhs;
  try {
    QuadElem value = to_quad_elem(plus_product(p, a));
    if (quarter_nonresidue_sign(p) < 0) value = -value;
    lhs = value.to_string();
  } catch (const std::domain_error&) {
    lhs = "outside Q(sqrt(" + std::to_string(p) + "))";
  }
  const int chi_a = legendre(a, p);
  QuadElem rhs = quad_pow(fundamental_unit(p), -chi_a * class_number_real(p));
  if (chi_a < 0) rhs = -rhs;
  return make_report("thm_1_1_ii", p, {{"a", a}}, lhs, rhs.to_string());
}

VerifyReport check_plus_3mod4(i64 p, i64 a) {
  require_residue(p, 3, 4, "plus_3mod4");
  if (p < 7) throw std::invalid_argument("plus_3mod4: p must be at least 7");
  require_unit(p, a, "plus_3mod4");
  return make_report("plus_3mod4", p, {{"a", a}}, plus_product(p, a).to_string(), "1");
}

VerifyReport check_thm_1_2(i64 p, i64 a) {
  require_residue(p, 1, 4, "thm_1_2");
  require_unit(p, a, "thm_1_2");
  const i64 lhs = lnr(s_count(p, a) + t_count(p, a), 2);
  const i64 rhs = lnr(count_below_quarter(p, a, 1), 2);
  return make_report("thm_1_2", p, {{"a", a}}, lhs, rhs);
}

VerifyReport check_thm_1_3(i64 p, int delta) {
  require_residue(p, 3, 4, "thm_1_3");
  if (delta != 1 && delta != 2) throw std::invalid_argument("thm_1_3: delta must be 1 or 2");
  if (delta == 1 && p == 3) throw std::invalid_argument("thm_1_3: delta = 1 needs p > 3");
  const int lhs = neg_one_pow(tri_inversions(p, delta));
  const i64 bound = (p + 1) / 8;
  int rhs = 0;
  if (delta == 2) {
    rhs = neg_one_pow(bound);
  } else {
    ResidueTable table(p);
    i64 residues = 0;
    for (i64 k = 1; k <= bound; ++k) {
      if (table.chi(k) == 1) ++residues;
    }
    rhs = neg_one_pow((class_number_imag(p) + 1) / 2 + residues);
  }
  return make_report("thm_1_3", p, {{"delta", delta}}, lhs, rhs);
}

VerifyReport check_thm_3_1(i64 p, i64 a, i64 b) {
  require_residue(p, 3, 4, "thm_3_1");
  if (a < 1 || a > p - 1 || b < 1 || b > p - 1) {
    throw std::invalid_argument("thm_3_1: a and b must lie in 1..p-1");
  }
  const int lhs = neg_one_pow(shifted_count(p, a, b) - count_below_b(p, a, b));
  const int rhs =
      p % 8 == 3 ? 1 : neg_one_pow((class_number_imag(p) - 1) / 2) * legendre(a, p);
  return make_report("thm_3_1", p, {{"a", a}, {"b", b}}, lhs, rhs);
}

VerifyReport check_lem_4_1(i64 p, i64 a) {
  require_residue(p, 3, 4, "lem_4_1");
  if (p == 3) throw std::invalid_argument("lem_4_1: p must exceed 3");
  require_unit(p, a, "lem_4_1");
  const int lhs = neg_one_pow(s_count(p, a));
  const int rhs =
      p % 8 == 3 ? 1 : neg_one_pow((class_number_imag(p) + 1) / 2) * legendre(a, p);
  return make_report("lem_4_1", p, {{"a", a}}, lhs, rhs);
}

VerifyReport check_remark_1_1(i64 p) {
  require_residue(p, 1, 4, "remark_1_1");
  const int lhs = quarter_nonresidue_sign(p);
  const TwoSquares xy = two_squares(p);
  const int rhs = neg_one_pow(floor_div(xy.y, 4));
  // Truncation and floor disagree exactly when y < 0 and 4 does not divide y.
  const bool sensitive = xy.y < 0 && xy.y % 4 != 0;
  return make_report("remark_1_1", p, {{"y", xy.y}, {"conv_sensitive", sensitive ? 1 : 0}}, lhs,
                     rhs);
}

VerifyReport check_lem_5_1(i64 p) {
  require_residue(p, 3, 4, "lem_5_1");
  if (p == 3) throw std::invalid_argument("lem_5_1: p must exceed 3");
  ResidueTable table(p);
  i64 sum = 0;
  if (p % 8 == 3) {
    for (i64 k = 1; 4 * k < p; ++k) sum += table.chi(k);
  } else {
    for (i64 k = p / 4 + 1; 2 * k < p; ++k) sum += table.chi(k);
  }
  const auto pair = [](i64 x, i64 y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  };
  return make_report("lem_5_1", p, {}, pair(sum, class_number_imag(p)),
                     pair(0, class_number_imag_forms(p)));
}

VerifyReport check_lem_2_1(i64 n, i64 c) {
  const int lhs = pan_sign(n, c);
  const int rhs = neg_one_pow(jacobi(c, n) == 1 ? 0 : (n + 1) / 2);
  return make_report("lem_2_1", n, {{"c", c}}, lhs, rhs);
}

VerifyReport check_lem_3_1(i64 p, i64 a) {
  require_odd_prime(p, "lem_3_1");
  require_unit(p, a, "lem_3_1");
  const i64 lhs = lnr(s_count(p, a) + t_count(p, a), 2);
  const i64 rhs = lnr(wide_gap_count(p, a), 2);
  return make_report("lem_3_1", p, {{"a", a}}, lhs, rhs);
}

VerifyReport check_eq_2_4(i64 p, i64 a) {
  require_residue(p, 1, 4, "eq_2_4");
  require_unit(p, a, "eq_2_4");
  const i64 lhs = lnr(wide_gap_count(p, a), 2);
  const i64 rhs = lnr(count_quarter_residues(p, a), 2);
  return make_report("eq_2_4", p, {{"a", a}}, lhs, rhs);
}

}  // namespace qrv

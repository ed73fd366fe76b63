#include "qrv/quadfield.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qrv {

namespace {

mpz_class half_exact(const mpz_class& x) {
  if (mpz_odd_p(x.get_mpz_t())) {
    throw std::logic_error("QuadElem: non-integral intermediate");
  }
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 2);
  return r;
}

void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.discriminant() != y.discriminant()) {
    throw std::invalid_argument("QuadElem: mixed discriminants " +
                                std::to_string(x.discriminant()) + " and " +
                                std::to_string(y.discriminant()));
  }
}

void require_prime_mod4(i64 p, i64 residue, const char* who) {
  require_odd_prime(p, who);
  if (p % 4 != residue) {
    throw std::invalid_argument(std::string(who) + ": p must be " +
                                std::to_string(residue) + " mod 4, got " +
                                std::to_string(p));
  }
}

struct Form {
  i64 a;
  i64 b;
  i64 c;
  auto operator<=>(const Form&) const = default;
};

// Reduced indefinite form of non-square discriminant D = b^2 - 4ac, with
// s = isqrt(D): |sqrt(D) - 2|a|| < b < sqrt(D).
bool is_reduced(const Form& f, i64 s) {
  const i64 two_a = 2 * (f.a < 0 ? -f.a : f.a);
  return f.b > 0 && f.b <= s && two_a + f.b > s && two_a - f.b <= s;
}

// rho(a, b, c) = (c, b', (b'^2 - D)/(4c)) with b' = -b (mod 2|c|) and
// sqrt(D) - 2|c| < b' < sqrt(D).
Form rho(const Form& f, i64 disc, i64 s) {
  const i64 two_c = 2 * (f.c < 0 ? -f.c : f.c);
  const i64 b = s - lnr(s + f.b, two_c);
  return {f.c, b, (b * b - disc) / (4 * f.c)};
}

}  // namespace

QuadElem::QuadElem(i64 discriminant, mpz_class a, mpz_class b)
    : d_(discriminant), a_(std::move(a)), b_(std::move(b)) {
  if (d_ < 2) throw std::invalid_argument("QuadElem: D must be >= 2");
  const bool a_odd = mpz_odd_p(a_.get_mpz_t()) != 0;
  const bool b_odd = mpz_odd_p(b_.get_mpz_t()) != 0;
  const bool integral = lnr(d_, 4) == 1 ? a_odd == b_odd : !a_odd && !b_odd;
  if (!integral) {
    throw std::invalid_argument("QuadElem: (" + a_.get_str() + "+" + b_.get_str() +
                                "*sqrt(" + std::to_string(d_) + "))/2 is not integral");
  }
}

QuadElem QuadElem::integer(i64 discriminant, const mpz_class& n) {
  return QuadElem(discriminant, 2 * n, 0);
}

std::string QuadElem::to_string() const {
  if (b_ == 0) return mpz_class(a_ / 2).get_str();
  std::string out = "(" + a_.get_str();
  out += b_ < 0 ? "-" : "+";
  out += mpz_class(abs(b_)).get_str() + "*sqrt(" + std::to_string(d_) + "))/2";
  return out;
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  const mpz_class d = static_cast<long>(x.discriminant());
  mpz_class a = half_exact(x.a() * y.a() + d * x.b() * y.b());
  mpz_class b = half_exact(x.a() * y.b() + x.b() * y.a());
  return QuadElem(x.discriminant(), std::move(a), std::move(b));
}

QuadElem operator-(const QuadElem& x) {
  return QuadElem(x.discriminant(), -x.a(), -x.b());
}

QuadElem quad_conj(const QuadElem& x) {
  return QuadElem(x.discriminant(), x.a(), -x.b());
}

mpz_class quad_norm(const QuadElem& x) {
  mpz_class n = x.a() * x.a() - static_cast<long>(x.discriminant()) * x.b() * x.b();
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), n.get_mpz_t(), 4);
  return r;
}

QuadElem quad_pow(const QuadElem& x, i64 e) {
  QuadElem base = x;
  if (e < 0) {
    const mpz_class n = quad_norm(x);
    if (n != 1 && n != -1) {
      throw std::domain_error("quad_pow: negative power of a non-unit " + x.to_string());
    }
    // x^-1 = conj(x) / N(x) = conj(x) * N(x) for units.
    base = n == 1 ? quad_conj(x) : -quad_conj(x);
    e = -e;
  }
  QuadElem result = QuadElem::one(x.discriminant());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

int quad_sign(const QuadElem& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with D b^2.
  const int cmp_sq = sgn(x.a() * x.a() - static_cast<long>(x.discriminant()) * x.b() * x.b());
  return cmp_sq * sa;
}

QuadElem fundamental_unit(i64 p) {
  require_prime_mod4(p, 1, "fundamental_unit");
  const i64 s = isqrt(p);
  // Continued fraction of omega = (1 + sqrt(p))/2, complete quotients
  // (P + sqrt(p))/Q. The first convergent h/k with N(h - k omega) = +-1
  // yields eps_p = h - k omega' = (2h - k + k sqrt(p))/2.
  i64 P = 1;
  i64 Q = 2;
  mpz_class h = 1, h_prev = 0;  // h_{-1}, h_{-2}
  mpz_class k = 0, k_prev = 1;  // k_{-1}, k_{-2}
  std::set<std::pair<i64, i64>> seen;
  const mpz_class quarter_norm = (1 - p) / 4;  // omega * omega'
  while (true) {
    if (!seen.emplace(P, Q).second) {
      throw std::logic_error("fundamental_unit: period closed without a unit");
    }
    const i64 q = Q > 0 ? floor_div(P + s, Q) : floor_div(P + s + 1, Q);
    mpz_class h_next = q * h + h_prev;
    mpz_class k_next = q * k + k_prev;
    h_prev = std::exchange(h, std::move(h_next));
    k_prev = std::exchange(k, std::move(k_next));

    const mpz_class norm = h * h - h * k + quarter_norm * k * k;
    if (norm == 1 || norm == -1) {
      QuadElem eps(p, 2 * h - k, k);
      // Narrow and wide class numbers coincide only because this is -1.
      if (quad_norm(eps) != -1) {
        throw std::logic_error("fundamental_unit: norm of eps_" + std::to_string(p) +
                               " is +1");
      }
      return eps;
    }
    P = q * Q - P;
    Q = (p - P * P) / Q;
  }
}

i64 class_number_imag(i64 p) {
  require_prime_mod4(p, 3, "class_number_imag");
  if (p == 3) throw std::invalid_argument("class_number_imag: p must exceed 3");
  ResidueTable table(p);
  i64 sum = 0;
  for (i64 k = 1; k <= table.half(); ++k) sum += table.chi(k);
  const i64 factor = 2 - table.chi(2);
  if (sum % factor != 0 || sum <= 0) {
    throw std::logic_error("class_number_imag: character sum " + std::to_string(sum) +
                           " not a positive multiple of " + std::to_string(factor));
  }
  return sum / factor;
}

i64 class_number_imag_forms(i64 p) {
  require_prime_mod4(p, 3, "class_number_imag_forms");
  // |b| <= a <= c with b^2 + p = 4ac; b is odd since b^2 = -p (mod 4).
  i64 count = 0;
  for (i64 a = 1; 3 * a * a <= p; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if (b % 2 == 0) continue;
      const i64 num = b * b + p;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      ++count;
    }
  }
  return count;
}

i64 class_number_real(i64 p) {
  require_prime_mod4(p, 1, "class_number_real");
  const i64 s = isqrt(p);
  std::vector<Form> reduced;
  for (i64 b = 1; b <= s; b += 2) {
    const i64 m = (p - b * b) / 4;  // a c = -m
    for (i64 d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      for (i64 a : {d, -d}) {
        Form f{a, b, -m / a};
        if (is_reduced(f, s)) reduced.push_back(f);
      }
    }
  }
  std::map<Form, std::size_t> index;
  for (std::size_t i = 0; i < reduced.size(); ++i) index.emplace(reduced[i], i);

  std::vector<bool> visited(reduced.size(), false);
  i64 cycles = 0;
  for (std::size_t start = 0; start < reduced.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    std::size_t i = start;
    while (!visited[i]) {
      visited[i] = true;
      const Form next = rho(reduced[i], p, s);
      auto it = index.find(next);
      if (it == index.end()) {
        throw std::logic_error("class_number_real: rho left the reduced set");
      }
      i = it->second;
    }
  }
  if (cycles % 2 == 0) {
    throw std::logic_error("class_number_real: even class number for p=" +
                           std::to_string(p));
  }
  // The cycle count is the narrow class number; it equals h(p) because
  // fundamental_unit asserts N(eps_p) = -1.
  return cycles;
}

ClassData class_data(i64 p) {
  require_odd_prime(p, "class_data");
  ClassData data{p, std::nullopt, std::nullopt, std::nullopt, "", ""};
  if (p % 4 == 1) {
    data.eps = fundamental_unit(p);
    data.h_real = class_number_real(p);
    data.h_method = "form-cycles";
    data.eps_method = "continued-fraction";
  } else if (p > 3) {
    data.h_imag = class_number_imag(p);
    data.h_method = "dirichlet";
  }
  return data;
}

}  // namespace qrv

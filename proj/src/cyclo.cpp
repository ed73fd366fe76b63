#include "qrv/cyclo.hpp"

#include <stdexcept>
#include <utility>

namespace qrv {

namespace {

void require_same_ring(const CycloElem& x, const CycloElem& y) {
  if (x.prime() != y.prime()) {
    throw std::invalid_argument("CycloElem: mismatched primes " +
                                std::to_string(x.prime()) + " and " +
                                std::to_string(y.prime()));
  }
}

std::vector<std::size_t> support(const std::vector<mpz_class>& c) {
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) nz.push_back(k);
  }
  return nz;
}

CycloElem product_range(std::vector<CycloElem>& factors, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return std::move(factors[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  CycloElem left = product_range(factors, lo, mid);
  CycloElem right = product_range(factors, mid, hi);
  return left * right;
}

i64 checked_unit(i64 p, i64 a, const char* who) {
  require_odd_prime(p, who);
  const i64 r = lnr(a, p);
  if (r == 0) {
    throw std::invalid_argument(std::string(who) + ": p divides a");
  }
  return r;
}

}  // namespace

CycloElem::CycloElem(i64 p) : p_(p) {
  require_odd_prime(p, "CycloElem");
  coeffs_.resize(static_cast<std::size_t>(p - 1));
}

CycloElem::CycloElem(i64 p, std::vector<mpz_class> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_odd_prime(p, "CycloElem");
  if (static_cast<i64>(coeffs_.size()) != p - 1) {
    throw std::invalid_argument("CycloElem: expected p-1 coefficients");
  }
}

CycloElem CycloElem::from_cyclic(i64 p, std::span<const mpz_class> cyclic) {
  if (static_cast<i64>(cyclic.size()) != p) {
    throw std::invalid_argument("CycloElem::from_cyclic: expected p coefficients");
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
  const mpz_class& top = cyclic.back();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = cyclic[k] - top;
  return CycloElem(p, std::move(c));
}

CycloElem CycloElem::constant(i64 p, const mpz_class& c) {
  CycloElem x(p);
  x.coeffs_[0] = c;
  return x;
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElem::is_constant() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

std::string CycloElem::to_string() const {
  if (is_constant()) return coeffs_[0].get_str();
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ",";
    out += coeffs_[k].get_str();
  }
  return out + "]";
}

CycloElem& CycloElem::operator+=(const CycloElem& y) {
  require_same_ring(*this, y);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += y.coeffs_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& y) {
  require_same_ring(*this, y);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= y.coeffs_[k];
  return *this;
}

CycloElem operator+(CycloElem x, const CycloElem& y) { return x += y; }

CycloElem operator-(CycloElem x, const CycloElem& y) { return x -= y; }

CycloElem operator-(CycloElem x) {
  std::vector<mpz_class> c = x.coeffs();
  for (auto& v : c) v = -v;
  return CycloElem(x.prime(), std::move(c));
}

CycloElem operator*(const CycloElem& x, const CycloElem& y) {
  require_same_ring(x, y);
  const auto p = static_cast<std::size_t>(x.prime());
  // Multiply in Z[t]/(t^p - 1), then fold t^{p-1} back onto the basis.
  std::vector<mpz_class> acc(p);
  const auto xs = support(x.coeffs());
  const auto ys = support(y.coeffs());
  for (std::size_t i : xs) {
    mpz_srcptr xi = x.coeffs()[i].get_mpz_t();
    for (std::size_t j : ys) {
      std::size_t k = i + j;
      if (k >= p) k -= p;
      mpz_addmul(acc[k].get_mpz_t(), xi, y.coeffs()[j].get_mpz_t());
    }
  }
  return CycloElem::from_cyclic(x.prime(), acc);
}

CycloElem operator*(const mpz_class& c, CycloElem x) {
  std::vector<mpz_class> coeffs = x.coeffs();
  for (auto& v : coeffs) v *= c;
  return CycloElem(x.prime(), std::move(coeffs));
}

CycloElem root_power(i64 p, i64 e) {
  require_odd_prime(p, "root_power");
  std::vector<mpz_class> cyclic(static_cast<std::size_t>(p));
  cyclic[static_cast<std::size_t>(lnr(e, p))] = 1;
  return CycloElem::from_cyclic(p, cyclic);
}

CycloElem galois_action(const CycloElem& x, i64 a) {
  const i64 p = x.prime();
  const i64 r = checked_unit(p, a, "galois_action");
  std::vector<mpz_class> cyclic(static_cast<std::size_t>(p));
  for (i64 k = 0; k < p - 1; ++k) {
    cyclic[static_cast<std::size_t>(mul_mod(r, k, p))] = x.coeffs()[static_cast<std::size_t>(k)];
  }
  return CycloElem::from_cyclic(p, cyclic);
}

CycloElem gauss_sum(i64 p) {
  require_odd_prime(p, "gauss_sum");
  std::vector<mpz_class> cyclic(static_cast<std::size_t>(p));
  for (i64 x = 0; x < p; ++x) cyclic[static_cast<std::size_t>(mul_mod(x, x, p))] += 1;
  return CycloElem::from_cyclic(p, cyclic);
}

mpz_class trace(const CycloElem& x) {
  const auto& c = x.coeffs();
  mpz_class t = c[0] * static_cast<long>(x.prime() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) t -= c[k];
  return t;
}

QuadraticCoords to_quadratic(const CycloElem& x) {
  const i64 p = x.prime();
  if (p % 4 != 1) {
    throw std::invalid_argument("to_quadratic: p must be 1 mod 4, got " + std::to_string(p));
  }
  const CycloElem g = gauss_sum(p);
  // Tr(G) = 0 and G^2 = p, so Tr(a + b G) = (p-1) a and Tr((a + b G) G) = p (p-1) b.
  QuadraticCoords q{mpq_class(trace(x), static_cast<long>(p - 1)),
                    mpq_class(trace(x * g), static_cast<long>(p * (p - 1)))};
  q.rational.canonicalize();
  q.irrational.canonicalize();

  mpz_class scale;
  mpz_lcm(scale.get_mpz_t(), q.rational.get_den_mpz_t(), q.irrational.get_den_mpz_t());
  const mpz_class ra = mpq_class(q.rational * scale).get_num();
  const mpz_class rb = mpq_class(q.irrational * scale).get_num();
  if (scale * x != CycloElem::constant(p, ra) + rb * g) {
    throw std::domain_error("to_quadratic: element does not lie in Q(sqrt(" +
                            std::to_string(p) + "))");
  }
  if (scale != 1 && scale != 2) {
    throw std::logic_error("to_quadratic: denominator " + scale.get_str() +
                           " for an element of Z[zeta]");
  }
  return q;
}

QuadElem to_quad_elem(const CycloElem& x) {
  const QuadraticCoords q = to_quadratic(x);
  const mpq_class a2 = 2 * q.rational;
  const mpq_class b2 = 2 * q.irrational;
  if (a2.get_den() != 1 || b2.get_den() != 1) {
    throw std::domain_error("to_quad_elem: coordinates are not half-integers");
  }
  return QuadElem(x.prime(), a2.get_num(), b2.get_num());
}

std::vector<CycloElem> plus_factors(i64 p, i64 a) {
  const i64 r = checked_unit(p, a, "plus_product");
  if (p < 5) throw std::invalid_argument("plus_product: p must be at least 5");
  const i64 n = (p - 1) / 2;
  std::vector<CycloElem> powers;
  powers.reserve(static_cast<std::size_t>(n));
  for (i64 j = 1; j <= n; ++j) powers.push_back(root_power(p, mul_mod(r, j * j, p)));
  std::vector<CycloElem> factors;
  factors.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (std::size_t j = 0; j < powers.size(); ++j) {
    for (std::size_t k = j + 1; k < powers.size(); ++k) {
      factors.push_back(powers[j] + powers[k]);
    }
  }
  return factors;
}

CycloElem tree_product(std::vector<CycloElem> factors) {
  if (factors.empty()) throw std::invalid_argument("tree_product: no factors");
  return product_range(factors, 0, factors.size());
}

CycloElem plus_product(i64 p, i64 a) { return tree_product(plus_factors(p, a)); }

CycloElem plus_product_sequential(i64 p, i64 a) {
  auto factors = plus_factors(p, a);
  CycloElem acc = CycloElem::constant(p, 1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace qrv

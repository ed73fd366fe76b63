#include "qrv/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qrv {

namespace {

// Fenwick tree over residue values 0..p-1, counting inserted values.
class ValueCounter {
 public:
  explicit ValueCounter(i64 size) : tree_(static_cast<std::size_t>(size) + 1, 0) {}

  void insert(i64 v) {
    for (auto i = static_cast<std::size_t>(v) + 1; i < tree_.size(); i += i & (~i + 1)) {
      ++tree_[i];
    }
  }

  // Inserted values in [0, v]; v < 0 gives 0.
  std::int64_t prefix(i64 v) const {
    if (v < 0) return 0;
    std::int64_t total = 0;
    auto i = static_cast<std::size_t>(std::min<i64>(v + 1, static_cast<i64>(tree_.size()) - 1));
    for (; i > 0; i -= i & (~i + 1)) total += tree_[i];
    return total;
  }

  // Inserted values in [lo, hi], clipped to the table.
  std::int64_t range(i64 lo, i64 hi) const {
    lo = std::max<i64>(lo, 0);
    if (hi < lo) return 0;
    return prefix(hi) - prefix(lo - 1);
  }

 private:
  std::vector<std::int64_t> tree_;
};

bool use_nested(i64 p, CountMethod method) {
  switch (method) {
    case CountMethod::nested:
      return true;
    case CountMethod::sorted:
      return false;
    case CountMethod::automatic:
      break;
  }
  return p <= kNestedCutoff;
}

i64 checked_unit(i64 p, i64 a, const char* who) {
  require_odd_prime(p, who);
  i64 r = lnr(a, p);
  if (r == 0) {
    throw std::invalid_argument(std::string(who) + ": p divides a (p=" +
                                std::to_string(p) + ", a=" + std::to_string(a) + ")");
  }
  return r;
}

void require_3_mod_4(i64 p, const char* who) {
  require_odd_prime(p, who);
  if (p % 4 != 3) {
    throw std::invalid_argument(std::string(who) + ": p must be 3 mod 4, got " +
                                std::to_string(p));
  }
}

// {a j^2}_p for j = 1..(p-1)/2.
std::vector<i64> scaled_squares(i64 p, i64 a) {
  std::vector<i64> v;
  v.reserve(static_cast<std::size_t>((p - 1) / 2));
  for (i64 j = 1; j <= (p - 1) / 2; ++j) v.push_back(mul_mod(a, j * j, p));
  return v;
}

std::int64_t nested_inversions(std::span<const i64> v) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++count;
    }
  }
  return count;
}

std::int64_t merge_count(std::vector<i64>& v, std::vector<i64>& scratch,
                         std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += static_cast<std::int64_t>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

std::int64_t inversions(std::span<const i64> v, bool nested) {
  return nested ? nested_inversions(v) : count_inversions(v);
}

}  // namespace

std::int64_t count_inversions(std::span<const i64> values) {
  std::vector<i64> v(values.begin(), values.end());
  std::vector<i64> scratch(v.size());
  return merge_count(v, scratch, 0, v.size());
}

std::int64_t count_below_quarter(i64 p, i64 a, int sign) {
  checked_unit(p, a, "count_below_quarter");
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("count_below_quarter: sign must be +1 or -1");
  }
  ResidueTable table(p);
  const int target = sign * table.chi(a);
  std::int64_t count = 0;
  for (i64 k = 1; 4 * k < p; ++k) {
    if (table.chi(k) == target) ++count;
  }
  return count;
}

std::int64_t s_count(i64 p, i64 a, CountMethod method) {
  a = checked_unit(p, a, "s_count");
  auto v = scaled_squares(p, a);
  return inversions(v, use_nested(p, method));
}

std::int64_t t_count(i64 p, i64 a, CountMethod method) {
  a = checked_unit(p, a, "t_count");
  auto v = scaled_squares(p, a);
  std::int64_t count = 0;
  if (use_nested(p, method)) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        if (2 * lnr(v[k] - v[j], p) > p) ++count;
      }
    }
    return count;
  }
  // With d = v_k - v_j, {d}_p > p/2 iff d >= (p+1)/2 or -(p-1)/2 <= d < 0,
  // i.e. v_j <= v_k - (p+1)/2 or v_k < v_j <= v_k + (p-1)/2.
  ValueCounter seen(p);
  for (i64 vk : v) {
    count += seen.range(0, vk - (p + 1) / 2) + seen.range(vk + 1, vk + (p - 1) / 2);
    seen.insert(vk);
  }
  return count;
}

std::int64_t wide_gap_count(i64 p, i64 a, CountMethod method) {
  a = checked_unit(p, a, "wide_gap_count");
  auto v = scaled_squares(p, a);
  std::int64_t count = 0;
  if (use_nested(p, method)) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        i64 gap = v[j] > v[k] ? v[j] - v[k] : v[k] - v[j];
        if (2 * gap > p) ++count;
      }
    }
    return count;
  }
  ValueCounter seen(p);
  for (i64 vk : v) {
    count += seen.range(0, vk - (p + 1) / 2) + seen.range(vk + (p + 1) / 2, p - 1);
    seen.insert(vk);
  }
  return count;
}

std::int64_t tri_inversions(i64 p, int delta, CountMethod method) {
  require_3_mod_4(p, "tri_inversions");
  if (delta != 1 && delta != 2) {
    throw std::invalid_argument("tri_inversions: delta must be 1 or 2");
  }
  std::vector<i64> v;
  for (i64 j = 1; j <= (p - 1) / 2; ++j) {
    v.push_back(lnr(delta * (j * (j + 1) / 2), p));
  }
  return inversions(v, use_nested(p, method));
}

std::int64_t shifted_count(i64 p, i64 a, i64 b, CountMethod method) {
  require_3_mod_4(p, "shifted_count");
  if (a < 1 || a > p - 1 || b < 1 || b > p - 1) {
    throw std::invalid_argument("shifted_count: a and b must lie in 1..p-1");
  }
  const i64 n = (p - 1) / 2;
  std::vector<i64> w;
  for (i64 s = 0; s <= n; ++s) w.push_back(lnr(mul_mod(a, s * s, p) - b, p));
  if (use_nested(p, method)) {
    std::int64_t count = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      for (std::size_t s = t + 1; s < w.size(); ++s) {
        if (w[s] > w[t]) ++count;
      }
    }
    return count;
  }
  // The values a s^2 are distinct for 0 <= s <= n, so every pair is either an
  // inversion or an ascent.
  const auto pairs = static_cast<std::int64_t>(n * (n + 1) / 2);
  return pairs - count_inversions(w);
}

std::int64_t count_below_b(i64 p, i64 a, i64 b) {
  checked_unit(p, a, "count_below_b");
  if (b < 1 || b > p - 1) {
    throw std::invalid_argument("count_below_b: b must lie in 1..p-1");
  }
  ResidueTable table(p);
  const int target = table.chi(a);
  std::int64_t count = 0;
  for (i64 r = 1; r < b; ++r) {
    if (table.chi(r) == target) ++count;
  }
  return count;
}

std::int64_t count_quarter_residues(i64 p, i64 a) {
  a = checked_unit(p, a, "count_quarter_residues");
  ResidueTable table(p);
  std::int64_t count = 0;
  for (i64 k = 1; 4 * k < p; ++k) {
    if (table.chi(mul_mod(a, k, p)) == 1) ++count;
  }
  return count;
}

std::vector<i64> half_system_permutation(i64 n, i64 c) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("pan_sign: n must be odd and > 1");
  }
  if (gcd(c, n) != 1) {
    throw std::invalid_argument("pan_sign: c must be coprime to n");
  }
  const i64 m = (n - 1) / 2;
  std::vector<i64> pi;
  pi.reserve(static_cast<std::size_t>(m));
  for (i64 j = 1; j <= m; ++j) {
    i64 r = mul_mod(c, j, n);
    pi.push_back(r > m ? n - r : r);
  }
  return pi;
}

int pan_sign(i64 n, i64 c) {
  auto pi = half_system_permutation(n, c);
  std::vector<bool> visited(pi.size(), false);
  // sign = (-1)^(m - #cycles)
  std::int64_t transpositions = 0;
  for (std::size_t start = 0; start < pi.size(); ++start) {
    if (visited[start]) continue;
    std::int64_t length = 0;
    for (std::size_t j = start; !visited[j]; j = static_cast<std::size_t>(pi[j] - 1)) {
      visited[j] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace qrv

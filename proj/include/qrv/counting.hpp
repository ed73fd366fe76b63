#pragma once

// Pair-counting statistics over the residues {a j^2}_p, triangular numbers
// and the half-system permutation pi_c.
//
// Every count has two implementations: a nested-loop enumeration and an
// O(p log p) path (merge-sort inversions, or a Fenwick tree over residue
// values). CountMethod::automatic picks the nested loop for p <= 512.

#include <cstdint>
#include <span>
#include <vector>

#include "qrv/modint.hpp"

namespace qrv {

enum class CountMethod { automatic, nested, sorted };

/// Above this prime the automatic method switches to the O(p log p) path.
inline constexpr i64 kNestedCutoff = 512;

/// Number of pairs i < j with v[i] > v[j].
std::int64_t count_inversions(std::span<const i64> values);

/// |{1 <= k < p/4 : (k/p) = sign * (a/p)}|.
std::int64_t count_below_quarter(i64 p, i64 a, int sign);

/// |{(j,k) : 1 <= j < k <= (p-1)/2, {a j^2}_p > {a k^2}_p}|.
std::int64_t s_count(i64 p, i64 a, CountMethod method = CountMethod::automatic);

/// |{(j,k) : 1 <= j < k <= (p-1)/2, {a k^2 - a j^2}_p > p/2}|.
std::int64_t t_count(i64 p, i64 a, CountMethod method = CountMethod::automatic);

/// |{(j,k) : 1 <= j < k <= (p-1)/2, |{a j^2}_p - {a k^2}_p| > p/2}|.
std::int64_t wide_gap_count(i64 p, i64 a,
                            CountMethod method = CountMethod::automatic);

/// Inversions of ({delta T_j}_p), j = 1..(p-1)/2, with T_j = j(j+1)/2.
/// Requires p = 3 (mod 4) and delta in {1, 2}.
std::int64_t tri_inversions(i64 p, int delta,
                            CountMethod method = CountMethod::automatic);

/// |{(s,t) : 0 <= t < s <= n, {a s^2 - b}_p > {a t^2 - b}_p}|, n = (p-1)/2.
/// Requires p = 3 (mod 4) and 1 <= a, b <= p-1.
std::int64_t shifted_count(i64 p, i64 a, i64 b,
                           CountMethod method = CountMethod::automatic);

/// |{0 < r < b : (r/p) = (a/p)}| for 1 <= b <= p-1.
std::int64_t count_below_b(i64 p, i64 a, i64 b);

/// |{1 <= k < p/4 : (a k / p) = 1}|.
std::int64_t count_quarter_residues(i64 p, i64 a);

/// pi_c(j) for j = 1..(n-1)/2, stored at index j-1: the r in 1..(n-1)/2
/// with c j = +-r (mod n).
std::vector<i64> half_system_permutation(i64 n, i64 c);

/// Sign of pi_c, computed from its cycle decomposition.
int pan_sign(i64 n, i64 c);

}  // namespace qrv

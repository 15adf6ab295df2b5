// Direct-sum machinery: balanced partitions, odd dominance, dagger coefficient
// factorization, the zigzag slope criterion, the pairwise tuple condition,
// joint-vs-merged polygon comparison, and profile-family counterexample search.
#pragma once

#include "ghostlib/newton.h"

#include <vector>

namespace ghost {

// n split into u balanced parts, |parts_i - parts_j| <= 1, odd values at the
// larger indices.
std::vector<long> partition(long n, long u);

struct OddDominance {
  bool ok;
  long s1, s2;  // witness pair when !ok
};

// values[i] = phi(s_set(eps)[i]). True iff every pair s < s' has
// |phi(s) - phi(s')| <= 1 and, when they differ, phi(s') odd. Checked on
// consecutive pairs and cross-checked against all pairs.
OddDominance is_odd_dominant(const EpsilonChar& eps, const std::vector<long>& values);

struct FactorizationResult {
  bool ok;
  long first_n;        // meaningful when !ok
  bool canonicalized;  // input was re-sorted
};

// For each n <= trunc: the joint dagger coefficient equals the product of the
// component dagger coefficients at the balanced partition of n.
FactorizationResult factorization_check(const EpsilonChar& eps, std::vector<long> s_tuple,
                                        long trunc);

struct ZigzagVerdict {
  bool holds;
  long n, i, j;  // first violated inequality when !holds (i < j, sorted order)
  long window;   // inequalities checked for n + 1 <= window
  std::vector<NewtonPolygon> components;  // dagger polygons, sorted tuple order
};

// Parity-alternating inequalities between component polygon increments:
// odd n needs slope_j[n] >= slope_i[n] for i < j, even n the reverse.
ZigzagVerdict zigzag_check(const EpsilonChar& eps, std::vector<long> s_tuple,
                           const WStarProfile& w, long trunc);

struct ConditionReport {
  bool condition;           // every pair equal or summing to k0 - 1 mod p-1
  bool all_generic;
  long first_non_generic;   // -1 when all generic
};

ConditionReport theorem_condition(const EpsilonChar& eps, const std::vector<long>& s_tuple);

struct CompareVerdict {
  bool equal;
  long x;       // first divergence when !equal
  long window;  // certified comparison range
};

// Polygon of the direct sum against the merge of component polygons, both on
// dagger evaluations, compared over the jointly certified prefix.
CompareVerdict direct_sum_compare(const std::vector<ModuleSpec>& comps,
                                  const WStarProfile& w, long trunc, int jobs = 1);

struct WitnessResult {
  bool found;
  long index;    // position in the profile family
  long x;        // divergence point
  long scanned;  // profiles examined (family order)
};

// First profile in the family where the direct sum and the merge diverge.
WitnessResult witness_search(const EpsilonChar& eps, const std::vector<long>& s_tuple,
                             const std::vector<WStarProfile>& profiles, long trunc,
                             int jobs = 1);

}  // namespace ghost

// Dimension formulas: the (delta_s, t1, t2) data attached to an s-parameter,
// beta_n, the closed forms for d^Iw and d^ur, dagger normalizations, and
// multiplicity-weighted aggregation over direct sums.
#pragma once

#include "ghostlib/chars.h"

#include <tuple>
#include <vector>

namespace ghost {

// Primitive parameter s with its derived table data.
struct SParam {
  EpsilonChar eps;
  long s;
  long a_s, b_s;   // iota(s)
  long delta_s;    // floor((s + {a_s+s}) / (p-1)), in {0,1}
  long t1, t2;
  bool generic;    // 1 <= a_s <= p-4
};

SParam make_sparam(const EpsilonChar& eps, long s);

// (delta_s, t1, t2); agrees with the four-row table split by the range of s.
std::tuple<long, long, long> table_row(const SParam& sp);

// beta_n: t1 for even n, t2 - (p+1)/2 for odd n (period 2).
long beta(const SParam& sp, long n);

// d^Iw = 2 k_bullet + 2 - 2 delta_s (always even, possibly 0).
long d_iw(const SParam& sp, const WeightK& k);
long d_iw_kb(const SParam& sp, long k_bullet);

// d^ur = floor((kb - t1)/(p+1)) + floor((kb - t2)/(p+1)) + 2, floors toward -inf.
long d_ur(const SParam& sp, const WeightK& k);
long d_ur_kb(const SParam& sp, long k_bullet);

// Dagger normalization: (d_ur + delta_s, 2 k_bullet + 2).
std::pair<long, long> d_dagger(const SParam& sp, const WeightK& k);

// Direct sum of primitive modules: multiset of (s, multiplicity), canonical
// (sorted by s, adjacent equal s merged, multiplicities >= 1).
struct ModuleSpec {
  EpsilonChar eps;
  std::vector<std::pair<long, long>> comps;  // (s, mult)
};

ModuleSpec make_spec(const EpsilonChar& eps, std::vector<std::pair<long, long>> comps);

// Union of two direct sums (canonicalized).
ModuleSpec spec_union(const ModuleSpec& a, const ModuleSpec& b);

// Multiplicity-weighted (d_ur_total, d_iw_total), plain or dagger.
std::pair<long, long> spec_dims(const ModuleSpec& spec, const WeightK& k, bool dagger);

// Sum of mult * delta_s over components (the dagger index shift).
long delta_sum(const ModuleSpec& spec);

bool spec_all_generic(const ModuleSpec& spec);

// Total number of primitive components counted with multiplicity.
long spec_length(const ModuleSpec& spec);

// Residual-datum part: eps-related (a, b) with a split flag and multiplicity.
struct RbarPart {
  long a, b;
  bool split;
  long mult;
};

// Nonsplit part -> (iota_inv(a,b), mult); split part additionally contributes
// the companion ({p-3-a}, {a+b+1}).
ModuleSpec spec_from_rbar(const EpsilonChar& eps, const std::vector<RbarPart>& parts);

}  // namespace ghost

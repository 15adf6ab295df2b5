// Local invariants at a ghost zero: theta, the A/B endpoints, the centered
// values Delta'_{k,l} with their lower hull, the increment closed form, the
// chord slope P_{k,l}, the F differences, and near-Steinberg ranges.
#pragma once

#include "ghostlib/newton.h"

#include <optional>
#include <vector>

namespace ghost {

// beta_{kb-delta-l} - beta_{kb+1-delta-l} + (p+1)/2; for s in the middle
// range this is 2s+2-k0 or p-1-2s+k0 by the parity of k_bullet+1-l.
long theta(const SParam& sp, const WeightK& k, long ell);

// A = (k-2-(p+1)l+theta_{l+1})/2, B = (k-2+(p+1)l-theta_{l+1})/2; integers.
std::pair<long, long> ab_values(const SParam& sp, const WeightK& k, long ell);

// Value of the n-th coefficient at w_k with the zero removed, recentered:
// eval_at_wk_hat at n = d_iw/2 + l, minus (k-2)/2 * l. Domain |l| <= d_new/2.
Rat delta_prime(const SParam& sp, const WeightK& k, long ell);

// Closed form for delta_prime(l) - delta_prime(l-1), valid for l >= 1 in the
// domain and s in the middle range.
Rat delta_increment(const SParam& sp, const WeightK& k, long ell);

struct DeltaTable {
  long k_bullet;
  long s;
  long d_new;              // d_iw - 2 d_ur (even)
  long ell_min, ell_max;   // symmetric domain [-d_new/2, d_new/2]
  std::vector<Rat> values; // index ell - ell_min
  std::vector<Rat> hull;   // lower hull readout at integer points
  bool symmetric;          // values(l) == values(-l) held everywhere

  Rat value(long ell) const { return values.at(ell - ell_min); }
  Rat hull_at(long ell) const { return hull.at(ell - ell_min); }
};

DeltaTable delta_hull(const SParam& sp, const WeightK& k);

// Slope of the certified chords: defined through the boundary parameter
// s_{k,l} (smallest or largest element of the middle range by parity).
Rat p_kl(const EpsilonChar& eps, const WeightK& k, long ell);
long s_kl(const EpsilonChar& eps, const WeightK& k, long ell);

// F(r) about a center: inc(center+r) - inc(center-r+1) where inc(l) is the
// step delta_prime(l) - delta_prime(l-1).
Rat f_value(const SParam& sp, const WeightK& k, long r, long ell_center);

struct NearSteinberg {
  long L;
  Rat lo, hi;  // open interval (d_iw_dag/2 - L, d_iw_dag/2 + L)
};

// Largest L in [1, d_new/2] with v_p(w* - w_k) >= hull(L) - hull(L-1);
// empty when no index qualifies.
std::optional<NearSteinberg> near_steinberg(const SParam& sp, const WeightK& k,
                                            const WStarProfile& w);

}  // namespace ghost

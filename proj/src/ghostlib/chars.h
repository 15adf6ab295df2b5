// The character data (p, c, k0), the weight class K, the s <-> (a, b)
// parameterization, companion pairing, the set S, and ultrametric distances
// between ghost zeros w_k = exp((k-2)p) - 1 and valuation profiles modeling
// points of the open unit disk.
#pragma once

#include "ghostlib/padic.h"

#include <utility>
#include <vector>

namespace ghost {

struct EpsilonChar {
  PrimeContext ctx;
  long c;   // twist exponent, 0 <= c <= p-2
  long k0;  // weight-class representative, 2 <= k0 <= p
  EpsilonChar(PrimeContext ctx_, long c_, long k0_);
  long p() const { return ctx.p; }
};

// Representative of x mod (p-1) in [0, p-2].
long mod_pm1(const EpsilonChar& eps, long x);

// Weight k = (p-1)*k_bullet + k0 in the class K.
struct WeightK {
  long k;
  long k_bullet;
};

WeightK weight_from_kb(const EpsilonChar& eps, long k_bullet);
WeightK weight_from_k(const EpsilonChar& eps, long k);

// s in [0, p-2]  ->  the eps-related pair (a, b).
std::pair<long, long> iota(const EpsilonChar& eps, long s);

// (a, b) is eps-related iff a + 2b = 2c + k0 - 2 (mod p-1).
bool eps_related(const EpsilonChar& eps, long a, long b);

// Inverse of iota on eps-related pairs; rejects unrelated input.
long iota_inv(const EpsilonChar& eps, long a, long b);

// s' with s + s' = k0 - 1 (mod p-1); an involution on [0, p-2].
long companion(const EpsilonChar& eps, long s);

// S = { ceil((k0+1)/2), ..., floor((k0-4+p)/2) }.
std::vector<long> s_set(const EpsilonChar& eps);

// v_p(w_k - w_k') = 1 + v_p(k - k'); rejects k = k'.
Rat wdist(const EpsilonChar& eps, const WeightK& k, const WeightK& kp);

// Valuation profile of a point w* of the open unit disk: distances to the
// ghost zeros are min(t, tree distance to the anchor), with value t at the
// anchor itself. Origin anchors at w = 0 (the k = 2 zero).
struct WStarProfile {
  bool at_origin;
  long anchor_kb;  // meaningful when !at_origin
  Rat t;           // > 0
};

WStarProfile profile_origin(const EpsilonChar& eps, const Rat& t);
WStarProfile profile_at(const EpsilonChar& eps, long anchor_kb, const Rat& t);

Rat profile_eval(const EpsilonChar& eps, const WStarProfile& w, const WeightK& k);

// Canonical serialization: "origin:t=num/den" or "k=<k>:t=num/den".
std::string profile_str(const EpsilonChar& eps, const WStarProfile& w);

}  // namespace ghost

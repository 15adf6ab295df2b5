#include "ghostlib/chars.h"

#include <sstream>
#include <stdexcept>

namespace ghost {

EpsilonChar::EpsilonChar(PrimeContext ctx_, long c_, long k0_) : ctx(ctx_), c(c_), k0(k0_) {
  if (c < 0 || c > ctx.p - 2) throw std::invalid_argument("c must lie in [0, p-2]");
  if (k0 < 2 || k0 > ctx.p) throw std::invalid_argument("k0 must lie in [2, p]");
}

long mod_pm1(const EpsilonChar& eps, long x) {
  long m = eps.p() - 1;
  long r = x % m;
  return r < 0 ? r + m : r;
}

WeightK weight_from_kb(const EpsilonChar& eps, long k_bullet) {
  if (k_bullet < 0) throw std::invalid_argument("k_bullet must be >= 0");
  return {(eps.p() - 1) * k_bullet + eps.k0, k_bullet};
}

WeightK weight_from_k(const EpsilonChar& eps, long k) {
  if (k < 2) throw std::invalid_argument("weight k must be >= 2");
  long d = k - eps.k0;
  if (d % (eps.p() - 1) != 0) throw std::invalid_argument("weight k must be = k0 mod (p-1)");
  long kb = d / (eps.p() - 1);
  if (kb < 0) throw std::invalid_argument("weight k lies below the class minimum");
  return {k, kb};
}

std::pair<long, long> iota(const EpsilonChar& eps, long s) {
  if (s < 0 || s > eps.p() - 2) throw std::invalid_argument("s must lie in [0, p-2]");
  return {mod_pm1(eps, eps.k0 - 2 - 2 * s), mod_pm1(eps, eps.c + s)};
}

bool eps_related(const EpsilonChar& eps, long a, long b) {
  return mod_pm1(eps, a + 2 * b) == mod_pm1(eps, 2 * eps.c + eps.k0 - 2);
}

long iota_inv(const EpsilonChar& eps, long a, long b) {
  if (!eps_related(eps, a, b))
    throw std::invalid_argument("(a, b) is not eps-related: a + 2b != 2c + k0 - 2 mod (p-1)");
  return mod_pm1(eps, b - eps.c);
}

long companion(const EpsilonChar& eps, long s) {
  if (s < 0 || s > eps.p() - 2) throw std::invalid_argument("s must lie in [0, p-2]");
  return mod_pm1(eps, eps.k0 - 1 - s);
}

std::vector<long> s_set(const EpsilonChar& eps) {
  long lo = (eps.k0 + 2) / 2;               // ceil((k0+1)/2)
  long hi = (eps.k0 - 4 + eps.p()) / 2;     // floor((k0-4+p)/2)
  std::vector<long> out;
  for (long s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

Rat wdist(const EpsilonChar& eps, const WeightK& k, const WeightK& kp) {
  if (k.k == kp.k) throw std::invalid_argument("wdist: identical weights have infinite valuation");
  return Rat(1 + vp(eps.ctx, (long long)k.k - kp.k));
}

static bool anchor_is_origin(const EpsilonChar& eps, const WStarProfile& w) {
  // w_2 = exp(0) - 1 = 0, so an anchor at weight k = 2 is the origin.
  return w.at_origin || (eps.p() - 1) * w.anchor_kb + eps.k0 == 2;
}

WStarProfile profile_origin(const EpsilonChar& eps, const Rat& t) {
  (void)eps;
  if (t <= 0) throw std::invalid_argument("profile t must be > 0");
  return {true, 0, t};
}

WStarProfile profile_at(const EpsilonChar& eps, long anchor_kb, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("profile t must be > 0");
  weight_from_kb(eps, anchor_kb);
  return {false, anchor_kb, t};
}

Rat profile_eval(const EpsilonChar& eps, const WStarProfile& w, const WeightK& k) {
  if (anchor_is_origin(eps, w)) {
    if (k.k == 2) return w.t;
    Rat d(1 + vp(eps.ctx, (long long)k.k - 2));
    return std::min(w.t, d);
  }
  if (k.k_bullet == w.anchor_kb) return w.t;
  Rat d(1 + vp(eps.ctx, (long long)k.k_bullet - w.anchor_kb));
  return std::min(w.t, d);
}

std::string profile_str(const EpsilonChar& eps, const WStarProfile& w) {
  std::ostringstream os;
  if (w.at_origin)
    os << "origin:t=";
  else
    os << "k=" << (eps.p() - 1) * w.anchor_kb + eps.k0 << ":t=";
  os << w.t.get_num().get_str() << "/" << w.t.get_den().get_str();
  return os.str();
}

}  // namespace ghost

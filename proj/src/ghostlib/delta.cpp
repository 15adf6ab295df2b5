#include "ghostlib/delta.h"

#include <stdexcept>

namespace ghost {

namespace {

Rat half_weight_shift(const WeightK& k, long ell) {
  Rat r(k.k - 2, 2);
  r.canonicalize();
  return r * ell;
}

void require_domain(const SParam& sp, const WeightK& k, long ell) {
  long dn = d_iw(sp, k) - 2 * d_ur(sp, k);
  if (2 * ell > dn || -2 * ell > dn) {
    throw std::invalid_argument("ell outside the centered coefficient window");
  }
}

}  // namespace

long theta(const SParam& sp, const WeightK& k, long ell) {
  long kb = k.k_bullet;
  return beta(sp, kb - sp.delta_s - ell) - beta(sp, kb + 1 - sp.delta_s - ell) +
         (sp.eps.p() + 1) / 2;
}

std::pair<long, long> ab_values(const SParam& sp, const WeightK& k, long ell) {
  long p = sp.eps.p();
  long th = theta(sp, k, ell + 1);
  long two_a = k.k - 2 - (p + 1) * ell + th;
  long two_b = k.k - 2 + (p + 1) * ell - th;
  if (two_a % 2 != 0 || two_b % 2 != 0) {
    throw std::logic_error("A/B endpoints must be integers");
  }
  return {two_a / 2, two_b / 2};
}

Rat delta_prime(const SParam& sp, const WeightK& k, long ell) {
  require_domain(sp, k, ell);
  long n = d_iw(sp, k) / 2 + ell;
  ModuleSpec spec = make_spec(sp.eps, {{sp.s, 1}});
  return eval_at_wk_hat(spec, n, k, false) - half_weight_shift(k, ell);
}

Rat delta_increment(const SParam& sp, const WeightK& k, long ell) {
  long dn = d_iw(sp, k) - 2 * d_ur(sp, k);
  if (ell < 1 || 2 * ell > dn) {
    throw std::invalid_argument("increment index must satisfy 1 <= ell <= d_new/2");
  }
  long p = sp.eps.p();
  long th = theta(sp, k, ell);
  auto [a, b] = ab_values(sp, k, ell);
  const PrimeContext& ctx = sp.eps.ctx;
  Rat first((p - 1) * (ell - 1) + th, 2);
  first.canonicalize();
  Rat second(th + dig(ctx, a) + 2 * dig(ctx, ell - 1) - dig(ctx, b), p - 1);
  second.canonicalize();
  return first + second;
}

DeltaTable delta_hull(const SParam& sp, const WeightK& k) {
  long du = d_ur(sp, k);
  long di = d_iw(sp, k);
  long dn = di - 2 * du;
  if (dn < 0 || dn % 2 != 0) {
    throw std::logic_error("centered window must have even nonnegative length");
  }
  DeltaTable tab{k.k_bullet, sp.s, dn, -dn / 2, dn / 2, {}, {}, true};

  // One distance row and one dimension cache serve the whole table.
  ModuleSpec spec = make_spec(sp.eps, {{sp.s, 1}});
  SeriesEval ev(spec, false);
  long n_hi = di - du;
  long kb_end = ev.support_end(n_hi);
  std::vector<long> wd(kb_end + 1, 0);
  for (long kb = 0; kb <= kb_end; ++kb) {
    if (kb != k.k_bullet) wd[kb] = 1 + vp(sp.eps.ctx, kb - k.k_bullet);
  }

  tab.values.reserve(dn + 1);
  for (long ell = tab.ell_min; ell <= tab.ell_max; ++ell) {
    long n = di / 2 + ell;
    long end = ev.support_end(n);
    long long acc = 0;
    for (long kb = 0; kb < end; ++kb) {
      long e = ev.m(n, kb);
      if (e > 0 && kb != k.k_bullet) acc += (long long)e * wd[kb];
    }
    tab.values.push_back(Rat((long)acc) - half_weight_shift(k, ell));
  }

  NewtonPolygon np = np_from_values(tab.values);
  tab.hull = h_values(np, np.width());
  for (long i = 0; i <= dn; ++i) {
    if (tab.values[i] != tab.values[dn - i]) {
      tab.symmetric = false;
      break;
    }
  }
  return tab;
}

long s_kl(const EpsilonChar& eps, const WeightK& k, long ell) {
  bool odd = ((k.k_bullet + 1 - ell) % 2 + 2) % 2 == 1;
  return odd ? (eps.k0 + 2) / 2 : (eps.k0 + eps.p() - 4) / 2;
}

Rat p_kl(const EpsilonChar& eps, const WeightK& k, long ell) {
  if (ell < 1) throw std::invalid_argument("chord slope index must be >= 1");
  long p = eps.p();
  SParam sp = make_sparam(eps, s_kl(eps, k, ell));
  auto [a_l, b_l] = ab_values(sp, k, ell);
  auto [a_l1, b_l1] = ab_values(sp, k, ell + 1);
  const PrimeContext& ctx = eps.ctx;
  Rat term1((p - 1) * (2 * ell - 1) + p + 1, 2);
  term1.canonicalize();
  Rat term2(p + 1 + 2 * (dig(ctx, ell) + dig(ctx, ell - 1)), p - 1);
  term2.canonicalize();
  Rat term3(dig(ctx, b_l1) - dig(ctx, a_l) + dig(ctx, b_l) - dig(ctx, a_l1), p - 1);
  term3.canonicalize();
  return (term1 + term2 - term3) / 2;
}

Rat f_value(const SParam& sp, const WeightK& k, long r, long ell_center) {
  require_domain(sp, k, ell_center + r);
  require_domain(sp, k, ell_center + r - 1);
  require_domain(sp, k, ell_center - r + 1);
  require_domain(sp, k, ell_center - r);
  Rat up = delta_prime(sp, k, ell_center + r) - delta_prime(sp, k, ell_center + r - 1);
  Rat down = delta_prime(sp, k, ell_center - r + 1) - delta_prime(sp, k, ell_center - r);
  return up - down;
}

std::optional<NearSteinberg> near_steinberg(const SParam& sp, const WeightK& k,
                                            const WStarProfile& w) {
  DeltaTable tab = delta_hull(sp, k);
  Rat v = profile_eval(sp.eps, w, k);
  long best = 0;
  for (long ell = 1; ell <= tab.d_new / 2; ++ell) {
    if (v >= tab.hull_at(ell) - tab.hull_at(ell - 1)) best = ell;
  }
  if (best == 0) return std::nullopt;
  long half_dag = k.k_bullet + 1;  // d_iw_dag / 2
  return NearSteinberg{best, Rat(half_dag - best), Rat(half_dag + best)};
}

}  // namespace ghost

#include "ghostlib/ghost.h"

#include <algorithm>
#include <stdexcept>

namespace ghost {

namespace {

long clamp_exp(long n, long du, long di) {
  if (n <= du || n >= di - du) return 0;
  return std::min(n - du, di - du - n);
}

}  // namespace

long m_exp(const ModuleSpec& spec, long n, const WeightK& k, bool dagger) {
  auto [du, di] = spec_dims(spec, k, dagger);
  return clamp_exp(n, du, di);
}

SeriesEval::SeriesEval(const ModuleSpec& spec, bool dagger)
    : spec_(spec), dagger_(dagger) {
  for (const auto& [s, mult] : spec_.comps) {
    params_.push_back(make_sparam(spec_.eps, s));
    mults_.push_back(mult);
  }
}

void SeriesEval::ensure(long k_bullet) {
  for (long kb = (long)du_.size(); kb <= k_bullet; ++kb) {
    long du = 0, di = 0;
    for (size_t i = 0; i < params_.size(); ++i) {
      long cdu = d_ur_kb(params_[i], kb);
      long cdi = d_iw_kb(params_[i], kb);
      if (dagger_) {
        cdu += params_[i].delta_s;
        cdi = 2 * kb + 2;
      }
      du += mults_[i] * cdu;
      di += mults_[i] * cdi;
    }
    du_.push_back(du);
    di_.push_back(di);
  }
}

long SeriesEval::m(long n, long k_bullet) {
  ensure(k_bullet);
  return clamp_exp(n, du_[k_bullet], di_[k_bullet]);
}

long SeriesEval::support_end(long n) {
  if (du_.empty()) ensure(0);
  while (du_.back() < n) ensure((long)du_.size());
  auto it = std::lower_bound(du_.begin(), du_.end(), n);
  return (long)(it - du_.begin());
}

GhostCoefficient SeriesEval::coeff(long n) {
  if (n < 0) throw std::invalid_argument("coefficient index must be >= 0");
  GhostCoefficient gc{n, {}};
  long end = support_end(n);
  for (long kb = 0; kb < end; ++kb) {
    long e = m(n, kb);
    if (e > 0) gc.factors.emplace_back(kb, e);
  }
  // The scan stops at the first k_bullet with d_ur >= n; the support must not
  // resume past it. Probe a few further indices to catch any model breakage.
  for (long kb = end; kb <= end + 3; ++kb) {
    if (m(n, kb) != 0) {
      throw std::logic_error("ghost support scan: support extends past a d_ur >= n index");
    }
  }
  return gc;
}

GhostCoefficient coefficient(const ModuleSpec& spec, long n, bool dagger) {
  SeriesEval ev(spec, dagger);
  return ev.coeff(n);
}

GhostSeries series(const ModuleSpec& spec, long trunc, bool dagger) {
  if (trunc < 0) throw std::invalid_argument("truncation must be >= 0");
  GhostSeries gs{spec, dagger, trunc, {}};
  gs.coeffs.reserve(trunc + 1);
  SeriesEval ev(spec, dagger);
  for (long n = 0; n <= trunc; ++n) gs.coeffs.push_back(ev.coeff(n));
  return gs;
}

std::vector<Rat> eval_valuations(const GhostSeries& gs, const WStarProfile& w) {
  const EpsilonChar& eps = gs.spec.eps;
  long kb_max = 0;
  for (const GhostCoefficient& gc : gs.coeffs) {
    if (!gc.factors.empty()) kb_max = std::max(kb_max, gc.factors.back().first);
  }

  // Common-denominator fast path: v(w* - w_k) = min(t, d_k) with d_k a
  // positive integer (t at the anchor), so num/den representatives over
  // den(t) stay integral. Falls back to full rational arithmetic on overflow.
  bool fast = mpz_fits_slong_p(w.t.get_num().get_mpz_t()) &&
              mpz_fits_slong_p(w.t.get_den().get_mpz_t());
  std::vector<long long> scaled;
  long long den = 1;
  if (fast) {
    long long num = w.t.get_num().get_si();
    den = w.t.get_den().get_si();
    scaled.resize(kb_max + 1);
    for (long kb = 0; kb <= kb_max && fast; ++kb) {
      WeightK k = weight_from_kb(eps, kb);
      long long dist;
      if (!w.at_origin && kb == w.anchor_kb) {
        dist = num;
      } else if (w.at_origin && k.k == 2) {
        dist = num;
      } else {
        long v = w.at_origin ? 1 + vp(eps.ctx, k.k - 2)
                             : 1 + vp(eps.ctx, kb - w.anchor_kb);
        long long d;
        if (__builtin_mul_overflow((long long)v, den, &d)) {
          fast = false;
          break;
        }
        dist = std::min(num, d);
      }
      scaled[kb] = dist;
    }
  }

  std::vector<Rat> out;
  out.reserve(gs.coeffs.size());
  for (const GhostCoefficient& gc : gs.coeffs) {
    if (fast) {
      long long acc = 0;
      bool ok = true;
      for (const auto& [kb, e] : gc.factors) {
        long long term;
        if (__builtin_mul_overflow((long long)e, scaled[kb], &term) ||
            __builtin_add_overflow(acc, term, &acc)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        Rat r(mpz_class((long)acc), mpz_class((long)den));
        r.canonicalize();
        out.push_back(r);
        continue;
      }
      fast = false;  // degrade for the remaining coefficients too
    }
    Rat acc = 0;
    for (const auto& [kb, e] : gc.factors) {
      WeightK k = weight_from_kb(eps, kb);
      acc += Rat(e) * profile_eval(eps, w, k);
    }
    out.push_back(acc);
  }
  return out;
}

Rat eval_at_wk_hat(const ModuleSpec& spec, long n, const WeightK& k, bool dagger) {
  SeriesEval ev(spec, dagger);
  GhostCoefficient gc = ev.coeff(n);
  long long acc = 0;
  for (const auto& [kb, e] : gc.factors) {
    if (kb == k.k_bullet) continue;
    acc += (long long)e * (1 + vp(spec.eps.ctx, kb - k.k_bullet));
  }
  return Rat((long)acc);
}

}  // namespace ghost

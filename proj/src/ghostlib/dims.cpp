#include "ghostlib/dims.h"

#include <algorithm>
#include <stdexcept>

namespace ghost {

namespace {

// Floor division toward -infinity (both d^ur floors can go negative).
long floordiv(long a, long b) {
  long q = a / b;
  long r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SParam make_sparam(const EpsilonChar& eps, long s) {
  if (s < 0 || s > eps.p() - 2) {
    throw std::invalid_argument("s must lie in [0, p-2]");
  }
  SParam sp{eps, s, 0, 0, 0, 0, 0, false};
  auto ab = iota(eps, s);
  sp.a_s = ab.first;
  sp.b_s = ab.second;
  long pm1 = eps.p() - 1;
  long a_plus_s = mod_pm1(eps, sp.a_s + s);
  sp.delta_s = (s + a_plus_s) / pm1;
  if (sp.a_s + s < pm1) {
    sp.t1 = s + sp.delta_s;
    sp.t2 = sp.a_s + s + sp.delta_s + 2;
  } else {
    sp.t1 = a_plus_s + sp.delta_s + 1;
    sp.t2 = s + sp.delta_s + 1;
  }
  sp.generic = (sp.a_s >= 1 && sp.a_s <= eps.p() - 4);
  return sp;
}

std::tuple<long, long, long> table_row(const SParam& sp) {
  return {sp.delta_s, sp.t1, sp.t2};
}

long beta(const SParam& sp, long n) {
  long r = n % 2;
  if (r < 0) r += 2;
  return r == 0 ? sp.t1 : sp.t2 - (sp.eps.p() + 1) / 2;
}

long d_iw_kb(const SParam& sp, long k_bullet) {
  return 2 * k_bullet + 2 - 2 * sp.delta_s;
}

long d_iw(const SParam& sp, const WeightK& k) { return d_iw_kb(sp, k.k_bullet); }

long d_ur_kb(const SParam& sp, long k_bullet) {
  long pp1 = sp.eps.p() + 1;
  return floordiv(k_bullet - sp.t1, pp1) + floordiv(k_bullet - sp.t2, pp1) + 2;
}

long d_ur(const SParam& sp, const WeightK& k) { return d_ur_kb(sp, k.k_bullet); }

std::pair<long, long> d_dagger(const SParam& sp, const WeightK& k) {
  return {d_ur(sp, k) + sp.delta_s, 2 * k.k_bullet + 2};
}

ModuleSpec make_spec(const EpsilonChar& eps, std::vector<std::pair<long, long>> comps) {
  if (comps.empty()) {
    throw std::invalid_argument("module spec must have at least one component");
  }
  for (auto& [s, mult] : comps) {
    if (s < 0 || s > eps.p() - 2) {
      throw std::invalid_argument("s must lie in [0, p-2]");
    }
    if (mult < 1) {
      throw std::invalid_argument("component multiplicity must be >= 1");
    }
  }
  std::sort(comps.begin(), comps.end());
  std::vector<std::pair<long, long>> merged;
  for (const auto& [s, mult] : comps) {
    if (!merged.empty() && merged.back().first == s) {
      merged.back().second += mult;
    } else {
      merged.emplace_back(s, mult);
    }
  }
  return ModuleSpec{eps, std::move(merged)};
}

ModuleSpec spec_union(const ModuleSpec& a, const ModuleSpec& b) {
  if (a.eps.p() != b.eps.p() || a.eps.c != b.eps.c || a.eps.k0 != b.eps.k0) {
    throw std::invalid_argument("spec union requires matching characters");
  }
  std::vector<std::pair<long, long>> comps = a.comps;
  comps.insert(comps.end(), b.comps.begin(), b.comps.end());
  return make_spec(a.eps, std::move(comps));
}

std::pair<long, long> spec_dims(const ModuleSpec& spec, const WeightK& k, bool dagger) {
  long du = 0, di = 0;
  for (const auto& [s, mult] : spec.comps) {
    SParam sp = make_sparam(spec.eps, s);
    if (dagger) {
      auto [u, i] = d_dagger(sp, k);
      du += mult * u;
      di += mult * i;
    } else {
      du += mult * d_ur(sp, k);
      di += mult * d_iw(sp, k);
    }
  }
  return {du, di};
}

long delta_sum(const ModuleSpec& spec) {
  long total = 0;
  for (const auto& [s, mult] : spec.comps) {
    total += mult * make_sparam(spec.eps, s).delta_s;
  }
  return total;
}

bool spec_all_generic(const ModuleSpec& spec) {
  for (const auto& [s, mult] : spec.comps) {
    (void)mult;
    if (!make_sparam(spec.eps, s).generic) return false;
  }
  return true;
}

long spec_length(const ModuleSpec& spec) {
  long total = 0;
  for (const auto& [s, mult] : spec.comps) {
    (void)s;
    total += mult;
  }
  return total;
}

ModuleSpec spec_from_rbar(const EpsilonChar& eps, const std::vector<RbarPart>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("residual datum must have at least one part");
  }
  std::vector<std::pair<long, long>> comps;
  for (const RbarPart& part : parts) {
    if (part.mult < 1) {
      throw std::invalid_argument("part multiplicity must be >= 1");
    }
    comps.emplace_back(iota_inv(eps, part.a, part.b), part.mult);
    if (part.split) {
      long a2 = mod_pm1(eps, eps.p() - 3 - part.a);
      long b2 = mod_pm1(eps, part.a + part.b + 1);
      comps.emplace_back(iota_inv(eps, a2, b2), part.mult);
    }
  }
  return make_spec(eps, std::move(comps));
}

}  // namespace ghost

// Ghost series: coefficient exponents m_n(k), coefficient factorizations,
// truncated series, and exact valuations of coefficients at a point profile.
#pragma once

#include "ghostlib/dims.h"

#include <utility>
#include <vector>

namespace ghost {

// Factorization of one coefficient: sorted (k_bullet, exponent), exponents > 0.
struct GhostCoefficient {
  long n;
  std::vector<std::pair<long, long>> factors;
};

struct GhostSeries {
  ModuleSpec spec;
  bool dagger;
  long trunc;  // coefficients 0..trunc inclusive
  std::vector<GhostCoefficient> coeffs;
};

// Multiplicity of the zero w_k in the n-th coefficient:
// min(n - du, di - du - n) on the window du < n < di - du and 0 outside,
// where (du, di) are the multiplicity-weighted dimension sums of the spec
// (the dagger dimensions when requested).
long m_exp(const ModuleSpec& spec, long n, const WeightK& k, bool dagger);

// Cached evaluator for one (spec, dagger): dimension tables grow on demand.
class SeriesEval {
 public:
  SeriesEval(const ModuleSpec& spec, bool dagger);

  const ModuleSpec& spec() const { return spec_; }
  bool dagger() const { return dagger_; }

  // Exponent of w at index k_bullet in coefficient n.
  long m(long n, long k_bullet);

  // Smallest k_bullet with total d_ur >= n; support of coefficient n lies
  // strictly below this index.
  long support_end(long n);

  GhostCoefficient coeff(long n);

 private:
  void ensure(long k_bullet);

  ModuleSpec spec_;
  bool dagger_;
  std::vector<SParam> params_;  // one per component, aligned with mults_
  std::vector<long> mults_;
  std::vector<long> du_, di_;   // aggregated dims indexed by k_bullet
};

GhostCoefficient coefficient(const ModuleSpec& spec, long n, bool dagger);

GhostSeries series(const ModuleSpec& spec, long trunc, bool dagger);

// v(g_n(w*)) for n = 0..trunc as exact rationals.
std::vector<Rat> eval_valuations(const GhostSeries& gs, const WStarProfile& w);

// v(g_n(w_k) / (w - w_k)^{m_n(k)}): the coefficient with the zero at w_k
// removed, evaluated at w_k. Always a (half-)integer; exact.
Rat eval_at_wk_hat(const ModuleSpec& spec, long n, const WeightK& k, bool dagger);

}  // namespace ghost

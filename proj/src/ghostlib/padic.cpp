#include "ghostlib/padic.h"

#include <stdexcept>

namespace ghost {

static bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeContext::PrimeContext(long p_) : p(p_) {
  if (p < 7 || !is_prime(p)) throw std::invalid_argument("p must be a prime ≥ 7");
}

long vp(const PrimeContext& ctx, long long n) {
  if (n == 0) throw std::invalid_argument("vp: valuation of 0 is infinite");
  if (n < 0) n = -n;
  long v = 0;
  while (n % ctx.p == 0) {
    n /= ctx.p;
    ++v;
  }
  return v;
}

long vp(const PrimeContext& ctx, const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("vp: valuation of 0 is infinite");
  mpz_class a = abs(n), r;
  long v = 0;
  while (true) {
    mpz_class q;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), (unsigned long)ctx.p);
    if (r != 0) break;
    a = q;
    ++v;
  }
  return v;
}

long dig(const PrimeContext& ctx, long long m) {
  if (m < 0) throw std::invalid_argument("dig: m must be >= 0");
  long s = 0;
  while (m > 0) {
    s += (long)(m % ctx.p);
    m /= ctx.p;
  }
  return s;
}

long long vp_range_sum(const PrimeContext& ctx, long long m1, long long m2) {
  if (m1 > m2) throw std::invalid_argument("vp_range_sum: requires m1 <= m2");
  if (m1 < 0) throw std::invalid_argument("vp_range_sum: requires m1 >= 0");
  long long a = m2 - dig(ctx, m2), b = m1 - dig(ctx, m1);
  return (a - b) / (ctx.p - 1);
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace ghost

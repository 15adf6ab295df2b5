// Exact p-adic valuations of integers, base-p digit sums, and the closed-form
// range sum of valuations. All arithmetic is exact; rationals are GMP mpq.
#pragma once

#include <gmpxx.h>

#include <string>

namespace ghost {

using Rat = mpq_class;

// Fixed prime p >= 7; primality is checked at construction.
struct PrimeContext {
  long p;
  explicit PrimeContext(long p_);
};

// Exponent of p in n (n != 0).
long vp(const PrimeContext& ctx, long long n);
long vp(const PrimeContext& ctx, const mpz_class& n);

// Sum of base-p digits of m >= 0.
long dig(const PrimeContext& ctx, long long m);

// Sum of vp(i) over m1 < i <= m2, via (m - Dig(m))/(p-1) at both endpoints.
long long vp_range_sum(const PrimeContext& ctx, long long m1, long long m2);

// Rational formatted as "num" or "num/den" (canonical form).
std::string rat_str(const Rat& r);

}  // namespace ghost

// Lower convex hulls of valuation data: construction from points, slope
// readouts, merge (hull of a product), stretch (hull of an m-th power),
// piecewise-linear values, prefix comparison, and truncation-stable prefixes.
#pragma once

#include "ghostlib/ghost.h"

#include <utility>
#include <vector>

namespace ghost {

struct NewtonPolygon {
  Rat base;                                  // value at x = 0
  std::vector<std::pair<long, Rat>> vertices;  // includes (0, base), x strictly increasing
  std::vector<Rat> slopes;                   // one per unit step, nondecreasing
  long confirmed_upto = 0;                   // slopes[0..confirmed_upto-1] certified
  long width() const { return (long)slopes.size(); }
  bool fully_confirmed() const { return confirmed_upto >= width(); }
};

// Lower hull of (0, ys[0]), (1, ys[1]), ...; all slopes reported as certain.
NewtonPolygon np_from_values(const std::vector<Rat>& ys);

// Lower hull of arbitrary points with strictly increasing integer x >= 0
// starting at 0 and unit-expressible widths.
NewtonPolygon np_from_points(const std::vector<std::pair<long, Rat>>& pts);

// Hull of a product: slope multiset union. Confirmation propagates through
// the last certified slope of each factor.
NewtonPolygon np_merge(const NewtonPolygon& a, const NewtonPolygon& b);

// Hull of an m-th power: x and y scaled by m; each unit slope repeats m times.
NewtonPolygon np_stretch(const NewtonPolygon& a, long m);

// Values of the polygon at integer x = 0..upto (piecewise-linear readout).
std::vector<Rat> h_values(const NewtonPolygon& a, long upto);

struct EqualUpto {
  bool equal;
  long first_divergence;  // meaningful when !equal: 0 = base mismatch,
                          // x >= 1 = first differing unit slope index + 1
};

// Compare base and the first x_max unit slopes; requires both polygons to be
// certified at least that far.
EqualUpto np_equal_upto(const NewtonPolygon& a, const NewtonPolygon& b, long x_max);

// Hull of the series valuations at w with a certified prefix: the series is
// computed to 2N, and the largest X <= N with hull(N) and hull(2N) agreeing
// on slopes[0..X-1] is recorded as confirmed_upto.
NewtonPolygon np_confirmed(const ModuleSpec& spec, const WStarProfile& w, long trunc,
                           bool dagger);

long confirmed_prefix(const ModuleSpec& spec, const WStarProfile& w, long trunc,
                      bool dagger);

}  // namespace ghost

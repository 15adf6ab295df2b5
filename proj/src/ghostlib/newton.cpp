#include "ghostlib/newton.h"

#include <algorithm>
#include <stdexcept>

namespace ghost {

namespace {

// Orientation of o -> a -> b; <= 0 means b is on or below the line o -> a.
int cross_sign(const std::pair<long, Rat>& o, const std::pair<long, Rat>& a,
               const std::pair<long, Rat>& b) {
  Rat lhs = Rat(a.first - o.first) * (b.second - o.second);
  Rat rhs = Rat(b.first - o.first) * (a.second - o.second);
  return sgn(lhs - rhs);
}

NewtonPolygon from_vertices(std::vector<std::pair<long, Rat>> hull) {
  NewtonPolygon np;
  np.base = hull.front().second;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    long run = hull[i + 1].first - hull[i].first;
    Rat slope = (hull[i + 1].second - hull[i].second) / run;
    for (long j = 0; j < run; ++j) np.slopes.push_back(slope);
  }
  np.vertices = std::move(hull);
  np.confirmed_upto = np.width();
  return np;
}

NewtonPolygon from_slopes(Rat base, const std::vector<Rat>& slopes, long confirmed) {
  NewtonPolygon np;
  np.base = base;
  np.slopes = slopes;
  np.confirmed_upto = confirmed;
  np.vertices.emplace_back(0, base);
  Rat y = base;
  for (size_t i = 0; i < slopes.size(); ++i) {
    y += slopes[i];
    bool last = (i + 1 == slopes.size());
    if (last || slopes[i + 1] != slopes[i]) {
      np.vertices.emplace_back((long)i + 1, y);
    }
  }
  return np;
}

}  // namespace

NewtonPolygon np_from_points(const std::vector<std::pair<long, Rat>>& pts) {
  if (pts.empty()) throw std::invalid_argument("hull of an empty point set");
  if (pts.front().first != 0) throw std::invalid_argument("hull points must start at x = 0");
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1].first <= pts[i].first) {
      throw std::invalid_argument("hull points must have strictly increasing x");
    }
  }
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2 &&
           cross_sign(hull[hull.size() - 2], hull[hull.size() - 1], pt) <= 0) {
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  return from_vertices(std::move(hull));
}

NewtonPolygon np_from_values(const std::vector<Rat>& ys) {
  std::vector<std::pair<long, Rat>> pts;
  pts.reserve(ys.size());
  for (size_t i = 0; i < ys.size(); ++i) pts.emplace_back((long)i, ys[i]);
  return np_from_points(pts);
}

NewtonPolygon np_merge(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<Rat> slopes;
  slopes.reserve(a.slopes.size() + b.slopes.size());
  std::merge(a.slopes.begin(), a.slopes.end(), b.slopes.begin(), b.slopes.end(),
             std::back_inserter(slopes));
  long confirmed = (long)slopes.size();
  // A factor certified only up to c constrains the merged hull: slopes of the
  // unknown tail are >= its last certified slope (hulls of truncations lie
  // above the limit hull), so merged slopes strictly below that stay correct.
  bool any_partial = false;
  bool any_unanchored = false;
  Rat tau;
  for (const NewtonPolygon* f : {&a, &b}) {
    if (f->fully_confirmed()) continue;
    if (f->confirmed_upto == 0) {
      any_unanchored = true;
      continue;
    }
    Rat last = f->slopes[f->confirmed_upto - 1];
    if (!any_partial || last < tau) tau = last;
    any_partial = true;
  }
  if (any_unanchored) {
    confirmed = 0;
  } else if (any_partial) {
    long cnt = 0;
    while (cnt < (long)slopes.size() && slopes[cnt] < tau) ++cnt;
    confirmed = cnt;
  }
  return from_slopes(a.base + b.base, slopes, confirmed);
}

NewtonPolygon np_stretch(const NewtonPolygon& a, long m) {
  if (m < 1) throw std::invalid_argument("stretch factor must be >= 1");
  std::vector<Rat> slopes;
  slopes.reserve(a.slopes.size() * m);
  for (const Rat& s : a.slopes) {
    for (long j = 0; j < m; ++j) slopes.push_back(s);
  }
  return from_slopes(Rat(m) * a.base, slopes, m * a.confirmed_upto);
}

std::vector<Rat> h_values(const NewtonPolygon& a, long upto) {
  if (upto < 0 || upto > a.width()) {
    throw std::invalid_argument("h_values range exceeds polygon width");
  }
  std::vector<Rat> out;
  out.reserve(upto + 1);
  Rat y = a.base;
  out.push_back(y);
  for (long i = 0; i < upto; ++i) {
    y += a.slopes[i];
    out.push_back(y);
  }
  return out;
}

EqualUpto np_equal_upto(const NewtonPolygon& a, const NewtonPolygon& b, long x_max) {
  if (x_max < 0 || x_max > a.confirmed_upto || x_max > b.confirmed_upto) {
    throw std::invalid_argument("comparison range exceeds a certified prefix");
  }
  if (a.base != b.base) return {false, 0};
  for (long i = 0; i < x_max; ++i) {
    if (a.slopes[i] != b.slopes[i]) return {false, i + 1};
  }
  return {true, -1};
}

NewtonPolygon np_confirmed(const ModuleSpec& spec, const WStarProfile& w, long trunc,
                           bool dagger) {
  if (trunc < 2) throw std::invalid_argument("confirmed prefix needs truncation >= 2");
  GhostSeries gs = series(spec, 2 * trunc, dagger);
  std::vector<Rat> ys = eval_valuations(gs, w);
  std::vector<Rat> ys_half(ys.begin(), ys.begin() + trunc + 1);
  NewtonPolygon half = np_from_values(ys_half);
  NewtonPolygon full = np_from_values(ys);
  long x = 0;
  long lim = std::min<long>(trunc, std::min(half.width(), full.width()));
  while (x < lim && half.slopes[x] == full.slopes[x]) ++x;
  half.confirmed_upto = x;
  return half;
}

long confirmed_prefix(const ModuleSpec& spec, const WStarProfile& w, long trunc,
                      bool dagger) {
  return np_confirmed(spec, w, trunc, dagger).confirmed_upto;
}

}  // namespace ghost

#include "ghostlib/zigzag.h"

#include "ghostlib/parallel.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ghost {

namespace {

bool in_s_set(const EpsilonChar& eps, long s) {
  long lo = (eps.k0 + 2) / 2;               // ceil((k0+1)/2)
  long hi = (eps.k0 - 4 + eps.p()) / 2;     // floor((k0-4+p)/2)
  return s >= lo && s <= hi;
}

void require_in_s(const EpsilonChar& eps, const std::vector<long>& s_tuple) {
  for (long s : s_tuple) {
    if (!in_s_set(eps, s)) {
      throw std::invalid_argument("tuple entry outside the admissible middle range");
    }
  }
}

// Component dagger polygons for a sorted tuple, distinct s computed once.
std::vector<NewtonPolygon> component_polygons(const EpsilonChar& eps,
                                              const std::vector<long>& sorted_tuple,
                                              const WStarProfile& w, long trunc) {
  std::map<long, NewtonPolygon> by_s;
  for (long s : sorted_tuple) {
    if (!by_s.count(s)) {
      by_s.emplace(s, np_confirmed(make_spec(eps, {{s, 1}}), w, trunc, true));
    }
  }
  std::vector<NewtonPolygon> out;
  out.reserve(sorted_tuple.size());
  for (long s : sorted_tuple) out.push_back(by_s.at(s));
  return out;
}

using ExpMap = std::vector<std::pair<long, long>>;

ExpMap add_maps(const ExpMap& a, const ExpMap& b) {
  ExpMap out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<long> partition(long n, long u) {
  if (u < 1) throw std::invalid_argument("partition needs u >= 1");
  if (n < 0) throw std::invalid_argument("partition needs n >= 0");
  long q = n / u, r = n % u;
  std::vector<long> parts;
  parts.reserve(u);
  if (q % 2 == 0) {
    parts.assign(u - r, q);
    parts.insert(parts.end(), r, q + 1);
  } else {
    parts.assign(r, q + 1);
    parts.insert(parts.end(), u - r, q);
  }
  return parts;
}

OddDominance is_odd_dominant(const EpsilonChar& eps, const std::vector<long>& values) {
  std::vector<long> setS = s_set(eps);
  if (values.size() != setS.size()) {
    throw std::invalid_argument("odd dominance map must cover the middle range");
  }
  auto pair_ok = [&](size_t i, size_t j) {
    long d = values[j] - values[i];
    if (d > 1 || d < -1) return false;
    if (d != 0 && values[j] % 2 == 0) return false;
    return true;
  };
  OddDominance consec{true, 0, 0};
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    if (!pair_ok(i, i + 1)) {
      consec = {false, setS[i], setS[i + 1]};
      break;
    }
  }
  OddDominance all{true, 0, 0};
  for (size_t i = 0; i < values.size() && all.ok; ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      if (!pair_ok(i, j)) {
        all = {false, setS[i], setS[j]};
        break;
      }
    }
  }
  if (consec.ok != all.ok) {
    throw std::logic_error("odd dominance: consecutive and all-pair checks disagree");
  }
  return all;
}

FactorizationResult factorization_check(const EpsilonChar& eps, std::vector<long> s_tuple,
                                        long trunc) {
  if (s_tuple.empty()) throw std::invalid_argument("tuple must be nonempty");
  require_in_s(eps, s_tuple);
  bool canonicalized = !std::is_sorted(s_tuple.begin(), s_tuple.end());
  std::sort(s_tuple.begin(), s_tuple.end());

  long u = (long)s_tuple.size();
  std::vector<std::pair<long, long>> joint_comps;
  for (long s : s_tuple) joint_comps.emplace_back(s, 1);
  SeriesEval joint(make_spec(eps, joint_comps), true);

  std::map<long, SeriesEval> comp_eval;
  for (long s : s_tuple) {
    comp_eval.emplace(s, SeriesEval(make_spec(eps, {{s, 1}}), true));
  }

  for (long n = 0; n <= trunc; ++n) {
    std::vector<long> parts = partition(n, u);
    ExpMap sum;
    for (long i = 0; i < u; ++i) {
      sum = add_maps(sum, comp_eval.at(s_tuple[i]).coeff(parts[i]).factors);
    }
    if (joint.coeff(n).factors != sum) {
      return {false, n, canonicalized};
    }
  }
  return {true, -1, canonicalized};
}

ZigzagVerdict zigzag_check(const EpsilonChar& eps, std::vector<long> s_tuple,
                           const WStarProfile& w, long trunc) {
  if (s_tuple.empty()) throw std::invalid_argument("tuple must be nonempty");
  require_in_s(eps, s_tuple);
  std::sort(s_tuple.begin(), s_tuple.end());

  ZigzagVerdict v{true, -1, -1, -1, 0, component_polygons(eps, s_tuple, w, trunc)};
  long window = trunc;
  for (const NewtonPolygon& np : v.components) {
    window = std::min(window, np.confirmed_upto);
  }
  v.window = window;

  long u = (long)s_tuple.size();
  for (long n = 0; n + 1 <= window && v.holds; ++n) {
    for (long i = 0; i < u && v.holds; ++i) {
      for (long j = i + 1; j < u; ++j) {
        const Rat& si = v.components[i].slopes[n];
        const Rat& sj = v.components[j].slopes[n];
        bool ok = (n % 2 == 1) ? (sj >= si) : (si >= sj);
        if (!ok) {
          v.holds = false;
          v.n = n;
          v.i = i;
          v.j = j;
          break;
        }
      }
    }
  }
  return v;
}

ConditionReport theorem_condition(const EpsilonChar& eps, const std::vector<long>& s_tuple) {
  if (s_tuple.empty()) throw std::invalid_argument("tuple must be nonempty");
  ConditionReport rep{true, true, -1};
  for (long s : s_tuple) {
    SParam sp = make_sparam(eps, s);
    if (!sp.generic) {
      rep.all_generic = false;
      if (rep.first_non_generic < 0) rep.first_non_generic = s;
    }
  }
  for (size_t i = 0; i < s_tuple.size() && rep.condition; ++i) {
    for (size_t j = i + 1; j < s_tuple.size(); ++j) {
      long si = s_tuple[i], sj = s_tuple[j];
      if (si != sj && mod_pm1(eps, si + sj) != mod_pm1(eps, eps.k0 - 1)) {
        rep.condition = false;
        break;
      }
    }
  }
  return rep;
}

CompareVerdict direct_sum_compare(const std::vector<ModuleSpec>& comps,
                                  const WStarProfile& w, long trunc, int jobs) {
  if (comps.empty()) throw std::invalid_argument("compare needs at least one component");
  ModuleSpec joint = comps[0];
  for (size_t i = 1; i < comps.size(); ++i) joint = spec_union(joint, comps[i]);

  std::vector<NewtonPolygon> polys = parallel_map<NewtonPolygon>(
      (long)comps.size() + 1, jobs, [&](long i) {
        if (i == 0) return np_confirmed(joint, w, trunc, true);
        return np_confirmed(comps[i - 1], w, trunc, true);
      });

  NewtonPolygon merged = polys[1];
  for (size_t i = 2; i < polys.size(); ++i) merged = np_merge(merged, polys[i]);

  long window = std::min(polys[0].confirmed_upto, merged.confirmed_upto);
  EqualUpto eq = np_equal_upto(polys[0], merged, window);
  if (eq.equal) return {true, -1, window};
  return {false, eq.first_divergence, window};
}

WitnessResult witness_search(const EpsilonChar& eps, const std::vector<long>& s_tuple,
                             const std::vector<WStarProfile>& profiles, long trunc,
                             int jobs) {
  if (s_tuple.empty()) throw std::invalid_argument("tuple must be nonempty");
  std::vector<ModuleSpec> comps;
  for (long s : s_tuple) comps.push_back(make_spec(eps, {{s, 1}}));

  long total = (long)profiles.size();
  long block = std::max<long>(jobs > 1 ? 2L * jobs : 8L, 8L);
  for (long start = 0; start < total; start += block) {
    long count = std::min(block, total - start);
    std::vector<CompareVerdict> verdicts = parallel_map<CompareVerdict>(
        count, jobs,
        [&](long i) { return direct_sum_compare(comps, profiles[start + i], trunc, 1); });
    for (long i = 0; i < count; ++i) {
      if (!verdicts[i].equal) {
        return {true, start + i, verdicts[i].x, start + i + 1};
      }
    }
  }
  return {false, -1, -1, total};
}

}  // namespace ghost

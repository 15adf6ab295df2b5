// Command-line front end: coefficient dumps, polygons, direct-sum comparison,
// the zigzag criterion, witness search over profile families, and the
// centered-invariant tables. JSON-lines or TSV output, exact rationals only.
#include "ghostlib/delta.h"
#include "ghostlib/parallel.h"
#include "ghostlib/zigzag.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using ojson = nlohmann::ordered_json;
using namespace ghost;

namespace {

long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_long(s));
  }
  long num = parse_long(s.substr(0, slash));
  long den = parse_long(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

// Spec grammar: parts joined by '+'; each part "s:<s>[x<mult>]" or
// "ab:<a>,<b>[,split][x<mult>]".
ModuleSpec parse_spec(const EpsilonChar& eps, const std::string& text) {
  std::vector<std::pair<long, long>> comps;
  for (const std::string& part : split(text, '+')) {
    std::string body = part;
    long mult = 1;
    auto xat = body.rfind('x');
    if (xat != std::string::npos && body.find("ab:") != 0) {
      mult = parse_long(body.substr(xat + 1));
      body = body.substr(0, xat);
    } else if (xat != std::string::npos && body.find(',') != std::string::npos &&
               xat > body.rfind(',')) {
      mult = parse_long(body.substr(xat + 1));
      body = body.substr(0, xat);
    }
    if (body.rfind("s:", 0) == 0) {
      comps.emplace_back(parse_long(body.substr(2)), mult);
    } else if (body.rfind("ab:", 0) == 0) {
      std::vector<std::string> fields = split(body.substr(3), ',');
      if (fields.size() < 2 || fields.size() > 3) {
        throw std::invalid_argument("spec part needs ab:<a>,<b>[,split]");
      }
      bool split_part = fields.size() == 3;
      if (split_part && fields[2] != "split") {
        throw std::invalid_argument("unknown ab modifier: " + fields[2]);
      }
      ModuleSpec sub = spec_from_rbar(
          eps, {RbarPart{parse_long(fields[0]), parse_long(fields[1]), split_part, mult}});
      comps.insert(comps.end(), sub.comps.begin(), sub.comps.end());
    } else {
      throw std::invalid_argument("spec part must start with s: or ab:");
    }
  }
  return make_spec(eps, std::move(comps));
}

// Profile grammar: "origin:t=<rat>", "k=<weight>:t=<rat>", or the sampling
// form "anchors=kb:<lo>..<hi>;t=<lo>..<hi>:step<rat>".
std::vector<WStarProfile> parse_profile(const EpsilonChar& eps, const std::string& text) {
  if (text.rfind("anchors=", 0) == 0) {
    std::vector<std::string> clauses = split(text.substr(8), ';');
    if (clauses.size() != 2 || clauses[0].rfind("kb:", 0) != 0 ||
        clauses[1].rfind("t=", 0) != 0) {
      throw std::invalid_argument("sampling form is anchors=kb:<lo>..<hi>;t=<lo>..<hi>:step<s>");
    }
    auto dots = clauses[0].find("..");
    if (dots == std::string::npos) throw std::invalid_argument("kb range needs ..");
    long kb_lo = parse_long(clauses[0].substr(3, dots - 3));
    long kb_hi = parse_long(clauses[0].substr(dots + 2));
    std::string trange = clauses[1].substr(2);
    auto stepat = trange.find(":step");
    if (stepat == std::string::npos) throw std::invalid_argument("t range needs :step");
    std::string lohi = trange.substr(0, stepat);
    auto tdots = lohi.find("..");
    if (tdots == std::string::npos) throw std::invalid_argument("t range needs ..");
    Rat t_lo = parse_rat(lohi.substr(0, tdots));
    Rat t_hi = parse_rat(lohi.substr(tdots + 2));
    Rat step = parse_rat(trange.substr(stepat + 5));
    if (step <= 0) throw std::invalid_argument("step must be > 0");
    std::vector<WStarProfile> out;
    for (long kb = kb_lo; kb <= kb_hi; ++kb) {
      for (Rat t = t_lo; t <= t_hi; t += step) {
        out.push_back(profile_at(eps, kb, t));
      }
    }
    return out;
  }
  auto tat = text.find(":t=");
  if (tat == std::string::npos) throw std::invalid_argument("profile needs :t=");
  Rat t = parse_rat(text.substr(tat + 3));
  std::string head = text.substr(0, tat);
  if (head == "origin") return {profile_origin(eps, t)};
  if (head.rfind("k=", 0) == 0) {
    WeightK k = weight_from_k(eps, parse_long(head.substr(2)));
    return {profile_at(eps, k.k_bullet, t)};
  }
  throw std::invalid_argument("profile anchor must be origin or k=<weight>");
}

std::vector<WStarProfile> parse_profiles(const EpsilonChar& eps,
                                         const std::vector<std::string>& texts) {
  std::vector<WStarProfile> out;
  for (const std::string& t : texts) {
    std::vector<WStarProfile> one = parse_profile(eps, t);
    out.insert(out.end(), one.begin(), one.end());
  }
  return out;
}

std::vector<long> flatten_tuple(const ModuleSpec& spec) {
  std::vector<long> out;
  for (const auto& [s, mult] : spec.comps) {
    for (long i = 0; i < mult; ++i) out.push_back(s);
  }
  return out;
}

std::string join_longs(const std::vector<long>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

ojson poly_json(const EpsilonChar&, const NewtonPolygon& np) {
  ojson j;
  j["base"] = rat_str(np.base);
  ojson verts = ojson::array();
  for (const auto& [x, y] : np.vertices) {
    verts.push_back(ojson::array({x, rat_str(y)}));
  }
  j["vertices"] = verts;
  ojson slopes = ojson::array();
  for (const Rat& s : np.slopes) slopes.push_back(rat_str(s));
  j["slopes"] = slopes;
  j["confirmed_upto"] = np.confirmed_upto;
  return j;
}

struct Options {
  long p = 0, c = 0, k0 = 0;
  long n = -1;
  std::string format = "json";
  int jobs = 0;
  bool dagger = false;
  long s = -1, kbullet = -1;
  std::vector<std::string> specs, profiles;
};

void add_char_flags(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "prime >= 7")->required();
  sub->add_option("--c", o.c, "twist exponent in [0, p-2]")->required();
  sub->add_option("--k0", o.k0, "weight-class representative in [2, p]")->required();
  sub->add_option("--format", o.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--jobs", o.jobs, "worker threads (default GHOST_JOBS or build default)");
}

int run_ghost(const Options& o, std::ostringstream& out) {
  EpsilonChar eps(PrimeContext(o.p), o.c, o.k0);
  ModuleSpec spec = parse_spec(eps, o.specs.at(0));
  long trunc = o.n < 0 ? 10 : o.n;
  GhostSeries gs = series(spec, trunc, o.dagger);
  for (const GhostCoefficient& gc : gs.coeffs) {
    if (o.format == "json") {
      ojson j;
      j["n"] = gc.n;
      ojson fs = ojson::array();
      for (const auto& [kb, e] : gc.factors) {
        ojson f;
        f["k"] = weight_from_kb(eps, kb).k;
        f["e"] = e;
        fs.push_back(f);
      }
      j["factors"] = fs;
      out << j.dump() << "\n";
    } else {
      out << gc.n << "\t";
      for (size_t i = 0; i < gc.factors.size(); ++i) {
        if (i) out << ",";
        out << weight_from_kb(eps, gc.factors[i].first).k << ":" << gc.factors[i].second;
      }
      out << "\n";
    }
  }
  return 0;
}

int run_np(const Options& o, std::ostringstream& out) {
  EpsilonChar eps(PrimeContext(o.p), o.c, o.k0);
  ModuleSpec spec = parse_spec(eps, o.specs.at(0));
  std::vector<WStarProfile> profs = parse_profiles(eps, o.profiles);
  long trunc = o.n < 0 ? 100 : o.n;
  for (const WStarProfile& w : profs) {
    NewtonPolygon np = np_confirmed(spec, w, trunc, o.dagger);
    if (o.format == "json") {
      out << poly_json(eps, np).dump() << "\n";
    } else {
      out << "profile\t" << profile_str(eps, w) << "\n";
      out << "base\t" << rat_str(np.base) << "\n";
      out << "slopes";
      for (const Rat& s : np.slopes) out << "\t" << rat_str(s);
      out << "\n";
      out << "confirmed_upto\t" << np.confirmed_upto << "\n";
    }
  }
  return 0;
}

int run_compare(const Options& o, std::ostringstream& out) {
  EpsilonChar eps(PrimeContext(o.p), o.c, o.k0);
  std::vector<ModuleSpec> comps;
  if (o.specs.size() > 1) {
    for (const std::string& s : o.specs) comps.push_back(parse_spec(eps, s));
  } else {
    ModuleSpec whole = parse_spec(eps, o.specs.at(0));
    for (long s : flatten_tuple(whole)) comps.push_back(make_spec(eps, {{s, 1}}));
  }
  ModuleSpec joint = comps[0];
  for (size_t i = 1; i < comps.size(); ++i) joint = spec_union(joint, comps[i]);
  std::vector<long> tuple = flatten_tuple(joint);

  std::vector<WStarProfile> profs = parse_profiles(eps, o.profiles);
  long trunc = o.n < 0 ? 200 : o.n;
  std::vector<CompareVerdict> verdicts = parallel_map<CompareVerdict>(
      (long)profs.size(), o.jobs,
      [&](long i) { return direct_sum_compare(comps, profs[i], trunc, 1); });

  bool any_diverge = false;
  for (size_t i = 0; i < profs.size(); ++i) {
    const CompareVerdict& v = verdicts[i];
    if (!v.equal) any_diverge = true;
    if (o.format == "json") {
      ojson j;
      j["s"] = tuple;
      j["profile"] = profile_str(eps, profs[i]);
      j["verdict"] = v.equal ? "equal" : "diverges";
      if (!v.equal) j["x"] = v.x;
      j["confirmed_upto"] = v.window;
      out << j.dump() << "\n";
    } else {
      out << "s=" << join_longs(tuple) << "\t" << profile_str(eps, profs[i]) << "\t"
          << (v.equal ? "equal" : "diverges") << "\t" << (v.equal ? -1 : v.x) << "\t"
          << v.window << "\n";
    }
  }
  return any_diverge ? 1 : 0;
}

int run_zigzag(const Options& o, std::ostringstream& out) {
  EpsilonChar eps(PrimeContext(o.p), o.c, o.k0);
  std::vector<long> tuple;
  for (const std::string& s : o.specs) {
    std::vector<long> part = flatten_tuple(parse_spec(eps, s));
    tuple.insert(tuple.end(), part.begin(), part.end());
  }
  std::sort(tuple.begin(), tuple.end());

  std::vector<WStarProfile> profs = parse_profiles(eps, o.profiles);
  long trunc = o.n < 0 ? 200 : o.n;
  std::vector<ZigzagVerdict> verdicts = parallel_map<ZigzagVerdict>(
      (long)profs.size(), o.jobs,
      [&](long i) { return zigzag_check(eps, tuple, profs[i], trunc); });

  bool any_fail = false;
  for (size_t i = 0; i < profs.size(); ++i) {
    const ZigzagVerdict& v = verdicts[i];
    if (!v.holds) any_fail = true;
    if (o.format == "json") {
      ojson j;
      j["s"] = tuple;
      j["profile"] = profile_str(eps, profs[i]);
      j["verdict"] = v.holds ? "holds" : "fails";
      if (!v.holds) {
        j["n"] = v.n;
        j["i"] = v.i;
        j["j"] = v.j;
      }
      j["window"] = v.window;
      out << j.dump() << "\n";
    } else {
      out << "s=" << join_longs(tuple) << "\t" << profile_str(eps, profs[i]) << "\t"
          << (v.holds ? "holds" : "fails") << "\t" << v.n << "\t" << v.i << "\t" << v.j
          << "\t" << v.window << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

int run_search(const Options& o, std::ostringstream& out) {
  EpsilonChar eps(PrimeContext(o.p), o.c, o.k0);
  std::vector<long> tuple;
  for (const std::string& s : o.specs) {
    std::vector<long> part = flatten_tuple(parse_spec(eps, s));
    tuple.insert(tuple.end(), part.begin(), part.end());
  }
  std::sort(tuple.begin(), tuple.end());

  std::vector<WStarProfile> profs = parse_profiles(eps, o.profiles);
  long trunc = o.n < 0 ? 200 : o.n;
  ConditionReport cond = theorem_condition(eps, tuple);
  WitnessResult res = witness_search(eps, tuple, profs, trunc, o.jobs);

  if (o.format == "json") {
    ojson head;
    head["s"] = tuple;
    head["condition"] = cond.condition;
    head["all_generic"] = cond.all_generic;
    head["convention"] = "companion pair (a,b) -> ({p-3-a},{a+b+1})";
    out << head.dump() << "\n";
    ojson j;
    if (res.found) {
      j["verdict"] = "witness";
      j["profile"] = profile_str(eps, profs[res.index]);
      j["x"] = res.x;
    } else {
      j["verdict"] = "none";
    }
    j["profiles_scanned"] = res.scanned;
    out << j.dump() << "\n";
  } else {
    out << "condition\t" << (cond.condition ? 1 : 0) << "\n";
    if (res.found) {
      out << "witness\t" << profile_str(eps, profs[res.index]) << "\t" << res.x << "\t"
          << res.scanned << "\n";
    } else {
      out << "none\t-\t-\t" << res.scanned << "\n";
    }
  }
  return res.found ? 1 : 0;
}

int run_delta(const Options& o, std::ostringstream& out) {
  EpsilonChar eps(PrimeContext(o.p), o.c, o.k0);
  if (o.s < 0) throw std::invalid_argument("delta needs --s");
  if (o.kbullet < 0) throw std::invalid_argument("delta needs --kbullet");
  SParam sp = make_sparam(eps, o.s);
  WeightK k = weight_from_kb(eps, o.kbullet);
  DeltaTable tab = delta_hull(sp, k);
  for (long ell = tab.ell_min; ell <= tab.ell_max; ++ell) {
    if (o.format == "json") {
      ojson j;
      j["ell"] = ell;
      j["delta"] = rat_str(tab.value(ell));
      j["hull"] = rat_str(tab.hull_at(ell));
      out << j.dump() << "\n";
    } else {
      out << ell << "\t" << rat_str(tab.value(ell)) << "\t" << rat_str(tab.hull_at(ell))
          << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local ghost series, Newton polygons, and slope criteria"};
  app.require_subcommand(1);

  Options o;
  o.jobs = default_jobs();

  CLI::App* ghost_cmd = app.add_subcommand("ghost", "coefficient factorizations");
  add_char_flags(ghost_cmd, o);
  ghost_cmd->add_option("--spec", o.specs, "module spec, e.g. s:3x2+s:0")->required();
  ghost_cmd->add_option("--n", o.n, "top coefficient index");
  ghost_cmd->add_flag("--dagger", o.dagger, "use dagger dimensions");

  CLI::App* np_cmd = app.add_subcommand("np", "Newton polygon at a point");
  add_char_flags(np_cmd, o);
  np_cmd->add_option("--spec", o.specs, "module spec")->required();
  np_cmd->add_option("--profile", o.profiles, "point profile")->required();
  np_cmd->add_option("--n", o.n, "truncation (>= 2)");
  np_cmd->add_flag("--dagger", o.dagger, "use dagger series");

  CLI::App* cmp_cmd = app.add_subcommand("compare", "direct sum vs merged components");
  add_char_flags(cmp_cmd, o);
  cmp_cmd->add_option("--spec", o.specs, "components (repeat flag) or one spec to split")
      ->required();
  cmp_cmd->add_option("--profile", o.profiles, "profiles or sampling family")->required();
  cmp_cmd->add_option("--n", o.n, "truncation");

  CLI::App* zz_cmd = app.add_subcommand("zigzag", "parity-alternating slope criterion");
  add_char_flags(zz_cmd, o);
  zz_cmd->add_option("--spec", o.specs, "tuple spec, e.g. s:4+s:5")->required();
  zz_cmd->add_option("--profile", o.profiles, "profiles or sampling family")->required();
  zz_cmd->add_option("--n", o.n, "truncation");

  CLI::App* search_cmd = app.add_subcommand("search", "scan profiles for a divergence");
  add_char_flags(search_cmd, o);
  search_cmd->add_option("--spec", o.specs, "tuple spec")->required();
  search_cmd->add_option("--profile", o.profiles, "profiles or sampling family")->required();
  search_cmd->add_option("--n", o.n, "truncation");

  CLI::App* delta_cmd = app.add_subcommand("delta", "centered values and their hull");
  add_char_flags(delta_cmd, o);
  delta_cmd->add_option("--s", o.s, "s parameter")->required();
  delta_cmd->add_option("--kbullet", o.kbullet, "k_bullet of the center weight")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream out;
  int code = 0;
  try {
    if (app.got_subcommand(ghost_cmd)) {
      code = run_ghost(o, out);
    } else if (app.got_subcommand(np_cmd)) {
      code = run_np(o, out);
    } else if (app.got_subcommand(cmp_cmd)) {
      code = run_compare(o, out);
    } else if (app.got_subcommand(zz_cmd)) {
      code = run_zigzag(o, out);
    } else if (app.got_subcommand(search_cmd)) {
      code = run_search(o, out);
    } else if (app.got_subcommand(delta_cmd)) {
      if (delta_cmd->count("--format") == 0) o.format = "tsv";  // table default
      code = run_delta(o, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << out.str();
  return code;
}

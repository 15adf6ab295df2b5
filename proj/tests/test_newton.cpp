#include "doctest.h"
#include "oracles.h"

#include "ghostlib/newton.h"

#include <algorithm>

using namespace ghost;

namespace {

// Deterministic small rationals for hull fuzzing.
struct Lcg {
  unsigned long state;
  long next(long lo, long hi) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + (long)((state >> 33) % (unsigned long)(hi - lo + 1));
  }
};

std::vector<Rat> random_values(Lcg& g, long n) {
  std::vector<Rat> ys;
  for (long i = 0; i < n; ++i) {
    Rat r(g.next(-40, 40), g.next(1, 6));
    r.canonicalize();
    ys.push_back(r);
  }
  return ys;
}

NewtonPolygon from_slopes(const Rat& base, std::vector<Rat> slopes, long confirmed) {
  std::vector<Rat> ys = {base};
  for (auto& s : slopes) ys.push_back(ys.back() + s);
  NewtonPolygon np = np_from_values(ys);
  np.confirmed_upto = confirmed;
  return np;
}

}  // namespace

TEST_CASE("hull construction matches the chord characterization") {
  Lcg g{2024};
  for (int trial = 0; trial < 100; ++trial) {
    long n = g.next(1, 24);
    std::vector<Rat> ys = random_values(g, n + 1);
    NewtonPolygon np = np_from_values(ys);
    CHECK(np.base == ys[0]);
    CHECK(np.width() == n);
    CHECK(np.confirmed_upto == n);
    CHECK(np.vertices == oracle::o_hull_vertices(ys));
    std::vector<Rat> hv = h_values(np, n);
    std::vector<Rat> want = oracle::o_hull_values(ys);
    REQUIRE(hv.size() == want.size());
    for (size_t i = 0; i < hv.size(); ++i) CHECK(hv[i] == want[i]);
    for (long i = 0; i + 1 < np.width(); ++i) CHECK(np.slopes[i] <= np.slopes[i + 1]);
    // every data point lies on or above the hull
    for (long x = 0; x <= n; ++x) CHECK(ys[x] >= hv[x]);
  }
}

TEST_CASE("vertex structure") {
  std::vector<Rat> ys = {Rat(0), Rat(5), Rat(1), Rat(1), Rat(6)};
  NewtonPolygon np = np_from_values(ys);
  REQUIRE(np.vertices.size() == 3);
  CHECK(np.vertices[0] == std::pair<long, Rat>(0, Rat(0)));
  CHECK(np.vertices[1] == std::pair<long, Rat>(3, Rat(1)));
  CHECK(np.vertices[2] == std::pair<long, Rat>(4, Rat(6)));
  Rat third(1, 3);
  third.canonicalize();
  CHECK(np.slopes == std::vector<Rat>{third, third, third, Rat(5)});
}

TEST_CASE("point-list validation") {
  CHECK_THROWS_AS(np_from_points({}), std::invalid_argument);
  CHECK_THROWS_AS(np_from_points({{1, Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(np_from_points({{0, Rat(0)}, {2, Rat(1)}, {2, Rat(2)}}),
                  std::invalid_argument);
  NewtonPolygon np = np_from_points({{0, Rat(1)}, {3, Rat(4)}});
  CHECK(np.width() == 3);
  CHECK(np.slopes == std::vector<Rat>(3, Rat(1)));
}

TEST_CASE("merge is the sorted union of slopes") {
  Lcg g{77};
  for (int trial = 0; trial < 50; ++trial) {
    NewtonPolygon a = np_from_values(random_values(g, g.next(2, 12)));
    NewtonPolygon b = np_from_values(random_values(g, g.next(2, 12)));
    NewtonPolygon ab = np_merge(a, b);
    CHECK(ab.base == a.base + b.base);
    std::vector<Rat> all = a.slopes;
    all.insert(all.end(), b.slopes.begin(), b.slopes.end());
    std::sort(all.begin(), all.end());
    CHECK(ab.slopes == all);
    CHECK(ab.confirmed_upto == ab.width());  // both factors fully certified
    // commutative, and associative on a third factor
    NewtonPolygon ba = np_merge(b, a);
    CHECK(ab.slopes == ba.slopes);
    CHECK(ab.base == ba.base);
    NewtonPolygon c = np_from_values(random_values(g, g.next(2, 8)));
    NewtonPolygon l = np_merge(np_merge(a, b), c);
    NewtonPolygon r = np_merge(a, np_merge(b, c));
    CHECK(l.slopes == r.slopes);
    CHECK(l.base == r.base);
    CHECK(l.vertices == r.vertices);
  }
}

TEST_CASE("merge with a width-zero polygon shifts the base") {
  NewtonPolygon a = np_from_values({Rat(1), Rat(2), Rat(5)});
  NewtonPolygon unit = np_from_values({Rat(7)});
  NewtonPolygon m = np_merge(a, unit);
  CHECK(m.base == Rat(8));
  CHECK(m.slopes == a.slopes);
  CHECK(m.confirmed_upto == a.confirmed_upto);
}

TEST_CASE("merging a polygon with itself is the square") {
  NewtonPolygon a = np_from_values({Rat(0), Rat(1), Rat(3), Rat(7)});
  NewtonPolygon sq = np_merge(a, a);
  NewtonPolygon st = np_stretch(a, 2);
  CHECK(sq.base == st.base);
  CHECK(sq.slopes == st.slopes);
  CHECK(sq.vertices == st.vertices);
  CHECK(st.confirmed_upto == 2 * a.confirmed_upto);
}

TEST_CASE("stretch validation and scaling") {
  NewtonPolygon a = np_from_values({Rat(1), Rat(2)});
  CHECK_THROWS_AS(np_stretch(a, 0), std::invalid_argument);
  NewtonPolygon t = np_stretch(a, 3);
  CHECK(t.base == Rat(3));
  CHECK(t.slopes == std::vector<Rat>(3, Rat(1)));
  CHECK(t.vertices.back() == std::pair<long, Rat>(3, Rat(6)));
}

TEST_CASE("partial certification flows through merge by the last certified slope") {
  // factor a: slopes 1,2,5 with only 1,2 certified; factor b fully certified 0,3.
  NewtonPolygon a = from_slopes(Rat(0), {Rat(1), Rat(2), Rat(5)}, 2);
  NewtonPolygon b = from_slopes(Rat(0), {Rat(0), Rat(3)}, 2);
  NewtonPolygon m = np_merge(a, b);
  CHECK(m.slopes == std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)});
  // certified through slopes strictly below a's last certified slope 2
  CHECK(m.confirmed_upto == 2);

  // fully certifying a certifies the whole product
  a.confirmed_upto = 3;
  CHECK(np_merge(a, b).confirmed_upto == 5);

  // a factor with no certified slopes poisons the product
  a.confirmed_upto = 0;
  CHECK(np_merge(a, b).confirmed_upto == 0);

  // with a longer partial factor the cut sits at its last certified slope
  NewtonPolygon c = from_slopes(Rat(0), {Rat(1), Rat(2), Rat(5), Rat(6)}, 3);
  NewtonPolygon mc = np_merge(c, b);  // slopes 0,1,2,3,5,6; certified below 5
  CHECK(mc.confirmed_upto == 4);
}

TEST_CASE("prefix comparison") {
  NewtonPolygon a = from_slopes(Rat(0), {Rat(1), Rat(2), Rat(5)}, 3);
  NewtonPolygon b = from_slopes(Rat(0), {Rat(1), Rat(2), Rat(7)}, 3);
  CHECK(np_equal_upto(a, b, 2).equal);
  EqualUpto e = np_equal_upto(a, b, 3);
  CHECK(!e.equal);
  CHECK(e.first_divergence == 3);
  NewtonPolygon c = from_slopes(Rat(1), {Rat(1)}, 1);
  EqualUpto eb = np_equal_upto(a, c, 1);
  CHECK(!eb.equal);
  CHECK(eb.first_divergence == 0);
  CHECK_THROWS_AS(np_equal_upto(a, b, 4), std::invalid_argument);
  b.confirmed_upto = 1;
  CHECK_THROWS_AS(np_equal_upto(a, b, 2), std::invalid_argument);
}

TEST_CASE("series hulls carry a truncation-stable certified prefix") {
  EpsilonChar eps(PrimeContext(7), 0, 4);
  ModuleSpec spec = make_spec(eps, {{3, 1}});
  Rat half(1, 2);
  half.canonicalize();
  WStarProfile w = profile_origin(eps, half);
  NewtonPolygon np = np_confirmed(spec, w, 30, false);
  CHECK(np.width() == 30);
  CHECK(np.confirmed_upto <= 30);
  CHECK(np.confirmed_upto >= 1);
  // deterministic
  NewtonPolygon np2 = np_confirmed(spec, w, 30, false);
  CHECK(np.slopes == np2.slopes);
  CHECK(np.confirmed_upto == np2.confirmed_upto);
  CHECK(confirmed_prefix(spec, w, 30, false) == np.confirmed_upto);
  // the certified slopes really are stable under further doubling
  NewtonPolygon big = np_confirmed(spec, w, 60, false);
  for (long i = 0; i < np.confirmed_upto; ++i) CHECK(np.slopes[i] == big.slopes[i]);
  CHECK_THROWS_AS(np_confirmed(spec, w, 1, false), std::invalid_argument);
}

TEST_CASE("hull examples at fixed points") {
  EpsilonChar eps(PrimeContext(7), 0, 4);
  ModuleSpec spec = make_spec(eps, {{3, 1}});

  Rat half(1, 2);
  half.canonicalize();
  NewtonPolygon origin = np_confirmed(spec, profile_origin(eps, half), 10, false);
  REQUIRE(origin.confirmed_upto == 10);
  std::vector<Rat> expect;
  for (const char* s : {"3/2", "5/2", "4", "5", "13/2", "15/2", "9", "21/2", "23/2", "13"}) {
    Rat r(s);
    r.canonicalize();
    expect.push_back(r);
  }
  CHECK(origin.slopes == expect);

  WStarProfile w = profile_at(eps, 2, Rat(3));
  NewtonPolygon anchored = np_confirmed(spec, w, 10, false);
  REQUIRE(anchored.confirmed_upto == 10);
  std::vector<Rat> anchored_expect = {Rat(5),  Rat(7),  Rat(7),  Rat(9),  Rat(15),
                                      Rat(18), Rat(21), Rat(25), Rat(27), Rat(29)};
  CHECK(anchored.slopes == anchored_expect);

  // dagger hull = one zero slope, then the plain slopes (index shift by 1)
  NewtonPolygon dag = np_confirmed(spec, w, 10, true);
  REQUIRE(dag.confirmed_upto == 10);
  CHECK(dag.slopes[0] == Rat(0));
  for (long i = 0; i + 1 < 10; ++i) CHECK(dag.slopes[i + 1] == anchored.slopes[i]);
}

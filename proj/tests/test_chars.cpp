#include "doctest.h"
#include "oracles.h"

#include "ghostlib/chars.h"

#include <algorithm>

using namespace ghost;

namespace {
EpsilonChar eps74() { return EpsilonChar(PrimeContext(7), 0, 4); }
}  // namespace

TEST_CASE("character data validation") {
  CHECK_THROWS_WITH_AS(EpsilonChar(PrimeContext(7), -1, 4), "c must lie in [0, p-2]",
                       std::invalid_argument);
  CHECK_THROWS_AS(EpsilonChar(PrimeContext(7), 6, 4), std::invalid_argument);
  CHECK_THROWS_AS(EpsilonChar(PrimeContext(7), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(EpsilonChar(PrimeContext(7), 0, 8), std::invalid_argument);
  CHECK_NOTHROW(EpsilonChar(PrimeContext(7), 5, 7));
  CHECK_NOTHROW(EpsilonChar(PrimeContext(7), 0, 2));
}

TEST_CASE("weights in the class") {
  EpsilonChar eps = eps74();
  CHECK(weight_from_kb(eps, 0).k == 4);
  CHECK(weight_from_kb(eps, 2).k == 16);
  CHECK(weight_from_k(eps, 16).k_bullet == 2);
  CHECK_THROWS_AS(weight_from_k(eps, 15), std::invalid_argument);  // wrong residue
  CHECK_THROWS_AS(weight_from_k(eps, -2), std::invalid_argument);
  CHECK_THROWS_AS(weight_from_kb(eps, -1), std::invalid_argument);

  EpsilonChar eps2(PrimeContext(7), 0, 2);
  CHECK(weight_from_k(eps2, 2).k_bullet == 0);
}

TEST_CASE("parameterization of eps-related pairs") {
  EpsilonChar eps = eps74();
  // iota(s) = ({k0-2-2s}, {c+s})
  CHECK(iota(eps, 3) == std::make_pair(2L, 3L));
  CHECK(iota(eps, 0) == std::make_pair(2L, 0L));
  CHECK(eps_related(eps, 2, 3));
  CHECK(eps_related(eps, 0, 1));
  CHECK_FALSE(eps_related(eps, 1, 1));
  CHECK(iota_inv(eps, 2, 3) == 3);
  CHECK_THROWS_AS(iota_inv(eps, 1, 1), std::invalid_argument);

  for (long s = 0; s <= 5; ++s) {
    auto [a, b] = iota(eps, s);
    CHECK(eps_related(eps, a, b));
    CHECK(iota_inv(eps, a, b) == s);
  }

  EpsilonChar epsc(PrimeContext(11), 4, 6);
  for (long s = 0; s <= 9; ++s) {
    auto [a, b] = iota(epsc, s);
    CHECK(eps_related(epsc, a, b));
    CHECK(iota_inv(epsc, a, b) == s);
  }
}

TEST_CASE("companion pairing") {
  EpsilonChar eps = eps74();
  CHECK(companion(eps, 3) == 0);
  CHECK(companion(eps, 0) == 3);
  for (long s = 0; s <= 5; ++s) CHECK(companion(eps, companion(eps, s)) == s);

  // boundary class k0 = p: the involution fixes s = 0
  EpsilonChar eps7(PrimeContext(7), 0, 7);
  CHECK(companion(eps7, 0) == 0);
  CHECK(companion(eps7, 4) == 2);
}

TEST_CASE("middle range S") {
  CHECK(s_set(eps74()) == std::vector<long>{3});
  CHECK(s_set(EpsilonChar(PrimeContext(7), 0, 2)) == std::vector<long>{2});
  CHECK(s_set(EpsilonChar(PrimeContext(7), 0, 7)) == std::vector<long>{4, 5});
  CHECK(s_set(EpsilonChar(PrimeContext(11), 0, 4)) == std::vector<long>{3, 4, 5});
  for (long p : {7L, 11L, 13L}) {
    for (long k0 = 2; k0 <= p; ++k0) {
      EpsilonChar eps(PrimeContext(p), 0, k0);
      std::vector<long> S = s_set(eps);
      CHECK(!S.empty());
      CHECK(S.front() == (k0 + 2) / 2);
      CHECK(S.back() == (k0 - 4 + p) / 2);
    }
  }
}

TEST_CASE("ghost zero distances") {
  EpsilonChar eps = eps74();
  WeightK k16 = weight_from_k(eps, 16);
  WeightK k10 = weight_from_k(eps, 10);
  WeightK k58 = weight_from_k(eps, 58);
  CHECK(wdist(eps, k16, k10) == Rat(1));
  CHECK(wdist(eps, k16, k58) == Rat(2));  // 58-16 = 42 = 6*7
  CHECK(wdist(eps, k10, k16) == Rat(1));
  CHECK_THROWS_AS(wdist(eps, k16, k16), std::invalid_argument);
}

TEST_CASE("profile construction and validation") {
  EpsilonChar eps = eps74();
  Rat half(1, 2);
  half.canonicalize();
  CHECK_THROWS_WITH_AS(profile_origin(eps, Rat(0)), "profile t must be > 0",
                       std::invalid_argument);
  CHECK_THROWS_AS(profile_at(eps, 2, Rat(-1)), std::invalid_argument);
  CHECK_THROWS_AS(profile_at(eps, -1, Rat(1)), std::invalid_argument);
  CHECK(profile_str(eps, profile_origin(eps, half)) == "origin:t=1/2");
  CHECK(profile_str(eps, profile_at(eps, 2, Rat(3))) == "k=16:t=3/1");
}

TEST_CASE("profile evaluation matches the ultrametric oracle") {
  for (long p : {7L, 11L}) {
    for (long k0 : {2L, 4L, p}) {
      EpsilonChar eps(PrimeContext(p), 0, k0);
      std::vector<std::pair<bool, long>> anchors = {
          {true, 0}, {false, 0}, {false, 1}, {false, 5}, {false, 49}};
      std::vector<Rat> ts;
      ts.push_back(Rat(1));
      ts.push_back(Rat(3));
      Rat t13(1, 3), t72(7, 2);
      t13.canonicalize();
      t72.canonicalize();
      ts.push_back(t13);
      ts.push_back(t72);
      for (auto [at_origin, akb] : anchors) {
        for (const Rat& t : ts) {
          WStarProfile w = at_origin ? profile_origin(eps, t) : profile_at(eps, akb, t);
          oracle::OProfile ow{at_origin, akb, t};
          for (long kb = 0; kb <= 60; ++kb) {
            WeightK k = weight_from_kb(eps, kb);
            CHECK(profile_eval(eps, w, k) == oracle::o_profile_eval(p, k0, ow, kb));
          }
        }
      }
    }
  }
}

TEST_CASE("profile distances satisfy the ultrametric inequality") {
  EpsilonChar eps(PrimeContext(11), 3, 5);
  WStarProfile w = profile_at(eps, 7, Rat(4));
  for (long kb1 = 0; kb1 < 40; ++kb1) {
    for (long kb2 = kb1 + 1; kb2 <= 40; ++kb2) {
      WeightK a = weight_from_kb(eps, kb1);
      WeightK b = weight_from_kb(eps, kb2);
      Rat va = profile_eval(eps, w, a);
      Rat vb = profile_eval(eps, w, b);
      Rat d = wdist(eps, a, b);
      // v(w_a - w_b) >= min of the two point distances, equality when they differ
      CHECK(d >= std::min(va, vb));
      if (va != vb) CHECK(d == std::min(va, vb));
    }
  }
}

TEST_CASE("anchor at weight 2 behaves like the origin") {
  EpsilonChar eps(PrimeContext(7), 0, 2);
  Rat t(5, 2);
  t.canonicalize();
  WStarProfile at0 = profile_at(eps, 0, t);  // anchor weight is 2
  WStarProfile orig = profile_origin(eps, t);
  for (long kb = 0; kb <= 50; ++kb) {
    WeightK k = weight_from_kb(eps, kb);
    CHECK(profile_eval(eps, at0, k) == profile_eval(eps, orig, k));
  }
}

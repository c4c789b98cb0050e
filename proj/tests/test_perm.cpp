#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "permclass/perm.hpp"

using namespace permclass;

namespace {

// Independent containment check: enumerate index subsequences directly.
bool naive_contains(const Perm& pat, const Perm& host) {
  const int k = pat.size(), n = host.size();
  if (k > n) return false;
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int j, int start) {
    if (j == k) {
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
          if ((pat[a + 1] < pat[b + 1]) != (host[idx[a]] < host[idx[b]])) return false;
        }
      }
      return true;
    }
    for (int t = start; t <= n; ++t) {
      idx[j] = t;
      if (rec(j + 1, t + 1)) return true;
    }
    return false;
  };
  return rec(0, 1);
}

std::vector<Perm> perms_up_to(int n) {
  std::vector<Perm> out;
  for (int k = 1; k <= n; ++k) {
    for (const Perm& p : all_perms(k)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("parse and str round-trip") {
  CHECK(Perm::parse("2413").values() == std::vector<int>{2, 4, 1, 3});
  CHECK(Perm::parse("1").size() == 1);
  CHECK(Perm::parse("2413").str() == "2413");
  Perm big = Perm::parse("10,2,3,4,5,6,7,8,9,1");
  CHECK(big.size() == 10);
  CHECK(big[1] == 10);
  CHECK(big.str() == "10,2,3,4,5,6,7,8,9,1");
  CHECK(Perm::parse(big.str()) == big);
  CHECK(Perm::identity(4) == Perm::parse("1234"));
  CHECK(Perm::decreasing(4) == Perm::parse("4321"));

  CHECK_THROWS_AS(Perm::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("121"), std::invalid_argument);   // repeated value
  CHECK_THROWS_AS(Perm::parse("13"), std::invalid_argument);    // not 1..n
  CHECK_THROWS_AS(Perm::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("a"), std::invalid_argument);
}

TEST_CASE("flatten rank-normalizes") {
  CHECK(flatten({9, 1, 6, 7, 2}) == Perm::parse("51342"));
  CHECK(flatten({5}) == Perm::parse("1"));
  CHECK(flatten({-3, 10, 0}) == Perm::parse("132"));
}

TEST_CASE("containment: pinned examples") {
  CHECK(contains(Perm::parse("51342"), Perm::parse("491867532")));
  CHECK(contains(Perm::parse("1"), Perm::parse("51342")));
  CHECK_FALSE(contains(Perm::parse("21"), Perm::parse("12")));
  CHECK_FALSE(contains(Perm::parse("123"), Perm::parse("321")));
}

TEST_CASE("containment agrees with naive subsequence search") {
  auto patterns = perms_up_to(4);
  auto hosts = perms_up_to(6);
  for (const Perm& pat : patterns) {
    for (const Perm& host : hosts) {
      CAPTURE(pat.str());
      CAPTURE(host.str());
      REQUIRE(contains(pat, host) == naive_contains(pat, host));
    }
  }
}

TEST_CASE("containment is a partial order at small scale") {
  for (const Perm& p : perms_up_to(6)) CHECK(contains(p, p));
  // Antisymmetry: distinct same-length permutations never contain each other,
  // and a longer one never embeds into a shorter one.
  for (const Perm& p : all_perms(6)) {
    for (const Perm& q : all_perms(6)) {
      if (!(p == q)) CHECK_FALSE((contains(p, q) && contains(q, p)));
    }
  }
  // Transitivity on nested length triples.
  for (const Perm& p : perms_up_to(3)) {
    for (const Perm& q : all_perms(4)) {
      if (!contains(p, q)) continue;
      for (const Perm& r : all_perms(5)) {
        if (contains(q, r)) CHECK(contains(p, r));
      }
    }
  }
}

TEST_CASE("proper intervals") {
  auto ivs = proper_intervals(Perm::parse("479832156"));
  CHECK(std::find(ivs.begin(), ivs.end(), std::make_pair(2, 4)) != ivs.end());
  CHECK(proper_intervals(Perm::parse("2413")).empty());
  CHECK(proper_intervals(Perm::parse("123")) ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(proper_intervals(Perm::parse("1")).empty());
}

TEST_CASE("simplicity and simple counts") {
  CHECK(is_simple(Perm::parse("2413")));
  CHECK(is_simple(Perm::parse("3142")));
  CHECK_FALSE(is_simple(Perm::parse("479832156")));
  CHECK(is_simple(Perm::parse("1")));
  CHECK(is_simple(Perm::parse("12")));
  CHECK(is_simple(Perm::parse("21")));
  CHECK_FALSE(is_simple(Perm::parse("123")));

  const std::vector<int> expected{1, 2, 0, 2, 6, 46};
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    for (const Perm& p : all_perms(n)) {
      if (is_simple(p)) ++count;
    }
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("inflation") {
  CHECK(inflate(Perm::parse("2413"),
                {Perm::parse("1"), Perm::parse("132"), Perm::parse("321"),
                 Perm::parse("12")}) == Perm::parse("479832156"));
  CHECK(inflate(Perm::parse("1"), {Perm::parse("132")}) == Perm::parse("132"));
  CHECK(inflate(Perm::parse("12"), {Perm::parse("1"), Perm::parse("1")}) ==
        Perm::parse("12"));
  CHECK_THROWS_AS(inflate(Perm::parse("12"), {Perm::parse("1")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(inflate(Perm::parse("12"), {Perm::parse("1"), Perm()}),
                  std::invalid_argument);
}

TEST_CASE("substitution decomposition: pinned examples") {
  auto [skel, kids] = decompose(Perm::parse("479832156"));
  CHECK(skel == Perm::parse("2413"));
  REQUIRE(kids.size() == 4);
  CHECK(kids[0] == Perm::parse("1"));
  CHECK(kids[1] == Perm::parse("132"));
  CHECK(kids[2] == Perm::parse("321"));
  CHECK(kids[3] == Perm::parse("12"));

  auto [s2, k2] = decompose(Perm::parse("123"));
  CHECK(s2 == Perm::parse("12"));
  REQUIRE(k2.size() == 2);
  CHECK(k2[0] == Perm::parse("1"));
  CHECK(k2[1] == Perm::parse("12"));

  auto [s3, k3] = decompose(Perm::parse("2413"));
  CHECK(s3 == Perm::parse("2413"));
  CHECK(k3 == std::vector<Perm>(4, Perm::parse("1")));

  auto [s4, k4] = decompose(Perm::parse("1"));
  CHECK(s4 == Perm::parse("1"));
  CHECK(k4 == std::vector<Perm>{Perm::parse("1")});
}

TEST_CASE("decomposition round-trips and respects the canonical form") {
  for (int n = 1; n <= 8; ++n) {
    for (const Perm& p : all_perms(n)) {
      auto [skel, kids] = decompose(p);
      CAPTURE(p.str());
      REQUIRE(is_simple(skel));
      if (n > 1) REQUIRE(inflate(skel, kids) == p);
      if (skel == Perm::parse("12")) REQUIRE(is_sum_indecomposable(kids[0]));
      if (skel == Perm::parse("21")) REQUIRE(is_skew_indecomposable(kids[0]));
      if (skel.size() >= 4) {
        for (const Perm& c : kids) REQUIRE(!c.empty());
      }
    }
  }
}

TEST_CASE("sum and skew components") {
  CHECK(is_sum_indecomposable(Perm::parse("21")));
  CHECK_FALSE(is_sum_indecomposable(Perm::parse("12")));
  CHECK(is_skew_indecomposable(Perm::parse("12")));
  CHECK_FALSE(is_skew_indecomposable(Perm::parse("21")));
  CHECK(is_sum_indecomposable(Perm::parse("2413")));
  CHECK(is_skew_indecomposable(Perm::parse("2413")));

  auto sc = sum_components(Perm::parse("123"));
  CHECK(sc == std::vector<Perm>(3, Perm::parse("1")));
  auto kc = skew_components(Perm::parse("321"));
  CHECK(kc == std::vector<Perm>(3, Perm::parse("1")));
  auto mixed = sum_components(Perm::parse("21453"));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == Perm::parse("21"));
  CHECK(mixed[1] == Perm::parse("231"));

  for (const Perm& p : perms_up_to(6)) {
    CHECK(direct_sum(sum_components(p)) == p);
    CHECK(skew_sum(skew_components(p)) == p);
    for (const Perm& c : sum_components(p)) CHECK(is_sum_indecomposable(c));
    for (const Perm& c : skew_components(p)) CHECK(is_skew_indecomposable(c));
  }
}

TEST_CASE("middle greedy 321 decomposition") {
  auto r1 = middle_greedy_321(Perm::parse("321"));
  REQUIRE(r1.has_value());
  CHECK((*r1)[0] == Perm::parse("1"));
  CHECK((*r1)[1] == Perm::parse("1"));
  CHECK((*r1)[2] == Perm::parse("1"));

  auto r2 = middle_greedy_321(Perm::parse("4321"));
  REQUIRE(r2.has_value());
  CHECK((*r2)[0] == Perm::parse("1"));
  CHECK((*r2)[1] == Perm::parse("21"));
  CHECK((*r2)[2] == Perm::parse("1"));

  CHECK_FALSE(middle_greedy_321(Perm::parse("3412")).has_value());  // 21[12,12]
  CHECK_THROWS_AS(middle_greedy_321(Perm::parse("2143")), std::invalid_argument);
  CHECK_THROWS_AS(middle_greedy_321(Perm::parse("12")), std::invalid_argument);

  for (const Perm& p : perms_up_to(7)) {
    if (is_skew_indecomposable(p)) continue;
    auto chain = skew_components(p);
    auto r = middle_greedy_321(p);
    if (chain.size() == 2) {
      CHECK_FALSE(r.has_value());
    } else {
      REQUIRE(r.has_value());
      CHECK(inflate(Perm::parse("321"), {(*r)[0], (*r)[1], (*r)[2]}) == p);
      CHECK(is_skew_indecomposable((*r)[0]));
      CHECK(is_skew_indecomposable((*r)[2]));
      // Maximal middle part: the outer parts are single chain components.
      CHECK((*r)[0] == chain.front());
      CHECK((*r)[2] == chain.back());
    }
  }
}

TEST_CASE("pointwise predicates") {
  CHECK(inverse(Perm::parse("2413")) == Perm::parse("3142"));
  CHECK(inverse(Perm::parse("1")) == Perm::parse("1"));
  for (const Perm& p : perms_up_to(6)) {
    CHECK(inverse(inverse(p)) == p);
    CHECK(is_involution(p) == (inverse(p) == p));
  }

  CHECK(is_involution(Perm::parse("21")));
  CHECK_FALSE(is_involution(Perm::parse("231")));

  CHECK(is_alternating(Perm::parse("2413")));
  CHECK(is_alternating(Perm::parse("1")));
  CHECK(is_alternating(Perm::parse("12")));
  CHECK_FALSE(is_alternating(Perm::parse("123")));
  CHECK_FALSE(is_alternating(Perm::parse("25314")));  // 3 lies between 5 and 1

  CHECK(is_even(Perm::parse("231")));  // 2 inversions
  CHECK(is_even(Perm::parse("1")));
  CHECK_FALSE(is_even(Perm::parse("21")));

  CHECK(is_dumont1(Perm::parse("2143")));
  CHECK_FALSE(is_dumont1(Perm::parse("12")));  // final even entry
  CHECK(is_dumont1(Perm::parse("21")));
  CHECK(is_dumont1(Perm::parse("1")));
  CHECK_FALSE(is_dumont1(Perm::parse("132")));  // 3 followed by smaller
  // Dumont permutations of length 2n are counted by the Genocchi numbers:
  // 1, 3, 17 for lengths 2, 4, 6.
  const std::vector<std::pair<int, int>> genocchi{{2, 1}, {4, 3}, {6, 17}};
  for (auto [n, expected] : genocchi) {
    int count = 0;
    for (const Perm& p : all_perms(n)) {
      if (is_dumont1(p)) ++count;
    }
    CHECK(count == expected);
  }
}

#include "doctest.h"

#include <algorithm>
#include <set>

#include "adic/substitution.hpp"

using namespace adic;

namespace {

Substitution xxy() { return Substitution({"X", "Y"}, {{0, 0, 1}, {0, 1, 1}}); }

StationaryLabelling xxy_z2_stationary() {
  StationaryLabelling st;
  st.group = FiniteGroup::cyclic(2);
  st.values = {{0, 0, 0}, {0, 1, 0}};
  return st;
}

using Triple = std::array<int, 3>;

std::set<Triple> triple_set(const TripleSubstitution& t) {
  return {t.triples.begin(), t.triples.end()};
}

}  // namespace

TEST_CASE("substitution diagram structure") {
  const auto od = diagram_from_substitution(xxy(), 4);
  const auto& d = od.diagram();
  CHECK(d.level_size(1) == 2);
  CHECK(d.edge_count(1) == 2);  // one root edge per letter
  for (int n = 2; n <= 4; ++n) {
    CHECK(d.edge_count(n) == 6);
    // source/range table: (X,1,X)(X,2,X)(Y,3,X)(X,1,Y)(Y,2,Y)(Y,3,Y)
    const std::vector<Edge> expect = {Edge{0, 0}, Edge{0, 0}, Edge{1, 0},
                                      Edge{0, 1}, Edge{1, 1}, Edge{1, 1}};
    CHECK(d.level_edges(n) == expect);
    // the incoming order of X is the positions 1, 2, 3
    CHECK(od.incoming_ordered(n, 0) == std::vector<int>{0, 1, 2});
    CHECK(od.incoming_ordered(n, 1) == std::vector<int>{3, 4, 5});
  }
  SUBCASE("a single letter mapping to aa is the binary odometer") {
    const auto om = diagram_from_substitution(Substitution({"a"}, {{0, 0}}), 3);
    CHECK(om.diagram().level_size(1) == 1);
    CHECK(om.diagram().edge_count(1) == 1);
    CHECK(om.diagram().edge_count(2) == 2);
    CHECK(om.diagram().edge_count(3) == 2);
  }
  SUBCASE("empty images are rejected") {
    CHECK_THROWS_AS(Substitution({"X"}, {{}}), Error);
  }
}

TEST_CASE("skew substitution") {
  SUBCASE("the two-letter cyclic labelling gives the primed system") {
    const auto sub = skew_substitution(xxy(), xxy_z2_stationary());
    REQUIRE(sub.alphabet_size() == 4);
    // letters in order: X_0 X_1 Y_0 Y_1 standing for x, x', y, y'
    CHECK(sub.letter_name(0) == "X_0");
    CHECK(sub.letter_name(1) == "X_1");
    CHECK(sub.letter_name(2) == "Y_0");
    CHECK(sub.letter_name(3) == "Y_1");
    CHECK(sub.image(0) == std::vector<int>{0, 0, 2});  // x  -> x x y
    CHECK(sub.image(1) == std::vector<int>{1, 1, 3});  // x' -> x' x' y'
    CHECK(sub.image(2) == std::vector<int>{0, 3, 2});  // y  -> x y' y
    CHECK(sub.image(3) == std::vector<int>{1, 2, 3});  // y' -> x' y y'
  }
  SUBCASE("a trivial labelling splits into disjoint copies") {
    StationaryLabelling st;
    st.group = FiniteGroup::cyclic(3);
    st.values = {{0, 0, 0}, {0, 0, 0}};
    const auto sub = skew_substitution(xxy(), st);
    for (int a = 0; a < sub.alphabet_size(); ++a)
      for (int x : sub.image(a)) CHECK(x % 3 == a % 3);
  }
  SUBCASE("the odometer in S3 with t,s labels is the permutation-indexed system") {
    const auto s3 = FiniteGroup::symmetric(3);
    const int s = s3.element("(12)");
    const int t = s3.element("(123)");
    StationaryLabelling st;
    st.group = s3;
    st.values = {{t, s}};
    const Substitution base({"a"}, {{0, 0}});
    const auto sub = skew_substitution(base, st);
    REQUIRE(sub.alphabet_size() == 6);
    for (int tau = 0; tau < 6; ++tau) {
      const auto& word = sub.image(tau);
      REQUIRE(word.size() == 2);
      CHECK(word[0] == s3.op(tau, t));
      CHECK(word[1] == s3.op(tau, s));
    }
  }
}

TEST_CASE("tripling the two-letter substitution") {
  const auto t = triple_substitution(xxy());
  REQUIRE(t.sub.alphabet_size() == 6);
  const std::set<Triple> expect = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0},
                                   {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(triple_set(t) == expect);

  auto image_names = [&](const char* name) {
    std::vector<std::string> out;
    for (int x : t.sub.image(t.sub.letter(name))) out.push_back(t.sub.letter_name(x));
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(image_names("[X,X,Y]") == V{"[Y,X,X]", "[X,X,Y]", "[X,Y,X]"});
  CHECK(image_names("[Y,X,X]") == V{"[Y,X,X]", "[X,X,Y]", "[X,Y,X]"});
  CHECK(image_names("[X,Y,X]") == V{"[Y,X,Y]", "[X,Y,Y]", "[Y,Y,X]"});
  CHECK(image_names("[X,Y,Y]") == V{"[Y,X,Y]", "[X,Y,Y]", "[Y,Y,X]"});
  CHECK(image_names("[Y,X,Y]") == V{"[Y,X,X]", "[X,X,Y]", "[X,Y,X]"});
  CHECK(image_names("[Y,Y,X]") == V{"[Y,X,Y]", "[X,Y,Y]", "[Y,Y,X]"});
}

TEST_CASE("tripling degenerate and constant cases") {
  SUBCASE("a constant letter keeps one triple with a length-3 image") {
    const auto t = triple_substitution(Substitution({"a"}, {{0, 0, 0}}));
    REQUIRE(t.sub.alphabet_size() == 1);
    CHECK(t.triples[0] == Triple{0, 0, 0});
    CHECK(t.sub.image(0).size() == 3);
    CHECK_FALSE(t.degenerate_images);
  }
  SUBCASE("length-1 images degenerate to a single triple") {
    const auto t = triple_substitution(Substitution({"a", "b"}, {{0, 1}, {0}}));
    CHECK(t.degenerate_images);
    for (int a = 0; a < t.sub.alphabet_size(); ++a)
      if (t.triples[a][1] == 1)  // middle letter b
        CHECK(t.sub.image(a).size() == 1);
  }
  SUBCASE("the binary odometer triples to the odometer") {
    const auto t = triple_substitution(Substitution({"a"}, {{0, 0}}));
    REQUIRE(t.sub.alphabet_size() == 1);
    CHECK(t.sub.image(0).size() == 2);
  }
}

TEST_CASE("tripling the skew system gives the twenty triples") {
  const auto sub = skew_substitution(xxy(), xxy_z2_stationary());
  const auto t = triple_substitution(sub);
  REQUIRE(t.sub.alphabet_size() == 20);
  // the twenty triples over x=0, x'=1, y=2, y'=3
  const std::set<Triple> expect = {
      {0, 0, 2}, {0, 2, 0}, {0, 2, 1}, {2, 0, 0}, {3, 0, 0},
      {2, 0, 3}, {3, 0, 3}, {3, 2, 1}, {3, 2, 0}, {1, 2, 3},
      {1, 1, 3}, {1, 3, 1}, {1, 3, 0}, {3, 1, 1}, {2, 1, 1},
      {3, 1, 2}, {2, 1, 2}, {2, 3, 0}, {2, 3, 1}, {0, 3, 2}};
  CHECK(triple_set(t) == expect);

  auto image_of = [&](Triple key) {
    const auto it = std::find(t.triples.begin(), t.triples.end(), key);
    REQUIRE(it != t.triples.end());
    std::vector<Triple> out;
    for (int x : t.sub.image(static_cast<int>(it - t.triples.begin())))
      out.push_back(t.triples[x]);
    return out;
  };
  using W = std::vector<Triple>;
  CHECK(image_of({0, 0, 2}) == W{{2, 0, 0}, {0, 0, 2}, {0, 2, 0}});   // [x,x,y]
  CHECK(image_of({0, 2, 0}) == W{{2, 0, 3}, {0, 3, 2}, {3, 2, 0}});   // [x,y,x]
  CHECK(image_of({0, 2, 1}) == W{{2, 0, 3}, {0, 3, 2}, {3, 2, 1}});   // [x,y,x']
  CHECK(image_of({2, 0, 0}) == W{{2, 0, 0}, {0, 0, 2}, {0, 2, 0}});   // [y,x,x]
  CHECK(image_of({3, 0, 0}) == W{{3, 0, 0}, {0, 0, 2}, {0, 2, 0}});   // [y',x,x]

  SUBCASE("the coset flip acts freely with ten orbits") {
    std::set<Triple> seen;
    int orbits = 0;
    for (const Triple& tr : t.triples) {
      const Triple flip = {tr[0] ^ 1, tr[1] ^ 1, tr[2] ^ 1};
      CHECK(flip != tr);
      CHECK(expect.count(flip) == 1);
      if (!seen.count(tr)) {
        seen.insert(tr);
        seen.insert(flip);
        ++orbits;
      }
    }
    CHECK(orbits == 10);
  }
}

TEST_CASE("primitivity, properness, constant length") {
  CHECK(check_primitive(xxy()));
  CHECK(check_proper(xxy()));
  CHECK(constant_length(xxy()) == 3);

  // the identity on two letters has a diagonal matrix, never positive; the
  // one-letter identity is primitive under the matrix rule
  const Substitution identity2({"a", "b"}, {{0}, {1}});
  CHECK_FALSE(check_primitive(identity2));

  const auto skew = skew_substitution(xxy(), xxy_z2_stationary());
  CHECK(check_primitive(triple_substitution(skew).sub));

  const Substitution fib({"a", "b"}, {{0, 1}, {0}});
  CHECK(check_primitive(fib));
  CHECK_FALSE(constant_length(fib).has_value());
}

TEST_CASE("fixed point windows") {
  SUBCASE("the golden-mean substitution starts a b a a b") {
    const Substitution fib({"a", "b"}, {{0, 1}, {0}});
    CHECK(fixed_point_window(fib, 0, 5) == std::vector<int>{0, 1, 0, 0, 1});
  }
  SUBCASE("the two-letter system starts X X Y X X Y") {
    CHECK(fixed_point_window(xxy(), 0, 6) ==
          std::vector<int>{0, 0, 1, 0, 0, 1});
  }
  SUBCASE("length zero gives the empty window") {
    CHECK(fixed_point_window(xxy(), 0, 0).empty());
  }
  SUBCASE("a seed whose first letter cycles uses a power of the substitution") {
    // images start with the other letter, so the fixed point needs sigma^2
    const Substitution swap({"a", "b"}, {{1, 0}, {0, 1}});
    const auto w = fixed_point_window(swap, 0, 4);
    CHECK(w[0] == 0);
    // prefix is preserved by sigma^2
    const auto w2 = fixed_point_window(swap, 0, 8);
    CHECK(std::equal(w.begin(), w.end(), w2.begin()));
  }
  SUBCASE("a stalling seed is rejected") {
    const Substitution identity({"a"}, {{0}});
    CHECK_THROWS_AS(fixed_point_window(identity, 0, 5), Error);
  }
}

TEST_CASE("triple alphabet equals the factor set of the fixed point") {
  for (const auto& s :
       {xxy(), Substitution({"a", "b"}, {{0, 1}, {0}}),
        skew_substitution(xxy(), xxy_z2_stationary())}) {
    if (!check_primitive(s)) continue;
    const auto t = triple_substitution(s);
    int seed = 0;
    const auto window = fixed_point_window(s, seed, 3000);
    std::set<Triple> factors;
    for (std::size_t i = 0; i + 2 < window.size(); ++i)
      factors.insert({window[i], window[i + 1], window[i + 2]});
    CHECK(triple_set(t) == factors);
  }
}

TEST_CASE("toeplitz window checks") {
  SUBCASE("a strictly periodic window reports its global period") {
    std::vector<int> seq;
    for (int i = 0; i < 64; ++i) seq.push_back(i % 3);
    const auto r = toeplitz_window_check(seq, 8);
    CHECK(r.all_periodic);
    REQUIRE(r.global_period.has_value());
    CHECK(*r.global_period == 3);
    for (int p : r.least_period) CHECK(p == 3);
  }
  SUBCASE("positions of the two-letter fixed point have 3-power periods") {
    const auto window = fixed_point_window(xxy(), 0, 400);
    const auto r = toeplitz_window_check(window, 81);
    CHECK_FALSE(r.global_period.has_value());
    CHECK(r.least_period[0] == 3);   // X at multiples of 3
    CHECK(r.least_period[2] == 3);   // Y at 2 mod 3
    CHECK(r.least_period[1] == 9);   // value copied from position 0
    CHECK(r.least_period[4] == 27);  // copied from position 1, one level up
    // the fourth unresolved position needs period 243; within this window no
    // period up to 81 works for it
    CHECK(r.least_period[40] == -1);
    CHECK_FALSE(r.all_periodic);
  }
  SUBCASE("window shorter than twice the bound is rejected") {
    CHECK_THROWS_AS(toeplitz_window_check(std::vector<int>(10, 0), 8), Error);
  }
}

TEST_CASE("substitution powers compose images") {
  const auto s2 = power(xxy(), 2);
  CHECK(s2.image(0) == std::vector<int>{0, 0, 1, 0, 0, 1, 0, 1, 1});
  CHECK_THROWS_AS(power(xxy(), 0), Error);
}

#include "rforest/tree_geometry.hpp"

#include <algorithm>
#include <doctest.h>
#include <vector>

#include "common.hpp"
#include "rforest/errors.hpp"

using namespace rforest;

namespace {

std::vector<ForestElement> component_a(const BaseSpace& x3) {
  return {rft::pt_a(x3), rft::k1(x3), rft::k2(x3),
          rft::k3(x3),  rft::k5(x3), rft::k6(x3)};
}

bool subset(const std::vector<ForestElement>& a, const FiniteTree& t) {
  return std::all_of(a.begin(), a.end(),
                     [&](const ForestElement& e) { return t.contains(e); });
}

}  // namespace

TEST_CASE("interval enumeration") {
  auto x3 = rft::make_x3();
  auto i = Interval::make(rft::k3(x3), rft::k2(x3));

  REQUIRE(i.elements().size() == 4);
  CHECK(i.elements()[0] == rft::k3(x3));
  CHECK(i.elements()[1] == rft::pt_a(x3));
  CHECK(i.elements()[2] == rft::k1(x3));
  CHECK(i.elements()[3] == rft::k2(x3));
  CHECK(i.positions() == std::vector<Rat>{rat(0), rat(1), rat(2), rat(3)});
  CHECK(i.span() == 3);
  CHECK(i.bottom() == rft::pt_a(x3));
  CHECK(i.left() == rft::k3(x3));
  CHECK(i.right() == rft::k2(x3));
  CHECK(i.contains(rft::k1(x3)));
  CHECK_FALSE(i.contains(rft::k5(x3)));

  auto chain = Interval::make(rft::k1(x3), rft::k2(x3));
  REQUIRE(chain.elements().size() == 2);
  CHECK(chain.elements()[0] == rft::k1(x3));
  CHECK(chain.elements()[1] == rft::k2(x3));

  auto pt = Interval::make(rft::k5(x3), rft::k5(x3));
  CHECK(pt.elements().size() == 1);
  CHECK(pt.span() == 0);

  CHECK_THROWS_AS(Interval::make(rft::k1(x3), rft::l_b(x3)), Error);
}

TEST_CASE("interval arc is an isometric chain") {
  auto x3 = rft::make_x3();
  auto fam = component_a(x3);

  for (const auto& k : fam)
    for (const auto& l : fam) {
      auto i = Interval::make(k, l);
      const auto& es = i.elements();
      const auto& ps = i.positions();
      // expected count from the two breakpoint sets above the meet
      const Rat floor = i.bottom().length();
      std::size_t onk = 0, onl = 0;
      for (const auto& b : k.breakpoints()) onk += b.r >= floor;
      for (const auto& b : l.breakpoints()) onl += b.r >= floor;
      CHECK(es.size() == onk + onl - 1);
      for (std::size_t p = 0; p < es.size(); ++p) {
        CHECK(is_prefix(i.bottom(), es[p]));
        CHECK((is_prefix(es[p], k) || is_prefix(es[p], l)));
        for (std::size_t q = 0; q < es.size(); ++q)
          CHECK(*distance(es[p], es[q]) == abs_rat(ps[p] - ps[q]));
      }
    }
}

TEST_CASE("interval rendered as a path") {
  auto x3 = rft::make_x3();
  auto i = Interval::make(rft::k3(x3), rft::k2(x3));

  auto from_left = interval_as_path(i, rft::k3(x3));
  auto want_left = Path::make(x3, {{rat(0), rft::fin(1)},
                                   {rat(1), rft::fin(0)},
                                   {rat(2), rft::fin(1)},
                                   {rat(3), rft::fin(2)}});
  CHECK(from_left == want_left);

  auto from_right = interval_as_path(i, rft::k2(x3));
  auto want_right = Path::make(x3, {{rat(0), rft::fin(2)},
                                    {rat(1), rft::fin(1)},
                                    {rat(2), rft::fin(0)},
                                    {rat(3), rft::fin(1)}});
  CHECK(from_right == want_right);

  auto chain = Interval::make(rft::k1(x3), rft::k2(x3));
  CHECK(interval_as_path(chain, rft::k1(x3)) ==
        Path::make(x3, {{rat(0), rft::fin(1)}, {rat(1), rft::fin(2)}}));

  auto pt = Interval::make(rft::k5(x3), rft::k5(x3));
  CHECK(interval_as_path(pt, rft::k5(x3)) == point_path(rft::fin(2)));

  CHECK_THROWS_AS(interval_as_path(i, rft::k1(x3)), Error);
}

TEST_CASE("delta predicate") {
  auto x3 = rft::make_x3();
  auto k3 = rft::k3(x3);
  auto k2 = rft::k2(x3);

  CHECK(delta_predicate(k3, k2, rat(3), rft::k1(x3)) == 0);
  CHECK(delta_predicate(k3, k2, rat(3), rft::k5(x3)) == 2);
  CHECK(delta_predicate(k3, k2, rat(3), rft::l_b(x3)) == 3);

  try {
    delta_predicate(k3, k2, rat(2), rft::k1(x3));
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_truncation);
  }

  // zero exactly on the interval; twice the enumerated distance off it
  auto i = Interval::make(k3, k2);
  auto fam = component_a(x3);
  for (const Rat& r : {rat(3), rat(7, 2), rat(5)})
    for (const auto& a : fam) {
      Rat delta = delta_predicate(k3, k2, r, a);
      CHECK((delta == 0) == i.contains(a));
      auto en = project_interval_enum(a, i);
      CHECK(delta == std::min(Rat(2 * en.dist), r));
    }
}

TEST_CASE("interval projections") {
  auto x3 = rft::make_x3();
  auto i = Interval::make(rft::k3(x3), rft::k2(x3));

  auto p5 = project_interval(rft::k5(x3), i);
  CHECK(p5.point == rft::k1(x3));
  CHECK(p5.dist == 1);

  auto p6 = project_interval(rft::k6(x3), i);
  CHECK(p6.point == rft::pt_a(x3));
  CHECK(p6.dist == 1);

  auto p2 = project_interval(rft::k2(x3), i);
  CHECK(p2.point == rft::k2(x3));
  CHECK(p2.dist == 0);

  CHECK(dist_to_interval(rft::k5(x3), i) == ExtRat{rat(1)});
  CHECK_FALSE(dist_to_interval(rft::l_b(x3), i).has_value());
  CHECK_THROWS_AS(project_interval(rft::l_b(x3), i), Error);

  // closed form equals the unique exhaustive argmin, for every fixture pair
  auto fam = component_a(x3);
  for (const auto& k : fam)
    for (const auto& l : fam) {
      auto ival = Interval::make(k, l);
      for (const auto& a : fam) {
        auto closed = project_interval(a, ival);
        auto en = project_interval_enum(a, ival);
        CHECK(en.unique);
        CHECK(closed.point == en.point);
        CHECK(closed.dist == en.dist);
        // the projection of a onto [k,l] lies in [k,a]
        CHECK(Interval::make(k, a).contains(closed.point));
      }
    }
}

TEST_CASE("finite trees") {
  auto x3 = rft::make_x3();

  auto single = FiniteTree::make({{rft::k3(x3), rft::k2(x3)}});
  CHECK(single.elements().size() == 4);

  try {
    FiniteTree::make({{rft::k3(x3), rft::k2(x3)}, {rft::k5(x3), rft::k5(x3)}});
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::disconnected_interval);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }

  auto t = FiniteTree::make({{rft::k3(x3), rft::k2(x3)}, {rft::pt_a(x3), rft::k6(x3)}});
  CHECK(t.elements().size() == 5);
  CHECK(subset({rft::pt_a(x3), rft::k3(x3), rft::k1(x3), rft::k2(x3), rft::k6(x3)}, t));

  CHECK_THROWS_AS(FiniteTree::make({{rft::k3(x3), rft::k2(x3)},
                                    {rft::l_b(x3), rft::l_b(x3)}}),
                  Error);

  // meet closure, interval containment, and the path axioms of every arc
  for (const auto& k : t.elements())
    for (const auto& l : t.elements()) {
      auto m = meet(k, l);
      REQUIRE(m.has_value());
      CHECK(t.contains(*m));
      auto ival = Interval::make(k, l);
      for (const auto& e : ival.elements()) CHECK(t.contains(e));
      CHECK(check_path_axioms(pointed_metric_of(ival, k), std::max(ival.span(), rat(1))));
    }
}

TEST_CASE("tree projection") {
  auto x3 = rft::make_x3();
  auto t = FiniteTree::make({{rft::k3(x3), rft::k2(x3)}, {rft::pt_a(x3), rft::k6(x3)}});

  auto p = project_tree(rft::k5(x3), t);
  CHECK(p.point == rft::k1(x3));
  CHECK(p.dist == 1);

  for (const auto& e : t.elements()) {
    auto self = project_tree(e, t);
    CHECK(self.point == e);
    CHECK(self.dist == 0);
  }

  auto narrow = FiniteTree::make({{rft::k3(x3), rft::k2(x3)}});
  auto p6 = project_tree(rft::k6(x3), narrow);
  CHECK(p6.point == rft::pt_a(x3));
  CHECK(p6.dist == 1);

  CHECK_THROWS_AS(project_tree(rft::l_b(x3), t), Error);

  // the global argmin agrees with the best per-generator projection
  auto fam = component_a(x3);
  for (const auto& a : fam) {
    auto global = project_tree(a, t);
    Rat best = global.dist;
    bool found = false;
    for (const auto& g : t.generators()) {
      auto pr = project_interval(a, Interval::make(g.first, g.second));
      CHECK(pr.dist >= best);
      found = found || (pr.dist == best && pr.point == global.point);
    }
    CHECK(found);
  }
}

TEST_CASE("convex closure") {
  auto x3 = rft::make_x3();

  auto two = ccl({rft::k3(x3), rft::k2(x3)});
  CHECK(two.elements().size() == 4);

  auto one = ccl({rft::k5(x3)});
  CHECK(one.elements().size() == 1);
  CHECK(one.contains(rft::k5(x3)));

  auto three = ccl({rft::k3(x3), rft::k2(x3), rft::k6(x3)});
  CHECK(three.elements().size() == 5);
  CHECK(subset({rft::pt_a(x3), rft::k3(x3), rft::k1(x3), rft::k2(x3), rft::k6(x3)}, three));

  CHECK_THROWS_AS(ccl({rft::k3(x3), rft::l_b(x3)}), Error);
  try {
    ccl({rft::k3(x3), rft::l_b(x3)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mixed_components);
  }

  // minimality inside a containing tree
  auto t = FiniteTree::make({{rft::k3(x3), rft::k2(x3)}, {rft::pt_a(x3), rft::k6(x3)}});
  auto hull = ccl({rft::k3(x3), rft::k6(x3)});
  CHECK(subset(hull.elements(), t));

  // three-point containment along fixture triples
  auto fam = component_a(x3);
  for (const auto& e : fam)
    for (const auto& f : fam)
      for (const auto& g : fam) {
        auto eg = Interval::make(e, g);
        auto ef = Interval::make(e, f);
        auto fg = Interval::make(f, g);
        for (const auto& x : eg.elements())
          CHECK((ef.contains(x) || fg.contains(x)));
      }
}

TEST_CASE("big-distance decomposition") {
  auto x3 = rft::make_x3();

  auto d = big_distance_decompose(rft::k3(x3), rft::k2(x3), rft::k5(x3), rft::k6(x3));
  CHECK_FALSE(d.degenerate);
  CHECK(d.c_proj == rft::k1(x3));
  CHECK(d.e_proj == rft::pt_a(x3));
  CHECK(d.total == 3);
  CHECK(d.c_leg == 1);
  CHECK(d.across == 1);
  CHECK(d.e_leg == 1);

  auto same = big_distance_decompose(rft::k3(x3), rft::k2(x3), rft::k5(x3), rft::k5(x3));
  CHECK(same.degenerate);

  // extending c past its projection point keeps the projection
  auto bc = Path::make(x3, {{rat(0), rft::fin(2)}, {rat(1), rft::fin(1)}});
  auto ext = graft(x3, rft::k5(x3), bc, 7);
  auto deg = big_distance_decompose(rft::k3(x3), rft::k2(x3), rft::k5(x3), ext);
  CHECK(deg.degenerate);
  CHECK(deg.c_proj == rft::k1(x3));
  CHECK(deg.e_proj == rft::k1(x3));

  CHECK_THROWS_AS(
      big_distance_decompose(rft::k3(x3), rft::k2(x3), rft::k5(x3), rft::l_b(x3)),
      Error);
}

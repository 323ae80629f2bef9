#include <doctest.h>

#include <vector>

#include "common.hpp"
#include "rforest/errors.hpp"

using namespace rforest;
using namespace rft;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

Region finite_set(const BaseSpace& space, std::initializer_list<std::size_t> idx) {
  std::vector<bool> m(space.point_count(), false);
  for (auto i : idx) m[i] = true;
  return FiniteRegion{std::move(m)};
}

IntervalComponent open_c(long lo_n, long lo_d, long hi_n, long hi_d) {
  return IntervalComponent{rat(lo_n, lo_d), rat(hi_n, hi_d), false, false};
}

// Small point probe per space kind, enough to certify region claims.
std::vector<BasePoint> probe_points(const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      std::vector<BasePoint> out;
      for (std::size_t i = 0; i < space.point_count(); ++i) out.push_back(FinitePoint{i});
      return out;
    }
    case SpaceKind::interval: {
      std::vector<BasePoint> out;
      for (long num = 0; num <= 40; ++num) out.push_back(IntervalPoint{rat(num, 4)});
      return out;
    }
    case SpaceKind::tail: {
      std::vector<BasePoint> out;
      for (std::uint64_t k = 0; k < 12; ++k) out.push_back(TailPoint{k});
      out.push_back(TailPoint{std::nullopt});
      return out;
    }
  }
  return {};
}

}  // namespace

TEST_CASE("three-point space validates and has diameter 2") {
  BaseSpace x3 = make_x3();
  CHECK(x3.diameter() == rat(2));
  CHECK(x3.der(fin(0), fin(2)) == rat(2));
  CHECK(x3.der(fin(1), fin(1)) == rat(0));
}

TEST_CASE("metric axiom violations are rejected with a witness") {
  auto bad_triangle = [] {
    BaseSpace::finite_discrete(
        {"a", "b", "c"},
        {{rat(0), rat(1), rat(5)}, {rat(1), rat(0), rat(1)}, {rat(5), rat(1), rat(0)}});
  };
  CHECK(code_of(bad_triangle) == Errc::metric_axiom_violation);
  auto asymmetric = [] {
    BaseSpace::finite_discrete({"a", "b"}, {{rat(0), rat(1)}, {rat(2), rat(0)}});
  };
  CHECK(code_of(asymmetric) == Errc::metric_axiom_violation);
  auto single = [] { BaseSpace::finite_discrete({"a"}, {{rat(0)}}); };
  CHECK(code_of(single) == Errc::single_point_space);
  CHECK(code_of([] { BaseSpace::interval(rat(0)); }) == Errc::single_point_space);
}

TEST_CASE("fattening pinned values") {
  BaseSpace x3 = make_x3();
  CHECK(fatten(finite_set(x3, {0}), rat(3, 2), x3) == finite_set(x3, {0, 1}));
  CHECK(region_empty(fatten(finite_set(x3, {0}), rat(0), x3)));

  BaseSpace iv = make_interval10();
  Region s = IntervalRegion{{open_c(3, 1, 4, 1)}};
  Region expect = IntervalRegion{{open_c(2, 1, 5, 1)}};
  CHECK(fatten(s, rat(1), iv) == expect);

  BaseSpace tl = make_tail();
  Region t = TailRegion{false, {3, 5}};
  CHECK(fatten(t, rat(1, 2), tl) == t);
  CHECK(fatten(t, rat(3, 2), tl) == Region(TailRegion{true, {}}));
}

TEST_CASE("fattening is monotone and composes subadditively") {
  for (const BaseSpace& space : {make_x3(), make_interval10(), make_tail()}) {
    std::vector<Region> samples;
    if (space.kind() == SpaceKind::finite_discrete) {
      samples = {finite_set(space, {0}), finite_set(space, {1, 2})};
    } else if (space.kind() == SpaceKind::interval) {
      samples = {Region(IntervalRegion{{open_c(1, 2, 2, 1), open_c(7, 2, 9, 2)}}),
                 Region(IntervalRegion{{open_c(8, 1, 10, 1)}})};
    } else {
      samples = {Region(TailRegion{false, {0, 4}}), Region(TailRegion{true, {1}})};
    }
    for (const Region& s : samples) {
      for (long en = 1; en <= 4; ++en) {
        Rat e = rat(en, 3);
        Region fat = fatten(s, e, space);
        CHECK(region_open(fat, space));
        Region twice = fatten(fat, e, space);
        Region direct = fatten(s, e + e, space);
        // subset check via intersection
        CHECK(region_intersect(twice, direct, space) == twice);
        for (const BasePoint& x : probe_points(space)) {
          if (region_member(x, s, space)) CHECK(region_member(x, fat, space));
        }
      }
    }
  }
}

TEST_CASE("interval region algebra canonical forms") {
  BaseSpace iv = make_interval10();
  Region u = region_union(Region(IntervalRegion{{open_c(1, 1, 2, 1)}}),
                          Region(IntervalRegion{{open_c(2, 1, 3, 1)}}), iv);
  // (1,2) and (2,3) stay separate components; their closure merges.
  CHECK(std::get<IntervalRegion>(u).components.size() == 2);
  Region cl = region_closure(u, iv);
  Region expect = IntervalRegion{{IntervalComponent{rat(1), rat(3), true, true}}};
  CHECK(cl == expect);

  Region comp = region_complement(u, iv);
  const auto& cc = std::get<IntervalRegion>(comp).components;
  REQUIRE(cc.size() == 3);
  CHECK(cc[0] == IntervalComponent{rat(0), rat(1), true, true});
  CHECK(cc[1] == IntervalComponent{rat(2), rat(2), true, true});
  CHECK(cc[2] == IntervalComponent{rat(3), rat(10), true, true});

  CHECK(region_intersect(u, comp, iv) == empty_region(iv));
  CHECK(region_union(u, comp, iv) == whole_region(iv));
}

TEST_CASE("tail region algebra") {
  BaseSpace tl = make_tail();
  Region fin_part = TailRegion{false, {1, 2, 7}};
  Region cof = TailRegion{true, {2, 3}};
  CHECK(region_member(inf(), cof, tl));
  CHECK(!region_member(nat(2), cof, tl));
  CHECK(region_member(nat(4), cof, tl));
  CHECK(region_intersect(fin_part, cof, tl) == Region(TailRegion{false, {1, 7}}));
  CHECK(region_union(fin_part, cof, tl) == Region(TailRegion{true, {3}}));
  CHECK(region_complement(cof, tl) == Region(TailRegion{false, {2, 3}}));
  CHECK(region_closure(cof, tl) == cof);
}

TEST_CASE("entourage membership pinned values") {
  BaseSpace x3 = make_x3();
  CHECK(entourage_member(RadiusIndex{rat(3, 2)}, fin(0), fin(1), x3));
  CHECK(!entourage_member(RadiusIndex{rat(1)}, fin(0), fin(1), x3));
  BaseSpace tl = make_tail();
  CHECK(entourage_member(TailIndex{5}, nat(7), inf(), tl));
  CHECK(!entourage_member(TailIndex{5}, nat(3), inf(), tl));
  CHECK(entourage_member(TailIndex{5}, nat(3), nat(3), tl));
}

TEST_CASE("shrink pinned recipes and contract") {
  BaseSpace iv = make_interval10();
  auto s1 = shrink(RadiusIndex{rat(1)}, rat(1), iv);
  CHECK(std::get<RadiusIndex>(s1.index).r == rat(1, 2));
  CHECK(s1.delta == rat(1, 8));

  BaseSpace x3 = make_x3();
  auto s2 = shrink(RadiusIndex{rat(1, 2)}, rat(1, 4), x3);
  CHECK(std::get<RadiusIndex>(s2.index).r == rat(1, 4));
  CHECK(s2.delta == rat(1, 16));

  BaseSpace tl = make_tail();
  auto s3 = shrink(TailIndex{3}, rat(1, 2), tl);
  CHECK(std::get<TailIndex>(s3.index).n == 3);
  CHECK(s3.delta == rat(1, 4));

  // Contract: closed delta-fattening of closure(V_j(x)) sits inside V_i(x).
  for (const BaseSpace& space : {make_x3(), make_interval10(), make_tail()}) {
    std::vector<EntourageIndex> indices;
    if (space.kind() == SpaceKind::tail)
      indices = {EntourageIndex(TailIndex{0}), EntourageIndex(TailIndex{4})};
    else
      indices = {EntourageIndex(RadiusIndex{rat(1, 2)}), EntourageIndex(RadiusIndex{rat(2)})};
    for (const auto& vi : indices) {
      for (long en = 1; en <= 3; ++en) {
        Rat e = rat(en, 2);
        auto [vj, delta] = shrink(vi, e, space);
        CHECK(delta > 0);
        CHECK(delta < e);
        for (const BasePoint& x : probe_points(space)) {
          Region grown =
              fatten_closed(region_closure(entourage_ball(vj, x, space), space), delta, space);
          for (const BasePoint& y : probe_points(space)) {
            if (region_member(y, grown, space)) CHECK(entourage_member(vi, x, y, space));
          }
        }
      }
    }
  }
}

TEST_CASE("separate pinned values and contract") {
  BaseSpace iv = make_interval10();
  auto [b, c] = separate(at(3), at(6), rat(1), iv);
  CHECK(b == Region(IntervalRegion{{open_c(7, 3, 11, 3)}}));
  CHECK(c == Region(IntervalRegion{{open_c(16, 3, 20, 3)}}));

  BaseSpace tl = make_tail();
  auto [bt, ct] = separate(inf(), nat(4), rat(1, 2), tl);
  CHECK(bt == Region(TailRegion{true, {4}}));
  CHECK(ct == Region(TailRegion{false, {4}}));

  BaseSpace x3 = make_x3();
  auto [bx, cx] = separate(fin(0), fin(2), rat(1), x3);
  CHECK(region_member(fin(0), bx, x3));
  CHECK(region_member(fin(2), cx, x3));

  CHECK(code_of([&] { separate(fin(0), fin(1), rat(1), make_x3()); }) ==
        Errc::separation_impossible);

  // Contract on a grid of pairs per space.
  for (const BaseSpace& space : {make_x3(), make_interval10(), make_tail()}) {
    auto pts = probe_points(space);
    for (const auto& x : pts) {
      for (const auto& y : pts) {
        Rat d = space.der(x, y);
        if (d == 0) continue;
        for (long sn = 0; sn <= 2; ++sn) {
          Rat s = d * rat(sn, 3);
          auto [bb, cc] = separate(x, y, s, space);
          CHECK(region_open(bb, space));
          CHECK(region_open(cc, space));
          CHECK(region_member(x, bb, space));
          CHECK(region_member(y, cc, space));
          Region grown = fatten_closed(region_closure(bb, space), s, space);
          CHECK(region_empty(region_intersect(grown, region_closure(cc, space), space)));
        }
      }
    }
  }
}

TEST_CASE("pick_within pinned values and determinism") {
  BaseSpace x3 = make_x3();
  CHECK(pick_within(finite_set(x3, {1, 2}), fin(0), rat(3, 2), x3) == BasePoint(fin(1)));
  CHECK(code_of([&] { pick_within(finite_set(x3, {2}), fin(0), rat(3, 2), x3); }) ==
        Errc::empty_choice);

  BaseSpace iv = make_interval10();
  Region s = IntervalRegion{{open_c(2, 1, 5, 1)}};
  CHECK(pick_within(s, at(1), rat(2), iv) == BasePoint(at(5, 2)));
  // Same query again: canonical choice is stable.
  CHECK(pick_within(s, at(1), rat(2), iv) == BasePoint(at(5, 2)));

  BaseSpace tl = make_tail();
  Region cof = TailRegion{true, {0, 1}};
  CHECK(pick_within(cof, nat(7), rat(2), tl) == BasePoint(nat(2)));
  CHECK(pick_within(cof, inf(), rat(1, 2), tl) == BasePoint(inf()));
  CHECK(code_of([&] { pick_within(Region(TailRegion{false, {3}}), nat(9), rat(1), tl); }) ==
        Errc::empty_choice);
}

TEST_CASE("test functions respect the stated modulus") {
  BaseSpace x3 = make_x3();
  auto f = make_function(FiniteFunction{{rat(0), rat(1), rat(2)}}, rat(1), x3);
  CHECK(eval_function(f, fin(2), x3) == rat(2));
  CHECK(code_of([&] {
          make_function(FiniteFunction{{rat(0), rat(5), rat(0)}}, rat(1), make_x3());
        }) == Errc::lipschitz_violation);

  BaseSpace iv = make_interval10();
  PiecewiseLinear pl{{{rat(0), rat(1)}, {rat(4), rat(3)}, {rat(10), rat(0)}}};
  auto g = make_function(pl, rat(1), iv);
  CHECK(eval_function(g, at(2), iv) == rat(2));
  CHECK(eval_function(g, at(4), iv) == rat(3));
  CHECK(eval_function(g, at(7), iv) == rat(3, 2));
  CHECK(code_of([&] {
          make_function(PiecewiseLinear{{{rat(0), rat(0)}, {rat(1), rat(2)}, {rat(10), rat(0)}}},
                        rat(1), make_interval10());
        }) == Errc::lipschitz_violation);

  BaseSpace tl = make_tail();
  auto h = make_function(TailFunction{{{4, rat(1, 2)}}, rat(0)}, rat(1), tl);
  CHECK(eval_function(h, nat(4), tl) == rat(1, 2));
  CHECK(eval_function(h, nat(5), tl) == rat(0));
  CHECK(eval_function(h, inf(), tl) == rat(0));
  CHECK(code_of([&] {
          make_function(TailFunction{{{0, rat(0)}, {1, rat(3)}}, rat(1)}, rat(2), make_tail());
        }) == Errc::lipschitz_violation);
}

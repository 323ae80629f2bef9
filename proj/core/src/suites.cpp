#include "rforest/suites.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>
#include <optional>
#include <unordered_map>

#include "rforest/errors.hpp"
#include "rforest/json_io.hpp"

namespace rforest {

namespace {

using njson = nlohmann::ordered_json;

njson elem_j(const ForestElement& k, const BaseSpace& s) {
  return njson::parse(format_element(k, s));
}
njson path_j(const Path& f, const BaseSpace& s) {
  return njson::parse(format_path(f, s));
}
njson type_j(const TypePoint& t, const BaseSpace& s) {
  return njson::parse(format_type_point(t, s));
}
njson point_j(const BasePoint& x, const BaseSpace& s) {
  return format_point(x, s);
}
njson ent_j(const EntourageIndex& v) {
  if (const auto* r = std::get_if<RadiusIndex>(&v)) {
    return njson{{"radius", format_rat(r->r)}};
  }
  return njson{{"tail", std::get<TailIndex>(v).n}};
}

using CaseFn =
    std::function<std::optional<std::string>(Gen&, const BaseSpace&, const GenBounds&)>;

// Step gaps must be matched by a nonzero Lipschitz budget, and a fresh
// element in another component needs a second root to exist; both hold in
// every shipped space.
ForestElement foreign_element(Gen& g, const ForestElement& near,
                              const BaseSpace& space, const GenBounds& b) {
  return g.element_with_root(g.point_other_than(near.root(), space), space, b);
}

std::optional<std::string> metric_axioms_case(Gen& g, const BaseSpace& space,
                                              const GenBounds& b) {
  ForestElement a = g.element(space, b);
  ForestElement k = g.mutate(a, space, b);
  ForestElement c = g.chance(1, 8) ? foreign_element(g, a, space, b)
                                   : g.mutate(g.chance(1, 2) ? a : k, space, b);
  Rat s = g.tolerance(space);

  auto cx = [&] {
    return njson{{"a", elem_j(a, space)},
                 {"b", elem_j(k, space)},
                 {"c", elem_j(c, space)},
                 {"s", format_rat(s)}}
        .dump();
  };

  ExtRat dab = distance(a, k), dba = distance(k, a);
  ExtRat dac = distance(a, c), dbc = distance(k, c);
  if (dab != dba) return cx();
  if (distance(a, a) != ExtRat{Rat(0)}) return cx();
  if ((dab == ExtRat{Rat(0)}) != (a == k)) return cx();
  // Extended triangle: a finite right side forces the left.
  if (dab && dbc) {
    if (!dac || *dac > *dab + *dbc) return cx();
  }
  // Length bound.
  if (dab && abs_rat(a.length() - k.length()) > *dab) return cx();

  Rat tab = distance_trunc(a, k, s), tba = distance_trunc(k, a, s);
  Rat tac = distance_trunc(a, c, s), tbc = distance_trunc(k, c, s);
  if (tab != tba) return cx();
  if (distance_trunc(a, a, s) != 0) return cx();
  if (tac > tab + tbc) return cx();
  if (tab > s) return cx();
  if (dab && tab != std::min(*dab, s)) return cx();
  if (!dab && tab != s) return cx();
  return std::nullopt;
}

std::optional<std::string> meet_bounds_case(Gen& g, const BaseSpace& space,
                                            const GenBounds& b) {
  std::vector<ForestElement> fam = g.family(space, b);
  auto cx = [&] {
    njson arr = njson::array();
    for (const auto& k : fam) arr.push_back(elem_j(k, space));
    return njson{{"family", std::move(arr)}}.dump();
  };

  Rat diam_fam(0);
  Rat max_len(0);
  for (const auto& k : fam) {
    if (k.length() > max_len) max_len = k.length();
    for (const auto& l : fam) {
      Rat d = *distance(k, l);
      if (d > diam_fam) diam_fam = d;
    }
  }
  ForestElement m = meet_family(fam);
  if (m.length() < max_len - diam_fam) return cx();
  for (const auto& k : fam) {
    if (*distance(k, m) > diam_fam) return cx();
  }
  return std::nullopt;
}

std::optional<std::string> interval_delta_case(Gen& g, const BaseSpace& space,
                                               const GenBounds& b) {
  ForestElement k = g.element(space, b);
  ForestElement kp = g.mutate(k, space, b);
  Rat d = *distance(k, kp);
  Rat r = (d > 0 && g.chance(1, 6)) ? d : Rat(d + g.positive_rat(Rat(4), 16));
  ForestElement a = g.chance(1, 8)
                        ? foreign_element(g, k, space, b)
                        : g.mutate(g.chance(1, 2) ? k : kp, space, b);
  auto cx = [&] {
    return njson{{"k", elem_j(k, space)},
                 {"kp", elem_j(kp, space)},
                 {"r", format_rat(r)},
                 {"a", elem_j(a, space)}}
        .dump();
  };

  Interval ival = Interval::make(k, kp);
  Rat delta = delta_predicate(k, kp, r, a);
  bool member = ival.contains(a);
  if ((delta == 0) != member) return cx();
  ExtRat dist = dist_to_interval(a, ival);
  Rat expected = dist ? std::min(Rat(2 * *dist), r) : r;
  if (delta != expected) return cx();
  return std::nullopt;
}

std::optional<std::string> projection_unique_case(Gen& g,
                                                  const BaseSpace& space,
                                                  const GenBounds& b) {
  ForestElement k = g.element(space, b);
  ForestElement kp = g.mutate(k, space, b);
  ForestElement a = g.mutate(g.chance(1, 2) ? k : kp, space, b);
  auto cx_interval = [&] {
    return njson{{"a", elem_j(a, space)},
                 {"k", elem_j(k, space)},
                 {"kp", elem_j(kp, space)}}
        .dump();
  };

  Interval ival = Interval::make(k, kp);
  Projection closed = project_interval(a, ival);
  EnumProjection brute = project_interval_enum(a, ival);
  if (!(closed.point == brute.point) || closed.dist != brute.dist ||
      !brute.unique) {
    return cx_interval();
  }
  if (distance(a, closed.point) != ExtRat{closed.dist}) return cx_interval();
  if (!Interval::make(k, a).contains(closed.point)) return cx_interval();

  FiniteTree t = g.tree(space, b);
  ForestElement q = g.mutate(t.elements()[g.pick(t.elements().size())], space, b);
  auto cx_tree = [&] {
    njson arr = njson::array();
    for (const auto& e : t.elements()) arr.push_back(elem_j(e, space));
    return njson{{"a", elem_j(q, space)}, {"tree", std::move(arr)}}.dump();
  };
  try {
    auto [point, dist] = project_tree(q, t);
    std::size_t hits = 0;
    for (const auto& e : t.elements()) {
      Rat de = *distance(q, e);
      if (de < dist) return cx_tree();
      if (de == dist) {
        ++hits;
        if (!(e == point)) return cx_tree();
      }
    }
    if (hits != 1) return cx_tree();
  } catch (const Error&) {
    return cx_tree();
  }
  return std::nullopt;
}

std::optional<std::string> tree_containment_case(Gen& g, const BaseSpace& space,
                                                 const GenBounds& b) {
  FiniteTree t = g.tree(space, b);
  const auto& elems = t.elements();
  const ForestElement& ka = elems[g.pick(elems.size())];
  const ForestElement& kb = elems[g.pick(elems.size())];
  const ForestElement& kc = elems[g.pick(elems.size())];
  auto cx = [&] {
    njson arr = njson::array();
    for (const auto& e : elems) arr.push_back(elem_j(e, space));
    return njson{{"tree", std::move(arr)},
                 {"picks", njson::array({elem_j(ka, space), elem_j(kb, space),
                                         elem_j(kc, space)})}}
        .dump();
  };

  Interval span = Interval::make(ka, kb);
  for (const auto& e : span.elements()) {
    if (!t.contains(e)) return cx();
  }
  // Three-point containment through the middle pick.
  Interval left = Interval::make(ka, kc);
  Interval right = Interval::make(kc, kb);
  for (const auto& e : span.elements()) {
    if (!left.contains(e) && !right.contains(e)) return cx();
  }
  // Convex closure of a sampled tuple stays inside the containing tree.
  FiniteTree hull = ccl({ka, kb, kc});
  for (const auto& e : hull.elements()) {
    if (!t.contains(e)) return cx();
  }
  return std::nullopt;
}

std::optional<std::string> big_distance_case(Gen& g, const BaseSpace& space,
                                             const GenBounds& b) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ForestElement a = g.element(space, b);
    ForestElement k = g.mutate(a, space, b);
    ForestElement c = g.mutate(g.chance(1, 2) ? a : k, space, b);
    ForestElement e = g.mutate(g.chance(1, 2) ? c : a, space, b);
    BigDistance rec = big_distance_decompose(a, k, c, e);
    if (rec.degenerate) continue;
    auto cx = [&] {
      return njson{{"a", elem_j(a, space)},
                   {"b", elem_j(k, space)},
                   {"c", elem_j(c, space)},
                   {"e", elem_j(e, space)}}
          .dump();
    };
    if (rec.c_proj == rec.e_proj) return cx();
    if (rec.total != *distance(c, e)) return cx();
    if (rec.c_leg != *distance(c, rec.c_proj)) return cx();
    if (rec.across != *distance(rec.c_proj, rec.e_proj)) return cx();
    if (rec.e_leg != *distance(rec.e_proj, e)) return cx();
    if (rec.total != rec.c_leg + rec.across + rec.e_leg) return cx();
    return std::nullopt;
  }
  return std::string(R"({"note":"no quadruple with distinct projections"})");
}

std::optional<std::string> parallel_paths_case(Gen& g, const BaseSpace& space,
                                               const GenBounds& b) {
  Path f = g.path(space, b);
  EntourageIndex v = g.entourage(space);
  Rat e = g.tolerance(space);
  auto cx = [&](const char* what, const BasePoint* x) {
    njson j{{"f", path_j(f, space)},
            {"entourage", ent_j(v)},
            {"e", format_rat(e)},
            {"failed", what}};
    if (x) j["x"] = point_j(*x, space);
    return j.dump();
  };

  ParallelPath pp = parallel_path(f, v, e, space);
  if (!region_member(f.root(), pp.o, space)) return cx("origin in O", nullptr);

  std::vector<BasePoint> samples{f.root()};
  for (int j = 0; j < 2; ++j) {
    Rat radius = g.positive_rat(Rat(1), 8);
    samples.push_back(pick_within(pp.o, f.root(), radius, space));
  }
  for (const auto& x : samples) {
    Path built = parallel_build(pp, x, space);
    if (!(built.root() == x)) return cx("starts at x", &x);
    if (!entourage_test(f, built, {v, e}, space)) return cx("entourage", &x);
    if (built.length() >= f.length() + e) return cx("length bound", &x);
    const auto& pts = built.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Rat der = space.der(pts[i].x, pts[i + 1].x);
      if (der * pp.gamma < pp.gaps[i]) return cx("chain lower", &x);
      if (der > pp.gamma * pp.gaps[i]) return cx("chain upper", &x);
    }
  }
  return std::nullopt;
}

std::optional<std::string> entourage_laws_case(Gen& g, const BaseSpace& space,
                                               const GenBounds& b) {
  Path f = g.path(space, b);
  Path h = g.mutate_path(f, space, b);
  Path p = g.chance(1, 3) ? g.path(space, b) : g.mutate_path(h, space, b);
  PathEntourage u1{g.entourage(space), g.tolerance(space)};
  PathEntourage u2{g.entourage(space), g.tolerance(space)};
  auto cx = [&] {
    return njson{{"f", path_j(f, space)},
                 {"g", path_j(h, space)},
                 {"h", path_j(p, space)},
                 {"u1", njson{{"v", ent_j(u1.v)}, {"e", format_rat(u1.e)}}},
                 {"u2", njson{{"v", ent_j(u2.v)}, {"e", format_rat(u2.e)}}}}
        .dump();
  };
  if (!intersection_law_holds(f, h, u1, u2, space)) return cx();
  if (!composition_law_holds(f, h, p, u1, space)) return cx();
  if (!entourage_test(f, f, u1, space)) return cx();
  if (entourage_test(f, h, u1, space) != entourage_test(h, f, u1, space)) {
    return cx();
  }
  return std::nullopt;
}

std::optional<std::string> path_axioms_case(Gen& g, const BaseSpace& space,
                                            const GenBounds& b) {
  ForestElement k = g.element(space, b);
  ForestElement kp = g.mutate(k, space, b);
  Rat d = *distance(k, kp);
  Rat r = d + g.positive_rat(Rat(4), 16);
  Interval ival = Interval::make(k, kp);
  bool from_left = g.chance(1, 2);
  PointedFiniteMetric pm =
      pointed_metric_of(ival, from_left ? ival.left() : ival.right());
  if (!check_path_axioms(pm, r)) {
    return njson{{"k", elem_j(k, space)},
                 {"kp", elem_j(kp, space)},
                 {"r", format_rat(r)},
                 {"basepoint", from_left ? "left" : "right"}}
        .dump();
  }
  return std::nullopt;
}

std::optional<std::string> type_metric_case(Gen& g, const BaseSpace& space,
                                            const GenBounds& b) {
  DeskModel m = g.model(space, b);
  auto [t1, t2] = g.type_pair(m, space, b);
  TypePoint t3 = g.type_pair(m, space, b).first;
  auto cx = [&] {
    return njson{{"model", njson::parse(format_desk_model(m, space))},
                 {"t1", type_j(t1, space)},
                 {"t2", type_j(t2, space)},
                 {"t3", type_j(t3, space)}}
        .dump();
  };

  const Rat diam = space.diameter();
  Rat d12 = type_distance(t1, t2, m, space);
  if (d12 < 0 || d12 > diam) return cx();
  if (d12 != type_distance(t2, t1, m, space)) return cx();
  if ((d12 == 0) != type_equal(t1, t2)) return cx();
  if (type_distance(t1, t1, m, space) != 0) return cx();
  if (d12 > type_distance(t1, t3, m, space) + type_distance(t3, t2, m, space)) {
    return cx();
  }
  const bool p1 = std::holds_alternative<PathTypePoint>(t1);
  const bool p2 = std::holds_alternative<PathTypePoint>(t2);
  if (p1 != p2 && d12 != diam) return cx();
  if (p1 && p2) {
    const auto& a = std::get<PathTypePoint>(t1);
    const auto& c = std::get<PathTypePoint>(t2);
    if (*m.locate(a.m) == *m.locate(c.m) &&
        realization_oracle(t1, t2, m, space) != d12) {
      return cx();
    }
  }
  return std::nullopt;
}

std::optional<std::string> main_theorem_case(Gen& g, const BaseSpace& space,
                                             const GenBounds& b) {
  BasePoint x = g.point(space);
  BasePoint y = g.point(space);
  auto [k, l] = witness_pair(x, y, space);
  Rat want = space.der(x, y);
  if (distance(k, l) != ExtRat{want} ||
      distance_trunc(k, l, space.diameter()) != want) {
    return njson{{"x", point_j(x, space)}, {"y", point_j(y, space)}}.dump();
  }

  ForestElement kp = g.element(space, b);
  ForestElement lp =
      g.chance(1, 2) ? g.mutate(kp, space, b) : g.element(space, b);
  if (space.der(tp_base(kp), tp_base(lp)) >
      distance_trunc(kp, lp, space.diameter())) {
    return njson{{"k", elem_j(kp, space)}, {"l", elem_j(lp, space)}}.dump();
  }
  return std::nullopt;
}

RunReport drive(const SuiteConfig& cfg, const BaseSpace& space,
                const CaseFn& one) {
  RunReport rep;
  rep.suite = cfg.suite;
  const auto t0 = std::chrono::steady_clock::now();
  Gen root(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    Gen g = root.sub(i);
    if (auto cx = one(g, space, cfg.bounds)) {
      rep.violations.push_back({i, std::move(*cx)});
    }
    ++rep.cases;
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

// Every finite pointed metric that fails the endpoint axiom; the canonical
// non-arc witness.
bool tripod_rejected() {
  std::vector<std::vector<Rat>> dist{
      {Rat(0), Rat(1), Rat(1), Rat(1)},
      {Rat(1), Rat(0), Rat(2), Rat(2)},
      {Rat(1), Rat(2), Rat(0), Rat(2)},
      {Rat(1), Rat(2), Rat(2), Rat(0)}};
  auto pm = make_pointed_metric({"c", "i", "j", "k"}, std::move(dist), 1);
  return !check_path_axioms(pm, Rat(3));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "metric-axioms",   "meet-bounds",    "interval-delta",
      "projection-unique", "tree-containment", "big-distance",
      "parallel-paths",  "entourage-laws", "path-axioms",
      "type-metric",     "main-theorem"};
  return names;
}

RunReport run_suite(const SuiteConfig& cfg, const BaseSpace& space) {
  static const std::
      unordered_map<std::string, std::optional<std::string> (*)(
                                     Gen&, const BaseSpace&, const GenBounds&)>
          table{{"metric-axioms", metric_axioms_case},
                {"meet-bounds", meet_bounds_case},
                {"interval-delta", interval_delta_case},
                {"projection-unique", projection_unique_case},
                {"tree-containment", tree_containment_case},
                {"big-distance", big_distance_case},
                {"parallel-paths", parallel_paths_case},
                {"entourage-laws", entourage_laws_case},
                {"path-axioms", path_axioms_case},
                {"type-metric", type_metric_case},
                {"main-theorem", main_theorem_case}};
  auto it = table.find(cfg.suite);
  if (it == table.end()) fail(Errc::unknown_suite, "unknown suite " + cfg.suite);

  RunReport rep = drive(cfg, space, it->second);

  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.suite == "path-axioms") {
    if (!tripod_rejected()) {
      rep.violations.push_back(
          {rep.cases, R"({"note":"tripod metric accepted"})"});
    }
    ++rep.cases;
  }
  if (cfg.suite == "main-theorem" &&
      space.kind() == SpaceKind::finite_discrete) {
    // Exhaustive witness sweep over the whole finite instance.
    for (std::size_t i = 0; i < space.point_count(); ++i) {
      for (std::size_t j = 0; j < space.point_count(); ++j) {
        BasePoint x = FinitePoint{i}, y = FinitePoint{j};
        auto [k, l] = witness_pair(x, y, space);
        Rat want = space.der(x, y);
        if (distance(k, l) != ExtRat{want} ||
            distance_trunc(k, l, space.diameter()) != want) {
          rep.violations.push_back(
              {rep.cases, njson{{"x", point_j(x, space)},
                                {"y", point_j(y, space)}}
                              .dump()});
        }
        ++rep.cases;
      }
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::string format_report(const RunReport& r) {
  njson j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  njson arr = njson::array();
  for (const auto& v : r.violations) {
    arr.push_back(
        njson{{"case", v.case_index},
              {"counterexample", njson::parse(v.counterexample)}});
  }
  j["violations"] = std::move(arr);
  j["wall_ms"] = r.wall_ms;
  return j.dump();
}

}  // namespace rforest

#include "rforest/json_io.hpp"

#include <json.hpp>

#include "rforest/errors.hpp"

namespace rforest {

namespace {

using njson = nlohmann::ordered_json;

njson parse_text(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const njson::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

Rat rat_from(const njson& v) {
  if (!v.is_string()) fail(Errc::parse_error, "expected a rational string");
  return parse_rat(v.get<std::string>());
}

njson point_json(const BasePoint& x, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      return space.labels()[std::get<FinitePoint>(x).index];
    case SpaceKind::interval:
      return format_rat(std::get<IntervalPoint>(x).t);
    case SpaceKind::tail: {
      const auto& p = std::get<TailPoint>(x);
      if (p.n) return *p.n;
      return "INF";
    }
  }
  fail(Errc::parse_error, "unreachable space kind");
}

BasePoint point_from(const njson& v, const BaseSpace& space) {
  BasePoint x;
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      if (!v.is_string()) fail(Errc::parse_error, "expected a point label");
      x = FinitePoint{space.label_index(v.get<std::string>())};
      break;
    case SpaceKind::interval:
      x = IntervalPoint{rat_from(v)};
      break;
    case SpaceKind::tail:
      if (v.is_string() && v.get<std::string>() == "INF") {
        x = TailPoint{std::nullopt};
      } else if (v.is_number_unsigned()) {
        x = TailPoint{v.get<std::uint64_t>()};
      } else {
        fail(Errc::parse_error, "expected a natural number or \"INF\"");
      }
      break;
  }
  space.require_point(x);
  return x;
}

njson element_json(const ForestElement& k, const BaseSpace& space) {
  njson arr = njson::array();
  for (const auto& b : k.breakpoints()) {
    njson o;
    o["r"] = format_rat(b.r);
    o["x"] = point_json(b.x, space);
    if (b.label) o["label"] = *b.label;
    arr.push_back(std::move(o));
  }
  return njson{{"breakpoints", std::move(arr)}};
}

ForestElement element_from(const njson& j, const BaseSpace& space) {
  if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    fail(Errc::parse_error, "expected an object with a breakpoints array");
  }
  std::vector<Breakpoint> bps;
  for (const auto& o : j["breakpoints"]) {
    Breakpoint b;
    b.r = rat_from(o.at("r"));
    b.x = point_from(o.at("x"), space);
    if (o.contains("label")) {
      if (!o["label"].is_number_unsigned()) {
        fail(Errc::parse_error, "labels are natural numbers");
      }
      b.label = o["label"].get<std::uint64_t>();
    }
    bps.push_back(std::move(b));
  }
  return ForestElement::make(space, std::move(bps));
}

njson path_json(const Path& f, const BaseSpace& space) {
  njson arr = njson::array();
  for (const auto& p : f.points()) {
    arr.push_back(njson{{"r", format_rat(p.r)}, {"x", point_json(p.x, space)}});
  }
  return njson{{"breakpoints", std::move(arr)}};
}

Path path_from(const njson& j, const BaseSpace& space) {
  if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    fail(Errc::parse_error, "expected an object with a breakpoints array");
  }
  std::vector<PathPoint> pts;
  for (const auto& o : j["breakpoints"]) {
    pts.push_back({rat_from(o.at("r")), point_from(o.at("x"), space)});
  }
  return Path::make(space, std::move(pts));
}

}  // namespace

BaseSpace parse_space(const std::string& text) {
  njson j = parse_text(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    fail(Errc::parse_error, "expected an object with a kind");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "finite_discrete") {
    std::vector<std::string> labels;
    for (const auto& p : j.at("points")) labels.push_back(p.get<std::string>());
    std::vector<std::vector<Rat>> metric;
    for (const auto& row : j.at("metric")) {
      std::vector<Rat> out;
      for (const auto& v : row) out.push_back(rat_from(v));
      metric.push_back(std::move(out));
    }
    return BaseSpace::finite_discrete(std::move(labels), std::move(metric));
  }
  if (kind == "interval") return BaseSpace::interval(rat_from(j.at("diameter")));
  if (kind == "tail_compactification") return BaseSpace::tail();
  fail(Errc::parse_error, "unknown space kind " + kind);
}

std::string format_space(const BaseSpace& space) {
  njson j;
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      j["kind"] = "finite_discrete";
      j["points"] = space.labels();
      njson rows = njson::array();
      for (const auto& row : space.metric()) {
        njson out = njson::array();
        for (const auto& v : row) out.push_back(format_rat(v));
        rows.push_back(std::move(out));
      }
      j["metric"] = std::move(rows);
      break;
    }
    case SpaceKind::interval:
      j["kind"] = "interval";
      j["diameter"] = format_rat(space.diameter());
      break;
    case SpaceKind::tail:
      j["kind"] = "tail_compactification";
      break;
  }
  return j.dump();
}

BasePoint parse_point_text(const std::string& token, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      BasePoint x = FinitePoint{space.label_index(token)};
      return x;
    }
    case SpaceKind::interval: {
      BasePoint x = IntervalPoint{parse_rat(token)};
      space.require_point(x);
      return x;
    }
    case SpaceKind::tail: {
      if (token == "INF") return TailPoint{std::nullopt};
      Rat v = parse_rat(token);
      if (v < 0 || v.get_den() != 1 ||
          v > Rat(static_cast<unsigned long>(space.truncation_bound()))) {
        fail(Errc::parse_error, "tail points are bounded naturals or INF");
      }
      BasePoint x = TailPoint{v.get_num().get_ui()};
      space.require_point(x);
      return x;
    }
  }
  fail(Errc::parse_error, "unreachable space kind");
}

ForestElement parse_element(const std::string& text, const BaseSpace& space) {
  return element_from(parse_text(text), space);
}

std::string format_element(const ForestElement& k, const BaseSpace& space) {
  return element_json(k, space).dump();
}

Path parse_path(const std::string& text, const BaseSpace& space) {
  return path_from(parse_text(text), space);
}

std::string format_path(const Path& f, const BaseSpace& space) {
  return path_json(f, space).dump();
}

TypePoint parse_type_point(const std::string& text, const BaseSpace& space) {
  njson j = parse_text(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    fail(Errc::parse_error, "expected an object with a kind");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "path") {
    return PathTypePoint{element_from(j.at("m"), space),
                         path_from(j.at("f"), space)};
  }
  if (kind == "infinite") return InfiniteTypePoint{point_from(j.at("x"), space)};
  fail(Errc::parse_error, "unknown type point kind " + kind);
}

std::string format_type_point(const TypePoint& t, const BaseSpace& space) {
  njson j;
  if (std::holds_alternative<PathTypePoint>(t)) {
    const auto& p = std::get<PathTypePoint>(t);
    j["kind"] = "path";
    j["m"] = element_json(p.m, space);
    j["f"] = path_json(p.f, space);
  } else {
    j["kind"] = "infinite";
    j["x"] = point_json(std::get<InfiniteTypePoint>(t).x, space);
  }
  return j.dump();
}

DeskModel parse_desk_model(const std::string& text, const BaseSpace& space) {
  njson j = parse_text(text);
  if (!j.is_object() || !j.contains("trees") || !j["trees"].is_array()) {
    fail(Errc::parse_error, "expected an object with a trees array");
  }
  std::vector<FiniteTree> trees;
  for (const auto& t : j["trees"]) {
    std::vector<std::pair<ForestElement, ForestElement>> gens;
    for (const auto& pair : t.at("intervals")) {
      if (!pair.is_array() || pair.size() != 2) {
        fail(Errc::parse_error, "tree intervals are element pairs");
      }
      gens.emplace_back(element_from(pair[0], space),
                        element_from(pair[1], space));
    }
    trees.push_back(FiniteTree::make(std::move(gens)));
  }
  return DeskModel::make(std::move(trees));
}

std::string format_desk_model(const DeskModel& m, const BaseSpace& space) {
  njson trees = njson::array();
  for (const auto& t : m.trees()) {
    njson gens = njson::array();
    for (const auto& [a, b] : t.generators()) {
      gens.push_back(njson::array({element_json(a, space), element_json(b, space)}));
    }
    trees.push_back(njson{{"intervals", std::move(gens)}});
  }
  return njson{{"trees", std::move(trees)}}.dump();
}

PointedFiniteMetric parse_pointed_metric(const std::string& text) {
  njson j = parse_text(text);
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  std::vector<std::vector<Rat>> dist;
  for (const auto& row : j.at("dist")) {
    std::vector<Rat> out;
    for (const auto& v : row) out.push_back(rat_from(v));
    dist.push_back(std::move(out));
  }
  if (!j.at("basepoint").is_number_unsigned()) {
    fail(Errc::parse_error, "basepoint is an index");
  }
  return make_pointed_metric(std::move(labels), std::move(dist),
                             j["basepoint"].get<std::size_t>());
}

std::string format_region(const Region& s, const BaseSpace& space) {
  njson j;
  if (std::holds_alternative<FiniteRegion>(s)) {
    j["kind"] = "finite";
    njson pts = njson::array();
    const auto& members = std::get<FiniteRegion>(s).members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i]) pts.push_back(space.labels()[i]);
    }
    j["points"] = std::move(pts);
  } else if (std::holds_alternative<IntervalRegion>(s)) {
    j["kind"] = "interval";
    njson comps = njson::array();
    for (const auto& c : std::get<IntervalRegion>(s).components) {
      comps.push_back(njson{{"lo", format_rat(c.lo)},
                            {"hi", format_rat(c.hi)},
                            {"lo_closed", c.lo_closed},
                            {"hi_closed", c.hi_closed}});
    }
    j["components"] = std::move(comps);
  } else {
    const auto& t = std::get<TailRegion>(s);
    j["kind"] = "tail";
    j["has_inf"] = t.has_inf;
    j["points"] = t.pts;
  }
  return j.dump();
}

std::string format_interval(const Interval& i, const BaseSpace& space) {
  njson elems = njson::array();
  njson pos = njson::array();
  for (const auto& e : i.elements()) elems.push_back(element_json(e, space));
  for (const auto& p : i.positions()) pos.push_back(format_rat(p));
  return njson{{"elements", std::move(elems)}, {"positions", std::move(pos)}}.dump();
}

std::string format_tree(const FiniteTree& t, const BaseSpace& space) {
  njson elems = njson::array();
  for (const auto& e : t.elements()) elems.push_back(element_json(e, space));
  return njson{{"elements", std::move(elems)}}.dump();
}

}  // namespace rforest

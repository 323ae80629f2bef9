#pragma once

#include <string>

#include "rforest/path_space.hpp"
#include "rforest/type_space.hpp"

// JSON text encodings. Rationals are strings "p/q" or integer strings in
// lowest terms; base points follow the space kind (finite label string,
// rational string, natural number or "INF"). Formatting is canonical: the
// same value always yields the same bytes.
namespace rforest {

BaseSpace parse_space(const std::string& text);
std::string format_space(const BaseSpace& space);

// One bare token, as seen on a command line: "a", "7/2", "5", "INF".
BasePoint parse_point_text(const std::string& token, const BaseSpace& space);

ForestElement parse_element(const std::string& text, const BaseSpace& space);
std::string format_element(const ForestElement& k, const BaseSpace& space);

Path parse_path(const std::string& text, const BaseSpace& space);
std::string format_path(const Path& f, const BaseSpace& space);

TypePoint parse_type_point(const std::string& text, const BaseSpace& space);
std::string format_type_point(const TypePoint& t, const BaseSpace& space);

DeskModel parse_desk_model(const std::string& text, const BaseSpace& space);
std::string format_desk_model(const DeskModel& m, const BaseSpace& space);

PointedFiniteMetric parse_pointed_metric(const std::string& text);

std::string format_region(const Region& s, const BaseSpace& space);

// Elements in arc order with their positions along the arc.
std::string format_interval(const Interval& i, const BaseSpace& space);
// Elements in canonical order.
std::string format_tree(const FiniteTree& t, const BaseSpace& space);

}  // namespace rforest

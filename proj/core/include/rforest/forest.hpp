#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rforest/base_space.hpp"

namespace rforest {

// ---------------------------------------------------------------------------
// Forest elements
// ---------------------------------------------------------------------------

// One station of an element: position, value, branch label. The label is
// absent exactly at the last breakpoint.
struct Breakpoint {
  Rat r;
  BasePoint x;
  std::optional<std::uint64_t> label;

  bool operator==(const Breakpoint& o) const {
    return r == o.r && x == o.x && label == o.label;
  }
};

// A finitely presented element: strictly increasing breakpoints starting at
// 0, values 1-Lipschitz against der on consecutive breakpoints. Immutable
// once built; equality is structural.
class ForestElement {
 public:
  static ForestElement make(const BaseSpace& space, std::vector<Breakpoint> bps);

  const std::vector<Breakpoint>& breakpoints() const { return bps_; }
  std::size_t size() const { return bps_.size(); }
  const Rat& length() const { return bps_.back().r; }
  const BasePoint& root() const { return bps_.front().x; }
  const BasePoint& tip() const { return bps_.back().x; }

  bool operator==(const ForestElement& o) const { return bps_ == o.bps_; }

 private:
  friend ForestElement prefix_of(const ForestElement&, std::size_t);
  friend ForestElement point_element(const BasePoint&);
  explicit ForestElement(std::vector<Breakpoint> bps) : bps_(std::move(bps)) {}
  std::vector<Breakpoint> bps_;
};

// First `count` breakpoints as an element (label cleared on the new last).
ForestElement prefix_of(const ForestElement& k, std::size_t count);

bool element_less(const ForestElement& a, const ForestElement& b);

ForestElement point_element(const BasePoint& x);

// Initial segment up to position r; the new last breakpoint loses its label.
// For r >= |K| this is K itself.
ForestElement restrict_element(const ForestElement& k, const Rat& r);

// Longest common initial segment; NONE when the roots differ.
std::optional<ForestElement> meet(const ForestElement& k, const ForestElement& l);
ForestElement meet_family(const std::vector<ForestElement>& ks);

bool same_component(const ForestElement& k, const ForestElement& l);
bool is_prefix(const ForestElement& k, const ForestElement& l);  // k below l

// d = |K| + |L| - 2|K meet L|, infinite across components.
ExtRat distance(const ForestElement& k, const ForestElement& l);
Rat distance_trunc(const ForestElement& k, const ForestElement& l, const Rat& s);

const BasePoint& tp_base(const ForestElement& k);
Rat eval_predicate(const FunctionSpec& f, const ForestElement& k,
                   const BaseSpace& space);

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

struct PathPoint {
  Rat r;
  BasePoint x;

  bool operator==(const PathPoint& o) const { return r == o.r && x == o.x; }
};

// A label-free element: the same domain and Lipschitz constraints.
class Path {
 public:
  static Path make(const BaseSpace& space, std::vector<PathPoint> pts);

  const std::vector<PathPoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  const Rat& length() const { return pts_.back().r; }
  const BasePoint& root() const { return pts_.front().x; }
  const BasePoint& tip() const { return pts_.back().x; }

  bool operator==(const Path& o) const { return pts_ == o.pts_; }

 private:
  friend Path strip(const ForestElement&);
  friend Path trusted_path(std::vector<PathPoint>);
  friend Path point_path(const BasePoint&);
  explicit Path(std::vector<PathPoint> pts) : pts_(std::move(pts)) {}
  std::vector<PathPoint> pts_;
};

Path strip(const ForestElement& k);
Path point_path(const BasePoint& x);

// Skips validation; the caller guarantees the invariants hold.
Path trusted_path(std::vector<PathPoint> pts);

std::optional<Path> path_meet(const Path& f, const Path& g);

// Extends m along f (which must start at m's tip), labelling the junction and
// every grafted interior breakpoint with fresh_label. A zero-length f returns
// m unchanged.
ForestElement graft(const BaseSpace& space, const ForestElement& m,
                    const Path& f, std::uint64_t fresh_label);

}  // namespace rforest

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rforest/forest.hpp"
#include "rforest/path_space.hpp"

namespace rforest {

// ---------------------------------------------------------------------------
// Intervals between two elements
// ---------------------------------------------------------------------------

// The finite set of elements between K and K' through their meet, stored in
// arc order from K with positions d(K, E) along the arc.
class Interval {
 public:
  static Interval make(const ForestElement& k, const ForestElement& kp);

  const ForestElement& left() const { return elems_.front(); }
  const ForestElement& right() const { return elems_.back(); }
  const ForestElement& bottom() const { return elems_[bottom_]; }
  const std::vector<ForestElement>& elements() const { return elems_; }
  const std::vector<Rat>& positions() const { return pos_; }
  const Rat& span() const { return pos_.back(); }
  bool contains(const ForestElement& e) const;

 private:
  Interval() = default;
  std::vector<ForestElement> elems_;
  std::vector<Rat> pos_;
  std::size_t bottom_ = 0;
};

// The arc read as a path of tip values from the given endpoint.
Path interval_as_path(const Interval& i, const ForestElement& basepoint);

// Pairwise distances of the interval elements, pointed at the given endpoint.
PointedFiniteMetric pointed_metric_of(const Interval& i,
                                      const ForestElement& basepoint);

// min{d_2r(A,K) + d_2r(A,K') - d_r(K,K'), r}, evaluated literally. Vanishes
// exactly on the interval; off it the value is twice the true distance,
// truncated at r.
Rat delta_predicate(const ForestElement& k, const ForestElement& kp,
                    const Rat& r, const ForestElement& a);

// ---------------------------------------------------------------------------
// Nearest-point projections
// ---------------------------------------------------------------------------

struct Projection {
  ForestElement point;
  Rat dist;
};

// Closed form: the longest of m, A meet K (if above m), A meet K' (if above
// m); the candidates sit on one chain.
Projection project_interval(const ForestElement& a, const Interval& i);

ExtRat dist_to_interval(const ForestElement& a, const Interval& i);

// Exhaustive reference route: the argmin over the enumerated elements and
// whether it was attained once.
struct EnumProjection {
  ForestElement point;
  Rat dist;
  bool unique;
};
EnumProjection project_interval_enum(const ForestElement& a, const Interval& i);

// ---------------------------------------------------------------------------
// Finite trees
// ---------------------------------------------------------------------------

// A staged union of intervals, each meeting the union of its predecessors.
class FiniteTree {
 public:
  static FiniteTree make(std::vector<std::pair<ForestElement, ForestElement>> generators);

  const std::vector<std::pair<ForestElement, ForestElement>>& generators() const {
    return gens_;
  }
  const std::vector<ForestElement>& elements() const { return elems_; }
  bool contains(const ForestElement& e) const;

 private:
  FiniteTree() = default;
  std::vector<std::pair<ForestElement, ForestElement>> gens_;
  std::vector<ForestElement> elems_;  // canonical order, deduplicated
};

// Global argmin over the tree's elements; a tied argmin is an invariant
// violation, not a tie to break.
Projection project_tree(const ForestElement& a, const FiniteTree& t);

// Convex closure: the tree generated by consecutive intervals of the tuple.
FiniteTree ccl(const std::vector<ForestElement>& as);

// ---------------------------------------------------------------------------
// The big-distance decomposition
// ---------------------------------------------------------------------------

struct BigDistance {
  ForestElement c_proj;  // projection of c onto [a, b]
  ForestElement e_proj;  // projection of e onto [a, b]
  bool degenerate;       // the projections coincide; no claim is made
  Rat total;             // d(c, e)
  Rat c_leg;             // d(c, c_proj)
  Rat across;            // d(c_proj, e_proj)
  Rat e_leg;             // d(e_proj, e)
};

BigDistance big_distance_decompose(const ForestElement& a, const ForestElement& b,
                                   const ForestElement& c, const ForestElement& e);

}  // namespace rforest

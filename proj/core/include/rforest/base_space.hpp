#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rforest/rational.hpp"

namespace rforest {

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

struct FinitePoint {
  std::size_t index;
  bool operator==(const FinitePoint&) const = default;
};

struct IntervalPoint {
  Rat t;
  bool operator==(const IntervalPoint& o) const { return t == o.t; }
};

// nullopt encodes the adjoined point at infinity.
struct TailPoint {
  std::optional<std::uint64_t> n;
  bool operator==(const TailPoint&) const = default;
};

using BasePoint = std::variant<FinitePoint, IntervalPoint, TailPoint>;

bool point_less(const BasePoint& a, const BasePoint& b);  // canonical total order

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

enum class SpaceKind { finite_discrete, interval, tail };

// One of the three ground instances. The topology is discrete for
// finite_discrete, the usual order topology for interval, and the one-point
// compactification of discrete naturals for tail; the metric refines the
// topology in each case and the topology is never finer than the metric.
class BaseSpace {
public:
  // Validates the matrix exhaustively: symmetry, zero diagonal exactly on the
  // diagonal, positivity off it, triangle inequality. A violating triple is
  // reported in the error message.
  static BaseSpace finite_discrete(std::vector<std::string> labels,
                                   std::vector<std::vector<Rat>> metric);
  static BaseSpace interval(const Rat& diameter);
  static BaseSpace tail(std::uint64_t truncation_bound = 1u << 16);

  SpaceKind kind() const { return kind_; }
  const Rat& diameter() const { return diameter_; }

  Rat der(const BasePoint& x, const BasePoint& y) const;

  // Throws unless the point belongs to this space (kind, range, bound).
  void require_point(const BasePoint& x) const;

  std::size_t point_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t label_index(const std::string& label) const;
  const std::vector<std::vector<Rat>>& metric() const { return metric_; }
  std::uint64_t truncation_bound() const { return truncation_bound_; }

private:
  BaseSpace() = default;
  SpaceKind kind_ = SpaceKind::finite_discrete;
  Rat diameter_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rat>> metric_;
  std::uint64_t truncation_bound_ = 0;
};

std::string format_point(const BasePoint& x, const BaseSpace& space);

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

struct FiniteRegion {
  std::vector<bool> members;
  bool operator==(const FiniteRegion&) const = default;
};

struct IntervalComponent {
  Rat lo, hi;
  bool lo_closed, hi_closed;
  bool operator==(const IntervalComponent& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed && hi_closed == o.hi_closed;
  }
};

// Canonical form: components sorted, pairwise disjoint and non-adjacent.
struct IntervalRegion {
  std::vector<IntervalComponent> components;
  bool operator==(const IntervalRegion&) const = default;
};

// has_inf: the region is {INF} together with all naturals except pts.
// Otherwise the region is exactly the finite set pts. Every representable
// region is clopen in the tail topology.
struct TailRegion {
  bool has_inf = false;
  std::vector<std::uint64_t> pts;
  bool operator==(const TailRegion&) const = default;
};

using Region = std::variant<FiniteRegion, IntervalRegion, TailRegion>;

Region empty_region(const BaseSpace& space);
Region whole_region(const BaseSpace& space);
Region point_region(const BasePoint& x, const BaseSpace& space);
IntervalRegion make_interval_region(std::vector<IntervalComponent> comps, const BaseSpace& space);

bool region_member(const BasePoint& x, const Region& s, const BaseSpace& space);
Region region_intersect(const Region& a, const Region& b, const BaseSpace& space);
Region region_union(const Region& a, const Region& b, const BaseSpace& space);
Region region_complement(const Region& a, const BaseSpace& space);
Region region_closure(const Region& a, const BaseSpace& space);
bool region_empty(const Region& a);
bool region_equal(const Region& a, const Region& b);
bool region_open(const Region& a, const BaseSpace& space);

// Strict metric fattening {x : der(x, S) < e}; empty for e <= 0.
Region fatten(const Region& s, const Rat& e, const BaseSpace& space);
// Closed fattening {x : der(x, S) <= d}; requires d >= 0.
Region fatten_closed(const Region& s, const Rat& d, const BaseSpace& space);

// ---------------------------------------------------------------------------
// Entourage bases
// ---------------------------------------------------------------------------

struct RadiusIndex {
  Rat r;  // metric entourage {der < r}; finite_discrete and interval kinds
  bool operator==(const RadiusIndex& o) const { return r == o.r; }
};

struct TailIndex {
  std::uint64_t n;  // diagonal plus T_n x T_n, T_n = {k >= n} with INF
  bool operator==(const TailIndex&) const = default;
};

using EntourageIndex = std::variant<RadiusIndex, TailIndex>;

bool entourage_member(const EntourageIndex& v, const BasePoint& x, const BasePoint& y,
                      const BaseSpace& space);
Region entourage_ball(const EntourageIndex& v, const BasePoint& x, const BaseSpace& space);
EntourageIndex entourage_intersect(const EntourageIndex& v, const EntourageIndex& w);

struct ShrinkResult {
  EntourageIndex index;
  Rat delta;
};

// Returns (j, delta) with 0 < delta < e such that the closed delta-fattening
// of closure(V_j(x)) lands inside V_i(x) for every x, and V_j o V_j within V_i.
ShrinkResult shrink(const EntourageIndex& v, const Rat& e, const BaseSpace& space);

// Open B around x and C around y with the closed s-fattening of closure(B)
// disjoint from closure(C). Requires der(x, y) > s >= 0.
std::pair<Region, Region> separate(const BasePoint& x, const BasePoint& y, const Rat& s,
                                   const BaseSpace& space);

// Deterministic canonical representative of S intersected with the open ball
// around y of radius b. Least point index / least denominator then least
// numerator in the leftmost component / least natural else INF.
BasePoint pick_within(const Region& s, const BasePoint& y, const Rat& b, const BaseSpace& space);

// ---------------------------------------------------------------------------
// Uniformly continuous test functions with modulus L * t
// ---------------------------------------------------------------------------

struct FiniteFunction {
  std::vector<Rat> values;
};

struct PiecewiseLinear {
  std::vector<std::pair<Rat, Rat>> knots;  // (position, value); spans [0, D]
};

struct TailFunction {
  std::vector<std::pair<std::uint64_t, Rat>> special;  // sorted by key
  Rat tail_value;                                      // value at INF and cofinitely
};

struct FunctionSpec {
  std::variant<FiniteFunction, PiecewiseLinear, TailFunction> fn;
  Rat lipschitz;
};

FunctionSpec make_function(FiniteFunction f, const Rat& lipschitz, const BaseSpace& space);
FunctionSpec make_function(PiecewiseLinear f, const Rat& lipschitz, const BaseSpace& space);
FunctionSpec make_function(TailFunction f, const Rat& lipschitz, const BaseSpace& space);
Rat eval_function(const FunctionSpec& f, const BasePoint& x, const BaseSpace& space);

}  // namespace rforest

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rforest/tree_geometry.hpp"

namespace rforest {

// ---------------------------------------------------------------------------
// Desk models: one finite tree per finite-distance component
// ---------------------------------------------------------------------------

class DeskModel {
 public:
  static DeskModel make(std::vector<FiniteTree> trees);

  const std::vector<FiniteTree>& trees() const { return trees_; }

  // Index of the tree whose elements are rooted at x, if any.
  std::optional<std::size_t> tree_of_root(const BasePoint& x) const;
  // Index of the tree containing m structurally, if any.
  std::optional<std::size_t> locate(const ForestElement& m) const;

  // Least natural strictly above every label used in the model.
  std::uint64_t fresh_label() const;

 private:
  DeskModel() = default;
  std::vector<FiniteTree> trees_;
};

// ---------------------------------------------------------------------------
// Type labels over a desk model
// ---------------------------------------------------------------------------

// A branch leaving the model at m along f, with f(0) = tp_base(m). A realized
// element is the zero-length case.
struct PathTypePoint {
  ForestElement m;
  Path f;
};

// The point-at-infinity types q_x.
struct InfiniteTypePoint {
  BasePoint x;
};

using TypePoint = std::variant<PathTypePoint, InfiniteTypePoint>;

TypePoint realized_type(const ForestElement& m);

bool type_equal(const TypePoint& a, const TypePoint& b);

// Root compatibility and membership of m in the model.
void validate_type(const TypePoint& t, const DeskModel& model,
                   const BaseSpace& space);

// The symbolic metric on type labels, clipped at diam X.
Rat type_distance(const TypePoint& t1, const TypePoint& t2,
                  const DeskModel& model, const BaseSpace& space);

// Independent route for same-tree path types: grafts explicit realizations
// with fresh labels, enumerating every shared-prefix configuration, and takes
// the least realized distance (clipped at diam X).
Rat realization_oracle(const TypePoint& t1, const TypePoint& t2,
                       const DeskModel& model, const BaseSpace& space);

// ---------------------------------------------------------------------------
// The main-theorem witnesses
// ---------------------------------------------------------------------------

// K = point element at x; L reaches y in a single step of length der(x,y).
std::pair<ForestElement, ForestElement> witness_pair(const BasePoint& x,
                                                     const BasePoint& y,
                                                     const BaseSpace& space);

struct S1Report {
  std::size_t witness_pairs = 0;
  std::size_t element_pairs = 0;
  std::size_t violations = 0;
};

// Witness pairs must achieve der(x,y) at truncation diam X; arbitrary element
// pairs must respect the Lipschitz lower bound der(tips) <= d_diam.
S1Report s1_empty_check(
    const BaseSpace& space,
    const std::vector<std::pair<BasePoint, BasePoint>>& point_pairs,
    const std::vector<std::pair<ForestElement, ForestElement>>& element_pairs);

}  // namespace rforest

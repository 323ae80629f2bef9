#include "rforest/type_space.hpp"

#include <algorithm>

#include "rforest/errors.hpp"

namespace rforest {

namespace {

const BasePoint& tree_root(const FiniteTree& t) {
  return t.elements().front().root();
}

}  // namespace

DeskModel DeskModel::make(std::vector<FiniteTree> trees) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      if (tree_root(trees[i]) == tree_root(trees[j])) {
        fail(Errc::duplicate_component_root,
             "two trees share a component root");
      }
    }
  }
  DeskModel m;
  m.trees_ = std::move(trees);
  return m;
}

std::optional<std::size_t> DeskModel::tree_of_root(const BasePoint& x) const {
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (tree_root(trees_[i]) == x) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> DeskModel::locate(const ForestElement& m) const {
  auto i = tree_of_root(m.root());
  if (i && trees_[*i].contains(m)) return i;
  return std::nullopt;
}

std::uint64_t DeskModel::fresh_label() const {
  std::uint64_t next = 0;
  for (const auto& t : trees_) {
    for (const auto& e : t.elements()) {
      for (const auto& b : e.breakpoints()) {
        if (b.label && *b.label >= next) next = *b.label + 1;
      }
    }
  }
  return next;
}

TypePoint realized_type(const ForestElement& m) {
  return PathTypePoint{m, point_path(tp_base(m))};
}

bool type_equal(const TypePoint& a, const TypePoint& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<InfiniteTypePoint>(a)) {
    return std::get<InfiniteTypePoint>(a).x == std::get<InfiniteTypePoint>(b).x;
  }
  const auto& pa = std::get<PathTypePoint>(a);
  const auto& pb = std::get<PathTypePoint>(b);
  return pa.m == pb.m && pa.f == pb.f;
}

void validate_type(const TypePoint& t, const DeskModel& model,
                   const BaseSpace& space) {
  if (std::holds_alternative<InfiniteTypePoint>(t)) {
    space.require_point(std::get<InfiniteTypePoint>(t).x);
    return;
  }
  const auto& p = std::get<PathTypePoint>(t);
  if (!model.locate(p.m)) {
    fail(Errc::invalid_type, "base element does not lie in the model");
  }
  if (!(p.f.root() == tp_base(p.m))) {
    fail(Errc::invalid_type, "path does not start at the element tip value");
  }
}

Rat type_distance(const TypePoint& t1, const TypePoint& t2,
                  const DeskModel& model, const BaseSpace& space) {
  validate_type(t1, model, space);
  validate_type(t2, model, space);
  const Rat diam = space.diameter();

  if (std::holds_alternative<InfiniteTypePoint>(t1) &&
      std::holds_alternative<InfiniteTypePoint>(t2)) {
    return space.der(std::get<InfiniteTypePoint>(t1).x,
                     std::get<InfiniteTypePoint>(t2).x);
  }
  if (std::holds_alternative<InfiniteTypePoint>(t1) !=
      std::holds_alternative<InfiniteTypePoint>(t2)) {
    return diam;
  }

  const auto& p1 = std::get<PathTypePoint>(t1);
  const auto& p2 = std::get<PathTypePoint>(t2);
  if (p1.m == p2.m) {
    auto h = path_meet(p1.f, p2.f);
    Rat raw = p1.f.length() + p2.f.length() - 2 * h->length();
    return std::min(raw, diam);
  }
  if (*model.locate(p1.m) != *model.locate(p2.m)) return diam;
  Rat gap = *distance(p1.m, p2.m);
  return std::min(Rat(p1.f.length() + gap + p2.f.length()), diam);
}

Rat realization_oracle(const TypePoint& t1, const TypePoint& t2,
                       const DeskModel& model, const BaseSpace& space) {
  validate_type(t1, model, space);
  validate_type(t2, model, space);
  if (!std::holds_alternative<PathTypePoint>(t1) ||
      !std::holds_alternative<PathTypePoint>(t2)) {
    fail(Errc::invalid_type, "realization needs two path types");
  }
  const auto& p1 = std::get<PathTypePoint>(t1);
  const auto& p2 = std::get<PathTypePoint>(t2);
  if (*model.locate(p1.m) != *model.locate(p2.m)) {
    fail(Errc::invalid_type, "realization needs one tree");
  }
  const Rat diam = space.diameter();
  const std::uint64_t l1 = model.fresh_label();
  const std::uint64_t l2 = l1 + 1;

  ForestElement a = graft(space, p1.m, p1.f, l1);
  if (!(p1.m == p2.m)) {
    ForestElement b = graft(space, p2.m, p2.f, l2);
    return std::min(*distance(a, b), diam);
  }

  // Shared-base configurations: realize both along a common initial segment
  // of f meet f', branching apart with distinct labels at each admitted
  // breakpoint length.
  auto h = *path_meet(p1.f, p2.f);
  std::optional<Rat> best;
  for (std::size_t cut = 1; cut <= h.size(); ++cut) {
    std::vector<PathPoint> shared(h.points().begin(),
                                  h.points().begin() + cut);
    const Rat off = shared.back().r;
    ForestElement stem =
        graft(space, p1.m, trusted_path(std::move(shared)), l1);
    std::vector<PathPoint> tail;
    for (const auto& q : p2.f.points()) {
      if (q.r >= off) tail.push_back({q.r - off, q.x});
    }
    ForestElement b = graft(space, stem, trusted_path(std::move(tail)), l2);
    Rat d = *distance(a, b);
    if (!best || d < *best) best = d;
  }
  return std::min(*best, diam);
}

std::pair<ForestElement, ForestElement> witness_pair(const BasePoint& x,
                                                     const BasePoint& y,
                                                     const BaseSpace& space) {
  space.require_point(x);
  space.require_point(y);
  ForestElement k = point_element(x);
  Rat d = space.der(x, y);
  if (d == 0) return {k, k};
  ForestElement l = ForestElement::make(space, {{Rat(0), x, 0}, {d, y, {}}});
  return {k, std::move(l)};
}

S1Report s1_empty_check(
    const BaseSpace& space,
    const std::vector<std::pair<BasePoint, BasePoint>>& point_pairs,
    const std::vector<std::pair<ForestElement, ForestElement>>& element_pairs) {
  S1Report rep;
  const Rat diam = space.diameter();
  for (const auto& [x, y] : point_pairs) {
    ++rep.witness_pairs;
    auto [k, l] = witness_pair(x, y, space);
    if (distance_trunc(k, l, diam) != space.der(x, y)) ++rep.violations;
  }
  for (const auto& [k, l] : element_pairs) {
    ++rep.element_pairs;
    if (space.der(tp_base(k), tp_base(l)) > distance_trunc(k, l, diam)) {
      ++rep.violations;
    }
  }
  return rep;
}

}  // namespace rforest

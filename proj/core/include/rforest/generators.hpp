#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rforest/type_space.hpp"

namespace rforest {

struct GenBounds {
  std::size_t max_breakpoints = 6;
  std::size_t max_family = 6;
  std::size_t max_intervals = 4;
  long max_denominator = 64;
};

// Seeded instance generator. Every product satisfies its validator by
// construction; the stream is fully determined by the seed, and sub() derives
// an independent stream per case so sharded runs reproduce byte for byte.
class Gen {
 public:
  explicit Gen(std::uint64_t seed);

  Gen sub(std::uint64_t index) const;

  std::uint64_t bits();
  std::size_t pick(std::size_t n);
  bool chance(std::uint32_t num, std::uint32_t den);
  // Uniform over rationals p/q with lo <= p/q <= hi, q bounded; the bound
  // stretches only when the window is narrower than 1/max_den.
  Rat rat_between(const Rat& lo, const Rat& hi, long max_den);
  Rat positive_rat(const Rat& hi, long max_den);

  BasePoint point(const BaseSpace& space);
  BasePoint point_other_than(const BasePoint& x, const BaseSpace& space);

  ForestElement element(const BaseSpace& space, const GenBounds& b);
  ForestElement element_with_root(const BasePoint& root, const BaseSpace& space,
                                  const GenBounds& b);
  // Truncate-then-extend variant living in the same component as base.
  ForestElement mutate(const ForestElement& base, const BaseSpace& space,
                       const GenBounds& b);

  Path path(const BaseSpace& space, const GenBounds& b);
  Path path_from(const BasePoint& root, const BaseSpace& space,
                 const GenBounds& b);
  Path mutate_path(const Path& base, const BaseSpace& space,
                   const GenBounds& b);

  // Nonempty, all members in one component.
  std::vector<ForestElement> family(const BaseSpace& space, const GenBounds& b);

  FiniteTree tree(const BaseSpace& space, const GenBounds& b);
  FiniteTree tree_with_root(const BasePoint& root, const BaseSpace& space,
                            const GenBounds& b);
  DeskModel model(const BaseSpace& space, const GenBounds& b);
  std::pair<TypePoint, TypePoint> type_pair(const DeskModel& m,
                                            const BaseSpace& space,
                                            const GenBounds& b);

  EntourageIndex entourage(const BaseSpace& space);
  // Positive, at most the diameter.
  Rat tolerance(const BaseSpace& space);

 private:
  TypePoint type_point(const DeskModel& m, const BaseSpace& space,
                       const GenBounds& b);
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace rforest

#pragma once

// Shared fixtures for the unit tests: the three canonical space instances and
// a small family of forest elements over the three-point space.

#include "rforest/base_space.hpp"
#include "rforest/forest.hpp"

namespace rft {

using namespace rforest;

// Three points with der(a,b) = der(b,c) = 1, der(a,c) = 2, diameter 2.
inline BaseSpace make_x3() {
  return BaseSpace::finite_discrete(
      {"a", "b", "c"},
      {{rat(0), rat(1), rat(2)}, {rat(1), rat(0), rat(1)}, {rat(2), rat(1), rat(0)}});
}

inline BaseSpace make_interval10() { return BaseSpace::interval(rat(10)); }

inline BaseSpace make_tail() { return BaseSpace::tail(); }

inline BasePoint fin(std::size_t i) { return FinitePoint{i}; }
inline BasePoint at(long num, long den = 1) { return IntervalPoint{rat(num, den)}; }
inline BasePoint nat(std::uint64_t n) { return TailPoint{n}; }
inline BasePoint inf() { return TailPoint{std::nullopt}; }

// Elements over make_x3(); a = 0, b = 1, c = 2.
inline ForestElement elem_x3(
    const BaseSpace& x3,
    std::vector<std::tuple<long, long, std::size_t, std::optional<std::uint64_t>>>
        raw) {
  std::vector<Breakpoint> bps;
  for (auto& [num, den, pt, label] : raw)
    bps.push_back({rat(num, den), fin(pt), label});
  return ForestElement::make(x3, std::move(bps));
}

inline ForestElement pt_a(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 0, {}}});
}
inline ForestElement k1(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 0, 0}, {1, 1, 1, {}}});
}
inline ForestElement k2(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 0, 0}, {1, 1, 1, 0}, {2, 1, 2, {}}});
}
inline ForestElement k3(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 0, 1}, {1, 1, 1, {}}});
}
inline ForestElement k5(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 0, 0}, {1, 1, 1, 1}, {2, 1, 2, {}}});
}
inline ForestElement k6(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 0, 2}, {1, 1, 1, {}}});
}
inline ForestElement l_b(const BaseSpace& x3) {
  return elem_x3(x3, {{0, 1, 1, {}}});
}

}  // namespace rft

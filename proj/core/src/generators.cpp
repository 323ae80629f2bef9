#include "rforest/generators.hpp"

#include <algorithm>

#include "rforest/errors.hpp"

namespace rforest {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kLabelSpread = 4;
constexpr std::uint64_t kTailSpread = 16;

}  // namespace

Gen::Gen(std::uint64_t seed) : seed_(seed), rng_(splitmix64(seed)) {}

Gen Gen::sub(std::uint64_t index) const {
  return Gen(splitmix64(seed_ ^ splitmix64(index)));
}

std::uint64_t Gen::bits() { return rng_(); }

std::size_t Gen::pick(std::size_t n) {
  if (n == 0) fail(Errc::empty_choice, "pick from an empty range");
  return static_cast<std::size_t>(bits() % n);
}

bool Gen::chance(std::uint32_t num, std::uint32_t den) {
  return pick(den) < num;
}

Rat Gen::rat_between(const Rat& lo, const Rat& hi, long max_den) {
  if (hi < lo) fail(Errc::empty_choice, "empty rational window");
  long den = 1 + static_cast<long>(pick(static_cast<std::size_t>(max_den)));
  for (;;) {
    Int a = ceil_rat(Rat(lo * den));
    Int b = floor_rat(Rat(hi * den));
    if (a <= b) {
      Int count = b - a + 1;
      Int num = a + Int(static_cast<unsigned long>(
                    bits() % count.get_ui()));
      return rat(num, Int(den));
    }
    den *= 2;
  }
}

Rat Gen::positive_rat(const Rat& hi, long max_den) {
  Rat lo = Rat(1) / rat(max_den);
  if (hi <= lo) return rat_between(hi / 2, hi, max_den);
  return rat_between(lo, hi, max_den);
}

BasePoint Gen::point(const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      return FinitePoint{pick(space.point_count())};
    case SpaceKind::interval:
      return IntervalPoint{rat_between(Rat(0), space.diameter(), 64)};
    case SpaceKind::tail:
      if (chance(1, 6)) return TailPoint{std::nullopt};
      return TailPoint{static_cast<std::uint64_t>(pick(kTailSpread))};
  }
  fail(Errc::empty_choice, "unreachable space kind");
}

BasePoint Gen::point_other_than(const BasePoint& x, const BaseSpace& space) {
  for (int i = 0; i < 64; ++i) {
    BasePoint y = point(space);
    if (!(y == x)) return y;
  }
  fail(Errc::empty_choice, "could not find a second point");
}

ForestElement Gen::element(const BaseSpace& space, const GenBounds& b) {
  return element_with_root(point(space), space, b);
}

ForestElement Gen::element_with_root(const BasePoint& root,
                                     const BaseSpace& space,
                                     const GenBounds& b) {
  const std::size_t n = 1 + pick(b.max_breakpoints);
  std::vector<Breakpoint> bps;
  bps.push_back({Rat(0), root, {}});
  for (std::size_t i = 1; i < n; ++i) {
    bps.back().label = bits() % kLabelSpread;
    BasePoint y = point(space);
    Rat need = space.der(bps.back().x, y);
    Rat gap = (need > 0 && chance(1, 4))
                  ? need
                  : Rat(need + positive_rat(Rat(2), b.max_denominator));
    bps.push_back({Rat(bps.back().r + gap), y, {}});
  }
  return ForestElement::make(space, std::move(bps));
}

ForestElement Gen::mutate(const ForestElement& base, const BaseSpace& space,
                          const GenBounds& b) {
  ForestElement k = prefix_of(base, 1 + pick(base.size()));
  const std::size_t extra = pick(b.max_breakpoints);
  if (extra == 0) return k;
  std::vector<Breakpoint> bps(k.breakpoints().begin(), k.breakpoints().end());
  for (std::size_t i = 0; i < extra; ++i) {
    bps.back().label = bits() % kLabelSpread;
    BasePoint y = point(space);
    Rat need = space.der(bps.back().x, y);
    Rat gap = (need > 0 && chance(1, 4))
                  ? need
                  : Rat(need + positive_rat(Rat(2), b.max_denominator));
    bps.push_back({Rat(bps.back().r + gap), y, {}});
  }
  return ForestElement::make(space, std::move(bps));
}

Path Gen::path(const BaseSpace& space, const GenBounds& b) {
  return path_from(point(space), space, b);
}

Path Gen::path_from(const BasePoint& root, const BaseSpace& space,
                    const GenBounds& b) {
  const std::size_t n = 1 + pick(b.max_breakpoints);
  std::vector<PathPoint> pts;
  pts.push_back({Rat(0), root});
  for (std::size_t i = 1; i < n; ++i) {
    BasePoint y = point(space);
    Rat need = space.der(pts.back().x, y);
    Rat gap = (need > 0 && chance(1, 4))
                  ? need
                  : Rat(need + positive_rat(Rat(2), b.max_denominator));
    pts.push_back({Rat(pts.back().r + gap), y});
  }
  return Path::make(space, std::move(pts));
}

Path Gen::mutate_path(const Path& base, const BaseSpace& space,
                      const GenBounds& b) {
  const std::size_t keep = 1 + pick(base.size());
  std::vector<PathPoint> pts(base.points().begin(),
                             base.points().begin() + keep);
  const std::size_t extra = pick(b.max_breakpoints);
  for (std::size_t i = 0; i < extra; ++i) {
    BasePoint y = point(space);
    Rat need = space.der(pts.back().x, y);
    Rat gap = (need > 0 && chance(1, 4))
                  ? need
                  : Rat(need + positive_rat(Rat(2), b.max_denominator));
    pts.push_back({Rat(pts.back().r + gap), y});
  }
  return Path::make(space, std::move(pts));
}

std::vector<ForestElement> Gen::family(const BaseSpace& space,
                                       const GenBounds& b) {
  const std::size_t n = 1 + pick(b.max_family);
  std::vector<ForestElement> out;
  out.push_back(element(space, b));
  while (out.size() < n) out.push_back(mutate(out[pick(out.size())], space, b));
  return out;
}

FiniteTree Gen::tree(const BaseSpace& space, const GenBounds& b) {
  return tree_with_root(point(space), space, b);
}

FiniteTree Gen::tree_with_root(const BasePoint& root, const BaseSpace& space,
                               const GenBounds& b) {
  const std::size_t n = 1 + pick(b.max_intervals);
  std::vector<ForestElement> pool{element_with_root(root, space, b)};
  std::vector<std::pair<ForestElement, ForestElement>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    const ForestElement& anchor = pool[pick(pool.size())];
    ForestElement leaf = mutate(pool[pick(pool.size())], space, b);
    gens.emplace_back(anchor, leaf);
    pool.push_back(std::move(leaf));
  }
  return FiniteTree::make(std::move(gens));
}

DeskModel Gen::model(const BaseSpace& space, const GenBounds& b) {
  std::size_t want = 1 + pick(2);
  std::vector<BasePoint> roots{point(space)};
  for (int i = 0; i < 64 && roots.size() < want; ++i) {
    BasePoint y = point(space);
    if (std::none_of(roots.begin(), roots.end(),
                     [&](const BasePoint& r) { return r == y; })) {
      roots.push_back(y);
    }
  }
  std::vector<FiniteTree> trees;
  for (const auto& r : roots) trees.push_back(tree_with_root(r, space, b));
  return DeskModel::make(std::move(trees));
}

TypePoint Gen::type_point(const DeskModel& m, const BaseSpace& space,
                          const GenBounds& b) {
  if (chance(1, 4)) return InfiniteTypePoint{point(space)};
  const auto& tree = m.trees()[pick(m.trees().size())];
  const ForestElement& base = tree.elements()[pick(tree.elements().size())];
  if (chance(1, 3)) return realized_type(base);
  return PathTypePoint{base, path_from(tp_base(base), space, b)};
}

std::pair<TypePoint, TypePoint> Gen::type_pair(const DeskModel& m,
                                               const BaseSpace& space,
                                               const GenBounds& b) {
  TypePoint a = type_point(m, space, b);
  if (std::holds_alternative<PathTypePoint>(a) && chance(1, 2)) {
    // Same base element with an overlapping branch: deep path meets.
    const auto& p = std::get<PathTypePoint>(a);
    return {a, PathTypePoint{p.m, mutate_path(p.f, space, b)}};
  }
  return {a, type_point(m, space, b)};
}

EntourageIndex Gen::entourage(const BaseSpace& space) {
  if (space.kind() == SpaceKind::tail) {
    return TailIndex{static_cast<std::uint64_t>(pick(12))};
  }
  return RadiusIndex{positive_rat(space.diameter(), 8)};
}

Rat Gen::tolerance(const BaseSpace& space) {
  return positive_rat(space.diameter(), 16);
}

}  // namespace rforest

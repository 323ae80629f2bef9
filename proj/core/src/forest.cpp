#include "rforest/forest.hpp"

#include <string>
#include <utility>

#include "rforest/errors.hpp"

namespace rforest {

namespace {

void check_spine(const BaseSpace& space, const std::vector<Rat>& rs,
                 const std::vector<BasePoint>& xs) {
  if (rs.empty() || rs.front() != 0)
    fail(Errc::missing_zero_breakpoint, "domain must start at 0");
  for (const auto& x : xs) space.require_point(x);
  for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
    if (!(rs[i] < rs[i + 1]))
      fail(Errc::parse_error, "breakpoints must be strictly increasing");
    if (space.der(xs[i], xs[i + 1]) > rs[i + 1] - rs[i])
      fail(Errc::lipschitz_violation,
           "der exceeds gap at segment " + std::to_string(i));
  }
}

}  // namespace

ForestElement ForestElement::make(const BaseSpace& space,
                                  std::vector<Breakpoint> bps) {
  std::vector<Rat> rs;
  std::vector<BasePoint> xs;
  rs.reserve(bps.size());
  xs.reserve(bps.size());
  for (const auto& b : bps) {
    rs.push_back(b.r);
    xs.push_back(b.x);
  }
  check_spine(space, rs, xs);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    if (!bps[i].label)
      fail(Errc::parse_error,
           "interior breakpoint " + std::to_string(i) + " carries no label");
  if (bps.back().label)
    fail(Errc::label_on_supremum, "last breakpoint carries a label");
  return ForestElement(std::move(bps));
}

ForestElement prefix_of(const ForestElement& k, std::size_t count) {
  std::vector<Breakpoint> bps(k.bps_.begin(), k.bps_.begin() + count);
  bps.back().label.reset();
  return ForestElement(std::move(bps));
}

ForestElement point_element(const BasePoint& x) {
  return ForestElement({Breakpoint{Rat(0), x, std::nullopt}});
}

bool element_less(const ForestElement& a, const ForestElement& b) {
  const auto& x = a.breakpoints();
  const auto& y = b.breakpoints();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].r != y[i].r) return x[i].r < y[i].r;
    if (!(x[i].x == y[i].x)) return point_less(x[i].x, y[i].x);
    if (x[i].label != y[i].label) {
      if (!x[i].label) return true;
      if (!y[i].label) return false;
      return *x[i].label < *y[i].label;
    }
  }
  return x.size() < y.size();
}

ForestElement restrict_element(const ForestElement& k, const Rat& r) {
  if (r < 0) fail(Errc::parse_error, "restriction bound must be nonnegative");
  const auto& bps = k.breakpoints();
  std::size_t n = bps.size();
  while (bps[n - 1].r > r) --n;
  if (n == bps.size()) return k;
  return prefix_of(k, n);
}

std::optional<ForestElement> meet(const ForestElement& k,
                                  const ForestElement& l) {
  if (!(k.root() == l.root())) return std::nullopt;
  const auto& a = k.breakpoints();
  const auto& b = l.breakpoints();
  std::size_t j = 0;
  while (j + 1 < a.size() && j + 1 < b.size() && a[j].label == b[j].label &&
         a[j + 1].r == b[j + 1].r && a[j + 1].x == b[j + 1].x)
    ++j;
  return prefix_of(k, j + 1);
}

ForestElement meet_family(const std::vector<ForestElement>& ks) {
  if (ks.empty()) fail(Errc::parse_error, "meet of an empty family");
  ForestElement acc = ks.front();
  for (std::size_t i = 1; i < ks.size(); ++i) {
    auto m = meet(acc, ks[i]);
    if (!m) fail(Errc::mixed_components, "family spans several components");
    acc = std::move(*m);
  }
  return acc;
}

bool same_component(const ForestElement& k, const ForestElement& l) {
  return k.root() == l.root();
}

bool is_prefix(const ForestElement& k, const ForestElement& l) {
  const auto& a = k.breakpoints();
  const auto& b = l.breakpoints();
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].r == b[i].r && a[i].x == b[i].x)) return false;
    if (i + 1 < a.size() && a[i].label != b[i].label) return false;
  }
  return true;
}

ExtRat distance(const ForestElement& k, const ForestElement& l) {
  auto m = meet(k, l);
  if (!m) return std::nullopt;
  return Rat(k.length() + l.length() - 2 * m->length());
}

Rat distance_trunc(const ForestElement& k, const ForestElement& l,
                   const Rat& s) {
  if (s <= 0) fail(Errc::bad_truncation, "truncation bound must be positive");
  return truncate_ext(distance(k, l), s);
}

const BasePoint& tp_base(const ForestElement& k) { return k.tip(); }

Rat eval_predicate(const FunctionSpec& f, const ForestElement& k,
                   const BaseSpace& space) {
  return eval_function(f, k.tip(), space);
}

Path Path::make(const BaseSpace& space, std::vector<PathPoint> pts) {
  std::vector<Rat> rs;
  std::vector<BasePoint> xs;
  rs.reserve(pts.size());
  xs.reserve(pts.size());
  for (const auto& p : pts) {
    rs.push_back(p.r);
    xs.push_back(p.x);
  }
  check_spine(space, rs, xs);
  return Path(std::move(pts));
}

Path strip(const ForestElement& k) {
  std::vector<PathPoint> pts;
  pts.reserve(k.size());
  for (const auto& b : k.breakpoints()) pts.push_back({b.r, b.x});
  return Path(std::move(pts));
}

Path point_path(const BasePoint& x) { return Path({PathPoint{Rat(0), x}}); }

Path trusted_path(std::vector<PathPoint> pts) { return Path(std::move(pts)); }

std::optional<Path> path_meet(const Path& f, const Path& g) {
  if (!(f.root() == g.root())) return std::nullopt;
  const auto& a = f.points();
  const auto& b = g.points();
  std::size_t j = 0;
  while (j + 1 < a.size() && j + 1 < b.size() && a[j + 1].r == b[j + 1].r &&
         a[j + 1].x == b[j + 1].x)
    ++j;
  return trusted_path({a.begin(), a.begin() + j + 1});
}

ForestElement graft(const BaseSpace& space, const ForestElement& m,
                    const Path& f, std::uint64_t fresh_label) {
  if (!(f.root() == tp_base(m)))
    fail(Errc::root_mismatch, "graft path must start at the stem tip");
  if (f.size() == 1) return m;
  std::vector<Breakpoint> bps = m.breakpoints();
  bps.back().label = fresh_label;
  const Rat base = m.length();
  const auto& pts = f.points();
  for (std::size_t i = 1; i < pts.size(); ++i)
    bps.push_back({base + pts[i].r, pts[i].x, fresh_label});
  bps.back().label.reset();
  return ForestElement::make(space, std::move(bps));
}

}  // namespace rforest

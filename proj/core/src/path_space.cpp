#include "rforest/path_space.hpp"

#include <algorithm>
#include <utility>

#include "rforest/errors.hpp"

namespace rforest {

namespace {

bool one_way(const Path& p, const Path& q, const PathEntourage& u,
             const BaseSpace& space) {
  for (const auto& pp : p.points()) {
    bool matched = false;
    for (const auto& qq : q.points()) {
      if (abs_rat(pp.r - qq.r) < u.e &&
          entourage_member(u.v, pp.x, qq.x, space)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool entourage_test(const Path& f, const Path& g, const PathEntourage& u,
                    const BaseSpace& space) {
  if (u.e <= 0) fail(Errc::parse_error, "entourage width must be positive");
  return one_way(f, g, u, space) && one_way(g, f, u, space);
}

bool intersection_law_holds(const Path& f, const Path& g,
                            const PathEntourage& u1, const PathEntourage& u2,
                            const BaseSpace& space) {
  PathEntourage both{entourage_intersect(u1.v, u2.v), std::min(u1.e, u2.e)};
  if (!entourage_test(f, g, both, space)) return true;
  return entourage_test(f, g, u1, space) && entourage_test(f, g, u2, space);
}

bool composition_law_holds(const Path& f, const Path& g, const Path& h,
                           const PathEntourage& u, const BaseSpace& space) {
  PathEntourage half{shrink(u.v, u.e, space).index, u.e / 2};
  if (!entourage_test(f, g, half, space)) return true;
  if (!entourage_test(g, h, half, space)) return true;
  return entourage_test(f, h, u, space);
}

EntourageLawReport entourage_laws_check(const std::vector<Path>& samples,
                                        const PathEntourage& u1,
                                        const PathEntourage& u2,
                                        const BaseSpace& space) {
  EntourageLawReport report;
  for (const auto& f : samples)
    for (const auto& g : samples) {
      ++report.pairs_checked;
      if (!intersection_law_holds(f, g, u1, u2, space)) ++report.violations;
      for (const auto& h : samples) {
        ++report.triples_checked;
        if (!composition_law_holds(f, g, h, u1, space)) ++report.violations;
      }
    }
  return report;
}

PointedFiniteMetric make_pointed_metric(std::vector<std::string> labels,
                                        std::vector<std::vector<Rat>> dist,
                                        std::size_t basepoint) {
  const std::size_t n = labels.size();
  if (n == 0 || dist.size() != n || basepoint >= n)
    fail(Errc::parse_error, "pointed metric shape mismatch");
  for (const auto& row : dist)
    if (row.size() != n) fail(Errc::parse_error, "pointed metric shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] != dist[j][i] || (i == j) != (dist[i][j] == 0) ||
          dist[i][j] < 0)
        fail(Errc::metric_axiom_violation,
             "pointed metric at " + labels[i] + "," + labels[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][j] > dist[i][k] + dist[k][j])
          fail(Errc::metric_axiom_violation,
               "triangle at " + labels[i] + "," + labels[j] + "," + labels[k]);
    }
  PointedFiniteMetric p;
  p.labels = std::move(labels);
  p.dist = std::move(dist);
  p.basepoint = basepoint;
  return p;
}

bool check_path_axioms(const PointedFiniteMetric& p, const Rat& r) {
  if (r <= 0) fail(Errc::bad_truncation, "radius must be positive");
  const auto& d = p.dist;
  const std::size_t n = d.size();
  const std::size_t c = p.basepoint;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j] > r) return false;
      // c is an endpoint of the arc through i and j
      if (std::min(d[c][i], d[c][j]) + d[i][j] != std::max(d[c][i], d[c][j]))
        return false;
      for (std::size_t k = j + 1; k < n; ++k) {
        Rat sum = d[i][j] + d[i][k] + d[j][k];
        Rat top = std::max({d[i][j], d[i][k], d[j][k]});
        if (sum != 2 * top) return false;
      }
    }
  return true;
}

ParallelPath parallel_path(const Path& f, const EntourageIndex& v, const Rat& e,
                           const BaseSpace& space) {
  if (e <= 0) fail(Errc::parse_error, "entourage width must be positive");
  auto [w, delta] = shrink(v, e, space);

  const auto& pts = f.points();
  const std::size_t n = pts.size() - 1;

  ParallelPath pp;
  pp.gamma = 1 + std::min(delta, e) / (2 * (f.length() + 1));
  for (const auto& p : pts) pp.dom.push_back(p.r);
  for (std::size_t i = 0; i < n; ++i)
    pp.gaps.push_back(space.der(pts[i].x, pts[i + 1].x));

  // stage regions, tip first
  std::vector<Region> balls, before, after;
  for (std::size_t i = 0; i <= n; ++i)
    balls.push_back(entourage_ball(w, pts[i].x, space));
  before.assign(n + 1, whole_region(space));
  after.assign(n + 1, whole_region(space));
  for (std::size_t i = 0; i < n; ++i)
    if (pp.gaps[i] > 0) {
      auto [b, c] =
          separate(pts[i].x, pts[i + 1].x, pp.gaps[i] / pp.gamma, space);
      before[i] = std::move(b);
      after[i + 1] = std::move(c);
    }

  pp.stages.assign(n + 1, empty_region(space));
  pp.stages[n] = region_intersect(
      balls[n], region_intersect(before[n], after[n], space), space);
  for (std::size_t i = n; i-- > 0;) {
    Region reach = pp.gaps[i] > 0
                       ? fatten(pp.stages[i + 1], pp.gamma * pp.gaps[i], space)
                       : pp.stages[i + 1];
    Region d = region_intersect(
        balls[i], region_intersect(before[i], after[i], space), space);
    pp.stages[i] = region_intersect(d, reach, space);
  }
  pp.o = pp.stages.front();
  return pp;
}

Path parallel_build(const ParallelPath& pp, const BasePoint& x,
                    const BaseSpace& space) {
  if (!region_member(x, pp.o, space))
    fail(Errc::point_outside_neighborhood,
         "build point must lie in the constructed neighborhood");
  std::vector<PathPoint> out;
  BasePoint cur = x;
  out.push_back({pp.gamma * pp.dom[0], cur});
  for (std::size_t i = 0; i < pp.gaps.size(); ++i) {
    if (pp.gaps[i] > 0)
      cur = pick_within(pp.stages[i + 1], cur, pp.gamma * pp.gaps[i], space);
    out.push_back({pp.gamma * pp.dom[i + 1], cur});
  }
  return Path::make(space, std::move(out));
}

}  // namespace rforest

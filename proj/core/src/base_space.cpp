#include "rforest/base_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "rforest/errors.hpp"

namespace rforest {

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

bool point_less(const BasePoint& a, const BasePoint& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* fa = std::get_if<FinitePoint>(&a))
    return fa->index < std::get<FinitePoint>(b).index;
  if (const auto* ia = std::get_if<IntervalPoint>(&a))
    return ia->t < std::get<IntervalPoint>(b).t;
  const auto& ta = std::get<TailPoint>(a);
  const auto& tb = std::get<TailPoint>(b);
  if (ta.n.has_value() != tb.n.has_value()) return ta.n.has_value();  // INF sorts last
  if (!ta.n) return false;
  return *ta.n < *tb.n;
}

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

BaseSpace BaseSpace::finite_discrete(std::vector<std::string> labels,
                                     std::vector<std::vector<Rat>> metric) {
  std::size_t n = labels.size();
  if (n == 0) fail(Errc::parse_error, "finite_discrete: no points");
  if (n == 1) fail(Errc::single_point_space, "finite_discrete: a single point has no branches");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) fail(Errc::parse_error, "duplicate point label " + labels[i]);
  if (metric.size() != n) fail(Errc::parse_error, "metric is not square");
  for (const auto& row : metric)
    if (row.size() != n) fail(Errc::parse_error, "metric is not square");

  auto witness2 = [&](std::size_t i, std::size_t j) { return labels[i] + "," + labels[j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (metric[i][i] != 0)
      fail(Errc::metric_axiom_violation, "nonzero diagonal at " + labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && metric[i][j] <= 0)
        fail(Errc::metric_axiom_violation, "distinct points at distance <= 0: " + witness2(i, j));
      if (metric[i][j] != metric[j][i])
        fail(Errc::metric_axiom_violation, "asymmetric at " + witness2(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (metric[i][k] > metric[i][j] + metric[j][k])
          fail(Errc::metric_axiom_violation,
               "triangle fails at " + labels[i] + "," + labels[j] + "," + labels[k]);

  BaseSpace s;
  s.kind_ = SpaceKind::finite_discrete;
  s.labels_ = std::move(labels);
  s.metric_ = std::move(metric);
  s.diameter_ = 0;
  for (const auto& row : s.metric_)
    for (const auto& d : row)
      if (d > s.diameter_) s.diameter_ = d;
  return s;
}

BaseSpace BaseSpace::interval(const Rat& diameter) {
  if (diameter < 0) fail(Errc::parse_error, "negative diameter");
  if (diameter == 0) fail(Errc::single_point_space, "interval of diameter 0");
  BaseSpace s;
  s.kind_ = SpaceKind::interval;
  s.diameter_ = diameter;
  return s;
}

BaseSpace BaseSpace::tail(std::uint64_t truncation_bound) {
  BaseSpace s;
  s.kind_ = SpaceKind::tail;
  s.diameter_ = 1;
  s.truncation_bound_ = truncation_bound;
  return s;
}

Rat BaseSpace::der(const BasePoint& x, const BasePoint& y) const {
  switch (kind_) {
    case SpaceKind::finite_discrete: {
      const auto& a = std::get<FinitePoint>(x);
      const auto& b = std::get<FinitePoint>(y);
      return metric_.at(a.index).at(b.index);
    }
    case SpaceKind::interval: {
      const auto& a = std::get<IntervalPoint>(x);
      const auto& b = std::get<IntervalPoint>(y);
      return abs_rat(a.t - b.t);
    }
    case SpaceKind::tail: {
      const auto& a = std::get<TailPoint>(x);
      const auto& b = std::get<TailPoint>(y);
      return a == b ? Rat(0) : Rat(1);
    }
  }
  throw std::logic_error("unreachable");
}

void BaseSpace::require_point(const BasePoint& x) const {
  switch (kind_) {
    case SpaceKind::finite_discrete: {
      const auto* p = std::get_if<FinitePoint>(&x);
      if (!p || p->index >= labels_.size()) fail(Errc::parse_error, "point outside space");
      return;
    }
    case SpaceKind::interval: {
      const auto* p = std::get_if<IntervalPoint>(&x);
      if (!p || p->t < 0 || p->t > diameter_)
        fail(Errc::parse_error, "point outside [0, diameter]");
      return;
    }
    case SpaceKind::tail: {
      const auto* p = std::get_if<TailPoint>(&x);
      if (!p) fail(Errc::parse_error, "point outside space");
      if (p->n && *p->n > truncation_bound_)
        fail(Errc::parse_error, "natural beyond truncation bound");
      return;
    }
  }
}

std::size_t BaseSpace::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  fail(Errc::parse_error, "unknown point label " + label);
}

std::string format_point(const BasePoint& x, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      return space.labels().at(std::get<FinitePoint>(x).index);
    case SpaceKind::interval:
      return format_rat(std::get<IntervalPoint>(x).t);
    case SpaceKind::tail: {
      const auto& p = std::get<TailPoint>(x);
      return p.n ? std::to_string(*p.n) : std::string("INF");
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Interval region plumbing
// ---------------------------------------------------------------------------

namespace {

bool comp_nonempty(const IntervalComponent& c) {
  return c.lo < c.hi || (c.lo == c.hi && c.lo_closed && c.hi_closed);
}

void normalize(IntervalRegion& r) {
  auto& cs = r.components;
  cs.erase(std::remove_if(cs.begin(), cs.end(), [](const auto& c) { return !comp_nonempty(c); }),
           cs.end());
  std::sort(cs.begin(), cs.end(), [](const IntervalComponent& a, const IntervalComponent& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;
    return a.hi < b.hi;
  });
  std::vector<IntervalComponent> out;
  for (const auto& c : cs) {
    if (!out.empty()) {
      auto& cur = out.back();
      bool touches = c.lo < cur.hi || (c.lo == cur.hi && (cur.hi_closed || c.lo_closed));
      if (touches) {
        if (c.hi > cur.hi) {
          cur.hi = c.hi;
          cur.hi_closed = c.hi_closed;
        } else if (c.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || c.hi_closed;
        }
        continue;
      }
    }
    out.push_back(c);
  }
  cs = std::move(out);
}

std::optional<IntervalComponent> comp_intersect(const IntervalComponent& a,
                                                const IntervalComponent& b) {
  IntervalComponent c;
  if (a.lo > b.lo) {
    c.lo = a.lo;
    c.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    c.lo = b.lo;
    c.lo_closed = b.lo_closed;
  } else {
    c.lo = a.lo;
    c.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    c.hi = a.hi;
    c.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    c.hi = b.hi;
    c.hi_closed = b.hi_closed;
  } else {
    c.hi = a.hi;
    c.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (!comp_nonempty(c)) return std::nullopt;
  return c;
}

// Clips to [0, D]; a bound forced onto the edge becomes closed (the fattening
// formulas below only ever clip past points that genuinely belong).
IntervalComponent clipped(Rat lo, bool lo_closed, Rat hi, bool hi_closed, const Rat& d) {
  if (lo < 0) {
    lo = 0;
    lo_closed = true;
  }
  if (hi > d) {
    hi = d;
    hi_closed = true;
  }
  return IntervalComponent{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

IntervalRegion metric_ball(const Rat& center, const Rat& radius, const Rat& d) {
  IntervalRegion r;
  if (radius > 0)
    r.components.push_back(clipped(center - radius, false, center + radius, false, d));
  normalize(r);
  return r;
}

bool comp_member(const Rat& x, const IntervalComponent& c) {
  bool lo_ok = c.lo < x || (c.lo == x && c.lo_closed);
  bool hi_ok = x < c.hi || (x == c.hi && c.hi_closed);
  return lo_ok && hi_ok;
}

// Sorted-vector set helpers for tail regions.
std::vector<std::uint64_t> vec_union(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
std::vector<std::uint64_t> vec_intersect(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
std::vector<std::uint64_t> vec_diff(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
bool vec_has(const std::vector<std::uint64_t>& a, std::uint64_t k) {
  return std::binary_search(a.begin(), a.end(), k);
}

TailRegion tail_whole() { return TailRegion{true, {}}; }

bool tail_member(const TailPoint& p, const TailRegion& r) {
  if (!p.n) return r.has_inf;
  return r.has_inf ? !vec_has(r.pts, *p.n) : vec_has(r.pts, *p.n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Region algebra
// ---------------------------------------------------------------------------

Region empty_region(const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      return FiniteRegion{std::vector<bool>(space.point_count(), false)};
    case SpaceKind::interval:
      return IntervalRegion{};
    case SpaceKind::tail:
      return TailRegion{false, {}};
  }
  throw std::logic_error("unreachable");
}

Region whole_region(const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      return FiniteRegion{std::vector<bool>(space.point_count(), true)};
    case SpaceKind::interval:
      return IntervalRegion{{IntervalComponent{Rat(0), space.diameter(), true, true}}};
    case SpaceKind::tail:
      return tail_whole();
  }
  throw std::logic_error("unreachable");
}

Region point_region(const BasePoint& x, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      std::vector<bool> m(space.point_count(), false);
      m[std::get<FinitePoint>(x).index] = true;
      return FiniteRegion{std::move(m)};
    }
    case SpaceKind::interval: {
      const Rat& t = std::get<IntervalPoint>(x).t;
      return IntervalRegion{{IntervalComponent{t, t, true, true}}};
    }
    case SpaceKind::tail: {
      const auto& p = std::get<TailPoint>(x);
      if (!p.n) throw std::logic_error("the point at infinity is not an isolated region");
      return TailRegion{false, {*p.n}};
    }
  }
  throw std::logic_error("unreachable");
}

IntervalRegion make_interval_region(std::vector<IntervalComponent> comps,
                                    const BaseSpace& space) {
  for (const auto& c : comps)
    if (c.lo < 0 || c.hi > space.diameter())
      fail(Errc::parse_error, "region component outside [0, diameter]");
  IntervalRegion r{std::move(comps)};
  normalize(r);
  return r;
}

bool region_member(const BasePoint& x, const Region& s, const BaseSpace& space) {
  space.require_point(x);
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
      return std::get<FiniteRegion>(s).members.at(std::get<FinitePoint>(x).index);
    case SpaceKind::interval: {
      const auto& t = std::get<IntervalPoint>(x).t;
      for (const auto& c : std::get<IntervalRegion>(s).components)
        if (comp_member(t, c)) return true;
      return false;
    }
    case SpaceKind::tail:
      return tail_member(std::get<TailPoint>(x), std::get<TailRegion>(s));
  }
  throw std::logic_error("unreachable");
}

Region region_intersect(const Region& a, const Region& b, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      auto out = std::get<FiniteRegion>(a);
      const auto& rb = std::get<FiniteRegion>(b);
      for (std::size_t i = 0; i < out.members.size(); ++i)
        out.members[i] = out.members[i] && rb.members[i];
      return out;
    }
    case SpaceKind::interval: {
      const auto& ra = std::get<IntervalRegion>(a);
      const auto& rb = std::get<IntervalRegion>(b);
      IntervalRegion out;
      for (const auto& ca : ra.components)
        for (const auto& cb : rb.components)
          if (auto c = comp_intersect(ca, cb)) out.components.push_back(*c);
      normalize(out);
      return out;
    }
    case SpaceKind::tail: {
      const auto& ra = std::get<TailRegion>(a);
      const auto& rb = std::get<TailRegion>(b);
      if (!ra.has_inf && !rb.has_inf) return TailRegion{false, vec_intersect(ra.pts, rb.pts)};
      if (!ra.has_inf) return TailRegion{false, vec_diff(ra.pts, rb.pts)};
      if (!rb.has_inf) return TailRegion{false, vec_diff(rb.pts, ra.pts)};
      return TailRegion{true, vec_union(ra.pts, rb.pts)};
    }
  }
  throw std::logic_error("unreachable");
}

Region region_union(const Region& a, const Region& b, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      auto out = std::get<FiniteRegion>(a);
      const auto& rb = std::get<FiniteRegion>(b);
      for (std::size_t i = 0; i < out.members.size(); ++i)
        out.members[i] = out.members[i] || rb.members[i];
      return out;
    }
    case SpaceKind::interval: {
      auto out = std::get<IntervalRegion>(a);
      const auto& rb = std::get<IntervalRegion>(b);
      out.components.insert(out.components.end(), rb.components.begin(), rb.components.end());
      normalize(out);
      return out;
    }
    case SpaceKind::tail: {
      const auto& ra = std::get<TailRegion>(a);
      const auto& rb = std::get<TailRegion>(b);
      if (!ra.has_inf && !rb.has_inf) return TailRegion{false, vec_union(ra.pts, rb.pts)};
      if (!ra.has_inf) return TailRegion{true, vec_diff(rb.pts, ra.pts)};
      if (!rb.has_inf) return TailRegion{true, vec_diff(ra.pts, rb.pts)};
      return TailRegion{true, vec_intersect(ra.pts, rb.pts)};
    }
  }
  throw std::logic_error("unreachable");
}

Region region_complement(const Region& a, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      auto out = std::get<FiniteRegion>(a);
      for (std::size_t i = 0; i < out.members.size(); ++i) out.members[i] = !out.members[i];
      return out;
    }
    case SpaceKind::interval: {
      const auto& ra = std::get<IntervalRegion>(a);
      IntervalRegion out;
      Rat cur = 0;
      bool cur_closed = true;
      for (const auto& c : ra.components) {
        out.components.push_back(IntervalComponent{cur, c.lo, cur_closed, !c.lo_closed});
        cur = c.hi;
        cur_closed = !c.hi_closed;
      }
      out.components.push_back(IntervalComponent{cur, space.diameter(), cur_closed, true});
      normalize(out);
      return out;
    }
    case SpaceKind::tail: {
      auto out = std::get<TailRegion>(a);
      out.has_inf = !out.has_inf;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Region region_closure(const Region& a, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete:
    case SpaceKind::tail:
      return a;  // every representable region is clopen in these kinds
    case SpaceKind::interval: {
      auto out = std::get<IntervalRegion>(a);
      for (auto& c : out.components) {
        c.lo_closed = true;
        c.hi_closed = true;
      }
      normalize(out);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

bool region_empty(const Region& a) {
  if (const auto* f = std::get_if<FiniteRegion>(&a))
    return std::none_of(f->members.begin(), f->members.end(), [](bool b) { return b; });
  if (const auto* i = std::get_if<IntervalRegion>(&a)) return i->components.empty();
  const auto& t = std::get<TailRegion>(a);
  return !t.has_inf && t.pts.empty();
}

bool region_equal(const Region& a, const Region& b) { return a == b; }

bool region_open(const Region& a, const BaseSpace& space) {
  if (space.kind() != SpaceKind::interval) return true;  // discrete-like kinds
  for (const auto& c : std::get<IntervalRegion>(a).components) {
    if (c.lo_closed && c.lo != 0) return false;
    if (c.hi_closed && c.hi != space.diameter()) return false;
  }
  return true;
}

Region fatten(const Region& s, const Rat& e, const BaseSpace& space) {
  if (e <= 0) return empty_region(space);
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      const auto& rs = std::get<FiniteRegion>(s);
      std::size_t n = space.point_count();
      std::vector<bool> out(n, false);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n && !out[i]; ++j)
          if (rs.members[j] && space.metric()[i][j] < e) out[i] = true;
      return FiniteRegion{std::move(out)};
    }
    case SpaceKind::interval: {
      const auto& rs = std::get<IntervalRegion>(s);
      IntervalRegion out;
      for (const auto& c : rs.components)
        out.components.push_back(clipped(c.lo - e, false, c.hi + e, false, space.diameter()));
      normalize(out);
      return out;
    }
    case SpaceKind::tail: {
      if (region_empty(s)) return s;
      if (e <= 1) return s;
      return tail_whole();
    }
  }
  throw std::logic_error("unreachable");
}

Region fatten_closed(const Region& s, const Rat& d, const BaseSpace& space) {
  if (d < 0) throw std::logic_error("fatten_closed: negative radius");
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      const auto& rs = std::get<FiniteRegion>(s);
      std::size_t n = space.point_count();
      std::vector<bool> out(n, false);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n && !out[i]; ++j)
          if (rs.members[j] && space.metric()[i][j] <= d) out[i] = true;
      return FiniteRegion{std::move(out)};
    }
    case SpaceKind::interval: {
      const auto& rs = std::get<IntervalRegion>(s);
      IntervalRegion out;
      for (const auto& c : rs.components)
        out.components.push_back(clipped(c.lo - d, true, c.hi + d, true, space.diameter()));
      normalize(out);
      return out;
    }
    case SpaceKind::tail: {
      if (region_empty(s)) return s;
      if (d < 1) return s;
      return tail_whole();
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Entourages
// ---------------------------------------------------------------------------

namespace {

bool in_tail_set(const TailPoint& p, std::uint64_t n) { return !p.n || *p.n >= n; }

TailRegion tail_set(std::uint64_t n) {
  TailRegion r{true, {}};
  r.pts.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) r.pts.push_back(k);
  return r;
}

}  // namespace

bool entourage_member(const EntourageIndex& v, const BasePoint& x, const BasePoint& y,
                      const BaseSpace& space) {
  if (const auto* rad = std::get_if<RadiusIndex>(&v)) {
    if (space.kind() == SpaceKind::tail)
      throw std::logic_error("radius entourage on tail space");
    return space.der(x, y) < rad->r;
  }
  const auto& n = std::get<TailIndex>(v).n;
  if (space.kind() != SpaceKind::tail) throw std::logic_error("tail entourage on metric-base space");
  const auto& a = std::get<TailPoint>(x);
  const auto& b = std::get<TailPoint>(y);
  return a == b || (in_tail_set(a, n) && in_tail_set(b, n));
}

Region entourage_ball(const EntourageIndex& v, const BasePoint& x, const BaseSpace& space) {
  if (const auto* rad = std::get_if<RadiusIndex>(&v)) {
    switch (space.kind()) {
      case SpaceKind::finite_discrete: {
        std::size_t n = space.point_count();
        std::size_t i = std::get<FinitePoint>(x).index;
        std::vector<bool> out(n, false);
        for (std::size_t j = 0; j < n; ++j) out[j] = space.metric()[i][j] < rad->r;
        return FiniteRegion{std::move(out)};
      }
      case SpaceKind::interval:
        return metric_ball(std::get<IntervalPoint>(x).t, rad->r, space.diameter());
      case SpaceKind::tail:
        throw std::logic_error("radius entourage on tail space");
    }
  }
  const auto& n = std::get<TailIndex>(v).n;
  const auto& p = std::get<TailPoint>(x);
  if (in_tail_set(p, n)) return tail_set(n);
  return TailRegion{false, {*p.n}};
}

EntourageIndex entourage_intersect(const EntourageIndex& v, const EntourageIndex& w) {
  if (const auto* rv = std::get_if<RadiusIndex>(&v)) {
    const auto& rw = std::get<RadiusIndex>(w);
    return RadiusIndex{rv->r < rw.r ? rv->r : rw.r};
  }
  const auto& tv = std::get<TailIndex>(v);
  const auto& tw = std::get<TailIndex>(w);
  return TailIndex{std::max(tv.n, tw.n)};
}

ShrinkResult shrink(const EntourageIndex& v, const Rat& e, const BaseSpace& space) {
  if (e <= 0) throw std::logic_error("shrink: e must be positive");
  if (const auto* rad = std::get_if<RadiusIndex>(&v)) {
    Rat quarter = rad->r / 4;
    Rat delta = (e < quarter ? e : quarter) / 2;
    return ShrinkResult{RadiusIndex{rad->r / 2}, delta};
  }
  (void)space;
  Rat one(1);
  Rat delta = (e < one ? e : one) / 2;
  return ShrinkResult{v, delta};
}

std::pair<Region, Region> separate(const BasePoint& x, const BasePoint& y, const Rat& s,
                                   const BaseSpace& space) {
  if (s < 0) fail(Errc::separation_impossible, "negative separation bound");
  Rat d = space.der(x, y);
  if (d <= s) fail(Errc::separation_impossible, "points are not further apart than the bound");
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      std::size_t n = space.point_count();
      std::size_t xi = std::get<FinitePoint>(x).index;
      std::vector<bool> b(n, false), c(n, false);
      b[xi] = true;
      for (std::size_t j = 0; j < n; ++j) c[j] = space.metric()[xi][j] > s;
      return {FiniteRegion{std::move(b)}, FiniteRegion{std::move(c)}};
    }
    case SpaceKind::interval: {
      Rat rho = (d - s) / 3;
      return {metric_ball(std::get<IntervalPoint>(x).t, rho, space.diameter()),
              metric_ball(std::get<IntervalPoint>(y).t, rho, space.diameter())};
    }
    case SpaceKind::tail: {
      const auto& a = std::get<TailPoint>(x);
      const auto& b = std::get<TailPoint>(y);
      if (!a.n) return {TailRegion{true, {*b.n}}, TailRegion{false, {*b.n}}};
      if (!b.n) return {TailRegion{false, {*a.n}}, TailRegion{true, {*a.n}}};
      return {TailRegion{false, {*a.n}}, TailRegion{false, {*b.n}}};
    }
  }
  throw std::logic_error("unreachable");
}

BasePoint pick_within(const Region& s, const BasePoint& y, const Rat& b, const BaseSpace& space) {
  switch (space.kind()) {
    case SpaceKind::finite_discrete: {
      const auto& rs = std::get<FiniteRegion>(s);
      for (std::size_t i = 0; i < rs.members.size(); ++i)
        if (rs.members[i] && space.der(y, FinitePoint{i}) < b) return FinitePoint{i};
      fail(Errc::empty_choice, "no point of the region lies within the ball");
    }
    case SpaceKind::interval: {
      Region ball = metric_ball(std::get<IntervalPoint>(y).t, b, space.diameter());
      Region t = region_intersect(s, ball, space);
      const auto& rt = std::get<IntervalRegion>(t);
      if (rt.components.empty())
        fail(Errc::empty_choice, "no point of the region lies within the ball");
      const auto& c = rt.components.front();
      return IntervalPoint{simplest_in(c.lo, c.lo_closed, c.hi, c.hi_closed)};
    }
    case SpaceKind::tail: {
      const auto& rs = std::get<TailRegion>(s);
      if (b <= 1) {
        // The open ball is the singleton {y}.
        if (b > 0 && tail_member(std::get<TailPoint>(y), rs)) return y;
        fail(Errc::empty_choice, "no point of the region lies within the ball");
      }
      // Ball is the whole space: least natural of the region, else INF.
      if (!rs.has_inf) {
        if (rs.pts.empty()) fail(Errc::empty_choice, "empty region");
        return TailPoint{rs.pts.front()};
      }
      std::uint64_t k = 0;
      while (vec_has(rs.pts, k)) ++k;
      return TailPoint{k};
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Test functions
// ---------------------------------------------------------------------------

FunctionSpec make_function(FiniteFunction f, const Rat& lipschitz, const BaseSpace& space) {
  if (space.kind() != SpaceKind::finite_discrete)
    throw std::logic_error("finite function on non-discrete space");
  std::size_t n = space.point_count();
  if (f.values.size() != n) fail(Errc::parse_error, "function arity mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs_rat(f.values[i] - f.values[j]) > lipschitz * space.metric()[i][j])
        fail(Errc::lipschitz_violation,
             "modulus exceeded between " + space.labels()[i] + " and " + space.labels()[j]);
  return FunctionSpec{std::move(f), lipschitz};
}

FunctionSpec make_function(PiecewiseLinear f, const Rat& lipschitz, const BaseSpace& space) {
  if (space.kind() != SpaceKind::interval)
    throw std::logic_error("piecewise-linear function on non-interval space");
  if (f.knots.size() < 2 || f.knots.front().first != 0 ||
      f.knots.back().first != space.diameter())
    fail(Errc::parse_error, "knots must span [0, diameter]");
  for (std::size_t i = 1; i < f.knots.size(); ++i) {
    if (f.knots[i - 1].first >= f.knots[i].first)
      fail(Errc::parse_error, "knot positions must increase");
    Rat dx = f.knots[i].first - f.knots[i - 1].first;
    Rat dv = abs_rat(f.knots[i].second - f.knots[i - 1].second);
    if (dv > lipschitz * dx)
      fail(Errc::lipschitz_violation, "piece " + std::to_string(i) + " exceeds modulus");
  }
  return FunctionSpec{std::move(f), lipschitz};
}

FunctionSpec make_function(TailFunction f, const Rat& lipschitz, const BaseSpace& space) {
  if (space.kind() != SpaceKind::tail)
    throw std::logic_error("tail function on non-tail space");
  std::sort(f.special.begin(), f.special.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < f.special.size(); ++i)
    if (f.special[i - 1].first == f.special[i].first)
      fail(Errc::parse_error, "duplicate special point");
  Rat lo = f.tail_value, hi = f.tail_value;
  for (const auto& [k, v] : f.special) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (hi - lo > lipschitz)
    fail(Errc::lipschitz_violation, "range diameter exceeds modulus at distance 1");
  return FunctionSpec{std::move(f), lipschitz};
}

Rat eval_function(const FunctionSpec& f, const BasePoint& x, const BaseSpace& space) {
  space.require_point(x);
  if (const auto* fin = std::get_if<FiniteFunction>(&f.fn))
    return fin->values.at(std::get<FinitePoint>(x).index);
  if (const auto* pl = std::get_if<PiecewiseLinear>(&f.fn)) {
    const Rat& t = std::get<IntervalPoint>(x).t;
    const auto& ks = pl->knots;
    for (std::size_t i = 1; i < ks.size(); ++i) {
      if (t > ks[i].first) continue;
      if (t == ks[i].first) return ks[i].second;
      const auto& [x0, v0] = ks[i - 1];
      const auto& [x1, v1] = ks[i];
      return v0 + (v1 - v0) * (t - x0) / (x1 - x0);
    }
    return ks.front().second;  // t == 0
  }
  const auto& tf = std::get<TailFunction>(f.fn);
  const auto& p = std::get<TailPoint>(x);
  if (p.n)
    for (const auto& [k, v] : tf.special)
      if (k == *p.n) return v;
  return tf.tail_value;
}

}  // namespace rforest

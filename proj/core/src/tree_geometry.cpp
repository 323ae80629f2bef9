#include "rforest/tree_geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rforest/errors.hpp"

namespace rforest {

Interval Interval::make(const ForestElement& k, const ForestElement& kp) {
  auto m = meet(k, kp);
  if (!m) fail(Errc::different_components, "endpoints lie in distinct components");

  Interval out;
  const auto& kb = k.breakpoints();
  for (std::size_t i = kb.size(); i-- > 0;) {
    if (kb[i].r < m->length()) break;
    out.elems_.push_back(prefix_of(k, i + 1));
    out.pos_.push_back(k.length() - kb[i].r);
  }
  out.bottom_ = out.elems_.size() - 1;
  const Rat base = k.length() - m->length();
  const auto& pb = kp.breakpoints();
  for (std::size_t i = 0; i < pb.size(); ++i) {
    if (pb[i].r <= m->length()) continue;
    out.elems_.push_back(prefix_of(kp, i + 1));
    out.pos_.push_back(base + pb[i].r - m->length());
  }
  return out;
}

bool Interval::contains(const ForestElement& e) const {
  for (const auto& x : elems_)
    if (x == e) return true;
  return false;
}

Path interval_as_path(const Interval& i, const ForestElement& basepoint) {
  std::vector<PathPoint> pts;
  if (basepoint == i.left()) {
    for (std::size_t j = 0; j < i.elements().size(); ++j)
      pts.push_back({i.positions()[j], tp_base(i.elements()[j])});
  } else if (basepoint == i.right()) {
    for (std::size_t j = i.elements().size(); j-- > 0;)
      pts.push_back({i.span() - i.positions()[j], tp_base(i.elements()[j])});
  } else {
    fail(Errc::parse_error, "basepoint must be an interval endpoint");
  }
  return trusted_path(std::move(pts));
}

PointedFiniteMetric pointed_metric_of(const Interval& i,
                                      const ForestElement& basepoint) {
  std::size_t c;
  if (basepoint == i.left())
    c = 0;
  else if (basepoint == i.right())
    c = i.elements().size() - 1;
  else
    fail(Errc::parse_error, "basepoint must be an interval endpoint");

  const auto& es = i.elements();
  std::vector<std::string> labels;
  std::vector<std::vector<Rat>> dist(es.size(), std::vector<Rat>(es.size()));
  for (std::size_t a = 0; a < es.size(); ++a) {
    labels.push_back(format_rat(i.positions()[a]));
    for (std::size_t b = 0; b < es.size(); ++b)
      dist[a][b] = *distance(es[a], es[b]);
  }
  return make_pointed_metric(std::move(labels), std::move(dist), c);
}

Rat delta_predicate(const ForestElement& k, const ForestElement& kp,
                    const Rat& r, const ForestElement& a) {
  ExtRat d = distance(k, kp);
  if (!is_finite(d) || *d > r)
    fail(Errc::bad_truncation, "d(K,K') exceeds the truncation radius");
  const Rat two_r = 2 * r;
  Rat value = distance_trunc(a, k, two_r) + distance_trunc(a, kp, two_r) -
              distance_trunc(k, kp, r);
  return std::min(value, r);
}

Projection project_interval(const ForestElement& a, const Interval& i) {
  auto b = meet(a, i.left());
  if (!b) fail(Errc::different_components, "element lies in another component");
  auto bp = meet(a, i.right());
  const ForestElement* best = &i.bottom();
  if (is_prefix(i.bottom(), *b) && b->length() > best->length()) best = &*b;
  if (is_prefix(i.bottom(), *bp) && bp->length() > best->length()) best = &*bp;
  return {*best, *distance(a, *best)};
}

ExtRat dist_to_interval(const ForestElement& a, const Interval& i) {
  if (!same_component(a, i.left())) return std::nullopt;
  return project_interval(a, i).dist;
}

EnumProjection project_interval_enum(const ForestElement& a, const Interval& i) {
  if (!same_component(a, i.left()))
    fail(Errc::different_components, "element lies in another component");
  const ForestElement* best = nullptr;
  Rat bd;
  bool unique = true;
  for (const auto& e : i.elements()) {
    Rat d = *distance(a, e);
    if (!best || d < bd) {
      best = &e;
      bd = d;
      unique = true;
    } else if (d == bd) {
      unique = false;
    }
  }
  return {*best, bd, unique};
}

FiniteTree FiniteTree::make(
    std::vector<std::pair<ForestElement, ForestElement>> generators) {
  if (generators.empty())
    fail(Errc::parse_error, "a tree needs at least one generating interval");
  FiniteTree out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!same_component(generators[i].first, generators[0].first))
      fail(Errc::different_components,
           "generating interval " + std::to_string(i) + " changes component");
    auto ival = Interval::make(generators[i].first, generators[i].second);
    if (i > 0) {
      bool touches = false;
      for (const auto& e : ival.elements())
        if (std::binary_search(out.elems_.begin(), out.elems_.end(), e,
                               element_less)) {
          touches = true;
          break;
        }
      if (!touches)
        fail(Errc::disconnected_interval,
             "generating interval " + std::to_string(i) +
                 " is disjoint from the union of its predecessors");
    }
    out.elems_.insert(out.elems_.end(), ival.elements().begin(),
                      ival.elements().end());
    std::sort(out.elems_.begin(), out.elems_.end(), element_less);
    out.elems_.erase(std::unique(out.elems_.begin(), out.elems_.end()),
                     out.elems_.end());
  }
  out.gens_ = std::move(generators);
  return out;
}

bool FiniteTree::contains(const ForestElement& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e, element_less);
}

Projection project_tree(const ForestElement& a, const FiniteTree& t) {
  if (!same_component(a, t.elements().front()))
    fail(Errc::different_components, "element lies in another component");
  const ForestElement* best = nullptr;
  Rat bd;
  bool unique = true;
  for (const auto& e : t.elements()) {
    Rat d = *distance(a, e);
    if (!best || d < bd) {
      best = &e;
      bd = d;
      unique = true;
    } else if (d == bd) {
      unique = false;
    }
  }
  if (!unique) fail(Errc::uniqueness_failure, "nearest tree element is tied");
  return {*best, bd};
}

FiniteTree ccl(const std::vector<ForestElement>& as) {
  if (as.empty()) fail(Errc::parse_error, "ccl of an empty tuple");
  for (const auto& a : as)
    if (!same_component(a, as.front()))
      fail(Errc::mixed_components, "tuple spans several components");
  std::vector<std::pair<ForestElement, ForestElement>> gens;
  if (as.size() == 1) {
    gens.emplace_back(as[0], as[0]);
  } else {
    for (std::size_t i = 0; i + 1 < as.size(); ++i)
      gens.emplace_back(as[i], as[i + 1]);
  }
  return FiniteTree::make(std::move(gens));
}

BigDistance big_distance_decompose(const ForestElement& a, const ForestElement& b,
                                   const ForestElement& c, const ForestElement& e) {
  for (const ForestElement* k : {&b, &c, &e})
    if (!same_component(a, *k))
      fail(Errc::mixed_components, "quadruple spans several components");
  auto i = Interval::make(a, b);
  auto pc = project_interval(c, i);
  auto pe = project_interval(e, i);
  if (pc.point == pe.point)
    return {pc.point, pe.point, true, Rat(0), Rat(0), Rat(0), Rat(0)};
  BigDistance out{pc.point,        pe.point, false, *distance(c, e),
                  pc.dist,         *distance(pc.point, pe.point),
                  pe.dist};
  if (out.total != out.c_leg + out.across + out.e_leg)
    throw std::logic_error("big-distance decomposition violated");
  return out;
}

}  // namespace rforest

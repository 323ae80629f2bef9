#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rforest/forest.hpp"

namespace rforest {

// ---------------------------------------------------------------------------
// The entourage uniformity on paths
// ---------------------------------------------------------------------------

struct PathEntourage {
  EntourageIndex v;
  Rat e;  // > 0
};

// True iff every breakpoint of f has a V-close breakpoint of g within e in
// position, and vice versa.
bool entourage_test(const Path& f, const Path& g, const PathEntourage& u,
                    const BaseSpace& space);

// U_{V cap W, min(e, d)} within U_{V,e} cap U_{W,d} at the pair (f, g).
bool intersection_law_holds(const Path& f, const Path& g,
                            const PathEntourage& u1, const PathEntourage& u2,
                            const BaseSpace& space);

// With (W, _) = shrink(V, e): two U_{W,e/2} steps compose into U_{V,e}.
bool composition_law_holds(const Path& f, const Path& g, const Path& h,
                           const PathEntourage& u, const BaseSpace& space);

struct EntourageLawReport {
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t violations = 0;
};

// Exercises both laws over all pairs and all triples of the samples.
EntourageLawReport entourage_laws_check(const std::vector<Path>& samples,
                                        const PathEntourage& u1,
                                        const PathEntourage& u2,
                                        const BaseSpace& space);

// ---------------------------------------------------------------------------
// Finite pointed metrics and the path-metric axioms
// ---------------------------------------------------------------------------

struct PointedFiniteMetric {
  std::vector<std::string> labels;
  std::vector<std::vector<Rat>> dist;
  std::size_t basepoint = 0;
};

// Validates symmetry, zero diagonal, positivity off the diagonal, triangle
// inequality, and the basepoint index.
PointedFiniteMetric make_pointed_metric(std::vector<std::string> labels,
                                        std::vector<std::vector<Rat>> dist,
                                        std::size_t basepoint);

// True iff all distances lie within r, every triple sums to twice its
// maximum, and the basepoint is an endpoint of every pair.
bool check_path_axioms(const PointedFiniteMetric& p, const Rat& r);

// ---------------------------------------------------------------------------
// Parallel paths
// ---------------------------------------------------------------------------

// Frozen output of the staged construction: O together with everything the
// builder needs. Stage i constrains the builder's i-th waypoint.
struct ParallelPath {
  Region o;
  std::vector<Region> stages;
  std::vector<Rat> dom;    // breakpoints of f
  std::vector<Rat> gaps;   // der between consecutive values of f
  Rat gamma;
};

ParallelPath parallel_path(const Path& f, const EntourageIndex& v, const Rat& e,
                           const BaseSpace& space);

// The witness path through x; x must lie in pp.o.
Path parallel_build(const ParallelPath& pp, const BasePoint& x,
                    const BaseSpace& space);

}  // namespace rforest

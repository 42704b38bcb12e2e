#pragma once

#include <cstddef>
#include <vector>

#include "qlocal/errors.hpp"
#include "qlocal/stabilizer.hpp"

namespace qlocal {

// Absolute tolerance for all geometric comparisons. Embeddings round-trip
// through decimal floats, so exact comparisons are too brittle.
inline constexpr double kGeomTol = 1e-9;

struct Point {
  double x = 0;
  double y = 0;
};

double euclidean(const Point& a, const Point& b);

// n points in the plane, pairwise Euclidean distance >= 1 (up to tolerance).
// Point i corresponds to qubit i of the companion code.
struct Embedding {
  std::vector<Point> points;

  // Validates the pairwise-distance invariant.
  static Embedding of(std::vector<Point> pts);

  std::size_t size() const { return points.size(); }
};

// Qubit pair sharing a generator, with its Euclidean length.
struct Interaction {
  std::size_t qubit_a;  // qubit_a < qubit_b
  std::size_t qubit_b;
  std::size_t generator_index;
  double length;
};

// All support pairs of every declared generator. Pairs repeated across
// generators stay distinct records.
std::vector<Interaction> extract_interactions(const StabilizerCode& code,
                                              const Embedding& emb);

// Per-qubit counts of interactions with length >= threshold.
struct InteractionCounter {
  double threshold;
  std::vector<std::size_t> counts;  // counts[q], length n
  std::size_t total;                // number of threshold-exceeding interactions

  std::size_t count_on(const QubitSet& u) const {
    std::size_t s = 0;
    for (auto q : u.members) s += counts[q];
    return s;
  }
};

InteractionCounter interaction_counter(const std::vector<Interaction>& ints,
                                       double threshold, std::size_t n);

// Axis-parallel closed rectangle.
struct Rectangle {
  double x_lo, x_hi, y_lo, y_hi;

  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }
  double area() const { return width() * height(); }

  bool contains(const Point& p) const {
    return p.x >= x_lo - kGeomTol && p.x <= x_hi + kGeomTol &&
           p.y >= y_lo - kGeomTol && p.y <= y_hi + kGeomTol;
  }
};

struct RectangleCount {
  std::size_t count;
  // Point-density bound for 1-separated sets: count <= 6*area when both
  // sides are >= 1, count <= 4*(long side) when exactly one side is < 1,
  // and count <= 4 when both sides are < 1 (a unit disk packs at most four
  // 1-separated points into a sub-unit square; the long-side bound is
  // vacuous there).
  bool density_check;
};

RectangleCount count_in_rectangle(const Embedding& emb, const Rectangle& r);

// Two parallel axis-aligned lines splitting the plane into side/middle/side.
struct Separator {
  enum class Orientation { Vertical, Horizontal };  // orientation of the lines
  Orientation orientation;
  double line_1, line_2;  // line_1 < line_2, gap >= ell
  std::size_t side_lo;    // points strictly below/left of line_1
  std::size_t middle;     // points strictly between the lines
  std::size_t side_hi;    // points strictly above/right of line_2
  bool trivial;           // whole plane taken as the middle region
};

// Quantile-and-pigeonhole separator: gap >= ell, middle <= 8*ell*sqrt(n),
// each side <= 9n/10, no point on either line. Requires n >= 10. When
// ell > sqrt(n)/8 the middle bound is vacuous and the trivial separator
// (everything in the middle) is returned.
Separator find_separator(const std::vector<Point>& points, double ell);

// Square grid with cell width w anchored at offset (ox, oy).
struct GridTiling {
  double w;
  double ox, oy;  // in [0, w)
  // Achieved bad-point fractions, re-computable from the offset:
  // x_fraction: share of X within l_inf-distance 2*ell of a cell vertex,
  // y_fraction: share of Y within distance 2*ell of a cell edge.
  double x_fraction;
  double y_fraction;
};

// Deterministic sweep over a finite candidate offset grid; returns the
// lexicographically first offset with x_fraction <= 32*ell^2/w^2 and
// y_fraction <= 16*ell/w. Requires w >= 4*ell > 0.
GridTiling find_tiling(const std::vector<Point>& x_points,
                       const std::vector<Point>& y_points, double w,
                       double ell);

// Finitely-supported weight function, one mass per point.
struct WeightedPoint {
  Point p;
  double weight;
};

double weight_in_rectangle(const std::vector<WeightedPoint>& f,
                           const Rectangle& r);

// Greedy horizontal division of r: every piece has height >= 5*ell, every
// piece has weight <= d1 or height <= 10*ell, and the piece count is at
// most 2*f(r)/d1. Cuts are nudged off weight-support points. Requires
// height >= 5*ell and f(r) >= d1 > 0.
std::vector<Rectangle> subdivide_rectangle(const Rectangle& r,
                                           const std::vector<WeightedPoint>& f,
                                           double d1, double ell);

}  // namespace qlocal

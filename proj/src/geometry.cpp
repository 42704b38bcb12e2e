#include "qlocal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qlocal {

double euclidean(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Embedding Embedding::of(std::vector<Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (euclidean(pts[i], pts[j]) < 1.0 - kGeomTol)
        throw ContractError("points " + std::to_string(i) + " and " +
                            std::to_string(j) +
                            " are closer than unit distance");
  Embedding e;
  e.points = std::move(pts);
  return e;
}

std::vector<Interaction> extract_interactions(const StabilizerCode& code,
                                              const Embedding& emb) {
  if (emb.size() != code.n())
    throw ContractError("embedding has " + std::to_string(emb.size()) +
                        " points for a " + std::to_string(code.n()) +
                        "-qubit code");
  std::vector<Interaction> out;
  const auto& gens = code.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<std::size_t> sup = gens[g].support();
    for (std::size_t i = 0; i < sup.size(); ++i)
      for (std::size_t j = i + 1; j < sup.size(); ++j)
        out.push_back({sup[i], sup[j], g,
                       euclidean(emb.points[sup[i]], emb.points[sup[j]])});
  }
  return out;
}

InteractionCounter interaction_counter(const std::vector<Interaction>& ints,
                                       double threshold, std::size_t n) {
  if (threshold <= 0) throw ContractError("threshold must be positive");
  InteractionCounter c{threshold, std::vector<std::size_t>(n, 0), 0};
  for (const auto& it : ints) {
    if (it.length < threshold - kGeomTol) continue;
    ++c.counts[it.qubit_a];
    ++c.counts[it.qubit_b];
    ++c.total;
  }
  return c;
}

RectangleCount count_in_rectangle(const Embedding& emb, const Rectangle& r) {
  if (r.x_lo > r.x_hi || r.y_lo > r.y_hi)
    throw ContractError("rectangle has negative extent");
  std::size_t count = 0;
  for (const auto& p : emb.points)
    if (r.contains(p)) ++count;
  double sx = r.width(), sy = r.height();
  double s_short = std::min(sx, sy), s_long = std::max(sx, sy);
  bool ok;
  if (s_short >= 1.0)
    ok = count <= 6.0 * r.area() + kGeomTol;
  else if (s_long >= 1.0)
    ok = count <= 4.0 * s_long + kGeomTol;
  else
    ok = count <= 4;
  return {count, ok};
}

namespace {

// Shrink eps until neither shifted line coincides with a coordinate value.
double avoid_coords(const std::vector<double>& coords, double lo, double hi,
                    double eps) {
  for (int round = 0; round < 64; ++round) {
    bool hit = false;
    for (double c : coords)
      if (c == lo + eps || c == hi - eps) {
        hit = true;
        break;
      }
    if (!hit) return eps;
    eps /= 2;
  }
  return eps;
}

}  // namespace

Separator find_separator(const std::vector<Point>& points, double ell) {
  const std::size_t n = points.size();
  if (n < 10)
    throw ContractError("separator needs at least 10 points, got " +
                        std::to_string(n));
  if (ell <= 0) throw ContractError("ell must be positive");

  auto make_trivial = [&] {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& p : points) {
      lo = std::min(lo, p.x);
      hi = std::max(hi, p.x);
    }
    double pad = std::max(1.0, ell);
    Separator s;
    s.orientation = Separator::Orientation::Vertical;
    s.line_1 = lo - pad;
    s.line_2 = hi + pad;
    s.side_lo = 0;
    s.middle = n;
    s.side_hi = 0;
    s.trivial = true;
    return s;
  };
  // Middle bound 8*ell*sqrt(n) >= n makes any separator valid.
  if (ell > std::sqrt(static_cast<double>(n)) / 8.0) return make_trivial();

  // Quantile coordinates: at least n/10 points on the far side of each.
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = points[i].x;
    ys[i] = points[i].y;
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::size_t q = (n + 9) / 10;  // ceil(n/10)
  double a1 = xs[q - 1], a2 = xs[n - q];
  double b1 = ys[q - 1], b2 = ys[n - q];

  // Pick the axis with the wider central gap; 1-separation guarantees one
  // of them exceeds sqrt(n/10).
  bool vertical = (a2 - a1) >= (b2 - b1);
  double lo = vertical ? a1 : b1;
  double hi = vertical ? a2 : b2;
  const std::vector<double>& coords = vertical ? xs : ys;

  std::size_t m = static_cast<std::size_t>(
      std::floor(std::sqrt(n / 10.0) / ell));
  if (m < 1) m = 1;
  double strip = (hi - lo) / static_cast<double>(m);
  if (strip <= ell) return make_trivial();  // theory excludes this; stay safe

  // Half-open strips [c_i, c_{i+1}) partition [lo, hi); pick the emptiest.
  std::vector<std::size_t> strip_count(m, 0);
  for (double c : coords) {
    if (c < lo || c >= hi) continue;
    std::size_t i = static_cast<std::size_t>((c - lo) / strip);
    if (i >= m) i = m - 1;
    ++strip_count[i];
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (strip_count[i] < strip_count[best]) best = i;

  double c_lo = lo + best * strip;
  double c_hi = c_lo + strip;

  // Nudge both lines inward so no point sits on either and the gap stays
  // above ell.
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n; ++i)
    if (coords[i] > coords[i - 1])
      min_gap = std::min(min_gap, coords[i] - coords[i - 1]);
  double eps = std::min({1e-6, min_gap / 2, (strip - ell) / 4});
  eps = avoid_coords(coords, c_lo, c_hi, eps);

  Separator s;
  s.orientation = vertical ? Separator::Orientation::Vertical
                           : Separator::Orientation::Horizontal;
  s.line_1 = c_lo + eps;
  s.line_2 = c_hi - eps;
  s.side_lo = s.middle = s.side_hi = 0;
  s.trivial = false;
  for (const auto& p : points) {
    double c = vertical ? p.x : p.y;
    if (c < s.line_1)
      ++s.side_lo;
    else if (c > s.line_2)
      ++s.side_hi;
    else
      ++s.middle;
  }
  return s;
}

namespace {

// Distance from coordinate c to the nearest grid line offset + i*w.
double line_dist(double c, double offset, double w) {
  double m = std::fmod(c - offset, w);
  if (m < 0) m += w;
  return std::min(m, w - m);
}

struct Fractions {
  double x_frac, y_frac;
};

Fractions tiling_fractions(const std::vector<Point>& X,
                           const std::vector<Point>& Y, double w, double ell,
                           double ox, double oy) {
  std::size_t x_bad = 0, y_bad = 0;
  for (const auto& p : X) {
    if (line_dist(p.x, ox, w) <= 2 * ell && line_dist(p.y, oy, w) <= 2 * ell)
      ++x_bad;
  }
  for (const auto& p : Y) {
    if (std::min(line_dist(p.x, ox, w), line_dist(p.y, oy, w)) <= 2 * ell)
      ++y_bad;
  }
  return {X.empty() ? 0.0 : static_cast<double>(x_bad) / X.size(),
          Y.empty() ? 0.0 : static_cast<double>(y_bad) / Y.size()};
}

// Candidate offsets along one axis: crossings of the distance-2*ell bands
// around every point coordinate, nudged to both sides, plus a uniform
// fallback grid.
std::vector<double> offset_candidates(const std::vector<Point>& X,
                                      const std::vector<Point>& Y, double w,
                                      double ell, bool x_axis) {
  const double eps = std::min(1e-6, ell / 4);
  std::vector<double> cands;
  auto add = [&](double v) {
    double m = std::fmod(v, w);
    if (m < 0) m += w;
    cands.push_back(m);
  };
  auto add_point = [&](const Point& p) {
    double c = x_axis ? p.x : p.y;
    for (double s : {-2 * ell - eps, -2 * ell + eps, 2 * ell - eps,
                     2 * ell + eps}) {
      add(c + s);
    }
  };
  for (const auto& p : X) add_point(p);
  for (const auto& p : Y) add_point(p);
  for (int i = 0; i < 32; ++i) add(i * w / 32.0);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

}  // namespace

GridTiling find_tiling(const std::vector<Point>& x_points,
                       const std::vector<Point>& y_points, double w,
                       double ell) {
  if (!(ell > 0) || w < 4 * ell - kGeomTol)
    throw ContractError("tiling requires w >= 4*ell > 0");
  const double x_bound = 32 * ell * ell / (w * w);
  const double y_bound = 16 * ell / w;
  std::vector<double> ox_cands =
      offset_candidates(x_points, y_points, w, ell, true);
  std::vector<double> oy_cands =
      offset_candidates(x_points, y_points, w, ell, false);
  for (double ox : ox_cands)
    for (double oy : oy_cands) {
      Fractions f = tiling_fractions(x_points, y_points, w, ell, ox, oy);
      if (f.x_frac <= x_bound && f.y_frac <= y_bound)
        return {w, ox, oy, f.x_frac, f.y_frac};
    }
  // A random offset works in expectation, so the sweep (which includes a
  // uniform grid) cannot come up empty for inputs meeting the precondition.
  throw ContractError("no tiling offset met the bounds; input violates the "
                      "pairwise-distance assumption");
}

double weight_in_rectangle(const std::vector<WeightedPoint>& f,
                           const Rectangle& r) {
  double s = 0;
  for (const auto& wp : f)
    if (r.contains(wp.p)) s += wp.weight;
  return s;
}

namespace {

// Nudge a horizontal cut off any support y-coordinate, staying inside
// (lo, hi).
double nudge_cut(double cut, const std::vector<WeightedPoint>& f, double lo,
                 double hi) {
  auto on_support = [&](double c) {
    for (const auto& wp : f)
      if (wp.p.y == c) return true;
    return false;
  };
  if (!on_support(cut)) return cut;
  double eps = std::min(1e-6, std::max(cut - lo, hi - cut) / 2);
  for (int round = 0; round < 64; ++round) {
    if (cut - eps > lo && !on_support(cut - eps)) return cut - eps;
    if (cut + eps < hi && !on_support(cut + eps)) return cut + eps;
    eps /= 2;
  }
  return cut;
}

}  // namespace

namespace {

// Minimum-piece division over a finite candidate-cut grid (support rows and
// their 5*ell/10*ell translates). Returns empty when no chain of valid
// pieces over the candidates reaches the top.
std::vector<Rectangle> min_piece_division(const Rectangle& r,
                                          const std::vector<WeightedPoint>& f,
                                          double d1, double ell) {
  auto on_support = [&](double c) {
    for (const auto& wp : f)
      if (wp.p.y == c) return true;
    return false;
  };
  std::vector<double> cands = {r.y_lo, r.y_hi};
  auto add = [&](double y) {
    if (y <= r.y_lo + kGeomTol || y >= r.y_hi - kGeomTol) return;
    if (on_support(y)) {
      if (!on_support(y - 1e-7)) y -= 1e-7;
      else if (!on_support(y + 1e-7)) y += 1e-7;
      else return;
    }
    cands.push_back(y);
  };
  std::vector<double> seeds = {r.y_lo, r.y_hi};
  for (const auto& wp : f)
    if (wp.p.y > r.y_lo && wp.p.y < r.y_hi) {
      seeds.push_back(wp.p.y - 1e-7);
      seeds.push_back(wp.p.y + 1e-7);
    }
  for (double s : seeds)
    for (double off : {-10 * ell, -5 * ell, 0.0, 5 * ell, 10 * ell}) add(s + off);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  const std::size_t m = cands.size();
  auto valid = [&](std::size_t i, std::size_t j) {
    double h = cands[j] - cands[i];
    if (h < 5 * ell - kGeomTol) return false;
    if (h <= 10 * ell + kGeomTol) return true;
    return weight_in_rectangle(
               f, {r.x_lo, r.x_hi, cands[i], cands[j]}) <= d1 + kGeomTol;
  };
  const std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dp(m, kInf), prev(m, kInf);
  dp[0] = 0;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (dp[i] != kInf && valid(i, j) && dp[i] + 1 < dp[j]) {
        dp[j] = dp[i] + 1;
        prev[j] = i;
      }
  std::vector<Rectangle> out;
  if (dp[m - 1] == kInf) return out;
  std::vector<std::size_t> chain;
  for (std::size_t j = m - 1; j != 0; j = prev[j]) chain.push_back(j);
  chain.push_back(0);
  std::reverse(chain.begin(), chain.end());
  for (std::size_t t = 0; t + 1 < chain.size(); ++t)
    out.push_back({r.x_lo, r.x_hi, cands[chain[t]], cands[chain[t + 1]]});
  return out;
}

}  // namespace

std::vector<Rectangle> subdivide_rectangle(const Rectangle& r,
                                           const std::vector<WeightedPoint>& f,
                                           double d1, double ell) {
  if (!(d1 > 0) || !(ell > 0))
    throw ContractError("subdivision requires d1 > 0 and ell > 0");
  if (r.height() < 5 * ell - kGeomTol)
    throw ContractError("rectangle height below 5*ell");
  if (weight_in_rectangle(f, r) < d1 - kGeomTol)
    throw ContractError("rectangle weight below d1");

  auto slab = [&](double lo, double hi) {
    return Rectangle{r.x_lo, r.x_hi, lo, hi};
  };
  auto slab_weight = [&](double lo, double hi) {
    return weight_in_rectangle(f, slab(lo, hi));
  };

  std::vector<Rectangle> out;
  double cur = r.y_lo;

  // Cut candidates for the final-block lookahead: around every support row
  // plus the short-piece extremes.
  auto two_piece_cover = [&](double lo) {
    double hi = r.y_hi;
    auto piece_ok = [&](double a, double b) {
      return slab_weight(a, b) <= d1 + kGeomTol || b - a <= 10 * ell + kGeomTol;
    };
    std::vector<double> cands = {lo + 10 * ell, hi - 10 * ell,
                                 (lo + hi) / 2};
    for (const auto& wp : f)
      if (wp.p.y > lo && wp.p.y < hi) {
        cands.push_back(wp.p.y - 1e-7);
        cands.push_back(wp.p.y + 1e-7);
      }
    for (double y : cands) {
      if (y < lo + 5 * ell || y > hi - 5 * ell) continue;
      double cut = nudge_cut(y, f, lo + 5 * ell, hi - 5 * ell);
      if (piece_ok(lo, cut) && piece_ok(cut, hi)) {
        out.push_back(slab(lo, cut));
        out.push_back(slab(cut, hi));
        return true;
      }
    }
    return false;
  };

  for (;;) {
    double h = r.y_hi - cur;
    double fw = slab_weight(cur, r.y_hi);
    if (fw <= d1 + kGeomTol || h <= 10 * ell) {
      // Light or short remainder: a single piece satisfies property 2.
      out.push_back(slab(cur, r.y_hi));
      break;
    }
    // Final block (one more greedy step would leave a light remainder):
    // a two-piece cover keeps the count bound tight.
    if (fw < 2 * d1 && h > 20 * ell && two_piece_cover(cur)) break;
    if (h <= 20 * ell) {
      // Two pieces of height in [5*ell, 10*ell].
      double mid =
          nudge_cut(cur + h / 2, f, std::max(cur + 5 * ell, cur + h - 10 * ell),
                    std::min(cur + 10 * ell, cur + h - 5 * ell));
      out.push_back(slab(cur, mid));
      out.push_back(slab(mid, r.y_hi));
      break;
    }
    // Greedy step: h1 is just past the smallest prefix of weight >= d1.
    std::vector<double> ys;
    for (const auto& wp : f)
      if (wp.p.x >= r.x_lo - kGeomTol && wp.p.x <= r.x_hi + kGeomTol &&
          wp.p.y >= cur && wp.p.y <= r.y_hi)
        ys.push_back(wp.p.y);
    std::sort(ys.begin(), ys.end());
    double h1 = h;  // default: all remaining weight needed
    {
      double acc = 0;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        acc = slab_weight(cur, ys[i]);
        if (acc >= d1) {
          // Shift above the support row, keeping the count unchanged.
          double next = (i + 1 < ys.size() && ys[i + 1] > ys[i])
                            ? ys[i + 1]
                            : r.y_hi;
          double delta = std::min(1e-6, (next - ys[i]) / 2);
          h1 = std::min(ys[i] - cur + delta, h);
          break;
        }
      }
    }
    if (h1 <= 10 * ell) {
      // Case 1: cut at 10*ell; the piece holds >= d1 weight but is short.
      double cut = nudge_cut(cur + 10 * ell, f, cur + h1, cur + 10 * ell);
      out.push_back(slab(cur, cut));
      cur = cut;
    } else if (h - h1 < 5 * ell) {
      // Case 2 with a sliver above: fold it into the second piece, whose
      // height stays below 10*ell.
      double cut = nudge_cut(cur + h1 - 5 * ell, f, cur + 5 * ell, cur + h1);
      out.push_back(slab(cur, cut));
      out.push_back(slab(cut, r.y_hi));
      break;
    } else {
      // Case 2: light tall piece, then a height-5*ell piece holding the
      // d1 mass.
      double cut1 = nudge_cut(cur + h1 - 5 * ell, f, cur + 5 * ell, cur + h1);
      double cut2 = nudge_cut(cur + h1, f, cut1 + 5 * ell - 1e-6, r.y_hi);
      out.push_back(slab(cur, cut1));
      out.push_back(slab(cut1, cut2));
      cur = cut2;
    }
  }
  // The greedy can overshoot the piece budget by one when the last block is
  // barely heavy; a candidate-grid search recovers the optimum there.
  std::vector<Rectangle> opt = min_piece_division(r, f, d1, ell);
  if (!opt.empty() && opt.size() < out.size()) return opt;
  return out;
}

}  // namespace qlocal

#include "qlocal/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace qlocal {

QubitSet boundary(const StabilizerCode& code, const QubitSet& u) {
  std::vector<std::size_t> out;
  for (const auto& g : code.generators()) {
    std::vector<std::size_t> sup = g.support();
    bool touches = false;
    for (auto q : sup)
      if (u.contains(q)) {
        touches = true;
        break;
      }
    if (!touches) continue;
    for (auto q : sup)
      if (!u.contains(q)) out.push_back(q);
  }
  return QubitSet::of(std::move(out), code.n());
}

Certificate Certificate::distance_leaf(QubitSet u) {
  return {Kind::Distance, std::move(u), {}};
}

Certificate Certificate::subset(QubitSet u, Certificate parent) {
  Certificate c{Kind::Subset, std::move(u), {}};
  c.children.push_back(std::move(parent));
  return c;
}

Certificate Certificate::union_of(std::vector<Certificate> parts) {
  QubitSet root;
  for (const auto& p : parts) root = QubitSet::union_of(root, p.root);
  return {Kind::Union, std::move(root), std::move(parts)};
}

Certificate Certificate::expansion(Certificate u, Certificate t) {
  QubitSet root = QubitSet::union_of(u.root, t.root);
  Certificate c{Kind::Expansion, std::move(root), {}};
  c.children.push_back(std::move(u));
  c.children.push_back(std::move(t));
  return c;
}

std::size_t Certificate::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

namespace {

VerifyResult verify_node(const StabilizerCode& code, const Certificate& cert,
                         std::size_t d, const std::string& path) {
  switch (cert.kind) {
    case Certificate::Kind::Distance:
      if (!cert.children.empty())
        return {false, path + ": distance leaf has children"};
      if (cert.root.size() >= d)
        return {false, path + ": leaf set has " +
                           std::to_string(cert.root.size()) +
                           " qubits, not below d = " + std::to_string(d)};
      return {true, ""};

    case Certificate::Kind::Subset: {
      if (cert.children.size() != 1)
        return {false, path + ": subset step needs exactly one child"};
      if (!cert.root.is_subset_of(cert.children[0].root))
        return {false, path + ": root is not a subset of its child"};
      return verify_node(code, cert.children[0], d, path + ".0");
    }

    case Certificate::Kind::Union: {
      QubitSet acc;
      for (std::size_t i = 0; i < cert.children.size(); ++i) {
        if (!cert.children[i].root.disjoint_from(acc))
          return {false, path + ": union child " + std::to_string(i) +
                             " overlaps an earlier child"};
        acc = QubitSet::union_of(acc, cert.children[i].root);
      }
      if (!(acc == cert.root))
        return {false, path + ": union root differs from children's union"};
      // Decoupling: no generator may touch two distinct children.
      for (std::size_t g = 0; g < code.generators().size(); ++g) {
        long hit = -1;
        for (auto q : code.generators()[g].support()) {
          for (std::size_t i = 0; i < cert.children.size(); ++i) {
            if (!cert.children[i].root.contains(q)) continue;
            if (hit >= 0 && hit != static_cast<long>(i))
              return {false, path + ": generator " + std::to_string(g) +
                                 " interacts with union children " +
                                 std::to_string(hit) + " and " +
                                 std::to_string(i)};
            hit = static_cast<long>(i);
          }
        }
      }
      for (std::size_t i = 0; i < cert.children.size(); ++i) {
        VerifyResult r = verify_node(code, cert.children[i], d,
                                     path + "." + std::to_string(i));
        if (!r.ok) return r;
      }
      return {true, ""};
    }

    case Certificate::Kind::Expansion: {
      if (cert.children.size() != 2)
        return {false, path + ": expansion step needs children {u, t}"};
      const QubitSet& u = cert.children[0].root;
      const QubitSet& t = cert.children[1].root;
      if (!(cert.root == QubitSet::union_of(u, t)))
        return {false, path + ": expansion root is not u union t"};
      if (!boundary(code, u).is_subset_of(t))
        return {false, path + ": t does not contain the boundary of u"};
      VerifyResult r = verify_node(code, cert.children[0], d, path + ".0");
      if (!r.ok) return r;
      return verify_node(code, cert.children[1], d, path + ".1");
    }
  }
  return {false, path + ": unknown node kind"};
}

}  // namespace

VerifyResult verify_certificate(const StabilizerCode& code,
                                const Certificate& cert, std::size_t d) {
  if (d == 0) throw ContractError("verification needs a positive distance");
  return verify_node(code, cert, d, "root");
}

namespace {

QubitSet qubits_in(const Embedding& emb, const Rectangle& r) {
  std::vector<std::size_t> m;
  for (std::size_t q = 0; q < emb.size(); ++q)
    if (r.contains(emb.points[q])) m.push_back(q);
  return QubitSet::of(std::move(m), emb.size());
}

Rectangle centered_square(double cx, double cy, double side) {
  return {cx - side / 2, cx + side / 2, cy - side / 2, cy + side / 2};
}

}  // namespace

CertificateResult grow_square(const StabilizerCode& code, const Embedding& emb,
                              const Rectangle& rect, double ell, std::size_t d,
                              const ProofConstants& pc) {
  if (ell < 1) throw ContractError("grow_square requires ell >= 1");
  if (d == 0) throw ContractError("grow_square needs a positive distance");
  double side_limit = d / (pc.grow_side_divisor * ell);
  double target = std::max(rect.width(), rect.height());
  if (target > side_limit + kGeomTol)
    throw ContractError("rectangle side " + std::to_string(target) +
                        " exceeds the limit d/(" +
                        std::to_string(pc.grow_side_divisor) + "*ell) = " +
                        std::to_string(side_limit));

  QubitSet v = qubits_in(emb, rect);
  if (v.size() < d) return {Certificate::distance_leaf(std::move(v)), ""};

  std::vector<Interaction> ints = extract_interactions(code, emb);
  InteractionCounter f = interaction_counter(ints, ell, code.n());
  double bad_budget = static_cast<double>(d) / pc.grow_bad_divisor;
  if (static_cast<double>(f.count_on(v)) > bad_budget)
    return {std::nullopt,
            "bad-interaction count f(V) = " + std::to_string(f.count_on(v)) +
                " exceeds the budget d/" +
                std::to_string(pc.grow_bad_divisor)};

  double cx = (rect.x_lo + rect.x_hi) / 2;
  double cy = (rect.y_lo + rect.y_hi) / 2;
  double side =
      std::min(target, std::sqrt(static_cast<double>(d)) / pc.base_side_divisor);
  QubitSet u = qubits_in(emb, centered_square(cx, cy, side));
  if (u.size() >= d)
    return {std::nullopt, "base square of side " + std::to_string(side) +
                              " already holds " + std::to_string(u.size()) +
                              " >= d qubits"};
  Certificate cert = Certificate::distance_leaf(u);

  int round = 0;
  while (side < target - kGeomTol) {
    ++round;
    double next = side + 2 * ell;
    Rectangle next_sq = centered_square(cx, cy, next);
    // T: annulus qubits plus long-interaction partners of U.
    std::vector<std::size_t> t_members;
    for (std::size_t q = 0; q < emb.size(); ++q)
      if (!u.contains(q) && next_sq.contains(emb.points[q]))
        t_members.push_back(q);
    for (const auto& it : ints) {
      if (it.length < ell - kGeomTol) continue;
      if (u.contains(it.qubit_a) && !u.contains(it.qubit_b))
        t_members.push_back(it.qubit_b);
      if (u.contains(it.qubit_b) && !u.contains(it.qubit_a))
        t_members.push_back(it.qubit_a);
    }
    QubitSet t = QubitSet::of(std::move(t_members), code.n());
    if (t.size() >= d)
      return {std::nullopt,
              "round " + std::to_string(round) + ": expansion set has " +
                  std::to_string(t.size()) + " >= d qubits"};
    cert = Certificate::expansion(std::move(cert),
                                  Certificate::distance_leaf(std::move(t)));
    u = qubits_in(emb, next_sq);
    cert = Certificate::subset(u, std::move(cert));
    side = next;
  }
  if (!(v == cert.root)) cert = Certificate::subset(std::move(v), std::move(cert));
  return {std::move(cert), ""};
}

namespace {

// Corner case for ell < 1: every interaction counts as long, so the
// interacting qubits must jointly stay below d and everything else joins as
// singletons.
CertificateResult certify_short_range(const StabilizerCode& code,
                                      const QubitSet& v, std::size_t d,
                                      const std::vector<Interaction>& ints) {
  std::vector<std::size_t> w_members;
  for (const auto& it : ints) {
    if (v.contains(it.qubit_a)) w_members.push_back(it.qubit_a);
    if (v.contains(it.qubit_b)) w_members.push_back(it.qubit_b);
  }
  QubitSet w = QubitSet::of(std::move(w_members), code.n());
  if (w.size() >= d)
    return {std::nullopt,
            "short-range corner case: " + std::to_string(w.size()) +
                " interacting qubits do not fit below d = " +
                std::to_string(d)};
  std::vector<Certificate> parts;
  if (!w.empty()) parts.push_back(Certificate::distance_leaf(w));
  for (auto q : v.members) {
    if (w.contains(q)) continue;
    if (d < 2)
      return {std::nullopt,
              "short-range corner case: singleton sets need d >= 2"};
    parts.push_back(
        Certificate::distance_leaf(QubitSet::of({q}, code.n())));
  }
  return {Certificate::union_of(std::move(parts)), ""};
}

}  // namespace

CertificateResult certify_recursive(const StabilizerCode& code,
                                    const Embedding& emb,
                                    const Rectangle& region, double ell,
                                    std::size_t d, const ProofConstants& pc) {
  if (d == 0) throw ContractError("certification needs a positive distance");
  if (!(ell > 0)) throw ContractError("ell must be positive");
  QubitSet v0 = qubits_in(emb, region);
  std::vector<Interaction> ints = extract_interactions(code, emb);
  if (ell < 1) return certify_short_range(code, v0, d, ints);

  InteractionCounter f = interaction_counter(ints, ell, code.n());
  double budget = static_cast<double>(d) / pc.recur_bad_divisor;
  if (static_cast<double>(f.count_on(v0)) > budget)
    return {std::nullopt,
            "hypothesis broken: f(V) = " + std::to_string(f.count_on(v0)) +
                " exceeds d/" + std::to_string(pc.recur_bad_divisor)};

  std::function<CertificateResult(const QubitSet&)> recurse =
      [&](const QubitSet& v) -> CertificateResult {
    if (v.size() < d) return {Certificate::distance_leaf(v), ""};
    if (v.size() < 10)
      return {std::nullopt, "set of " + std::to_string(v.size()) +
                                " >= d qubits is too small to separate"};
    std::vector<Point> pts;
    for (auto q : v.members) pts.push_back(emb.points[q]);
    Separator sep = find_separator(pts, ell);
    if (sep.trivial)
      return {std::nullopt,
              "separator degenerates (ell too large for |V| = " +
                  std::to_string(v.size()) + " with |V| >= d)"};
    bool vertical = sep.orientation == Separator::Orientation::Vertical;
    std::vector<std::size_t> m1, m2, ms;
    for (auto q : v.members) {
      double c = vertical ? emb.points[q].x : emb.points[q].y;
      if (c < sep.line_1)
        m1.push_back(q);
      else if (c > sep.line_2)
        m2.push_back(q);
      else
        ms.push_back(q);
    }
    if (m1.size() >= v.size() || m2.size() >= v.size())
      return {std::nullopt, "separator failed to shrink the region"};
    QubitSet v1 = QubitSet::of(std::move(m1), code.n());
    QubitSet v2 = QubitSet::of(std::move(m2), code.n());
    QubitSet s = QubitSet::of(std::move(ms), code.n());

    CertificateResult c1 = recurse(v1);
    if (!c1.certificate) return c1;
    CertificateResult c2 = recurse(v2);
    if (!c2.certificate) return c2;

    auto good_only = [&](const QubitSet& side) {
      std::vector<std::size_t> g;
      for (auto q : side.members)
        if (f.counts[q] == 0) g.push_back(q);
      return QubitSet::of(std::move(g), code.n());
    };
    QubitSet u1 = good_only(v1), u2 = good_only(v2);
    std::vector<Certificate> parts;
    parts.push_back(Certificate::subset(u1, std::move(*c1.certificate)));
    parts.push_back(Certificate::subset(u2, std::move(*c2.certificate)));
    Certificate joined = Certificate::union_of(std::move(parts));
    QubitSet u12 = joined.root;

    // T: the separator strip, the stripped bad qubits, and all interaction
    // partners of U outside V.
    std::vector<std::size_t> t_members(s.members);
    for (auto q : v1.members)
      if (!u1.contains(q)) t_members.push_back(q);
    for (auto q : v2.members)
      if (!u2.contains(q)) t_members.push_back(q);
    for (const auto& it : ints) {
      if (u12.contains(it.qubit_a) && !v.contains(it.qubit_b))
        t_members.push_back(it.qubit_b);
      if (u12.contains(it.qubit_b) && !v.contains(it.qubit_a))
        t_members.push_back(it.qubit_a);
    }
    QubitSet t = QubitSet::of(std::move(t_members), code.n());
    if (t.size() >= d)
      return {std::nullopt,
              "boundary budget exceeded: expansion set has " +
                  std::to_string(t.size()) + " >= d qubits at |V| = " +
                  std::to_string(v.size())};
    Certificate e = Certificate::expansion(
        std::move(joined), Certificate::distance_leaf(std::move(t)));
    return {Certificate::subset(v, std::move(e)), ""};
  };
  return recurse(v0);
}

namespace {

struct Piece {
  Rectangle rect;
  bool good;
  std::vector<std::size_t> qubits;  // unique assignment
  double mass;                      // bad-interaction endpoints inside
};

double linf(const Point& p, double vx, double vy) {
  return std::max(std::abs(p.x - vx), std::abs(p.y - vy));
}

double dist_to_segment(const Point& p, double x1, double y1, double x2,
                       double y2) {
  double dx = x2 - x1, dy = y2 - y1;
  double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - x1) * dx + (p.y - y1) * dy) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  double px = x1 + t * dx, py = y1 + t * dy;
  return std::hypot(p.x - px, p.y - py);
}

double dist_to_rect_edges(const Point& p, const Rectangle& r) {
  return std::min(
      {dist_to_segment(p, r.x_lo, r.y_lo, r.x_hi, r.y_lo),
       dist_to_segment(p, r.x_lo, r.y_hi, r.x_hi, r.y_hi),
       dist_to_segment(p, r.x_lo, r.y_lo, r.x_lo, r.y_hi),
       dist_to_segment(p, r.x_hi, r.y_lo, r.x_hi, r.y_hi)});
}

struct Edge {
  bool horizontal;
  double fixed;     // y for horizontal, x for vertical
  double lo, hi;    // span along the edge
  bool operator<(const Edge& o) const {
    if (horizontal != o.horizontal) return horizontal && !o.horizontal;
    if (fixed != o.fixed) return fixed < o.fixed;
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
  bool operator==(const Edge& o) const {
    return horizontal == o.horizontal && fixed == o.fixed && lo == o.lo &&
           hi == o.hi;
  }
};

}  // namespace

Partition build_partition(const StabilizerCode& code, const Embedding& emb,
                          double ell, std::size_t d, std::optional<double> w_opt,
                          const ProofConstants& pc) {
  if (ell < 1) throw ContractError("build_partition requires ell >= 1");
  if (d == 0) throw ContractError("build_partition needs a positive distance");
  double w = w_opt ? *w_opt : d / (pc.tiling_w_divisor * ell);
  if (w < 4 * ell - kGeomTol)
    throw ContractError("cell width " + std::to_string(w) +
                        " is below the tiling minimum 4*ell");

  const std::size_t n = code.n();
  std::vector<Interaction> ints = extract_interactions(code, emb);
  InteractionCounter f = interaction_counter(ints, ell, n);

  Partition out;

  std::vector<Point> y_multiset;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t c = 0; c < f.counts[q]; ++c)
      y_multiset.push_back(emb.points[q]);
  GridTiling tiling = find_tiling(emb.points, y_multiset, w, ell);

  // Bucket qubits into grid cells.
  std::map<std::pair<long, long>, std::vector<std::size_t>> cells;
  for (std::size_t q = 0; q < n; ++q) {
    long i = static_cast<long>(std::floor((emb.points[q].x - tiling.ox) / w));
    long j = static_cast<long>(std::floor((emb.points[q].y - tiling.oy) / w));
    cells[{i, j}].push_back(q);
  }

  double good_cutoff = static_cast<double>(d) / pc.good_square_divisor;
  double d1 = static_cast<double>(d) / pc.subdivide_divisor;
  std::vector<Piece> pieces;
  bool any_bad_piece = false;
  for (auto& [ij, qs] : cells) {
    Rectangle cell{tiling.ox + ij.first * w, tiling.ox + (ij.first + 1) * w,
                   tiling.oy + ij.second * w, tiling.oy + (ij.second + 1) * w};
    double mass = 0;
    for (auto q : qs) mass += f.counts[q];
    if (mass < good_cutoff) {
      pieces.push_back({cell, true, qs, mass});
      continue;
    }
    any_bad_piece = true;
    if (w < 5 * ell - kGeomTol) {
      out.diagnostics.push_back(
          "bad cell cannot be subdivided: cell width below 5*ell");
      pieces.push_back({cell, false, qs, mass});
      continue;
    }
    std::vector<WeightedPoint> weights;
    for (auto q : qs)
      if (f.counts[q] > 0)
        weights.push_back({emb.points[q], static_cast<double>(f.counts[q])});
    std::vector<Rectangle> subs = subdivide_rectangle(cell, weights, d1, ell);
    std::vector<bool> taken(qs.size(), false);
    for (const auto& sub : subs) {
      Piece p{sub, false, {}, 0};
      for (std::size_t i = 0; i < qs.size(); ++i) {
        if (taken[i] || !sub.contains(emb.points[qs[i]])) continue;
        taken[i] = true;
        p.qubits.push_back(qs[i]);
        p.mass += f.counts[qs[i]];
      }
      pieces.push_back(std::move(p));
    }
  }

  // Region classification.
  std::vector<int> region(n);  // 0 = A, 1 = B, 2 = C
  std::vector<bool> in_b_prime(n, false);
  for (std::size_t q = 0; q < n; ++q) {
    const Point& p = emb.points[q];
    bool in_c = false;
    for (const auto& pc_ : pieces) {
      const Rectangle& r = pc_.rect;
      if (linf(p, r.x_lo, r.y_lo) <= 2 * ell ||
          linf(p, r.x_lo, r.y_hi) <= 2 * ell ||
          linf(p, r.x_hi, r.y_lo) <= 2 * ell ||
          linf(p, r.x_hi, r.y_hi) <= 2 * ell) {
        in_c = true;
        break;
      }
    }
    if (in_c) {
      region[q] = 2;
      continue;
    }
    double edge_dist = std::numeric_limits<double>::infinity();
    double good_edge_dist = edge_dist;
    for (const auto& pc_ : pieces) {
      double dd = dist_to_rect_edges(p, pc_.rect);
      edge_dist = std::min(edge_dist, dd);
      if (pc_.good) good_edge_dist = std::min(good_edge_dist, dd);
    }
    region[q] = edge_dist <= ell ? 1 : 0;
    in_b_prime[q] = good_edge_dist <= 2 * ell;
  }

  auto is_bad = [&](std::size_t q) { return f.counts[q] > 0; };

  int case_used = code.k() >= d ? 1 : 2;
  if (case_used == 2 && any_bad_piece) {
    out.diagnostics.push_back(
        "case 2 selected but bad cells exist; falling back to case 1");
    case_used = 1;
  }
  out.case_used = case_used;

  std::vector<std::size_t> am, bm, cm;
  if (case_used == 1) {
    for (std::size_t q = 0; q < n; ++q) {
      if (region[q] == 2 || is_bad(q))
        cm.push_back(q);
      else if (region[q] == 1)
        bm.push_back(q);
      else
        am.push_back(q);
    }
  } else {
    std::vector<bool> to_c(n, false);
    for (std::size_t q = 0; q < n; ++q)
      if (region[q] == 2) to_c[q] = true;
    // Both endpoints of any bad interaction touching B' go to C.
    for (const auto& it : ints) {
      if (it.length < ell - kGeomTol) continue;
      if (in_b_prime[it.qubit_a] || in_b_prime[it.qubit_b]) {
        to_c[it.qubit_a] = true;
        to_c[it.qubit_b] = true;
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (to_c[q])
        cm.push_back(q);
      else if (is_bad(q) || region[q] == 1)
        bm.push_back(q);
      else
        am.push_back(q);
    }
  }
  out.a = QubitSet::of(std::move(am), n);
  out.b = QubitSet::of(std::move(bm), n);
  out.c = QubitSet::of(std::move(cm), n);

  // Certificate for A: per piece, certify all of the piece's qubits, then
  // restrict to the A members assigned to it.
  {
    std::vector<Certificate> parts;
    std::string fail;
    for (const auto& piece : pieces) {
      std::vector<std::size_t> mine;
      for (auto q : piece.qubits)
        if (out.a.contains(q)) mine.push_back(q);
      if (mine.empty()) continue;
      QubitSet target = QubitSet::of(std::move(mine), n);
      CertificateResult base{std::nullopt, ""};
      if (piece.good || piece.mass <= d1 + kGeomTol) {
        try {
          base = grow_square(code, emb, piece.rect, ell, d, pc);
        } catch (const ContractError& e) {
          base = {std::nullopt, e.what()};
        }
      } else {
        QubitSet all_in = qubits_in(emb, piece.rect);
        if (all_in.size() < d)
          base = {Certificate::distance_leaf(std::move(all_in)), ""};
        else
          base = {std::nullopt,
                  "short bad rectangle still holds >= d qubits"};
      }
      if (!base.certificate) {
        fail = "piece at [" + std::to_string(piece.rect.x_lo) + "," +
               std::to_string(piece.rect.y_lo) + "]: " + base.diagnostic;
        break;
      }
      parts.push_back(
          Certificate::subset(std::move(target), std::move(*base.certificate)));
    }
    if (fail.empty()) {
      Certificate cert = Certificate::union_of(std::move(parts));
      VerifyResult vr = verify_certificate(code, cert, d);
      if (vr.ok)
        out.cert_a = std::move(cert);
      else
        out.diagnostics.push_back("cert_a rejected: " + vr.diagnostic);
    } else {
      out.diagnostics.push_back("cert_a not built: " + fail);
    }
  }

  // Certificate for B: edge-centered rectangles (corners trimmed by 2*ell)
  // as Distance leaves; in case 2 the leftover bad qubits join as one extra
  // leaf.
  {
    std::vector<Edge> edges;
    for (const auto& piece : pieces) {
      const Rectangle& r = piece.rect;
      edges.push_back({true, r.y_lo, r.x_lo, r.x_hi});
      edges.push_back({true, r.y_hi, r.x_lo, r.x_hi});
      edges.push_back({false, r.x_lo, r.y_lo, r.y_hi});
      edges.push_back({false, r.x_hi, r.y_lo, r.y_hi});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    QubitSet b0;  // case 2: bad qubits living in B
    std::vector<std::size_t> pool;
    for (auto q : out.b.members) {
      if (case_used == 2 && is_bad(q))
        b0.members.push_back(q);
      else
        pool.push_back(q);
    }

    std::vector<Certificate> parts;
    std::vector<bool> used(pool.size(), false);
    for (const auto& e : edges) {
      if (e.hi - e.lo <= 4 * ell) continue;  // fully inside corner regions
      Rectangle band = e.horizontal
                           ? Rectangle{e.lo + 2 * ell, e.hi - 2 * ell,
                                       e.fixed - ell, e.fixed + ell}
                           : Rectangle{e.fixed - ell, e.fixed + ell,
                                       e.lo + 2 * ell, e.hi - 2 * ell};
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (used[i] || !band.contains(emb.points[pool[i]])) continue;
        used[i] = true;
        members.push_back(pool[i]);
      }
      if (!members.empty())
        parts.push_back(
            Certificate::distance_leaf(QubitSet::of(std::move(members), n)));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!used[i])
        parts.push_back(
            Certificate::distance_leaf(QubitSet::of({pool[i]}, n)));
    if (!b0.members.empty()) parts.push_back(Certificate::distance_leaf(b0));

    Certificate cert = Certificate::union_of(std::move(parts));
    VerifyResult vr = verify_certificate(code, cert, d);
    if (vr.ok)
      out.cert_b = std::move(cert);
    else
      out.diagnostics.push_back("cert_b rejected: " + vr.diagnostic);
  }

  return out;
}

}  // namespace qlocal

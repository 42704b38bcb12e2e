#include "qlocal/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlocal/bounds.hpp"
#include "qlocal/certificates.hpp"
#include "qlocal/constructions.hpp"
#include "qlocal/geometry.hpp"
#include "qlocal/io.hpp"

namespace qlocal {

namespace {

using nlohmann::json;

// Interaction-length histogram with doubling bucket edges 1, sqrt(2), 2, 4,
// 8, ... (the sqrt(2) edge separates the lattice-diagonal lengths).
json length_histogram(const std::vector<Interaction>& ints) {
  double max_len = 1;
  for (const auto& it : ints) max_len = std::max(max_len, it.length);
  std::vector<double> edges = {1.0, std::sqrt(2.0), 2.0};
  while (edges.back() <= max_len) edges.push_back(edges.back() * 2);
  std::vector<std::size_t> counts(edges.size() - 1, 0);
  for (const auto& it : ints) {
    std::size_t b = 0;
    while (b + 2 < edges.size() && it.length >= edges[b + 1]) ++b;
    ++counts[b];
  }
  json h;
  h["edges"] = edges;
  h["counts"] = counts;
  return h;
}

json bound_report_json(const BoundReport& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["c0"] = r.c0;
  j["c1"] = r.c1;
  j["ell_star"] = r.ell_star;
  j["count_star"] = r.count_star;
  j["bpt_ratio"] = r.bpt_ratio;
  j["above_threshold"] = r.above_threshold;
  j["stacked"] = {{"d_bound_ok", r.stacked_d_ok},
                  {"combined_ok", r.stacked_kd_ok},
                  {"ruled_out", !r.stacked_d_ok || !r.stacked_kd_ok}};
  return j;
}

json certificate_to_json(const Certificate& cert) {
  return json::parse(serialize_certificate_json(cert));
}

void emit(const json& j, const std::string& output_path, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (output_path.empty())
    out << text;
  else
    write_file(output_path, text);
}

// Points-only file in the embedding format, without the pairwise-distance
// invariant (tiling inputs are arbitrary multisets).
std::vector<Point> parse_points_loose(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("points") ||
      !j["points"].is_array())
    throw ParseError("expected a \"points\" array", 1, 1);
  std::vector<Point> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number())
      throw ParseError("each point must be a [x, y] number pair", 1, 1);
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

struct ResolvedDistance {
  std::size_t d;
  std::string source;  // "flag" | "claimed_d" | "computed"
};

// d needed by audits and certification: an explicit flag wins, then the code
// file's claimed_d, then exhaustive computation. Throws kExitResource-coded
// errors via the special struct below when the computation is infeasible.
struct ResourceExceeded {
  std::string message;
  json payload;
};

ResolvedDistance resolve_distance(const CodeFile& cf, std::optional<int> flag_d,
                                  std::optional<int> weight_cap) {
  if (flag_d) {
    if (*flag_d < 1) throw ContractError("--d must be positive");
    return {static_cast<std::size_t>(*flag_d), "flag"};
  }
  if (cf.claimed_d)
    return {static_cast<std::size_t>(*cf.claimed_d), "claimed_d"};
  if (cf.code.n() > 24 && !weight_cap)
    throw ResourceExceeded{
        "distance computation infeasible for n = " +
            std::to_string(cf.code.n()) +
            " without --weight-cap or a claimed_d field",
        json()};
  DistanceResult dr = code_distance(cf.code, weight_cap);
  if (!dr.exact) {
    json payload;
    payload["lower_bound"] = dr.value;
    throw ResourceExceeded{"distance search capped at weight " +
                               std::to_string(dr.value - 1) +
                               "; supply claimed_d or a larger --weight-cap",
                           payload};
  }
  return {static_cast<std::size_t>(dr.value), "computed"};
}

Rectangle bounding_rect(const Embedding& emb) {
  if (emb.points.empty()) return {0, 0, 0, 0};
  Rectangle r{emb.points[0].x, emb.points[0].x, emb.points[0].y,
              emb.points[0].y};
  for (const auto& p : emb.points) {
    r.x_lo = std::min(r.x_lo, p.x);
    r.x_hi = std::max(r.x_hi, p.x);
    r.y_lo = std::min(r.y_lo, p.y);
    r.y_hi = std::max(r.y_hi, p.y);
  }
  return r;
}

std::string fmt_exponent(const FamilyRow& row, const Exponent& e) {
  return row.above_threshold ? e.str() : std::string("---");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"stabilizer-code locality toolkit"};
  app.require_subcommand(1);

  // Common option storage; each subcommand binds the subset it uses.
  std::string code_path, embedding_path, inner_path, outer_path;
  std::string x_points_path, y_points_path, points_path;
  std::string output_path, embedding_output_path, qubits_arg;
  double ell = 0, w_arg = 0, c0 = 1.0 / 100, c1 = 100;
  std::optional<int> weight_cap, d_flag;
  std::size_t n_arg = 0, k_arg = 0, d_arg = 0, side = 0, r_arg = 0, copies = 1;

  auto* audit = app.add_subcommand(
      "audit", "interaction report, histogram and lower-bound comparison");
  audit->add_option("--code", code_path)->required();
  audit->add_option("--embedding", embedding_path)->required();
  audit->add_option("--ell", ell)->required();
  audit->add_option("--weight-cap", weight_cap);
  audit->add_option("--d", d_flag);
  audit->add_option("--c0", c0);
  audit->add_option("--c1", c1);
  audit->add_option("--output", output_path);

  auto* distance = app.add_subcommand("distance", "exhaustive code distance");
  distance->add_option("--code", code_path)->required();
  distance->add_option("--weight-cap", weight_cap);

  auto* correctable =
      app.add_subcommand("correctable", "erasure-correctability of a qubit set");
  correctable->add_option("--code", code_path)->required();
  correctable->add_option("--qubits", qubits_arg)
      ->required()
      ->description("comma-separated qubit indices");

  auto* certify = app.add_subcommand(
      "certify", "recursive separator certificate for all embedded qubits");
  certify->add_option("--code", code_path)->required();
  certify->add_option("--embedding", embedding_path)->required();
  certify->add_option("--ell", ell)->required();
  certify->add_option("--d", d_flag);
  certify->add_option("--weight-cap", weight_cap);
  certify->add_option("--output", output_path);

  auto* partition =
      app.add_subcommand("partition", "A/B/C split with certificates");
  partition->add_option("--code", code_path)->required();
  partition->add_option("--embedding", embedding_path)->required();
  partition->add_option("--ell", ell)->required();
  partition->add_option("--w", w_arg);
  partition->add_option("--d", d_flag);
  partition->add_option("--weight-cap", weight_cap);
  partition->add_option("--output", output_path);

  auto* concat = app.add_subcommand("concat", "code concatenation");
  concat->add_option("--inner", inner_path)->required();
  concat->add_option("--outer", outer_path)->required();
  concat->add_option("--output", output_path);

  auto* surface =
      app.add_subcommand("surface", "rotated surface code on the unit lattice");
  surface->add_option("--side", side)->required();
  surface->add_option("--output", output_path);
  surface->add_option("--embedding-output", embedding_output_path);

  auto* pad = app.add_subcommand("pad", "append pinned ancilla qubits");
  pad->add_option("--code", code_path)->required();
  pad->add_option("--r", r_arg)->required();

  auto* tile = app.add_subcommand("tile", "derandomized grid-tiling offset");
  tile->add_option("--x-points", x_points_path)->required();
  tile->add_option("--y-points", y_points_path);
  tile->add_option("--w", w_arg)->required();
  tile->add_option("--ell", ell)->required();

  auto* separator =
      app.add_subcommand("separator", "two-line separator of a point set");
  separator->add_option("--points", points_path)->required();
  separator->add_option("--ell", ell)->required();

  auto* bounds = app.add_subcommand("bounds", "lower-bound report for (n,k,d)");
  bounds->add_option("--n", n_arg)->required();
  bounds->add_option("--k", k_arg)->required();
  bounds->add_option("--d", d_arg)->required();
  bounds->add_option("--c0", c0);
  bounds->add_option("--c1", c1);

  auto* families =
      app.add_subcommand("families", "per-family exponent table as CSV");

  auto* build = app.add_subcommand(
      "build", "concatenated construction with a locality-ell 2D layout");
  build->add_option("--inner", inner_path)->required();
  build->add_option("--outer-side", side)->required();
  build->add_option("--ell", ell)->required();
  build->add_option("--copies", copies);
  build->add_option("--output", output_path);
  build->add_option("--embedding-output", embedding_output_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*audit) {
      CodeFile cf = parse_code_json(read_file(code_path));
      Embedding emb = parse_embedding_json(read_file(embedding_path));
      if (emb.size() != cf.code.n())
        throw ContractError("embedding has " + std::to_string(emb.size()) +
                            " points for a " + std::to_string(cf.code.n()) +
                            "-qubit code");
      ResolvedDistance rd = resolve_distance(cf, d_flag, weight_cap);
      auto ints = extract_interactions(cf.code, emb);
      InteractionCounter counter =
          interaction_counter(ints, ell, cf.code.n());
      BoundReport br = evaluate_bounds(cf.code.n(), std::max<std::size_t>(
                                                        1, cf.code.k()),
                                       rd.d, c0, c1);
      json j;
      j["n"] = cf.code.n();
      j["k"] = cf.code.k();
      j["d"] = rd.d;
      j["d_source"] = rd.source;
      j["ell"] = ell;
      j["interaction_count"] = ints.size();
      j["long_count"] = counter.total;
      j["histogram"] = length_histogram(ints);
      j["bounds"] = bound_report_json(br);
      // Theorem floor: above threshold, some ell admits >= c0*max(k,d) long
      // interactions; the verdict compares the observed count at this ell.
      j["floor"] = c0 * static_cast<double>(br.count_star);
      j["meets_floor"] =
          static_cast<double>(counter.total) >= c0 * br.count_star;
      j["note"] = br.above_threshold
                      ? "above threshold: the bound applies at ell <= c0*ell_star"
                      : "below threshold kd^2 < c1*n: no requirement";
      emit(j, output_path, out);
      return kExitOk;
    }

    if (*distance) {
      CodeFile cf = parse_code_json(read_file(code_path));
      DistanceResult dr = code_distance(cf.code, weight_cap);
      json j;
      j["exact"] = dr.exact;
      if (dr.exact) {
        j["distance"] = dr.value;
        emit(j, "", out);
        return kExitOk;
      }
      j["lower_bound"] = dr.value;
      emit(j, "", out);
      return kExitResource;
    }

    if (*correctable) {
      CodeFile cf = parse_code_json(read_file(code_path));
      std::vector<std::size_t> idx;
      for (const auto& tok : CLI::detail::split(qubits_arg, ','))
        if (!tok.empty()) idx.push_back(std::stoul(tok));
      QubitSet u = QubitSet::of(std::move(idx), cf.code.n());
      CorrectabilityResult cr = is_correctable(cf.code, u);
      json j;
      j["correctable"] = cr.correctable;
      if (cr.witness) j["witness"] = cr.witness->to_string();
      emit(j, "", out);
      return cr.correctable ? kExitOk : kExitNegative;
    }

    if (*certify) {
      CodeFile cf = parse_code_json(read_file(code_path));
      Embedding emb = parse_embedding_json(read_file(embedding_path));
      ResolvedDistance rd = resolve_distance(cf, d_flag, weight_cap);
      CertificateResult cr =
          certify_recursive(cf.code, emb, bounding_rect(emb), ell, rd.d);
      if (cr.certificate) {
        VerifyResult vr = verify_certificate(cf.code, *cr.certificate, rd.d);
        if (vr.ok) {
          emit(certificate_to_json(*cr.certificate), output_path, out);
          return kExitOk;
        }
        cr.diagnostic = "emitted certificate failed verification: " +
                        vr.diagnostic;
      }
      json j;
      j["certified"] = false;
      j["diagnostic"] = cr.diagnostic;
      emit(j, output_path, out);
      return kExitNegative;
    }

    if (*partition) {
      CodeFile cf = parse_code_json(read_file(code_path));
      Embedding emb = parse_embedding_json(read_file(embedding_path));
      ResolvedDistance rd = resolve_distance(cf, d_flag, weight_cap);
      std::optional<double> w;
      if (partition->count("--w")) w = w_arg;
      Partition part = build_partition(cf.code, emb, ell, rd.d, w);
      json j;
      j["a"] = part.a.members;
      j["b"] = part.b.members;
      j["c"] = part.c.members;
      j["case_used"] = part.case_used;
      j["cert_a"] =
          part.cert_a ? certificate_to_json(*part.cert_a) : json(nullptr);
      j["cert_b"] =
          part.cert_b ? certificate_to_json(*part.cert_b) : json(nullptr);
      j["diagnostics"] = part.diagnostics;
      j["d"] = rd.d;
      j["d_source"] = rd.source;
      emit(j, output_path, out);
      return kExitOk;
    }

    if (*concat) {
      CodeFile inner = parse_code_json(read_file(inner_path));
      CodeFile outer = parse_code_json(read_file(outer_path));
      StabilizerCode result = concatenate(inner.code, outer.code);
      std::optional<int> d;
      if (inner.claimed_d && outer.claimed_d)
        d = *inner.claimed_d * *outer.claimed_d;
      std::string text = serialize_code_json(result, d);
      if (output_path.empty())
        out << text;
      else
        write_file(output_path, text);
      return kExitOk;
    }

    if (*surface) {
      EmbeddedCode ec = build_surface_code(side);
      std::string code_text =
          serialize_code_json(ec.code, static_cast<int>(side));
      std::string emb_text = serialize_embedding_json(ec.embedding);
      if (output_path.empty() && embedding_output_path.empty()) {
        json j;
        j["code"] = json::parse(code_text);
        j["embedding"] = json::parse(emb_text);
        emit(j, "", out);
      } else {
        if (!output_path.empty()) write_file(output_path, code_text);
        if (!embedding_output_path.empty())
          write_file(embedding_output_path, emb_text);
      }
      return kExitOk;
    }

    if (*pad) {
      CodeFile cf = parse_code_json(read_file(code_path));
      out << serialize_code_json(pad_code(cf.code, r_arg), cf.claimed_d);
      return kExitOk;
    }

    if (*tile) {
      std::vector<Point> xs = parse_points_loose(read_file(x_points_path));
      std::vector<Point> ys;
      if (!y_points_path.empty())
        ys = parse_points_loose(read_file(y_points_path));
      GridTiling t = find_tiling(xs, ys, w_arg, ell);
      json j;
      j["w"] = t.w;
      j["ox"] = t.ox;
      j["oy"] = t.oy;
      j["x_fraction"] = t.x_fraction;
      j["y_fraction"] = t.y_fraction;
      emit(j, "", out);
      return kExitOk;
    }

    if (*separator) {
      Embedding emb = parse_embedding_json(read_file(points_path));
      Separator s = find_separator(emb.points, ell);
      json j;
      j["orientation"] =
          s.orientation == Separator::Orientation::Vertical ? "vertical"
                                                            : "horizontal";
      j["line_1"] = s.line_1;
      j["line_2"] = s.line_2;
      j["side_lo"] = s.side_lo;
      j["middle"] = s.middle;
      j["side_hi"] = s.side_hi;
      j["trivial"] = s.trivial;
      emit(j, "", out);
      return kExitOk;
    }

    if (*bounds) {
      BoundReport br = evaluate_bounds(n_arg, k_arg, d_arg, c0, c1);
      emit(bound_report_json(br), "", out);
      return kExitOk;
    }

    if (*families) {
      out << "family,k,d,above_threshold,count,ell,ruled_out\n";
      for (const auto& row : family_table()) {
        out << row.family << "," << row.k_exp.str() << "," << row.d_exp.str()
            << "," << (row.above_threshold ? "yes" : "no") << ","
            << fmt_exponent(row, row.count_exp) << ","
            << fmt_exponent(row, row.ell_exp) << ","
            << (row.stacked.ruled_out() ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (*build) {
      CodeFile inner = parse_code_json(read_file(inner_path));
      LocalityBuild lb =
          build_locality_construction(inner.code, side, ell, copies);
      auto ints =
          extract_interactions(lb.embedded.code, lb.embedded.embedding);
      json report;
      report["n"] = lb.embedded.code.n();
      report["k"] = lb.embedded.code.k();
      report["ell"] = lb.ell;
      report["max_interaction_length"] = lb.max_interaction_length;
      report["copies"] = lb.copies;
      report["outer_side"] = lb.outer_side;
      report["d_lower_bound"] = lb.d_lower_bound;
      report["histogram"] = length_histogram(ints);
      std::optional<int> d;
      if (lb.d_lower_bound > 0) d = static_cast<int>(lb.d_lower_bound);
      if (!output_path.empty())
        write_file(output_path, serialize_code_json(lb.embedded.code, d));
      if (!embedding_output_path.empty())
        write_file(embedding_output_path,
                   serialize_embedding_json(lb.embedded.embedding));
      emit(report, "", out);
      return kExitOk;
    }

    err << "no subcommand selected\n";
    return kExitInput;
  } catch (const ResourceExceeded& e) {
    json j = e.payload;
    j["error"] = e.message;
    out << j.dump(2) << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line << ", column " << e.column << ": "
        << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidCodeError& e) {
    err << "invalid code (generators " << e.gen_a << " and " << e.gen_b
        << "): " << e.what() << "\n";
    return kExitInput;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace qlocal

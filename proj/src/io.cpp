#include "qlocal/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qlocal {

namespace {

using nlohmann::json;

// 1-based line/column of a byte offset in text.
std::pair<std::size_t, std::size_t> line_col(const std::string& text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Best-effort location of a JSON string literal for semantic errors.
std::pair<std::size_t, std::size_t> locate(const std::string& text,
                                           const std::string& literal) {
  std::size_t pos = text.find("\"" + literal + "\"");
  if (pos == std::string::npos) return {1, 1};
  return line_col(text, pos);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
}

[[noreturn]] void fail(const std::string& text, const std::string& msg,
                       const std::string& near = "") {
  auto [line, col] =
      near.empty() ? std::pair<std::size_t, std::size_t>{1, 1}
                   : locate(text, near);
  throw ParseError(msg, line, col);
}

}  // namespace

CodeFile parse_code_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    fail(text, "code file needs \"n\" and \"generators\"");
  if (!j["n"].is_number_unsigned())
    fail(text, "\"n\" must be a non-negative integer", "n");
  std::size_t n = j["n"].get<std::size_t>();
  if (!j["generators"].is_array())
    fail(text, "\"generators\" must be an array of Pauli strings",
         "generators");

  std::vector<PauliOperator> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string())
      fail(text, "generator entries must be strings", "generators");
    std::string s = g.get<std::string>();
    PauliOperator p;
    try {
      p = PauliOperator::from_string(s);
    } catch (const ContractError& e) {
      fail(text, e.what(), s);
    }
    if (p.n != n)
      fail(text,
           "generator \"" + s + "\" has " + std::to_string(p.n) +
               " qubits, expected " + std::to_string(n),
           s);
    gens.push_back(std::move(p));
  }

  std::optional<int> claimed;
  if (j.contains("claimed_d")) {
    if (!j["claimed_d"].is_number_integer() || j["claimed_d"].get<int>() < 1)
      fail(text, "\"claimed_d\" must be a positive integer", "claimed_d");
    claimed = j["claimed_d"].get<int>();
  }

  try {
    return {StabilizerCode(n, std::move(gens)), claimed};
  } catch (const InvalidCodeError& e) {
    // Locate the first offending generator string in the file.
    std::string s = j["generators"][e.gen_a].get<std::string>();
    fail(text, e.what(), s);
  }
}

std::string serialize_code_json(const StabilizerCode& code,
                                std::optional<int> claimed_d) {
  json j;
  j["n"] = code.n();
  j["generators"] = json::array();
  for (const auto& g : code.generators())
    j["generators"].push_back(g.to_string());
  if (claimed_d) j["claimed_d"] = *claimed_d;
  return j.dump(2) + "\n";
}

Embedding parse_embedding_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    fail(text, "embedding file needs a \"points\" array");
  std::vector<Point> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number())
      fail(text, "each point must be a [x, y] number pair", "points");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  try {
    return Embedding::of(std::move(pts));
  } catch (const ContractError& e) {
    fail(text, e.what(), "points");
  }
}

std::string serialize_embedding_json(const Embedding& emb) {
  json j;
  j["points"] = json::array();
  for (const auto& p : emb.points) j["points"].push_back({p.x, p.y});
  return j.dump(2) + "\n";
}

namespace {

const char* kind_tag(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::Distance:
      return "distance";
    case Certificate::Kind::Subset:
      return "subset";
    case Certificate::Kind::Union:
      return "union";
    case Certificate::Kind::Expansion:
      return "expansion";
  }
  return "?";
}

std::size_t emit_nodes(const Certificate& cert, json& nodes) {
  std::vector<std::size_t> child_ids;
  for (const auto& c : cert.children) child_ids.push_back(emit_nodes(c, nodes));
  std::size_t id = nodes.size();
  json node;
  node["id"] = id;
  node["kind"] = kind_tag(cert.kind);
  node["root"] = cert.root.members;
  node["children"] = child_ids;
  nodes.push_back(std::move(node));
  return id;
}

}  // namespace

std::string serialize_certificate_json(const Certificate& cert) {
  json j;
  j["nodes"] = json::array();
  j["root"] = emit_nodes(cert, j["nodes"]);
  return j.dump(2) + "\n";
}

Certificate parse_certificate_json(const std::string& text, std::size_t n) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("nodes") || !j.contains("root") ||
      !j["nodes"].is_array() || !j["root"].is_number_unsigned())
    fail(text, "certificate file needs \"nodes\" and a \"root\" id");

  std::map<std::size_t, const json*> by_id;
  for (const auto& node : j["nodes"]) {
    if (!node.is_object() || !node.contains("id") || !node.contains("kind") ||
        !node.contains("root") || !node.contains("children"))
      fail(text, "certificate nodes need id, kind, root, children", "nodes");
    std::size_t id = node["id"].get<std::size_t>();
    if (!by_id.emplace(id, &node).second)
      fail(text, "duplicate certificate node id " + std::to_string(id),
           "nodes");
  }

  // Recursive reconstruction with cycle detection along the current path.
  std::set<std::size_t> in_path;
  auto build = [&](auto&& self, std::size_t id) -> Certificate {
    auto it = by_id.find(id);
    if (it == by_id.end())
      fail(text, "certificate references missing node id " +
                     std::to_string(id));
    if (!in_path.insert(id).second)
      fail(text, "certificate node graph has a cycle at id " +
                     std::to_string(id));
    const json& node = *it->second;

    std::string tag = node["kind"].get<std::string>();
    Certificate cert;
    if (tag == "distance")
      cert.kind = Certificate::Kind::Distance;
    else if (tag == "subset")
      cert.kind = Certificate::Kind::Subset;
    else if (tag == "union")
      cert.kind = Certificate::Kind::Union;
    else if (tag == "expansion")
      cert.kind = Certificate::Kind::Expansion;
    else
      fail(text, "unknown certificate node kind \"" + tag + "\"", tag);

    try {
      cert.root =
          QubitSet::of(node["root"].get<std::vector<std::size_t>>(), n);
    } catch (const ContractError& e) {
      fail(text, e.what(), "nodes");
    }
    for (const auto& cid : node["children"])
      cert.children.push_back(self(self, cid.get<std::size_t>()));
    in_path.erase(id);
    return cert;
  };
  return build(build, j["root"].get<std::size_t>());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path, 1, 1);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path, 1, 1);
  out << content;
}

}  // namespace qlocal

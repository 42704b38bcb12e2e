#pragma once

#include <optional>
#include <string>

#include "qlocal/certificates.hpp"
#include "qlocal/geometry.hpp"
#include "qlocal/stabilizer.hpp"

namespace qlocal {

struct CodeFile {
  StabilizerCode code;
  std::optional<int> claimed_d;
};

// {"n": int, "generators": ["XZZXI", ...], "claimed_d": int?}
// Malformed input throws ParseError with a 1-based line/column.
CodeFile parse_code_json(const std::string& text);
std::string serialize_code_json(const StabilizerCode& code,
                                std::optional<int> claimed_d = std::nullopt);

// {"points": [[x, y], ...]}
Embedding parse_embedding_json(const std::string& text);
std::string serialize_embedding_json(const Embedding& emb);

// {"root": id, "nodes": [{"id", "kind", "root", "children"}, ...]}
Certificate parse_certificate_json(const std::string& text, std::size_t n);
std::string serialize_certificate_json(const Certificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qlocal

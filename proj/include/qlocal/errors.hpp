#pragma once

#include <stdexcept>
#include <string>

namespace qlocal {

// Precondition / contract violation on an operation's inputs.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Declared generator set does not describe a stabilizer code.
struct InvalidCodeError : std::runtime_error {
  InvalidCodeError(std::string msg, std::size_t gen_a, std::size_t gen_b)
      : std::runtime_error(std::move(msg)), gen_a(gen_a), gen_b(gen_b) {}
  std::size_t gen_a;
  std::size_t gen_b;
};

// Malformed input file. line/column are 1-based.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace qlocal

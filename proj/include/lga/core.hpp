#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace lga {

// Ordered JSON keeps key order stable across runs; every report must be byte-identical
// for identical inputs and flags.
using json = nlohmann::ordered_json;

// Input text could not be read.
struct ParseError : std::runtime_error {
  int line;  // 1-based, 0 when unknown (JSON documents report their own position)
  explicit ParseError(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                       : msg),
        line(line_no) {}
};

// Parsed object violates a structural requirement (sink, source, unused letter, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested bound cannot be honoured (budget exceeded, window too narrow, ...).
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation invoked outside its mathematical hypotheses.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lga

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "diotrip/power_sum.hpp"

namespace diotrip {

// Rejection of malformed input, carrying the JSON-pointer-style location of
// the offending node (or the column for flat polynomial text).
struct ParseError : std::runtime_error {
  std::string path;

  ParseError(std::string where, const std::string& message)
      : std::runtime_error("parse error at " + where + ": " + message),
        path(std::move(where)) {}
};

// On-disk description of a power sum under a schema version marker: field
// name, root polynomials, coefficient fractions and an optional shift.
struct SequenceSpecFile {
  PowerSum sequence;
  std::optional<Polynomial> shift;

  bool operator==(const SequenceSpecFile& o) const {
    return sequence == o.sequence && shift == o.shift;
  }
  bool operator!=(const SequenceSpecFile& o) const { return !(*this == o); }
};

// Canonical serialization with every scalar exact; the output re-parses to
// an equal value and is byte-for-byte stable for equal inputs.
std::string write_sequence_spec(const SequenceSpecFile& spec);

// Throws ParseError on malformed JSON, unknown keys, schema mismatches, and
// any value the PowerSum constructor rejects.
SequenceSpecFile read_sequence_spec(const std::string& text);

// File variants; I/O failures surface as ParseError located at the filename.
SequenceSpecFile load_sequence_spec(const std::string& filename);
void save_sequence_spec(const SequenceSpecFile& spec, const std::string& filename);

// Univariate polynomial over Q from text like "x^4 - 3/2*x + 1" (variable
// letter x or X, '^' powers, '*' products, rational coefficients). Throws
// ParseError with the offending column.
Polynomial parse_polynomial(const std::string& text);

}  // namespace diotrip

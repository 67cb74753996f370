#pragma once

// Model file format. A model is stored as a single JSON object:
//
//   {
//     "dimension": 2,
//     "facets": [
//       {"charvec": [1, 0], "name": "F1", "normal": ["1/1", "0/1"]},
//       ...
//     ],
//     "format_version": "1",
//     "vertices": [["F1", "F2"], ...]
//   }
//
// "normal" is optional (all facets or none). Rationals are "p/q" strings
// (plain integers are accepted on input). Output is canonical: keys sorted,
// two-space indent, vertices in canonical order, trailing newline. Writing a
// parsed canonical file reproduces it byte for byte.

#include "model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtorb {

struct ParsedModel {
  std::optional<CharacteristicModel> model; // present only when diagnostics is empty
  std::vector<std::string> diagnostics;
};

// Parse and fully validate. Never throws on bad input; every problem becomes
// a diagnostic.
ParsedModel parse_model_file(const std::string& text);

// Parse, throwing InvalidModel (with the first diagnostics joined into the
// message) when the input is not a valid model.
CharacteristicModel parse_model_or_throw(const std::string& text);

// Canonical serialization.
std::string write_model_file(const CharacteristicModel& m);

} // namespace qtorb

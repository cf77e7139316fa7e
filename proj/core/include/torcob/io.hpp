#pragma once

#include "torcob/fan.hpp"
#include "torcob/series.hpp"

namespace torcob {

// On-disk fan description. JSON object with fields: rank (integer), rays
// (list of integer vectors), max_cones (list of lists of 1-based ray
// indices), name (optional string). Indices are 1-based in the file to
// match the convention used by every report; they are shifted on load.
struct FanFile {
  std::string name;
  int rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> max_cones;  // 1-based

  static FanFile from_fan(const Fan& fan);
  std::vector<std::vector<int>> zero_based_cones() const;
  Fan to_fan() const;  // throws FanError when validation fails
};

// Parsing throws std::invalid_argument naming the offending field; it does
// not validate fan semantics, so a parsed file can still fail to_fan().
FanFile parse_fan_file(const std::string& json_text);
std::string serialize_fan_file(const FanFile& f);

Fan load_fan_file(const std::string& path);

// Turn a command-line fan spec into a fan: an existing file path is loaded
// as a fan file, otherwise built-in names are consulted, otherwise each
// directory of the colon-separated search path is tried as <dir>/<spec>.json.
// The search path defaults to the TORCOB_FAN_PATH environment variable.
Fan resolve_fan(const std::string& spec);
Fan resolve_fan(const std::string& spec, const std::string& search_path);

// Same search, stopping after the parse: callers get the raw fields even
// when they do not validate as a fan.
FanFile resolve_fan_file(const std::string& spec);
FanFile resolve_fan_file(const std::string& spec, const std::string& search_path);

// Integer polynomial in the given variables: literals and variable names
// combined with + - * ^ and parentheses, exponents nonnegative literals.
// Throws std::invalid_argument with the offending position on bad input.
GradedSeries parse_polynomial(const std::string& text, const CoeffRing& ring,
                              const std::vector<std::string>& vars,
                              int poly_bound);

// Machine form of a series: JSON list of terms, each an exponent vector
// over vars() plus the coefficient as records of generator exponents and an
// exact rational. Exponents and values survive a round trip bit for bit.
std::string series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const std::string& json_text,
                              const CoeffRing& ring,
                              const std::vector<std::string>& vars,
                              int poly_bound);

}  // namespace torcob

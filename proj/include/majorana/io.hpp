#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "majorana/constellation.hpp"
#include "majorana/spin_state.hpp"

namespace majorana::io {

using Json = nlohmann::json;

/// {"spin": "3/2" | 1, "coeffs": [[re, im], ...]}, coeffs ordered m = s ... -s.
Json state_to_json(const SpinState& state);
/// `where` prefixes error messages (usually the file name).
SpinState state_from_json(const Json& j, const std::string& where = "state");

/// One entry of a constellation file, kept in the file's own (theta, phi)
/// form so that files round-trip bit for bit.
struct StarRecord {
  Direction direction;
  int mult = 1;

  bool operator==(const StarRecord& o) const {
    return direction.theta == o.direction.theta && direction.phi == o.direction.phi && mult == o.mult;
  }
};

std::vector<StarRecord> star_records(const Constellation& c);
std::vector<StarRecord> star_records(const std::vector<Direction>& directions);
/// Stars merged only when their coordinates are identical.
Constellation to_constellation(const std::vector<StarRecord>& records);
/// Each record repeated by its multiplicity.
std::vector<Direction> to_directions(const std::vector<StarRecord>& records);

/// [{"theta": ..., "phi": ..., "mult": k}, ...]
Json records_to_json(const std::vector<StarRecord>& records);
std::vector<StarRecord> records_from_json(const Json& j, const std::string& where = "constellation");

Json complex_to_json(Complex z);
Json complex_vector_to_json(const CVector& v);
Complex complex_from_json(const Json& j, const std::string& where);

/// Parses text, reporting syntax errors as Parse with line and column.
Json parse_json(const std::string& text, const std::string& where);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// Columns plus rows of numbers or strings, written as CSV or as a JSON list
/// of objects. Non-finite numbers become inf/-inf/nan in CSV and null in JSON.
struct Table {
  using Cell = std::variant<double, long long, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

void write_csv(std::ostream& out, const Table& table);
Json table_to_json(const Table& table);
Table table_from_csv(const std::string& text, const std::string& where = "csv");

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

}  // namespace majorana::io

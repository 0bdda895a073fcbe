#include "majorana/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace majorana::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

double number_field(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number, got " + std::string(j.type_name()));
  return j.get<double>();
}

int two_spin_field(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_two_spin(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return parse_two_spin(std::to_string(j.get<long long>()));
    if (j.is_number_float()) return parse_two_spin(format_double(j.get<double>()));
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected \"N/2\" or an integer, got " + std::string(j.type_name()));
}

std::string cell_text(const Table::Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_vector_to_json(const CVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im]");
  return {number_field(j[0], where + "[0]"), number_field(j[1], where + "[1]")};
}

Json state_to_json(const SpinState& state) {
  Json j;
  if (state.half_integer()) {
    j["spin"] = state.spin_label();
  } else {
    j["spin"] = state.two_spin() / 2;
  }
  j["coeffs"] = complex_vector_to_json(state.coeffs());
  return j;
}

SpinState state_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object with fields \"spin\" and \"coeffs\"");
  if (!j.contains("spin")) fail(where, "missing field \"spin\"");
  if (!j.contains("coeffs")) fail(where, "missing field \"coeffs\"");
  const int n = two_spin_field(j["spin"], where + ": field \"spin\"");
  const Json& c = j["coeffs"];
  if (!c.is_array()) fail(where + ": field \"coeffs\"", "expected an array");
  if (static_cast<int>(c.size()) != n + 1) {
    fail(where + ": field \"coeffs\"", "spin " + j["spin"].dump() + " needs " + std::to_string(n + 1) + " entries, got " + std::to_string(c.size()));
  }
  CVector v(n + 1);
  for (int i = 0; i <= n; ++i) v(i) = complex_from_json(c[i], where + ": coeffs[" + std::to_string(i) + "]");
  return SpinState(n, v);
}

std::vector<StarRecord> star_records(const Constellation& c) {
  std::vector<StarRecord> out;
  for (const auto& s : c.stars()) out.push_back({s.direction(), s.multiplicity});
  return out;
}

std::vector<StarRecord> star_records(const std::vector<Direction>& directions) {
  std::vector<StarRecord> out;
  for (const auto& d : directions) out.push_back({d, 1});
  return out;
}

Constellation to_constellation(const std::vector<StarRecord>& records) {
  std::vector<Star> stars;
  std::vector<Direction> seen;
  for (const auto& r : records) {
    bool merged = false;
    for (std::size_t i = 0; i < stars.size(); ++i) {
      if (seen[i].theta == r.direction.theta && seen[i].phi == r.direction.phi) {
        stars[i].multiplicity += r.mult;
        merged = true;
        break;
      }
    }
    if (!merged) {
      stars.push_back({sphere_to_stereo(r.direction), r.mult});
      seen.push_back(r.direction);
    }
  }
  return Constellation(std::move(stars));
}

std::vector<Direction> to_directions(const std::vector<StarRecord>& records) {
  std::vector<Direction> out;
  for (const auto& r : records) out.insert(out.end(), r.mult, r.direction);
  return out;
}

Json records_to_json(const std::vector<StarRecord>& records) {
  Json a = Json::array();
  for (const auto& r : records) a.push_back({{"theta", r.direction.theta}, {"phi", r.direction.phi}, {"mult", r.mult}});
  return a;
}

std::vector<StarRecord> records_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of {\"theta\", \"phi\", \"mult\"} objects");
  std::vector<StarRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + ": entry " + std::to_string(i);
    const Json& e = j[i];
    if (!e.is_object()) fail(at, "expected an object");
    for (const char* key : {"theta", "phi"}) {
      if (!e.contains(key)) fail(at, std::string("missing field \"") + key + "\"");
    }
    StarRecord r;
    r.direction.theta = number_field(e["theta"], at + ": field \"theta\"");
    r.direction.phi = number_field(e["phi"], at + ": field \"phi\"");
    if (!(r.direction.theta >= 0.0 && r.direction.theta <= kPi)) fail(at + ": field \"theta\"", "must lie in [0, pi]");
    if (!std::isfinite(r.direction.phi)) fail(at + ": field \"phi\"", "must be finite");
    if (e.contains("mult")) {
      if (!e["mult"].is_number_integer() || e["mult"].get<long long>() < 1) fail(at + ": field \"mult\"", "must be a positive integer");
      r.mult = e["mult"].get<int>();
    }
    out.push_back(r);
  }
  if (out.empty()) fail(where, "empty constellation");
  return out;
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    const std::string msg = e.what();
    const auto colon = msg.rfind(": ");
    fail(where + ":" + std::to_string(line) + ":" + std::to_string(column),
         colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw Error(ErrorCode::InvalidArgument, "table row has the wrong number of cells");
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

Json table_to_json(const Table& table) {
  Json a = Json::array();
  for (const auto& row : table.rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto* d = std::get_if<double>(&row[i]);
      if (d && !std::isfinite(*d)) {
        o[table.columns[i]] = nullptr;
      } else {
        std::visit([&](const auto& v) { o[table.columns[i]] = v; }, row[i]);
      }
    }
    a.push_back(std::move(o));
  }
  return a;
}

Table table_from_csv(const std::string& text, const std::string& where) {
  Table t;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  const auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (t.columns.empty()) {
      t.columns = cells;
      continue;
    }
    if (cells.size() != t.columns.size()) {
      fail(where + ":" + std::to_string(line_no), "expected " + std::to_string(t.columns.size()) + " fields, got " + std::to_string(cells.size()));
    }
    std::vector<Table::Cell> row;
    for (const auto& c : cells) {
      long long i = 0;
      const auto ri = std::from_chars(c.data(), c.data() + c.size(), i);
      if (ri.ec == std::errc() && ri.ptr == c.data() + c.size()) {
        row.emplace_back(i);
        continue;
      }
      double d = 0.0;
      const auto rd = std::from_chars(c.data(), c.data() + c.size(), d);
      if (rd.ec == std::errc() && rd.ptr == c.data() + c.size()) {
        row.emplace_back(d);
      } else {
        row.emplace_back(c);
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) fail(where, "no header line");
  return t;
}

}  // namespace majorana::io

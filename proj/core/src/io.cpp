#include "medianforge/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "medianforge/errors.hpp"

namespace medianforge {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string(what) + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write " + path);
  out << content;
}

MedianTable parse_median_json(const std::string& text, bool unchecked) {
  constexpr const char* what = "median file";
  const json j = parse_json(text, what);
  const auto n = field<std::size_t>(j, "size", what);
  if (n == 0 || n > kMaxElements) throw MalformedInput("median file: size must be in 1..64");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = field<std::vector<std::string>>(j, "labels", what);
    if (labels.size() != n) throw MalformedInput("median file: labels do not match size");
  }
  const auto triples = field<std::vector<std::vector<long long>>>(j, "triples", what);

  constexpr ElementId unset = ~ElementId{0};
  std::vector<ElementId> values(n * n * n, unset);
  auto at = [&](ElementId x, ElementId y, ElementId z) -> ElementId& { return values[(x * n + y) * n + z]; };
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      at(x, x, y) = x;
      at(x, y, x) = x;
      at(y, x, x) = x;
    }
  for (const auto& t : triples) {
    if (t.size() != 4) throw MalformedInput("median file: each triple is [x, y, z, m]");
    for (auto v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw MalformedInput("median file: element out of range");
    const auto x = static_cast<ElementId>(t[0]), y = static_cast<ElementId>(t[1]), z = static_cast<ElementId>(t[2]),
               m = static_cast<ElementId>(t[3]);
    const std::array<std::array<ElementId, 3>, 6> perms = {
        {{x, y, z}, {x, z, y}, {y, x, z}, {y, z, x}, {z, x, y}, {z, y, x}}};
    for (const auto& p : perms) {
      auto& cell = at(p[0], p[1], p[2]);
      if (cell != unset && cell != m) {
        throw MalformedInput("median file: conflicting value at (" + std::to_string(p[0]) + "," +
                             std::to_string(p[1]) + "," + std::to_string(p[2]) + ")");
      }
      cell = m;
    }
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (at(x, y, z) == unset) {
          throw MalformedInput("median file: missing triple (" + std::to_string(x) + "," + std::to_string(y) +
                               "," + std::to_string(z) + ")");
        }
  TernaryTable table(n, std::move(values));
  if (unchecked) return MedianTable::unchecked(std::move(table), std::move(labels));
  const auto report = check_median_axioms(table, 1);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    std::string args;
    for (std::size_t i = 0; i < v.arity; ++i) args += (i ? "," : "") + std::to_string(v.args[i]);
    throw MalformedInput("median file: " + to_string(v.axiom) + " fails at (" + args + ")");
  }
  return MedianTable::unchecked(std::move(table), std::move(labels));
}

MedianTable load_median_file(const std::string& path, bool unchecked) {
  return parse_median_json(read_text_file(path), unchecked);
}

std::string median_to_json(const MedianTable& m) {
  json triples = json::array();
  for (ElementId x = 0; x < m.size(); ++x)
    for (ElementId y = x + 1; y < m.size(); ++y)
      for (ElementId z = y + 1; z < m.size(); ++z) triples.push_back({x, y, z, m(x, y, z)});
  json j;
  j["size"] = m.size();
  if (!m.labels().empty()) j["labels"] = m.labels();
  j["triples"] = triples;
  return j.dump() + "\n";
}

FiniteGroup parse_group_json(const std::string& text) {
  constexpr const char* what = "group file";
  const json j = parse_json(text, what);
  const auto n = field<std::size_t>(j, "order", what);
  auto rows = field<std::vector<std::vector<std::uint32_t>>>(j, "table", what);
  if (rows.size() != n) throw MalformedInput("group file: table has the wrong number of rows");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels", what);
  return FiniteGroup(std::move(rows), std::move(labels));
}

FiniteGroup load_group_file(const std::string& path) { return parse_group_json(read_text_file(path)); }

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.table_rows();
  j["labels"] = g.labels();
  return j.dump() + "\n";
}

WordFile parse_word_json(const std::string& text) {
  constexpr const char* what = "word file";
  const json j = parse_json(text, what);
  WordFile w;
  if (j.contains("names")) w.names = field<std::vector<std::string>>(j, "names", what);
  w.words = field<std::vector<std::string>>(j, "words", what);
  return w;
}

std::string word_file_to_json(const WordFile& w) {
  json j;
  j["names"] = w.names;
  j["words"] = w.words;
  return j.dump() + "\n";
}

}  // namespace medianforge

#include "distdist/pointset_io.hpp"

#include <fstream>
#include <sstream>

#include "distdist/error.hpp"

namespace distdist::io {
namespace {

Rational coordinate(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InputError("point coordinate must be a rational string or an integer, got " + v.dump());
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

nlohmann::json to_json(const PointSet& p) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& q : p) pts.push_back({q.x.to_string(), q.y.to_string()});
  return {{"label", p.label()}, {"points", std::move(pts)}};
}

PointSet pointset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw InputError("point set JSON needs a \"points\" array");
  }
  std::vector<ExactPoint> pts;
  for (const auto& item : j["points"]) {
    if (!item.is_array() || item.size() != 2) throw InputError("each point must be a pair [x, y], got " + item.dump());
    pts.push_back({coordinate(item[0]), coordinate(item[1])});
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  return PointSet(std::move(pts), std::move(label));
}

std::string to_json_text(const PointSet& p) { return to_json(p).dump(1) + "\n"; }

PointSet parse_json_text(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("point set file is not valid JSON");
  return pointset_from_json(j);
}

std::string to_csv_text(const PointSet& p) {
  std::string out = "x,y\n";
  for (const auto& q : p) out += q.x.to_string() + "," + q.y.to_string() + "\n";
  return out;
}

PointSet parse_csv_text(std::string_view text, std::string label) {
  std::vector<ExactPoint> pts;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("CSV line " + std::to_string(lineno) + " needs two columns");
    std::string a = line.substr(0, comma);
    std::string b = line.substr(comma + 1);
    if (first && (a.find_first_of("0123456789") == std::string::npos)) {
      first = false;
      continue;
    }
    first = false;
    pts.push_back({Rational::parse(a), Rational::parse(b)});
  }
  return PointSet(std::move(pts), std::move(label));
}

PointSet read_pointset(const std::filesystem::path& path) {
  std::string text = slurp(path);
  if (path.extension() == ".csv") return parse_csv_text(text, path.stem().string());
  return parse_json_text(text);
}

void write_pointset(const std::filesystem::path& path, const PointSet& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << (path.extension() == ".csv" ? to_csv_text(p) : to_json_text(p));
}

}  // namespace distdist::io

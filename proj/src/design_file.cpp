#include "witt/design_file.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "witt/syntax.hpp"

namespace witt {

namespace {

constexpr const char* kFormat = "witt-design";
constexpr int kVersion = 1;

template <class Range>
std::string json_array(const Range& r) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& x : r) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string json_vec3(const Vec3& v) { return json_array(std::array<int, 3>{v[0].value(), v[1].value(), v[2].value()}); }

std::string json_witness(const BlockClass& c) {
  const PlaneModel& plane = PlaneModel::get();
  std::ostringstream os;
  os << "\"class\": \"" << class_name(c) << "\", ";
  if (const auto* e = std::get_if<ConicExterior>(&c)) {
    std::array<int, 6> coeffs{};
    for (int i = 0; i < 6; ++i) coeffs[i] = e->conic.coeffs[i].value();
    os << "\"form\": " << json_array(coeffs);
  } else {
    const auto [a, b] = std::holds_alternative<SymmetricDifference>(c)
                            ? std::pair{std::get<SymmetricDifference>(c).r, std::get<SymmetricDifference>(c).s}
                            : std::pair{std::get<LinePairMinusU>(c).g, std::get<LinePairMinusU>(c).h};
    os << "\"lines\": [" << json_vec3(plane.line(a).dual) << ',' << json_vec3(plane.line(b).dual) << ']';
  }
  return os.str();
}

std::string witness_text(const BlockClass& c) {
  std::ostringstream os;
  os << class_name(c);
  if (const auto* e = std::get_if<ConicExterior>(&c)) {
    os << "  form " << to_string(e->conic);
  } else if (const auto* d = std::get_if<SymmetricDifference>(&c)) {
    os << "  lines " << format_line(d->r) << ' ' << format_line(d->s);
  } else {
    const auto& p = std::get<LinePairMinusU>(c);
    os << "  lines " << format_line(p.g) << ' ' << format_line(p.h);
  }
  return os.str();
}

using nlohmann::json;

int read_index(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const int k = v.get<int>();
  if (k < 0 || k >= kNumPoints) throw ParseError(std::string(what) + " out of range");
  return k;
}

Vec3 read_vec3(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 3) throw ParseError(std::string(what) + " must be a triple");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    const int x = v[i].get<int>();
    if (x < 0 || x > 2) throw ParseError(std::string(what) + " entries must be 0, 1 or 2");
    out[i] = x;
  }
  return out;
}

int read_line(const json& v) {
  const Vec3 dual = read_vec3(v, "line");
  if (dual.is_zero() || canonical(dual) != dual) throw ParseError("line dual vector is not canonical");
  return PlaneModel::get().line_with_dual(dual).index;
}

BlockClass read_witness(const json& entry) {
  if (!entry.contains("class") || !entry["class"].is_string()) throw ParseError("block entry without class");
  const std::string name = entry["class"].get<std::string>();
  if (name == "conic_exterior") {
    const json& f = entry.at("form");
    if (!f.is_array() || f.size() != 6) throw ParseError("conic form must have six coefficients");
    QuadraticForm q;
    for (int i = 0; i < 6; ++i) {
      if (!f[i].is_number_integer() || f[i].get<int>() < 0 || f[i].get<int>() > 2)
        throw ParseError("form coefficients must be 0, 1 or 2");
      q.coeffs[i] = f[i].get<int>();
    }
    return ConicExterior{q};
  }
  const json& lines = entry.at("lines");
  if (!lines.is_array() || lines.size() != 2) throw ParseError("witness needs two lines");
  const int a = read_line(lines[0]);
  const int b = read_line(lines[1]);
  if (name == "symmetric_difference") return SymmetricDifference{a, b};
  if (name == "line_pair_minus_u") return LinePairMinusU{a, b};
  throw ParseError("unknown block class '" + name + "'");
}

}  // namespace

DesignFile DesignFile::from_model(const WittModel& m) {
  DesignFile f;
  f.u = m.u();
  for (std::size_t i = 0; i < m.blocks().size(); ++i) {
    const Block& b = m.blocks()[i];
    f.blocks.emplace_back(b.points.begin(), b.points.end());
    f.classes.push_back(m.class_at(i));
  }
  return f;
}

std::string to_structured(const DesignFile& f) {
  const PlaneModel& plane = PlaneModel::get();
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": \"" << kFormat << "\",\n";
  os << "  \"version\": " << kVersion << ",\n";
  os << "  \"u\": " << f.u << ",\n";
  os << "  \"points\": [\n";
  for (int i = 0; i < kNumPoints; ++i)
    os << "    " << json_vec3(plane.point(i).rep) << (i + 1 < kNumPoints ? ",\n" : "\n");
  os << "  ],\n";
  os << "  \"blocks\": [\n";
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    os << "    {\"points\": " << json_array(f.blocks[i]);
    if (!f.classes.empty()) os << ", " << json_witness(f.classes[i]);
    os << '}' << (i + 1 < f.blocks.size() ? ",\n" : "\n");
  }
  os << "  ]\n";
  os << "}\n";
  return os.str();
}

std::string to_table(const DesignFile& f) {
  const PlaneModel& plane = PlaneModel::get();
  std::ostringstream os;
  os << "Witt design, planar model over PG(2,3)\n";
  os << "U = #" << f.u << " (" << format_point(f.u) << ")\n\n";
  os << "points:\n";
  for (const ProjPoint& p : plane.points()) {
    os << "  #" << std::left << std::setw(3) << p.index << format_point(p.index);
    if (p.index == f.u) os << "  (U)";
    os << '\n';
  }
  os << "\nblocks (" << f.blocks.size() << "):\n";
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    std::ostringstream pts;
    pts << '{';
    for (std::size_t j = 0; j < f.blocks[i].size(); ++j) pts << (j ? "," : "") << f.blocks[i][j];
    pts << '}';
    os << "  " << std::right << std::setw(3) << i << "  " << std::left << std::setw(20) << pts.str();
    if (!f.classes.empty()) os << witness_text(f.classes[i]);
    os << '\n';
  }
  return os.str();
}

DesignFile parse_structured(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed design file: ") + e.what());
  }

  try {
    if (!j.is_object()) throw ParseError("design file must be a JSON object");
    if (j.value("format", "") != kFormat) throw ParseError("not a witt-design file");
    if (!j.contains("version") || j["version"] != kVersion) throw ParseError("unsupported design file version");

    DesignFile f;
    f.u = read_index(j.at("u"), "u");

    const json& points = j.at("points");
    if (!points.is_array() || points.size() != kNumPoints) throw ParseError("expected 13 point coordinates");
    for (int i = 0; i < kNumPoints; ++i)
      if (read_vec3(points[i], "point") != PlaneModel::get().point(i).rep)
        throw ParseError("point #" + std::to_string(i) + " does not match the canonical ordering");

    const json& blocks = j.at("blocks");
    if (!blocks.is_array()) throw ParseError("blocks must be an array");
    bool with_classes = !blocks.empty() && blocks.front().contains("class");
    for (const json& entry : blocks) {
      if (!entry.is_object() || !entry.contains("points") || !entry["points"].is_array())
        throw ParseError("block entry without points");
      std::vector<int> b;
      for (const json& p : entry["points"]) b.push_back(read_index(p, "block point"));
      f.blocks.push_back(std::move(b));
      if (entry.contains("class") != with_classes) throw ParseError("class witnesses must be given for all blocks or none");
      if (with_classes) f.classes.push_back(read_witness(entry));
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid design file: ") + e.what());
  }
}

}  // namespace witt

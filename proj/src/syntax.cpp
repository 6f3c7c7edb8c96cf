#include "witt/syntax.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace witt {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

int parse_index(std::string_view text, std::string_view what) {
  const int k = parse_int(text.substr(1), what);
  if (k < 0 || k >= kNumPoints) throw std::invalid_argument(std::string(what) + " index out of range: '" + std::string(text) + "'");
  return k;
}

Vec3 parse_triple(std::string_view text, std::string_view what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = Scalar(parse_int(parts[i], what));
  if (v.is_zero())
    throw std::invalid_argument(std::string(what) + " '" + std::string(text) + "' reduces to the zero vector");
  return v;
}

}  // namespace

int parse_point(std::string_view text) {
  if (!text.empty() && text.front() == '#') return parse_index(text, "point");
  return PlaneModel::get().normalize(parse_triple(text, "point")).index;
}

int parse_line(std::string_view text) {
  if (!text.empty() && text.front() == '#') return parse_index(text, "line");
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  return PlaneModel::get().line_with_dual(parse_triple(text, "line")).index;
}

QuadraticForm parse_form(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 6) throw std::invalid_argument("a form needs six comma-separated coefficients");
  QuadraticForm q;
  for (int i = 0; i < 6; ++i) q.coeffs[i] = Scalar(parse_int(parts[i], "form coefficient"));
  return q;
}

std::string format_point(int point) {
  std::ostringstream os;
  os << PlaneModel::get().point(point).rep;
  return os.str();
}

std::string format_line(int line) {
  std::ostringstream os;
  os << '[' << PlaneModel::get().line(line).dual << ']';
  return os.str();
}

}  // namespace witt

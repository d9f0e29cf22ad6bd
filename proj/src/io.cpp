#include "ginv/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ginv::io {

namespace {

struct Shape {
  std::size_t rows, cols;
};

Shape read_shape(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  for (const char* key : {"rows", "cols", "entries"})
    if (!j.contains(key)) throw ParseError(std::string("matrix is missing \"") + key + "\"");
  auto dim = [&](const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0)
      throw ParseError(std::string("\"") + key + "\" must be a positive integer");
    return static_cast<std::size_t>(v.get<long long>());
  };
  Shape s{dim("rows"), dim("cols")};
  const auto& e = j.at("entries");
  if (!e.is_array()) throw ParseError("\"entries\" must be an array");
  if (e.size() != s.rows * s.cols)
    throw ParseError("\"entries\" has " + std::to_string(e.size()) + " elements, expected " +
                     std::to_string(s.rows * s.cols) + " for a " + std::to_string(s.rows) + "x" +
                     std::to_string(s.cols) + " matrix");
  return s;
}

const nlohmann::json& pair_at(const nlohmann::json& e, std::size_t i) {
  const auto& p = e.at(i);
  if (!p.is_array() || p.size() != 2)
    throw ParseError("entry " + std::to_string(i) + " must be a two-element array [re, im]");
  return p;
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const auto s = read_shape(j);
  const auto& e = j.at("entries");
  std::vector<Complex> v;
  v.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& p = pair_at(e, i);
    if (!p[0].is_number() || !p[1].is_number())
      throw ParseError("entry " + std::to_string(i) + " must hold two numbers");
    const double re = p[0].get<double>(), im = p[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ParseError("entry " + std::to_string(i) + " is not finite");
    v.emplace_back(re, im);
  }
  return ComplexMatrix(s.rows, s.cols, v);
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

exact::RationalMatrix rational_from_json(const nlohmann::json& j) {
  const auto s = read_shape(j);
  const auto& e = j.at("entries");
  std::vector<exact::GaussQ> v;
  v.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& p = pair_at(e, i);
    if (!p[0].is_string() || !p[1].is_string())
      throw ParseError("entry " + std::to_string(i) + " must hold two strings \"p/q\"");
    try {
      v.emplace_back(exact::parse_rational(p[0].get<std::string>()), exact::parse_rational(p[1].get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      throw ParseError("entry " + std::to_string(i) + ": " + ex.what());
    }
  }
  return exact::RationalMatrix(s.rows, s.cols, std::move(v));
}

nlohmann::json rational_to_json(const exact::RationalMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& z : m.entries()) entries.push_back({exact::to_string(z.re), exact::to_string(z.im)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, c] : r.checks) out[name] = {{"residual", c.residual}, {"pass", c.pass}};
  return out;
}

nlohmann::json parse_text(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::out_of_range& ex) {
    throw ParseError(origin + ": " + ex.what());
  } catch (const nlohmann::json::parse_error& ex) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < ex.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

}  // namespace ginv::io

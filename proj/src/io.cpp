#include "monometric/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace monometric {

namespace {

using nlohmann::json;

Eigen::Index read_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1)
    throw Error(ErrorKind::parse, std::string("matrix needs a positive integer \"") + key + "\"");
  return static_cast<Eigen::Index>(j.at(key).get<long long>());
}

Eigen::MatrixXd read_block(const json& j, const char* key, Eigen::Index rows, Eigen::Index cols) {
  const json& a = j.at(key);
  if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != rows)
    throw Error(ErrorKind::parse, std::string("\"") + key + "\" must be an array of " + std::to_string(rows) + " rows");
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = a.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::parse, std::string("row ") + std::to_string(i) + " of \"" + key + "\" must have " +
                                        std::to_string(cols) + " entries");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& x = row.at(static_cast<std::size_t>(k));
      if (!x.is_number()) throw Error(ErrorKind::parse, std::string("non-numeric entry in \"") + key + "\"");
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

json block_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "matrix must be a JSON object");
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  if (j.contains("n")) {
    rows = cols = read_size(j, "n");
  } else {
    rows = read_size(j, "rows");
    cols = read_size(j, "cols");
  }
  if (!j.contains("re")) throw Error(ErrorKind::parse, "matrix needs \"re\"");
  const Eigen::MatrixXd re = read_block(j, "re", rows, cols);
  const Eigen::MatrixXd im = j.contains("im") ? read_block(j, "im", rows, cols) : Eigen::MatrixXd::Zero(rows, cols);
  ComplexMatrix m(rows, cols);
  m.real() = re;
  m.imag() = im;
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json j;
  if (m.rows() == m.cols()) {
    j["n"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["re"] = block_to_json(m.real());
  j["im"] = block_to_json(m.imag());
  return j;
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "channel must be a JSON object");
  const auto n_in = read_size(j, "n_in");
  const auto n_out = read_size(j, "n_out");
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty())
    throw Error(ErrorKind::parse, "channel needs a non-empty \"kraus\" array");
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : j.at("kraus")) {
    ComplexMatrix m = matrix_from_json(k);
    if (m.rows() != n_out || m.cols() != n_in)
      throw Error(ErrorKind::parse, "Kraus operator shape does not match n_out x n_in");
    kraus.push_back(std::move(m));
  }
  return KrausChannel(std::move(kraus));
}

json channel_to_json(const KrausChannel& ch) {
  json j;
  j["n_in"] = ch.input_dim();
  j["n_out"] = ch.output_dim();
  j["kraus"] = json::array();
  for (const auto& k : ch.kraus()) j["kraus"].push_back(matrix_to_json(k));
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

namespace {

double to_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double x = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, x);
  if (s.empty() || res.ec != std::errc() || res.ptr != end)
    throw Error(ErrorKind::parse, "invalid number '" + std::string(s) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  const auto first = text.find_first_not_of(' ');
  if (first != std::string_view::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::parse, e.what());
    }
    for (const auto& x : j) {
      if (!x.is_number()) throw Error(ErrorKind::parse, "list entries must be numbers");
      out.push_back(x.get<double>());
    }
  } else if (first != std::string_view::npos) {
    for (auto part : split(text, ',')) out.push_back(to_double(part));
  }
  if (out.empty()) throw Error(ErrorKind::parse, "empty list");
  return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  if (text.find_first_not_of(' ') == std::string_view::npos) throw Error(ErrorKind::parse, "empty list");
  for (auto part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      out.emplace_back(to_double(part), 0.0);
    else
      out.emplace_back(to_double(part.substr(0, colon)), to_double(part.substr(colon + 1)));
  }
  return out;
}

}  // namespace monometric

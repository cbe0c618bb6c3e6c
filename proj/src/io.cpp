#include "equicode/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "equicode/error.hpp"

namespace equicode {

namespace {

void write_rows(std::string& out, const std::vector<std::vector<double>>& rows) {
  out += "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ", ";
      out += format_double(rows[i][j]);
    }
    out += i + 1 < rows.size() ? "],\n" : "]\n";
  }
  out += "  ]";
}

std::vector<std::vector<double>> read_rows(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " rows must be arrays");
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) throw Error(ErrorKind::ParseError, std::string(what) + " entries must be numbers");
      r.push_back(x.get<double>());
    }
    if (!rows.empty() && r.size() != rows.front().size())
      throw Error(ErrorKind::ParseError, std::string(what) + " is not rectangular");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, std::string(what) + " is empty");
  return rows;
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidParams, "cannot serialize a non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string write_code_file(const CodeFile& file) {
  if (file.vectors.has_value() == file.gram.has_value())
    throw Error(ErrorKind::InvalidParams, "a code file holds exactly one of vectors or gram");
  std::string out = "{\n  \"format_version\": \"1\",\n  \"dim\": " + std::to_string(file.dim) + ",\n";
  if (file.vectors) {
    out += "  \"vectors\": ";
    write_rows(out, *file.vectors);
  } else {
    out += "  \"gram\": ";
    write_rows(out, *file.gram);
  }
  out += ",\n  \"metadata\": " + file.metadata.dump() + "\n}\n";
  return out;
}

CodeFile parse_code_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "code file must be a JSON object");
  if (!j.contains("format_version") || j["format_version"] != "1")
    throw Error(ErrorKind::ParseError, "unsupported format_version");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw Error(ErrorKind::ParseError, "dim must be a non-negative integer");
  CodeFile f;
  f.dim = j["dim"].get<std::size_t>();
  const bool has_vectors = j.contains("vectors");
  const bool has_gram = j.contains("gram");
  if (has_vectors == has_gram) throw Error(ErrorKind::ParseError, "exactly one of vectors or gram must be present");
  if (has_vectors) {
    f.vectors = read_rows(j["vectors"], "vectors");
    if (f.vectors->front().size() != f.dim) throw Error(ErrorKind::ParseError, "vector length differs from dim");
  } else {
    f.gram = read_rows(j["gram"], "gram");
    if (f.gram->front().size() != f.gram->size()) throw Error(ErrorKind::ParseError, "gram must be square");
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw Error(ErrorKind::ParseError, "metadata must be an object");
    f.metadata = j["metadata"];
  }
  return f;
}

CodeFile code_file_of(const Code& code, nlohmann::json metadata) {
  CodeFile f;
  f.dim = code.dim();
  f.vectors = code.to_vectors();
  f.metadata = std::move(metadata);
  return f;
}

Code load_code(const CodeFile& file, const Tolerance& tol) {
  if (file.vectors) {
    try {
      return Code::from_vectors(*file.vectors, tol.angle_tol < 1e-9 ? 1e-9 : tol.angle_tol);
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  const auto& g = *file.gram;
  SymMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i][j] != g[j][i]) throw Error(ErrorKind::ParseError, "gram is not symmetric");
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) m.set(i, j, g[i][j]);
  return embed_from_gram(m, tol);
}

std::string gram_csv(const SymMatrix& gram) {
  std::string out = "# equicode gram v1\n";
  for (std::size_t i = 0; i < gram.order(); ++i) {
    for (std::size_t j = 0; j < gram.order(); ++j) {
      if (j) out += ',';
      out += format_double(gram(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParams, "cannot write " + path);
  out << text;
}

}  // namespace equicode

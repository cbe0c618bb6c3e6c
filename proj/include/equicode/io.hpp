#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equicode/code.hpp"
#include "equicode/matcore.hpp"

namespace equicode {

/// On-disk code: exactly one of `vectors` or `gram` is present.
struct CodeFile {
  std::size_t dim = 0;
  std::optional<std::vector<std::vector<double>>> vectors;
  std::optional<std::vector<std::vector<double>>> gram;
  nlohmann::json metadata = nlohmann::json::object();
};

/// 17 significant digits; parses back to the same double.
std::string format_double(double x);

/// Canonical bytes: fixed key order, one row per line, sorted metadata keys.
std::string write_code_file(const CodeFile& file);
/// Throws ParseError on malformed or non-rectangular input.
CodeFile parse_code_file(const std::string& text);

CodeFile code_file_of(const Code& code, nlohmann::json metadata = nlohmann::json::object());
/// The stored vectors, or an embedding of the stored Gram matrix.
Code load_code(const CodeFile& file, const Tolerance& tol = {});

/// Row-major CSV with a "# equicode gram v1" header line.
std::string gram_csv(const SymMatrix& gram);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace equicode

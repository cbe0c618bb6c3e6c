#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace equicode {

/// Structured verdict of a bound or lemma check: pass iff lhs <= rhs + tolerance.
struct Certificate {
  std::string name;
  /// Human-readable form of the inequality that was checked.
  std::string statement;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  nlohmann::json witness = nlohmann::json::object();

  static Certificate compare(std::string name, std::string statement, double lhs, double rhs, double tolerance = 0.0,
                             nlohmann::json witness = nlohmann::json::object()) {
    Certificate c;
    c.name = std::move(name);
    c.statement = std::move(statement);
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = rhs - lhs;
    c.tolerance = tolerance;
    c.pass = lhs <= rhs + tolerance;
    c.witness = std::move(witness);
    return c;
  }
};

inline nlohmann::json to_json(const Certificate& c) {
  return {{"name", c.name}, {"statement", c.statement}, {"pass", c.pass},         {"lhs", c.lhs},
          {"rhs", c.rhs},   {"margin", c.margin},       {"tolerance", c.tolerance}, {"witness", c.witness}};
}

}  // namespace equicode

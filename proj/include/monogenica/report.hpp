#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace monogenica {

enum class Check {
  IndexRange,
  Symmetry,
  Triangularity,
  Associativity1,
  Associativity2,
  UnitAction,
  TriadDimension,
  TriadRank,
  Surjectivity,
  FunctionCount,
};

std::string_view check_name(Check c);

struct Violation {
  Check check;
  std::vector<int> indices;  // 1-based, meaning depends on the check
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Check c) const;
  void append(const ValidationReport& other);
  std::string to_string() const;
};

}  // namespace monogenica

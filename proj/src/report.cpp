#include "monogenica/report.hpp"

#include <sstream>

namespace monogenica {

std::string_view check_name(Check c) {
  switch (c) {
    case Check::IndexRange: return "index-range";
    case Check::Symmetry: return "symmetry";
    case Check::Triangularity: return "triangularity";
    case Check::Associativity1: return "associativity-A1";
    case Check::Associativity2: return "associativity-A2";
    case Check::UnitAction: return "unit-action";
    case Check::TriadDimension: return "triad-dimension";
    case Check::TriadRank: return "triad-rank";
    case Check::Surjectivity: return "surjectivity";
    case Check::FunctionCount: return "function-count";
  }
  return "unknown";
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << check_name(check);
  if (!indices.empty()) {
    os << " (";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) os << ",";
      os << indices[i];
    }
    os << ")";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

bool ValidationReport::has(Check c) const {
  for (const auto& v : violations) {
    if (v.check == c) return true;
  }
  return false;
}

void ValidationReport::append(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) os << v.to_string() << "\n";
  return os.str();
}

}  // namespace monogenica

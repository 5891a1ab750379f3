#include "hopflab/report.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto a : other.items) {
    if (!prefix.empty()) a.name = prefix + a.name;
    items.push_back(std::move(a));
  }
  for (const auto& [k, v] : other.flags)
    flags[prefix.empty() ? k : prefix + k] = v;
}

std::string CheckReport::str() const {
  std::string s = subject + (pass() ? ": pass" : ": FAIL") + "\n";
  for (const auto& a : items) s += "  " + a.str() + "\n";
  for (const auto& [k, v] : flags) s += "  flag " + k + " = " + (v ? "true" : "false") + "\n";
  return s;
}

void CheckReport::require_pass(const std::string& context) const {
  if (const AxiomCheck* f = first_failure()) {
    std::string msg = context + ": check '" + f->name + "' failed";
    if (f->witness)
      msg += " at (" + std::to_string(f->witness->row) + "," +
             std::to_string(f->witness->col) + "): " + f->witness->lhs_value + " vs " +
             f->witness->rhs_value;
    throw PreconditionError(msg);
  }
}

}  // namespace hopflab

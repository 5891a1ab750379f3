#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopflab/dsl.hpp"

namespace hopflab {

// Result of one structure/theorem suite: a list of named equation checks plus
// derived boolean flags (commutative, cocommutative, ...).
struct CheckReport {
  std::string subject;
  std::vector<AxiomCheck> items;
  std::map<std::string, bool> flags;

  bool pass() const {
    for (const auto& a : items)
      if (!a.pass) return false;
    return true;
  }
  const AxiomCheck* first_failure() const {
    for (const auto& a : items)
      if (!a.pass) return &a;
    return nullptr;
  }
  void add(AxiomCheck a) { items.push_back(std::move(a)); }
  void merge(const CheckReport& other, const std::string& prefix = "");
  std::string str() const;
  // throws PreconditionError naming the first failing check
  void require_pass(const std::string& context) const;
};

}  // namespace hopflab

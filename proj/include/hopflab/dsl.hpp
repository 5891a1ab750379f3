#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/morphism.hpp"

namespace hopflab {

// Morphism expressions.  Surface syntax:
//   expr := term { "o" term }          composition, left-assoc, f o g = f after g
//   term := atom { "x" atom }          tensor, left-assoc, binds tighter than "o"
//   atom := IDENT | "id[" objlist "]" | "swap[" obj "," obj "]" | "(" expr ")"
// "id[]" is the identity of the unit object K.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Tag { generator, identity, swap, compose, tensor };
  Tag tag;
  std::string name;                  // generator
  std::vector<std::string> objects;  // identity: any number; swap: exactly two
  ExprPtr left, right;

  static ExprPtr gen(std::string name);
  static ExprPtr id(std::vector<std::string> objects);
  static ExprPtr swp(std::string a, std::string b);
  static ExprPtr comp(ExprPtr l, ExprPtr r);
  static ExprPtr tens(ExprPtr l, ExprPtr r);
};

ExprPtr parse_expr(std::string_view src);  // throws ParseError (1-based offsets)
std::string print_expr(const Expr& e);     // canonical, parses back to the same tree
bool expr_equal(const Expr& a, const Expr& b);

struct Environment {
  FieldSpec field;
  std::map<std::string, std::size_t> objects;
  std::map<std::string, Morphism> generators;

  Environment& obj(const std::string& name, std::size_t dim);
  // binds the morphism under `name`, retyped onto single-factor env objects
  Environment& gen(const std::string& name, const Morphism& m,
                   const std::vector<std::string>& dom,
                   const std::vector<std::string>& cod);
  // binds with the morphism's own signature
  Environment& gen_raw(const std::string& name, Morphism m);
  ObjectSig sig_of(const std::vector<std::string>& names) const;
};

std::pair<ObjectSig, ObjectSig> typecheck_expr(const Expr& e, const Environment& env);
Morphism eval_expr(const Expr& e, const Environment& env);

struct Witness {
  std::size_t row = 0, col = 0;
  std::string lhs_value, rhs_value;
};

// One checked equation.  `lhs`/`rhs` are null for direct matrix comparisons.
struct AxiomCheck {
  std::string name;
  ExprPtr lhs, rhs;
  bool pass = false;
  std::optional<Witness> witness;
  std::string str() const;
};

AxiomCheck check_equal(const std::string& name, const ExprPtr& lhs, const ExprPtr& rhs,
                       const Environment& env);
AxiomCheck check_equal(const std::string& name, const std::string& lhs_src,
                       const std::string& rhs_src, const Environment& env);
// direct entrywise comparison of two already-built morphisms
AxiomCheck compare_morphisms(const std::string& name, const Morphism& lhs,
                             const Morphism& rhs);

}  // namespace hopflab

#pragma once

#include "hopflab/hopf.hpp"

namespace hopflab {

// One carrier set with two group structures (star, circ) obeying
// g circ (h star t) = (g circ h) star g^{-star} star (g circ t).
struct SkewBrace {
  GroupTable star, circ;
};

SkewBrace trivial_brace(const GroupTable& g);   // circ = star
SkewBrace opposite_brace(const GroupTable& g);  // circ = opposite product

// Exhaustive check over all triples; reports the first failing one.
CheckReport check_skew_brace(const SkewBrace& b);

// Two Hopf algebra structures on one coalgebra with a shared unit.
struct HopfBraceData {
  std::string name;
  ObjectSig object;
  Morphism unit, counit, coprod;        // shared
  Morphism prod1, antipode1;            // first Hopf structure
  Morphism prod2, antipode2;            // second Hopf structure

  FieldSpec field() const { return prod1.field(); }
  std::size_t dim() const { return object.dim(); }
  HopfAlgebraData first() const;
  HopfAlgebraData second() const;
};

HopfBraceData linearize_skew_brace(const SkewBrace& b, const FieldSpec& f,
                                   const std::string& name = "H");

// Both Hopf suites, the compatibility law, and the reconstruction of the
// second product from the remnant action.
CheckReport check_hopf_brace(const HopfBraceData& hb);
bool is_cocommutative(const HopfBraceData& hb);

// Remnant action prod1 o (antipode1 (x) prod2) o (coprod (x) H) : H (x) H -> H.
Morphism gamma_operator(const HopfBraceData& hb);
// Extra laws of the remnant action available under cocommutativity.
CheckReport check_gamma_properties(const HopfBraceData& hb);

// Set-level solution tables: c(g,h) = (sigma[g][h], tau[h][g]).
struct YBSolutionSet {
  std::size_t n = 0;
  std::vector<std::vector<int>> sigma, tau;
};

// sigma_g(h) = g^{-star} star (g circ h), tau_h(g) = sigma_g(h)^{-circ} circ
// (g circ h); the formulas are re-verified by the exhaustive braid check.
YBSolutionSet qybe_solution_from_skew_brace(const SkewBrace& b);

CheckReport check_braid_relation(const YBSolutionSet& c);
CheckReport check_braid_relation(const Morphism& c);  // on a square tensor
Morphism linearize_solution(const YBSolutionSet& c, const FieldSpec& f,
                            const std::string& object_name = "V");

}  // namespace hopflab

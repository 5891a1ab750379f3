#pragma once

#include "hopflab/brace.hpp"

namespace hopflab {

// A coalgebra morphism T : H -> B together with an action of B on H making H
// a module algebra-coalgebra, multiplicative in the twisted sense.
struct RelRotaBaxterData {
  std::string name;
  HopfAlgebraData H, B;
  Morphism T;       // H -> B
  Morphism action;  // B (x) H -> H

  FieldSpec field() const { return T.field(); }
  // H cocommutative (domain of the brace construction)
  bool star() const { return is_cocommutative(H); }
  // both Hopf algebras cocommutative
  bool coc() const { return star() && is_cocommutative(B); }
};

CheckReport check_rrb(const RelRotaBaxterData& r);

// T = antipode with the adjoint action of a cocommutative Hopf algebra.
RelRotaBaxterData goncharov_operator(const HopfAlgebraData& h,
                                     const std::string& name = "");
// identity operator on the unit object
RelRotaBaxterData trivial_rrb(const FieldSpec& f);

// Hopf brace -> operator: identity map with the remnant action.
RelRotaBaxterData functor_F(const HopfBraceData& hb);
// Operator -> Hopf brace: the transformed product and antipode on H.
HopfBraceData functor_G(const RelRotaBaxterData& r);
// Transformed product mu_H o (H (x) (action o (T (x) H))) o (coprod (x) H).
Morphism transformed_product(const RelRotaBaxterData& r);
Morphism transformed_antipode(const RelRotaBaxterData& r);

RelRotaBaxterData tensor_rrb(const RelRotaBaxterData& a, const RelRotaBaxterData& b);

struct RrbMorphism {
  Morphism f;  // H -> A
  Morphism h;  // B -> D
};

CheckReport check_rrb_morphism(const RrbMorphism& m, const RelRotaBaxterData& src,
                               const RelRotaBaxterData& dst);

CheckReport check_hopf_brace_morphism(const Morphism& x, const HopfBraceData& src,
                                      const HopfBraceData& dst);

// Adjunction bijection: a brace morphism y : src -> G(dst) corresponds to the
// operator morphism (y, L o y) : F(src) -> dst.  Both directions verify their
// input and output suites.
RrbMorphism theta(const Morphism& y, const HopfBraceData& src,
                  const RelRotaBaxterData& dst);
Morphism theta_inverse(const RrbMorphism& m, const HopfBraceData& src,
                       const RelRotaBaxterData& dst);

}  // namespace hopflab

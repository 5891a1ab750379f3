#pragma once

#include "hopflab/rrb_modules.hpp"

namespace hopflab {

// Hopf algebra morphisms f : X -> Y, g : Y -> X with g o f = id.
struct HopfProjection {
  HopfAlgebraData X, Y;
  Morphism f, g;
};

CheckReport check_hopf_projection(const HopfProjection& p);

// The split image of q = id * (f o antipode o g) together with the structure
// it inherits: algebra, coalgebra, action and coaction of X, and antipode.
struct CoinvariantPackage {
  SplitIdempotent split;
  ObjectSig object;
  Morphism unit, prod, counit, coprod;
  Morphism action;    // X (x) I -> I
  Morphism coaction;  // I -> X (x) I
  Morphism antipode;

  // Hopf bundle view; a genuine Hopf algebra when Y is cocommutative.
  HopfAlgebraData hopf(const std::string& name) const;
};

CoinvariantPackage coinvariant_package(const HopfProjection& p);
// Factorization and splitting identities, the cocommutative extras, and the
// projection/action dichotomy.
CheckReport check_coinvariant_package(const CoinvariantPackage& c, const HopfProjection& p);

struct YdModuleData {
  ObjectSig carrier;
  Morphism action;    // X (x) M -> M
  Morphism coaction;  // M -> X (x) M
};

CheckReport check_yd_module(const YdModuleData& m, const HopfAlgebraData& over);

// Braiding of the crossed-module category and its displayed inverse; both
// composites are verified to be identities.
std::pair<Morphism, Morphism> yd_braiding(const YdModuleData& m, const YdModuleData& n,
                                          const HopfAlgebraData& over);

// Two Hopf projections plus operator morphisms both ways.
struct RrbProjection {
  RelRotaBaxterData inner, outer;
  Morphism f;  // H -> A
  Morphism h;  // B -> D
  Morphism g;  // A -> H
  Morphism l;  // D -> B
};

CheckReport check_rrb_projection(const RrbProjection& pr);

// The operator induced on coinvariants: L0 = p_D o L o i_A with the action
// p_A o act_A o (i_D (x) i_A).  Needs both outer Hopf algebras cocommutative.
RelRotaBaxterData induced_rrb_on_coinvariants(const RrbProjection& pr);

struct HbrProjection {
  HopfBraceData inner, outer;
  Morphism x;  // inner -> outer
  Morphism y;  // outer -> inner
};

CheckReport check_hbr_projection(const HbrProjection& pr);

// Coinvariant Hopf brace on the shared split image of the two idempotents.
HopfBraceData brace_coinvariants(const HbrProjection& pr);

// Functors between the projection categories.
RelRotaBaxterData proj_functor_P(const RrbProjection& pr);
// morphism part of P: (y0, t0) with i' o y0 = y o i on both levels
std::pair<Morphism, Morphism> proj_functor_P_morphism(const RrbProjection& src,
                                                      const RrbProjection& dst,
                                                      const Morphism& x, const Morphism& y,
                                                      const Morphism& z, const Morphism& t);
RrbProjection proj_functor_Q(const HbrProjection& pr);
HbrProjection proj_functor_R(const RrbProjection& pr);
HopfBraceData proj_functor_Pprime(const HbrProjection& pr);  // brace_coinvariants

// Morphism of projections of operators (x, y, z, t).
struct RrbProjectionMorphism {
  Morphism x, y, z, t;
};

CheckReport check_rrb_projection_morphism(const RrbProjectionMorphism& m,
                                          const RrbProjection& src,
                                          const RrbProjection& dst);
CheckReport check_hbr_projection_morphism(const Morphism& z, const Morphism& t,
                                          const HbrProjection& src,
                                          const HbrProjection& dst);

// Adjunction bijection between the projection categories: forward drops the
// second pair, backward restores it as (T o z, L o t).
std::pair<Morphism, Morphism> sigma_forward(const RrbProjectionMorphism& m,
                                            const HbrProjection& src,
                                            const RrbProjection& dst);
RrbProjectionMorphism sigma_backward(const Morphism& z, const Morphism& t,
                                     const HbrProjection& src, const RrbProjection& dst);

// Both functor squares computed on one instance and compared entrywise.
CheckReport check_commuting_squares(const RrbProjection& pr);
CheckReport check_commuting_squares(const HbrProjection& pr);

// Extra stability conditions singling out the projections whose coinvariants
// carry a module over the inner operator.
CheckReport check_strong_projection(const RrbProjection& pr);
RrbModuleData induced_module_from_strong(const RrbProjection& pr);

}  // namespace hopflab

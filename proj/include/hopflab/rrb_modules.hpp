#pragma once

#include "hopflab/rrb.hpp"

namespace hopflab {

// (M, N, actH, actB, actN, conn): M carries compatible H- and B-actions, N a
// B-action, and conn : M -> N intertwines them through the operator.
struct RrbModuleData {
  ObjectSig M, N;
  Morphism actH;  // H (x) M -> M
  Morphism actB;  // B (x) M -> M
  Morphism actN;  // B (x) N -> N
  Morphism conn;  // M -> N
};

RrbModuleData regular_module(const RelRotaBaxterData& r);
RrbModuleData trivial_module(const RelRotaBaxterData& r);
CheckReport check_rrb_module(const RrbModuleData& m, const RelRotaBaxterData& r);

// (M, act1, act2) over a Hopf brace.
struct HbrModuleData {
  ObjectSig M;
  Morphism act1, act2;
};

HbrModuleData regular_brace_module(const HopfBraceData& hb);
HbrModuleData trivial_brace_module(const HopfBraceData& hb);
CheckReport check_hbr_module(const HbrModuleData& m, const HopfBraceData& hb);

// Remnant action act1 o (antipode1 (x) act2) o (coprod (x) M) on the carrier.
Morphism brace_module_gamma(const HbrModuleData& m, const HopfBraceData& hb);

// Brace modules to operator modules over F(hb): (M,M,act1,Gamma_M,act2,id).
RrbModuleData functor_W(const HbrModuleData& m, const HopfBraceData& hb);
// Operator modules to brace modules over G(r): (M, actH, transformed action).
HbrModuleData functor_U(const RrbModuleData& m, const RelRotaBaxterData& r);
// Brace modules over G(r) back to operator modules; needs T invertible.
RrbModuleData functor_V(const HbrModuleData& m, const RelRotaBaxterData& r);
// Restriction along an operator morphism: actions precomposed with (f, h).
RrbModuleData restrict_module(const RrbModuleData& m, const RrbMorphism& along,
                              const RelRotaBaxterData& src, const RelRotaBaxterData& dst);

struct RrbModuleMorphism {
  Morphism r;  // M -> P
  Morphism s;  // N -> Q
};

CheckReport check_rrb_module_morphism(const RrbModuleMorphism& mor,
                                      const RrbModuleData& src, const RrbModuleData& dst,
                                      const RelRotaBaxterData& over);
CheckReport check_hbr_module_morphism(const Morphism& f, const HbrModuleData& src,
                                      const HbrModuleData& dst, const HopfBraceData& hb);

// Adjunction bijection between brace-module morphisms into U(dst) and
// operator-module morphisms out of V(src); both directions verify suites.
RrbModuleMorphism lambda_forward(const Morphism& f, const HbrModuleData& src,
                                 const RrbModuleData& dst, const RelRotaBaxterData& r);
Morphism lambda_backward(const RrbModuleMorphism& mor, const HbrModuleData& src,
                         const RrbModuleData& dst, const RelRotaBaxterData& r);

// Tensor product of modules with diagonal actions; needs both Hopf algebras
// of the operator cocommutative.
RrbModuleData tensor_modules(const RrbModuleData& a, const RrbModuleData& b,
                             const RelRotaBaxterData& r);

// For invertible conn and T: V(U(m)) is isomorphic to m via (id, conn^{-1}),
// and U o V is the identity on brace modules.
CheckReport modiso_equivalence_check(const RrbModuleData& m, const RelRotaBaxterData& r);

}  // namespace hopflab

#pragma once

#include "hopflab/group.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

struct AlgebraOps {
  Morphism unit, prod;  // K -> A, A (x) A -> A
};
struct CoalgebraOps {
  Morphism counit, coprod;  // D -> K, D -> D (x) D
};

// (eta, mu, eps, delta, antipode) on one object.
struct HopfAlgebraData {
  std::string name;
  ObjectSig object;
  Morphism unit, prod, counit, coprod, antipode;

  FieldSpec field() const { return prod.field(); }
  std::size_t dim() const { return object.dim(); }
  AlgebraOps algebra() const { return {unit, prod}; }
  CoalgebraOps coalgebra() const { return {counit, coprod}; }
  HopfAlgebraData renamed(const std::string& new_name) const;
};

// Declares `obj` and binds eta/mu/eps/delta/lam (suffixed) for use in
// equation schemas.
void bind_hopf(Environment& env, const HopfAlgebraData& h, const std::string& obj,
               const std::string& suffix);

// All bialgebra + antipode equations; flags: commutative, cocommutative.
CheckReport check_hopf(const HopfAlgebraData& h);
bool is_commutative(const HopfAlgebraData& h);
bool is_cocommutative(const HopfAlgebraData& h);

// f : src -> dst as an algebra and coalgebra morphism (plus the antipode
// compatibility that follows from them).
CheckReport check_hopf_morphism(const Morphism& f, const HopfAlgebraData& src,
                                const HopfAlgebraData& dst);

// Group-like basis: mu linearizes the table, delta is the diagonal, the
// antipode permutes by inversion.
HopfAlgebraData group_algebra(const GroupTable& g, const FieldSpec& f,
                              const std::string& name = "H");
// Hopf structure on the unit object (every map the 1x1 identity).
HopfAlgebraData trivial_hopf(const FieldSpec& f);
// Tensor-product Hopf algebra with interleaving swaps.
HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b);

// mu_dst o (f1 (x) f2) o delta_src
Morphism convolve(const Morphism& f1, const Morphism& f2, const CoalgebraOps& src,
                  const AlgebraOps& dst);

enum class ModuleFlavor {
  module,
  comodule,
  module_algebra,
  module_coalgebra,
  module_algebra_coalgebra,
  comodule_algebra,
  comodule_coalgebra,
};
const char* flavor_name(ModuleFlavor f);
ModuleFlavor flavor_from_name(const std::string& s);

struct ModuleData {
  ModuleFlavor flavor = ModuleFlavor::module;
  ObjectSig carrier;
  Morphism action;  // X (x) M -> M, or the coaction M -> X (x) M
  std::optional<AlgebraOps> carrier_algebra;
  std::optional<CoalgebraOps> carrier_coalgebra;
};

// x.(y) = x_1 y lam(x_2); a module algebra(-coalgebra when cocommutative).
ModuleData adjoint_action(const HopfAlgebraData& h);
// comodule-coalgebra structure of a Hopf algebra over itself
ModuleData adjoint_coaction(const HopfAlgebraData& h);
// trivial action eps (x) id
ModuleData trivial_action(const HopfAlgebraData& over, const ObjectSig& carrier,
                          std::optional<AlgebraOps> alg = std::nullopt,
                          std::optional<CoalgebraOps> coalg = std::nullopt);

// Runs exactly the axiom set selected by the flavor tag.
CheckReport check_module_structure(const ModuleData& m, const HopfAlgebraData& over);

}  // namespace hopflab

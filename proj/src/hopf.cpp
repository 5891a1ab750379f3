#include "hopflab/hopf.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

Morphism flat(const Morphism& m, const std::string& dname, const std::string& cname) {
  ObjectSig d = m.dom().is_unit() ? ObjectSig::unit() : ObjectSig::single(dname, m.dom().dim());
  ObjectSig c = m.cod().is_unit() ? ObjectSig::unit() : ObjectSig::single(cname, m.cod().dim());
  return m.with_signature(d, c);
}

}  // namespace

void bind_hopf(Environment& env, const HopfAlgebraData& h, const std::string& obj,
               const std::string& suffix) {
  env.obj(obj, h.dim());
  env.gen("eta" + suffix, h.unit, {}, {obj});
  env.gen("mu" + suffix, h.prod, {obj, obj}, {obj});
  env.gen("eps" + suffix, h.counit, {obj}, {});
  env.gen("delta" + suffix, h.coprod, {obj}, {obj, obj});
  env.gen("lam" + suffix, h.antipode, {obj}, {obj});
}

HopfAlgebraData HopfAlgebraData::renamed(const std::string& new_name) const {
  HopfAlgebraData h = *this;
  h.name = new_name;
  return h;
}

CheckReport check_hopf(const HopfAlgebraData& h) {
  Environment env;
  env.field = h.field();
  bind_hopf(env, h, "X", "");

  CheckReport rep;
  rep.subject = "hopf:" + h.name;
  auto eq = [&](const char* name, const char* l, const char* r) {
    rep.add(check_equal(name, l, r, env));
  };
  eq("unit-left", "mu o (eta x id[X])", "id[X]");
  eq("unit-right", "mu o (id[X] x eta)", "id[X]");
  eq("assoc", "mu o (mu x id[X])", "mu o (id[X] x mu)");
  eq("counit-left", "(eps x id[X]) o delta", "id[X]");
  eq("counit-right", "(id[X] x eps) o delta", "id[X]");
  eq("coassoc", "(delta x id[X]) o delta", "(id[X] x delta) o delta");
  eq("counit-mult", "eps o mu", "eps x eps");
  eq("counit-unit", "eps o eta", "id[]");
  eq("coprod-mult", "delta o mu",
     "(mu x mu) o (id[X] x ((swap[X,X] x id[X]) o (id[X] x delta))) o (delta x id[X])");
  eq("coprod-unit", "delta o eta", "eta x eta");
  eq("antipode-left", "mu o (lam x id[X]) o delta", "eta o eps");
  eq("antipode-right", "mu o (id[X] x lam) o delta", "eta o eps");

  rep.flags["commutative"] = check_equal("commutative", "mu o swap[X,X]", "mu", env).pass;
  rep.flags["cocommutative"] =
      check_equal("cocommutative", "swap[X,X] o delta", "delta", env).pass;
  return rep;
}

bool is_commutative(const HopfAlgebraData& h) {
  Environment env;
  env.field = h.field();
  bind_hopf(env, h, "X", "");
  return check_equal("commutative", "mu o swap[X,X]", "mu", env).pass;
}

bool is_cocommutative(const HopfAlgebraData& h) {
  Environment env;
  env.field = h.field();
  bind_hopf(env, h, "X", "");
  return check_equal("cocommutative", "swap[X,X] o delta", "delta", env).pass;
}

CheckReport check_hopf_morphism(const Morphism& f, const HopfAlgebraData& src,
                                const HopfAlgebraData& dst) {
  Environment env;
  env.field = src.field();
  bind_hopf(env, src, "X", "X");
  bind_hopf(env, dst, "Y", "Y");
  env.gen("f", f, {"X"}, {"Y"});

  CheckReport rep;
  rep.subject = "hopf-morphism:" + src.name + "->" + dst.name;
  rep.add(check_equal("morphism-mult", "f o muX", "muY o (f x f)", env));
  rep.add(check_equal("morphism-unit", "f o etaX", "etaY", env));
  rep.add(check_equal("morphism-coprod", "deltaY o f", "(f x f) o deltaX", env));
  rep.add(check_equal("morphism-counit", "epsY o f", "epsX", env));
  // antipode compatibility follows from the four conditions above
  rep.add(check_equal("morphism-antipode", "f o lamX", "lamY o f", env));
  return rep;
}

HopfAlgebraData group_algebra(const GroupTable& g, const FieldSpec& f,
                              const std::string& name) {
  const std::size_t n = g.size();
  ObjectSig obj = ObjectSig::single(name, n);
  ObjectSig obj2 = obj.tensor(obj);

  Matrix unit(f, n, 1);
  unit.set_one(g.identity, 0);
  Matrix prod(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod.set_one(g.table[i][j], i * n + j);
  Matrix counit(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) counit.set_one(0, i);
  Matrix coprod(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) coprod.set_one(i * n + i, i);
  Matrix antipode(f, n, n);
  for (std::size_t i = 0; i < n; ++i) antipode.set_one(g.inverse[i], i);

  return HopfAlgebraData{name,
                         obj,
                         Morphism(ObjectSig::unit(), obj, std::move(unit)),
                         Morphism(obj2, obj, std::move(prod)),
                         Morphism(obj, ObjectSig::unit(), std::move(counit)),
                         Morphism(obj, obj2, std::move(coprod)),
                         Morphism(obj, obj, std::move(antipode))};
}

HopfAlgebraData trivial_hopf(const FieldSpec& f) {
  Morphism one = Morphism::identity(f, ObjectSig::unit());
  return HopfAlgebraData{"K", ObjectSig::unit(), one, one, one, one, one};
}

HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  if (!(a.field() == b.field()))
    throw PreconditionError("tensor of Hopf algebras over different fields: " +
                            a.field().str() + " vs " + b.field().str());
  Environment env;
  env.field = a.field();
  bind_hopf(env, a, "A", "A");
  bind_hopf(env, b, "B", "B");
  auto ev = [&](const char* src) { return eval_expr(*parse_expr(src), env); };

  ObjectSig obj = ObjectSig::single(a.name + "_" + b.name, a.dim() * b.dim());
  ObjectSig obj2 = obj.tensor(obj);
  const ObjectSig K = ObjectSig::unit();

  HopfAlgebraData h{
      a.name + "_" + b.name,
      obj,
      ev("etaA x etaB").with_signature(K, obj),
      ev("(muA x muB) o (id[A] x swap[B,A] x id[B])").with_signature(obj2, obj),
      ev("epsA x epsB").with_signature(obj, K),
      ev("(id[A] x swap[A,B] x id[B]) o (deltaA x deltaB)").with_signature(obj, obj2),
      ev("lamA x lamB").with_signature(obj, obj)};
  return h;
}

Morphism convolve(const Morphism& f1, const Morphism& f2, const CoalgebraOps& src,
                  const AlgebraOps& dst) {
  if (!f1.dom().same_dims(f2.dom()) || !f1.cod().same_dims(f2.cod()))
    throw SignatureError("convolution operands have different signatures", f1.sig_str(),
                         f2.sig_str());
  Morphism a = flat(f1, "D", "A");
  Morphism b = flat(f2, "D", "A");
  Morphism cop = src.coprod.with_signature(a.dom(), a.dom().tensor(a.dom()));
  Morphism pr = dst.prod.with_signature(a.cod().tensor(a.cod()), a.cod());
  Morphism out = compose(pr, tensor_product(a, b), cop);
  return out.with_signature(f1.dom(), f1.cod());
}

const char* flavor_name(ModuleFlavor f) {
  switch (f) {
    case ModuleFlavor::module: return "module";
    case ModuleFlavor::comodule: return "comodule";
    case ModuleFlavor::module_algebra: return "module-algebra";
    case ModuleFlavor::module_coalgebra: return "module-coalgebra";
    case ModuleFlavor::module_algebra_coalgebra: return "module-algebra-coalgebra";
    case ModuleFlavor::comodule_algebra: return "comodule-algebra";
    case ModuleFlavor::comodule_coalgebra: return "comodule-coalgebra";
  }
  return "?";
}

ModuleFlavor flavor_from_name(const std::string& s) {
  for (ModuleFlavor f :
       {ModuleFlavor::module, ModuleFlavor::comodule, ModuleFlavor::module_algebra,
        ModuleFlavor::module_coalgebra, ModuleFlavor::module_algebra_coalgebra,
        ModuleFlavor::comodule_algebra, ModuleFlavor::comodule_coalgebra})
    if (s == flavor_name(f)) return f;
  throw Error("unknown module flavor '" + s + "'");
}

ModuleData adjoint_action(const HopfAlgebraData& h) {
  Environment env;
  env.field = h.field();
  bind_hopf(env, h, "X", "");
  Morphism act = eval_expr(
      *parse_expr("mu o (mu x lam) o (id[X] x swap[X,X]) o (delta x id[X])"), env);
  ModuleFlavor fl = is_cocommutative(h) ? ModuleFlavor::module_algebra_coalgebra
                                        : ModuleFlavor::module_algebra;
  return ModuleData{fl, h.object, act, h.algebra(), h.coalgebra()};
}

ModuleData adjoint_coaction(const HopfAlgebraData& h) {
  Environment env;
  env.field = h.field();
  bind_hopf(env, h, "X", "");
  Morphism coact = eval_expr(
      *parse_expr("(mu x id[X]) o (id[X] x swap[X,X]) o (delta x lam) o delta"), env);
  return ModuleData{ModuleFlavor::comodule_coalgebra, h.object, coact, h.algebra(),
                    h.coalgebra()};
}

ModuleData trivial_action(const HopfAlgebraData& over, const ObjectSig& carrier,
                          std::optional<AlgebraOps> alg,
                          std::optional<CoalgebraOps> coalg) {
  Morphism act = tensor_product(over.counit, Morphism::identity(over.field(), carrier));
  return ModuleData{ModuleFlavor::module, carrier, act, std::move(alg), std::move(coalg)};
}

CheckReport check_module_structure(const ModuleData& m, const HopfAlgebraData& over) {
  const bool is_comodule = m.flavor == ModuleFlavor::comodule ||
                           m.flavor == ModuleFlavor::comodule_algebra ||
                           m.flavor == ModuleFlavor::comodule_coalgebra;
  Environment env;
  env.field = over.field();
  bind_hopf(env, over, "X", "");
  env.obj("M", m.carrier.dim());
  if (is_comodule)
    env.gen("coact", m.action, {"M"}, {"X", "M"});
  else
    env.gen("act", m.action, {"X", "M"}, {"M"});
  if (m.carrier_algebra) {
    env.gen("etaM", m.carrier_algebra->unit, {}, {"M"});
    env.gen("muM", m.carrier_algebra->prod, {"M", "M"}, {"M"});
  }
  if (m.carrier_coalgebra) {
    env.gen("epsM", m.carrier_coalgebra->counit, {"M"}, {});
    env.gen("deltaM", m.carrier_coalgebra->coprod, {"M"}, {"M", "M"});
  }

  CheckReport rep;
  rep.subject = std::string("module:") + flavor_name(m.flavor) + " over " + over.name;
  auto eq = [&](const char* name, const char* l, const char* r) {
    rep.add(check_equal(name, l, r, env));
  };
  auto need_alg = [&] {
    if (!m.carrier_algebra)
      throw PreconditionError("flavor " + std::string(flavor_name(m.flavor)) +
                              " needs the carrier algebra structure");
  };
  auto need_coalg = [&] {
    if (!m.carrier_coalgebra)
      throw PreconditionError("flavor " + std::string(flavor_name(m.flavor)) +
                              " needs the carrier coalgebra structure");
  };

  if (!is_comodule) {
    eq("action-unit", "act o (eta x id[M])", "id[M]");
    eq("action-mult", "act o (id[X] x act)", "act o (mu x id[M])");
  } else {
    eq("coaction-counit", "(eps x id[M]) o coact", "id[M]");
    eq("coaction-coassoc", "(id[X] x coact) o coact", "(delta x id[M]) o coact");
  }

  switch (m.flavor) {
    case ModuleFlavor::module:
    case ModuleFlavor::comodule:
      break;
    case ModuleFlavor::module_algebra:
      need_alg();
      eq("unit-linear", "act o (id[X] x etaM)", "eps x etaM");
      eq("prod-linear", "act o (id[X] x muM)",
         "muM o (act x act) o (((id[X] x swap[X,M]) o (delta x id[M])) x id[M])");
      break;
    case ModuleFlavor::module_coalgebra: {
      need_coalg();
      eq("counit-colinear", "epsM o act", "eps x epsM");
      eq("coprod-colinear", "deltaM o act",
         "(act x act) o (((id[X] x swap[X,M]) o (delta x id[M])) x id[M]) o (id[X] x deltaM)");
      // equivalent formulation: the action is a coalgebra morphism
      AxiomCheck alt = check_equal(
          "action-coalgebra-morphism", "deltaM o act",
          "(act x act) o (id[X] x ((swap[X,M] x id[M]) o (id[X] x deltaM))) o (delta x id[M])",
          env);
      bool agree = alt.pass == rep.items.back().pass;
      rep.add(std::move(alt));
      AxiomCheck agree_item{"coalgebra-formulations-agree", nullptr, nullptr, agree,
                            std::nullopt};
      rep.add(std::move(agree_item));
      break;
    }
    case ModuleFlavor::module_algebra_coalgebra: {
      need_alg();
      need_coalg();
      eq("unit-linear", "act o (id[X] x etaM)", "eps x etaM");
      eq("prod-linear", "act o (id[X] x muM)",
         "muM o (act x act) o (((id[X] x swap[X,M]) o (delta x id[M])) x id[M])");
      eq("counit-colinear", "epsM o act", "eps x epsM");
      eq("coprod-colinear", "deltaM o act",
         "(act x act) o (((id[X] x swap[X,M]) o (delta x id[M])) x id[M]) o (id[X] x deltaM)");
      AxiomCheck alt = check_equal(
          "action-coalgebra-morphism", "deltaM o act",
          "(act x act) o (id[X] x ((swap[X,M] x id[M]) o (id[X] x deltaM))) o (delta x id[M])",
          env);
      bool agree = alt.pass == rep.items.back().pass;
      rep.add(std::move(alt));
      rep.add(AxiomCheck{"coalgebra-formulations-agree", nullptr, nullptr, agree,
                         std::nullopt});
      break;
    }
    case ModuleFlavor::comodule_algebra:
      need_alg();
      eq("unit-colinear", "coact o etaM", "eta x etaM");
      eq("prod-colinear", "(id[X] x muM) o (mu x id[M,M]) o "
         "(id[X] x ((swap[M,X] x id[M]) o (id[M] x coact))) o (coact x id[M])",
         "coact o muM");
      break;
    case ModuleFlavor::comodule_coalgebra:
      need_coalg();
      eq("counit-colinear", "(id[X] x epsM) o coact", "eta x epsM");
      eq("coprod-colinear", "(id[X] x deltaM) o coact",
         "(mu x id[M,M]) o (id[X] x ((swap[M,X] x id[M]) o (id[M] x coact))) o "
         "(coact x id[M]) o deltaM");
      break;
  }
  return rep;
}

}  // namespace hopflab

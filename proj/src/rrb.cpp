#include "hopflab/rrb.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {


namespace {

// objects H and B with suffixed Hopf generators, plus T and act
Environment rrb_env(const RelRotaBaxterData& r) {
  Environment env;
  env.field = r.field();
  bind_hopf(env, r.H, "H", "H");
  bind_hopf(env, r.B, "B", "B");
  env.gen("T", r.T, {"H"}, {"B"});
  env.gen("act", r.action, {"B", "H"}, {"H"});
  return env;
}

}  // namespace

CheckReport check_rrb(const RelRotaBaxterData& r) {
  CheckReport rep;
  rep.subject = "rrb:" + r.name;
  rep.merge(check_hopf(r.H), "h-");
  rep.merge(check_hopf(r.B), "b-");

  ModuleData phi{ModuleFlavor::module_algebra_coalgebra, r.H.object, r.action,
                 r.H.algebra(), r.H.coalgebra()};
  rep.merge(check_module_structure(phi, r.B), "action-");

  Environment env = rrb_env(r);
  rep.add(check_equal("operator-coalgebra-coprod", "deltaB o T", "(T x T) o deltaH", env));
  rep.add(check_equal("operator-coalgebra-counit", "epsB o T", "epsH", env));
  rep.add(check_equal(
      "rota-baxter-identity", "muB o (T x T)",
      "T o muH o (id[H] x (act o (T x id[H]))) o (deltaH x id[H])", env));
  // units are preserved as a consequence of the identity above
  rep.add(check_equal("unit-preservation", "T o etaH", "etaB", env));

  rep.flags["star"] = r.star();
  rep.flags["coc"] = r.coc();
  return rep;
}

RelRotaBaxterData goncharov_operator(const HopfAlgebraData& h, const std::string& name) {
  if (!is_cocommutative(h))
    throw PreconditionError("antipode operator needs a cocommutative Hopf algebra");
  ModuleData ad = adjoint_action(h);
  return RelRotaBaxterData{name.empty() ? "antipode_" + h.name : name, h, h, h.antipode,
                           ad.action};
}

RelRotaBaxterData trivial_rrb(const FieldSpec& f) {
  HopfAlgebraData k = trivial_hopf(f);
  Morphism one = Morphism::identity(f, ObjectSig::unit());
  return RelRotaBaxterData{"unit", k, k, one, one};
}

RelRotaBaxterData functor_F(const HopfBraceData& hb) {
  if (!is_cocommutative(hb))
    throw PreconditionError("functor F needs a cocommutative Hopf brace");
  return RelRotaBaxterData{"F_" + hb.name, hb.first(), hb.second(),
                           Morphism::identity(hb.field(), hb.object),
                           gamma_operator(hb)};
}

Morphism transformed_product(const RelRotaBaxterData& r) {
  Environment env = rrb_env(r);
  return eval_expr(
      *parse_expr("muH o (id[H] x (act o (T x id[H]))) o (deltaH x id[H])"), env);
}

Morphism transformed_antipode(const RelRotaBaxterData& r) {
  Environment env = rrb_env(r);
  return eval_expr(*parse_expr("act o ((lamB o T) x lamH) o deltaH"), env);
}

HopfBraceData functor_G(const RelRotaBaxterData& r) {
  if (!r.star())
    throw PreconditionError("functor G needs a cocommutative domain Hopf algebra");
  return HopfBraceData{"G_" + r.name, r.H.object, r.H.unit,
                       r.H.counit,   r.H.coprod, r.H.prod,
                       r.H.antipode, transformed_product(r), transformed_antipode(r)};
}

RelRotaBaxterData tensor_rrb(const RelRotaBaxterData& a, const RelRotaBaxterData& b) {
  if (!(a.field() == b.field()))
    throw PreconditionError("tensor of operators over different fields");
  HopfAlgebraData H = tensor_hopf(a.H, b.H);
  HopfAlgebraData B = tensor_hopf(a.B, b.B);

  Environment env;
  env.field = a.field();
  env.obj("H", a.H.dim()).obj("A", b.H.dim()).obj("B", a.B.dim()).obj("D", b.B.dim());
  env.gen("T", a.T, {"H"}, {"B"});
  env.gen("L", b.T, {"A"}, {"D"});
  env.gen("actH", a.action, {"B", "H"}, {"H"});
  env.gen("actA", b.action, {"D", "A"}, {"A"});
  Morphism T = eval_expr(*parse_expr("T x L"), env).with_signature(H.object, B.object);
  Morphism act =
      eval_expr(*parse_expr("(actH x actA) o (id[B] x swap[D,H] x id[A])"), env)
          .with_signature(B.object.tensor(H.object), H.object);
  return RelRotaBaxterData{a.name + "_" + b.name, H, B, T, act};
}

CheckReport check_rrb_morphism(const RrbMorphism& m, const RelRotaBaxterData& src,
                               const RelRotaBaxterData& dst) {
  CheckReport rep;
  rep.subject = "rrb-morphism:" + src.name + "->" + dst.name;
  rep.merge(check_hopf_morphism(m.f, src.H, dst.H), "f-");
  rep.merge(check_hopf_morphism(m.h, src.B, dst.B), "h-");

  Environment env;
  env.field = src.field();
  env.obj("H", src.H.dim()).obj("B", src.B.dim());
  env.obj("A", dst.H.dim()).obj("D", dst.B.dim());
  env.gen("T", src.T, {"H"}, {"B"});
  env.gen("L", dst.T, {"A"}, {"D"});
  env.gen("actH", src.action, {"B", "H"}, {"H"});
  env.gen("actA", dst.action, {"D", "A"}, {"A"});
  env.gen("f", m.f, {"H"}, {"A"});
  env.gen("h", m.h, {"B"}, {"D"});
  rep.add(check_equal("intertwines-operators", "L o f", "h o T", env));
  rep.add(check_equal("intertwines-actions", "f o actH", "actA o (h x f)", env));
  return rep;
}

CheckReport check_hopf_brace_morphism(const Morphism& x, const HopfBraceData& src,
                                      const HopfBraceData& dst) {
  CheckReport rep;
  rep.subject = "brace-morphism:" + src.name + "->" + dst.name;
  rep.merge(check_hopf_morphism(x, src.first(), dst.first()), "h1-");
  rep.merge(check_hopf_morphism(x, src.second(), dst.second()), "h2-");
  return rep;
}

RrbMorphism theta(const Morphism& y, const HopfBraceData& src,
                  const RelRotaBaxterData& dst) {
  auto pre = check_hopf_brace_morphism(y, src, functor_G(dst));
  pre.require_pass("theta: input is not a Hopf brace morphism into G(target)");
  RrbMorphism out{y.with_signature(src.object, dst.H.object),
                  compose(dst.T, y.with_signature(src.object, dst.H.object))};
  auto post = check_rrb_morphism(out, functor_F(src), dst);
  post.require_pass("theta: image fails the operator-morphism conditions");
  return out;
}

Morphism theta_inverse(const RrbMorphism& m, const HopfBraceData& src,
                       const RelRotaBaxterData& dst) {
  auto pre = check_rrb_morphism(m, functor_F(src), dst);
  pre.require_pass("theta_inverse: input is not an operator morphism out of F(source)");
  Morphism out = m.f;
  auto post = check_hopf_brace_morphism(out, src, functor_G(dst));
  post.require_pass("theta_inverse: image fails the brace-morphism conditions");
  return out;
}

}  // namespace hopflab

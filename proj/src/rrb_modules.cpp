#include "hopflab/rrb_modules.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

// objects H, B, M, N with the operator's structure maps and the module's four
// morphisms bound under fixed names
Environment module_env(const RrbModuleData& m, const RelRotaBaxterData& r) {
  Environment env;
  env.field = r.field();
  bind_hopf(env, r.H, "H", "H");
  bind_hopf(env, r.B, "B", "B");
  env.gen("T", r.T, {"H"}, {"B"});
  env.gen("phiH", r.action, {"B", "H"}, {"H"});
  env.obj("M", m.M.dim()).obj("N", m.N.dim());
  env.gen("actH", m.actH, {"H", "M"}, {"M"});
  env.gen("actB", m.actB, {"B", "M"}, {"M"});
  env.gen("actN", m.actN, {"B", "N"}, {"N"});
  env.gen("gam", m.conn, {"M"}, {"N"});
  return env;
}

Environment brace_module_env(const HbrModuleData& m, const HopfBraceData& hb) {
  Environment env;
  env.field = hb.field();
  env.obj("H", hb.dim()).obj("M", m.M.dim());
  env.gen("eta", hb.unit, {}, {"H"});
  env.gen("eps", hb.counit, {"H"}, {});
  env.gen("delta", hb.coprod, {"H"}, {"H", "H"});
  env.gen("mu1", hb.prod1, {"H", "H"}, {"H"});
  env.gen("lam1", hb.antipode1, {"H"}, {"H"});
  env.gen("mu2", hb.prod2, {"H", "H"}, {"H"});
  env.gen("lam2", hb.antipode2, {"H"}, {"H"});
  env.gen("act1", m.act1, {"H", "M"}, {"M"});
  env.gen("act2", m.act2, {"H", "M"}, {"M"});
  return env;
}

}  // namespace

RrbModuleData regular_module(const RelRotaBaxterData& r) {
  return RrbModuleData{r.H.object, r.B.object, r.H.prod, r.action, r.B.prod, r.T};
}

RrbModuleData trivial_module(const RelRotaBaxterData& r) {
  const ObjectSig K = ObjectSig::unit();
  Morphism idk = Morphism::identity(r.field(), K);
  return RrbModuleData{K, K,
                       r.H.counit.with_signature(r.H.object, K),
                       r.B.counit.with_signature(r.B.object, K),
                       r.B.counit.with_signature(r.B.object, K), idk};
}

CheckReport check_rrb_module(const RrbModuleData& m, const RelRotaBaxterData& r) {
  Environment env = module_env(m, r);
  CheckReport rep;
  rep.subject = "rrb-module over " + r.name;
  auto eq = [&](const char* name, const char* l, const char* rr) {
    rep.add(check_equal(name, l, rr, env));
  };
  eq("actH-unit", "actH o (etaH x id[M])", "id[M]");
  eq("actH-mult", "actH o (id[H] x actH)", "actH o (muH x id[M])");
  eq("actB-unit", "actB o (etaB x id[M])", "id[M]");
  eq("actB-mult", "actB o (id[B] x actB)", "actB o (muB x id[M])");
  eq("actN-unit", "actN o (etaB x id[N])", "id[N]");
  eq("actN-mult", "actN o (id[B] x actN)", "actN o (muB x id[N])");
  eq("action-compatibility", "actB o (id[B] x actH)",
     "actH o (phiH x actB) o (((id[B] x swap[B,H]) o (deltaB x id[H])) x id[M])");
  eq("connector-compatibility", "actN o (T x gam)",
     "gam o actH o (id[H] x (actB o (T x id[M]))) o (deltaH x id[M])");
  return rep;
}

HbrModuleData regular_brace_module(const HopfBraceData& hb) {
  return HbrModuleData{hb.object, hb.prod1, hb.prod2};
}

HbrModuleData trivial_brace_module(const HopfBraceData& hb) {
  const ObjectSig K = ObjectSig::unit();
  return HbrModuleData{K, hb.counit.with_signature(hb.object, K),
                       hb.counit.with_signature(hb.object, K)};
}

Morphism brace_module_gamma(const HbrModuleData& m, const HopfBraceData& hb) {
  Environment env = brace_module_env(m, hb);
  return eval_expr(*parse_expr("act1 o (lam1 x act2) o (delta x id[M])"), env);
}

CheckReport check_hbr_module(const HbrModuleData& m, const HopfBraceData& hb) {
  Environment env = brace_module_env(m, hb);
  env.gen_raw("Gamma", gamma_operator(hb).with_signature(env.sig_of({"H", "H"}),
                                                         env.sig_of({"H"})));
  env.gen_raw("GammaM", brace_module_gamma(m, hb).with_signature(
                            env.sig_of({"H", "M"}), env.sig_of({"M"})));
  CheckReport rep;
  rep.subject = "brace-module over " + hb.name;
  auto eq = [&](const char* name, const char* l, const char* r) {
    rep.add(check_equal(name, l, r, env));
  };
  eq("act1-unit", "act1 o (eta x id[M])", "id[M]");
  eq("act1-mult", "act1 o (id[H] x act1)", "act1 o (mu1 x id[M])");
  eq("act2-unit", "act2 o (eta x id[M])", "id[M]");
  eq("act2-mult", "act2 o (id[H] x act2)", "act2 o (mu2 x id[M])");
  eq("action-compatibility", "act2 o (id[H] x act1)",
     "act1 o (mu2 x GammaM) o (((id[H] x swap[H,H]) o (delta x id[H])) x id[M])");
  // consequences of the compatibility law
  eq("second-action-reconstruction", "act2",
     "act1 o (id[H] x GammaM) o (delta x id[M])");
  eq("remnant-action-compatibility", "GammaM o (id[H] x act1)",
     "act1 o (Gamma x GammaM) o (((id[H] x swap[H,H]) o (delta x id[H])) x id[M])");
  eq("remnant-action-unit", "GammaM o (eta x id[M])", "id[M]");
  eq("remnant-action-mult", "GammaM o (id[H] x GammaM)", "GammaM o (mu2 x id[M])");
  return rep;
}

RrbModuleData functor_W(const HbrModuleData& m, const HopfBraceData& hb) {
  if (!is_cocommutative(hb))
    throw PreconditionError("functor W needs a cocommutative Hopf brace");
  check_hbr_module(m, hb).require_pass("functor W input");
  return RrbModuleData{m.M, m.M, m.act1, brace_module_gamma(m, hb), m.act2,
                       Morphism::identity(hb.field(), m.M)};
}

HbrModuleData functor_U(const RrbModuleData& m, const RelRotaBaxterData& r) {
  if (!r.star())
    throw PreconditionError("functor U needs a cocommutative domain Hopf algebra");
  Environment env = module_env(m, r);
  Morphism act2 = eval_expr(
      *parse_expr("actH o (id[H] x (actB o (T x id[M]))) o (deltaH x id[M])"), env);
  return HbrModuleData{m.M, m.actH, act2.with_signature(m.actH.dom(), m.actH.cod())};
}

RrbModuleData functor_V(const HbrModuleData& m, const RelRotaBaxterData& r) {
  if (!r.star())
    throw PreconditionError("functor V needs a cocommutative domain Hopf algebra");
  Morphism tinv = morphism_inverse(r.T);  // throws SingularMatrixError when singular
  HopfBraceData hb = functor_G(r);
  Morphism gm = brace_module_gamma(m, hb);
  Environment env;
  env.field = r.field();
  env.obj("H", r.H.dim()).obj("B", r.B.dim()).obj("M", m.M.dim());
  env.gen("Tinv", tinv, {"B"}, {"H"});
  env.gen("GammaM", gm, {"H", "M"}, {"M"});
  env.gen("act2", m.act2, {"H", "M"}, {"M"});
  Morphism actB = eval_expr(*parse_expr("GammaM o (Tinv x id[M])"), env);
  Morphism actN = eval_expr(*parse_expr("act2 o (Tinv x id[M])"), env);
  return RrbModuleData{m.M, m.M, m.act1, actB, actN,
                       Morphism::identity(r.field(), m.M)};
}

RrbModuleData restrict_module(const RrbModuleData& m, const RrbMorphism& along,
                              const RelRotaBaxterData& src, const RelRotaBaxterData& dst) {
  check_rrb_morphism(along, src, dst).require_pass("restrict_module along");
  Morphism idm = Morphism::identity(src.field(), m.M);
  Morphism idn = Morphism::identity(src.field(), m.N);
  return RrbModuleData{
      m.M, m.N,
      compose(m.actH, tensor_product(along.f.with_signature(
                                         ObjectSig::single("H", src.H.dim()),
                                         ObjectSig::single("A", dst.H.dim())),
                                     idm))
          .with_signature(m.actH.dom(), m.actH.cod()),
      compose(m.actB, tensor_product(along.h.with_signature(
                                         ObjectSig::single("B", src.B.dim()),
                                         ObjectSig::single("D", dst.B.dim())),
                                     idm))
          .with_signature(m.actB.dom(), m.actB.cod()),
      compose(m.actN, tensor_product(along.h.with_signature(
                                         ObjectSig::single("B", src.B.dim()),
                                         ObjectSig::single("D", dst.B.dim())),
                                     idn))
          .with_signature(m.actN.dom(), m.actN.cod()),
      m.conn};
}

CheckReport check_rrb_module_morphism(const RrbModuleMorphism& mor,
                                      const RrbModuleData& src, const RrbModuleData& dst,
                                      const RelRotaBaxterData& over) {
  Environment env;
  env.field = over.field();
  env.obj("H", over.H.dim()).obj("B", over.B.dim());
  env.obj("M", src.M.dim()).obj("N", src.N.dim());
  env.obj("P", dst.M.dim()).obj("Q", dst.N.dim());
  env.gen("actHs", src.actH, {"H", "M"}, {"M"});
  env.gen("actBs", src.actB, {"B", "M"}, {"M"});
  env.gen("actNs", src.actN, {"B", "N"}, {"N"});
  env.gen("gams", src.conn, {"M"}, {"N"});
  env.gen("actHd", dst.actH, {"H", "P"}, {"P"});
  env.gen("actBd", dst.actB, {"B", "P"}, {"P"});
  env.gen("actNd", dst.actN, {"B", "Q"}, {"Q"});
  env.gen("gamd", dst.conn, {"P"}, {"Q"});
  env.gen("r", mor.r, {"M"}, {"P"});
  env.gen("s", mor.s, {"N"}, {"Q"});

  CheckReport rep;
  rep.subject = "rrb-module-morphism";
  rep.add(check_equal("r-H-linear", "r o actHs", "actHd o (id[H] x r)", env));
  rep.add(check_equal("r-B-linear", "r o actBs", "actBd o (id[B] x r)", env));
  rep.add(check_equal("s-B-linear", "s o actNs", "actNd o (id[B] x s)", env));
  rep.add(check_equal("square-commutes", "s o gams", "gamd o r", env));
  return rep;
}

CheckReport check_hbr_module_morphism(const Morphism& f, const HbrModuleData& src,
                                      const HbrModuleData& dst, const HopfBraceData& hb) {
  Environment env;
  env.field = hb.field();
  env.obj("H", hb.dim()).obj("M", src.M.dim()).obj("P", dst.M.dim());
  env.gen("act1s", src.act1, {"H", "M"}, {"M"});
  env.gen("act2s", src.act2, {"H", "M"}, {"M"});
  env.gen("act1d", dst.act1, {"H", "P"}, {"P"});
  env.gen("act2d", dst.act2, {"H", "P"}, {"P"});
  env.gen("f", f, {"M"}, {"P"});
  CheckReport rep;
  rep.subject = "brace-module-morphism";
  rep.add(check_equal("first-action-linear", "f o act1s", "act1d o (id[H] x f)", env));
  rep.add(check_equal("second-action-linear", "f o act2s", "act2d o (id[H] x f)", env));
  return rep;
}

RrbModuleMorphism lambda_forward(const Morphism& f, const HbrModuleData& src,
                                 const RrbModuleData& dst, const RelRotaBaxterData& r) {
  HbrModuleData udst = functor_U(dst, r);
  check_hbr_module_morphism(f, src, udst, functor_G(r))
      .require_pass("lambda_forward: input is not a brace-module morphism into U(target)");
  Morphism rr = f.with_signature(src.M, dst.M);
  RrbModuleMorphism out{rr, compose(dst.conn, rr)};
  check_rrb_module_morphism(out, functor_V(src, r), dst, r)
      .require_pass("lambda_forward: image fails the module-morphism conditions");
  return out;
}

Morphism lambda_backward(const RrbModuleMorphism& mor, const HbrModuleData& src,
                         const RrbModuleData& dst, const RelRotaBaxterData& r) {
  check_rrb_module_morphism(mor, functor_V(src, r), dst, r)
      .require_pass("lambda_backward: input is not a module morphism out of V(source)");
  Morphism out = mor.r;
  check_hbr_module_morphism(out, src, functor_U(dst, r), functor_G(r))
      .require_pass("lambda_backward: image fails the brace-module-morphism conditions");
  return out;
}

RrbModuleData tensor_modules(const RrbModuleData& a, const RrbModuleData& b,
                             const RelRotaBaxterData& r) {
  if (!r.coc())
    throw PreconditionError(
        "tensor of operator modules needs both Hopf algebras cocommutative");
  Environment env;
  env.field = r.field();
  bind_hopf(env, r.H, "H", "H");
  bind_hopf(env, r.B, "B", "B");
  env.obj("M", a.M.dim()).obj("N", a.N.dim()).obj("P", b.M.dim()).obj("Q", b.N.dim());
  env.gen("actHa", a.actH, {"H", "M"}, {"M"});
  env.gen("actBa", a.actB, {"B", "M"}, {"M"});
  env.gen("actNa", a.actN, {"B", "N"}, {"N"});
  env.gen("actHb", b.actH, {"H", "P"}, {"P"});
  env.gen("actBb", b.actB, {"B", "P"}, {"P"});
  env.gen("actNb", b.actN, {"B", "Q"}, {"Q"});
  auto ev = [&](const char* s) { return eval_expr(*parse_expr(s), env); };

  ObjectSig M = a.M.tensor(b.M), N = a.N.tensor(b.N);
  ObjectSig HM = ObjectSig::single("H", r.H.dim()).tensor(M);
  ObjectSig BM = ObjectSig::single("B", r.B.dim()).tensor(M);
  ObjectSig BN = ObjectSig::single("B", r.B.dim()).tensor(N);
  return RrbModuleData{
      M, N,
      ev("(actHa x actHb) o (((id[H] x swap[H,M]) o (deltaH x id[M])) x id[P])")
          .with_signature(HM, M),
      ev("(actBa x actBb) o (((id[B] x swap[B,M]) o (deltaB x id[M])) x id[P])")
          .with_signature(BM, M),
      ev("(actNa x actNb) o (((id[B] x swap[B,N]) o (deltaB x id[N])) x id[Q])")
          .with_signature(BN, N),
      tensor_product(a.conn, b.conn).with_signature(M, N)};
}

CheckReport modiso_equivalence_check(const RrbModuleData& m, const RelRotaBaxterData& r) {
  if (!r.star())
    throw PreconditionError("module equivalence check needs a cocommutative domain");
  Morphism conn_inv = [&] {
    try {
      return morphism_inverse(m.conn);
    } catch (const SingularMatrixError& e) {
      throw PreconditionError(
          std::string("module is outside the invertible-connector subcategory: ") +
          e.what());
    }
  }();
  (void)morphism_inverse(r.T);

  CheckReport rep;
  rep.subject = "module-equivalence over " + r.name;
  HbrModuleData u = functor_U(m, r);
  RrbModuleData vu = functor_V(u, r);
  RrbModuleMorphism iso{Morphism::identity(r.field(), m.M), conn_inv};
  rep.merge(check_rrb_module_morphism(iso, vu, m, r), "iso-");

  // the connector inverse really is a two-sided inverse
  rep.add(compare_morphisms("conn-left-inverse", compose(conn_inv, m.conn),
                            Morphism::identity(r.field(), m.M)));
  rep.add(compare_morphisms("conn-right-inverse", compose(m.conn, conn_inv),
                            Morphism::identity(r.field(), m.N)));

  // U o V is the identity on brace modules
  HbrModuleData back = functor_U(vu, r);
  rep.add(compare_morphisms("roundtrip-first-action", back.act1, u.act1));
  rep.add(compare_morphisms("roundtrip-second-action", back.act2, u.act2));
  return rep;
}

}  // namespace hopflab

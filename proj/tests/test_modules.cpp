#include <doctest.h>

#include "hopflab/errors.hpp"
#include "hopflab/rrb_modules.hpp"

using namespace hopflab;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::gf(5);
const FieldSpec F7 = FieldSpec::gf(7);

RelRotaBaxterData gon_s3(const FieldSpec& f) {
  return goncharov_operator(group_algebra(GroupTable::builtin("S3"), f, "H"));
}
}  // namespace

TEST_CASE("regular and trivial modules pass their suite") {
  RelRotaBaxterData r = gon_s3(F7);
  CHECK(check_rrb_module(regular_module(r), r).pass());
  CHECK(check_rrb_module(trivial_module(r), r).pass());

  // breaking the connector breaks exactly the connector law
  RrbModuleData broken = regular_module(r);
  broken.conn = compose(r.B.unit, r.H.counit).with_signature(broken.conn.dom(),
                                                             broken.conn.cod());
  auto rep = check_rrb_module(broken, r);
  CHECK(!rep.pass());
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->name == "connector-compatibility");
  CHECK(rep.first_failure()->witness.has_value());
}

TEST_CASE("brace modules") {
  auto hb = linearize_skew_brace(opposite_brace(GroupTable::builtin("S3")), QQ);
  CHECK(check_hbr_module(regular_brace_module(hb), hb).pass());
  CHECK(check_hbr_module(trivial_brace_module(hb), hb).pass());

  // using the first action twice breaks the compatibility law
  HbrModuleData bad = regular_brace_module(hb);
  bad.act2 = bad.act1;
  auto rep = check_hbr_module(bad, hb);
  CHECK(!rep.pass());
  bool compat_failed = false;
  for (const auto& item : rep.items)
    if (item.name == "action-compatibility" && !item.pass) compat_failed = true;
  CHECK(compat_failed);
}

TEST_CASE("functor W lands in modules over F") {
  auto hb = linearize_skew_brace(opposite_brace(GroupTable::builtin("S3")), F7);
  HbrModuleData reg = regular_brace_module(hb);
  RrbModuleData w = functor_W(reg, hb);
  CHECK(check_rrb_module(w, functor_F(hb)).pass());

  // the middle action is conjugation by the first product
  auto g = GroupTable::builtin("S3");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int expect = g.mul(g.mul(g.inv(a), b), a);
      CHECK(w.actB.mat().at(std::size_t(expect), std::size_t(a * 6 + b)).is_one());
    }

  HbrModuleData triv = trivial_brace_module(hb);
  RrbModuleData wt = functor_W(triv, hb);
  CHECK(wt.M.dim() == 1);
  CHECK(check_rrb_module(wt, functor_F(hb)).pass());

  // W sends (identity) brace-module morphisms to module morphisms
  RrbModuleMorphism idm{Morphism::identity(F7, w.M), Morphism::identity(F7, w.N)};
  CHECK(check_rrb_module_morphism(idm, w, w, functor_F(hb)).pass());
}

TEST_CASE("functor U lands in brace modules over G") {
  RelRotaBaxterData r = gon_s3(QQ);
  RrbModuleData reg = regular_module(r);
  HbrModuleData u = functor_U(reg, r);
  CHECK(check_hbr_module(u, functor_G(r)).pass());

  // the second action is the opposite multiplication g (x) m |-> m g
  auto g = GroupTable::builtin("S3");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(u.act2.mat().at(std::size_t(g.mul(b, a)), std::size_t(a * 6 + b)).is_one());

  HbrModuleData ut = functor_U(trivial_module(r), r);
  CHECK(ut.M.dim() == 1);
  CHECK(check_hbr_module(ut, functor_G(r)).pass());

  // transformed remnant action collapses to actB o (T (x) M)
  Morphism gm = brace_module_gamma(u, functor_G(r));
  Morphism expect = compose(reg.actB, tensor_product(r.T, Morphism::identity(QQ, reg.M)))
                        .with_signature(gm.dom(), gm.cod());
  CHECK(gm.mat() == expect.mat());
}

TEST_CASE("functor V needs an invertible operator") {
  RelRotaBaxterData r = gon_s3(F7);
  HbrModuleData u = functor_U(regular_module(r), r);
  RrbModuleData v = functor_V(u, r);
  CHECK(check_rrb_module(v, r).pass());

  HbrModuleData ut = functor_U(trivial_module(r), r);
  RrbModuleData vt = functor_V(ut, r);
  CHECK(vt.M.dim() == 1);
  CHECK(vt.conn.mat() == Matrix::identity(F7, 1));

  // an operator with T = eta o eps is valid but not invertible
  auto s3 = group_algebra(GroupTable::builtin("S3"), F7, "H");
  RelRotaBaxterData flat{"flat", s3, s3,
                         compose(s3.unit, s3.counit),
                         tensor_product(s3.counit, Morphism::identity(F7, s3.object))
                             .with_signature(s3.object.tensor(s3.object), s3.object)};
  CHECK(check_rrb(flat).pass());
  CHECK_THROWS_AS(functor_V(functor_U(regular_module(flat), flat), flat),
                  SingularMatrixError);
}

TEST_CASE("restriction along operator morphisms") {
  RelRotaBaxterData r = gon_s3(QQ);
  RrbModuleData reg = regular_module(r);
  RrbMorphism idm{Morphism::identity(QQ, r.H.object), Morphism::identity(QQ, r.B.object)};
  RrbModuleData same = restrict_module(reg, idm, r, r);
  CHECK(same.actH.mat() == reg.actH.mat());
  CHECK(same.actB.mat() == reg.actB.mat());
  CHECK(same.actN.mat() == reg.actN.mat());

  // restrict along the adjunction-counit morphism F(G(r)) -> r
  HopfBraceData gb = functor_G(r);
  RrbMorphism counit = theta(Morphism::identity(QQ, gb.object), gb, r);
  RelRotaBaxterData fg = functor_F(gb);
  RrbModuleData pulled = restrict_module(reg, counit, fg, r);
  CHECK(check_rrb_module(pulled, fg).pass());

  // a pair that is not an operator morphism is rejected
  Matrix junk(QQ, 6, 6);
  junk.set_one(0, 0);
  RrbMorphism bad{Morphism::identity(QQ, r.H.object),
                  Morphism(r.B.object, r.B.object, std::move(junk))};
  CHECK_THROWS_AS(restrict_module(reg, bad, r, r), PreconditionError);
}

TEST_CASE("adjunction bijection between module categories") {
  RelRotaBaxterData r = gon_s3(F7);
  RrbModuleData reg = regular_module(r);
  HbrModuleData u = functor_U(reg, r);

  Morphism f = Morphism::identity(F7, u.M);
  RrbModuleMorphism fwd = lambda_forward(f, u, reg, r);
  CHECK(fwd.r.mat() == Matrix::identity(F7, 6));
  CHECK(fwd.s.mat() == reg.conn.mat());

  Morphism back = lambda_backward(fwd, u, reg, r);
  CHECK(back.mat() == f.mat());

  // a map that is not linear for the first action is rejected
  Matrix junk(F7, 6, 6);
  junk.set_one(0, 0);
  CHECK_THROWS_AS(lambda_forward(Morphism(u.M, reg.M, std::move(junk)), u, reg, r),
                  PreconditionError);
}

TEST_CASE("lambda is natural on fixture morphisms") {
  RelRotaBaxterData r = gon_s3(F7);
  RrbModuleData reg = regular_module(r);
  RrbModuleData triv = trivial_module(r);
  HbrModuleData u = functor_U(reg, r);

  // postcompose with the module morphism (eps, eps) : reg -> triv
  RrbModuleMorphism to_triv{r.H.counit.with_signature(reg.M, triv.M),
                            r.B.counit.with_signature(reg.N, triv.N)};
  CHECK(check_rrb_module_morphism(to_triv, reg, triv, r).pass());

  Morphism f = Morphism::identity(F7, u.M);
  RrbModuleMorphism lhs = lambda_forward(f, u, reg, r);
  // naturality in the target slot: postcomposing commutes with the bijection
  Morphism fu = compose(to_triv.r.with_signature(u.M, triv.M), f);
  RrbModuleMorphism rhs = lambda_forward(fu, u, triv, r);
  CHECK(rhs.r.mat() == compose(to_triv.r, lhs.r).mat());
  CHECK(rhs.s.mat() == compose(to_triv.s, lhs.s).mat());
}

TEST_CASE("tensor product of operator modules") {
  RelRotaBaxterData r = gon_s3(F5);
  RrbModuleData reg = regular_module(r);

  // tensoring with the trivial module changes nothing
  RrbModuleData unit = tensor_modules(reg, trivial_module(r), r);
  CHECK(unit.actH.mat() == reg.actH.mat());
  CHECK(unit.actB.mat() == reg.actB.mat());
  CHECK(unit.actN.mat() == reg.actN.mat());
  CHECK(unit.conn.mat() == reg.conn.mat());

  RrbModuleData sq = tensor_modules(reg, reg, r);
  CHECK(sq.M.dim() == 36);
  CHECK(check_rrb_module(sq, r).pass());

  // the symmetry pair is a module isomorphism squaring to the identity
  Morphism cM = swap_morphism(F5, {"M", 6}, {"P", 6}).with_signature(sq.M, sq.M);
  Morphism cN = swap_morphism(F5, {"N", 6}, {"Q", 6}).with_signature(sq.N, sq.N);
  RrbModuleMorphism sym{cM, cN};
  CHECK(check_rrb_module_morphism(sym, sq, sq, r).pass());
  CHECK(compose(cM, cM).mat() == Matrix::identity(F5, 36));
  CHECK(compose(cN, cN).mat() == Matrix::identity(F5, 36));
}

TEST_CASE("equivalence on modules with invertible connector") {
  RelRotaBaxterData r = gon_s3(F7);
  RrbModuleData reg = regular_module(r);
  auto rep = modiso_equivalence_check(reg, r);
  CHECK(rep.pass());

  auto trep = modiso_equivalence_check(trivial_module(r), r);
  CHECK(trep.pass());

  RrbModuleData bad = regular_module(r);
  bad.conn = compose(r.B.unit, r.H.counit).with_signature(bad.conn.dom(), bad.conn.cod());
  CHECK_THROWS_AS(modiso_equivalence_check(bad, r), PreconditionError);
}

TEST_CASE("U after V is the identity on brace modules") {
  RelRotaBaxterData r = gon_s3(QQ);
  for (bool use_trivial : {false, true}) {
    HbrModuleData n = use_trivial ? functor_U(trivial_module(r), r)
                                  : functor_U(regular_module(r), r);
    HbrModuleData back = functor_U(functor_V(n, r), r);
    CHECK(back.act1.mat() == n.act1.mat());
    CHECK(back.act2.mat() == n.act2.mat());
  }
}

TEST_CASE("W satisfies both compatibility laws through its construction") {
  auto hb = linearize_skew_brace(opposite_brace(GroupTable::builtin("S3")), F7);
  HbrModuleData reg = regular_brace_module(hb);
  RrbModuleData w = functor_W(reg, hb);
  RelRotaBaxterData fr = functor_F(hb);

  // assert the two module compatibilities directly, independent of the suite
  Environment env;
  env.field = F7;
  bind_hopf(env, fr.H, "H", "H");
  bind_hopf(env, fr.B, "B", "B");
  env.obj("M", 6).obj("N", 6);
  env.gen("T", fr.T, {"H"}, {"B"});
  env.gen("phiH", fr.action, {"B", "H"}, {"H"});
  env.gen("actH", w.actH, {"H", "M"}, {"M"});
  env.gen("actB", w.actB, {"B", "M"}, {"M"});
  env.gen("actN", w.actN, {"B", "N"}, {"N"});
  env.gen("gam", w.conn, {"M"}, {"N"});
  CHECK(check_equal("direct-compat-actions", "actB o (id[B] x actH)",
                    "actH o (phiH x actB) o (((id[B] x swap[B,H]) o (deltaB x id[H])) x id[M])",
                    env)
            .pass);
  CHECK(check_equal("direct-compat-connector", "actN o (T x gam)",
                    "gam o actH o (id[H] x (actB o (T x id[M]))) o (deltaH x id[M])", env)
            .pass);
}

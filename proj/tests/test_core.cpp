#include <doctest.h>

#include <random>

#include "hopflab/dsl.hpp"
#include "hopflab/errors.hpp"
#include "hopflab/hopf.hpp"

using namespace hopflab;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::gf(7);

Matrix mat(const FieldSpec& f, std::size_t r, std::size_t c,
           std::initializer_list<const char*> entries) {
  Matrix m(f, r, c);
  std::size_t k = 0;
  for (const char* e : entries) {
    m.set(k / c, k % c, Scalar::parse(f, e));
    ++k;
  }
  return m;
}
}  // namespace

TEST_CASE("scalar literals round-trip and reject non-canonical forms") {
  for (const char* s : {"0", "1", "-1", "1/2", "-3/7", "5", "123456789012345678901/2"}) {
    Scalar v = Scalar::parse(QQ, s);
    CHECK(v.str() == s);
    CHECK(Scalar::parse(QQ, v.str()) == v);
  }
  for (const char* s : {"2/4", "3/1", "-0", "1/-2", "+1", "01", "", "a", "1/0"})
    CHECK_THROWS_AS(Scalar::parse(QQ, s), Error);
  for (const char* s : {"0", "3", "6"}) CHECK(Scalar::parse(F7, s).str() == s);
  for (const char* s : {"7", "-1", "1/2", "07"}) CHECK_THROWS_AS(Scalar::parse(F7, s), Error);
}

TEST_CASE("prime field arithmetic is exact") {
  CHECK_THROWS_AS(FieldSpec::gf(6), Error);
  Scalar two = Scalar::parse(F7, "2"), four = Scalar::parse(F7, "4");
  CHECK((two * four).str() == "1");
  CHECK(two.inverse() == four);
  CHECK((Scalar::parse(F7, "3") + Scalar::parse(F7, "5")).str() == "1");
}

TEST_CASE("rational arithmetic is arbitrary precision") {
  Scalar x = Scalar::parse(QQ, "1/3");
  Scalar acc = Scalar::one(QQ);
  for (int k = 0; k < 64; ++k) acc = acc * x;
  mpq_class expect(1);
  for (int k = 0; k < 64; ++k) expect /= 3;
  CHECK(acc.rat() == expect);
}

TEST_CASE("rref on the worked examples") {
  Matrix z(QQ, 3, 2);
  auto [rz, pz] = z.rref();
  CHECK(rz == z);
  CHECK(pz.empty());

  Matrix id = Matrix::identity(QQ, 4);
  auto [ri, pi] = id.rref();
  CHECK(ri == id);
  CHECK(pi == std::vector<std::size_t>{0, 1, 2, 3});

  Matrix ones = mat(QQ, 2, 2, {"1", "1", "1", "1"});
  auto [ro, po] = ones.rref();
  CHECK(ro == mat(QQ, 2, 2, {"1", "1", "0", "0"}));
  CHECK(po == std::vector<std::size_t>{0});
}

TEST_CASE("matrix inverse") {
  CHECK(Matrix::identity(F7, 3).inverse() == Matrix::identity(F7, 3));
  CHECK(mat(F7, 1, 1, {"2"}).inverse() == mat(F7, 1, 1, {"4"}));
  Matrix sing = mat(QQ, 2, 2, {"1", "2", "2", "4"});
  CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
  try {
    sing.inverse();
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank == 1);
  }
}

TEST_CASE("split_idempotent on the worked examples") {
  auto idm = Morphism::identity(QQ, ObjectSig::single("V", 3));
  auto s = split_idempotent(idm);
  CHECK(s.rank == 3);
  CHECK(s.p.mat() == Matrix::identity(QQ, 3));
  CHECK(s.i.mat() == Matrix::identity(QQ, 3));

  ObjectSig v2 = ObjectSig::single("V", 2);
  Morphism q(v2, v2, mat(QQ, 2, 2, {"1/2", "1/2", "1/2", "1/2"}));
  auto t = split_idempotent(q);
  CHECK(t.rank == 1);
  CHECK(t.i.mat() == mat(QQ, 2, 1, {"1/2", "1/2"}));
  CHECK(t.p.mat() == mat(QQ, 1, 2, {"1", "1"}));
  CHECK(compose(t.p, t.i).mat() == Matrix::identity(QQ, 1));
  CHECK(compose(t.i, t.p).mat() == q.mat());

  Morphism notq(v2, v2, mat(QQ, 2, 2, {"0", "1", "1", "0"}));
  CHECK_THROWS_AS(split_idempotent(notq), NotIdempotentError);
}

TEST_CASE("composition and tensor conventions") {
  ObjectSig a = ObjectSig::single("A", 3), b = ObjectSig::single("B", 2);
  Morphism g(b, a, mat(QQ, 3, 2, {"1", "2", "3", "4", "5", "6"}));
  CHECK(compose(Morphism::identity(QQ, a), g) == g.with_signature(b, a));
  CHECK_THROWS_AS(compose(g, g), SignatureError);

  Morphism f7a(ObjectSig::single("V", 1), ObjectSig::single("V", 1), mat(F7, 1, 1, {"2"}));
  Morphism f7b = f7a.with_signature(f7a.dom(), f7a.cod());
  CHECK(compose(f7a, Morphism(f7a.dom(), f7a.cod(), mat(F7, 1, 1, {"4"}))).mat() ==
        mat(F7, 1, 1, {"1"}));

  // f (x) id_K leaves f untouched
  Morphism idk = Morphism::identity(QQ, ObjectSig::unit());
  CHECK(tensor_product(g, idk) == g);
  CHECK(tensor_product(Morphism::identity(QQ, b), Morphism::identity(QQ, a)).mat() ==
        Matrix::identity(QQ, 6));
}

TEST_CASE("swap is the symmetry") {
  Morphism s1 = swap_morphism(QQ, {"K1", 1}, {"V", 5});
  CHECK(s1.mat() == Matrix::identity(QQ, 5));
  Morphism s22 = swap_morphism(QQ, {"A", 2}, {"B", 2});
  Matrix expect(QQ, 4, 4);
  expect.set_one(0, 0);
  expect.set_one(2, 1);
  expect.set_one(1, 2);
  expect.set_one(3, 3);
  CHECK(s22.mat() == expect);
  Morphism sxy = swap_morphism(QQ, {"A", 2}, {"B", 3});
  Morphism syx = swap_morphism(QQ, {"B", 3}, {"A", 2});
  CHECK(compose(sxy, syx).mat() == Matrix::identity(QQ, 6));
}

TEST_CASE("interchange and swap naturality on random matrices") {
  std::mt19937 rng(12345);
  auto rnd = [&](std::size_t r, std::size_t c) {
    Matrix m(F7, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.set(i, j, Scalar::residue(rng() % 7, F7));
    return m;
  };
  for (int it = 0; it < 10; ++it) {
    std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
    std::size_t d = 1 + rng() % 3, e = 1 + rng() % 3, f = 1 + rng() % 3;
    Matrix F = rnd(a, b), G = rnd(b, c), Fp = rnd(d, e), Gp = rnd(e, f);
    CHECK(F.mul(G).kron(Fp.mul(Gp)) == F.kron(Fp).mul(G.kron(Gp)));

    Morphism mf(ObjectSig::single("X", b), ObjectSig::single("Xc", a), F);
    Morphism mg(ObjectSig::single("Y", e), ObjectSig::single("Yc", d), Fp);
    Morphism lhs = compose(swap_morphism(F7, {"Xc", a}, {"Yc", d}), tensor_product(mf, mg));
    Morphism rhs = compose(tensor_product(mg, mf), swap_morphism(F7, {"X", b}, {"Y", e}));
    CHECK(lhs.mat() == rhs.mat());
  }
}

TEST_CASE("expression parsing") {
  ExprPtr e = parse_expr("mu o (id[H] x lam)");
  REQUIRE(e->tag == Expr::Tag::compose);
  CHECK(e->left->tag == Expr::Tag::generator);
  CHECK(e->left->name == "mu");
  REQUIRE(e->right->tag == Expr::Tag::tensor);
  CHECK(e->right->left->tag == Expr::Tag::identity);
  CHECK(e->right->left->objects == std::vector<std::string>{"H"});
  CHECK(e->right->right->name == "lam");

  ExprPtr t = parse_expr("f x g x h");
  REQUIRE(t->tag == Expr::Tag::tensor);
  CHECK(t->left->tag == Expr::Tag::tensor);  // left-nested
  CHECK(t->right->name == "h");

  try {
    parse_expr("mu o");
    FAIL("expected a parse error");
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 5);
  }
  CHECK_THROWS_AS(parse_expr("(mu"), ParseError);
  CHECK_THROWS_AS(parse_expr("swap[H]"), ParseError);
}

TEST_CASE("print then parse is the identity on expression trees") {
  std::mt19937 rng(99);
  std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    int pick = depth <= 0 ? int(rng() % 3) : int(rng() % 5);
    switch (pick) {
      case 0: return Expr::gen("g" + std::to_string(rng() % 4));
      case 1: return Expr::id(rng() % 2 ? std::vector<std::string>{"H"}
                                        : std::vector<std::string>{"H", "B"});
      case 2: return Expr::swp("H", "B");
      case 3: return Expr::comp(gen(depth - 1), gen(depth - 1));
      default: return Expr::tens(gen(depth - 1), gen(depth - 1));
    }
  };
  for (int it = 0; it < 200; ++it) {
    ExprPtr e = gen(4);
    ExprPtr back = parse_expr(print_expr(*e));
    CHECK(expr_equal(*e, *back));
  }
}

TEST_CASE("typechecking morphism expressions") {
  auto h = group_algebra(GroupTable::builtin("C3"), QQ, "H");
  Environment env;
  env.field = QQ;
  env.obj("H", 3);
  env.gen("mu", h.prod, {"H", "H"}, {"H"});
  env.gen("eta", h.unit, {}, {"H"});
  env.gen("eps", h.counit, {"H"}, {});
  env.gen("delta", h.coprod, {"H"}, {"H", "H"});

  auto sig = typecheck_expr(*parse_expr("mu o (mu x id[H])"), env);
  CHECK(sig.first.dims() == std::vector<std::size_t>{3, 3, 3});
  CHECK(sig.second.dims() == std::vector<std::size_t>{3});

  auto sig2 = typecheck_expr(*parse_expr("eps o eta"), env);
  CHECK(sig2.first.is_unit());
  CHECK(sig2.second.is_unit());

  CHECK_THROWS_AS(typecheck_expr(*parse_expr("mu o mu"), env), TypecheckError);
  CHECK_THROWS_AS(typecheck_expr(*parse_expr("nosuch"), env), TypecheckError);
}

TEST_CASE("evaluation matches the structure maps") {
  Environment env;
  env.field = QQ;
  env.obj("H", 2);
  CHECK(eval_expr(*parse_expr("id[H] x id[H]"), env).mat() == Matrix::identity(QQ, 4));

  auto h3 = group_algebra(GroupTable::builtin("C3"), QQ, "H");
  Environment e3;
  e3.field = QQ;
  e3.obj("H", 3);
  e3.gen("mu", h3.prod, {"H", "H"}, {"H"});
  e3.gen("eta", h3.unit, {}, {"H"});
  e3.gen("eps", h3.counit, {"H"}, {});
  e3.gen("delta", h3.coprod, {"H"}, {"H", "H"});
  e3.gen("lam", h3.antipode, {"H"}, {"H"});
  Morphism lhs = eval_expr(*parse_expr("(mu o (id[H] x lam)) o delta"), e3);
  Morphism etaeps = eval_expr(*parse_expr("eta o eps"), e3);
  CHECK(lhs.mat() == etaeps.mat());

  auto s3 = group_algebra(GroupTable::builtin("S3"), F7, "H");
  Environment e6;
  e6.field = F7;
  e6.obj("H", 6);
  e6.gen("delta", s3.coprod, {"H"}, {"H", "H"});
  CHECK(check_equal("cocommutative", "swap[H,H] o delta", "delta", e6).pass);
}

TEST_CASE("check_equal yields a witness on failure and accepts reflexivity") {
  auto s3 = group_algebra(GroupTable::builtin("S3"), QQ, "H");
  Environment env;
  env.field = QQ;
  env.obj("H", 6);
  env.gen("mu", s3.prod, {"H", "H"}, {"H"});
  AxiomCheck bad = check_equal("commutative", "mu", "mu o swap[H,H]", env);
  CHECK(!bad.pass);
  REQUIRE(bad.witness.has_value());
  // first non-commuting pair in row-major scan: row 2 is the matrix of (13);
  // (12)*(13) = (132) lands in row 5 first at column (1,2) -> 8
  CHECK(bad.witness->lhs_value != bad.witness->rhs_value);
  AxiomCheck refl = check_equal("refl", "mu o swap[H,H]", "mu o swap[H,H]", env);
  CHECK(refl.pass);
}

TEST_CASE("group tables validate and builtins are groups") {
  for (const auto& name : GroupTable::builtin_names()) {
    GroupTable g = GroupTable::builtin(name);
    CHECK(g.size() > 0);
    CHECK(g.table[g.identity][0] == 0);
  }
  CHECK(GroupTable::builtin("S3").abelian() == false);
  CHECK(GroupTable::builtin("C6").abelian() == true);
  CHECK_THROWS_AS(GroupTable::from_table({"e", "a"}, {{0, 1}, {1, 1}}), Error);
}

TEST_CASE("group algebra of C2 over QQ") {
  auto h = group_algebra(GroupTable::builtin("C2"), QQ, "H");
  CHECK(h.prod.mat() == mat(QQ, 2, 4, {"1", "0", "0", "1", "0", "1", "1", "0"}));
  CHECK(compose(h.counit, h.unit).mat() == Matrix::identity(QQ, 1));
  // eta_H (x) eta_H selects index 0 of the 4-dimensional tensor square
  Morphism ee = tensor_product(h.unit, h.unit);
  Matrix expect(QQ, 4, 1);
  expect.set_one(0, 0);
  CHECK(ee.mat() == expect);
}

TEST_CASE("check_hopf on group algebras") {
  auto s3 = check_hopf(group_algebra(GroupTable::builtin("S3"), F7, "H"));
  CHECK(s3.pass());
  CHECK(s3.flags.at("cocommutative"));
  CHECK(!s3.flags.at("commutative"));

  auto c2 = check_hopf(group_algebra(GroupTable::builtin("C2"), QQ, "H"));
  CHECK(c2.pass());
  CHECK(c2.flags.at("commutative"));
  CHECK(c2.flags.at("cocommutative"));

  auto broken = group_algebra(GroupTable::builtin("S3"), QQ, "H");
  broken.antipode = Morphism::identity(QQ, broken.object);
  auto rep = check_hopf(broken);
  CHECK(!rep.pass());
  const AxiomCheck* fail = rep.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->name.substr(0, 8) == "antipode");
  CHECK(fail->witness.has_value());
}

TEST_CASE("antipode of a cocommutative fixture is an involution") {
  auto s3 = group_algebra(GroupTable::builtin("S3"), QQ, "H");
  CHECK(compose(s3.antipode, s3.antipode).mat() == Matrix::identity(QQ, 6));
  // over GF(7) the antipode is its own inverse
  auto s37 = group_algebra(GroupTable::builtin("S3"), F7, "H");
  CHECK(morphism_inverse(s37.antipode).mat() == s37.antipode.mat());
}

TEST_CASE("antipode is an anti(co)multiplicative unit-preserving map") {
  for (const char* gname : {"C4", "S3", "D4", "Q8"}) {
    auto h = group_algebra(GroupTable::builtin(gname), F7, "H");
    Environment env;
    env.field = F7;
    env.obj("X", h.dim());
    env.gen("eta", h.unit, {}, {"X"});
    env.gen("mu", h.prod, {"X", "X"}, {"X"});
    env.gen("eps", h.counit, {"X"}, {});
    env.gen("delta", h.coprod, {"X"}, {"X", "X"});
    env.gen("lam", h.antipode, {"X"}, {"X"});
    CHECK(check_equal("antimult", "lam o mu", "mu o (lam x lam) o swap[X,X]", env).pass);
    CHECK(check_equal("anticomult", "delta o lam", "swap[X,X] o (lam x lam) o delta", env).pass);
    CHECK(check_equal("unit", "lam o eta", "eta", env).pass);
    CHECK(check_equal("counit", "eps o lam", "eps", env).pass);
  }
}

TEST_CASE("hopf morphism suite") {
  auto c2 = group_algebra(GroupTable::builtin("C2"), QQ, "X");
  auto s3 = group_algebra(GroupTable::builtin("S3"), QQ, "Y");
  // inclusion generated by a |-> (12)
  Matrix fm(QQ, 6, 2);
  fm.set_one(0, 0);
  fm.set_one(1, 1);
  Morphism f(c2.object, s3.object, std::move(fm));
  CHECK(check_hopf_morphism(f, c2, s3).pass());
  // a non-multiplicative map fails with a witness
  Matrix gm(QQ, 6, 2);
  gm.set_one(0, 0);
  gm.set_one(4, 1);  // a |-> (123), but (123)^2 != e
  auto rep = check_hopf_morphism(Morphism(c2.object, s3.object, std::move(gm)), c2, s3);
  CHECK(!rep.pass());
}

TEST_CASE("tensor hopf algebra") {
  auto c2 = group_algebra(GroupTable::builtin("C2"), QQ, "A");
  auto t = tensor_hopf(c2, c2);
  CHECK(t.dim() == 4);
  CHECK(check_hopf(t).pass());

  // tensoring with the unit bundle leaves the structure matrices unchanged
  auto u = tensor_hopf(c2, trivial_hopf(QQ));
  CHECK(u.prod.mat() == c2.prod.mat());
  CHECK(u.coprod.mat() == c2.coprod.mat());
  CHECK(u.antipode.mat() == c2.antipode.mat());

  // C2 (x) C3 is C6 after CRT reindexing k |-> (k mod 2, k mod 3)
  auto c3 = group_algebra(GroupTable::builtin("C3"), QQ, "B");
  auto c6 = group_algebra(GroupTable::builtin("C6"), QQ, "C");
  auto t23 = tensor_hopf(c2, c3);
  Matrix perm(QQ, 6, 6);
  for (int k = 0; k < 6; ++k) perm.set_one((k % 2) * 3 + (k % 3), k);
  Morphism P(c6.object, t23.object, std::move(perm));
  CHECK(compose(P, c6.prod).mat() == compose(t23.prod, tensor_product(P, P)).mat());
  CHECK(compose(t23.coprod, P).mat() == compose(tensor_product(P, P), c6.coprod).mat());
  CHECK(compose(P, c6.antipode).mat() == compose(t23.antipode, P).mat());
}

TEST_CASE("convolution") {
  auto c3 = group_algebra(GroupTable::builtin("C3"), QQ, "H");
  Morphism idh = Morphism::identity(QQ, c3.object);
  Morphism etaeps = compose(c3.unit, c3.counit);
  CHECK(convolve(idh, c3.antipode, c3.coalgebra(), c3.algebra()).mat() == etaeps.mat());
  CHECK(convolve(etaeps, c3.antipode, c3.coalgebra(), c3.algebra()).mat() ==
        c3.antipode.mat());

  auto c2 = group_algebra(GroupTable::builtin("C2"), QQ, "H");
  Morphism sq = convolve(Morphism::identity(QQ, c2.object),
                         Morphism::identity(QQ, c2.object), c2.coalgebra(), c2.algebra());
  // g |-> g^2 sends both basis elements to e
  CHECK(sq.mat() == mat(QQ, 2, 2, {"1", "1", "0", "0"}));
}

TEST_CASE("adjoint action and coaction") {
  auto s3g = GroupTable::builtin("S3");
  auto s3 = group_algebra(s3g, F7, "H");
  ModuleData ad = adjoint_action(s3);
  CHECK(ad.flavor == ModuleFlavor::module_algebra_coalgebra);
  // ad(g (x) h) = g h g^-1 on basis pairs, against the table
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      int expect = s3g.mul(s3g.mul(int(g), int(h)), s3g.inv(int(g)));
      for (std::size_t r = 0; r < 6; ++r)
        CHECK(ad.action.mat().at(r, g * 6 + h).is_zero() == (int(r) != expect));
    }
  CHECK(check_module_structure(ad, s3).pass());

  auto c6 = group_algebra(GroupTable::builtin("C6"), QQ, "H");
  ModuleData adc6 = adjoint_action(c6);
  Morphism triv = tensor_product(c6.counit, Morphism::identity(QQ, c6.object));
  CHECK(adc6.action.mat() == triv.mat());

  ModuleData coad = adjoint_coaction(s3);
  // group-likes have trivial adjoint coaction: rho(g) = e (x) g
  Morphism etaid = tensor_product(s3.unit, Morphism::identity(F7, s3.object));
  CHECK(coad.action.mat() == etaid.mat());
  CHECK(check_module_structure(coad, s3).pass());

  ModuleData cok = adjoint_coaction(trivial_hopf(QQ));
  CHECK(cok.action.mat() == Matrix::identity(QQ, 1));
}

TEST_CASE("module structure checks distinguish flavors") {
  auto s3 = group_algebra(GroupTable::builtin("S3"), QQ, "H");
  // the left regular action is a module but not a module algebra
  ModuleData reg{ModuleFlavor::module, s3.object, s3.prod, s3.algebra(), s3.coalgebra()};
  CHECK(check_module_structure(reg, s3).pass());
  ModuleData rega{ModuleFlavor::module_algebra, s3.object, s3.prod, s3.algebra(),
                  s3.coalgebra()};
  auto rep = check_module_structure(rega, s3);
  CHECK(!rep.pass());
  CHECK(rep.first_failure()->witness.has_value());

  ModuleData triv = trivial_action(s3, s3.object, s3.algebra(), s3.coalgebra());
  CHECK(check_module_structure(triv, s3).pass());
}

TEST_CASE("sweedler's four-dimensional hopf algebra is neither commutative nor cocommutative") {
  // basis 1, g, x, gx with g^2 = 1, x^2 = 0, x g = -g x
  ObjectSig obj = ObjectSig::single("H", 4);
  Matrix unit(QQ, 4, 1);
  unit.set_one(0, 0);
  Matrix prod(QQ, 4, 16);
  auto set = [&](int a, int b, int to, const char* v) {
    prod.set(to, a * 4 + b, Scalar::parse(QQ, v));
  };
  set(0, 0, 0, "1"); set(0, 1, 1, "1"); set(0, 2, 2, "1"); set(0, 3, 3, "1");
  set(1, 0, 1, "1"); set(1, 1, 0, "1"); set(1, 2, 3, "1"); set(1, 3, 2, "1");
  set(2, 0, 2, "1"); set(2, 1, 3, "-1");
  set(3, 0, 3, "1"); set(3, 1, 2, "-1");
  Matrix counit(QQ, 1, 4);
  counit.set_one(0, 0);
  counit.set_one(0, 1);
  Matrix coprod(QQ, 16, 4);
  coprod.set_one(0 * 4 + 0, 0);                 // 1 -> 1 (x) 1
  coprod.set_one(1 * 4 + 1, 1);                 // g -> g (x) g
  coprod.set_one(2 * 4 + 0, 2);                 // x -> x (x) 1 + g (x) x
  coprod.set_one(1 * 4 + 2, 2);
  coprod.set_one(3 * 4 + 1, 3);                 // gx -> gx (x) g + 1 (x) gx
  coprod.set_one(0 * 4 + 3, 3);
  Matrix anti(QQ, 4, 4);
  anti.set_one(0, 0);
  anti.set_one(1, 1);
  anti.set(3, 2, Scalar::parse(QQ, "-1"));      // x -> -gx
  anti.set_one(2, 3);                           // gx -> x
  HopfAlgebraData sw{"H4", obj,
                     Morphism(ObjectSig::unit(), obj, std::move(unit)),
                     Morphism(obj.tensor(obj), obj, std::move(prod)),
                     Morphism(obj, ObjectSig::unit(), std::move(counit)),
                     Morphism(obj, obj.tensor(obj), std::move(coprod)),
                     Morphism(obj, obj, std::move(anti))};
  auto rep = check_hopf(sw);
  CHECK(rep.pass());
  CHECK(!rep.flags.at("commutative"));
  CHECK(!rep.flags.at("cocommutative"));
}

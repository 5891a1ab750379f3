#include "hopflab/brace.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {


SkewBrace trivial_brace(const GroupTable& g) { return SkewBrace{g, g}; }

SkewBrace opposite_brace(const GroupTable& g) { return SkewBrace{g, g.opposite()}; }

CheckReport check_skew_brace(const SkewBrace& b) {
  CheckReport rep;
  rep.subject = "skewbrace";
  const std::size_t n = b.star.size();

  AxiomCheck carrier{"same-carrier", nullptr, nullptr,
                     b.circ.size() == n && b.star.elements == b.circ.elements,
                     std::nullopt};
  rep.add(carrier);
  if (b.circ.size() != n) return rep;
  AxiomCheck ident{"shared-identity", nullptr, nullptr,
                   b.star.identity == b.circ.identity, std::nullopt};
  if (!ident.pass)
    ident.witness = Witness{0, 0, b.star.elements[b.star.identity],
                            b.circ.elements[b.circ.identity]};
  rep.add(ident);

  AxiomCheck compat{"brace-compatibility", nullptr, nullptr, true, std::nullopt};
  for (std::size_t g = 0; g < n && compat.pass; ++g)
    for (std::size_t h = 0; h < n && compat.pass; ++h)
      for (std::size_t t = 0; t < n; ++t) {
        int lhs = b.circ.mul(int(g), b.star.mul(int(h), int(t)));
        int rhs = b.star.mul(b.star.mul(b.circ.mul(int(g), int(h)), b.star.inv(int(g))),
                             b.circ.mul(int(g), int(t)));
        if (lhs != rhs) {
          compat.pass = false;
          compat.witness =
              Witness{g * n * n + h * n + t, 0, b.star.elements[lhs], b.star.elements[rhs]};
          break;
        }
      }
  rep.add(compat);
  rep.flags["abelian-star"] = b.star.abelian();
  return rep;
}

HopfAlgebraData HopfBraceData::first() const {
  return HopfAlgebraData{name + "1", object, unit, prod1, counit, coprod, antipode1};
}

HopfAlgebraData HopfBraceData::second() const {
  return HopfAlgebraData{name + "2", object, unit, prod2, counit, coprod, antipode2};
}

HopfBraceData linearize_skew_brace(const SkewBrace& b, const FieldSpec& f,
                                   const std::string& name) {
  auto rep = check_skew_brace(b);
  rep.require_pass("linearize_skew_brace");
  HopfAlgebraData h1 = group_algebra(b.star, f, name);
  HopfAlgebraData h2 = group_algebra(b.circ, f, name);
  return HopfBraceData{name,   h1.object, h1.unit,     h1.counit, h1.coprod,
                       h1.prod, h1.antipode, h2.prod, h2.antipode};
}

namespace {

Environment brace_env(const HopfBraceData& hb) {
  Environment env;
  env.field = hb.field();
  env.obj("H", hb.dim());
  env.gen("eta", hb.unit, {}, {"H"});
  env.gen("eps", hb.counit, {"H"}, {});
  env.gen("delta", hb.coprod, {"H"}, {"H", "H"});
  env.gen("mu1", hb.prod1, {"H", "H"}, {"H"});
  env.gen("lam1", hb.antipode1, {"H"}, {"H"});
  env.gen("mu2", hb.prod2, {"H", "H"}, {"H"});
  env.gen("lam2", hb.antipode2, {"H"}, {"H"});
  return env;
}

constexpr const char* kGammaSrc = "mu1 o (lam1 x mu2) o (delta x id[H])";

}  // namespace

Morphism gamma_operator(const HopfBraceData& hb) {
  Environment env = brace_env(hb);
  return eval_expr(*parse_expr(kGammaSrc), env);
}

CheckReport check_hopf_brace(const HopfBraceData& hb) {
  CheckReport rep;
  rep.subject = "hopfbrace:" + hb.name;
  rep.merge(check_hopf(hb.first()), "h1-");
  rep.merge(check_hopf(hb.second()), "h2-");

  Environment env = brace_env(hb);
  env.gen_raw("Gamma", gamma_operator(hb).with_signature(env.sig_of({"H", "H"}),
                                                         env.sig_of({"H"})));
  rep.add(check_equal(
      "product-compatibility", "mu2 o (id[H] x mu1)",
      "mu1 o (mu2 x Gamma) o (((id[H] x swap[H,H]) o (delta x id[H])) x id[H])", env));
  rep.add(check_equal("second-product-reconstruction", "mu2",
                      "mu1 o (id[H] x Gamma) o (delta x id[H])", env));
  rep.flags["cocommutative"] = is_cocommutative(hb);
  return rep;
}

bool is_cocommutative(const HopfBraceData& hb) { return is_cocommutative(hb.first()); }

CheckReport check_gamma_properties(const HopfBraceData& hb) {
  Environment env = brace_env(hb);
  env.gen_raw("Gamma", gamma_operator(hb).with_signature(env.sig_of({"H", "H"}),
                                                         env.sig_of({"H"})));
  CheckReport rep;
  rep.subject = "gamma:" + hb.name;
  rep.add(check_equal(
      "coalgebra-morphism-coprod", "delta o Gamma",
      "(Gamma x Gamma) o (id[H] x ((swap[H,H] x id[H]) o (id[H] x delta))) o (delta x id[H])",
      env));
  rep.add(check_equal("coalgebra-morphism-counit", "eps o Gamma", "eps x eps", env));
  rep.add(check_equal("action-unit", "Gamma o (eta x id[H])", "id[H]", env));
  rep.add(check_equal("action-mult", "Gamma o (id[H] x Gamma)", "Gamma o (mu2 x id[H])", env));
  rep.add(check_equal("unit-linear", "Gamma o (id[H] x eta)", "eps x eta", env));
  rep.add(check_equal(
      "prod-linear", "Gamma o (id[H] x mu1)",
      "mu1 o (Gamma x Gamma) o (((id[H] x swap[H,H]) o (delta x id[H])) x id[H])", env));
  return rep;
}

YBSolutionSet qybe_solution_from_skew_brace(const SkewBrace& b) {
  auto rep = check_skew_brace(b);
  rep.require_pass("qybe_solution_from_skew_brace");
  const std::size_t n = b.star.size();
  YBSolutionSet c;
  c.n = n;
  c.sigma.assign(n, std::vector<int>(n));
  c.tau.assign(n, std::vector<int>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      int s = b.star.mul(b.star.inv(int(g)), b.circ.mul(int(g), int(h)));
      c.sigma[g][h] = s;
      c.tau[h][g] = b.circ.mul(b.circ.inv(s), b.circ.mul(int(g), int(h)));
    }

  // bijectivity of (g,h) |-> (sigma_g(h), tau_h(g))
  std::vector<char> seen(n * n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t k = std::size_t(c.sigma[g][h]) * n + std::size_t(c.tau[h][g]);
      if (seen[k])
        throw PreconditionError("solution map is not a bijection on pairs");
      seen[k] = 1;
    }

  auto braid = check_braid_relation(c);
  if (!braid.pass()) {
    const AxiomCheck* f = braid.first_failure();
    throw PreconditionError(
        "constructed map fails the braid relation at triple index " +
        std::to_string(f->witness ? f->witness->row : 0));
  }
  return c;
}

CheckReport check_braid_relation(const YBSolutionSet& c) {
  CheckReport rep;
  rep.subject = "braid:set";
  const std::size_t n = c.n;
  auto ap = [&](int g, int h) {
    return std::pair<int, int>(c.sigma[g][h], c.tau[h][g]);
  };
  AxiomCheck item{"braid-relation", nullptr, nullptr, true, std::nullopt};
  for (std::size_t a = 0; a < n && item.pass; ++a)
    for (std::size_t b = 0; b < n && item.pass; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        // left path: c12 c23 c12, right path: c23 c12 c23
        auto [x1, y1] = ap(int(a), int(b));
        auto [y2, z1] = ap(y1, int(d));
        auto [x2, y3] = ap(x1, y2);
        auto [yy1, zz1] = ap(int(b), int(d));
        auto [xx1, yy2] = ap(int(a), yy1);
        auto [yy3, zz2] = ap(yy2, zz1);
        if (!(x2 == xx1 && y3 == yy3 && z1 == zz2)) {
          item.pass = false;
          item.witness = Witness{a * n * n + b * n + d, 0,
                                 std::to_string(x2) + "," + std::to_string(y3) + "," +
                                     std::to_string(z1),
                                 std::to_string(xx1) + "," + std::to_string(yy3) + "," +
                                     std::to_string(zz2)};
          break;
        }
      }
  rep.add(item);

  std::vector<char> seen(n * n, 0);
  bool bij = true;
  for (std::size_t g = 0; g < n && bij; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t k = std::size_t(c.sigma[g][h]) * n + std::size_t(c.tau[h][g]);
      if (seen[k]) {
        bij = false;
        break;
      }
      seen[k] = 1;
    }
  rep.flags["invertible"] = bij;
  return rep;
}

CheckReport check_braid_relation(const Morphism& c) {
  CheckReport rep;
  rep.subject = "braid:linear";
  const auto dims = c.dom().dims();
  if (c.dom().dim() != c.cod().dim() || dims.size() != 2 || dims[0] != dims[1])
    throw SignatureError("braid check needs an endomorphism of a square tensor",
                         c.sig_str(), "V.V -> V.V");
  const std::size_t n = dims[0];
  Environment env;
  env.field = c.field();
  env.obj("V", n);
  env.gen("c", c, {"V", "V"}, {"V", "V"});
  rep.add(check_equal("braid-relation",
                      "(c x id[V]) o (id[V] x c) o (c x id[V])",
                      "(id[V] x c) o (c x id[V]) o (id[V] x c)", env));
  bool invertible = true;
  try {
    (void)c.mat().inverse();
  } catch (const SingularMatrixError&) {
    invertible = false;
  }
  rep.flags["invertible"] = invertible;
  return rep;
}

Morphism linearize_solution(const YBSolutionSet& c, const FieldSpec& f,
                            const std::string& object_name) {
  const std::size_t n = c.n;
  ObjectSig v = ObjectSig::single(object_name, n);
  ObjectSig vv = v.tensor(v);
  Matrix m(f, n * n, n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      m.set_one(std::size_t(c.sigma[g][h]) * n + std::size_t(c.tau[h][g]), g * n + h);
  return Morphism(vv, vv, std::move(m));
}

}  // namespace hopflab

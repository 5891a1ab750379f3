#include "hopflab/dsl.hpp"

#include <cctype>

#include "hopflab/errors.hpp"

namespace hopflab {

ExprPtr Expr::gen(std::string name) {
  auto e = std::make_shared<Expr>();
  e->tag = Tag::generator;
  e->name = std::move(name);
  return e;
}
ExprPtr Expr::id(std::vector<std::string> objects) {
  auto e = std::make_shared<Expr>();
  e->tag = Tag::identity;
  e->objects = std::move(objects);
  return e;
}
ExprPtr Expr::swp(std::string a, std::string b) {
  auto e = std::make_shared<Expr>();
  e->tag = Tag::swap;
  e->objects = {std::move(a), std::move(b)};
  return e;
}
ExprPtr Expr::comp(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->tag = Tag::compose;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}
ExprPtr Expr::tens(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->tag = Tag::tensor;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

namespace {

struct Token {
  enum class Kind { ident, kw_o, kw_x, kw_id, kw_swap, lparen, rparen, lbracket, rbracket, comma, end };
  Kind kind;
  std::string text;
  std::size_t offset;  // 1-based byte offset of the first character
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto n = src.size();
  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t off = i + 1;
    if (c == '(') { out.push_back({Token::Kind::lparen, "(", off}); ++i; continue; }
    if (c == ')') { out.push_back({Token::Kind::rparen, ")", off}); ++i; continue; }
    if (c == '[') { out.push_back({Token::Kind::lbracket, "[", off}); ++i; continue; }
    if (c == ']') { out.push_back({Token::Kind::rbracket, "]", off}); ++i; continue; }
    if (c == ',') { out.push_back({Token::Kind::comma, ",", off}); ++i; continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '.'))
        ++j;
      std::string word(src.substr(i, j - i));
      Token::Kind k = Token::Kind::ident;
      if (word == "o") k = Token::Kind::kw_o;
      else if (word == "x") k = Token::Kind::kw_x;
      else if (word == "id") k = Token::Kind::kw_id;
      else if (word == "swap") k = Token::Kind::kw_swap;
      out.push_back({k, std::move(word), off});
      i = j;
      continue;
    }
    throw ParseError(off, {"identifier", "id[", "swap[", "(", ")"});
  }
  out.push_back({Token::Kind::end, "", n + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    expect(Token::Kind::end, {"end of input"});
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }
  void expect(Token::Kind k, std::vector<std::string> what) {
    if (cur().kind != k) throw ParseError(cur().offset, std::move(what));
    advance();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (cur().kind == Token::Kind::kw_o) {
      advance();
      e = Expr::comp(std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = atom();
    while (cur().kind == Token::Kind::kw_x) {
      advance();
      e = Expr::tens(std::move(e), atom());
    }
    return e;
  }

  std::string object_name() {
    if (cur().kind != Token::Kind::ident)
      throw ParseError(cur().offset, {"object name"});
    std::string s = cur().text;
    advance();
    return s;
  }

  ExprPtr atom() {
    switch (cur().kind) {
      case Token::Kind::ident: {
        std::string s = cur().text;
        advance();
        return Expr::gen(std::move(s));
      }
      case Token::Kind::kw_id: {
        advance();
        expect(Token::Kind::lbracket, {"["});
        std::vector<std::string> objs;
        if (cur().kind != Token::Kind::rbracket) {
          objs.push_back(object_name());
          while (cur().kind == Token::Kind::comma) {
            advance();
            objs.push_back(object_name());
          }
        }
        expect(Token::Kind::rbracket, {"]"});
        return Expr::id(std::move(objs));
      }
      case Token::Kind::kw_swap: {
        advance();
        expect(Token::Kind::lbracket, {"["});
        std::string a = object_name();
        expect(Token::Kind::comma, {","});
        std::string b = object_name();
        expect(Token::Kind::rbracket, {"]"});
        return Expr::swp(std::move(a), std::move(b));
      }
      case Token::Kind::lparen: {
        advance();
        ExprPtr e = expr();
        expect(Token::Kind::rparen, {")"});
        return e;
      }
      default:
        throw ParseError(cur().offset, {"identifier", "id[", "swap[", "("});
    }
  }
};

void print_rec(const Expr& e, int parent_prec, std::string& out) {
  // compose = precedence 0, tensor = 1, atoms = 2
  switch (e.tag) {
    case Expr::Tag::generator:
      out += e.name;
      return;
    case Expr::Tag::identity: {
      out += "id[";
      for (std::size_t k = 0; k < e.objects.size(); ++k) {
        if (k) out += ",";
        out += e.objects[k];
      }
      out += "]";
      return;
    }
    case Expr::Tag::swap:
      out += "swap[" + e.objects[0] + "," + e.objects[1] + "]";
      return;
    case Expr::Tag::compose: {
      bool paren = parent_prec > 0;
      if (paren) out += "(";
      print_rec(*e.left, 0, out);
      out += " o ";
      print_rec(*e.right, 1, out);  // right child composes only if parenthesized
      if (paren) out += ")";
      return;
    }
    case Expr::Tag::tensor: {
      bool paren = parent_prec > 1;
      if (paren) out += "(";
      print_rec(*e.left, 1, out);
      out += " x ";
      print_rec(*e.right, 2, out);
      if (paren) out += ")";
      return;
    }
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_rec(e, 0, out);
  return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.tag != b.tag || a.name != b.name || a.objects != b.objects) return false;
  if (!a.left != !b.left || !a.right != !b.right) return false;
  if (a.left && !expr_equal(*a.left, *b.left)) return false;
  if (a.right && !expr_equal(*a.right, *b.right)) return false;
  return true;
}

Environment& Environment::obj(const std::string& name, std::size_t dim) {
  objects[name] = dim;
  return *this;
}

ObjectSig Environment::sig_of(const std::vector<std::string>& names) const {
  std::vector<ObjectFactor> fs;
  for (const auto& n : names) {
    auto it = objects.find(n);
    if (it == objects.end()) throw TypecheckError("unknown object '" + n + "'");
    fs.push_back({n, it->second});
  }
  return ObjectSig(std::move(fs));
}

Environment& Environment::gen(const std::string& name, const Morphism& m,
                              const std::vector<std::string>& dom,
                              const std::vector<std::string>& cod) {
  generators.insert_or_assign(name, m.with_signature(sig_of(dom), sig_of(cod)));
  return *this;
}

Environment& Environment::gen_raw(const std::string& name, Morphism m) {
  generators.insert_or_assign(name, std::move(m));
  return *this;
}

namespace {

std::pair<ObjectSig, ObjectSig> typecheck_rec(const Expr& e, const Environment& env) {
  switch (e.tag) {
    case Expr::Tag::generator: {
      auto it = env.generators.find(e.name);
      if (it == env.generators.end())
        throw TypecheckError("unknown generator '" + e.name + "'");
      return {it->second.dom(), it->second.cod()};
    }
    case Expr::Tag::identity: {
      ObjectSig s = env.sig_of(e.objects);
      return {s, s};
    }
    case Expr::Tag::swap: {
      ObjectSig d = env.sig_of(e.objects);
      ObjectSig c = env.sig_of({e.objects[1], e.objects[0]});
      return {d, c};
    }
    case Expr::Tag::compose: {
      auto l = typecheck_rec(*e.left, env);
      auto r = typecheck_rec(*e.right, env);
      if (!l.first.same_dims(r.second))
        throw TypecheckError("composition mismatch in '" + print_expr(e) + "': left expects " +
                             l.first.str() + " (dim " + std::to_string(l.first.dim()) +
                             "), right produces " + r.second.str() + " (dim " +
                             std::to_string(r.second.dim()) + ")");
      return {r.first, l.second};
    }
    case Expr::Tag::tensor: {
      auto l = typecheck_rec(*e.left, env);
      auto r = typecheck_rec(*e.right, env);
      return {l.first.tensor(r.first), l.second.tensor(r.second)};
    }
  }
  throw TypecheckError("corrupt expression");
}

}  // namespace

std::pair<ObjectSig, ObjectSig> typecheck_expr(const Expr& e, const Environment& env) {
  return typecheck_rec(e, env);
}

Morphism eval_expr(const Expr& e, const Environment& env) {
  switch (e.tag) {
    case Expr::Tag::generator: {
      auto it = env.generators.find(e.name);
      if (it == env.generators.end())
        throw TypecheckError("unknown generator '" + e.name + "'");
      return it->second;
    }
    case Expr::Tag::identity:
      return Morphism::identity(env.field, env.sig_of(e.objects));
    case Expr::Tag::swap: {
      ObjectSig d = env.sig_of(e.objects);
      return swap_morphism(env.field, d.factors()[0], d.factors()[1]);
    }
    case Expr::Tag::compose:
      return compose(eval_expr(*e.left, env), eval_expr(*e.right, env));
    case Expr::Tag::tensor:
      return tensor_product(eval_expr(*e.left, env), eval_expr(*e.right, env));
  }
  throw TypecheckError("corrupt expression");
}

std::string AxiomCheck::str() const {
  std::string s = (pass ? "[pass] " : "[FAIL] ") + name;
  if (!pass && witness) {
    s += "  witness (" + std::to_string(witness->row) + "," + std::to_string(witness->col) +
         "): lhs=" + witness->lhs_value + " rhs=" + witness->rhs_value;
  }
  return s;
}

AxiomCheck check_equal(const std::string& name, const ExprPtr& lhs, const ExprPtr& rhs,
                       const Environment& env) {
  auto lsig = typecheck_expr(*lhs, env);
  auto rsig = typecheck_expr(*rhs, env);
  if (!lsig.first.same_dims(rsig.first) || !lsig.second.same_dims(rsig.second))
    throw SignatureError("equation sides have different signatures in '" + name + "'",
                         lsig.first.str() + " -> " + lsig.second.str(),
                         rsig.first.str() + " -> " + rsig.second.str());
  Morphism l = eval_expr(*lhs, env);
  Morphism r = eval_expr(*rhs, env);
  AxiomCheck out{name, lhs, rhs, false, std::nullopt};
  std::size_t wr, wc;
  if (l.mat().first_difference(r.mat(), &wr, &wc)) {
    out.pass = false;
    out.witness = Witness{wr, wc, l.mat().at(wr, wc).str(), r.mat().at(wr, wc).str()};
  } else {
    out.pass = true;
  }
  return out;
}

AxiomCheck check_equal(const std::string& name, const std::string& lhs_src,
                       const std::string& rhs_src, const Environment& env) {
  return check_equal(name, parse_expr(lhs_src), parse_expr(rhs_src), env);
}

AxiomCheck compare_morphisms(const std::string& name, const Morphism& lhs,
                             const Morphism& rhs) {
  AxiomCheck out{name, nullptr, nullptr, false, std::nullopt};
  if (!lhs.dom().same_dims(rhs.dom()) || !lhs.cod().same_dims(rhs.cod())) {
    out.pass = false;
    out.witness = Witness{0, 0, lhs.sig_str(), rhs.sig_str()};
    return out;
  }
  std::size_t wr, wc;
  if (lhs.mat().first_difference(rhs.mat(), &wr, &wc)) {
    out.pass = false;
    out.witness = Witness{wr, wc, lhs.mat().at(wr, wc).str(), rhs.mat().at(wr, wc).str()};
  } else {
    out.pass = true;
  }
  return out;
}

}  // namespace hopflab

#include "hopflab/morphism.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

std::size_t ObjectSig::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

std::vector<std::size_t> ObjectSig::dims() const {
  std::vector<std::size_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

ObjectSig ObjectSig::tensor(const ObjectSig& o) const {
  std::vector<ObjectFactor> fs = factors_;
  fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
  return ObjectSig(std::move(fs));
}

ObjectSig ObjectSig::drop_units() const {
  std::vector<ObjectFactor> fs;
  for (const auto& f : factors_)
    if (f.dim != 1) fs.push_back(f);
  return ObjectSig(std::move(fs));
}

std::string ObjectSig::str() const {
  if (factors_.empty()) return "K";
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += ".";
    s += factors_[k].name;
  }
  return s;
}

Morphism::Morphism(ObjectSig dom, ObjectSig cod, Matrix mat)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
  if (mat_.rows() != cod_.dim() || mat_.cols() != dom_.dim())
    throw SignatureError(
        "matrix shape does not match signature",
        std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()),
        std::to_string(cod_.dim()) + "x" + std::to_string(dom_.dim()) + " (" +
            cod_.str() + " x " + dom_.str() + ")");
}

Morphism Morphism::identity(const FieldSpec& f, const ObjectSig& obj) {
  return Morphism(obj, obj, Matrix::identity(f, obj.dim()));
}

Morphism Morphism::zero(const FieldSpec& f, const ObjectSig& dom, const ObjectSig& cod) {
  return Morphism(dom, cod, Matrix(f, cod.dim(), dom.dim()));
}

Morphism Morphism::with_signature(ObjectSig dom, ObjectSig cod) const {
  if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim())
    throw SignatureError("cannot retype morphism, total dimensions differ",
                         sig_str(), dom.str() + " -> " + cod.str());
  return Morphism(std::move(dom), std::move(cod), mat_);
}

bool Morphism::operator==(const Morphism& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && mat_ == o.mat_;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!f.dom().same_dims(g.cod()))
    throw SignatureError("composition mismatch", f.sig_str(), g.sig_str());
  return Morphism(g.dom(), f.cod(), f.mat().mul(g.mat()));
}

Morphism compose(const Morphism& f, const Morphism& g, const Morphism& h) {
  return compose(compose(f, g), h);
}

Morphism compose(const Morphism& f, const Morphism& g, const Morphism& h,
                 const Morphism& k) {
  return compose(compose(compose(f, g), h), k);
}

Morphism tensor_product(const Morphism& f, const Morphism& g) {
  return Morphism(f.dom().tensor(g.dom()), f.cod().tensor(g.cod()),
                  f.mat().kron(g.mat()));
}

Morphism swap_morphism(const FieldSpec& f, const ObjectFactor& x, const ObjectFactor& y) {
  const std::size_t dx = x.dim, dy = y.dim;
  Matrix m(f, dx * dy, dx * dy);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j) m.set_one(j * dx + i, i * dy + j);
  return Morphism(ObjectSig({x, y}), ObjectSig({y, x}), std::move(m));
}

Morphism morphism_inverse(const Morphism& f) {
  if (f.dom().dim() != f.cod().dim())
    throw SignatureError("inverse of a non-square morphism", f.sig_str(), "square");
  return Morphism(f.cod(), f.dom(), f.mat().inverse());
}

SplitIdempotent split_idempotent(const Morphism& q, const std::string& image_name) {
  if (q.dom().dim() != q.cod().dim())
    throw SignatureError("idempotent must be square", q.sig_str(), "square");
  const Matrix& m = q.mat();
  Matrix sq = m.mul(m);
  std::size_t r, c;
  if (sq.first_difference(m, &r, &c))
    throw NotIdempotentError(r, c, sq.at(r, c).str(), m.at(r, c).str());

  auto [red, pivots] = m.rref();
  const std::size_t rank = pivots.size();
  ObjectSig image = ObjectSig::single(image_name, rank);
  Morphism i(image, q.cod(), m.select_columns(pivots));
  Morphism p(q.dom(), image, red.top_rows(rank));
  SplitIdempotent s{q, p, i, rank};
  // i o p = q and p o i = id hold for any idempotent; check anyway so a
  // violation surfaces here rather than in a downstream axiom.
  if (!(compose(s.i, s.p).mat() == m) ||
      !(compose(s.p, s.i).mat() == Matrix::identity(m.field(), rank)))
    throw Error("idempotent splitting failed to factor q = i o p with p o i = id");
  return s;
}

}  // namespace hopflab

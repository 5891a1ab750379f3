#pragma once

#include <string>
#include <vector>

#include "hopflab/matrix.hpp"

namespace hopflab {

struct ObjectFactor {
  std::string name;
  std::size_t dim = 1;
  bool operator==(const ObjectFactor&) const = default;
};

// An object of the ambient tensor category: an ordered list of named factors.
// The empty list is the unit object K (dimension 1).  Tensor indices are
// left-factor-major: the pair (i, j) in X (x) Y sits at i*dim(Y) + j.
class ObjectSig {
 public:
  ObjectSig() = default;
  explicit ObjectSig(std::vector<ObjectFactor> factors) : factors_(std::move(factors)) {}
  static ObjectSig unit() { return ObjectSig{}; }
  static ObjectSig single(std::string name, std::size_t dim) {
    return ObjectSig({{std::move(name), dim}});
  }

  const std::vector<ObjectFactor>& factors() const { return factors_; }
  std::size_t dim() const;
  std::vector<std::size_t> dims() const;
  bool same_dims(const ObjectSig& o) const { return dims() == o.dims(); }
  ObjectSig tensor(const ObjectSig& o) const;
  ObjectSig drop_units() const;  // forget dimension-1 factors
  bool is_unit() const { return factors_.empty(); }
  std::string str() const;  // "H.B" / "K"
  bool operator==(const ObjectSig&) const = default;

 private:
  std::vector<ObjectFactor> factors_;
};

// A linear map with typed domain and codomain; the matrix has shape
// dim(cod) x dim(dom) and acts on column vectors.
class Morphism {
 public:
  Morphism(ObjectSig dom, ObjectSig cod, Matrix mat);
  static Morphism identity(const FieldSpec& f, const ObjectSig& obj);
  static Morphism zero(const FieldSpec& f, const ObjectSig& dom, const ObjectSig& cod);

  const ObjectSig& dom() const { return dom_; }
  const ObjectSig& cod() const { return cod_; }
  const Matrix& mat() const { return mat_; }
  const FieldSpec& field() const { return mat_.field(); }

  // Same matrix under different factor splits of the same total dimensions.
  Morphism with_signature(ObjectSig dom, ObjectSig cod) const;

  bool operator==(const Morphism& o) const;
  // exact equality of underlying matrices ignoring factor names/splits
  bool same_map(const Morphism& o) const { return mat_ == o.mat_; }
  std::string sig_str() const { return dom_.str() + " -> " + cod_.str(); }

 private:
  ObjectSig dom_, cod_;
  Matrix mat_;
};

// f after g (mathematical order); requires dom(f) = cod(g) as dimension lists.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism compose(const Morphism& f, const Morphism& g, const Morphism& h);
Morphism compose(const Morphism& f, const Morphism& g, const Morphism& h, const Morphism& k);

// Kronecker product with concatenated signatures.
Morphism tensor_product(const Morphism& f, const Morphism& g);

// The symmetry X (x) Y -> Y (x) X: basis (i,j) |-> (j,i).
Morphism swap_morphism(const FieldSpec& f, const ObjectFactor& x, const ObjectFactor& y);

// Exact two-sided inverse of a square morphism.
Morphism morphism_inverse(const Morphism& f);

// q = i o p with p o i = id, obtained from the pivot columns of q and the
// nonzero rows of rref(q).  The image object is named `image_name`.
struct SplitIdempotent {
  Morphism q, p, i;
  std::size_t rank = 0;
};
SplitIdempotent split_idempotent(const Morphism& q, const std::string& image_name = "I");

}  // namespace hopflab

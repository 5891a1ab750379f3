#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hopflab/field.hpp"

namespace hopflab {

// Dense exact matrix over QQ or GF(p), row-major, acting on column vectors.
// Values are immutable in practice: operations return fresh matrices.
class Matrix {
 public:
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);  // zero matrix
  static Matrix identity(const FieldSpec& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set_one(std::size_t r, std::size_t c);

  bool operator==(const Matrix& o) const;
  // first differing entry in row-major order, if any
  bool first_difference(const Matrix& o, std::size_t* r, std::size_t* c) const;
  bool is_zero() const;

  Matrix mul(const Matrix& rhs) const;   // this * rhs
  Matrix kron(const Matrix& rhs) const;  // left-factor-major Kronecker product
  Matrix add(const Matrix& rhs) const;
  Matrix sub(const Matrix& rhs) const;

  // Exact Gauss-Jordan; pivot columns are strictly increasing.
  std::pair<Matrix, std::vector<std::size_t>> rref() const;
  std::size_t rank() const;
  Matrix inverse() const;  // throws SingularMatrixError

  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix top_rows(std::size_t n) const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> q_;       // iff rational
  std::vector<std::uint32_t> r_;   // iff prime

  template <class Body>
  friend auto with_elems(const Matrix& m, Body body);
};

}  // namespace hopflab

#include "hopflab/matrix.hpp"

#include <algorithm>

namespace hopflab {

namespace {

struct QOps {
  using E = mpq_class;
  static E zero() { return E(0); }
  static E one() { return E(1); }
  static bool is_zero(const E& e) { return e == 0; }
  static E add(const E& a, const E& b) { return a + b; }
  static E sub(const E& a, const E& b) { return a - b; }
  static E mul(const E& a, const E& b) { return a * b; }
  static E inv(const E& a) { return 1 / a; }
  static void add_assign(E& a, const E& b) { a += b; }
};

struct POps {
  std::uint32_t p;
  using E = std::uint32_t;
  static E zero() { return 0; }
  static E one() { return 1; }
  static bool is_zero(const E& e) { return e == 0; }
  E add(E a, E b) const { return gf_add(a, b, p); }
  E sub(E a, E b) const { return gf_sub(a, b, p); }
  E mul(E a, E b) const { return gf_mul(a, b, p); }
  E inv(E a) const { return gf_inv(a, p); }
  void add_assign(E& a, E b) const { a = gf_add(a, b, p); }
};

// data(i,j) = data[i*cols + j]

template <class Ops>
std::vector<typename Ops::E> mul_impl(const std::vector<typename Ops::E>& a,
                                      std::size_t ar, std::size_t ac,
                                      const std::vector<typename Ops::E>& b,
                                      std::size_t bc, const Ops& ops) {
  std::vector<typename Ops::E> out(ar * bc, ops.zero());
  for (std::size_t i = 0; i < ar; ++i) {
    const auto* arow = &a[i * ac];
    auto* orow = &out[i * bc];
    for (std::size_t t = 0; t < ac; ++t) {
      if (Ops::is_zero(arow[t])) continue;
      const auto& av = arow[t];
      const auto* brow = &b[t * bc];
      for (std::size_t j = 0; j < bc; ++j) {
        if (Ops::is_zero(brow[j])) continue;
        ops.add_assign(orow[j], ops.mul(av, brow[j]));
      }
    }
  }
  return out;
}

template <class Ops>
std::vector<typename Ops::E> kron_impl(const std::vector<typename Ops::E>& a,
                                       std::size_t ar, std::size_t ac,
                                       const std::vector<typename Ops::E>& b,
                                       std::size_t br, std::size_t bc,
                                       const Ops& ops) {
  std::vector<typename Ops::E> out(ar * br * ac * bc, ops.zero());
  const std::size_t oc = ac * bc;
  for (std::size_t i1 = 0; i1 < ar; ++i1)
    for (std::size_t j1 = 0; j1 < ac; ++j1) {
      const auto& av = a[i1 * ac + j1];
      if (Ops::is_zero(av)) continue;
      for (std::size_t i2 = 0; i2 < br; ++i2)
        for (std::size_t j2 = 0; j2 < bc; ++j2) {
          const auto& bv = b[i2 * bc + j2];
          if (Ops::is_zero(bv)) continue;
          out[(i1 * br + i2) * oc + (j1 * bc + j2)] = ops.mul(av, bv);
        }
    }
  return out;
}

// in-place Gauss-Jordan; returns pivot columns
template <class Ops>
std::vector<std::size_t> rref_impl(std::vector<typename Ops::E>& m, std::size_t rows,
                                   std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (!Ops::is_zero(m[r * cols + col])) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m[sel * cols + j], m[lead * cols + j]);
    const auto pivinv = ops.inv(m[lead * cols + col]);
    for (std::size_t j = col; j < cols; ++j)
      m[lead * cols + j] = ops.mul(m[lead * cols + j], pivinv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const auto factor = m[r * cols + col];
      if (Ops::is_zero(factor)) continue;
      for (std::size_t j = col; j < cols; ++j)
        m[r * cols + j] = ops.sub(m[r * cols + j], ops.mul(factor, m[lead * cols + j]));
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (field_.is_rational())
    q_.assign(rows * cols, mpq_class(0));
  else
    r_.assign(rows * cols, 0);
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_one(i, i);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return Scalar::rational(q_[r * cols_ + c]);
  return Scalar::residue(r_[r * cols_ + c], field_);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_))
    throw Error("scalar field " + v.field().str() + " does not match matrix field " +
                field_.str());
  if (field_.is_rational())
    q_[r * cols_ + c] = v.rat();
  else
    r_[r * cols_ + c] = v.res();
}

void Matrix::set_one(std::size_t r, std::size_t c) {
  if (field_.is_rational())
    q_[r * cols_ + c] = 1;
  else
    r_[r * cols_ + c] = 1;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && q_ == o.q_ &&
         r_ == o.r_;
}

bool Matrix::first_difference(const Matrix& o, std::size_t* r, std::size_t* c) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw SignatureError("cannot compare matrices of different shape/field",
                         std::to_string(rows_) + "x" + std::to_string(cols_) + " " + field_.str(),
                         std::to_string(o.rows_) + "x" + std::to_string(o.cols_) + " " + o.field_.str());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      bool eq = field_.is_rational() ? q_[i * cols_ + j] == o.q_[i * cols_ + j]
                                     : r_[i * cols_ + j] == o.r_[i * cols_ + j];
      if (!eq) {
        *r = i;
        *c = j;
        return true;
      }
    }
  return false;
}

bool Matrix::is_zero() const {
  if (field_.is_rational())
    return std::all_of(q_.begin(), q_.end(), [](const mpq_class& v) { return v == 0; });
  return std::all_of(r_.begin(), r_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix Matrix::mul(const Matrix& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error("field mismatch: " + field_.str() + " vs " + rhs.field_.str());
  if (cols_ != rhs.rows_)
    throw SignatureError("matrix product shape mismatch",
                         std::to_string(rows_) + "x" + std::to_string(cols_),
                         std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out(field_, rows_, rhs.cols_);
  if (field_.is_rational())
    out.q_ = mul_impl(q_, rows_, cols_, rhs.q_, rhs.cols_, QOps{});
  else
    out.r_ = mul_impl(r_, rows_, cols_, rhs.r_, rhs.cols_, POps{field_.p});
  return out;
}

Matrix Matrix::kron(const Matrix& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error("field mismatch: " + field_.str() + " vs " + rhs.field_.str());
  Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  if (field_.is_rational())
    out.q_ = kron_impl(q_, rows_, cols_, rhs.q_, rhs.rows_, rhs.cols_, QOps{});
  else
    out.r_ = kron_impl(r_, rows_, cols_, rhs.r_, rhs.rows_, rhs.cols_, POps{field_.p});
  return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
  if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw SignatureError("matrix sum shape mismatch",
                         std::to_string(rows_) + "x" + std::to_string(cols_),
                         std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out = *this;
  if (field_.is_rational())
    for (std::size_t k = 0; k < q_.size(); ++k) out.q_[k] += rhs.q_[k];
  else
    for (std::size_t k = 0; k < r_.size(); ++k)
      out.r_[k] = gf_add(out.r_[k], rhs.r_[k], field_.p);
  return out;
}

Matrix Matrix::sub(const Matrix& rhs) const {
  if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw SignatureError("matrix difference shape mismatch",
                         std::to_string(rows_) + "x" + std::to_string(cols_),
                         std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out = *this;
  if (field_.is_rational())
    for (std::size_t k = 0; k < q_.size(); ++k) out.q_[k] -= rhs.q_[k];
  else
    for (std::size_t k = 0; k < r_.size(); ++k)
      out.r_[k] = gf_sub(out.r_[k], rhs.r_[k], field_.p);
  return out;
}

std::pair<Matrix, std::vector<std::size_t>> Matrix::rref() const {
  Matrix out = *this;
  std::vector<std::size_t> pivots;
  if (field_.is_rational())
    pivots = rref_impl(out.q_, rows_, cols_, QOps{});
  else
    pivots = rref_impl(out.r_, rows_, cols_, POps{field_.p});
  return {std::move(out), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().second.size(); }

Matrix Matrix::inverse() const {
  if (rows_ != cols_)
    throw SignatureError("inverse of a non-square matrix",
                         std::to_string(rows_) + "x" + std::to_string(cols_), "square");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, at(i, j));
    aug.set_one(i, n + i);
  }
  auto [red, pivots] = aug.rref();
  std::size_t rk = 0;
  for (auto p : pivots)
    if (p < n) ++rk;
  if (rk != n) throw SingularMatrixError(rk, n);
  Matrix out(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, red.at(i, n + j));
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out.set(i, k, at(i, idx[k]));
  return out;
}

Matrix Matrix::top_rows(std::size_t n) const {
  Matrix out(field_, n, cols_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  return out;
}

}  // namespace hopflab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopflab {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Composition/shape mismatch; carries both offending signatures.
struct SignatureError : Error {
  std::string lhs, rhs;
  SignatureError(const std::string& what, std::string lhs_sig, std::string rhs_sig)
      : Error(what + ": " + lhs_sig + " vs " + rhs_sig),
        lhs(std::move(lhs_sig)),
        rhs(std::move(rhs_sig)) {}
};

// split_idempotent on a map q with q*q != q; carries a witness entry.
struct NotIdempotentError : Error {
  std::size_t row = 0, col = 0;
  NotIdempotentError(std::size_t r, std::size_t c, const std::string& got,
                     const std::string& expected)
      : Error("not idempotent: entry (" + std::to_string(r) + "," +
              std::to_string(c) + ") of q*q is " + got + ", q has " + expected),
        row(r),
        col(c) {}
};

struct SingularMatrixError : Error {
  std::size_t rank = 0;
  explicit SingularMatrixError(std::size_t rk, std::size_t n)
      : Error("matrix is singular: rank " + std::to_string(rk) + " of " +
              std::to_string(n)),
        rank(rk) {}
};

// 1-based byte offset into the source text plus the tokens that would have
// been accepted there.
struct ParseError : Error {
  std::size_t offset = 0;
  std::vector<std::string> expected;
  ParseError(std::size_t off, std::vector<std::string> exp)
      : Error(render(off, exp)), offset(off), expected(std::move(exp)) {}

 private:
  static std::string render(std::size_t off, const std::vector<std::string>& exp) {
    std::string m = "syntax error at offset " + std::to_string(off) + ", expected ";
    for (std::size_t k = 0; k < exp.size(); ++k) m += (k ? " | " : "") + exp[k];
    return m;
  }
};

struct TypecheckError : Error {
  explicit TypecheckError(const std::string& msg) : Error(msg) {}
};

// Violated operation precondition (gates, invertibility requirements, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Instance-file problem; `where` is a path into the JSON document.
struct IngestError : Error {
  std::string where;
  IngestError(std::string path, const std::string& msg)
      : Error(path + ": " + msg), where(std::move(path)) {}
};

}  // namespace hopflab

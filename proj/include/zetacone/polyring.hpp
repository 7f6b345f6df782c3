#pragma once

// Exact sparse multivariate polynomials over Z in variables u1..un, with
// fraction-free determinants and truncated power-series inversion.
//
// Term order everywhere is graded lexicographic with u1 < u2 < ... < un:
// lower total degree first, ties broken by the exponent of un, then u(n-1),
// and so on. Iteration over a polynomial visits terms in ascending order.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetacone {

using Integer = mpz_class;

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t num_vars) : p_(num_vars, 0) {}
  explicit ExponentVector(std::vector<std::uint16_t> p) : p_(std::move(p)) {}
  ExponentVector(std::initializer_list<std::uint16_t> p) : p_(p) {}

  std::size_t size() const noexcept { return p_.size(); }
  std::uint16_t operator[](std::size_t i) const { return p_[i]; }
  void set(std::size_t i, std::uint16_t v) { p_[i] = v; }
  std::span<const std::uint16_t> values() const noexcept { return p_; }

  std::uint32_t total_degree() const noexcept;
  bool is_zero() const noexcept;
  // Componentwise <=.
  bool dominated_by(const ExponentVector& other) const;

  // Throws PreconditionError on length mismatch or 16-bit overflow.
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  // Requires b.dominated_by(a).
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  // "(p1,...,pn)"
  std::string to_string() const;

 private:
  std::vector<std::uint16_t> p_;
};

std::strong_ordering grlex_compare(const ExponentVector& a, const ExponentVector& b);

struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grlex_compare(a, b) < 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

class SparsePolynomial {
 public:
  using TermMap = std::map<ExponentVector, Integer, GrlexLess>;

  explicit SparsePolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePolynomial constant(std::size_t num_vars, const Integer& c);
  static SparsePolynomial monomial(const ExponentVector& e, const Integer& c = 1);
  // u_{i+1}
  static SparsePolynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  Integer coefficient(const ExponentVector& e) const;
  Integer constant_term() const;
  // Highest total degree of a term; 0 for the zero polynomial.
  std::uint32_t total_degree() const noexcept;
  // Lowest total degree of a term; nullopt for zero.
  std::optional<std::uint32_t> low_degree() const noexcept;

  // Adds c * u^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Integer& c);

  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);

  // Drops every term of total degree > max_degree.
  SparsePolynomial truncated(std::uint32_t max_degree) const;

  // Canonical text, e.g. "1-2*u1*u2*u3+u1^2*u2^2*u3^2"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

// Throw PreconditionError on mismatched variable counts.
SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_sub(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b,
                          std::optional<std::uint32_t> truncation = std::nullopt);

inline SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
  return poly_add(a, b);
}
inline SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
  return poly_sub(a, b);
}
inline SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  return poly_mul(a, b);
}

// Quotient of an exact division. Throws InternalError if b does not divide a.
SparsePolynomial divide_exact(const SparsePolynomial& a, const SparsePolynomial& b);

// Square matrix of polynomials sharing one variable count, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t size, std::size_t num_vars);

  std::size_t size() const noexcept { return size_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  SparsePolynomial& at(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const SparsePolynomial& at(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t size_;
  std::size_t num_vars_;
  std::vector<SparsePolynomial> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Pivots are chosen
// by symmetric row/column exchange toward the sparsest remaining row; a plain
// row exchange is used only if every remaining diagonal entry is zero.
SparsePolynomial poly_det(const PolyMatrix& m);

// Power series in u1..un known exactly up to a total-degree bound.
class TruncatedSeries {
 public:
  TruncatedSeries(SparsePolynomial terms, std::uint32_t max_total_degree);

  std::uint32_t max_total_degree() const noexcept { return max_degree_; }
  std::size_t num_vars() const noexcept { return poly_.num_vars(); }
  const SparsePolynomial& polynomial() const noexcept { return poly_; }
  Integer coefficient(const ExponentVector& e) const;

  // Terms whose exponents are all <= max_exponent. The total-degree bound is
  // unchanged; the result is exact on that box intersected with the simplex.
  SparsePolynomial restricted_to_box(std::uint16_t max_exponent) const;

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  SparsePolynomial poly_;
  std::uint32_t max_degree_;
};

// s with p * s == 1 modulo terms of total degree > max_degree. Requires the
// constant term of p to be 1 (PreconditionError otherwise).
TruncatedSeries series_inverse(const SparsePolynomial& p, std::uint32_t max_degree);

}  // namespace zetacone

#include "zetacone/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "zetacone/error.hpp"
#include "zetacone/kernels.hpp"

namespace zetacone {

// ---------------------------------------------------------------------------
// ExponentVector

std::uint32_t ExponentVector::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (auto v : p_) d += v;
  return d;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(p_.begin(), p_.end(), [](auto v) { return v == 0; });
}

bool ExponentVector::dominated_by(const ExponentVector& other) const {
  if (other.size() != size()) throw PreconditionError("exponent vector length mismatch");
  return kernels::active().dominated_u16(p_.data(), other.p_.data(), p_.size());
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw PreconditionError("exponent vector length mismatch");
  ExponentVector out(a.size());
  if (!kernels::active().add_u16(out.p_.data(), a.p_.data(), b.p_.data(), a.size()))
    throw PreconditionError("exponent overflow (> 65535)");
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  if (!b.dominated_by(a)) throw PreconditionError("exponent subtraction would go negative");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.p_[i] = static_cast<std::uint16_t>(a.p_[i] - b.p_[i]);
  return out;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p_[i]);
  }
  return s + ")";
}

std::strong_ordering grlex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  const auto pa = a.values(), pb = b.values();
  if (auto c = pa.size() <=> pb.size(); c != 0) return c;
  for (std::size_t k = pa.size(); k-- > 0;)
    if (auto c = pa[k] <=> pb[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t ExponentHash::operator()(const ExponentVector& e) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto v : e.values()) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// SparsePolynomial

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, const Integer& c) {
  SparsePolynomial p(num_vars);
  p.add_term(ExponentVector(num_vars), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& e, const Integer& c) {
  SparsePolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t num_vars, std::size_t i) {
  ExponentVector e(num_vars);
  e.set(i, 1);
  return monomial(e);
}

Integer SparsePolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer SparsePolynomial::constant_term() const { return coefficient(ExponentVector(num_vars_)); }

std::uint32_t SparsePolynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::optional<std::uint32_t> SparsePolynomial::low_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.total_degree();
}

void SparsePolynomial::add_term(const ExponentVector& e, const Integer& c) {
  if (e.size() != num_vars_) throw PreconditionError("term has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (other.num_vars_ != num_vars_) throw PreconditionError("polynomials have different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  if (other.num_vars_ != num_vars_) throw PreconditionError("polynomials have different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial SparsePolynomial::truncated(std::uint32_t max_degree) const {
  SparsePolynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e.total_degree() > max_degree) break;  // ascending grlex is graded
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool unit = !e.is_zero() && (c == 1 || c == -1);
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    if (!unit) {
      out << Integer(abs(c)).get_str();
      if (!e.is_zero()) out << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) out << '*';
      out << 'u' << (i + 1);
      if (e[i] > 1) out << '^' << e[i];
      first_var = false;
    }
    first = false;
  }
  return out.str();
}

namespace {

void require_same_vars(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw PreconditionError("polynomials have different variable counts (" +
                            std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) + ")");
}

}  // namespace

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_same_vars(a, b);
  SparsePolynomial out = a;
  out += b;
  return out;
}

SparsePolynomial poly_sub(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_same_vars(a, b);
  SparsePolynomial out = a;
  out -= b;
  return out;
}

SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b,
                          std::optional<std::uint32_t> truncation) {
  require_same_vars(a, b);
  std::unordered_map<ExponentVector, Integer, ExponentHash> acc;
  acc.reserve(a.num_terms() * b.num_terms());
  Integer prod;
  for (const auto& [ea, ca] : a.terms()) {
    const auto da = ea.total_degree();
    if (truncation && da > *truncation) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (truncation && da + eb.total_degree() > *truncation) break;
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[ea + eb] += prod;
    }
  }
  SparsePolynomial out(a.num_vars());
  for (auto& [e, c] : acc)
    if (c != 0) out.add_term(e, c);
  return out;
}

SparsePolynomial divide_exact(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  SparsePolynomial rem = a;
  SparsePolynomial quot(a.num_vars());
  // Peel the grlex-leading term each round; any exact quotient is recovered
  // this way because grlex is a monomial order.
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    if (!lead_e.dominated_by(re) || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw InternalError("inexact polynomial division");
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    const ExponentVector qe = re - lead_e;
    for (const auto& [be, bc] : b.terms()) rem.add_term(qe + be, -qc * bc);
    quot.add_term(qe, qc);
  }
  return quot;
}

// ---------------------------------------------------------------------------
// PolyMatrix and determinant

PolyMatrix::PolyMatrix(std::size_t size, std::size_t num_vars)
    : size_(size), num_vars_(num_vars), entries_(size * size, SparsePolynomial(num_vars)) {}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size() || a.num_vars() != b.num_vars())
    throw PreconditionError("matrix shape mismatch");
  PolyMatrix out(a.size(), a.num_vars());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.size(); ++c)
        if (!b.at(k, c).is_zero()) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

SparsePolynomial poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t nv = m.num_vars();
  if (n == 0) return SparsePolynomial::constant(nv, 1);

  std::vector<std::vector<SparsePolynomial>> a(n, std::vector<SparsePolynomial>(n, SparsePolynomial(nv)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (m.at(r, c).num_vars() != nv) throw PreconditionError("matrix entry has the wrong variable count");
      a[r][c] = m.at(r, c);
    }

  int sign = 1;
  SparsePolynomial prev = SparsePolynomial::constant(nv, 1);
  for (std::size_t k = 0; k < n; ++k) {
    // Symmetric exchange keeps the determinant and moves the sparsest
    // remaining row with a nonzero diagonal into pivot position.
    std::size_t best = n, best_nnz = 0, best_terms = 0;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][r].is_zero()) continue;
      std::size_t nnz = 0;
      for (std::size_t c = k; c < n; ++c) nnz += !a[r][c].is_zero();
      const std::size_t terms = a[r][r].num_terms();
      if (best == n || nnz < best_nnz || (nnz == best_nnz && terms < best_terms))
        best = r, best_nnz = nnz, best_terms = terms;
    }
    if (best != n) {
      if (best != k) {
        std::swap(a[k], a[best]);
        for (auto& row : a) std::swap(row[k], row[best]);
      }
    } else {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return SparsePolynomial(nv);
      std::swap(a[k], a[r]);
      sign = -sign;
    }

    const SparsePolynomial& pivot = a[k][k];
    const bool unit_prev = prev.num_terms() == 1 && prev.constant_term() == 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePolynomial t(nv);
        if (!a[i][j].is_zero()) t = pivot * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) t -= a[i][k] * a[k][j];
        a[i][j] = (unit_prev || t.is_zero()) ? std::move(t) : divide_exact(t, prev);
      }
      a[i][k] = SparsePolynomial(nv);
    }
    prev = a[k][k];
  }
  SparsePolynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(SparsePolynomial terms, std::uint32_t max_total_degree)
    : poly_(terms.truncated(max_total_degree)), max_degree_(max_total_degree) {}

Integer TruncatedSeries::coefficient(const ExponentVector& e) const {
  if (e.total_degree() > max_degree_)
    throw PreconditionError("coefficient requested beyond the truncation degree");
  return poly_.coefficient(e);
}

SparsePolynomial TruncatedSeries::restricted_to_box(std::uint16_t max_exponent) const {
  SparsePolynomial out(poly_.num_vars());
  for (const auto& [e, c] : poly_.terms()) {
    const auto v = e.values();
    if (std::all_of(v.begin(), v.end(), [&](auto x) { return x <= max_exponent; })) out.add_term(e, c);
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto d = std::min(a.max_degree_, b.max_degree_);
  return TruncatedSeries(poly_mul(a.poly_, b.poly_, d), d);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto d = std::min(a.max_degree_, b.max_degree_);
  return TruncatedSeries(poly_add(a.poly_, b.poly_), d);
}

TruncatedSeries series_inverse(const SparsePolynomial& p, std::uint32_t max_degree) {
  if (p.constant_term() != 1)
    throw PreconditionError("series_inverse needs constant term 1, got " + p.constant_term().get_str());
  const std::size_t nv = p.num_vars();
  const SparsePolynomial one = SparsePolynomial::constant(nv, 1);
  const SparsePolynomial q = (one - p).truncated(max_degree);
  // Horner form of sum_k q^k; q has no constant term so q^k starts at degree
  // k * low_degree(q) and only max_degree / low_degree(q) rounds matter.
  SparsePolynomial s = one;
  if (const auto low = q.low_degree()) {
    const std::uint32_t rounds = max_degree / *low;
    for (std::uint32_t k = 0; k < rounds; ++k) s = one + poly_mul(q, s, max_degree);
  }
  return TruncatedSeries(std::move(s), max_degree);
}

}  // namespace zetacone

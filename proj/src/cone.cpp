#include "zetacone/cone.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "zetacone/error.hpp"
#include "zetacone/kernels.hpp"

namespace zetacone {

std::string ConeInequality::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto c = coeffs[i];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c) + '*';
    s += 'w' + std::to_string(i + 1);
  }
  return (s.empty() ? "0" : s) + " >= 0";
}

void ConeSystem::add(ConeInequality row) {
  if (row.coeffs.size() != n_) throw PreconditionError("inequality has the wrong dimension");
  const std::size_t base = packed_.size();
  packed_.resize(base + stride(), 0);
  std::copy(row.coeffs.begin(), row.coeffs.end(), packed_.begin() + static_cast<std::ptrdiff_t>(base));
  rows_.push_back(std::move(row));
}

ConeSystem cone_system(const ParityCheckMatrix& h) {
  const std::size_t n = h.num_cols();
  ConeSystem k(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int32_t> a(n, 0);
    a[i] = 1;
    k.add({ConeInequality::Kind::nonnegativity, 0, i, std::move(a)});
  }
  for (std::size_t j = 0; j < h.num_rows(); ++j) {
    for (auto i : h.row_support(j)) {
      std::vector<std::int32_t> a(n, 0);
      for (auto other : h.row_support(j)) a[other] = 1;
      a[i] = -1;
      k.add({ConeInequality::Kind::check, j, i, std::move(a)});
    }
  }
  return k;
}

Membership cone_contains(const ConeSystem& k, const std::vector<Rational>& w) {
  if (w.size() != k.dimension()) throw PreconditionError("vector dimension does not match the cone");
  const auto& rows = k.inequalities();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational v = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (rows[r].coeffs[i] != 0) v += rows[r].coeffs[i] * w[i];
    if (v < 0) return {false, r, v};
  }
  return {};
}

Membership cone_contains(const ConeSystem& k, const std::vector<std::int64_t>& w) {
  if (w.size() != k.dimension()) throw PreconditionError("vector dimension does not match the cone");
  // Every row has coefficients in {-1,0,1}; keep |sum| inside int32 for the kernel.
  const std::int64_t limit = std::numeric_limits<std::int32_t>::max() / static_cast<std::int64_t>(w.size() + 1);
  const bool small = std::all_of(w.begin(), w.end(), [&](auto x) { return x <= limit && x >= -limit; });
  if (!small) {
    std::vector<Rational> q;
    for (auto x : w) q.emplace_back(static_cast<long>(x));
    return cone_contains(k, q);
  }
  std::vector<std::int32_t> x(k.stride(), 0);
  std::copy(w.begin(), w.end(), x.begin());
  std::vector<std::int32_t> out(k.inequalities().size());
  kernels::active().eval_rows_i32(k.packed().data(), out.size(), k.stride(), x.data(), out.data());
  for (std::size_t r = 0; r < out.size(); ++r)
    if (out[r] < 0) return {false, r, Rational(out[r])};
  return {};
}

bool parity_ok(const ParityCheckMatrix& h, const ExponentVector& p) {
  if (p.size() != h.num_cols()) throw PreconditionError("exponent vector length must equal n");
  for (std::size_t j = 0; j < h.num_rows(); ++j) {
    unsigned sum = 0;
    for (auto i : h.row_support(j)) sum += p[i];
    if (sum & 1u) return false;
  }
  return true;
}

std::uint64_t simplex_point_count(std::size_t n, std::uint32_t max_degree) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(max_degree + n), static_cast<unsigned long>(n));
  if (!c.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return c.get_ui();
}

void for_each_integer_point(const ConeSystem& k, const ParityCheckMatrix& h, const LatticeBounds& bounds,
                            const std::function<void(const IntegerConePoint&)>& visit) {
  const std::size_t n = k.dimension();
  if (h.num_cols() != n) throw PreconditionError("cone and matrix dimensions differ");
  if (simplex_point_count(n, bounds.max_total_degree) > kMaxLatticePoints)
    throw PreconditionError("C(D+n, n) exceeds " + std::to_string(kMaxLatticePoints) +
                            " lattice points; lower the degree bound");
  const std::uint32_t cap = bounds.max_exponent.value_or(std::numeric_limits<std::uint16_t>::max());
  const auto& kern = kernels::active();
  const std::size_t num_rows = k.inequalities().size();
  std::vector<std::int32_t> x(k.stride(), 0), values(num_rows);
  std::vector<ExponentVector> layer;
  std::vector<std::uint16_t> cur(n, 0);

  // All compositions of `left` into coordinates pos..n-1, each <= cap.
  auto compose = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      if (left <= cap) {
        cur[pos] = static_cast<std::uint16_t>(left);
        layer.emplace_back(cur);
      }
      return;
    }
    for (std::uint32_t v = 0; v <= std::min(left, cap); ++v) {
      cur[pos] = static_cast<std::uint16_t>(v);
      self(self, pos + 1, left - v);
    }
  };

  for (std::uint32_t d = 0; d <= bounds.max_total_degree; ++d) {
    layer.clear();
    if (n == 0) {
      if (d == 0) layer.emplace_back(cur);
    } else {
      compose(compose, 0, d);
    }
    std::sort(layer.begin(), layer.end(), GrlexLess{});
    for (auto& p : layer) {
      for (std::size_t i = 0; i < n; ++i) x[i] = p[i];
      kern.eval_rows_i32(k.packed().data(), num_rows, k.stride(), x.data(), values.data());
      IntegerConePoint point{std::move(p), true, false};
      point.in_cone = std::all_of(values.begin(), values.end(), [](auto v) { return v >= 0; });
      point.parity_ok = parity_ok(h, point.p);
      visit(point);
    }
  }
}

std::vector<IntegerConePoint> integer_points(const ConeSystem& k, const ParityCheckMatrix& h,
                                             const LatticeBounds& bounds) {
  std::vector<IntegerConePoint> out;
  for_each_integer_point(k, h, bounds, [&](const IntegerConePoint& p) { out.push_back(p); });
  return out;
}

NewtonReport check_newton_equivalence(const ConeSystem& k, const ParityCheckMatrix& h, const ZetaSeries& s,
                                      std::optional<std::uint16_t> max_exponent) {
  NewtonReport report;
  report.degree_bound = s.max_total_degree();
  report.max_exponent = max_exponent;
  const auto support = max_exponent ? support_exponents(s, *max_exponent) : support_exponents(s);
  report.support_count = support.size();
  const std::set<ExponentVector, GrlexLess> support_set(support.begin(), support.end());

  for (const auto& e : support) {
    std::vector<std::int64_t> w(e.values().begin(), e.values().end());
    if (!cone_contains(k, w).inside || !parity_ok(h, e)) report.outside_cone.push_back(e);
  }
  for_each_integer_point(k, h, {s.max_total_degree(), max_exponent}, [&](const IntegerConePoint& p) {
    if (!p.pseudo_codeword()) return;
    ++report.lattice_count;
    if (!support_set.count(p.p)) report.missing_from_support.push_back(p.p);
  });
  return report;
}

}  // namespace zetacone

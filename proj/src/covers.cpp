#include "zetacone/covers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <set>

#include "zetacone/error.hpp"
#include "zetacone/gf2.hpp"

namespace zetacone {

namespace {

// Uniform draw from [0, bound) by rejection; unlike
// std::uniform_int_distribution the sequence is identical on every platform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

gf2::BitMatrix to_bit_matrix(const ParityCheckMatrix& h) {
  gf2::BitMatrix m(h.num_rows(), h.num_cols());
  for (std::size_t j = 0; j < h.num_rows(); ++j)
    for (auto i : h.row_support(j)) m.row(j).set(i, true);
  return m;
}

}  // namespace

void validate_cover_spec(const ParityCheckMatrix& h, const CoverSpec& spec) {
  if (spec.degree == 0) throw ValidationError("cover degree must be at least 1");
  std::size_t expected = 0;
  for (std::size_t j = 0; j < h.num_rows(); ++j) {
    for (auto i : h.row_support(j)) {
      ++expected;
      auto it = spec.perms.find({j, i});
      if (it == spec.perms.end())
        throw ValidationError("cover spec lacks a permutation for (" + std::to_string(j + 1) + "," +
                              std::to_string(i + 1) + ")");
      const auto& p = it->second;
      std::vector<bool> hit(spec.degree, false);
      if (p.size() != spec.degree)
        throw ValidationError("permutation for (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                              ") has the wrong length");
      for (auto v : p) {
        if (v >= spec.degree || hit[v])
          throw ValidationError("permutation for (" + std::to_string(j + 1) + "," +
                                std::to_string(i + 1) + ") is not a bijection");
        hit[v] = true;
      }
    }
  }
  if (spec.perms.size() != expected) throw ValidationError("cover spec has keys outside the support of H");
}

CoverSpec identity_cover_spec(const ParityCheckMatrix& h, std::size_t degree) {
  CoverSpec spec{degree, {}};
  std::vector<std::size_t> id(degree);
  for (std::size_t m = 0; m < degree; ++m) id[m] = m;
  for (std::size_t j = 0; j < h.num_rows(); ++j)
    for (auto i : h.row_support(j)) spec.perms[{j, i}] = id;
  return spec;
}

CoverSpec random_cover_spec(const ParityCheckMatrix& h, std::size_t degree, std::uint64_t seed) {
  if (degree == 0) throw PreconditionError("cover degree must be at least 1");
  CoverSpec spec = identity_cover_spec(h, degree);
  std::mt19937_64 rng(seed);
  for (auto& [key, p] : spec.perms)
    for (std::size_t k = degree; k > 1; --k) std::swap(p[k - 1], p[draw_below(rng, k)]);
  return spec;
}

LiftedParityCheck build_cover(const ParityCheckMatrix& h, const CoverSpec& spec) {
  validate_cover_spec(h, spec);
  const std::size_t M = spec.degree;
  const std::size_t cols = h.num_cols() * M;
  std::vector<std::uint8_t> entries(h.num_rows() * M * cols, 0);
  for (const auto& [key, p] : spec.perms) {
    const auto [j, i] = key;
    for (std::size_t m = 0; m < M; ++m) entries[(j * M + m) * cols + i * M + p[m]] = 1;
  }
  return {h, spec, ParityCheckMatrix(h.num_rows() * M, cols, std::move(entries))};
}

std::size_t lifted_code_dimension(const LiftedParityCheck& l) {
  return l.lifted.num_cols() - gf2_rank(l.lifted);
}

std::vector<CoverCodeword> cover_codewords(const LiftedParityCheck& l, const CodewordSampling& how) {
  const auto basis = gf2::kernel_basis(to_bit_matrix(l.lifted));
  const std::size_t width = l.lifted.num_cols();
  std::vector<CoverCodeword> out;
  auto emit = [&](const gf2::BitVector& v) { out.push_back({l.spec.degree, v.to_bytes()}); };

  if (how.mode == CodewordSampling::Mode::enumerate) {
    if (basis.size() > kMaxEnumerationDimension)
      throw PreconditionError("lifted code has dimension " + std::to_string(basis.size()) +
                              " > " + std::to_string(kMaxEnumerationDimension) +
                              "; use sampling instead of enumeration");
    gf2::BitVector word(width);
    emit(word);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t t = 1; t < total; ++t) {
      word ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
      emit(word);
    }
    return out;
  }

  std::mt19937_64 rng(how.seed);
  for (std::size_t s = 0; s < how.count; ++s) {
    gf2::BitVector word(width);
    for (const auto& b : basis)
      if (rng() & 1u) word ^= b;
    emit(word);
  }
  return out;
}

bool satisfies_lifted_checks(const LiftedParityCheck& l, const CoverCodeword& c) {
  if (c.bits.size() != l.lifted.num_cols()) return false;
  for (std::size_t r = 0; r < l.lifted.num_rows(); ++r) {
    unsigned parity = 0;
    for (auto col : l.lifted.row_support(r)) parity ^= c.bits[col];
    if (parity) return false;
  }
  return true;
}

PseudoCodeword pseudo_codeword(const CoverCodeword& c, std::size_t num_bits) {
  if (c.degree == 0 || c.bits.size() != num_bits * c.degree)
    throw PreconditionError("cover codeword length does not match degree * n");
  PseudoCodeword w{c.degree, std::vector<std::uint64_t>(num_bits, 0)};
  for (std::size_t i = 0; i < num_bits; ++i)
    for (std::size_t m = 0; m < c.degree; ++m) w.unscaled[i] += c.bits[i * c.degree + m];
  return w;
}

// ---------------------------------------------------------------------------
// Cycle lifting

std::pair<std::size_t, std::size_t> lifted_edge_sheets(const NormalGraph& g, const CoverSpec& spec,
                                                       std::size_t edge, std::size_t copy) {
  auto [lo, hi] = g.edges[edge];
  if (lo > hi) std::swap(lo, hi);
  auto preimage = [&](std::size_t j) {
    const auto& p = spec.perms.at({j, edge});
    return static_cast<std::size_t>(std::find(p.begin(), p.end(), copy) - p.begin());
  };
  return {preimage(lo), preimage(hi)};
}

CycleLift lift_cycle(const NormalGraph& g, const DirectedEdgeSet& d, const CycleWord& walk) {
  if (!walk.closed(d)) throw PreconditionError("walk is not closed");
  if (!walk.backtrackless(d)) throw PreconditionError("walk backtracks");
  if (!walk.tailless(d)) throw PreconditionError("walk has a tail");
  const std::size_t len = walk.length();

  // Sheet of a visit = how many earlier visits the walk made to that vertex.
  // Distinct visits of one vertex land on distinct sheets, so the lift is
  // simple; a collision inside one edge's sheet map would need f followed by
  // reversal(f), which backtracklessness (and taillessness at the wrap) rule out.
  std::vector<std::size_t> visits(g.num_vertices, 0), sheet(len);
  std::size_t degree = 1;
  for (std::size_t s = 0; s < len; ++s) {
    sheet[s] = visits[d[walk.steps[s]].tail]++;
    degree = std::max(degree, visits[d[walk.steps[s]].tail]);
  }

  // tau[i][a] = sheet of the hi endpoint joined to sheet a of the lo endpoint.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> tau(g.num_edges(), std::vector<std::size_t>(degree, unset));
  std::vector<std::vector<std::size_t>> tau_inv = tau;
  CycleLift lift;
  for (std::size_t s = 0; s < len; ++s) {
    const auto& he = d[walk.steps[s]];
    auto [lo, hi] = g.edges[he.base_edge];
    if (lo > hi) std::swap(lo, hi);
    const std::size_t from = sheet[s], to = sheet[(s + 1) % len];
    const std::size_t a = he.tail == lo ? from : to;
    const std::size_t b = he.tail == lo ? to : from;
    auto& fwd = tau[he.base_edge];
    auto& bwd = tau_inv[he.base_edge];
    if ((fwd[a] != unset && fwd[a] != b) || (bwd[b] != unset && bwd[b] != a))
      throw InternalError("cycle lift produced a non-injective sheet map");
    fwd[a] = b;
    bwd[b] = a;
    lift.cycle.push_back({he.base_edge, a, he.tail, from, he.head, to});
  }

  lift.spec.degree = degree;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto& fwd = tau[i];
    auto& bwd = tau_inv[i];
    std::size_t next_free = 0;
    for (std::size_t a = 0; a < degree; ++a) {
      if (fwd[a] != unset) continue;
      while (bwd[next_free] != unset) ++next_free;
      fwd[a] = next_free;
      bwd[next_free] = a;
    }
    auto [lo, hi] = g.edges[i];
    if (lo > hi) std::swap(lo, hi);
    std::vector<std::size_t> id(degree);
    for (std::size_t a = 0; a < degree; ++a) id[a] = a;
    // Bit copy a meets lo copy a and hi copy tau(a): pi_lo = id, pi_hi = tau^-1.
    lift.spec.perms[{lo, i}] = id;
    lift.spec.perms[{hi, i}] = bwd;
  }
  return lift;
}

CoverCodeword lift_codeword(const NormalGraph& g, const CycleLift& lift) {
  CoverCodeword c{lift.spec.degree, std::vector<std::uint8_t>(g.num_edges() * lift.spec.degree, 0)};
  for (const auto& st : lift.cycle) c.bits[st.edge * lift.spec.degree + st.copy] ^= 1;
  return c;
}

LiftAudit audit_lift(const NormalGraph& g, const DirectedEdgeSet& d, const CycleWord& walk,
                     const CycleLift& lift) {
  LiftAudit audit;
  const auto& steps = lift.cycle;
  const ParityCheckMatrix h = incidence_matrix(g);
  try {
    validate_cover_spec(h, lift.spec);
  } catch (const ValidationError&) {
    return audit;
  }
  if (steps.empty()) return audit;

  audit.edges_exist = std::all_of(steps.begin(), steps.end(), [&](const LiftedStep& st) {
    if (st.edge >= g.num_edges() || st.copy >= lift.spec.degree) return false;
    auto [lo, hi] = g.edges[st.edge];
    if (lo > hi) std::swap(lo, hi);
    const auto [a, b] = lifted_edge_sheets(g, lift.spec, st.edge, st.copy);
    return (st.from_vertex == lo && st.from_sheet == a && st.to_vertex == hi && st.to_sheet == b) ||
           (st.from_vertex == hi && st.from_sheet == b && st.to_vertex == lo && st.to_sheet == a);
  });

  audit.closed = true;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& next = steps[(s + 1) % steps.size()];
    audit.closed &= steps[s].to_vertex == next.from_vertex && steps[s].to_sheet == next.from_sheet;
  }

  std::set<std::pair<std::size_t, std::size_t>> lifted_edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> incidences;
  for (const auto& st : steps) {
    lifted_edges.insert({st.edge, st.copy});
    ++incidences[{st.from_vertex, st.from_sheet}];
    ++incidences[{st.to_vertex, st.to_sheet}];
  }
  audit.simple = lifted_edges.size() == steps.size() &&
                 std::all_of(incidences.begin(), incidences.end(), [](const auto& kv) { return kv.second <= 2; });

  audit.projects = steps.size() == walk.length();
  for (std::size_t s = 0; audit.projects && s < steps.size(); ++s) {
    const auto& he = d[walk.steps[s]];
    audit.projects = steps[s].edge == he.base_edge && steps[s].from_vertex == he.tail &&
                     steps[s].to_vertex == he.head;
  }

  const auto cover = build_cover(h, lift.spec);
  const auto word = lift_codeword(g, lift);
  audit.is_codeword = satisfies_lifted_checks(cover, word);
  const auto usage = walk.edge_usage(d);
  const auto omega = pseudo_codeword(word, g.num_edges());
  audit.usage_matches = std::equal(usage.begin(), usage.end(), omega.unscaled.begin(), omega.unscaled.end());
  return audit;
}

}  // namespace zetacone

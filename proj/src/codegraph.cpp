#include "zetacone/codegraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "zetacone/error.hpp"
#include "zetacone/gf2.hpp"

namespace zetacone {

std::optional<MatrixFormat> parse_matrix_format(std::string_view name) {
  if (name == "dense") return MatrixFormat::dense;
  if (name == "alist") return MatrixFormat::alist;
  return std::nullopt;
}

ParityCheckMatrix::ParityCheckMatrix(std::size_t num_rows, std::size_t num_cols,
                                     std::vector<std::uint8_t> entries)
    : num_rows_(num_rows), num_cols_(num_cols), entries_(std::move(entries)) {
  if (num_rows_ == 0 || num_cols_ == 0) throw ValidationError("matrix must be non-empty");
  if (entries_.size() != num_rows_ * num_cols_)
    throw ValidationError("matrix entry count does not match its shape");
  row_support_.resize(num_rows_);
  col_support_.resize(num_cols_);
  for (std::size_t j = 0; j < num_rows_; ++j) {
    for (std::size_t i = 0; i < num_cols_; ++i) {
      const auto v = entries_[j * num_cols_ + i];
      if (v > 1) throw ValidationError("matrix entries must be 0 or 1");
      if (v == 1) {
        row_support_[j].push_back(i);
        col_support_[i].push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < num_cols_; ++i)
    if (col_support_[i].empty())
      throw ValidationError("column " + std::to_string(i + 1) + " is all zero");
}

std::size_t ParityCheckMatrix::num_ones() const noexcept {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), 1));
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty lines with their tokens; '#' starts a comment.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line out{number, {}};
    std::size_t k = 0;
    while (k < line.size()) {
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      std::size_t start = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      if (k > start) out.tokens.push_back(line.substr(start, k - start));
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  return v;
}

ParityCheckMatrix parse_dense(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty matrix");
  const std::size_t cols = lines.front().tokens.size();
  std::vector<std::uint8_t> entries;
  for (const auto& line : lines) {
    if (line.tokens.size() != cols)
      throw ParseError(line.number, "expected " + std::to_string(cols) + " entries, got " +
                                        std::to_string(line.tokens.size()));
    for (auto tok : line.tokens) {
      if (tok == "0")
        entries.push_back(0);
      else if (tok == "1")
        entries.push_back(1);
      else
        throw ParseError(line.number, "entry '" + std::string(tok) + "' is not 0 or 1");
    }
  }
  return ParityCheckMatrix(lines.size(), cols, std::move(entries));
}

ParityCheckMatrix parse_alist(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t at = 0;
  auto next_line = [&](std::size_t expected, const char* what) -> const Line& {
    if (at >= lines.size()) throw ParseError(0, std::string("unexpected end of input reading ") + what);
    const Line& l = lines[at++];
    if (expected != 0 && l.tokens.size() != expected)
      throw ParseError(l.number, std::string("expected ") + std::to_string(expected) +
                                     " values for " + what + ", got " +
                                     std::to_string(l.tokens.size()));
    return l;
  };

  const Line& dims = next_line(2, "header 'n m'");
  const std::size_t n = to_index(dims.tokens[0], dims.number);
  const std::size_t m = to_index(dims.tokens[1], dims.number);
  if (n == 0 || m == 0) throw ParseError(dims.number, "n and m must be positive");
  const Line& maxes = next_line(2, "maximum degrees");
  const std::size_t max_col = to_index(maxes.tokens[0], maxes.number);
  const std::size_t max_row = to_index(maxes.tokens[1], maxes.number);

  auto read_degrees = [&](std::size_t count, std::size_t cap, const char* what) {
    const Line& l = next_line(count, what);
    std::vector<std::size_t> deg;
    for (auto tok : l.tokens) {
      deg.push_back(to_index(tok, l.number));
      if (deg.back() > cap) throw ParseError(l.number, std::string(what) + " exceed the stated maximum");
    }
    return deg;
  };
  const auto col_deg = read_degrees(n, max_col, "column degrees");
  const auto row_deg = read_degrees(m, max_row, "row degrees");

  std::vector<std::uint8_t> entries(m * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& l = next_line(0, "column support");
    std::size_t seen = 0;
    for (auto tok : l.tokens) {
      const std::size_t j = to_index(tok, l.number);
      if (j == 0) continue;  // padding
      if (j > m) throw ParseError(l.number, "row index " + std::to_string(j) + " out of range");
      if (entries[(j - 1) * n + i]) throw ParseError(l.number, "repeated row index");
      entries[(j - 1) * n + i] = 1;
      ++seen;
    }
    if (seen != col_deg[i])
      throw ParseError(l.number, "column " + std::to_string(i + 1) + " lists " +
                                     std::to_string(seen) + " rows, degree says " +
                                     std::to_string(col_deg[i]));
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Line& l = next_line(0, "row support");
    std::size_t seen = 0;
    std::vector<bool> listed(n, false);
    for (auto tok : l.tokens) {
      const std::size_t i = to_index(tok, l.number);
      if (i == 0) continue;
      if (i > n) throw ParseError(l.number, "column index " + std::to_string(i) + " out of range");
      if (listed[i - 1]) throw ParseError(l.number, "repeated column index");
      listed[i - 1] = true;
      if (!entries[j * n + (i - 1)])
        throw ParseError(l.number, "row list disagrees with column lists at (" +
                                       std::to_string(j + 1) + "," + std::to_string(i) + ")");
      ++seen;
    }
    if (seen != row_deg[j])
      throw ParseError(l.number, "row " + std::to_string(j + 1) + " lists " +
                                     std::to_string(seen) + " columns, degree says " +
                                     std::to_string(row_deg[j]));
  }
  if (at != lines.size()) throw ParseError(lines[at].number, "trailing data after alist");
  return ParityCheckMatrix(m, n, std::move(entries));
}

}  // namespace

ParityCheckMatrix parse_parity_check(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::dense ? parse_dense(text) : parse_alist(text);
}

ParityCheckMatrix load_parity_check(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_parity_check(buf.str(), format);
}

MatrixFormat guess_format(const std::string& path) {
  constexpr std::string_view ext = ".alist";
  if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return MatrixFormat::alist;
  return MatrixFormat::dense;
}

std::string to_dense(const ParityCheckMatrix& h) {
  std::string out;
  for (std::size_t j = 0; j < h.num_rows(); ++j) {
    for (std::size_t i = 0; i < h.num_cols(); ++i) {
      if (i) out += ' ';
      out += h.at(j, i) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string to_alist(const ParityCheckMatrix& h) {
  std::size_t max_col = 0, max_row = 0;
  for (std::size_t i = 0; i < h.num_cols(); ++i) max_col = std::max(max_col, h.col_support(i).size());
  for (std::size_t j = 0; j < h.num_rows(); ++j) max_row = std::max(max_row, h.row_support(j).size());

  std::ostringstream out;
  out << h.num_cols() << ' ' << h.num_rows() << '\n' << max_col << ' ' << max_row << '\n';
  for (std::size_t i = 0; i < h.num_cols(); ++i) out << (i ? " " : "") << h.col_support(i).size();
  out << '\n';
  for (std::size_t j = 0; j < h.num_rows(); ++j) out << (j ? " " : "") << h.row_support(j).size();
  out << '\n';
  auto emit = [&](const std::vector<std::size_t>& support, std::size_t width) {
    for (std::size_t k = 0; k < width; ++k) {
      if (k) out << ' ';
      out << (k < support.size() ? support[k] + 1 : 0);
    }
    out << '\n';
  };
  for (std::size_t i = 0; i < h.num_cols(); ++i) emit(h.col_support(i), max_col);
  for (std::size_t j = 0; j < h.num_rows(); ++j) emit(h.row_support(j), max_row);
  return out.str();
}

std::size_t gf2_rank(const ParityCheckMatrix& h) {
  gf2::BitMatrix m(h.num_rows(), h.num_cols());
  for (std::size_t j = 0; j < h.num_rows(); ++j)
    for (auto i : h.row_support(j)) m.row(j).set(i, true);
  return gf2::rank(std::move(m));
}

bool is_cycle_code(const ParityCheckMatrix& h) {
  for (std::size_t i = 0; i < h.num_cols(); ++i)
    if (h.col_support(i).size() != 2) return false;
  return true;
}

TannerGraph build_tanner_graph(const ParityCheckMatrix& h) {
  TannerGraph t{h.num_cols(), h.num_rows(), {}};
  for (std::size_t j = 0; j < h.num_rows(); ++j)
    for (auto i : h.row_support(j)) t.edges.emplace_back(j, i);
  return t;
}

NormalGraph build_normal_graph(const ParityCheckMatrix& h, NormalGraphOptions options) {
  NormalGraph g;
  g.num_vertices = h.num_rows();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_bit;
  for (std::size_t i = 0; i < h.num_cols(); ++i) {
    const auto& js = h.col_support(i);
    if (js.size() != 2)
      throw ValidationError("not a cycle code: column " + std::to_string(i + 1) + " has weight " +
                            std::to_string(js.size()));
    // col_support is strictly increasing, so a column can never encode a self-loop.
    const std::pair<std::size_t, std::size_t> e{js[0], js[1]};
    if (auto [it, inserted] = first_bit.emplace(e, i); !inserted) {
      if (!options.allow_multigraph)
        throw ValidationError("columns " + std::to_string(it->second + 1) + " and " +
                              std::to_string(i + 1) +
                              " form parallel edges; pass --allow-multigraph to accept");
      g.multigraph = true;
    }
    g.edges.push_back(e);
  }
  return g;
}

ParityCheckMatrix incidence_matrix(const NormalGraph& g) {
  std::vector<std::uint8_t> entries(g.num_vertices * g.num_edges(), 0);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto [a, b] = g.edges[i];
    if (a == b) throw ValidationError("self-loops cannot be encoded in a parity-check matrix");
    entries[a * g.num_edges() + i] = 1;
    entries[b * g.num_edges() + i] = 1;
  }
  return ParityCheckMatrix(g.num_vertices, g.num_edges(), std::move(entries));
}

GraphStats graph_stats(const NormalGraph& g) {
  const std::size_t nv = g.num_vertices;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);  // (neighbor, edge)
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
    adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
  }

  GraphStats s;
  std::vector<std::size_t> comp(nv, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (comp[v] != nv) continue;
    std::vector<std::size_t> stack{v};
    comp[v] = s.num_components;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto [y, e] : adj[x])
        if (comp[y] == nv) comp[y] = s.num_components, stack.push_back(y);
    }
    ++s.num_components;
  }
  s.cycle_rank = g.num_edges() + s.num_components - nv;
  s.euler_characteristic = static_cast<std::int64_t>(nv) - static_cast<std::int64_t>(g.num_edges());

  // BFS from every root; a non-tree edge (x,y) closes a cycle of length
  // dist[x] + dist[y] + 1 through the root or shorter, and the minimum over
  // roots is exact.
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::optional<std::size_t> girth;
  for (std::size_t root = 0; root < nv; ++root) {
    std::vector<std::size_t> dist(nv, unseen), via(nv, unseen);
    std::queue<std::size_t> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto [y, e] : adj[x]) {
        if (e == via[x]) continue;
        if (dist[y] == unseen) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          q.push(y);
        } else {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (!girth || len < *girth) girth = len;
        }
      }
    }
  }
  s.girth = girth;
  return s;
}

}  // namespace zetacone

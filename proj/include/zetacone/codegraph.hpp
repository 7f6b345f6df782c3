#pragma once

// Parity-check matrices, Tanner graphs and normal graphs of cycle codes.
//
// Indices are 0-based in the API. Text formats and human-readable output use
// 1-based check/bit labels.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zetacone {

enum class MatrixFormat { dense, alist };

std::optional<MatrixFormat> parse_matrix_format(std::string_view name);

// Binary J x I matrix; rows are checks, columns are bits.
class ParityCheckMatrix {
 public:
  // `entries` is row-major with values 0/1. Throws ValidationError on a
  // non-binary entry, a size mismatch, or an all-zero column.
  ParityCheckMatrix(std::size_t num_rows, std::size_t num_cols, std::vector<std::uint8_t> entries);

  std::size_t num_rows() const noexcept { return num_rows_; }
  std::size_t num_cols() const noexcept { return num_cols_; }
  bool at(std::size_t j, std::size_t i) const { return entries_[j * num_cols_ + i] != 0; }

  // I_j: bits in check j, ascending.
  const std::vector<std::size_t>& row_support(std::size_t j) const { return row_support_[j]; }
  // J_i: checks on bit i, ascending.
  const std::vector<std::size_t>& col_support(std::size_t i) const { return col_support_[i]; }

  std::size_t num_ones() const noexcept;
  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const ParityCheckMatrix& a, const ParityCheckMatrix& b) {
    return a.num_rows_ == b.num_rows_ && a.num_cols_ == b.num_cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t num_rows_;
  std::size_t num_cols_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::vector<std::size_t>> row_support_;
  std::vector<std::vector<std::size_t>> col_support_;
};

ParityCheckMatrix parse_parity_check(std::string_view text, MatrixFormat format);
ParityCheckMatrix load_parity_check(const std::string& path, MatrixFormat format);
// Picks alist for *.alist paths, dense otherwise.
MatrixFormat guess_format(const std::string& path);

std::string to_dense(const ParityCheckMatrix& h);
std::string to_alist(const ParityCheckMatrix& h);

std::size_t gf2_rank(const ParityCheckMatrix& h);

// Every column has exactly two ones.
bool is_cycle_code(const ParityCheckMatrix& h);

struct TannerGraph {
  std::size_t num_bits = 0;
  std::size_t num_checks = 0;
  // (check j, bit i) for every one of H, row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

TannerGraph build_tanner_graph(const ParityCheckMatrix& h);

// Checks are vertices, bit i is the edge joining the two checks of J_i.
struct NormalGraph {
  std::size_t num_vertices = 0;
  // edges[i] = {lower check, higher check} of bit i.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool multigraph = false;  // true iff some pair of checks carries several bits

  std::size_t num_edges() const noexcept { return edges.size(); }
};

struct NormalGraphOptions {
  bool allow_multigraph = false;
};

// Throws ValidationError for a non-cycle column (naming it), and for parallel
// edges unless allow_multigraph is set.
NormalGraph build_normal_graph(const ParityCheckMatrix& h, NormalGraphOptions options = {});

// Incidence matrix of a loopless multigraph as a cycle-code parity check.
ParityCheckMatrix incidence_matrix(const NormalGraph& g);

struct GraphStats {
  std::optional<std::size_t> girth;  // nullopt = forest
  std::size_t num_components = 0;
  std::size_t cycle_rank = 0;             // |E| - |V| + components
  std::int64_t euler_characteristic = 0;  // |V| - |E|
};

GraphStats graph_stats(const NormalGraph& g);

}  // namespace zetacone

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geostream/geometry.hpp"
#include "geostream/streamkit.hpp"

namespace geostream {

inline constexpr int kDefaultOracleCap = 64;

class CapExceeded : public std::length_error {
 public:
  CapExceeded(std::size_t n, int cap);
};

/// Symmetric 0/1 matrix with a zero diagonal, one 64-bit row per vertex.
struct AdjacencyMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;
  std::optional<ObjectKind> kind;

  explicit AdjacencyMatrix(int n = 0, std::optional<ObjectKind> kind = std::nullopt);

  bool at(int u, int v) const { return (rows[u] >> v) & 1U; }
  void set_edge(int u, int v);
  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
  int edge_count() const;
  AdjacencyMatrix complement() const;

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

/// Throws CapExceeded above `cap` objects (cap is at most 64) and
/// std::invalid_argument on mixed kinds.
AdjacencyMatrix intersection_graph(const std::vector<Object>& objects, int cap = kDefaultOracleCap);
AdjacencyMatrix intersection_graph(const ObjectStream& stream, int cap = kDefaultOracleCap);

struct OracleResult {
  int size = 0;
  /// Lexicographically smallest sorted index set among the optimal ones.
  std::vector<int> witness;
};

/// α restricted to the vertex subset `mask` (all vertices by default).
int independence_number(const AdjacencyMatrix& g, std::optional<std::uint64_t> mask = std::nullopt);
int clique_number(const AdjacencyMatrix& g);

OracleResult max_independent_set(const AdjacencyMatrix& g);
OracleResult max_clique(const AdjacencyMatrix& g);
OracleResult max_independent_set(const ObjectStream& stream, int cap = kDefaultOracleCap);
OracleResult max_clique(const ObjectStream& stream, int cap = kDefaultOracleCap);

bool is_independent(const AdjacencyMatrix& g, const std::vector<int>& vertices);
bool is_clique(const AdjacencyMatrix& g, const std::vector<int>& vertices);

}  // namespace geostream

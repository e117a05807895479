#include "geostream/oracle.hpp"

#include <bit>
#include <string>

namespace geostream {

CapExceeded::CapExceeded(std::size_t n, int cap)
    : std::length_error("oracle cap exceeded: " + std::to_string(n) + " objects, cap " +
                        std::to_string(cap)) {}

AdjacencyMatrix::AdjacencyMatrix(int n, std::optional<ObjectKind> kind)
    : n(n), rows(n, 0), kind(kind) {
  if (n < 0 || n > 64) throw CapExceeded(static_cast<std::size_t>(n), 64);
}

void AdjacencyMatrix::set_edge(int u, int v) {
  if (u == v) return;
  rows[u] |= std::uint64_t{1} << v;
  rows[v] |= std::uint64_t{1} << u;
}

int AdjacencyMatrix::edge_count() const {
  int twice = 0;
  for (auto r : rows) twice += std::popcount(r);
  return twice / 2;
}

AdjacencyMatrix AdjacencyMatrix::complement() const {
  AdjacencyMatrix c(n, kind);
  for (int u = 0; u < n; ++u) c.rows[u] = ~rows[u] & all() & ~(std::uint64_t{1} << u);
  return c;
}

AdjacencyMatrix intersection_graph(const std::vector<Object>& objects, int cap) {
  if (cap > 64) cap = 64;
  if (static_cast<long>(objects.size()) > cap) throw CapExceeded(objects.size(), cap);
  std::optional<ObjectKind> kind;
  for (const auto& o : objects) {
    if (kind && *kind != kind_of(o)) {
      throw std::invalid_argument("intersection_graph needs objects of one kind");
    }
    kind = kind_of(o);
  }
  const int n = static_cast<int>(objects.size());
  AdjacencyMatrix g(n, kind);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (intersects(objects[u], objects[v])) g.set_edge(u, v);
    }
  }
  return g;
}

AdjacencyMatrix intersection_graph(const ObjectStream& stream, int cap) {
  return intersection_graph(stream.objects(), cap);
}

namespace {

using Mask = std::uint64_t;

int lowest(Mask m) { return std::countr_zero(m); }
Mask bit(int v) { return Mask{1} << v; }

/// Branch and bound for α on an induced subgraph.
class MisSolver {
 public:
  explicit MisSolver(const AdjacencyMatrix& g) : g_(g) {}

  int solve(Mask p) {
    best_ = greedy(p);
    search(p, 0);
    return best_;
  }

 private:
  int degree(int v, Mask p) const { return std::popcount(g_.rows[v] & p); }

  // Minimum-degree greedy; a valid lower bound.
  int greedy(Mask p) const {
    int size = 0;
    while (p) {
      int pick = -1, best_deg = 65;
      for (Mask m = p; m; m &= m - 1) {
        const int v = lowest(m);
        const int d = degree(v, p);
        if (d < best_deg) best_deg = d, pick = v;
      }
      ++size;
      p &= ~(g_.rows[pick] | bit(pick));
    }
    return size;
  }

  // Number of cliques in a greedy clique cover: an upper bound on α.
  int clique_cover(Mask p) const {
    int cliques = 0;
    while (p) {
      Mask cand = p;
      Mask clique = 0;
      while (cand) {
        const int v = lowest(cand);
        clique |= bit(v);
        cand &= g_.rows[v];
      }
      p &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void search(Mask p, int size) {
    // A vertex of degree 0 or 1 always belongs to some maximum independent set.
    bool reduced = true;
    while (reduced && p) {
      reduced = false;
      for (Mask m = p; m; m &= m - 1) {
        const int v = lowest(m);
        if (degree(v, p) <= 1) {
          ++size;
          p &= ~(g_.rows[v] | bit(v));
          reduced = true;
          break;
        }
      }
    }
    if (!p) {
      if (size > best_) best_ = size;
      return;
    }
    if (size + clique_cover(p) <= best_) return;

    int pivot = -1, max_deg = -1;
    for (Mask m = p; m; m &= m - 1) {
      const int v = lowest(m);
      const int d = degree(v, p);
      if (d > max_deg) max_deg = d, pivot = v;
    }
    search(p & ~(g_.rows[pivot] | bit(pivot)), size + 1);
    search(p & ~bit(pivot), size);
  }

  const AdjacencyMatrix& g_;
  int best_ = 0;
};

}  // namespace

int independence_number(const AdjacencyMatrix& g, std::optional<std::uint64_t> mask) {
  const Mask p = mask.value_or(g.all()) & g.all();
  if (!p) return 0;
  return MisSolver(g).solve(p);
}

int clique_number(const AdjacencyMatrix& g) { return independence_number(g.complement()); }

OracleResult max_independent_set(const AdjacencyMatrix& g) {
  OracleResult r;
  r.size = independence_number(g);
  // Fix vertices in index order whenever the optimum survives the choice.
  int need = r.size;
  Mask p = g.all();
  for (int v = 0; v < g.n && need > 0; ++v) {
    if (!(p & bit(v))) continue;
    // p only ever holds vertices >= v.
    const Mask later = p & ~(g.rows[v] | bit(v));
    if (1 + independence_number(g, later) == need) {
      r.witness.push_back(v);
      --need;
      p = later;
    } else {
      p &= ~bit(v);
    }
  }
  return r;
}

OracleResult max_clique(const AdjacencyMatrix& g) { return max_independent_set(g.complement()); }

OracleResult max_independent_set(const ObjectStream& stream, int cap) {
  return max_independent_set(intersection_graph(stream, cap));
}

OracleResult max_clique(const ObjectStream& stream, int cap) {
  return max_clique(intersection_graph(stream, cap));
}

bool is_independent(const AdjacencyMatrix& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || g.at(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

bool is_clique(const AdjacencyMatrix& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || !g.at(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

}  // namespace geostream

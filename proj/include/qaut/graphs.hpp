#pragma once

// Simple undirected graphs: incidence matrices, girth, vertex-automorphism
// search. Seed machinery for cycle codes.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaut/bitmat.hpp"

namespace qaut {

struct SimpleGraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v

  // Canonical form: edges sorted lexicographically.
  static SimpleGraph from_edges(std::size_t n,
                                std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  // Preserves the given edge order (used to reproduce fixed labelings).
  static SimpleGraph from_edges_keep_order(
      std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  // Columns of weight 2 become edges, in column order.
  static std::optional<SimpleGraph> from_incidence(const BitMatrix &m);

  std::size_t num_edges() const { return edges.size(); }
  std::optional<std::size_t> edge_index(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::size_t> degrees() const;
};

BitMatrix incidence_matrix(const SimpleGraph &g);
bool is_connected(const SimpleGraph &g);
std::optional<std::size_t> girth(const SimpleGraph &g);  // nullopt = acyclic

struct GraphAutomorphism {
  Permutation vertex_perm;
  Permutation edge_perm;  // induced relabeling: edge {u,v} -> edge {pi(u),pi(v)}
};

// Complete list via backtracking over vertex bijections with degree pruning.
// Throws if num_vertices > vertex_cap.
std::vector<GraphAutomorphism> graph_automorphisms(const SimpleGraph &g,
                                                   std::size_t vertex_cap = 12);

SimpleGraph complete(std::size_t n);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
SimpleGraph petersen();
SimpleGraph ring(std::size_t n);

// Text format: line 1 num_vertices, then "u v" per edge (0-indexed).
std::string write_graph(const SimpleGraph &g);
std::optional<SimpleGraph> read_graph(std::string_view text);

}  // namespace qaut

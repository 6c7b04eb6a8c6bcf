#include "qaut/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qaut {

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  for (auto &[u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    if (v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  return SimpleGraph{n, std::move(edges)};
}

SimpleGraph SimpleGraph::from_edges_keep_order(
    std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  for (auto &[u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    if (v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate edge");
  return SimpleGraph{n, std::move(edges)};
}

std::optional<SimpleGraph> SimpleGraph::from_incidence(const BitMatrix &m) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<std::uint32_t> ends;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.get(r, c)) ends.push_back(static_cast<std::uint32_t>(r));
    if (ends.size() != 2) return std::nullopt;
    edges.emplace_back(ends[0], ends[1]);
  }
  return from_edges_keep_order(m.rows(), std::move(edges));
}

std::optional<std::size_t> SimpleGraph::edge_index(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == u && edges[i].second == v) return i;
  return std::nullopt;
}

std::vector<std::size_t> SimpleGraph::degrees() const {
  std::vector<std::size_t> d(num_vertices, 0);
  for (const auto &[u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

BitMatrix incidence_matrix(const SimpleGraph &g) {
  BitMatrix m(g.num_vertices, g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    m.set(g.edges[e].first, e);
    m.set(g.edges[e].second, e);
  }
  return m;
}

namespace {
std::vector<std::vector<std::uint32_t>> adjacency(const SimpleGraph &g) {
  std::vector<std::vector<std::uint32_t>> adj(g.num_vertices);
  for (const auto &[u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}
}  // namespace

bool is_connected(const SimpleGraph &g) {
  if (g.num_vertices == 0) return true;
  const auto adj = adjacency(g);
  std::vector<bool> seen(g.num_vertices, false);
  std::deque<std::uint32_t> q{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push_back(v);
      }
  }
  return count == g.num_vertices;
}

std::optional<std::size_t> girth(const SimpleGraph &g) {
  const auto adj = adjacency(g);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.num_vertices);
  std::vector<std::uint32_t> parent(g.num_vertices);
  for (std::uint32_t root = 0; root < g.num_vertices; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[root] = 0;
    parent[root] = root;
    std::deque<std::uint32_t> q{root};
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto v : adj[u]) {
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u] && dist[v] >= dist[u]) {
          // non-tree edge; counted once from the earlier-popped endpoint
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::vector<GraphAutomorphism> graph_automorphisms(const SimpleGraph &g, std::size_t vertex_cap) {
  if (g.num_vertices > vertex_cap)
    throw std::invalid_argument("graph_automorphisms: vertex cap exceeded");
  const std::size_t n = g.num_vertices;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto &[u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  const auto deg = g.degrees();

  std::vector<GraphAutomorphism> out;
  std::vector<std::uint32_t> img(n, 0);
  std::vector<bool> used(n, false);

  auto emit = [&](const std::vector<std::uint32_t> &images) {
    auto vp = Permutation::from_images(images);
    std::vector<std::uint32_t> eimg(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto &[u, v] = g.edges[e];
      const auto idx = g.edge_index(vp(u), vp(v));
      if (!idx) return;  // not closed on edges; cannot happen for true automorphisms
      eimg[e] = static_cast<std::uint32_t>(*idx);
    }
    out.push_back(GraphAutomorphism{vp, Permutation::from_images(eimg)});
  };

  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == n) {
      emit(img);
      return;
    }
    for (std::uint32_t c = 0; c < n; ++c) {
      if (used[c] || deg[c] != deg[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (adj[i][j] != adj[c][img[j]]) ok = false;
      if (!ok) continue;
      used[c] = true;
      img[i] = c;
      self(self, i + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const GraphAutomorphism &a, const GraphAutomorphism &b) {
    return a.vertex_perm < b.vertex_perm;
  });
  return out;
}

SimpleGraph complete(std::size_t n) {
  if (n < 2) throw std::invalid_argument("complete: n >= 2 required");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(n, std::move(edges));
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite: empty side");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < a; ++u)
    for (std::uint32_t v = 0; v < b; ++v)
      edges.emplace_back(u, static_cast<std::uint32_t>(a + v));
  return SimpleGraph::from_edges(a + b, std::move(edges));
}

SimpleGraph petersen() {
  // Kneser graph K(5,2): vertices are 2-subsets of {0..4}, edges join
  // disjoint subsets.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> subsets;
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t x = 0; x < subsets.size(); ++x)
    for (std::uint32_t y = x + 1; y < subsets.size(); ++y) {
      const auto &[a, b] = subsets[x];
      const auto &[c, d] = subsets[y];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(x, y);
    }
  return SimpleGraph::from_edges(10, std::move(edges));
}

SimpleGraph ring(std::size_t n) {
  if (n < 3) throw std::invalid_argument("ring: n >= 3 required");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return SimpleGraph::from_edges(n, std::move(edges));
}

std::string write_graph(const SimpleGraph &g) {
  std::ostringstream os;
  os << g.num_vertices << '\n';
  for (const auto &[u, v] : g.edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::optional<SimpleGraph> read_graph(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::size_t n = 0;
  if (!(is >> n)) return std::nullopt;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t u, v;
  while (is >> u >> v) edges.emplace_back(u, v);
  try {
    return SimpleGraph::from_edges(n, std::move(edges));
  } catch (const std::invalid_argument &) {
    return std::nullopt;
  }
}

}  // namespace qaut

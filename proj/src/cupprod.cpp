#include "qaut/cupprod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaut {

bool leibniz_ok(const SimpleGraph &g, const Orientation &o) {
  if (o.dirs.size() != g.num_edges()) return false;
  std::vector<std::size_t> directed_at(g.num_vertices, 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (o.dirs[e] == EdgeDir::Free) continue;
    ++directed_at[g.edges[e].first];
    ++directed_at[g.edges[e].second];
  }
  for (auto d : directed_at)
    if (d % 2) return false;
  return true;
}

std::optional<Orientation> orient_from_codeword(const SimpleGraph &g, const BitVector &codeword) {
  if (codeword.size() != g.num_edges()) return std::nullopt;
  const auto support = codeword.support();
  if (support.empty()) return std::nullopt;
  // support must be a single closed cycle: every touched vertex has degree 2
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(g.num_vertices);
  for (auto e : support) {
    adj[g.edges[e].first].push_back({g.edges[e].second, e});
    adj[g.edges[e].second].push_back({g.edges[e].first, e});
  }
  std::uint32_t start = g.edges[support[0]].first;
  for (std::uint32_t v = 0; v < g.num_vertices; ++v)
    if (!adj[v].empty() && adj[v].size() != 2) return std::nullopt;

  Orientation o;
  o.dirs.assign(g.num_edges(), EdgeDir::Free);
  // traverse the cycle, directing each edge along the walk
  std::uint32_t cur = start;
  std::size_t prev_edge = g.num_edges();
  std::size_t visited = 0;
  do {
    const auto &nbrs = adj[cur];
    std::size_t pick = nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (nbrs[i].second != prev_edge && o.dirs[nbrs[i].second] == EdgeDir::Free) {
        pick = i;
        break;
      }
    if (pick == nbrs.size()) break;
    const auto [next, e] = nbrs[pick];
    o.dirs[e] = g.edges[e].first == cur ? EdgeDir::Forward : EdgeDir::Backward;
    prev_edge = e;
    cur = next;
    ++visited;
  } while (cur != start);
  if (visited != support.size() || cur != start) return std::nullopt;  // not one cycle
  return o;
}

std::pair<SimpleGraph, SimpleGraph> product_graphs(const ProductRecord &p) {
  if (p.kind != ProductKind::Hgp) throw std::invalid_argument("cup: hgp record required");
  auto g1 = SimpleGraph::from_incidence(p.c1->parity_check());
  auto g2 = SimpleGraph::from_incidence(p.c2->parity_check().transposed());
  if (!g1 || !g2)
    throw std::invalid_argument("cup: factors must be a cycle code and a transpose cycle code");
  return {*g1, *g2};
}

CzPairing czpairs(const ProductRecord &p, const Orientation &o1, const Orientation &o2) {
  const auto [g1, g2] = product_graphs(p);
  if (!leibniz_ok(g1, o1) || !leibniz_ok(g2, o2))
    throw std::invalid_argument("czpairs: orientation violates the Leibniz condition");
  const std::size_t n2 = g2.num_vertices;  // left grid columns
  const std::size_t m2 = g2.num_edges();   // right grid columns
  const std::size_t left_off = 0, right_off = g1.num_edges() * n2;

  auto tail1 = [&](std::size_t e) {
    return o1.dirs[e] == EdgeDir::Forward ? g1.edges[e].first : g1.edges[e].second;
  };
  auto head1 = [&](std::size_t e) {
    return o1.dirs[e] == EdgeDir::Forward ? g1.edges[e].second : g1.edges[e].first;
  };
  auto tail2 = [&](std::size_t f) {
    return o2.dirs[f] == EdgeDir::Forward ? g2.edges[f].first : g2.edges[f].second;
  };
  auto head2 = [&](std::size_t f) {
    return o2.dirs[f] == EdgeDir::Forward ? g2.edges[f].second : g2.edges[f].first;
  };

  CzPairing out;
  for (std::size_t e = 0; e < g1.num_edges(); ++e) {
    if (o1.dirs[e] == EdgeDir::Free) continue;
    for (std::size_t f = 0; f < g2.num_edges(); ++f) {
      if (o2.dirs[f] == EdgeDir::Free) continue;
      // left edge (e, v2) then right edge (u1, f): endpoint (head1(e), v2)
      // meets start (u1, tail2(f))
      out.pairs.push_back({left_off + e * n2 + tail2(f), right_off + head1(e) * m2 + f});
      // right edge (u1, f) then left edge (e, v2): endpoint (u1, head2(f))
      // meets start (tail1(e), v2)
      out.pairs.push_back({right_off + tail1(e) * m2 + f, left_off + e * n2 + head2(f)});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

CzVerifyReport verify_cz(const ProductRecord &p, const CzPairing &pairing) {
  CzVerifyReport r;
  const auto &code = p.code;
  const std::size_t n = code.n();
  BitMatrix m(n, n);
  for (const auto &[a, b] : pairing.pairs) m.set(a, b, !m.get(a, b));

  RowReducer z_space(n);
  z_space.add_rows(code.h_z);
  const auto mt = m.transposed();
  for (std::size_t row = 0; row < code.h_x.rows(); ++row) {
    const auto s = code.h_x.row(row);
    if (!z_space.contains(m.mul_row(s))) {
      // block-1 check picks up a Z pattern on block 2 outside the stabilizers
      std::ostringstream os;
      os << "X check " << row << " induces a non-stabilizer Z pattern on block 2";
      r.detail = os.str();
      return r;
    }
    if (!z_space.contains(mt.mul_row(s))) {
      std::ostringstream os;
      os << "X check " << row << " induces a non-stabilizer Z pattern on block 1";
      r.detail = os.str();
      return r;
    }
  }

  const auto kept = p.kept_basis();
  const std::size_t k = kept.k();
  // coefficient of G_Z[l'] in a ker-H_X vector y is the pairing y . G_X[l']^T
  BitMatrix adj(k, k);
  for (std::size_t l = 0; l < k; ++l) {
    const auto y = m.mul_row(kept.g_x.row(l));  // Z pattern on block 2
    if (!code.h_x.mul_vec(y).is_zero()) {
      r.detail = "logical-induced pattern anticommutes with X checks";
      return r;
    }
    for (std::size_t l2 = 0; l2 < k; ++l2) {
      std::size_t dot = 0;
      for (auto s : kept.g_x.row(l2).support()) dot ^= y.get(s);
      if (dot) adj.set(l, l2);
    }
  }
  // cross-check: conjugating block-2 logicals gives the transpose
  BitMatrix adj_t(k, k);
  for (std::size_t l2 = 0; l2 < k; ++l2) {
    const auto y = mt.mul_row(kept.g_x.row(l2));  // Z pattern on block 1
    for (std::size_t l = 0; l < k; ++l) {
      std::size_t dot = 0;
      for (auto s : kept.g_x.row(l).support()) dot ^= y.get(s);
      if (dot) adj_t.set(l2, l);
    }
  }
  if (adj_t != adj.transposed()) {
    r.detail = "CZ adjacency not symmetric between blocks";
    return r;
  }
  r.adjacency = std::move(adj);
  r.ok = true;
  return r;
}

std::string write_orientation(const Orientation &o) {
  std::string s;
  for (auto d : o.dirs) {
    s.push_back(d == EdgeDir::Free ? '.' : (d == EdgeDir::Forward ? 'f' : 'b'));
    s.push_back('\n');
  }
  return s;
}

std::optional<Orientation> read_orientation(std::string_view text) {
  Orientation o;
  for (char c : text) {
    if (c == 'f')
      o.dirs.push_back(EdgeDir::Forward);
    else if (c == 'b')
      o.dirs.push_back(EdgeDir::Backward);
    else if (c == '.')
      o.dirs.push_back(EdgeDir::Free);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      return std::nullopt;
  }
  return o;
}

}  // namespace qaut

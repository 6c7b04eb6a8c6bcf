#include "qaut/automorph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace qaut {

namespace {

BitMatrix permuted_cols(const BitMatrix &m, const Permutation &sigma) {
  return m * sigma.as_matrix();
}

}  // namespace

std::optional<Permutation> tanner_witness(const BitMatrix &h, const Permutation &sigma) {
  const auto hs = permuted_cols(h, sigma);
  // match rows of hs to equal rows of h; within an equality class any
  // bijection works, so pair ascending indices (lowest-index tie-break)
  std::map<BitVector, std::vector<std::size_t>> h_rows, hs_rows;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    h_rows[h.row(r)].push_back(r);
    hs_rows[hs.row(r)].push_back(r);
  }
  if (h_rows.size() != hs_rows.size()) return std::nullopt;
  std::vector<std::uint32_t> rho(h.rows());  // hs row i content-matches h row rho(i)
  for (auto &[content, idx] : hs_rows) {
    auto it = h_rows.find(content);
    if (it == h_rows.end() || it->second.size() != idx.size()) return std::nullopt;
    for (std::size_t i = 0; i < idx.size(); ++i)
      rho[idx[i]] = static_cast<std::uint32_t>(it->second[i]);
  }
  // W = as_matrix(pi) with pi = rho^{-1}: (W h)[i] = h[rho(i)] = hs[i]
  return Permutation::from_images(std::move(rho)).inverse();
}

std::optional<CodeAutomorphism> check_automorphism(const ClassicalCode &c,
                                                   const Permutation &sigma) {
  if (sigma.size() != c.length()) throw std::invalid_argument("sigma size mismatch");
  const auto &g = c.generator();
  const auto gs = permuted_cols(g, sigma);
  auto v = solve_left(g, gs);
  if (!v) return std::nullopt;
  const auto &h = c.parity_check();
  CodeAutomorphism out;
  out.sigma = sigma;
  out.v = std::move(*v);
  if (auto wp = tanner_witness(h, sigma)) {
    out.w = wp->as_matrix();
    out.tanner = true;
  } else {
    auto w = solve_left(h, permuted_cols(h, sigma));
    if (!w) return std::nullopt;  // cannot happen when the codespace is preserved
    out.w = std::move(*w);
    out.tanner = false;
  }
  return out;
}

bool is_tanner(const ClassicalCode &c, const CodeAutomorphism &aut) {
  return tanner_witness(c.parity_check(), aut.sigma).has_value();
}

namespace {

struct ColumnProfiles {
  std::vector<std::uint64_t> col_class;                 // per-column invariant
  std::vector<std::vector<std::uint64_t>> pair_class;   // per-pair invariant
  bool usable = false;
};

std::uint64_t fnv(const std::vector<std::uint32_t> &xs) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : xs) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

ColumnProfiles column_profiles(const ClassicalCode &c) {
  ColumnProfiles p;
  const std::size_t k = c.dim();
  const std::size_t n = c.length();
  if (k == 0 || k > 20) return p;
  const auto &g = c.generator();
  // weight histogram per column and per column pair over all codewords
  std::vector<std::vector<std::uint32_t>> single(n, std::vector<std::uint32_t>(n + 1, 0));
  std::vector<std::vector<std::vector<std::uint32_t>>> pair(
      n, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n + 1, 0)));
  BitVector cur(n);
  const std::uint64_t total = std::uint64_t(1) << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= g.row(static_cast<std::size_t>(std::countr_zero(i)));
    const auto sup = cur.support();
    const auto w = sup.size();
    for (std::size_t a = 0; a < sup.size(); ++a) {
      ++single[sup[a]][w];
      for (std::size_t b = a + 1; b < sup.size(); ++b) {
        ++pair[sup[a]][sup[b]][w];
        ++pair[sup[b]][sup[a]][w];
      }
    }
  }
  p.col_class.resize(n);
  p.pair_class.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) p.col_class[j] = fnv(single[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.pair_class[i][j] = fnv(pair[i][j]);
  p.usable = true;
  return p;
}

}  // namespace

AutomorphismGroup enumerate_automorphisms(const ClassicalCode &c, std::size_t n_cap) {
  const std::size_t n = c.length();
  if (n > n_cap) throw std::invalid_argument("enumerate_automorphisms: n cap exceeded");
  const auto prof = column_profiles(c);
  const auto &g = c.generator();
  RowReducer codespace(n);
  codespace.add_rows(g);

  AutomorphismGroup out;
  out.complete = true;
  std::vector<std::uint32_t> img(n, 0);
  std::vector<bool> used(n, false);

  auto leaf = [&](const std::vector<std::uint32_t> &images) {
    auto sigma = Permutation::from_images(images);
    // fast rowspace test before building the full element
    const auto gs = g * sigma.as_matrix();
    for (std::size_t r = 0; r < gs.rows(); ++r)
      if (!codespace.contains(gs.row(r))) return;
    if (auto aut = check_automorphism(c, sigma)) out.elements.push_back(std::move(*aut));
  };

  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == n) {
      leaf(img);
      return;
    }
    for (std::uint32_t q = 0; q < n; ++q) {
      if (used[q]) continue;
      if (prof.usable) {
        if (prof.col_class[q] != prof.col_class[i]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          if (prof.pair_class[i][j] != prof.pair_class[q][img[j]]) ok = false;
        if (!ok) continue;
      }
      used[q] = true;
      img[i] = q;
      self(self, i + 1);
      used[q] = false;
    }
  };
  rec(rec, 0);

  std::sort(out.elements.begin(), out.elements.end(),
            [](const CodeAutomorphism &a, const CodeAutomorphism &b) { return a.sigma < b.sigma; });
  return out;
}

AutomorphismGroup close_group(const ClassicalCode &c, const std::vector<Permutation> &gens,
                              std::size_t order_cap) {
  std::vector<Permutation> checked;
  for (const auto &p : gens) {
    if (!check_automorphism(c, p)) throw std::invalid_argument("close_group: not an automorphism");
    checked.push_back(p);
  }
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation(c.length())};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto cur = queue[head];
    for (const auto &gp : checked) {
      auto nxt = cur.compose(gp);
      if (seen.insert(nxt).second) {
        if (seen.size() > order_cap) throw std::runtime_error("close_group: order cap exceeded");
        queue.push_back(std::move(nxt));
      }
    }
  }
  AutomorphismGroup out;
  out.complete = false;
  for (const auto &p : seen) out.elements.push_back(*check_automorphism(c, p));
  return out;
}

LogicalGroupInfo logical_group(const AutomorphismGroup &g) {
  LogicalGroupInfo info;
  std::set<std::string> vs;
  for (const auto &a : g.elements) {
    vs.insert(a.v.to_string());
    if (a.v.is_identity()) ++info.kernel_size;
  }
  for (const auto &a : g.elements)
    if (vs.erase(a.v.to_string())) info.v_images.push_back(a.v);
  return info;
}

std::size_t tanner_count(const AutomorphismGroup &g) {
  std::size_t n = 0;
  for (const auto &a : g.elements)
    if (a.tanner) ++n;
  return n;
}

AffineReport affine_check(const AutomorphismGroup &g) {
  AffineReport r;
  for (const auto &a : g.elements) {
    ++r.checked;
    if (inverse(a.v)) ++r.invertible;
  }
  r.ok = r.checked == r.invertible;
  return r;
}

DualBoundReport dual_bound_check(const ClassicalCode &c, const AutomorphismGroup &g) {
  DualBoundReport r;
  r.n_aut = g.elements.size();
  std::set<std::string> vs, ws;
  for (const auto &a : g.elements) {
    vs.insert(a.v.to_string());
    ws.insert(a.w.to_string());
  }
  r.n_v = vs.size();
  r.n_w = ws.size();
  r.distance_ge3 = c.distance().value >= 3;
  r.dual_distance_ge3 = r.distance_ge3 && c.dual_distance().value >= 3;
  r.w_injective = r.n_w == r.n_aut;
  r.ok = true;
  if (r.distance_ge3 && !r.w_injective) r.ok = false;
  if (r.dual_distance_ge3 && !(r.n_v == r.n_aut && r.n_w == r.n_aut)) r.ok = false;
  return r;
}

std::vector<ElementaryStep> hamming_decompose(const BitMatrix &w) {
  if (w.rows() != w.cols() || !inverse(w)) throw std::invalid_argument("singular matrix");
  const std::size_t n = w.rows();
  BitMatrix m = w;
  std::vector<ElementaryStep> steps;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !m.get(piv, c)) ++piv;
    if (piv != c) {
      m.swap_rows(piv, c);
      steps.push_back({ElementaryStep::Kind::Swap, piv, c});
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && m.get(r, c)) {
        m.xor_row_into(c, r);
        steps.push_back({ElementaryStep::Kind::Add, c, r});
      }
    }
  }
  return steps;
}

BitMatrix replay_steps(const std::vector<ElementaryStep> &steps, std::size_t n) {
  BitMatrix acc = BitMatrix::identity(n);
  for (const auto &s : steps) {
    BitMatrix e = BitMatrix::identity(n);
    if (s.kind == ElementaryStep::Kind::Swap) {
      e.set(s.a, s.a, false);
      e.set(s.b, s.b, false);
      e.set(s.a, s.b);
      e.set(s.b, s.a);
    } else {
      e.set(s.b, s.a);  // row b += row a
    }
    acc = acc * e;
  }
  return acc;
}

}  // namespace qaut

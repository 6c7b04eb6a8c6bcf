#include "qaut/classical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace qaut {

ClassicalCode::ClassicalCode(BitMatrix h) : h_(std::move(h)) {}

ClassicalCode ClassicalCode::with_generator(BitMatrix h, BitMatrix g) {
  ClassicalCode c(std::move(h));
  if (g.cols() != c.h_.cols()) throw std::invalid_argument("generator length mismatch");
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (!c.h_.mul_vec(g.row(r)).is_zero())
      throw std::invalid_argument("generator row outside ker H");
  if (rank(g) != g.rows()) throw std::invalid_argument("generator not full row rank");
  if (g.rows() != c.dim()) throw std::invalid_argument("generator row count != k");
  c.g_ = std::move(g);
  return c;
}

const BitMatrix &ClassicalCode::generator() const {
  if (!g_) g_ = kernel_basis(h_);
  return *g_;
}

std::size_t ClassicalCode::check_rank() const {
  if (!rank_) rank_ = rank(h_);
  return *rank_;
}

std::size_t ClassicalCode::dim() const { return length() - check_rank(); }

namespace {

// Exact minimum weight of the nonzero row space of `gen` via Gray-code
// enumeration; gen must have independent rows.
std::size_t min_weight_exact(const BitMatrix &gen) {
  const std::size_t k = gen.rows();
  assert(k > 0 && k < 64);
  BitVector cur(gen.cols());
  std::size_t best = gen.cols() + 1;
  const std::uint64_t total = std::uint64_t(1) << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= gen.row(static_cast<std::size_t>(std::countr_zero(i)));
    best = std::min(best, cur.weight());
  }
  return best;
}

// Ascending-weight search for a nonzero kernel element of h; exact if found.
DistanceResult bounded_kernel_search(const BitMatrix &h, std::size_t cap) {
  const std::size_t n = h.cols();
  std::vector<BitVector> cols(n);
  const auto ht = h.transposed();
  for (std::size_t j = 0; j < n; ++j) cols[j] = ht.row(j);
  std::vector<std::size_t> idx;
  BitVector syn(h.rows());
  auto rec = [&](auto &&self, std::size_t start, std::size_t left) -> bool {
    if (left == 0) return syn.is_zero();
    for (std::size_t j = start; j + left <= n; ++j) {
      syn ^= cols[j];
      if (self(self, j + 1, left - 1)) return true;
      syn ^= cols[j];
    }
    return false;
  };
  for (std::size_t w = 1; w <= cap; ++w)
    if (rec(rec, 0, w)) return {w, true};
  return {cap + 1, false};
}

}  // namespace

DistanceResult ClassicalCode::distance(std::size_t weight_cap,
                                       std::size_t enum_budget_log2) const {
  const std::size_t k = dim();
  if (k == 0) return {length() + 1, true};  // no nonzero codewords
  if (k <= enum_budget_log2 && k < 64) return {min_weight_exact(generator()), true};
  return bounded_kernel_search(h_, weight_cap);
}

DistanceResult ClassicalCode::dual_distance(std::size_t weight_cap,
                                            std::size_t enum_budget_log2) const {
  const auto rr = rref(h_);
  if (rr.rank == 0) return {length() + 1, true};
  if (rr.rank <= enum_budget_log2 && rr.rank < 64) {
    BitMatrix basis(rr.rank, h_.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) basis.set_row(i, rr.r.row(i));
    return {min_weight_exact(basis), true};
  }
  // dual codewords are the kernel of generator()
  return bounded_kernel_search(generator(), weight_cap);
}

std::optional<std::vector<std::size_t>> ClassicalCode::systematic_columns() const {
  const auto &g = generator();
  std::vector<std::size_t> cols(g.rows(), length());
  const auto gt = g.transposed();
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const auto col = gt.row(c);
    if (col.weight() != 1) continue;
    const std::size_t r = col.support()[0];
    if (cols[r] == length()) cols[r] = c;
  }
  for (auto c : cols)
    if (c == length()) return std::nullopt;
  return cols;
}

ClassicalCode cycle_code(const SimpleGraph &g) {
  if (!is_connected(g)) throw std::invalid_argument("cycle_code: disconnected graph");
  return ClassicalCode(incidence_matrix(g));
}

ClassicalCode repetition_code(std::size_t n) {
  if (n < 1) throw std::invalid_argument("repetition_code: n >= 1");
  BitMatrix h(n == 1 ? 0 : n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h.set(i, i);
    h.set(i, i + 1);
  }
  return ClassicalCode(std::move(h));
}

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order; ++b)
    if (cayley[a][b] == identity) return b;
  throw std::logic_error("group element without inverse");
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = a + 1; b < order; ++b)
      if (cayley[a][b] != cayley[b][a]) return false;
  return true;
}

void FiniteGroup::validate() const {
  if (cayley.size() != order) throw std::invalid_argument("cayley size");
  for (const auto &row : cayley)
    if (row.size() != order) throw std::invalid_argument("cayley row size");
  for (std::uint32_t a = 0; a < order; ++a) {
    if (cayley[identity][a] != a || cayley[a][identity] != a)
      throw std::invalid_argument("identity fails");
    std::vector<bool> seen_r(order, false), seen_c(order, false);
    for (std::uint32_t b = 0; b < order; ++b) {
      if (seen_r[cayley[a][b]] || seen_c[cayley[b][a]])
        throw std::invalid_argument("cayley not a latin square");
      seen_r[cayley[a][b]] = seen_c[cayley[b][a]] = true;
    }
  }
  if (order <= 24) {
    for (std::uint32_t a = 0; a < order; ++a)
      for (std::uint32_t b = 0; b < order; ++b)
        for (std::uint32_t c = 0; c < order; ++c)
          if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
            throw std::invalid_argument("not associative");
  }
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1");
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.cayley.assign(n, std::vector<std::uint32_t>(n));
  g.labels.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    g.labels[a] = a == 0 ? "1" : (a == 1 ? "x" : "x" + std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b)
      g.cayley[a][b] = static_cast<std::uint32_t>((a + b) % n);
  }
  g.validate();
  return g;
}

FiniteGroup dihedral_group(std::size_t ell) {
  if (ell < 3) throw std::invalid_argument("dihedral_group: ell >= 3");
  // elements: r^a for a in [0,ell), then s r^a; relations r^ell = s^2 = (rs)^2 = 1
  const auto l = static_cast<std::uint32_t>(ell);
  FiniteGroup g;
  g.order = 2 * ell;
  g.identity = 0;
  g.cayley.assign(g.order, std::vector<std::uint32_t>(g.order));
  g.labels.resize(g.order);
  auto enc = [&](bool s, std::uint32_t a) { return (s ? l : 0) + a; };
  for (std::uint32_t a = 0; a < l; ++a) {
    g.labels[enc(false, a)] = a == 0 ? "1" : (a == 1 ? "r" : "r" + std::to_string(a));
    g.labels[enc(true, a)] = a == 0 ? "s" : (a == 1 ? "sr" : "sr" + std::to_string(a));
  }
  // (s^p r^a)(s^q r^b) = s^{p+q} r^{b + (-1)^q a}   using r^a s = s r^{-a}
  for (std::uint32_t x = 0; x < g.order; ++x) {
    const bool sp = x >= l;
    const std::uint32_t a = x % l;
    for (std::uint32_t y = 0; y < g.order; ++y) {
      const bool sq = y >= l;
      const std::uint32_t b = y % l;
      const std::uint32_t aa = sq ? (l - a) % l : a;
      g.cayley[x][y] = enc(sp ^ sq, (aa + b) % l);
    }
  }
  g.validate();
  return g;
}

Permutation regular_representation(const FiniteGroup &g, std::uint32_t elem, Side side) {
  if (elem >= g.order) throw std::invalid_argument("element out of range");
  std::vector<std::uint32_t> img(g.order);
  for (std::uint32_t x = 0; x < g.order; ++x)
    img[x] = side == Side::Left ? g.mult(elem, x) : g.mult(x, elem);
  return Permutation::from_images(std::move(img));
}

ClassicalCode group_algebra_code(const GroupAlgebraElement &a) {
  if (a.support.empty()) throw std::invalid_argument("group_algebra_code: empty support");
  const std::size_t n = a.group.order;
  BitMatrix h(n, n);
  for (auto e : a.support) {
    const auto l = regular_representation(a.group, e, Side::Left).as_matrix();
    h = h + l;
  }
  return ClassicalCode(std::move(h));
}

ClassicalCode dihedral_algebra_code(std::size_t ell, const std::vector<DihedralTerm> &terms) {
  if (terms.empty()) throw std::invalid_argument("dihedral_algebra_code: empty support");
  const auto g = dihedral_group(ell);
  const auto l = static_cast<std::uint32_t>(ell);
  BitMatrix h(g.order, g.order);
  for (const auto &t : terms) {
    const std::uint32_t left = t.s ? l : 0;
    const auto a = static_cast<std::uint32_t>(
        (t.r_exp % static_cast<int>(ell) + static_cast<int>(ell)) % static_cast<int>(ell));
    BitMatrix m(g.order, g.order);
    for (std::uint32_t x = 0; x < g.order; ++x) m.set(g.mult(g.mult(left, x), a), x);
    h = h + m;
  }
  return ClassicalCode(std::move(h));
}

std::vector<Permutation> dihedral_tanner_generators(std::size_t ell) {
  const auto g = dihedral_group(ell);
  const auto l = static_cast<std::uint32_t>(ell);
  std::vector<std::uint32_t> rot(g.order), refl(g.order);
  for (std::uint32_t x = 0; x < g.order; ++x) {
    rot[x] = g.mult(x, 1);   // x -> x r
    refl[x] = g.mult(l, x);  // x -> s x
  }
  return {Permutation::from_images(std::move(rot)), Permutation::from_images(std::move(refl))};
}

BitMatrix circulant(const std::vector<std::uint32_t> &exponents, std::size_t ell) {
  // B(x^s) = P^s with P[i][j] = 1 iff i = j+1 mod ell
  BitMatrix m(ell, ell);
  for (auto s : exponents)
    for (std::size_t j = 0; j < ell; ++j) m.set((j + s) % ell, j, !m.get((j + s) % ell, j));
  return m;
}

ClassicalCode lifted_code(const BitMatrix &h0,
                          const std::vector<std::vector<std::vector<std::uint32_t>>> &shifts,
                          std::size_t ell) {
  if (shifts.size() != h0.rows()) throw std::invalid_argument("lifted_code: shape mismatch");
  for (const auto &row : shifts)
    if (row.size() != h0.cols()) throw std::invalid_argument("lifted_code: shape mismatch");
  BitMatrix h(h0.rows() * ell, h0.cols() * ell);
  for (std::size_t i = 0; i < h0.rows(); ++i) {
    for (std::size_t j = 0; j < h0.cols(); ++j) {
      if (!h0.get(i, j)) continue;
      const auto block = circulant(shifts[i][j], ell);
      for (std::size_t a = 0; a < ell; ++a)
        for (std::size_t b = 0; b < ell; ++b)
          if (block.get(a, b)) h.set(i * ell + a, j * ell + b);
    }
  }
  return ClassicalCode(std::move(h));
}

ClassicalCode hamming(std::size_t r) {
  if (r < 2) throw std::invalid_argument("hamming: r >= 2");
  const std::size_t n = (std::size_t(1) << r) - 1;
  // standard form: unit columns (powers of two) first, then the rest ascending;
  // bit i of the column value sits in row i
  std::vector<std::size_t> vals;
  for (std::size_t i = 0; i < r; ++i) vals.push_back(std::size_t(1) << i);
  for (std::size_t v = 1; v <= n; ++v)
    if ((v & (v - 1)) != 0) vals.push_back(v);
  BitMatrix h(r, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < r; ++i)
      if ((vals[c] >> i) & 1) h.set(i, c);
  return ClassicalCode(std::move(h));
}

ClassicalCode simplex(std::size_t r) {
  if (r < 2) throw std::invalid_argument("simplex: r >= 2");
  if (r == 3) return group_algebra_code({cyclic_group(7), {0, 1, 3}});   // 1 + x + x^3
  if (r == 4) return group_algebra_code({cyclic_group(15), {0, 1, 4}});  // 1 + x + x^4
  // dual-of-Hamming form: parity checks are the Hamming generator rows
  const auto ham = hamming(r);
  return ClassicalCode(ham.generator());
}

namespace {
// Eval of the monomial prod_{i in vars} x_i at all 2^m points, ascending
// binary order with x_1 as the most significant bit.
BitVector eval_monomial(const std::vector<std::size_t> &vars, std::size_t m) {
  const std::size_t n = std::size_t(1) << m;
  BitVector v(n);
  for (std::size_t p = 0; p < n; ++p) {
    bool val = true;
    for (auto i : vars)
      if (((p >> (m - 1 - i)) & 1) == 0) {
        val = false;
        break;
      }
    if (val) v.set(p);
  }
  return v;
}

void monomials_upto(std::size_t r, std::size_t m, std::vector<std::vector<std::size_t>> &out) {
  // degree-ascending, lexicographic within a degree
  out.push_back({});
  std::vector<std::size_t> cur;
  auto rec = [&](auto &&self, std::size_t start, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + left <= m + 0 && i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1, left - 1);
      cur.pop_back();
    }
  };
  for (std::size_t d = 1; d <= r; ++d) rec(rec, 0, d);
}
}  // namespace

ClassicalCode reed_muller(std::size_t r, std::size_t m) {
  if (r > m) throw std::invalid_argument("reed_muller: r <= m required");
  std::vector<std::vector<std::size_t>> mons;
  monomials_upto(r, m, mons);
  const std::size_t n = std::size_t(1) << m;
  BitMatrix g(mons.size(), n);
  for (std::size_t i = 0; i < mons.size(); ++i) g.set_row(i, eval_monomial(mons[i], m));
  BitMatrix h = kernel_basis(g);
  return ClassicalCode::with_generator(std::move(h), std::move(g));
}

ClassicalCode punctured_rm(std::size_t r, std::size_t m) {
  if (r > m || r == 0) throw std::invalid_argument("punctured_rm: 1 <= r <= m required");
  const auto rm = reed_muller(r, m);
  const auto &g = rm.generator();
  std::vector<std::size_t> cols;
  for (std::size_t c = 1; c < g.cols(); ++c) cols.push_back(c);  // drop point 0...0
  BitMatrix gp = g.select_cols(cols);
  if (r == 1) {
    // drop the all-ones row (Eval(1)); the rest generate the simplex code
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i < gp.rows(); ++i) keep.push_back(i);
    gp = gp.select_rows(keep);
  }
  BitMatrix h = kernel_basis(gp);
  return ClassicalCode::with_generator(std::move(h), std::move(gp));
}

BitMatrix all_dual_codewords_check_matrix(const ClassicalCode &c) {
  const std::size_t m = c.check_rank();
  if (m > 20) throw std::invalid_argument("all_dual_codewords: n-k too large");
  if (m == 0) return BitMatrix(0, c.length());
  const auto rr = rref(c.parity_check());
  BitMatrix out((std::size_t(1) << m) - 1, c.length());
  BitVector cur(c.length());
  for (std::uint64_t i = 1; i < (std::uint64_t(1) << m); ++i) {
    cur ^= rr.r.row(static_cast<std::size_t>(std::countr_zero(i)));
    out.set_row(i - 1, cur);
  }
  return out;
}

}  // namespace qaut

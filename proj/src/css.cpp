#include "qaut/css.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qaut {

std::size_t SectorLayout::total() const {
  std::size_t t = 0;
  for (const auto &s : sectors) t += s.size;
  return t;
}

const Sector *SectorLayout::find(const std::string &name) const {
  for (const auto &s : sectors)
    if (s.name == name) return &s;
  return nullptr;
}

SectorLayout SectorLayout::single(std::size_t n) {
  return SectorLayout{{Sector{"Q", 0, n, 1, n}}};
}

std::size_t num_logicals(const CssCode &c) {
  return c.n() - rank(c.h_x) - rank(c.h_z);
}

CssValidation validate(const CssCode &c) {
  CssValidation r;
  std::ostringstream bad;
  const std::size_t n = c.n();
  if (c.h_z.cols() != n) {
    r.detail = "H_X/H_Z column mismatch";
    return r;
  }
  const auto comm = c.h_x * c.h_z.transposed();
  if (!comm.is_zero()) {
    for (std::size_t i = 0; i < comm.rows() && bad.str().empty(); ++i)
      for (std::size_t j = 0; j < comm.cols(); ++j)
        if (comm.get(i, j)) {
          bad << "X check " << i << " anticommutes with Z check " << j;
          break;
        }
    r.detail = bad.str();
    return r;
  }
  if (c.m_x && !(*c.m_x * c.h_x).is_zero()) {
    r.detail = "M_X . H_X != 0";
    return r;
  }
  if (c.m_z && !(*c.m_z * c.h_z).is_zero()) {
    r.detail = "M_Z . H_Z != 0";
    return r;
  }
  if (c.layout.total() != n) {
    r.detail = "sector layout does not partition the qubits";
    return r;
  }
  for (const auto &s : c.layout.sectors)
    if (s.grid_rows * s.grid_cols != s.size) {
      r.detail = "sector grid shape mismatch";
      return r;
    }
  if (c.basis) {
    const auto &b = *c.basis;
    if (b.k() != num_logicals(c)) {
      r.detail = "basis row count != k";
      return r;
    }
    if (!(c.h_z * b.g_x.transposed()).is_zero() || !(c.h_x * b.g_z.transposed()).is_zero()) {
      r.detail = "basis rows do not commute with stabilizers";
      return r;
    }
    if (!symplectic_check(b)) {
      r.detail = "basis not symplectic";
      return r;
    }
    // no combination of basis rows lies in the stabilizer row space
    RowReducer red_x(n), red_z(n);
    red_x.add_rows(c.h_x);
    red_z.add_rows(c.h_z);
    const std::size_t rx = red_x.rank(), rz = red_z.rank();
    red_x.add_rows(b.g_x);
    red_z.add_rows(b.g_z);
    if (red_x.rank() != rx + b.k() || red_z.rank() != rz + b.k()) {
      r.detail = "basis rows not independent modulo stabilizers";
      return r;
    }
  }
  for (std::size_t i = 0; i < c.h_x.rows(); ++i)
    r.max_x_check_weight = std::max(r.max_x_check_weight, c.h_x.row_weight(i));
  for (std::size_t i = 0; i < c.h_z.rows(); ++i)
    r.max_z_check_weight = std::max(r.max_z_check_weight, c.h_z.row_weight(i));
  r.x_participation.resize(n);
  r.z_participation.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    r.x_participation[j] = c.h_x.col_weight(j);
    r.z_participation[j] = c.h_z.col_weight(j);
  }
  r.ok = true;
  return r;
}

bool symplectic_check(const LogicalBasis &b) {
  if (b.g_x.rows() != b.g_z.rows() || b.g_x.cols() != b.g_z.cols()) return false;
  return (b.g_x * b.g_z.transposed()).is_identity();
}

LogicalBasis derive_basis(const CssCode &c) {
  const std::size_t n = c.n();
  const std::size_t k = num_logicals(c);
  // X side: extend rs(h_x) by vectors of ker h_z
  RowReducer stab_x(n);
  stab_x.add_rows(c.h_x);
  std::vector<BitVector> xs;
  const auto ker_z = kernel_basis(c.h_z);
  for (std::size_t r = 0; r < ker_z.rows() && xs.size() < k; ++r) {
    if (stab_x.add(ker_z.row(r))) xs.push_back(ker_z.row(r));
  }
  RowReducer stab_z(n);
  stab_z.add_rows(c.h_z);
  std::vector<BitVector> zs;
  const auto ker_x = kernel_basis(c.h_x);
  for (std::size_t r = 0; r < ker_x.rows() && zs.size() < k; ++r) {
    if (stab_z.add(ker_x.row(r))) zs.push_back(ker_x.row(r));
  }
  if (xs.size() != k || zs.size() != k) throw std::logic_error("derive_basis: rank trouble");
  LogicalBasis b{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)};
  // pair: make G_X G_Z^T the identity
  const auto p = b.g_x * b.g_z.transposed();
  const auto pinv = inverse(p);
  if (!pinv) throw std::logic_error("derive_basis: degenerate pairing");
  b.g_x = *pinv * b.g_x;
  return b;
}

namespace {

WeightSearchResult min_logical_weight(const BitMatrix &stab_ker,   // kernel constraint
                                      const BitMatrix &stab_rs,    // quotient row space
                                      const std::optional<BitMatrix> &basis_rows,
                                      std::size_t cap, std::size_t workers) {
  const std::size_t n = stab_ker.cols();
  WeightSearchResult out;
  if (basis_rows) {
    std::size_t best = n + 1;
    for (std::size_t r = 0; r < basis_rows->rows(); ++r)
      best = std::min(best, basis_rows->row_weight(r));
    if (basis_rows->rows() > 0) out.basis_upper = best;
  }
  const auto cols = stab_ker.transposed();
  RowReducer rs(n);
  rs.add_rows(stab_rs);

  // ascending weight; within a weight, scan first-index chunks (parallelizable
  // with a deterministic min-reduction, as every hit at weight w is equivalent)
  for (std::size_t w = 1; w <= cap; ++w) {
    // each chunk scans to completion so the reported witness is the
    // lexicographically first hit regardless of scheduling
    std::vector<std::optional<BitVector>> hits(std::max<std::size_t>(workers, 1));
    auto scan_range = [&](std::size_t tid, std::size_t lo, std::size_t hi) {
      BitVector syn(stab_ker.rows());
      BitVector vec(n);
      auto rec = [&](auto &&self, std::size_t start, std::size_t left) -> bool {
        if (left == 0) return syn.is_zero() && !rs.contains(vec);
        for (std::size_t j = start; j + left <= n; ++j) {
          syn ^= cols.row(j);
          vec.set(j);
          if (self(self, j + 1, left - 1)) return true;
          vec.set(j, false);
          syn ^= cols.row(j);
        }
        return false;
      };
      for (std::size_t first = lo; first < hi; ++first) {
        if (first + w > n) break;
        syn = cols.row(first);
        vec = BitVector(n);
        vec.set(first);
        if (rec(rec, first + 1, w - 1)) {
          hits[tid] = vec;
          return;
        }
      }
    };
    const std::size_t nw = std::max<std::size_t>(workers, 1);
    if (nw <= 1) {
      scan_range(0, 0, n);
    } else {
      std::vector<std::thread> threads;
      const std::size_t chunk = (n + nw - 1) / nw;
      for (std::size_t t = 0; t < nw; ++t)
        threads.emplace_back(scan_range, t, t * chunk, std::min(n, (t + 1) * chunk));
      for (auto &th : threads) th.join();
    }
    for (auto &h : hits)
      if (h) {
        out.weight = w;
        out.exact = true;
        out.witness = *h;
        return out;
      }
  }
  out.weight = cap + 1;
  out.exact = false;
  return out;
}

}  // namespace

WeightSearchResult distance_x(const CssCode &c, std::size_t weight_cap, std::size_t workers) {
  std::optional<BitMatrix> rows;
  if (c.basis) rows = c.basis->g_x;
  return min_logical_weight(c.h_z, c.h_x, rows, weight_cap, workers);
}

WeightSearchResult distance_z(const CssCode &c, std::size_t weight_cap, std::size_t workers) {
  std::optional<BitMatrix> rows;
  if (c.basis) rows = c.basis->g_z;
  return min_logical_weight(c.h_x, c.h_z, rows, weight_cap, workers);
}

void ChainComplex::validate_chain() const {
  if (maps.size() + 1 != dims.size()) throw std::invalid_argument("chain shape");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1])
      throw std::invalid_argument("chain map shape");
    if (i + 1 < maps.size() && !(maps[i + 1] * maps[i]).is_zero())
      throw std::invalid_argument("consecutive boundary maps do not compose to zero");
  }
}

std::vector<std::size_t> ChainComplex::homology_ranks() const {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t rank_out = i < maps.size() ? rank(maps[i]) : 0;
    const std::size_t rank_in = i > 0 ? rank(maps[i - 1]) : 0;
    out[i] = dims[i] - rank_out - rank_in;
  }
  return out;
}

ChainComplex tensor_product(const ChainComplex &a, const ChainComplex &b) {
  a.validate_chain();
  b.validate_chain();
  const std::size_t pa = a.dims.size(), pb = b.dims.size();
  ChainComplex c;
  c.dims.assign(pa + pb - 1, 0);
  // summand (i, j) at position i + j; summands ordered by ascending i
  std::vector<std::vector<std::size_t>> offset(pa, std::vector<std::size_t>(pb, 0));
  for (std::size_t t = 0; t < c.dims.size(); ++t) {
    for (std::size_t i = 0; i < pa; ++i) {
      const std::size_t j = t - i;
      if (i > t || j >= pb) continue;
      offset[i][j] = c.dims[t];
      c.dims[t] += a.dims[i] * b.dims[j];
    }
  }
  for (std::size_t t = 0; t + 1 < c.dims.size(); ++t) {
    BitMatrix m(c.dims[t + 1], c.dims[t]);
    for (std::size_t i = 0; i < pa; ++i) {
      const std::size_t j = t - i;
      if (i > t || j >= pb) continue;
      // component (i,j) -> (i+1,j): a.maps[i] x I
      if (i + 1 < pa) {
        const auto blk = kron(a.maps[i], BitMatrix::identity(b.dims[j]));
        for (std::size_t r = 0; r < blk.rows(); ++r)
          for (std::size_t col = 0; col < blk.cols(); ++col)
            if (blk.get(r, col)) m.set(offset[i + 1][j] + r, offset[i][j] + col);
      }
      // component (i,j) -> (i,j+1): I x b.maps[j]
      if (j + 1 < pb) {
        const auto blk = kron(BitMatrix::identity(a.dims[i]), b.maps[j]);
        for (std::size_t r = 0; r < blk.rows(); ++r)
          for (std::size_t col = 0; col < blk.cols(); ++col)
            if (blk.get(r, col)) m.set(offset[i][j + 1] + r, offset[i][j] + col);
      }
    }
    c.maps.push_back(std::move(m));
  }
  c.validate_chain();
  return c;
}

CssCode css_from_chain(const ChainComplex &cc, std::size_t qubit_index) {
  cc.validate_chain();
  if (qubit_index == 0 || qubit_index + 1 >= cc.dims.size())
    throw std::invalid_argument("css_from_chain: qubit index needs neighbors on both sides");
  CssCode c;
  c.h_z = cc.maps[qubit_index - 1].transposed();
  c.h_x = cc.maps[qubit_index];
  if (qubit_index >= 2) c.m_z = cc.maps[qubit_index - 2].transposed();
  if (qubit_index + 2 < cc.dims.size()) c.m_x = cc.maps[qubit_index + 1];
  c.layout = SectorLayout::single(c.n());
  return c;
}

}  // namespace qaut

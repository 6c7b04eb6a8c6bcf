#include "qaut/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qaut {

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw std::invalid_argument("BitVector::from_string: bad char");
  }
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
  BitVector v(len);
  v.set(i);
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto x : w_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVector::is_zero() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t wi = 0; wi < w_.size(); ++wi) {
    std::uint64_t x = w_[wi];
    while (x) {
      s.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return s;
}

BitVector &BitVector::operator^=(const BitVector &o) {
  assert(len_ == o.len_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVector::operator<(const BitVector &o) const {
  if (len_ != o.len_) return len_ < o.len_;
  return w_ < o.w_;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
  if (rows.empty()) return BitMatrix(0, 0);
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (rows[r][c] == '1') m.set(r, c);
  }
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> v;
  v.reserve(rows.size());
  for (auto s : rows) v.emplace_back(s);
  return from_strings(v);
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector> &rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy(w_.begin() + static_cast<std::ptrdiff_t>(r * wpr_),
            w_.begin() + static_cast<std::ptrdiff_t>((r + 1) * wpr_), v.words());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector &v) {
  assert(v.size() == cols_);
  std::copy(v.words(), v.words() + wpr_, w_.begin() + static_cast<std::ptrdiff_t>(r * wpr_));
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  auto *s = row_words(src);
  auto *d = row_words(dst);
  for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::xor_into_row(std::size_t dst, const BitVector &v) {
  auto *d = row_words(dst);
  for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= v.words()[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto *pa = row_words(a);
  auto *pb = row_words(b);
  for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  const auto *p = row_words(r);
  for (std::size_t i = 0; i < wpr_; ++i) w += static_cast<std::size_t>(std::popcount(p[i]));
  return w;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
  return w;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto *p = row_words(r);
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
      std::uint64_t x = p[wi];
      while (x) {
        const std::size_t c = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
        t.set(c, r);
        x &= x - 1;
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix &o) const {
  assert(cols_ == o.rows_);
  BitMatrix c(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto *p = row_words(r);
    auto *out = c.row_words(r);
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
      std::uint64_t x = p[wi];
      while (x) {
        const std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
        const auto *bk = o.row_words(k);
        for (std::size_t j = 0; j < o.wpr_; ++j) out[j] ^= bk[j];
        x &= x - 1;
      }
    }
  }
  return c;
}

BitVector BitMatrix::mul_vec(const BitVector &x) const {
  assert(x.size() == cols_);
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto *p = row_words(r);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < wpr_; ++i) acc ^= p[i] & x.words()[i];
    if (std::popcount(acc) & 1) y.set(r);
  }
  return y;
}

BitVector BitMatrix::mul_row(const BitVector &x) const {
  assert(x.size() == rows_);
  BitVector y(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!x.get(r)) continue;
    const auto *p = row_words(r);
    for (std::size_t i = 0; i < wpr_; ++i) y.words()[i] ^= p[i];
  }
  return y;
}

BitMatrix BitMatrix::operator+(const BitMatrix &o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  BitMatrix c = *this;
  for (std::size_t i = 0; i < w_.size(); ++i) c.w_[i] ^= o.w_[i];
  return c;
}

bool BitMatrix::operator==(const BitMatrix &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
}

bool BitMatrix::is_zero() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

bool BitMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

bool BitMatrix::is_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<bool> seen(cols_, false);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_weight(r) != 1) return false;
    const auto sup = row(r).support();
    if (seen[sup[0]]) return false;
    seen[sup[0]] = true;
  }
  return true;
}

BitMatrix BitMatrix::stacked(const BitMatrix &o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  assert(cols_ == o.cols_);
  BitMatrix m(rows_ + o.rows_, cols_);
  std::copy(w_.begin(), w_.end(), m.w_.begin());
  std::copy(o.w_.begin(), o.w_.end(), m.w_.begin() + static_cast<std::ptrdiff_t>(rows_ * wpr_));
  return m;
}

BitMatrix BitMatrix::beside(const BitMatrix &o) const {
  if (cols_ == 0) return o;
  if (o.cols_ == 0) return *this;
  assert(rows_ == o.rows_);
  BitMatrix m(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) m.set(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c)
      if (o.get(r, c)) m.set(r, cols_ + c);
  }
  return m;
}

BitMatrix BitMatrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                               std::size_t c1) const {
  BitMatrix m(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c)
      if (get(r, c)) m.set(r - r0, c - c0);
  return m;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t> &idx) const {
  BitMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) m.set_row(i, row(idx[i]));
  return m;
}

BitMatrix BitMatrix::select_cols(const std::vector<std::size_t> &idx) const {
  BitMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (get(r, idx[i])) m.set(r, i);
  return m;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

BitMatrix kron(const BitMatrix &a, const BitMatrix &b) {
  BitMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      for (std::size_t j = 0; j < b.rows(); ++j) {
        const auto *src = b.row_words(j);
        for (std::size_t wi = 0; wi < b.words_per_row(); ++wi) {
          std::uint64_t x = src[wi];
          while (x) {
            const std::size_t l = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
            m.set(i * b.rows() + j, k * b.cols() + l);
            x &= x - 1;
          }
        }
      }
    }
  }
  return m;
}

BitMatrix direct_sum(const std::vector<BitMatrix> &blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto &b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  BitMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b.get(r, c)) m.set(r0 + r, c0 + c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Rref rref(const BitMatrix &m, bool want_ops) {
  Rref out;
  out.r = m;
  if (want_ops) out.ops = BitMatrix::identity(m.rows());
  std::vector<std::size_t> row_origin(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) row_origin[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && !out.r.get(piv, c)) ++piv;
    if (piv == m.rows()) continue;
    out.r.swap_rows(piv, r);
    std::swap(row_origin[piv], row_origin[r]);
    if (want_ops) out.ops.swap_rows(piv, r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && out.r.get(i, c)) {
        out.r.xor_row_into(r, i);
        if (want_ops) out.ops.xor_row_into(r, i);
      }
    }
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(row_origin[r]);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const BitMatrix &m) { return rref(m).rank; }

std::vector<std::size_t> free_columns(const BitMatrix &m) {
  const auto rr = rref(m);
  std::vector<std::size_t> free;
  std::size_t p = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  return free;
}

BitMatrix kernel_basis(const BitMatrix &m) {
  const auto rr = rref(m);
  std::vector<std::size_t> free;
  std::vector<std::ptrdiff_t> pivot_at(m.cols(), -1);
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    pivot_at[rr.pivot_cols[i]] = static_cast<std::ptrdiff_t>(i);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (pivot_at[c] < 0) free.push_back(c);

  BitMatrix basis(free.size(), m.cols());
  for (std::size_t i = 0; i < free.size(); ++i) {
    basis.set(i, free[i]);
    for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
      if (rr.r.get(p, free[i])) basis.set(i, rr.pivot_cols[p]);
  }
  return basis;
}

bool row_space_contains(const BitMatrix &m, const BitVector &v) {
  if (v.size() != m.cols()) throw std::invalid_argument("row_space_contains: dim mismatch");
  RowReducer red(m.cols());
  red.add_rows(m);
  return red.contains(v);
}

std::optional<BitMatrix> right_inverse(const BitMatrix &m) {
  const auto rr = rref(m, true);
  if (rr.rank < m.rows()) return std::nullopt;
  BitMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (rr.ops.get(i, j)) r.set(rr.pivot_cols[i], j);
  return r;
}

std::optional<BitMatrix> solve_right(const BitMatrix &a, const BitMatrix &b) {
  assert(a.rows() == b.rows());
  const auto rr = rref(a, true);
  BitMatrix x(a.cols(), b.cols());
  // e = ops * b; consistency requires zero rows of rref(a) to meet zero rows of e.
  const BitMatrix e = rr.ops * b;
  for (std::size_t i = rr.rank; i < a.rows(); ++i)
    if (e.row_weight(i) != 0) return std::nullopt;
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (e.get(i, j)) x.set(rr.pivot_cols[i], j);
  return x;
}

std::optional<BitMatrix> solve_left(const BitMatrix &h, const BitMatrix &m) {
  auto xt = solve_right(h.transposed(), m.transposed());
  if (!xt) return std::nullopt;
  return xt->transposed();
}

std::optional<BitMatrix> inverse(const BitMatrix &m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const auto rr = rref(m, true);
  if (rr.rank < m.rows()) return std::nullopt;
  return rr.ops;
}

bool RowReducer::add(BitVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const auto sup = v.support();
  lead_.push_back(sup[0]);
  basis_.push_back(std::move(v));
  return true;
}

void RowReducer::add_rows(const BitMatrix &m) {
  for (std::size_t r = 0; r < m.rows(); ++r) add(m.row(r));
}

BitVector RowReducer::reduce(BitVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(lead_[i])) v ^= basis_[i];
  return v;
}

Permutation::Permutation(std::size_t n) : img_(n) {
  for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<std::uint32_t>(i);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

std::optional<Permutation> Permutation::parse_cycles(std::string_view s, std::size_t n) {
  Permutation p(n);
  std::size_t i = 0;
  const bool digits_split = n < 10;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') return std::nullopt;
    ++i;
    std::vector<std::size_t> cyc;
    std::string tok;
    while (i < s.size() && s[i] != ')') {
      const char ch = s[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok.push_back(ch);
        if (digits_split) {
          cyc.push_back(static_cast<std::size_t>(std::stoul(tok)));
          tok.clear();
        }
      } else if (ch == ' ' || ch == ',') {
        if (!tok.empty()) {
          cyc.push_back(static_cast<std::size_t>(std::stoul(tok)));
          tok.clear();
        }
      } else {
        return std::nullopt;
      }
      ++i;
    }
    if (i == s.size()) return std::nullopt;
    ++i;  // ')'
    if (!tok.empty()) cyc.push_back(static_cast<std::size_t>(std::stoul(tok)));
    if (cyc.size() < 2) continue;
    for (auto v : cyc)
      if (v == 0 || v > n) return std::nullopt;
    for (std::size_t j = 0; j < cyc.size(); ++j)
      p.img_[cyc[j] - 1] = static_cast<std::uint32_t>(cyc[(j + 1) % cyc.size()] - 1);
  }
  std::vector<bool> seen(n, false);
  for (auto v : p.img_) {
    if (seen[v]) return std::nullopt;
    seen[v] = true;
  }
  return p;
}

std::optional<Permutation> Permutation::from_matrix(const BitMatrix &m) {
  if (!m.is_permutation()) return std::nullopt;
  std::vector<std::uint32_t> img(m.cols());
  // m[i][j] = 1 iff i = pi(j)
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.get(i, j)) img[j] = static_cast<std::uint32_t>(i);
  return from_images(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation &o) const {
  assert(size() == o.size());
  std::vector<std::uint32_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = img_[o.img_[i]];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[img_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

BitMatrix Permutation::as_matrix() const {
  BitMatrix m(size(), size());
  for (std::size_t j = 0; j < size(); ++j) m.set(img_[j], j);
  return m;
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> done(size(), false);
  std::string out;
  const bool compact = size() < 10;
  for (std::size_t i = 0; i < size(); ++i) {
    if (done[i] || img_[i] == i) {
      done[i] = true;
      continue;
    }
    out.push_back('(');
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first && !compact) out.push_back(' ');
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out.push_back(')');
  }
  if (out.empty()) out = "()";
  return out;
}

std::string write_f2m(const BitMatrix &m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n' << m.to_string();
  return os.str();
}

std::optional<BitMatrix> read_f2m(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) return std::nullopt;
  BitMatrix m(rows, cols);
  std::string line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!(is >> line) || line.size() != cols) return std::nullopt;
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == '1')
        m.set(r, c);
      else if (line[c] != '0')
        return std::nullopt;
    }
  }
  return m;
}

}  // namespace qaut

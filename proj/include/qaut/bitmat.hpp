#pragma once

// Dense bit-packed linear algebra over F2. Matrices are immutable by
// convention: every operation returns a new value, mutation is confined to
// construction helpers. Row-major, 64-bit words.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaut {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), w_(words_for(len), 0) {}
  static BitVector from_string(std::string_view s);
  static BitVector unit(std::size_t len, std::size_t i);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  std::size_t weight() const;
  bool is_zero() const;
  std::vector<std::size_t> support() const;

  BitVector &operator^=(const BitVector &o);
  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
  bool operator==(const BitVector &o) const { return len_ == o.len_ && w_ == o.w_; }
  bool operator!=(const BitVector &o) const { return !(*this == o); }
  bool operator<(const BitVector &o) const;  // for sorted containers

  std::string to_string() const;

  const std::uint64_t *words() const { return w_.data(); }
  std::uint64_t *words() { return w_.data(); }
  std::size_t num_words() const { return w_.size(); }

  static std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(BitVector::words_for(cols)), w_(rows * wpr_, 0) {}
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(const std::vector<std::string> &rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_rows(const std::vector<BitVector> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    const std::uint64_t m = std::uint64_t(1) << (c & 63);
    if (v)
      w_[r * wpr_ + (c >> 6)] |= m;
    else
      w_[r * wpr_ + (c >> 6)] &= ~m;
  }

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector &v);
  void xor_row_into(std::size_t src, std::size_t dst);  // row dst ^= row src
  void xor_into_row(std::size_t dst, const BitVector &v);
  void swap_rows(std::size_t a, std::size_t b);

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;

  BitMatrix transposed() const;
  BitMatrix operator*(const BitMatrix &o) const;
  BitVector mul_vec(const BitVector &x) const;        // M x (x as column)
  BitVector mul_row(const BitVector &x) const;        // x M (x as row)
  BitMatrix operator+(const BitMatrix &o) const;      // XOR
  bool operator==(const BitMatrix &o) const;
  bool operator!=(const BitMatrix &o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_permutation() const;

  // Rows of `o` appended below this matrix.
  BitMatrix stacked(const BitMatrix &o) const;
  // Columns of `o` appended to the right.
  BitMatrix beside(const BitMatrix &o) const;
  BitMatrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  BitMatrix select_rows(const std::vector<std::size_t> &idx) const;
  BitMatrix select_cols(const std::vector<std::size_t> &idx) const;

  std::string to_string() const;  // rows of 0/1, newline separated

  const std::uint64_t *row_words(std::size_t r) const { return w_.data() + r * wpr_; }
  std::uint64_t *row_words(std::size_t r) { return w_.data() + r * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

BitMatrix kron(const BitMatrix &a, const BitMatrix &b);
BitMatrix direct_sum(const std::vector<BitMatrix> &blocks);

struct Rref {
  BitMatrix r;                        // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // ascending
  std::vector<std::size_t> pivot_rows;  // original row index carrying each pivot
  BitMatrix ops;                      // ops * input == r (only if requested)
  std::size_t rank = 0;
};
Rref rref(const BitMatrix &m, bool want_ops = false);

std::size_t rank(const BitMatrix &m);
std::vector<std::size_t> free_columns(const BitMatrix &m);  // non-pivot columns, ascending

// Rows form a basis of {x : M x = 0}; row i has a 1 in the i-th free column of
// M and 0 in every other free column (RREF back-substitution form).
BitMatrix kernel_basis(const BitMatrix &m);

bool row_space_contains(const BitMatrix &m, const BitVector &v);

// R with M R = I, pivot columns chosen leftmost-first; nullopt if row-deficient.
std::optional<BitMatrix> right_inverse(const BitMatrix &m);
// X with A X = B; free coefficients zero. nullopt if inconsistent.
std::optional<BitMatrix> solve_right(const BitMatrix &a, const BitMatrix &b);
// W with W H = M; each row of M expressed over the leftmost-first pivot row
// set of H, non-pivot coefficients zero. nullopt if some row is outside rs(H).
std::optional<BitMatrix> solve_left(const BitMatrix &h, const BitMatrix &m);
std::optional<BitMatrix> inverse(const BitMatrix &m);

// Incremental row-space membership: feed rows, then reduce/query.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}
  // Adds v to the basis if independent; returns true if it enlarged the space.
  bool add(BitVector v);
  void add_rows(const BitMatrix &m);
  // Residual of v after reduction (zero iff contained).
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector &v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<BitVector> basis_;       // each with a distinct leading bit
  std::vector<std::size_t> lead_;      // leading bit of basis_[i]
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);  // identity
  static Permutation from_images(std::vector<std::uint32_t> images);
  // 1-indexed cycle notation, e.g. "(15)(34)" or "(1 5)(3 4)".
  static std::optional<Permutation> parse_cycles(std::string_view s, std::size_t n);
  static std::optional<Permutation> from_matrix(const BitMatrix &m);

  std::size_t size() const { return img_.size(); }
  std::uint32_t operator()(std::size_t i) const { return img_[i]; }
  bool is_identity() const;

  Permutation compose(const Permutation &o) const;  // (this ∘ o)(x) = this(o(x))
  Permutation inverse() const;
  // M with M[i][j] = 1 iff i = pi(j); so M e_j = e_{pi(j)} and
  // as_matrix(pi ∘ rho) = as_matrix(pi) * as_matrix(rho).
  BitMatrix as_matrix() const;

  bool operator==(const Permutation &o) const { return img_ == o.img_; }
  bool operator!=(const Permutation &o) const { return !(*this == o); }
  bool operator<(const Permutation &o) const { return img_ < o.img_; }

  std::string to_cycle_string() const;  // 1-indexed

 private:
  std::vector<std::uint32_t> img_;
};

// Text matrix format "f2m": first line "rows cols", then rows lines of 0/1.
std::string write_f2m(const BitMatrix &m);
std::optional<BitMatrix> read_f2m(std::string_view text);

}  // namespace qaut

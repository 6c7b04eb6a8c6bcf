#pragma once

// Classical linear codes: parameters, duals/transposes, and the construction
// families (cycle codes, group-algebra codes, shift lifts, Hamming, simplex,
// Reed-Muller).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaut/bitmat.hpp"
#include "qaut/graphs.hpp"

namespace qaut {

struct DistanceResult {
  std::size_t value = 0;  // exact minimum, or lower bound cap+1 when !exact
  bool exact = false;
};

class ClassicalCode {
 public:
  explicit ClassicalCode(BitMatrix h);
  // Explicit generator (rows must span ker h and have full row rank).
  static ClassicalCode with_generator(BitMatrix h, BitMatrix g);

  const BitMatrix &parity_check() const { return h_; }
  const BitMatrix &generator() const;  // lazily derived kernel basis
  bool has_explicit_generator() const { return g_.has_value(); }

  std::size_t length() const { return h_.cols(); }
  std::size_t num_checks() const { return h_.rows(); }
  std::size_t dim() const;  // k = n - rank(h)
  std::size_t check_rank() const;

  // Exact when 2^k fits in enum_budget; otherwise bounded-weight search up to
  // weight_cap (ascending, so a hit is still exact).
  DistanceResult distance(std::size_t weight_cap = 6,
                          std::size_t enum_budget_log2 = 24) const;
  // Minimum weight of a nonzero element of rs(h).
  DistanceResult dual_distance(std::size_t weight_cap = 6,
                               std::size_t enum_budget_log2 = 24) const;

  ClassicalCode transpose_code() const { return ClassicalCode(h_.transposed()); }

  // Unit-vector positions where the generator restricts to the identity,
  // one per generator row, smallest columns first.
  std::optional<std::vector<std::size_t>> systematic_columns() const;

 private:
  BitMatrix h_;
  mutable std::optional<BitMatrix> g_;
  mutable std::optional<std::size_t> rank_;
};

ClassicalCode cycle_code(const SimpleGraph &g);
ClassicalCode repetition_code(std::size_t n);

struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::vector<std::uint32_t>> cayley;  // cayley[a][b] = a*b
  std::uint32_t identity = 0;
  std::vector<std::string> labels;

  std::uint32_t mult(std::uint32_t a, std::uint32_t b) const { return cayley[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const;
  bool is_abelian() const;
  void validate() const;  // bijective rows/cols, identity, associativity (order <= 24)
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t ell);  // order 2*ell; r^0..r^{l-1}, s r^0..s r^{l-1}

enum class Side { Left, Right };
Permutation regular_representation(const FiniteGroup &g, std::uint32_t elem, Side side);

struct GroupAlgebraElement {
  FiniteGroup group;
  std::vector<std::uint32_t> support;  // element indices, coefficients 1
};

ClassicalCode group_algebra_code(const GroupAlgebraElement &a);

// Dihedral codes over the presentation <r,s | r^l = s^2 = (rs)^2 = 1> with the
// normal-form action: a term s^p r^a maps x to s^p x r^a. Rotations act on
// the right and the reflection on the left, so both translation families
// commute with every check.
struct DihedralTerm {
  bool s = false;
  int r_exp = 0;
};
ClassicalCode dihedral_algebra_code(std::size_t ell, const std::vector<DihedralTerm> &terms);
// The commuting translation permutations (x -> x r) and (x -> s x); they
// generate a Tanner subgroup of order 2*ell.
std::vector<Permutation> dihedral_tanner_generators(std::size_t ell);

// Shift l-lift: entry (i,j) of h0 replaced by the circulant of shifts[i][j]
// (a set of exponents mod ell) when h0[i][j] = 1, else the zero block.
ClassicalCode lifted_code(const BitMatrix &h0,
                          const std::vector<std::vector<std::vector<std::uint32_t>>> &shifts,
                          std::size_t ell);
BitMatrix circulant(const std::vector<std::uint32_t> &exponents, std::size_t ell);

ClassicalCode hamming(std::size_t r);
ClassicalCode simplex(std::size_t r);
ClassicalCode reed_muller(std::size_t r, std::size_t m);
ClassicalCode punctured_rm(std::size_t r, std::size_t m);

// All 2^{n-k}-1 nonzero dual codewords as rows; guard n-k <= 20.
BitMatrix all_dual_codewords_check_matrix(const ClassicalCode &c);

}  // namespace qaut

#pragma once

// Quantum CSS codes as chain complexes: validity, logical counting, canonical
// bases, symplectic checks, bounded distance search.

#include <optional>
#include <string>
#include <vector>

#include "qaut/bitmat.hpp"

namespace qaut {

struct Sector {
  std::string name;  // "L", "M", "R", ...
  std::size_t offset = 0;
  std::size_t size = 0;
  std::size_t grid_rows = 0, grid_cols = 0;
};

struct SectorLayout {
  std::vector<Sector> sectors;

  std::size_t total() const;
  const Sector *find(const std::string &name) const;
  static SectorLayout single(std::size_t n);  // one unnamed sector, 1 x n
};

struct LogicalBasis {
  BitMatrix g_x;  // k x n, row i pairs with g_z row i
  BitMatrix g_z;
  std::size_t k() const { return g_x.rows(); }
};

struct CssCode {
  BitMatrix h_x, h_z;
  std::optional<BitMatrix> m_x, m_z;  // metachecks: m_* . h_* = 0
  SectorLayout layout;
  std::optional<LogicalBasis> basis;  // kept logicals, canonical when product-built

  std::size_t n() const { return h_x.cols(); }
};

std::size_t num_logicals(const CssCode &c);

struct CssValidation {
  bool ok = false;
  std::string detail;  // first violation, empty when ok
  std::size_t max_x_check_weight = 0, max_z_check_weight = 0;
  std::vector<std::size_t> x_participation, z_participation;  // per qubit
};
CssValidation validate(const CssCode &c);

bool symplectic_check(const LogicalBasis &b);

// Generic basis extraction: representatives of ker h_z / rs h_x paired
// symplectically against ker h_x / rs h_z.
LogicalBasis derive_basis(const CssCode &c);

struct WeightSearchResult {
  std::size_t weight = 0;  // exact minimum, or cap+1 lower bound when !exact
  bool exact = false;
  std::optional<BitVector> witness;
  std::optional<std::size_t> basis_upper;  // min attached-basis row weight
};
// min weight of ker(stab) \ rs(other stab); ascending support enumeration.
WeightSearchResult distance_x(const CssCode &c, std::size_t weight_cap = 4,
                              std::size_t workers = 1);
WeightSearchResult distance_z(const CssCode &c, std::size_t weight_cap = 4,
                              std::size_t workers = 1);

// Chain complex listed from the Z side: maps[i] sends spaces[i] to
// spaces[i+1]; for [R_Z, S_Z, Q, S_X, R_X] the maps are
// [M_Z^T, H_Z^T, H_X, M_X].
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<BitMatrix> maps;

  void validate_chain() const;  // consecutive maps compose to zero
  std::vector<std::size_t> homology_ranks() const;
};

ChainComplex tensor_product(const ChainComplex &a, const ChainComplex &b);
CssCode css_from_chain(const ChainComplex &cc, std::size_t qubit_index);

}  // namespace qaut

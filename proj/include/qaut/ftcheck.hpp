#pragma once

// Exact verification of sector-weight and effective-distance claims at desk
// scale: full-coset enumeration when the budget allows, otherwise a
// sector-restricted ascending-weight search with free completion.

#include <optional>
#include <string>
#include <vector>

#include "qaut/gadgets.hpp"
#include "qaut/products.hpp"

namespace qaut {

struct FtBudget {
  std::size_t coset_log2 = 22;   // full-coset enumeration cutoff
  std::size_t weight_cap = 6;    // bounded-search weight ceiling
  std::size_t input_cap = 8;     // cap for input-code distance evaluation
};

struct SectorWeightReport {
  std::string sector;
  char pauli = 'X';
  std::size_t min_weight = 0;  // exact minimum, or cap+1 lower bound
  bool exact = false;
  std::optional<BitVector> witness;
  std::string method;  // "full-coset" | "bounded" | "formula"
  std::optional<std::size_t> basis_upper;  // restricted weight of a canonical row
};

// Minimum sector-restricted weight over all dressed nontrivial logicals of
// the given Pauli type (kept class nonzero; gauge and stabilizer dressing free).
SectorWeightReport sector_min_weight(const ProductRecord &p, const std::string &sector,
                                     char pauli, const FtBudget &budget = {});
SectorWeightReport subset_min_weight(const ProductRecord &p,
                                     const std::vector<std::size_t> &positions,
                                     const std::string &label, char pauli,
                                     const FtBudget &budget = {});

struct SectorDistanceCheck {
  SectorWeightReport x, z;
  std::size_t expect_x = 0, expect_z = 0;
  bool ok = false;
};
// Left-sector minima against the product formulas (hgp: d2/d1; qc: dX*dc/dZ).
SectorDistanceCheck left_sector_distance_check(const ProductRecord &p,
                                               const FtBudget &budget = {});
// Restriction to the input code's left-sector rows inside the product's left
// sector (qc records whose quantum input is itself a product).
SectorDistanceCheck restricted_row_weight_check(const ProductRecord &p,
                                                const FtBudget &budget = {});

struct MiddleBoundsReport {
  std::size_t lower_allowed = 0, upper_allowed = 0;  // [max(dX,dX'), dX*dX'] etc.
  SectorWeightReport x, z;
  bool ok = false;  // both restricted minima (or their honest brackets) inside
};
MiddleBoundsReport middle_sector_bounds_check(const ProductRecord &p,
                                              const FtBudget &budget = {});

struct EffectiveDistanceReport {
  bool covered = false;  // hypotheses hold: protected-sector action is a permutation
  std::string protected_sector;
  std::string conclusion;  // human-readable certificate
  std::size_t d_eff_x_lower = 0, d_eff_z_lower = 0;
  std::optional<std::size_t> d_eff_x_upper, d_eff_z_upper;  // set for qq intervals
};
EffectiveDistanceReport effective_distance_report(const Gadget &g, const ProductRecord &p,
                                                  const FtBudget &budget = {});

}  // namespace qaut

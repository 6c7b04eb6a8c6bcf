#pragma once

// The three product constructions with sector layouts, canonical logical
// bases, Kunneth counting, metachecks, and gauge designations.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qaut/classical.hpp"
#include "qaut/css.hpp"

namespace qaut {

enum class ProductKind { Hgp, QuantumClassical, QuantumQuantum };

struct SectorBasis {
  std::string sector;
  LogicalBasis basis;
  bool gauge = false;
};

struct ProductRecord {
  ProductKind kind;
  CssCode code;  // layout + combined kept basis attached
  std::vector<SectorBasis> bases;
  std::set<std::string> gauge_sectors;
  ChainComplex complex;          // full product complex (Z side first)
  std::size_t qubit_position;    // index of the qubit space in `complex`
  std::size_t kunneth_total;     // logicals including gauge

  // inputs, kept for gadget lifting
  std::optional<ClassicalCode> c1, c2;  // hgp
  std::optional<CssCode> q1, q2;        // qc (q1), qq (q1, q2)
  std::optional<ClassicalCode> cc;      // qc classical input

  const LogicalBasis *sector_basis(const std::string &name, bool gauge = false) const;
  LogicalBasis kept_basis() const;   // concatenation of non-gauge sector bases
  LogicalBasis gauge_basis() const;  // concatenation of gauge sector bases (may be empty)
};

ProductRecord hgp(const ClassicalCode &ca, const ClassicalCode &cb);
// q must carry a logical basis (canonical when itself product-built).
ProductRecord homprod_qc(const CssCode &q, const ClassicalCode &c);
ProductRecord homprod_qq(const CssCode &qa, const CssCode &qb);

// Per-degree homology ranks of the product complex predicted by the inputs'
// homology ranks; entry [qubit_position] equals kept + gauge logicals.
std::vector<std::size_t> kunneth_k(const ProductRecord &p);

// Treat the right sector as gauge (hgp records only).
ProductRecord left_sector_view(const ProductRecord &p);

// Stabilizer generators of the subsystem code: H'_X = (I x g2) H_X and
// H'_Z = (g1 x I) H_Z, supported on the left sector only (hgp records).
struct SubsystemGenerators {
  BitMatrix h_x_sub, h_z_sub;
};
SubsystemGenerators subsystem_generators(const ProductRecord &p);

}  // namespace qaut

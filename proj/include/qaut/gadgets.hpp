#pragma once

// Inherited automorphism gadgets for the three products: physical action,
// check-side action, logical action, circuit decomposition.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qaut/automorph.hpp"
#include "qaut/products.hpp"

namespace qaut {

struct CircuitStep {
  enum class Kind { Swap, Cnot } kind;
  std::size_t a = 0, b = 0;  // Swap(a,b) | Cnot(control=a, target=b)
};

struct InvertibleCircuit {
  BitMatrix matrix;
  std::vector<CircuitStep> steps;  // replayed left-to-right
  std::size_t depth = 0;           // greedy parallel schedule
};

// SWAP/CNOT factorization of an invertible matrix; throws on singular input.
InvertibleCircuit decompose(const BitMatrix &m);
BitMatrix replay_circuit(const std::vector<CircuitStep> &steps, std::size_t n);
std::size_t circuit_depth(const std::vector<CircuitStep> &steps);

struct SectorAction {
  std::string sector;
  bool is_permutation = false;
  std::optional<Permutation> perm;          // when is_permutation
  std::optional<InvertibleCircuit> circuit;  // otherwise
  BitMatrix matrix;                          // dense action on the sector
  std::size_t depth = 0;
};

struct Gadget {
  std::string provenance;
  std::vector<SectorAction> actions;  // in layout order
  BitMatrix u;        // full physical action on X supports (block diagonal)
  BitMatrix w;        // H_X U = W H_X
  BitMatrix w_prime;  // H_Z U^{-T} = W' H_Z
  BitMatrix v_bar;    // logical action on the kept basis
  bool permutation_only = false;
  std::size_t depth = 0;  // max sector depth
};

enum class WhichFactor { First, Second };

Gadget lift_hgp(const ProductRecord &p, WhichFactor which, const CodeAutomorphism &aut);
Gadget lift_qc_classical(const ProductRecord &p, const CodeAutomorphism &aut);
Gadget lift_qc_quantum(const ProductRecord &p, const Gadget &input);
Gadget lift_qq(const ProductRecord &p, WhichFactor which, const Gadget &input);

struct GadgetVerification {
  bool ok = false;
  std::string detail;
  BitMatrix v_bar;        // recomputed from scratch on the kept basis
  BitMatrix v_bar_prime;  // from the Z side; must equal v_bar^{-T}
};
GadgetVerification verify(const Gadget &g, const ProductRecord &p);

// V with (basis row i) . U = sum_j V[i][j] (basis row j) modulo stabilizers;
// throws if a transformed row leaves the span (gadget does not preserve code).
BitMatrix logical_action(const BitMatrix &u, const LogicalBasis &basis, const CssCode &code,
                         bool z_side = false);

}  // namespace qaut

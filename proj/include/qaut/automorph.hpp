#pragma once

// Code automorphisms: the (sigma, W, V) triples, Tanner detection, group
// enumeration and closure, and the structural checks.

#include <optional>
#include <vector>

#include "qaut/bitmat.hpp"
#include "qaut/classical.hpp"

namespace qaut {

struct CodeAutomorphism {
  Permutation sigma;  // bit permutation
  BitMatrix w;        // check-side action, W H = H sigma (permutation when tanner)
  BitMatrix v;        // logical action, V G = G sigma
  bool tanner = false;
};

// nullopt when sigma does not stabilize the codespace. The stored W is the
// permutation witness when one exists, else the pivot-canonical solution.
std::optional<CodeAutomorphism> check_automorphism(const ClassicalCode &c,
                                                   const Permutation &sigma);

// Permutation W with W H = H sigma, found by multiset row matching with
// lowest-index tie-breaking; nullopt if none exists.
std::optional<Permutation> tanner_witness(const BitMatrix &h, const Permutation &sigma);
bool is_tanner(const ClassicalCode &c, const CodeAutomorphism &aut);

struct AutomorphismGroup {
  std::vector<CodeAutomorphism> elements;  // sorted by sigma
  bool complete = false;                   // exhaustive vs closure-of-generators
};

// Exhaustive scan of S_n with column-class and pairwise-profile pruning.
AutomorphismGroup enumerate_automorphisms(const ClassicalCode &c, std::size_t n_cap = 10);

// Breadth-first closure of generators (each must pass check_automorphism).
AutomorphismGroup close_group(const ClassicalCode &c, const std::vector<Permutation> &gens,
                              std::size_t order_cap = 100000);

struct LogicalGroupInfo {
  std::vector<BitMatrix> v_images;  // deduplicated
  std::size_t kernel_size = 0;      // elements with V = I
};
LogicalGroupInfo logical_group(const AutomorphismGroup &g);
std::size_t tanner_count(const AutomorphismGroup &g);

struct AffineReport {
  std::size_t checked = 0;
  std::size_t invertible = 0;
  bool ok = false;  // every V invertible
};
AffineReport affine_check(const AutomorphismGroup &g);

struct DualBoundReport {
  bool distance_ge3 = false;       // d >= 3: sigma -> W must be injective
  bool dual_distance_ge3 = false;  // plus d_dual >= 3: |V| = |W| = |Aut|
  bool w_injective = false;
  std::size_t n_aut = 0, n_v = 0, n_w = 0;
  bool ok = false;  // all applicable assertions hold (vacuous true if none apply)
};
DualBoundReport dual_bound_check(const ClassicalCode &c, const AutomorphismGroup &g);

struct ElementaryStep {
  enum class Kind { Swap, Add } kind;  // Add: row dst += row src
  std::size_t a = 0, b = 0;            // Swap(a,b) | Add(src=a, dst=b)
};
// W as a product of elementary row operations, replayed in list order
// (left-to-right matrix product); length <= r^2. Throws on singular W.
std::vector<ElementaryStep> hamming_decompose(const BitMatrix &w);
BitMatrix replay_steps(const std::vector<ElementaryStep> &steps, std::size_t n);

}  // namespace qaut

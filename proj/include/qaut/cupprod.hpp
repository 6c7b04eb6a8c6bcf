#pragma once

// Edge orientations with the Leibniz condition and copy-cup CZ pair
// enumeration for graph products; symplectic verification of the induced
// logical CZ pattern.

#include <optional>
#include <string>
#include <vector>

#include "qaut/graphs.hpp"
#include "qaut/products.hpp"

namespace qaut {

enum class EdgeDir { Free, Forward, Backward };  // Forward: u -> v for edge (u, v)

struct Orientation {
  std::vector<EdgeDir> dirs;  // one per edge, in the graph's edge order
};

bool leibniz_ok(const SimpleGraph &g, const Orientation &o);

// Directed cycle orientation along the codeword support (remaining edges
// free); nullopt when the support is not a single closed cycle.
std::optional<Orientation> orient_from_codeword(const SimpleGraph &g, const BitVector &codeword);

struct CzPairing {
  // (block-1 qubit, block-2 qubit), ordered pairs, sorted
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// p must be hgp(cycle code, transpose cycle code); o1 orients the first
// factor graph, o2 the second. Pairs are the consecutively oriented
// cross-factor edge pairs of the product graph.
CzPairing czpairs(const ProductRecord &p, const Orientation &o1, const Orientation &o2);

// The graphs a cz-capable record is built on (first factor, second factor).
std::pair<SimpleGraph, SimpleGraph> product_graphs(const ProductRecord &p);

struct CzVerifyReport {
  bool ok = false;
  std::string detail;
  BitMatrix adjacency;  // kept block-1 logicals x kept block-2 logicals
};

// Two-block conjugation check: every stabilizer-induced Z pattern must lie in
// the other block's Z-stabilizer row space; logical-induced patterns reduce
// against the Z logical basis into the CZ adjacency. Works entirely over F2:
// CZ conjugation maps X_a to X_a Z_b with no sign, so the check is valid for
// CZ only (no phase tracking).
CzVerifyReport verify_cz(const ProductRecord &p, const CzPairing &pairing);

// Orientation text format: one line per edge, each "f", "b" or ".".
std::string write_orientation(const Orientation &o);
std::optional<Orientation> read_orientation(std::string_view text);

}  // namespace qaut

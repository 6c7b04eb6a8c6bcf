#pragma once

// Builder mini-language shared by the CLI and tests:
//   classical: rep:n, cycle:k4|k33|petersen|ring:n, ga:z7:1+x+x3,
//              ga:d6:1+r+sr^-1, hamming:r, simplex:r, rm:r,m, rm*:r,m,
//              lift:<file>, k4p, transpose:<spec>
//   graphs:    k4, k33, petersen, ring:n
//   products:  hgp(A,B), qc(Q,C), qq(Q1,Q2)
// Gadget lift paths address nested factors, e.g. "first", "classical",
// "quantum.first", "second.classical".

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qaut/automorph.hpp"
#include "qaut/classical.hpp"
#include "qaut/gadgets.hpp"
#include "qaut/products.hpp"

namespace qaut {

// K4 cycle code in the fixed reference edge labeling used by the worked
// examples (edges {14},{12},{23},{24},{13},{34}).
ClassicalCode k4_reference_code();
SimpleGraph k4_reference_graph();

std::optional<SimpleGraph> parse_graph_spec(const std::string &spec);
// Throws std::invalid_argument with a message on bad specs.
ClassicalCode parse_classical_spec(const std::string &spec);

struct ProductSpecNode {
  enum class Kind { Classical, Product } kind;
  std::string text;                 // original spec text
  ProductKind product_kind{};       // when kind == Product
  std::vector<std::shared_ptr<ProductSpecNode>> children;
};
std::shared_ptr<ProductSpecNode> parse_product_spec(const std::string &spec);

struct BuiltProduct {
  std::shared_ptr<ProductSpecNode> spec;
  ProductRecord record;
  // child records for nested quantum factors (index-aligned with
  // spec->children entries that are products)
  std::vector<std::shared_ptr<BuiltProduct>> children;
};
std::shared_ptr<BuiltProduct> build_product(const std::string &spec);

// Walk a lift path ("first", "classical", "quantum.first", ...) and lift the
// automorphism given by sigma (on the addressed classical factor) up through
// the product tree.
Gadget lift_by_path(const BuiltProduct &built, const std::string &path,
                    const std::string &sigma_cycles);

// The classical factor addressed by a lift path (to resolve sigma's size).
const ClassicalCode &classical_at_path(const BuiltProduct &built, const std::string &path);

// Natural Tanner generators of a classical builder, when the family provides
// them (graph automorphisms for cycle codes, translations for group codes).
std::vector<Permutation> natural_generators(const std::string &spec);

std::uint64_t fnv1a(const std::string &data);

}  // namespace qaut

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaut/classical.hpp"
#include "qaut/css.hpp"

using namespace qaut;

namespace {

// 13-qubit surface code: hypergraph blocks assembled by hand from rep3
CssCode surface13() {
  const auto h = repetition_code(3).parity_check();  // 2 x 3, full rank
  const auto i3 = BitMatrix::identity(3);
  const auto i2 = BitMatrix::identity(2);
  CssCode c;
  c.h_x = kron(h, i3).beside(kron(i2, h.transposed()));
  c.h_z = kron(i3, h).beside(kron(h.transposed(), i2));
  c.layout = SectorLayout{{Sector{"L", 0, 9, 3, 3}, Sector{"R", 9, 4, 2, 2}}};
  return c;
}

}  // namespace

TEST_CASE("validate and num_logicals") {
  auto c = surface13();
  auto r = validate(c);
  CHECK(r.ok);
  CHECK(num_logicals(c) == 1);

  // constructed violation: flip one bit so a pair anticommutes
  auto bad = c;
  bad.h_x.set(0, 12, !bad.h_x.get(0, 12));
  auto rb = validate(bad);
  CHECK_FALSE(rb.ok);
  CHECK(rb.detail.find("anticommutes") != std::string::npos);
}

TEST_CASE("derive_basis and symplectic check") {
  auto c = surface13();
  auto b = derive_basis(c);
  CHECK(b.k() == 1);
  CHECK(symplectic_check(b));
  CHECK((c.h_z * b.g_x.transposed()).is_zero());
  CHECK((c.h_x * b.g_z.transposed()).is_zero());

  LogicalBasis dup{b.g_x.stacked(b.g_x), b.g_z.stacked(b.g_z)};
  CHECK_FALSE(symplectic_check(dup));
}

TEST_CASE("distance search on the surface code") {
  auto c = surface13();
  c.basis = derive_basis(c);
  auto dx = distance_x(c, 4);
  auto dz = distance_z(c, 4);
  CHECK(dx.exact);
  CHECK(dx.weight == 3);
  CHECK(dz.exact);
  CHECK(dz.weight == 3);
  REQUIRE(dx.witness.has_value());
  CHECK(dx.witness->weight() == 3);
  CHECK(c.h_z.mul_vec(*dx.witness).is_zero());
  CHECK_FALSE(row_space_contains(c.h_x, *dx.witness));

  // parallel chunking returns the identical result
  auto dx4 = distance_x(c, 4, 4);
  CHECK(dx4.weight == dx.weight);
  CHECK(*dx4.witness == *dx.witness);

  // cap below d reports an honest lower bound
  auto low = distance_x(c, 2);
  CHECK_FALSE(low.exact);
  CHECK(low.weight == 3);
}

TEST_CASE("chain complex validation and homology") {
  // hamming dual pair: [S, B, S] with maps [h^T, h]
  const auto h = hamming(3).parity_check();
  ChainComplex cc;
  cc.dims = {3, 7, 3};
  cc.maps = {h.transposed(), h};
  cc.validate_chain();
  auto ranks = cc.homology_ranks();
  CHECK(ranks[1] == 7 - 3 - 3);  // k of CSS(h, h)

  auto css = css_from_chain(cc, 1);
  CHECK(css.h_x == h);
  CHECK(css.h_z == h);
  CHECK(num_logicals(css) == 1);
  CHECK_FALSE(css.m_x.has_value());
  CHECK_FALSE(css.m_z.has_value());

  ChainComplex badc;
  badc.dims = {2, 3, 2};
  badc.maps = {BitMatrix::from_strings({"110", "011"}).transposed(),
               BitMatrix::from_strings({"100", "000"})};
  CHECK_THROWS(badc.validate_chain());
  CHECK_THROWS(css_from_chain(cc, 0));
}

TEST_CASE("tensor product of chain complexes") {
  // classical code as a 2-term complex in first-factor orientation [B, S]
  const auto h = repetition_code(3).parity_check();
  ChainComplex first;
  first.dims = {3, 2};
  first.maps = {h};
  // second factor reversed: [S, B] with h^T
  ChainComplex second;
  second.dims = {2, 3};
  second.maps = {h.transposed()};

  auto prod = tensor_product(first, second);
  REQUIRE(prod.dims.size() == 3);
  CHECK(prod.dims[1] == 13);  // (B,B) + (S,S)
  auto css = css_from_chain(prod, 1);
  auto ref = surface13();
  CHECK(css.h_x == ref.h_x);
  CHECK(css.h_z == ref.h_z);

  // Kunneth: homology ranks of the product match the rank product sum
  auto ra = first.homology_ranks();
  auto rb = second.homology_ranks();
  auto rp = prod.homology_ranks();
  for (std::size_t t = 0; t < rp.size(); ++t) {
    std::size_t expect = 0;
    for (std::size_t i = 0; i < ra.size(); ++i)
      if (t >= i && t - i < rb.size()) expect += ra[i] * rb[t - i];
    CHECK(rp[t] == expect);
  }
  CHECK(rp[1] == num_logicals(css));
}

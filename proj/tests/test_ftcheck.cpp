#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qaut/ftcheck.hpp"

using namespace qaut;

namespace {

ClassicalCode k4_ref() {
  return ClassicalCode::with_generator(BitMatrix::from_strings({
                                           "110010",
                                           "011100",
                                           "001011",
                                           "100101",
                                       }),
                                       BitMatrix::from_strings({
                                           "110100",
                                           "011010",
                                           "001101",
                                       }));
}

}  // namespace

TEST_CASE("sector minima on hgp(rep3, rep3): full coset") {
  auto rep = repetition_code(3);
  auto p = hgp(rep, rep);
  auto rz = sector_min_weight(p, "L", 'Z');
  CHECK(rz.method == "full-coset");
  CHECK(rz.exact);
  CHECK(rz.min_weight == 3);  // d1
  auto rx = sector_min_weight(p, "L", 'X');
  CHECK(rx.min_weight == 3);  // d2
  REQUIRE(rz.witness.has_value());

  auto check = left_sector_distance_check(p);
  CHECK(check.ok);
  CHECK(check.expect_x == 3);
  CHECK(check.expect_z == 3);
}

TEST_CASE("sector minima on hgp(K4, K4): bounded path") {
  auto c = k4_ref();
  auto p = left_sector_view(hgp(c, c));
  auto rz = sector_min_weight(p, "L", 'Z');
  CHECK(rz.method == "bounded");
  CHECK(rz.exact);
  CHECK(rz.min_weight == 3);
  auto check = left_sector_distance_check(p);
  CHECK(check.ok);
  CHECK(check.expect_x == 3);
  CHECK(check.expect_z == 3);

  // dressing a kept logical with the spurious right-sector rows never
  // reduces its left-restricted weight (disjoint support)
  const auto kept = p.kept_basis();
  const auto gauge = p.gauge_basis();
  REQUIRE(gauge.k() == 1);
  const auto *l = p.code.layout.find("L");
  auto lweight = [&](const BitVector &v) {
    std::size_t w = 0;
    for (auto s : v.support())
      if (s >= l->offset && s < l->offset + l->size) ++w;
    return w;
  };
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t i = rng() % kept.k();
    auto dressed = kept.g_z.row(i) ^ gauge.g_z.row(0);
    CHECK(lweight(dressed) == lweight(kept.g_z.row(i)));
    CHECK(lweight(dressed) >= rz.min_weight);
  }
}

TEST_CASE("left sector distances on hgp(K4, K4^T)") {
  auto c = k4_ref();
  auto p = left_sector_view(hgp(c, c.transpose_code()));
  auto check = left_sector_distance_check(p);
  CHECK(check.ok);
  CHECK(check.expect_z == 3);  // d1 of the K4 code
  CHECK(check.expect_x == 4);  // d of the transpose [4,1,4] code
}

TEST_CASE("qc product formulas: surface13 x rep3") {
  auto rep = repetition_code(3);
  auto p13 = hgp(rep, rep);
  auto p = homprod_qc(p13.code, rep);
  auto check = left_sector_distance_check(p);
  CHECK(check.expect_z == 3);
  CHECK(check.expect_x == 9);  // d_X * d_c = 3 * 3
  CHECK(check.ok);
}

TEST_CASE("restricted row weights: qc of a left-sector product") {
  auto rep = repetition_code(3);
  auto p13 = hgp(rep, rep);
  auto p = homprod_qc(p13.code, repetition_code(2));
  auto check = restricted_row_weight_check(p);
  CHECK(check.expect_z == 3);
  CHECK(check.expect_x == 6);  // d_X * d_c = 3 * 2
  CHECK(check.ok);

  // degenerate classical input (single bit, d_c = 1) reduces to the plain
  // left-sector values
  auto triv = ClassicalCode(BitMatrix(0, 1));
  auto p_triv = homprod_qc(p13.code, triv);
  auto check2 = restricted_row_weight_check(p_triv);
  CHECK(check2.expect_z == 3);
  CHECK(check2.expect_x == 3);
  CHECK(check2.ok);
}

TEST_CASE("middle sector bounds on homprod_qq(surface13, surface13)") {
  auto rep = repetition_code(3);
  auto q = hgp(rep, rep).code;
  auto p = homprod_qq(q, q);
  FtBudget b;
  b.weight_cap = 4;
  auto rep_mid = middle_sector_bounds_check(p, b);
  CHECK(rep_mid.lower_allowed == 3);
  CHECK(rep_mid.upper_allowed == 9);
  CHECK(rep_mid.ok);
  // the canonical middle rows give the weight-9 upper witness
  CHECK(rep_mid.x.basis_upper == 9);
  CHECK(rep_mid.z.basis_upper == 9);

  // vacuous when a factor has no logicals
  auto zero = hgp(ClassicalCode(BitMatrix::identity(2)), ClassicalCode(BitMatrix::identity(2)));
  auto pz = homprod_qq(q, zero.code);
  auto rz = sector_min_weight(pz, "M", 'X');
  CHECK(rz.method == "formula");
  CHECK(rz.min_weight == pz.code.n() + 1);
}

TEST_CASE("re-minimization idempotence") {
  auto rep = repetition_code(3);
  auto p = hgp(rep, rep);
  auto r = sector_min_weight(p, "L", 'Z');
  REQUIRE(r.witness.has_value());
  // adding any stabilizer row never drops the restricted weight below the min
  const auto *l = p.code.layout.find("L");
  auto lweight = [&](const BitVector &v) {
    std::size_t w = 0;
    for (auto s : v.support())
      if (s >= l->offset && s < l->offset + l->size) ++w;
    return w;
  };
  for (std::size_t i = 0; i < p.code.h_z.rows(); ++i)
    CHECK(lweight(*r.witness ^ p.code.h_z.row(i)) >= r.min_weight);
}

TEST_CASE("effective distance reports") {
  auto c = k4_ref();
  auto p52 = hgp(c, c);
  auto g = lift_hgp(p52, WhichFactor::First,
                    *check_automorphism(c, *Permutation::parse_cycles("(25)(46)", 6)));
  auto rep = effective_distance_report(g, p52);
  CHECK(rep.covered);
  CHECK(rep.d_eff_x_lower == 3);
  CHECK(rep.d_eff_z_lower == 3);

  // qc lift certified via the restricted-row path
  auto rp = repetition_code(3);
  auto p13 = hgp(rp, rp);
  auto a = *check_automorphism(rp, *Permutation::parse_cycles("(13)", 3));
  auto g13 = lift_hgp(p13, WhichFactor::First, a);
  auto pq = homprod_qc(p13.code, repetition_code(2));
  auto gq = lift_qc_quantum(pq, g13);
  auto repq = effective_distance_report(gq, pq);
  CHECK(repq.covered);
  CHECK(repq.d_eff_z_lower == 3);
  CHECK(repq.d_eff_x_lower == 6);

  // qq lift: interval certificate only
  auto pqq = homprod_qq(p13.code, p13.code);
  auto gqq = lift_qq(pqq, WhichFactor::First, g13);
  FtBudget b;
  b.weight_cap = 4;
  auto repqq = effective_distance_report(gqq, pqq, b);
  CHECK(repqq.covered);
  CHECK(repqq.d_eff_x_lower == 3);
  CHECK(repqq.d_eff_x_upper == 9);

  // a gadget with a circuit on the protected sector is reported not covered
  Gadget broken = g;
  // move the R-sector circuit onto L by swapping blocks: simulate by using a
  // non-block-diagonal U
  broken.u.set(0, 40, true);
  auto repb = effective_distance_report(broken, p52);
  CHECK_FALSE(repb.covered);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qaut/gadgets.hpp"

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

Permutation cyc(const char *s, std::size_t n) { return *Permutation::parse_cycles(s, n); }

BitMatrix block(const BitMatrix &m, std::size_t r0, std::size_t r1, std::size_t c0,
                std::size_t c1) {
  return m.submatrix(r0, r1, c0, c1);
}

}  // namespace

TEST_CASE("decompose") {
  auto id = decompose(BitMatrix::identity(4));
  CHECK(id.steps.empty());
  CHECK(id.depth == 0);

  // the multitarget CNOT matrix: two CNOTs sharing a control, depth 1
  auto v = BitMatrix::from_strings({"111", "010", "001"});
  auto c = decompose(v);
  CHECK(c.steps.size() == 2);
  for (const auto &s : c.steps) CHECK(s.kind == CircuitStep::Kind::Cnot);
  CHECK(c.depth == 1);
  CHECK(replay_circuit(c.steps, 3) == v);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    BitMatrix m(5, 5);
    do {
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t col = 0; col < 5; ++col) m.set(r, col, rng() & 1u);
    } while (!inverse(m));
    auto circ = decompose(m);
    CHECK(replay_circuit(circ.steps, 5) == m);
    CHECK(circ.depth >= 1);
  }
  CHECK_THROWS(decompose(BitMatrix(2, 2)));
}

TEST_CASE("circuit depth semantics") {
  // shared control fans out in one layer
  std::vector<CircuitStep> fanout = {{CircuitStep::Kind::Cnot, 0, 1},
                                     {CircuitStep::Kind::Cnot, 0, 2},
                                     {CircuitStep::Kind::Cnot, 0, 3}};
  CHECK(circuit_depth(fanout) == 1);
  // chained target->control serializes
  std::vector<CircuitStep> chain = {{CircuitStep::Kind::Cnot, 0, 1},
                                    {CircuitStep::Kind::Cnot, 1, 2}};
  CHECK(circuit_depth(chain) == 2);
  std::vector<CircuitStep> swaps = {{CircuitStep::Kind::Swap, 0, 1},
                                    {CircuitStep::Kind::Swap, 2, 3}};
  CHECK(circuit_depth(swaps) == 1);
}

TEST_CASE("lift_hgp on the 52-qubit code") {
  auto c = k4_ref();
  auto p = hgp(c, c);

  auto gid = lift_hgp(p, WhichFactor::First, *check_automorphism(c, Permutation(6)));
  CHECK(gid.u.is_identity());
  CHECK(gid.v_bar.is_identity());
  CHECK(gid.permutation_only);

  // (15)(34) permutes the rows of the 3x3 left logical grid by (12)
  auto a1 = *check_automorphism(c, cyc("(15)(34)", 6));
  auto g1 = lift_hgp(p, WhichFactor::First, a1);
  CHECK(g1.permutation_only);
  CHECK(verify(g1, p).ok);
  CHECK(block(g1.v_bar, 0, 9, 0, 9) == kron(cyc("(12)", 3).as_matrix(), BitMatrix::identity(3)));
  // the right logical qubit is invariant
  CHECK(block(g1.v_bar, 9, 10, 9, 10).is_identity());
  CHECK(block(g1.v_bar, 9, 10, 0, 9).is_zero());
  CHECK(block(g1.v_bar, 0, 9, 9, 10).is_zero());

  // (25)(46): V-bar left block is v^{-T} (x) I
  auto a3 = *check_automorphism(c, cyc("(25)(46)", 6));
  auto g3 = lift_hgp(p, WhichFactor::First, a3);
  CHECK(verify(g3, p).ok);
  const auto v_mt = BitMatrix::from_strings({"111", "010", "001"});
  CHECK(block(g3.v_bar, 0, 9, 0, 9) ==
        kron(inverse(v_mt)->transposed(), BitMatrix::identity(3)));
  CHECK(block(g3.v_bar, 9, 10, 9, 10).is_identity());
  CHECK(g3.permutation_only);  // Tanner input: the whole gadget is a permutation

  // second-factor lift: columns of the logical grid move instead
  auto g2 = lift_hgp(p, WhichFactor::Second, a3);
  CHECK(verify(g2, p).ok);
  CHECK(block(g2.v_bar, 0, 9, 0, 9) == kron(BitMatrix::identity(3), v_mt));
  // lifted pairs from distinct factors commute
  CHECK(g1.v_bar * g2.v_bar == g2.v_bar * g1.v_bar);
  CHECK(g1.u * g2.u == g2.u * g1.u);

  // mutation check: corrupting one bit of U breaks verification
  auto bad = g1;
  bad.u.set(0, 1, !bad.u.get(0, 1));
  CHECK_FALSE(verify(bad, p).ok);
}

TEST_CASE("lift_hgp on the 48-qubit code: sector-selective action") {
  auto c = k4_ref();
  auto p = hgp(c, c.transpose_code());

  // first-factor gadgets act nontrivially on the 3 left logicals and
  // trivially on the 3 right logicals
  for (const char *s : {"(15)(34)", "(24)(56)", "(25)(46)"}) {
    auto g = lift_hgp(p, WhichFactor::First, *check_automorphism(c, cyc(s, 6)));
    CHECK(verify(g, p).ok);
    CHECK(block(g.v_bar, 3, 6, 3, 6).is_identity());
    CHECK(block(g.v_bar, 3, 6, 0, 3).is_zero());
    CHECK(block(g.v_bar, 0, 3, 3, 6).is_zero());
    CHECK_FALSE(block(g.v_bar, 0, 3, 0, 3).is_identity());
  }
  // second-factor gadgets from the [4,1,4] code act on the right sector only
  auto rep4 = c.transpose_code();
  auto a = *check_automorphism(rep4, cyc("(12)", 4));
  auto g = lift_hgp(p, WhichFactor::Second, a);
  CHECK(verify(g, p).ok);
  CHECK(block(g.v_bar, 0, 3, 0, 3).is_identity());
}

TEST_CASE("lift_qc: classical and quantum sides") {
  auto c = k4_ref();
  auto ct = c.transpose_code();
  auto p48 = hgp(c, ct);
  auto p = homprod_qc(p48.code, ct);

  // classical side: automorphism of the [4,1,4] transpose code
  auto ac = *check_automorphism(ct, cyc("(12)", 4));
  auto gc = lift_qc_classical(p, ac);
  CHECK(verify(gc, p).ok);
  CHECK(gc.permutation_only);  // Tanner input

  // quantum side: a lifted hgp gadget re-lifts with identical depth
  auto aq = *check_automorphism(c, cyc("(25)(46)", 6));
  auto gq_in = lift_hgp(p48, WhichFactor::First, aq);
  auto gq = lift_qc_quantum(p, gq_in);
  CHECK(verify(gq, p).ok);
  CHECK(gq.depth == gq_in.depth);
  CHECK(gq.permutation_only);  // Tanner chain stays a permutation

  // the two sides commute on the logicals
  CHECK(gc.v_bar * gq.v_bar == gq.v_bar * gc.v_bar);

  // identity input lifts to the identity
  auto gid = lift_qc_classical(p, *check_automorphism(ct, Permutation(4)));
  CHECK(gid.u.is_identity());
  CHECK(gid.v_bar.is_identity());
}

TEST_CASE("depth preservation through lift_qc_quantum with a real circuit") {
  auto ham = hamming(3);
  auto ph = hgp(ham, ham);
  // non-Tanner automorphism: w is an elementary addition, not a permutation
  const auto &h = ham.parity_check();
  BitMatrix w_elem = BitMatrix::identity(3);
  w_elem.set(0, 1);
  const auto wh = w_elem * h;
  std::vector<std::uint32_t> img(7);
  const auto ht = h.transposed();
  const auto wht = wh.transposed();
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t j2 = 0; j2 < 7; ++j2)
      if (wht.row(j) == ht.row(j2)) img[j] = static_cast<std::uint32_t>(j2);
  auto sigma = Permutation::from_images(img).inverse();
  auto aut = *check_automorphism(ham, sigma);
  REQUIRE_FALSE(aut.tanner);

  auto g_in = lift_hgp(ph, WhichFactor::First, aut);
  CHECK_FALSE(g_in.permutation_only);
  CHECK(g_in.depth >= 1);
  CHECK(verify(g_in, ph).ok);

  auto p = homprod_qc(ph.code, repetition_code(2));
  auto g = lift_qc_quantum(p, g_in);
  CHECK(verify(g, p).ok);
  CHECK(g.depth == g_in.depth);
  CHECK_FALSE(g.permutation_only);
}

TEST_CASE("classical-side lift permutes the spurious logical axis") {
  auto c = k4_ref();
  auto ct = c.transpose_code();
  auto p = homprod_qc(hgp(c, ct).code, ct);
  auto gc = lift_qc_classical(p, *check_automorphism(ct, cyc("(12)", 4)));
  // kept logicals are untouched (the classical factor has k_c = 1)
  CHECK(gc.v_bar.is_identity());
  // the full basis action moves only the three spurious gauge logicals
  // (their block is a GL_3 element in the canonical gauge basis)
  REQUIRE(p.code.basis.has_value());
  auto full = logical_action(gc.u, *p.code.basis, p.code, false);
  CHECK(inverse(full).has_value());
  CHECK_FALSE(full.is_identity());
  CHECK(full.submatrix(0, 6, 0, 6).is_identity());
  CHECK(full.submatrix(0, 6, 6, 9).is_zero());
  CHECK(full.submatrix(6, 9, 0, 6).is_zero());
  CHECK_FALSE(full.submatrix(6, 9, 6, 9).is_identity());
}

TEST_CASE("lift_qq") {
  auto rep = repetition_code(3);
  auto p13 = hgp(rep, rep);
  auto q = p13.code;
  auto p = homprod_qq(q, q);

  auto a = *check_automorphism(rep, cyc("(13)", 3));
  auto g_in = lift_hgp(p13, WhichFactor::First, a);
  CHECK(g_in.permutation_only);

  auto g1 = lift_qq(p, WhichFactor::First, g_in);
  auto g2 = lift_qq(p, WhichFactor::Second, g_in);
  CHECK(verify(g1, p).ok);
  CHECK(verify(g2, p).ok);
  // Tanner inputs lift to permutation-only gadgets, twice over
  CHECK(g1.permutation_only);
  CHECK(g2.permutation_only);
  // logical actions from distinct factors commute
  CHECK(g1.v_bar * g2.v_bar == g2.v_bar * g1.v_bar);

  auto gid = lift_qq(p, WhichFactor::First,
                     lift_hgp(p13, WhichFactor::First, *check_automorphism(rep, Permutation(3))));
  CHECK(gid.u.is_identity());
  CHECK(gid.v_bar.is_identity());
}

TEST_CASE("gadget distinctness on the K33 product") {
  // both inputs have d = 4 and dual distance 3, so distinct input pairs give
  // distinct composite logical actions: |gadgets| = |Aut|^2
  auto c = cycle_code(complete_bipartite(3, 3));
  REQUIRE(c.distance().value >= 3);
  REQUIRE(c.dual_distance().value >= 3);
  auto p = hgp(c, c);
  auto group = enumerate_automorphisms(c);
  REQUIRE(group.elements.size() == 72);

  std::vector<BitMatrix> v1, v2;
  for (std::size_t i = 0; i < group.elements.size(); i += 6) {
    auto g1 = lift_hgp(p, WhichFactor::First, group.elements[i]);
    auto g2 = lift_hgp(p, WhichFactor::Second, group.elements[i]);
    CHECK(g1.permutation_only);  // cycle-code automorphisms are Tanner
    v1.push_back(g1.v_bar);
    v2.push_back(g2.v_bar);
  }
  std::set<std::string> products;
  for (const auto &a : v1)
    for (const auto &b : v2) products.insert((a * b).to_string());
  CHECK(products.size() == v1.size() * v2.size());
}

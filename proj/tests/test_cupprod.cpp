#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qaut/cupprod.hpp"
#include "qaut/gadgets.hpp"

using namespace qaut;

namespace {

// K4 with the fixed edge labeling {14},{12},{23},{24},{13},{34}
SimpleGraph k4_fixed() {
  return SimpleGraph::from_edges_keep_order(
      4, {{0, 3}, {0, 1}, {1, 2}, {1, 3}, {0, 2}, {2, 3}});
}

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

TEST_CASE("leibniz condition") {
  auto g = k4_fixed();
  Orientation all_free{std::vector<EdgeDir>(6, EdgeDir::Free)};
  CHECK(leibniz_ok(g, all_free));

  // a single directed edge fails at both endpoints
  Orientation one = all_free;
  one.dirs[0] = EdgeDir::Forward;
  CHECK_FALSE(leibniz_ok(g, one));

  // path graph with one directed edge fails
  auto path = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
  Orientation po{std::vector<EdgeDir>{EdgeDir::Forward, EdgeDir::Free}};
  CHECK_FALSE(leibniz_ok(path, po));
}

TEST_CASE("orient_from_codeword") {
  auto g = k4_fixed();
  auto c = k4_ref();
  // codeword 1 = edges {1,2,4} wrt the fixed labeling: triangle 1-2-4
  auto o = orient_from_codeword(g, c.generator().row(0));
  REQUIRE(o.has_value());
  CHECK(leibniz_ok(g, *o));
  std::size_t directed = 0;
  for (auto d : o->dirs)
    if (d != EdgeDir::Free) ++directed;
  CHECK(directed == 3);

  // non-cycle support is rejected
  BitVector notacycle(6);
  notacycle.set(0);
  CHECK_FALSE(orient_from_codeword(g, notacycle).has_value());

  // round trip the text format
  auto text = write_orientation(*o);
  auto back = read_orientation(text);
  REQUIRE(back.has_value());
  CHECK(back->dirs == o->dirs);
}

TEST_CASE("czpairs basics") {
  auto c = k4_ref();
  auto p = hgp(c, c.transpose_code());
  auto g = k4_fixed();

  Orientation all_free{std::vector<EdgeDir>(6, EdgeDir::Free)};
  CHECK(czpairs(p, all_free, all_free).pairs.empty());

  auto o = *orient_from_codeword(g, c.generator().row(0));
  auto pairs = czpairs(p, o, o);
  CHECK_FALSE(pairs.pairs.empty());

  // reversing every direction swaps the roles of the two blocks
  Orientation rev = o;
  for (auto &d : rev.dirs) {
    if (d == EdgeDir::Forward)
      d = EdgeDir::Backward;
    else if (d == EdgeDir::Backward)
      d = EdgeDir::Forward;
  }
  auto swapped = czpairs(p, rev, rev);
  std::vector<std::pair<std::size_t, std::size_t>> flipped;
  for (auto [a, b] : pairs.pairs) flipped.push_back({b, a});
  std::sort(flipped.begin(), flipped.end());
  CHECK(swapped.pairs == flipped);
}

TEST_CASE("verify_cz on the 48-qubit code") {
  auto c = k4_ref();
  auto p = hgp(c, c.transpose_code());
  auto g = k4_fixed();

  // empty pairing: zero adjacency
  Orientation all_free{std::vector<EdgeDir>(6, EdgeDir::Free)};
  auto r0 = verify_cz(p, czpairs(p, all_free, all_free));
  CHECK(r0.ok);
  CHECK(r0.adjacency.is_zero());

  // both orientations along classical codeword 1: logical CZ between
  // 1-bar-L (block 1) and 1-bar-R (block 2) only
  auto o = *orient_from_codeword(g, c.generator().row(0));
  auto rep = verify_cz(p, czpairs(p, o, o));
  INFO(rep.detail);
  REQUIRE(rep.ok);
  // basis order: L logicals 0..2, R logicals 3..5; the pair set contains
  // left-then-right and right-then-left pairs, so the link is symmetric
  BitMatrix expect(6, 6);
  expect.set(0, 3);
  expect.set(3, 0);
  CHECK(rep.adjacency == expect);

  // other codewords address other logical pairs
  auto o2 = *orient_from_codeword(g, c.generator().row(1));
  auto rep2 = verify_cz(p, czpairs(p, o2, o2));
  REQUIRE(rep2.ok);
  BitMatrix expect2(6, 6);
  expect2.set(1, 4);
  expect2.set(4, 1);
  CHECK(rep2.adjacency == expect2);

  // composing with a lifted logical permutation permutes the adjacency
  auto a1 = *check_automorphism(c, *Permutation::parse_cycles("(15)(34)", 6));
  auto gad = lift_hgp(p, WhichFactor::First, a1);
  auto permuted = gad.v_bar * rep.adjacency;
  CHECK(permuted != rep.adjacency);
  BitMatrix expectp(6, 6);
  expectp.set(1, 3);  // the 1-bar-L row moved to 2-bar-L under the logical (12)
  expectp.set(3, 0);
  CHECK(permuted == expectp);
}

TEST_CASE("leibniz is necessary and sufficient for codespace preservation") {
  auto c = k4_ref();
  auto p = hgp(c, c.transpose_code());
  auto g = k4_fixed();

  std::mt19937_64 rng(2025);
  std::size_t valid_seen = 0, invalid_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Orientation o1{std::vector<EdgeDir>(6, EdgeDir::Free)}, o2 = o1;
    for (auto *o : {&o1, &o2})
      for (auto &d : o->dirs) {
        const auto roll = rng() % 3;
        d = roll == 0 ? EdgeDir::Free : (roll == 1 ? EdgeDir::Forward : EdgeDir::Backward);
      }
    const bool ok1 = leibniz_ok(g, o1), ok2 = leibniz_ok(g, o2);
    if (ok1 && ok2) {
      ++valid_seen;
      auto rep = verify_cz(p, czpairs(p, o1, o2));
      INFO(rep.detail);
      CHECK(rep.ok);
    } else {
      ++invalid_seen;
      // build the pairing anyway (bypassing the precondition) and watch it fail
      Orientation f1 = ok1 ? o1 : Orientation{std::vector<EdgeDir>(6, EdgeDir::Free)};
      if (!ok1 || !ok2) CHECK_THROWS(czpairs(p, o1, o2));
      (void)f1;
    }
  }
  CHECK(valid_seen > 0);
  CHECK(invalid_seen > 0);
}

TEST_CASE("non-leibniz pairings break codespace preservation") {
  auto c = k4_ref();
  auto p = hgp(c, c.transpose_code());
  auto g = k4_fixed();
  // construct the pair set of a non-Leibniz orientation by hand: direct one
  // edge in each factor (consecutive pairs exist, parity fails at vertices)
  const std::size_t n2 = 4, m2 = 6, right_off = 24;
  // edge 1 = {0,1} directed 0->1 in graph 1; edge 2 = {1,2} directed 1->2 in graph 2
  CzPairing bad;
  // (left (e=1, v2 = tail2(f)=1), right (u1 = head1(e)=1, f=2))
  bad.pairs.push_back({1 * n2 + 1, right_off + 1 * m2 + 2});
  // (right (u1 = tail1(e)=0, f=2), left (e=1, v2 = head2(f)=2))
  bad.pairs.push_back({right_off + 0 * m2 + 2, 1 * n2 + 2});
  auto rep = verify_cz(p, bad);
  CHECK_FALSE(rep.ok);
  (void)g;
}

#include "qaut/ftcheck.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qaut {

namespace {

std::vector<std::size_t> sector_positions(const ProductRecord &p, const std::string &name) {
  const auto *s = p.code.layout.find(name);
  if (!s) throw std::invalid_argument("unknown sector " + name);
  std::vector<std::size_t> out(s->size);
  for (std::size_t i = 0; i < s->size; ++i) out[i] = s->offset + i;
  return out;
}

std::size_t restricted_weight(const BitVector &v, const std::vector<std::uint64_t> &mask) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < mask.size(); ++i)
    w += static_cast<std::size_t>(std::popcount(v.words()[i] & mask[i]));
  return w;
}

struct Pieces {
  const BitMatrix *kernel_of;  // logicals satisfy kernel_of . x = 0
  BitMatrix span;              // stabilizer rows + gauge rows of the same type
  BitMatrix kept;              // kept basis rows of the type
};

Pieces pieces_for(const ProductRecord &p, char pauli) {
  Pieces out{nullptr, BitMatrix(), BitMatrix()};
  const auto gauge = p.gauge_basis();
  const auto kept = p.kept_basis();
  if (pauli == 'X') {
    out.kernel_of = &p.code.h_z;
    out.span = p.code.h_x.stacked(gauge.g_x);
    out.kept = kept.g_x;
  } else {
    out.kernel_of = &p.code.h_x;
    out.span = p.code.h_z.stacked(gauge.g_z);
    out.kept = kept.g_z;
  }
  return out;
}

SectorWeightReport coset_scan(const ProductRecord &p, const std::vector<std::size_t> &positions,
                              const std::string &label, char pauli, const Pieces &pc) {
  SectorWeightReport r;
  r.sector = label;
  r.pauli = pauli;
  r.method = "full-coset";
  const std::size_t n = p.code.n();
  std::vector<std::uint64_t> mask(BitVector::words_for(n), 0);
  for (auto q : positions) mask[q >> 6] |= std::uint64_t(1) << (q & 63);

  const auto rr = rref(pc.span);
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < rr.rank; ++i) rows.push_back(rr.r.row(i));
  const std::size_t dressing = rows.size();
  for (std::size_t i = 0; i < pc.kept.rows(); ++i) rows.push_back(pc.kept.row(i));
  const std::size_t total = rows.size();

  BitVector cur(n);
  std::size_t best = n + 1;
  std::optional<BitVector> witness;
  const std::uint64_t limit = std::uint64_t(1) << total;
  for (std::uint64_t i = 1; i < limit; ++i) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const std::uint64_t gray = i ^ (i >> 1);
    if ((gray >> dressing) == 0) continue;  // kept class must be nonzero
    const auto w = restricted_weight(cur, mask);
    if (w < best) {
      best = w;
      witness = cur;
    }
  }
  r.min_weight = best;
  r.exact = true;
  r.witness = witness;
  return r;
}

SectorWeightReport bounded_scan(const ProductRecord &p, const std::vector<std::size_t> &positions,
                                const std::string &label, char pauli, const Pieces &pc,
                                std::size_t cap) {
  SectorWeightReport r;
  r.sector = label;
  r.pauli = pauli;
  r.method = "bounded";
  const std::size_t n = p.code.n();
  std::vector<bool> in_s(n, false);
  for (auto q : positions) in_s[q] = true;
  std::vector<std::size_t> comp;
  for (std::size_t q = 0; q < n; ++q)
    if (!in_s[q]) comp.push_back(q);

  const BitMatrix a = pc.kernel_of->select_cols(positions);
  const BitMatrix b = pc.kernel_of->select_cols(comp);
  // consistency syndrome: rows L with L b = 0; support s is completable iff
  // (L a) s = 0
  const BitMatrix lns = kernel_basis(b.transposed());
  const BitMatrix la = lns * a;
  const BitMatrix lat = la.transposed();

  const BitMatrix kt = pc.kernel_of->transposed();
  RowReducer span_red(n);
  span_red.add_rows(pc.span);
  // can a pure-complement kernel element escape the span?
  bool any_u_outside = false;
  const auto ker_b = kernel_basis(b);
  for (std::size_t i = 0; i < ker_b.rows() && !any_u_outside; ++i) {
    BitVector x(n);
    for (auto idx : ker_b.row(i).support()) x.set(comp[idx]);
    if (!span_red.contains(x)) any_u_outside = true;
  }

  auto try_support = [&](const std::vector<std::size_t> &sup) -> std::optional<BitVector> {
    // solve b y = a s for one completion
    BitVector as(pc.kernel_of->rows());
    for (auto i : sup) as ^= kt.row(positions[i]);
    auto y = solve_right(b, BitMatrix::from_rows({as}, as.size()).transposed());
    if (!y) return std::nullopt;
    BitVector x(n);
    for (auto i : sup) x.set(positions[i]);
    for (std::size_t j = 0; j < comp.size(); ++j)
      if (y->get(j, 0)) x.set(comp[j]);
    if (!span_red.contains(x)) return x;
    if (any_u_outside) {
      for (std::size_t i = 0; i < ker_b.rows(); ++i) {
        BitVector u(n);
        for (auto idx : ker_b.row(i).support()) u.set(comp[idx]);
        if (!span_red.contains(u)) return x ^ u;
      }
    }
    return std::nullopt;
  };

  const std::size_t s_len = positions.size();
  std::vector<std::size_t> sup;
  BitVector syn(lat.cols());
  std::optional<BitVector> found;
  auto rec = [&](auto &&self, std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      if (!syn.is_zero()) return false;
      if (auto x = try_support(sup)) {
        found = *x;
        return true;
      }
      return false;
    }
    for (std::size_t j = start; j + left <= s_len; ++j) {
      syn ^= lat.row(j);
      sup.push_back(j);
      if (self(self, j + 1, left - 1)) return true;
      sup.pop_back();
      syn ^= lat.row(j);
    }
    return false;
  };
  for (std::size_t w = 1; w <= cap; ++w) {
    syn = BitVector(lat.cols());
    sup.clear();
    if (rec(rec, 0, w)) {
      r.min_weight = w;
      r.exact = true;
      r.witness = found;
      return r;
    }
  }
  r.min_weight = cap + 1;
  r.exact = false;
  return r;
}

SectorWeightReport min_weight_impl(const ProductRecord &p,
                                   const std::vector<std::size_t> &positions,
                                   const std::string &label, char pauli,
                                   const FtBudget &budget) {
  const auto pc = pieces_for(p, pauli);
  if (pc.kept.rows() == 0) {
    SectorWeightReport r;
    r.sector = label;
    r.pauli = pauli;
    r.method = "formula";
    r.min_weight = p.code.n() + 1;  // no logicals
    r.exact = true;
    return r;
  }
  SectorWeightReport r;
  const std::size_t coset_bits = rank(pc.span) + pc.kept.rows();
  if (coset_bits <= budget.coset_log2 && coset_bits < 63) {
    r = coset_scan(p, positions, label, pauli, pc);
  } else {
    r = bounded_scan(p, positions, label, pauli, pc, budget.weight_cap);
  }
  // canonical-row upper bound on the same restriction
  std::vector<std::uint64_t> mask(BitVector::words_for(p.code.n()), 0);
  for (auto q : positions) mask[q >> 6] |= std::uint64_t(1) << (q & 63);
  std::size_t ub = p.code.n() + 1;
  for (std::size_t i = 0; i < pc.kept.rows(); ++i)
    ub = std::min(ub, restricted_weight(pc.kept.row(i), mask));
  r.basis_upper = ub;
  return r;
}

}  // namespace

SectorWeightReport sector_min_weight(const ProductRecord &p, const std::string &sector,
                                     char pauli, const FtBudget &budget) {
  return min_weight_impl(p, sector_positions(p, sector), sector, pauli, budget);
}

SectorWeightReport subset_min_weight(const ProductRecord &p,
                                     const std::vector<std::size_t> &positions,
                                     const std::string &label, char pauli,
                                     const FtBudget &budget) {
  return min_weight_impl(p, positions, label, pauli, budget);
}

SectorDistanceCheck left_sector_distance_check(const ProductRecord &p, const FtBudget &budget) {
  if (p.kind == ProductKind::Hgp && !p.gauge_sectors.count("R"))
    return left_sector_distance_check(left_sector_view(p), budget);
  SectorDistanceCheck out;
  if (p.kind == ProductKind::Hgp) {
    out.expect_z = p.c1->distance(budget.input_cap).value;
    out.expect_x = p.c2->distance(budget.input_cap).value;
  } else if (p.kind == ProductKind::QuantumClassical) {
    const auto dz = distance_z(*p.q1, budget.input_cap);
    const auto dx = distance_x(*p.q1, budget.input_cap);
    const auto dc = p.cc->distance(budget.input_cap);
    if (!dz.exact || !dx.exact || !dc.exact)
      throw std::invalid_argument("left_sector_distance_check: input distances not exact");
    out.expect_z = dz.weight;
    out.expect_x = dx.weight * dc.value;
  } else {
    throw std::invalid_argument("left_sector_distance_check: hgp or qc record required");
  }
  FtBudget b = budget;
  b.weight_cap = std::max(b.weight_cap, std::max(out.expect_x, out.expect_z));
  out.x = sector_min_weight(p, "L", 'X', b);
  out.z = sector_min_weight(p, "L", 'Z', b);
  out.ok = out.x.exact && out.z.exact && out.x.min_weight == out.expect_x &&
           out.z.min_weight == out.expect_z;
  return out;
}

SectorDistanceCheck restricted_row_weight_check(const ProductRecord &p, const FtBudget &budget) {
  if (p.kind != ProductKind::QuantumClassical)
    throw std::invalid_argument("restricted_row_weight_check: qc record required");
  const auto *input_l = p.q1->layout.find("L");
  if (!input_l || p.q1->layout.sectors.size() < 2)
    throw std::invalid_argument("restricted_row_weight_check: input is not a product code");
  const std::size_t nc = p.cc->length();
  std::vector<std::size_t> positions;
  for (std::size_t q = input_l->offset; q < input_l->offset + input_l->size; ++q)
    for (std::size_t c = 0; c < nc; ++c) positions.push_back(q * nc + c);

  SectorDistanceCheck out;
  const auto dz = distance_z(*p.q1, budget.input_cap);
  const auto dx = distance_x(*p.q1, budget.input_cap);
  const auto dc = p.cc->distance(budget.input_cap);
  if (!dz.exact || !dx.exact || !dc.exact)
    throw std::invalid_argument("restricted_row_weight_check: input distances not exact");
  out.expect_z = dz.weight;
  out.expect_x = dx.weight * dc.value;
  FtBudget b = budget;
  b.weight_cap = std::max(b.weight_cap, std::max(out.expect_x, out.expect_z));
  out.x = subset_min_weight(p, positions, "Lambda_L rows", 'X', b);
  out.z = subset_min_weight(p, positions, "Lambda_L rows", 'Z', b);
  out.ok = out.x.exact && out.z.exact && out.x.min_weight == out.expect_x &&
           out.z.min_weight == out.expect_z;
  return out;
}

MiddleBoundsReport middle_sector_bounds_check(const ProductRecord &p, const FtBudget &budget) {
  if (p.kind != ProductKind::QuantumQuantum)
    throw std::invalid_argument("middle_sector_bounds_check: qq record required");
  MiddleBoundsReport out;
  const auto dx1 = distance_x(*p.q1, budget.input_cap);
  const auto dx2 = distance_x(*p.q2, budget.input_cap);
  const auto dz1 = distance_z(*p.q1, budget.input_cap);
  const auto dz2 = distance_z(*p.q2, budget.input_cap);
  if (!dx1.exact || !dx2.exact || !dz1.exact || !dz2.exact)
    throw std::invalid_argument("middle_sector_bounds_check: input distances not exact");
  out.x = sector_min_weight(p, "M", 'X', budget);
  out.z = sector_min_weight(p, "M", 'Z', budget);
  const std::size_t lo_x = std::max(dx1.weight, dx2.weight);
  const std::size_t hi_x = dx1.weight * dx2.weight;
  const std::size_t lo_z = std::max(dz1.weight, dz2.weight);
  const std::size_t hi_z = dz1.weight * dz2.weight;
  out.lower_allowed = lo_x;
  out.upper_allowed = hi_x;
  auto inside = [](const SectorWeightReport &r, std::size_t lo, std::size_t hi) {
    if (r.exact) return r.min_weight >= lo && r.min_weight <= hi;
    // honest bracket: [cap+1, canonical upper] must sit inside [lo, hi]
    return r.min_weight >= lo && r.basis_upper && *r.basis_upper <= hi;
  };
  out.ok = inside(out.x, lo_x, hi_x) && inside(out.z, lo_z, hi_z);
  return out;
}

namespace {

bool subset_block_permutation(const BitMatrix &u, const std::vector<std::size_t> &positions) {
  std::vector<bool> in_s(u.rows(), false);
  for (auto q : positions) in_s[q] = true;
  // invariant subset, no cross terms either way
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (u.get(i, j) && in_s[i] != in_s[j]) return false;
  BitMatrix blk(positions.size(), positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = 0; j < positions.size(); ++j)
      if (u.get(positions[i], positions[j])) blk.set(i, j);
  return blk.is_permutation();
}

}  // namespace

EffectiveDistanceReport effective_distance_report(const Gadget &g, const ProductRecord &p,
                                                  const FtBudget &budget) {
  if (p.kind == ProductKind::Hgp && !p.gauge_sectors.count("R"))
    return effective_distance_report(g, left_sector_view(p), budget);
  EffectiveDistanceReport out;
  if (p.kind == ProductKind::QuantumQuantum) {
    out.protected_sector = "M";
    const auto positions = sector_positions(p, "M");
    if (!subset_block_permutation(g.u, positions)) {
      out.conclusion = "not covered: middle-sector action is not a permutation";
      return out;
    }
    auto mid = middle_sector_bounds_check(p, budget);
    if (!mid.ok) {
      out.conclusion = "not covered: middle-sector minima outside the allowed interval";
      return out;
    }
    out.covered = true;
    out.d_eff_x_lower = mid.lower_allowed;
    out.d_eff_z_lower = std::max(distance_z(*p.q1, budget.input_cap).weight,
                                 distance_z(*p.q2, budget.input_cap).weight);
    out.d_eff_x_upper = mid.upper_allowed;
    out.d_eff_z_upper = distance_z(*p.q1, budget.input_cap).weight *
                        distance_z(*p.q2, budget.input_cap).weight;
    out.conclusion =
        "middle-sector action is a permutation; fault distances preserved up to the "
        "[max, product] interval";
    return out;
  }

  out.protected_sector = "L";
  const auto full_l = sector_positions(p, "L");
  bool restricted = false;
  std::vector<std::size_t> positions = full_l;
  if (!subset_block_permutation(g.u, positions)) {
    // quantum x classical lift of a product gadget: fall back to the rows
    // belonging to the input code's own left sector
    if (p.kind == ProductKind::QuantumClassical && p.q1->layout.find("L") &&
        p.q1->layout.sectors.size() >= 2) {
      const auto *il = p.q1->layout.find("L");
      positions.clear();
      const std::size_t nc = p.cc->length();
      for (std::size_t q = il->offset; q < il->offset + il->size; ++q)
        for (std::size_t c = 0; c < nc; ++c) positions.push_back(q * nc + c);
      restricted = true;
      if (!subset_block_permutation(g.u, positions)) {
        out.conclusion = "not covered: protected-sector action is not a permutation";
        return out;
      }
      out.protected_sector = "Lambda_L rows";
    } else {
      out.conclusion = "not covered: left-sector action is not a permutation";
      return out;
    }
  }
  auto check = restricted ? restricted_row_weight_check(p, budget)
                          : left_sector_distance_check(p, budget);
  if (!check.ok) {
    out.conclusion = "not covered: sector minima do not match the product formulas";
    return out;
  }
  out.covered = true;
  out.d_eff_x_lower = check.expect_x;
  out.d_eff_z_lower = check.expect_z;
  out.conclusion = "protected-sector action is a permutation and the sector minima equal the "
                   "formula values: effective distance preserved";
  return out;
}

}  // namespace qaut

#include "qaut/gadgets.hpp"

#include <sstream>
#include <stdexcept>

namespace qaut {

namespace {

BitMatrix step_matrix(const CircuitStep &s, std::size_t n) {
  BitMatrix e = BitMatrix::identity(n);
  if (s.kind == CircuitStep::Kind::Swap) {
    e.set(s.a, s.a, false);
    e.set(s.b, s.b, false);
    e.set(s.a, s.b);
    e.set(s.b, s.a);
  } else {
    // CNOT(control a, target b) on X supports: e_a -> e_a + e_b
    e.set(s.a, s.b);
  }
  return e;
}

}  // namespace

BitMatrix replay_circuit(const std::vector<CircuitStep> &steps, std::size_t n) {
  BitMatrix acc = BitMatrix::identity(n);
  for (const auto &s : steps) acc = acc * step_matrix(s, n);
  return acc;
}

std::size_t circuit_depth(const std::vector<CircuitStep> &steps) {
  std::size_t max_wire = 0;
  for (const auto &s : steps) max_wire = std::max({max_wire, s.a, s.b});
  std::vector<std::size_t> last_write(max_wire + 1, 0), last_read(max_wire + 1, 0);
  std::size_t depth = 0;
  for (const auto &s : steps) {
    const bool swap = s.kind == CircuitStep::Kind::Swap;
    std::vector<std::size_t> reads = swap ? std::vector<std::size_t>{s.a, s.b}
                                          : std::vector<std::size_t>{s.a};
    std::vector<std::size_t> writes = swap ? std::vector<std::size_t>{s.a, s.b}
                                           : std::vector<std::size_t>{s.b};
    std::size_t layer = 0;
    for (auto r : reads) layer = std::max(layer, last_write[r]);
    for (auto w : writes) layer = std::max({layer, last_write[w], last_read[w]});
    ++layer;
    for (auto r : reads) last_read[r] = std::max(last_read[r], layer);
    for (auto w : writes) last_write[w] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

InvertibleCircuit decompose(const BitMatrix &m) {
  if (m.rows() != m.cols() || !inverse(m)) throw std::invalid_argument("decompose: singular");
  const std::size_t n = m.rows();
  BitMatrix work = m;
  std::vector<CircuitStep> steps;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !work.get(piv, c)) ++piv;
    if (piv != c) {
      work.swap_rows(piv, c);
      steps.push_back({CircuitStep::Kind::Swap, piv, c});
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && work.get(r, c)) {
        work.xor_row_into(c, r);
        // row r += row c  <=>  CNOT(control r, target c) in the X-row picture
        steps.push_back({CircuitStep::Kind::Cnot, r, c});
      }
    }
  }
  InvertibleCircuit out{m, std::move(steps), 0};
  out.depth = circuit_depth(out.steps);
  return out;
}

namespace {

Permutation kron_perm_first(const Permutation &p, std::size_t copies) {
  // p (x) I on indices (i, j) -> (p(i), j)
  std::vector<std::uint32_t> img(p.size() * copies);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < copies; ++j)
      img[i * copies + j] = static_cast<std::uint32_t>(p(i) * copies + j);
  return Permutation::from_images(std::move(img));
}

Permutation kron_perm_second(std::size_t copies, const Permutation &p) {
  // I (x) p on indices (i, j) -> (i, p(j))
  std::vector<std::uint32_t> img(p.size() * copies);
  for (std::size_t i = 0; i < copies; ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      img[i * p.size() + j] = static_cast<std::uint32_t>(i * p.size() + p(j));
  return Permutation::from_images(std::move(img));
}

std::vector<CircuitStep> lift_steps_first(const std::vector<CircuitStep> &steps,
                                          std::size_t copies) {
  std::vector<CircuitStep> out;
  out.reserve(steps.size() * copies);
  for (const auto &s : steps)
    for (std::size_t j = 0; j < copies; ++j)
      out.push_back({s.kind, s.a * copies + j, s.b * copies + j});
  return out;
}

std::vector<CircuitStep> lift_steps_second(std::size_t copies,
                                           const std::vector<CircuitStep> &steps,
                                           std::size_t block) {
  std::vector<CircuitStep> out;
  out.reserve(steps.size() * copies);
  for (const auto &s : steps)
    for (std::size_t i = 0; i < copies; ++i)
      out.push_back({s.kind, i * block + s.a, i * block + s.b});
  return out;
}

SectorAction perm_action(std::string sector, Permutation p) {
  SectorAction a;
  a.sector = std::move(sector);
  a.is_permutation = true;
  a.matrix = p.as_matrix();
  a.perm = std::move(p);
  a.depth = 0;
  return a;
}

SectorAction matrix_action(std::string sector, BitMatrix m, std::vector<CircuitStep> steps,
                           std::size_t depth) {
  SectorAction a;
  a.sector = std::move(sector);
  a.is_permutation = m.is_permutation();
  if (a.is_permutation) {
    a.perm = Permutation::from_matrix(m);
    a.depth = 0;
  } else {
    a.circuit = InvertibleCircuit{m, steps, depth};
    a.depth = depth;
  }
  a.matrix = std::move(m);
  return a;
}

Gadget assemble(const ProductRecord &p, std::string provenance,
                std::vector<SectorAction> actions, BitMatrix w, BitMatrix w_prime) {
  Gadget g;
  g.provenance = std::move(provenance);
  std::vector<BitMatrix> blocks;
  g.permutation_only = true;
  g.depth = 0;
  for (auto &a : actions) {
    blocks.push_back(a.matrix);
    g.permutation_only = g.permutation_only && a.is_permutation;
    g.depth = std::max(g.depth, a.depth);
  }
  g.u = direct_sum(blocks);
  g.w = std::move(w);
  g.w_prime = std::move(w_prime);
  g.actions = std::move(actions);
  g.permutation_only = g.permutation_only && g.w.is_permutation() && g.w_prime.is_permutation();

  // construction-time identity checks
  const auto &code = p.code;
  if (code.h_x * g.u != g.w * code.h_x)
    throw std::logic_error("gadget build: H_X U != W H_X");
  const auto uinv = inverse(g.u);
  if (!uinv) throw std::logic_error("gadget build: U singular");
  if (code.h_z * uinv->transposed() != g.w_prime * code.h_z)
    throw std::logic_error("gadget build: H_Z U^-T != W' H_Z");
  g.v_bar = logical_action(g.u, p.kept_basis(), code, false);
  return g;
}

}  // namespace

BitMatrix logical_action(const BitMatrix &u, const LogicalBasis &basis, const CssCode &code,
                         bool z_side) {
  const BitMatrix &rows = z_side ? basis.g_z : basis.g_x;
  const BitMatrix &stab = z_side ? code.h_z : code.h_x;
  const std::size_t n = code.n(), k = rows.rows();
  RowReducer stab_red(n);
  stab_red.add_rows(stab);
  RowReducer solver(n + k);
  for (std::size_t i = 0; i < k; ++i) {
    auto hat = stab_red.reduce(rows.row(i));
    BitVector aug(n + k);
    for (auto s : hat.support()) aug.set(s);
    aug.set(n + i);
    solver.add(std::move(aug));
  }
  BitMatrix v(k, k);
  const auto transformed = rows * u;
  for (std::size_t i = 0; i < k; ++i) {
    auto hat = stab_red.reduce(transformed.row(i));
    BitVector aug(n + k);
    for (auto s : hat.support()) aug.set(s);
    auto residue = solver.reduce(std::move(aug));
    for (std::size_t j = 0; j < n; ++j)
      if (residue.get(j))
        throw std::logic_error("logical_action: transformed row leaves the code");
    for (std::size_t j = 0; j < k; ++j)
      if (residue.get(n + j)) v.set(i, j);
  }
  return v;
}

Gadget lift_hgp(const ProductRecord &p, WhichFactor which, const CodeAutomorphism &aut) {
  if (p.kind != ProductKind::Hgp) throw std::invalid_argument("lift_hgp: hgp record required");
  const std::size_t n1 = p.c1->length(), m1 = p.c1->num_checks();
  const std::size_t n2 = p.c2->length(), m2 = p.c2->num_checks();
  std::ostringstream prov;
  std::vector<SectorAction> actions;
  BitMatrix w, wp;
  if (which == WhichFactor::First) {
    if (aut.sigma.size() != n1) throw std::invalid_argument("lift_hgp: automorphism size");
    prov << "hgp.first " << aut.sigma.to_cycle_string();
    actions.push_back(perm_action("L", kron_perm_first(aut.sigma, n2)));
    if (auto wperm = Permutation::from_matrix(aut.w)) {
      actions.push_back(perm_action("R", kron_perm_first(*wperm, m2)));
    } else {
      auto circ = decompose(aut.w);
      actions.push_back(matrix_action("R", kron(aut.w, BitMatrix::identity(m2)),
                                      lift_steps_first(circ.steps, m2), circ.depth));
    }
    w = kron(aut.w, BitMatrix::identity(n2));
    wp = kron(aut.sigma.as_matrix(), BitMatrix::identity(m2));
  } else {
    if (aut.sigma.size() != n2) throw std::invalid_argument("lift_hgp: automorphism size");
    prov << "hgp.second " << aut.sigma.to_cycle_string();
    actions.push_back(perm_action("L", kron_perm_second(n1, aut.sigma)));
    const auto winv_t = inverse(aut.w)->transposed();
    if (auto wperm = Permutation::from_matrix(winv_t)) {
      actions.push_back(perm_action("R", kron_perm_second(m1, *wperm)));
    } else {
      auto circ = decompose(winv_t);
      actions.push_back(matrix_action("R", kron(BitMatrix::identity(m1), winv_t),
                                      lift_steps_second(m1, circ.steps, m2), circ.depth));
    }
    w = kron(BitMatrix::identity(m1), aut.sigma.as_matrix());
    wp = kron(BitMatrix::identity(n1), aut.w);
  }
  return assemble(p, prov.str(), std::move(actions), std::move(w), std::move(wp));
}

Gadget lift_qc_classical(const ProductRecord &p, const CodeAutomorphism &aut) {
  if (p.kind != ProductKind::QuantumClassical)
    throw std::invalid_argument("lift_qc_classical: qc record required");
  const std::size_t nq = p.q1->n(), mx = p.q1->h_x.rows(), mz = p.q1->h_z.rows();
  if (aut.sigma.size() != p.cc->length())
    throw std::invalid_argument("lift_qc_classical: automorphism size");
  std::ostringstream prov;
  prov << "qc.classical " << aut.sigma.to_cycle_string();
  std::vector<SectorAction> actions;
  actions.push_back(perm_action("L", kron_perm_second(nq, aut.sigma)));
  const auto winv_t = inverse(aut.w)->transposed();
  const std::size_t mc = p.cc->num_checks();
  if (auto wperm = Permutation::from_matrix(winv_t)) {
    actions.push_back(perm_action("R", kron_perm_second(mx, *wperm)));
  } else {
    auto circ = decompose(winv_t);
    actions.push_back(matrix_action("R", kron(BitMatrix::identity(mx), winv_t),
                                    lift_steps_second(mx, circ.steps, mc), circ.depth));
  }
  BitMatrix w = kron(BitMatrix::identity(mx), aut.sigma.as_matrix());
  BitMatrix wp = direct_sum({kron(BitMatrix::identity(mz), aut.sigma.as_matrix()),
                             kron(BitMatrix::identity(nq), aut.w)});
  return assemble(p, prov.str(), std::move(actions), std::move(w), std::move(wp));
}

Gadget lift_qc_quantum(const ProductRecord &p, const Gadget &input) {
  if (p.kind != ProductKind::QuantumClassical)
    throw std::invalid_argument("lift_qc_quantum: qc record required");
  const std::size_t nq = p.q1->n();
  if (input.u.rows() != nq) throw std::invalid_argument("lift_qc_quantum: gadget size");
  const std::size_t nc = p.cc->length(), mc = p.cc->num_checks();
  std::vector<SectorAction> actions;
  auto lift_first = [&](const std::string &sector, const BitMatrix &m, std::size_t copies,
                        std::size_t depth) {
    if (auto perm = Permutation::from_matrix(m)) {
      actions.push_back(perm_action(sector, kron_perm_first(*perm, copies)));
    } else {
      actions.push_back(
          matrix_action(sector, kron(m, BitMatrix::identity(copies)), {}, depth));
    }
  };
  lift_first("L", input.u, nc, input.depth);
  lift_first("R", input.w, mc, input.depth);
  BitMatrix w = kron(input.w, BitMatrix::identity(nc));
  BitMatrix wp = direct_sum({kron(input.w_prime, BitMatrix::identity(nc)),
                             kron(inverse(input.u)->transposed(), BitMatrix::identity(mc))});
  return assemble(p, "qc.quantum <- " + input.provenance, std::move(actions), std::move(w),
                  std::move(wp));
}

Gadget lift_qq(const ProductRecord &p, WhichFactor which, const Gadget &input) {
  if (p.kind != ProductKind::QuantumQuantum)
    throw std::invalid_argument("lift_qq: qq record required");
  const CssCode &qa = *p.q1;
  const CssCode &qb = *p.q2;
  std::vector<SectorAction> actions;
  BitMatrix w, wp;
  if (which == WhichFactor::First) {
    if (input.u.rows() != qa.n()) throw std::invalid_argument("lift_qq: gadget size");
    const std::size_t mx2 = qb.h_x.rows(), n2 = qb.n(), mz2 = qb.h_z.rows();
    auto lift_first = [&](const std::string &sector, const BitMatrix &m, std::size_t copies,
                          std::size_t depth) {
      if (auto perm = Permutation::from_matrix(m))
        actions.push_back(perm_action(sector, kron_perm_first(*perm, copies)));
      else
        actions.push_back(matrix_action(sector, kron(m, BitMatrix::identity(copies)), {}, depth));
    };
    lift_first("L", inverse(input.w_prime)->transposed(), mx2, input.depth);
    lift_first("M", input.u, n2, input.depth);
    lift_first("R", input.w, mz2, input.depth);
    w = direct_sum({kron(input.u, BitMatrix::identity(mx2)),
                    kron(input.w, BitMatrix::identity(n2))});
    wp = direct_sum({kron(input.w_prime, BitMatrix::identity(n2)),
                     kron(inverse(input.u)->transposed(), BitMatrix::identity(mz2))});
  } else {
    if (input.u.rows() != qb.n()) throw std::invalid_argument("lift_qq: gadget size");
    const std::size_t mx = qa.h_x.rows(), n1 = qa.n(), mz = qa.h_z.rows();
    auto lift_second = [&](const std::string &sector, std::size_t copies, const BitMatrix &m,
                           std::size_t depth) {
      if (auto perm = Permutation::from_matrix(m))
        actions.push_back(perm_action(sector, kron_perm_second(copies, *perm)));
      else
        actions.push_back(matrix_action(sector, kron(BitMatrix::identity(copies), m), {}, depth));
    };
    lift_second("L", mz, input.w, input.depth);
    lift_second("M", n1, input.u, input.depth);
    lift_second("R", mx, inverse(input.w_prime)->transposed(), input.depth);
    w = direct_sum({kron(BitMatrix::identity(n1), input.w),
                    kron(BitMatrix::identity(mx), input.u)});
    wp = direct_sum({kron(BitMatrix::identity(mz), inverse(input.u)->transposed()),
                     kron(BitMatrix::identity(n1), input.w_prime)});
  }
  return assemble(p, std::string("qq.") + (which == WhichFactor::First ? "first" : "second") +
                         " <- " + input.provenance,
                  std::move(actions), std::move(w), std::move(wp));
}

GadgetVerification verify(const Gadget &g, const ProductRecord &p) {
  GadgetVerification r;
  const auto &code = p.code;
  if (code.h_x * g.u != g.w * code.h_x) {
    r.detail = "H_X U != W H_X";
    return r;
  }
  const auto uinv = inverse(g.u);
  if (!uinv) {
    r.detail = "U singular";
    return r;
  }
  const auto uinv_t = uinv->transposed();
  if (code.h_z * uinv_t != g.w_prime * code.h_z) {
    r.detail = "H_Z U^-T != W' H_Z";
    return r;
  }
  const auto kept = p.kept_basis();
  try {
    r.v_bar = logical_action(g.u, kept, code, false);
    r.v_bar_prime = logical_action(uinv_t, kept, code, true);
  } catch (const std::logic_error &e) {
    r.detail = e.what();
    return r;
  }
  const auto vinv = inverse(r.v_bar);
  if (!vinv) {
    r.detail = "V_bar singular";
    return r;
  }
  if (r.v_bar_prime != vinv->transposed()) {
    r.detail = "V_bar' != V_bar^-T";
    return r;
  }
  if (r.v_bar != g.v_bar) {
    r.detail = "stored V_bar mismatch";
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace qaut

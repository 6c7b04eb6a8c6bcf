#include "qaut/products.hpp"

#include <stdexcept>

namespace qaut {

namespace {

BitVector kron_rows(const BitVector &a, const BitVector &b) {
  BitVector out(a.size() * b.size());
  for (auto i : a.support())
    for (auto j : b.support()) out.set(i * b.size() + j);
  return out;
}

BitVector embed(const BitVector &v, std::size_t offset, std::size_t n) {
  BitVector out(n);
  for (auto i : v.support()) out.set(offset + i);
  return out;
}

// Positions where the rows of g restrict to the identity (one per row,
// smallest column first); rows of a RREF kernel basis always have them.
std::vector<std::size_t> systematic_cols_of(const BitMatrix &g) {
  std::vector<std::size_t> cols(g.rows(), g.cols());
  const auto gt = g.transposed();
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const auto col = gt.row(c);
    if (col.weight() != 1) continue;
    const std::size_t r = col.support()[0];
    if (cols[r] == g.cols()) cols[r] = c;
  }
  for (auto c : cols)
    if (c == g.cols()) throw std::logic_error("no systematic column set");
  return cols;
}

LogicalBasis concat(const std::vector<const LogicalBasis *> &parts, std::size_t n) {
  BitMatrix gx(0, n), gz(0, n);
  for (const auto *p : parts) {
    gx = gx.stacked(p->g_x);
    gz = gz.stacked(p->g_z);
  }
  return LogicalBasis{std::move(gx), std::move(gz)};
}

void attach_combined_basis(ProductRecord &p) {
  // kept rows first, then gauge rows; cross-sector pairings vanish (disjoint
  // support) so the stack stays symplectic
  std::vector<const LogicalBasis *> parts;
  for (const auto &sb : p.bases)
    if (!sb.gauge) parts.push_back(&sb.basis);
  for (const auto &sb : p.bases)
    if (sb.gauge) parts.push_back(&sb.basis);
  p.code.basis = concat(parts, p.code.n());
}

ChainComplex quantum_factor_complex(const CssCode &q) {
  ChainComplex a;
  a.dims = {q.h_z.rows(), q.n(), q.h_x.rows()};
  a.maps = {q.h_z.transposed(), q.h_x};
  a.validate_chain();
  return a;
}

}  // namespace

const LogicalBasis *ProductRecord::sector_basis(const std::string &name, bool gauge) const {
  for (const auto &sb : bases)
    if (sb.sector == name && sb.gauge == gauge) return &sb.basis;
  return nullptr;
}

LogicalBasis ProductRecord::kept_basis() const {
  std::vector<const LogicalBasis *> parts;
  for (const auto &sb : bases)
    if (!sb.gauge) parts.push_back(&sb.basis);
  return concat(parts, code.n());
}

LogicalBasis ProductRecord::gauge_basis() const {
  std::vector<const LogicalBasis *> parts;
  for (const auto &sb : bases)
    if (sb.gauge) parts.push_back(&sb.basis);
  return concat(parts, code.n());
}

ProductRecord hgp(const ClassicalCode &ca, const ClassicalCode &cb) {
  const auto &h1 = ca.parity_check();
  const auto &h2 = cb.parity_check();
  const std::size_t n1 = h1.cols(), m1 = h1.rows(), n2 = h2.cols(), m2 = h2.rows();

  ProductRecord p;
  p.kind = ProductKind::Hgp;
  ChainComplex fa{{n1, m1}, {h1}};
  ChainComplex fb{{m2, n2}, {h2.transposed()}};
  p.complex = tensor_product(fa, fb);
  p.qubit_position = 1;
  p.code = css_from_chain(p.complex, 1);
  p.code.layout = SectorLayout{{Sector{"L", 0, n1 * n2, n1, n2},
                                Sector{"R", n1 * n2, m1 * m2, m1, m2}}};
  p.c1 = ca;
  p.c2 = cb;

  const std::size_t n = p.code.n();
  // left: G_X = {e_j} x g2, G_Z = g1 x {e_i}
  const auto sys1 = ca.dim() ? systematic_cols_of(ca.generator()) : std::vector<std::size_t>{};
  const auto sys2 = cb.dim() ? systematic_cols_of(cb.generator()) : std::vector<std::size_t>{};
  {
    std::vector<BitVector> xs, zs;
    for (std::size_t j = 0; j < sys1.size(); ++j)
      for (std::size_t b = 0; b < cb.dim(); ++b) {
        BitVector u(n1);
        u.set(sys1[j]);
        xs.push_back(embed(kron_rows(u, cb.generator().row(b)), 0, n));
      }
    for (std::size_t a = 0; a < ca.dim(); ++a)
      for (std::size_t i = 0; i < sys2.size(); ++i) {
        BitVector u(n2);
        u.set(sys2[i]);
        zs.push_back(embed(kron_rows(ca.generator().row(a), u), 0, n));
      }
    p.bases.push_back(
        {"L", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, false});
  }
  // right: G_X = g_{1,T} x {e_j}, G_Z = {e_i} x g_{2,T}
  const auto g1t = kernel_basis(h1.transposed());
  const auto g2t = kernel_basis(h2.transposed());
  {
    const auto sys1t = g1t.rows() ? systematic_cols_of(g1t) : std::vector<std::size_t>{};
    const auto sys2t = g2t.rows() ? systematic_cols_of(g2t) : std::vector<std::size_t>{};
    std::vector<BitVector> xs, zs;
    for (std::size_t t = 0; t < g1t.rows(); ++t)
      for (std::size_t j = 0; j < sys2t.size(); ++j) {
        BitVector u(m2);
        u.set(sys2t[j]);
        xs.push_back(embed(kron_rows(g1t.row(t), u), n1 * n2, n));
      }
    for (std::size_t i = 0; i < sys1t.size(); ++i)
      for (std::size_t u0 = 0; u0 < g2t.rows(); ++u0) {
        BitVector u(m1);
        u.set(sys1t[i]);
        zs.push_back(embed(kron_rows(u, g2t.row(u0)), n1 * n2, n));
      }
    p.bases.push_back(
        {"R", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, false});
  }
  p.kunneth_total = ca.dim() * cb.dim() + g1t.rows() * g2t.rows();
  attach_combined_basis(p);
  return p;
}

ProductRecord homprod_qc(const CssCode &q, const ClassicalCode &c) {
  if (q.m_x || q.m_z)
    throw std::invalid_argument("homprod_qc: 3-term quantum input required");
  if (!q.basis) throw std::invalid_argument("homprod_qc: quantum input needs a logical basis");
  const auto &h = c.parity_check();
  const std::size_t nq = q.n(), mx = q.h_x.rows(), nc = h.cols(), mc = h.rows();

  ProductRecord p;
  p.kind = ProductKind::QuantumClassical;
  ChainComplex fa = quantum_factor_complex(q);
  ChainComplex fb{{mc, nc}, {h.transposed()}};
  p.complex = tensor_product(fa, fb);
  p.qubit_position = 2;
  p.code = css_from_chain(p.complex, 2);
  p.code.layout =
      SectorLayout{{Sector{"L", 0, nq * nc, nq, nc}, Sector{"R", nq * nc, mx * mc, mx, mc}}};
  p.q1 = q;
  p.cc = c;

  const std::size_t n = p.code.n();
  // kept left sector: G_X = G_X(q) x g, G_Z = G_Z(q) x {e_i}
  const auto sysc = c.dim() ? systematic_cols_of(c.generator()) : std::vector<std::size_t>{};
  {
    std::vector<BitVector> xs, zs;
    for (std::size_t s = 0; s < q.basis->k(); ++s)
      for (std::size_t t = 0; t < c.dim(); ++t)
        xs.push_back(embed(kron_rows(q.basis->g_x.row(s), c.generator().row(t)), 0, n));
    for (std::size_t r = 0; r < q.basis->k(); ++r)
      for (std::size_t i = 0; i < sysc.size(); ++i) {
        BitVector u(nc);
        u.set(sysc[i]);
        zs.push_back(embed(kron_rows(q.basis->g_z.row(r), u), 0, n));
      }
    p.bases.push_back(
        {"L", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, false});
  }
  // spurious right sector (gauge): G_X = G_{X,T} x {e_j}, G_Z = {e_i} x g_T
  const auto gxt = kernel_basis(q.h_x.transposed());  // transpose code of H_X
  const auto gt = kernel_basis(h.transposed());       // transpose code of h
  {
    const auto sys_gxt = gxt.rows() ? systematic_cols_of(gxt) : std::vector<std::size_t>{};
    const auto sys_gt = gt.rows() ? systematic_cols_of(gt) : std::vector<std::size_t>{};
    std::vector<BitVector> xs, zs;
    for (std::size_t t = 0; t < gxt.rows(); ++t)
      for (std::size_t j = 0; j < sys_gt.size(); ++j) {
        BitVector u(mc);
        u.set(sys_gt[j]);
        xs.push_back(embed(kron_rows(gxt.row(t), u), nq * nc, n));
      }
    for (std::size_t i = 0; i < sys_gxt.size(); ++i)
      for (std::size_t u0 = 0; u0 < gt.rows(); ++u0) {
        BitVector u(mx);
        u.set(sys_gxt[i]);
        zs.push_back(embed(kron_rows(u, gt.row(u0)), nq * nc, n));
      }
    if (!xs.empty() || !zs.empty()) {
      p.bases.push_back(
          {"R", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, true});
      p.gauge_sectors.insert("R");
    }
  }
  p.kunneth_total = q.basis->k() * c.dim() + gxt.rows() * gt.rows();
  attach_combined_basis(p);
  return p;
}

ProductRecord homprod_qq(const CssCode &qa, const CssCode &qb) {
  if (qa.m_x || qa.m_z || qb.m_x || qb.m_z)
    throw std::invalid_argument("homprod_qq: 3-term quantum inputs required");
  if (!qa.basis || !qb.basis)
    throw std::invalid_argument("homprod_qq: quantum inputs need logical bases");
  const std::size_t nq = qa.n(), mx = qa.h_x.rows(), mz = qa.h_z.rows();
  const std::size_t nq2 = qb.n(), mx2 = qb.h_x.rows(), mz2 = qb.h_z.rows();

  ProductRecord p;
  p.kind = ProductKind::QuantumQuantum;
  p.complex = tensor_product(quantum_factor_complex(qa), quantum_factor_complex(qb));
  p.qubit_position = 2;
  p.code = css_from_chain(p.complex, 2);
  p.code.layout = SectorLayout{{Sector{"L", 0, mz * mx2, mz, mx2},
                                Sector{"M", mz * mx2, nq * nq2, nq, nq2},
                                Sector{"R", mz * mx2 + nq * nq2, mx * mz2, mx, mz2}}};
  p.q1 = qa;
  p.q2 = qb;

  const std::size_t n = p.code.n();
  const std::size_t moff = mz * mx2, roff = mz * mx2 + nq * nq2;
  // kept middle: G_X (x) G'_X and G_Z (x) G'_Z
  {
    std::vector<BitVector> xs, zs;
    for (std::size_t s = 0; s < qa.basis->k(); ++s)
      for (std::size_t t = 0; t < qb.basis->k(); ++t) {
        xs.push_back(embed(kron_rows(qa.basis->g_x.row(s), qb.basis->g_x.row(t)), moff, n));
        zs.push_back(embed(kron_rows(qa.basis->g_z.row(s), qb.basis->g_z.row(t)), moff, n));
      }
    p.bases.push_back(
        {"M", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, false});
  }
  // gauge left: X rows {e_i} (x) ker(H'_X^T), Z rows ker(H_Z^T) (x) {e_j}
  const auto gzt_a = kernel_basis(qa.h_z.transposed());
  const auto gxt_b = kernel_basis(qb.h_x.transposed());
  if (gzt_a.rows() * gxt_b.rows() > 0) {
    const auto sys_a = systematic_cols_of(gzt_a);
    const auto sys_b = systematic_cols_of(gxt_b);
    std::vector<BitVector> xs, zs;
    for (std::size_t i = 0; i < sys_a.size(); ++i)
      for (std::size_t t = 0; t < gxt_b.rows(); ++t) {
        BitVector u(mz);
        u.set(sys_a[i]);
        xs.push_back(embed(kron_rows(u, gxt_b.row(t)), 0, n));
      }
    for (std::size_t u0 = 0; u0 < gzt_a.rows(); ++u0)
      for (std::size_t j = 0; j < sys_b.size(); ++j) {
        BitVector u(mx2);
        u.set(sys_b[j]);
        zs.push_back(embed(kron_rows(gzt_a.row(u0), u), 0, n));
      }
    p.bases.push_back(
        {"L", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, true});
    p.gauge_sectors.insert("L");
  }
  // gauge right: X rows ker(H_X^T) (x) {e_j}, Z rows {e_i} (x) ker(H'_Z^T)
  const auto gxt_a = kernel_basis(qa.h_x.transposed());
  const auto gzt_b = kernel_basis(qb.h_z.transposed());
  if (gxt_a.rows() * gzt_b.rows() > 0) {
    const auto sys_a = systematic_cols_of(gxt_a);
    const auto sys_b = systematic_cols_of(gzt_b);
    std::vector<BitVector> xs, zs;
    for (std::size_t t = 0; t < gxt_a.rows(); ++t)
      for (std::size_t j = 0; j < sys_b.size(); ++j) {
        BitVector u(mz2);
        u.set(sys_b[j]);
        xs.push_back(embed(kron_rows(gxt_a.row(t), u), roff, n));
      }
    for (std::size_t i = 0; i < sys_a.size(); ++i)
      for (std::size_t u0 = 0; u0 < gzt_b.rows(); ++u0) {
        BitVector u(mx);
        u.set(sys_a[i]);
        zs.push_back(embed(kron_rows(u, gzt_b.row(u0)), roff, n));
      }
    p.bases.push_back(
        {"R", LogicalBasis{BitMatrix::from_rows(xs, n), BitMatrix::from_rows(zs, n)}, true});
    p.gauge_sectors.insert("R");
  }
  p.kunneth_total = qa.basis->k() * qb.basis->k() + gzt_a.rows() * gxt_b.rows() +
                    gxt_a.rows() * gzt_b.rows();
  attach_combined_basis(p);
  return p;
}

std::vector<std::size_t> kunneth_k(const ProductRecord &p) {
  ChainComplex fa, fb;
  switch (p.kind) {
    case ProductKind::Hgp:
      fa = ChainComplex{{p.c1->length(), p.c1->num_checks()}, {p.c1->parity_check()}};
      fb = ChainComplex{{p.c2->num_checks(), p.c2->length()},
                        {p.c2->parity_check().transposed()}};
      break;
    case ProductKind::QuantumClassical:
      fa = quantum_factor_complex(*p.q1);
      fb = ChainComplex{{p.cc->num_checks(), p.cc->length()},
                        {p.cc->parity_check().transposed()}};
      break;
    case ProductKind::QuantumQuantum:
      fa = quantum_factor_complex(*p.q1);
      fb = quantum_factor_complex(*p.q2);
      break;
  }
  const auto ra = fa.homology_ranks();
  const auto rb = fb.homology_ranks();
  std::vector<std::size_t> out(ra.size() + rb.size() - 1, 0);
  for (std::size_t i = 0; i < ra.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j) out[i + j] += ra[i] * rb[j];
  return out;
}

ProductRecord left_sector_view(const ProductRecord &p) {
  if (p.kind != ProductKind::Hgp)
    throw std::invalid_argument("left_sector_view: hgp record required");
  ProductRecord out = p;
  for (auto &sb : out.bases)
    if (sb.sector == "R") sb.gauge = true;
  out.gauge_sectors.insert("R");
  attach_combined_basis(out);
  return out;
}

SubsystemGenerators subsystem_generators(const ProductRecord &p) {
  if (p.kind != ProductKind::Hgp)
    throw std::invalid_argument("subsystem_generators: hgp record required");
  const auto &g1 = p.c1->generator();
  const auto &g2 = p.c2->generator();
  const std::size_t m1 = p.c1->num_checks(), m2 = p.c2->num_checks();
  SubsystemGenerators s;
  s.h_x_sub = kron(BitMatrix::identity(m1), g2) * p.code.h_x;
  s.h_z_sub = kron(g1, BitMatrix::identity(m2)) * p.code.h_z;
  return s;
}

}  // namespace qaut

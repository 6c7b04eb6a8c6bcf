#include "qaut/builders.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qaut {

ClassicalCode k4_reference_code() {
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

SimpleGraph k4_reference_graph() {
  return SimpleGraph::from_edges_keep_order(4,
                                            {{0, 3}, {0, 1}, {1, 2}, {1, 3}, {0, 2}, {2, 3}});
}

namespace {

[[noreturn]] void bad(const std::string &spec, const std::string &why) {
  throw std::invalid_argument("bad spec '" + spec + "': " + why);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

long parse_exponent(const std::string &term, std::size_t from) {
  std::string e = term.substr(from);
  if (!e.empty() && e[0] == '^') e = e.substr(1);
  if (e.empty()) return 1;
  return std::stol(e);
}

// cyclic polynomial: 1 + x + x3 (also x^3, x^-1)
std::vector<std::uint32_t> parse_cyclic_poly(const std::string &poly, std::size_t n,
                                             const std::string &spec) {
  std::vector<std::uint32_t> support;
  for (auto term : split(poly, '+')) {
    if (term.empty()) bad(spec, "empty polynomial term");
    if (term == "1") {
      support.push_back(0);
    } else if (term[0] == 'x') {
      const long e = parse_exponent(term, 1);
      support.push_back(static_cast<std::uint32_t>(((e % (long)n) + (long)n) % (long)n));
    } else {
      bad(spec, "unrecognized term '" + term + "'");
    }
  }
  return support;
}

std::vector<DihedralTerm> parse_dihedral_poly(const std::string &poly, const std::string &spec) {
  std::vector<DihedralTerm> terms;
  for (auto term : split(poly, '+')) {
    if (term.empty()) bad(spec, "empty polynomial term");
    DihedralTerm t;
    std::size_t i = 0;
    if (term == "1") {
      terms.push_back(t);
      continue;
    }
    if (term[i] == 's') {
      t.s = true;
      ++i;
    }
    if (i < term.size()) {
      if (term[i] != 'r') bad(spec, "unrecognized term '" + term + "'");
      t.r_exp = static_cast<int>(parse_exponent(term, i + 1));
    }
    terms.push_back(t);
  }
  return terms;
}

ClassicalCode parse_lift_file(const std::string &path, const std::string &spec) {
  std::ifstream in(path);
  if (!in) bad(spec, "cannot open " + path);
  std::size_t ell = 0, rows = 0, cols = 0;
  if (!(in >> ell >> rows >> cols)) bad(spec, "lift header: ell rows cols");
  BitMatrix h0(rows, cols);
  std::vector<std::vector<std::vector<std::uint32_t>>> shifts(
      rows, std::vector<std::vector<std::uint32_t>>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string entry;
      if (!(in >> entry)) bad(spec, "missing lift entry");
      if (entry == ".") continue;
      h0.set(r, c);
      for (auto tok : split(entry, ',')) {
        const long e = std::stol(tok);
        shifts[r][c].push_back(
            static_cast<std::uint32_t>(((e % (long)ell) + (long)ell) % (long)ell));
      }
    }
  return lifted_code(h0, shifts, ell);
}

}  // namespace

std::optional<SimpleGraph> parse_graph_spec(const std::string &spec) {
  if (spec == "k4") return complete(4);
  if (spec == "k33") return complete_bipartite(3, 3);
  if (spec == "petersen") return petersen();
  if (spec == "k4p") return k4_reference_graph();
  if (spec.rfind("ring:", 0) == 0) return ring(std::stoul(spec.substr(5)));
  if (spec.rfind("complete:", 0) == 0) return complete(std::stoul(spec.substr(9)));
  return std::nullopt;
}

ClassicalCode parse_classical_spec(const std::string &spec) {
  if (spec.rfind("transpose:", 0) == 0)
    return parse_classical_spec(spec.substr(10)).transpose_code();
  if (spec == "k4p") return k4_reference_code();
  if (spec.rfind("rep:", 0) == 0) return repetition_code(std::stoul(spec.substr(4)));
  if (spec.rfind("cycle:", 0) == 0) {
    auto g = parse_graph_spec(spec.substr(6));
    if (!g) bad(spec, "unknown graph");
    return cycle_code(*g);
  }
  if (spec.rfind("hamming:", 0) == 0) return hamming(std::stoul(spec.substr(8)));
  if (spec.rfind("simplex:", 0) == 0) return simplex(std::stoul(spec.substr(8)));
  if (spec.rfind("rm*:", 0) == 0) {
    auto parts = split(spec.substr(4), ',');
    if (parts.size() != 2) bad(spec, "rm*:r,m");
    return punctured_rm(std::stoul(parts[0]), std::stoul(parts[1]));
  }
  if (spec.rfind("rm:", 0) == 0) {
    auto parts = split(spec.substr(3), ',');
    if (parts.size() != 2) bad(spec, "rm:r,m");
    return reed_muller(std::stoul(parts[0]), std::stoul(parts[1]));
  }
  if (spec.rfind("ga:", 0) == 0) {
    auto parts = split(spec.substr(3), ':');
    if (parts.size() != 2) bad(spec, "ga:<group>:<poly>");
    const auto &grp = parts[0];
    if (!grp.empty() && grp[0] == 'z') {
      const std::size_t n = std::stoul(grp.substr(1));
      return group_algebra_code({cyclic_group(n), parse_cyclic_poly(parts[1], n, spec)});
    }
    if (!grp.empty() && grp[0] == 'd') {
      const std::size_t ell = std::stoul(grp.substr(1));
      return dihedral_algebra_code(ell, parse_dihedral_poly(parts[1], spec));
    }
    bad(spec, "group must be z<n> or d<l>");
  }
  if (spec.rfind("lift:", 0) == 0) return parse_lift_file(spec.substr(5), spec);
  if (spec.rfind("f2m:", 0) == 0) {
    std::ifstream in(spec.substr(4));
    if (!in) bad(spec, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    auto m = read_f2m(ss.str());
    if (!m) bad(spec, "bad f2m file");
    return ClassicalCode(*m);
  }
  bad(spec, "unrecognized builder");
}

namespace {

// split "hgp(a,b)" arguments at the top nesting level
std::vector<std::string> split_args(const std::string &inner, const std::string &spec) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) bad(spec, "unbalanced parentheses");
  out.push_back(cur);
  return out;
}

}  // namespace

std::shared_ptr<ProductSpecNode> parse_product_spec(const std::string &spec) {
  auto node = std::make_shared<ProductSpecNode>();
  node->text = spec;
  for (auto [prefix, kind] : {std::pair<const char *, ProductKind>{"hgp(", ProductKind::Hgp},
                              {"qc(", ProductKind::QuantumClassical},
                              {"qq(", ProductKind::QuantumQuantum}}) {
    const std::string pfx = prefix;
    if (spec.rfind(pfx, 0) == 0 && spec.back() == ')') {
      node->kind = ProductSpecNode::Kind::Product;
      node->product_kind = kind;
      const auto inner = spec.substr(pfx.size(), spec.size() - pfx.size() - 1);
      auto args = split_args(inner, spec);
      if (args.size() != 2) bad(spec, "expected two factors");
      for (const auto &a : args) node->children.push_back(parse_product_spec(a));
      return node;
    }
  }
  node->kind = ProductSpecNode::Kind::Classical;
  return node;
}

std::shared_ptr<BuiltProduct> build_product(const std::string &spec) {
  auto node = parse_product_spec(spec);
  if (node->kind != ProductSpecNode::Kind::Product) bad(spec, "not a product spec");
  auto built = std::make_shared<BuiltProduct>();
  built->spec = node;
  built->children.resize(2);
  auto quantum_factor = [&](std::size_t i) -> CssCode {
    if (node->children[i]->kind == ProductSpecNode::Kind::Product) {
      built->children[i] = build_product(node->children[i]->text);
      return built->children[i]->record.code;
    }
    bad(spec, "factor " + std::to_string(i + 1) + " must be a product (quantum) spec");
  };
  switch (node->product_kind) {
    case ProductKind::Hgp:
      if (node->children[0]->kind != ProductSpecNode::Kind::Classical ||
          node->children[1]->kind != ProductSpecNode::Kind::Classical)
        bad(spec, "hgp takes two classical factors");
      built->record = hgp(parse_classical_spec(node->children[0]->text),
                          parse_classical_spec(node->children[1]->text));
      break;
    case ProductKind::QuantumClassical: {
      if (node->children[1]->kind != ProductSpecNode::Kind::Classical)
        bad(spec, "qc takes a quantum and a classical factor");
      auto q = quantum_factor(0);
      built->record = homprod_qc(q, parse_classical_spec(node->children[1]->text));
      break;
    }
    case ProductKind::QuantumQuantum: {
      auto qa = quantum_factor(0);
      auto qb = quantum_factor(1);
      built->record = homprod_qq(qa, qb);
      break;
    }
  }
  return built;
}

namespace {

std::pair<std::string, std::string> split_path(const std::string &path) {
  const auto dot = path.find('.');
  if (dot == std::string::npos) return {path, ""};
  return {path.substr(0, dot), path.substr(dot + 1)};
}

}  // namespace

const ClassicalCode &classical_at_path(const BuiltProduct &built, const std::string &path) {
  const auto [head, rest] = split_path(path);
  const auto &rec = built.record;
  if (rec.kind == ProductKind::Hgp) {
    if (!rest.empty()) throw std::invalid_argument("path continues past an hgp factor");
    if (head == "first") return *rec.c1;
    if (head == "second") return *rec.c2;
  } else if (rec.kind == ProductKind::QuantumClassical) {
    if (head == "classical") {
      if (!rest.empty()) throw std::invalid_argument("path continues past a classical factor");
      return *rec.cc;
    }
    if (head == "quantum") {
      if (!built.children[0]) throw std::invalid_argument("quantum factor is not a product");
      return classical_at_path(*built.children[0], rest);
    }
  } else {
    if (head == "first" || head == "second") {
      const std::size_t i = head == "first" ? 0 : 1;
      if (!built.children[i]) throw std::invalid_argument("factor is not a product");
      return classical_at_path(*built.children[i], rest);
    }
  }
  throw std::invalid_argument("bad lift path segment '" + head + "'");
}

Gadget lift_by_path(const BuiltProduct &built, const std::string &path,
                    const std::string &sigma_cycles) {
  const auto [head, rest] = split_path(path);
  const auto &rec = built.record;
  auto aut_for = [&](const ClassicalCode &c) {
    auto sigma = Permutation::parse_cycles(sigma_cycles, c.length());
    if (!sigma) throw std::invalid_argument("bad cycle string for n=" +
                                            std::to_string(c.length()));
    auto aut = check_automorphism(c, *sigma);
    if (!aut) throw std::invalid_argument("sigma is not an automorphism of the factor");
    return *aut;
  };
  if (rec.kind == ProductKind::Hgp) {
    if (!rest.empty()) throw std::invalid_argument("path continues past an hgp factor");
    if (head == "first") return lift_hgp(rec, WhichFactor::First, aut_for(*rec.c1));
    if (head == "second") return lift_hgp(rec, WhichFactor::Second, aut_for(*rec.c2));
  } else if (rec.kind == ProductKind::QuantumClassical) {
    if (head == "classical") return lift_qc_classical(rec, aut_for(*rec.cc));
    if (head == "quantum") {
      if (!built.children[0]) throw std::invalid_argument("quantum factor is not a product");
      return lift_qc_quantum(rec, lift_by_path(*built.children[0], rest, sigma_cycles));
    }
  } else {
    if (head == "first" || head == "second") {
      const std::size_t i = head == "first" ? 0 : 1;
      if (!built.children[i]) throw std::invalid_argument("factor is not a product");
      return lift_qq(rec, i == 0 ? WhichFactor::First : WhichFactor::Second,
                     lift_by_path(*built.children[i], rest, sigma_cycles));
    }
  }
  throw std::invalid_argument("bad lift path segment '" + head + "'");
}

std::vector<Permutation> natural_generators(const std::string &spec) {
  if (spec.rfind("transpose:", 0) == 0) {
    // vertex/check side of the underlying structure; for cycle codes the
    // transpose swaps the roles, so reuse the base generators' W side
    throw std::invalid_argument("natural_generators: not provided for transpose specs");
  }
  if (spec == "k4p") {
    auto g = k4_reference_graph();
    std::vector<Permutation> out;
    for (const auto &a : graph_automorphisms(g)) out.push_back(a.edge_perm);
    return out;
  }
  if (spec.rfind("cycle:", 0) == 0) {
    auto g = parse_graph_spec(spec.substr(6));
    if (!g) throw std::invalid_argument("unknown graph in " + spec);
    std::vector<Permutation> out;
    for (const auto &a : graph_automorphisms(*g)) out.push_back(a.edge_perm);
    return out;
  }
  if (spec.rfind("ga:z", 0) == 0) {
    const auto n = std::stoul(split(spec, ':')[1].substr(1));
    auto grp = cyclic_group(n);
    std::vector<Permutation> out;
    out.push_back(regular_representation(grp, 1, Side::Right));
    return out;
  }
  if (spec.rfind("ga:d", 0) == 0) {
    const auto ell = std::stoul(split(spec, ':')[1].substr(1));
    return dihedral_tanner_generators(ell);
  }
  throw std::invalid_argument("natural_generators: none for " + spec);
}

std::uint64_t fnv1a(const std::string &data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qaut

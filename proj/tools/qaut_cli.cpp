// Command-line front end: builders, products, automorphism search, gadget
// lifting, sector checks and cup-product verification, emitting reproducible
// JSON (or table) reports.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qaut/builders.hpp"
#include "qaut/cupprod.hpp"
#include "qaut/ftcheck.hpp"

using json = nlohmann::ordered_json;
using namespace qaut;

namespace {

struct Options {
  std::string format = "json";
  std::string out_dir;
  std::size_t cap = 4;
  std::size_t budget_log2 = 22;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::size_t n_cap = 10;
  bool timings = false;
  bool honest_bound = false;  // drives exit code 3
};

std::string version_string() { return "qaut 0.1.0"; }

json make_manifest(const Options &opt, const std::vector<std::string> &args) {
  json m;
  std::string cmd;
  for (std::size_t i = 0; i < args.size(); ++i) {
    // record the program basename so reports are path-independent
    const std::string a =
        i == 0 ? std::filesystem::path(args[0]).filename().string() : args[i];
    cmd += (cmd.empty() ? "" : " ") + a;
  }
  m["command"] = cmd;
  m["version"] = version_string();
  m["seed"] = opt.seed;
  m["workers"] = opt.workers;
  json digests = json::object();
  for (const auto &a : args) {
    for (const char *pfx : {"lift:", "f2m:", "file:"}) {
      const std::string p = pfx;
      auto at = a.find(p);
      if (at != std::string::npos) {
        std::ifstream in(a.substr(at + p.size()));
        if (!in) continue;
        std::stringstream ss;
        ss << in.rdbuf();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a(ss.str())));
        digests[a] = buf;
      }
    }
  }
  if (!digests.empty()) m["input_digests"] = digests;
  return m;
}

void render_table(const json &j, std::ostream &os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto &[key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        render_table(value, os, indent + 1);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto &value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_table(value, os, indent + 1);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const json &j, const Options &opt) {
  if (opt.format == "table")
    render_table(j, std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

void write_file(const std::string &dir, const std::string &name, const std::string &content) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name);
  out << content;
}

json distance_record(const WeightSearchResult &r) {
  json j;
  j["weight"] = r.weight;
  j["exact"] = r.exact;
  if (!r.exact) j["kind"] = "lower-bound";
  if (r.basis_upper) j["basis_upper"] = *r.basis_upper;
  if (r.witness) j["witness"] = r.witness->to_string();
  return j;
}

json code_report(const ClassicalCode &c, Options &opt) {
  json j;
  const auto d = c.distance(opt.cap >= 4 ? opt.cap : 6);
  const auto dd = c.dual_distance(opt.cap >= 4 ? opt.cap : 6);
  if (!d.exact || !dd.exact) opt.honest_bound = true;
  j["n"] = c.length();
  j["k"] = c.dim();
  j["d"] = d.value;
  j["d_exact"] = d.exact;
  j["d_dual"] = dd.value;
  j["d_dual_exact"] = dd.exact;
  return j;
}

json group_report(const ClassicalCode &c, const AutomorphismGroup &g) {
  json j;
  j["order"] = g.elements.size();
  j["complete"] = g.complete;
  j["tanner_order"] = tanner_count(g);
  const auto lg = logical_group(g);
  j["logical_order"] = lg.v_images.size();
  j["kernel_size"] = lg.kernel_size;
  j["affine_ok"] = affine_check(g).ok;
  j["dual_bound_ok"] = dual_bound_check(c, g).ok;
  return j;
}

json sector_report(const SectorWeightReport &r) {
  json j;
  j["sector"] = r.sector;
  j["pauli"] = std::string(1, r.pauli);
  j["achieved"] = r.min_weight;
  j["exact"] = r.exact;
  j["method"] = r.method;
  if (r.basis_upper) j["basis_upper"] = *r.basis_upper;
  if (r.witness) j["witness"] = r.witness->to_string();
  return j;
}

json product_report(const ProductRecord &p, Options &opt) {
  json j;
  j["n"] = p.code.n();
  j["k"] = num_logicals(p.code);
  j["k_kept"] = p.kept_basis().k();
  j["k_gauge"] = p.gauge_basis().k();
  auto v = validate(p.code);
  j["valid"] = v.ok;
  if (!v.ok) j["violation"] = v.detail;
  j["x_check_weight"] = v.max_x_check_weight;
  j["z_check_weight"] = v.max_z_check_weight;
  json sectors = json::array();
  for (const auto &s : p.code.layout.sectors) {
    json sj;
    sj["name"] = s.name;
    sj["size"] = s.size;
    sj["grid"] = {s.grid_rows, s.grid_cols};
    if (const auto *b = p.sector_basis(s.name, false)) sj["logicals"] = b->k();
    if (const auto *b = p.sector_basis(s.name, true)) sj["gauge_logicals"] = b->k();
    sectors.push_back(sj);
  }
  j["sectors"] = sectors;
  const auto dx = distance_x(p.code, opt.cap, opt.workers);
  const auto dz = distance_z(p.code, opt.cap, opt.workers);
  if (!dx.exact || !dz.exact) opt.honest_bound = true;
  j["distance_records"]["x"] = distance_record(dx);
  j["distance_records"]["z"] = distance_record(dz);
  j["kunneth"] = kunneth_k(p);
  return j;
}

json gadget_report(const Gadget &g, const ProductRecord &p) {
  json j;
  j["provenance"] = g.provenance;
  j["permutation_only"] = g.permutation_only;
  j["depth"] = g.depth;
  json sectors = json::array();
  for (const auto &a : g.actions) {
    json sj;
    sj["sector"] = a.sector;
    sj["kind"] = a.is_permutation ? "perm" : "circuit";
    if (a.perm) sj["action"] = a.perm->to_cycle_string();
    if (a.circuit) {
      json steps = json::array();
      for (const auto &st : a.circuit->steps)
        steps.push_back({st.kind == CircuitStep::Kind::Swap ? "swap" : "cnot", st.a, st.b});
      sj["steps"] = steps;
      sj["depth"] = a.circuit->depth;
    }
    sectors.push_back(sj);
  }
  j["sectors"] = sectors;
  j["v_bar"] = write_f2m(g.v_bar);
  const auto ver = verify(g, p);
  j["verified"] = ver.ok;
  if (!ver.ok) j["violation"] = ver.detail;
  return j;
}

Orientation parse_orientation_arg(const std::string &arg, const SimpleGraph &g,
                                  const ClassicalCode &cycle) {
  if (arg == "free") return Orientation{std::vector<EdgeDir>(g.num_edges(), EdgeDir::Free)};
  if (arg.rfind("cw:", 0) == 0) {
    const auto i = std::stoul(arg.substr(3));
    if (i == 0 || i > cycle.dim()) throw std::invalid_argument("cw index out of range");
    auto o = orient_from_codeword(g, cycle.generator().row(i - 1));
    if (!o) throw std::invalid_argument("codeword support is not a single cycle");
    return *o;
  }
  if (arg.rfind("file:", 0) == 0) {
    std::ifstream in(arg.substr(5));
    std::stringstream ss;
    ss << in.rdbuf();
    auto o = read_orientation(ss.str());
    if (!o || o->dirs.size() != g.num_edges())
      throw std::invalid_argument("bad orientation file");
    return *o;
  }
  throw std::invalid_argument("orientation must be free, cw:<i> or file:<path>");
}

std::vector<std::size_t> sector_position_list(const ProductRecord &p, const std::string &name) {
  const auto *s = p.code.layout.find(name);
  if (!s) throw std::invalid_argument("unknown sector " + name);
  std::vector<std::size_t> pos(s->size);
  for (std::size_t i = 0; i < s->size; ++i) pos[i] = s->offset + i;
  return pos;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"product-code automorphism toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", opt.out_dir);
  app.add_option("--cap", opt.cap);
  app.add_option("--budget-log2,--budget", opt.budget_log2);
  app.add_option("--workers", opt.workers);
  app.add_option("--seed", opt.seed);
  app.add_option("--n-cap", opt.n_cap);
  app.add_flag("--timings", opt.timings);

  const std::vector<std::string> args(argv, argv + argc);
  const auto t0 = std::chrono::steady_clock::now();

  auto *cmd_code = app.add_subcommand("code", "build a classical code");
  std::string code_spec;
  cmd_code->add_option("spec", code_spec)->required();

  auto *cmd_aut = app.add_subcommand("aut", "automorphism groups");
  cmd_aut->require_subcommand(1);
  auto *aut_enum = cmd_aut->add_subcommand("enumerate", "exhaustive scan");
  auto *aut_close = cmd_aut->add_subcommand("close", "closure of generators");
  std::string aut_spec_e, aut_spec_c, gens_arg;
  bool natural = false;
  aut_enum->add_option("spec", aut_spec_e)->required();
  aut_close->add_option("spec", aut_spec_c)->required();
  aut_close->add_option("--gens", gens_arg, "semicolon-separated cycle strings");
  aut_close->add_flag("--natural", natural, "use the family's natural generators");

  auto *cmd_product = app.add_subcommand("product", "build a product code");
  std::string prod_kind, prod_a, prod_b;
  cmd_product->add_option("kind", prod_kind)
      ->required()
      ->check(CLI::IsMember({"hgp", "qc", "qq"}));
  cmd_product->add_option("a", prod_a)->required();
  cmd_product->add_option("b", prod_b)->required();

  auto *cmd_gadget = app.add_subcommand("gadget", "lift an automorphism gadget");
  std::string gadget_spec, gadget_path, gadget_sigma;
  cmd_gadget->add_option("product", gadget_spec)->required();
  cmd_gadget->add_option("--path", gadget_path)->required();
  cmd_gadget->add_option("--sigma", gadget_sigma)->required();

  auto *cmd_check = app.add_subcommand("check", "sector and effective-distance checks");
  cmd_check->require_subcommand(1);
  auto *chk_sector = cmd_check->add_subcommand("sector");
  auto *chk_left = cmd_check->add_subcommand("left");
  auto *chk_restricted = cmd_check->add_subcommand("restricted");
  auto *chk_middle = cmd_check->add_subcommand("middle");
  auto *chk_eff = cmd_check->add_subcommand("effective");
  std::string check_spec, check_sector = "L", check_pauli = "Z", eff_path, eff_sigma;
  for (auto *c : {chk_sector, chk_left, chk_restricted, chk_middle, chk_eff})
    c->add_option("product", check_spec)->required();
  chk_sector->add_option("--sector", check_sector);
  chk_sector->add_option("--pauli", check_pauli)->check(CLI::IsMember({"X", "Z"}));
  chk_eff->add_option("--path", eff_path)->required();
  chk_eff->add_option("--sigma", eff_sigma)->required();

  auto *cmd_cup = app.add_subcommand("cup", "copy-cup CZ machinery");
  cmd_cup->require_subcommand(1);
  auto *cup_pairs = cmd_cup->add_subcommand("pairs");
  auto *cup_verify = cmd_cup->add_subcommand("verify");
  std::string cup_spec, o1_arg = "free", o2_arg = "free";
  for (auto *c : {cup_pairs, cup_verify}) {
    c->add_option("product", cup_spec)->required();
    c->add_option("--o1", o1_arg);
    c->add_option("--o2", o2_arg);
  }

  for (auto *sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto *sub2 : sub->get_subcommands({})) sub2->fallthrough();
  }
  CLI11_PARSE(app, argc, argv);

  int exit_code = 0;
  try {
    json out;
    out["manifest"] = make_manifest(opt, args);

    if (*cmd_code) {
      auto c = parse_classical_spec(code_spec);
      out["code"] = code_report(c, opt);
      std::cout << "[" << c.length() << "," << c.dim() << ","
                << out["code"]["d"].get<std::size_t>()
                << "] d_dual=" << out["code"]["d_dual"].get<std::size_t>() << "\n";
      if (!opt.out_dir.empty()) {
        write_file(opt.out_dir, "code.f2m", write_f2m(c.parity_check()));
        write_file(opt.out_dir, "generator.f2m", write_f2m(c.generator()));
        write_file(opt.out_dir, "code.json", out.dump(2) + "\n");
      }
    } else if (*aut_enum) {
      auto c = parse_classical_spec(aut_spec_e);
      out["aut"] = group_report(c, enumerate_automorphisms(c, opt.n_cap));
    } else if (*aut_close) {
      auto c = parse_classical_spec(aut_spec_c);
      std::vector<Permutation> gens;
      if (natural || gens_arg.empty()) {
        gens = natural_generators(aut_spec_c);
      } else {
        std::stringstream ss(gens_arg);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
          auto p = Permutation::parse_cycles(tok, c.length());
          if (!p) throw std::invalid_argument("bad generator " + tok);
          gens.push_back(*p);
        }
      }
      out["aut"] = group_report(c, close_group(c, gens));
      out["aut"]["note"] = "closure lower bound; not claimed exhaustive";
    } else if (*cmd_product) {
      auto built = build_product(prod_kind + "(" + prod_a + "," + prod_b + ")");
      out["product"] = product_report(built->record, opt);
      if (!opt.out_dir.empty()) {
        write_file(opt.out_dir, "h_x.f2m", write_f2m(built->record.code.h_x));
        write_file(opt.out_dir, "h_z.f2m", write_f2m(built->record.code.h_z));
        if (built->record.code.m_z)
          write_file(opt.out_dir, "m_z.f2m", write_f2m(*built->record.code.m_z));
        if (built->record.code.m_x)
          write_file(opt.out_dir, "m_x.f2m", write_f2m(*built->record.code.m_x));
        write_file(opt.out_dir, "product.json", out.dump(2) + "\n");
      }
    } else if (*cmd_gadget) {
      auto built = build_product(gadget_spec);
      auto g = lift_by_path(*built, gadget_path, gadget_sigma);
      out["gadget"] = gadget_report(g, built->record);
      if (!out["gadget"]["verified"].get<bool>()) exit_code = 2;
    } else if (*chk_sector) {
      auto built = build_product(check_spec);
      FtBudget b{opt.budget_log2, opt.cap, 8};
      auto r = subset_min_weight(built->record, sector_position_list(built->record, check_sector),
                                 check_sector, check_pauli[0], b);
      out["sector_check"] = sector_report(r);
      if (!r.exact) opt.honest_bound = true;
    } else if (*chk_left || *chk_restricted) {
      auto built = build_product(check_spec);
      FtBudget b{opt.budget_log2, opt.cap, 8};
      auto r = *chk_left ? left_sector_distance_check(built->record, b)
                         : restricted_row_weight_check(built->record, b);
      out["check"]["expect_x"] = r.expect_x;
      out["check"]["expect_z"] = r.expect_z;
      out["check"]["x"] = sector_report(r.x);
      out["check"]["z"] = sector_report(r.z);
      out["check"]["ok"] = r.ok;
      if (!r.ok) exit_code = 2;
    } else if (*chk_middle) {
      auto built = build_product(check_spec);
      FtBudget b{opt.budget_log2, opt.cap, 8};
      auto r = middle_sector_bounds_check(built->record, b);
      out["check"]["interval"] = {r.lower_allowed, r.upper_allowed};
      out["check"]["x"] = sector_report(r.x);
      out["check"]["z"] = sector_report(r.z);
      out["check"]["ok"] = r.ok;
      if (!r.x.exact || !r.z.exact) opt.honest_bound = true;
      if (!r.ok) exit_code = 2;
    } else if (*chk_eff) {
      auto built = build_product(check_spec);
      auto g = lift_by_path(*built, eff_path, eff_sigma);
      FtBudget b{opt.budget_log2, std::max(opt.cap, std::size_t(4)), 8};
      auto r = effective_distance_report(g, built->record, b);
      out["effective"]["covered"] = r.covered;
      out["effective"]["protected_sector"] = r.protected_sector;
      out["effective"]["conclusion"] = r.conclusion;
      out["effective"]["d_eff_x_lower"] = r.d_eff_x_lower;
      out["effective"]["d_eff_z_lower"] = r.d_eff_z_lower;
      if (r.d_eff_x_upper) out["effective"]["d_eff_x_upper"] = *r.d_eff_x_upper;
      if (r.d_eff_z_upper) out["effective"]["d_eff_z_upper"] = *r.d_eff_z_upper;
      if (!r.covered) exit_code = 2;
    } else if (*cup_pairs || *cup_verify) {
      auto built = build_product(cup_spec);
      auto [g1, g2] = product_graphs(built->record);
      auto o1 = parse_orientation_arg(o1_arg, g1, *built->record.c1);
      auto o2 = parse_orientation_arg(o2_arg, g2, ClassicalCode(incidence_matrix(g2)));
      auto pairs = czpairs(built->record, o1, o2);
      out["cup"]["num_pairs"] = pairs.pairs.size();
      json jp = json::array();
      for (auto [a, b2] : pairs.pairs) jp.push_back({a, b2});
      out["cup"]["pairs"] = jp;
      if (*cup_verify) {
        auto rep = verify_cz(built->record, pairs);
        out["cup"]["ok"] = rep.ok;
        if (!rep.ok) {
          out["cup"]["violation"] = rep.detail;
          exit_code = 2;
        } else {
          out["cup"]["adjacency"] = write_f2m(rep.adjacency);
        }
      }
    }

    if (opt.timings) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      out["manifest"]["timing_ms"] = ms;
    }
    emit(out, opt);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (exit_code == 0 && opt.honest_bound) return 3;
  return exit_code;
}

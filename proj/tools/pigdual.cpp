// Batch front door: load a piggyback setup (built-in family or JSON file),
// resolve an algebra, run the requested certificate, print a JSON report to
// standard output, and optionally drop DOT diagrams into a directory.
// Exit 0: all checks pass. Exit 1: a certified failure with a witness in
// the report. Exit 2: unusable input or a resource bound.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pigdual/json_io.hpp"

namespace {

using namespace pigdual;

struct Options {
  std::string family, setup_file, algebra = "trivial";
  bool no_trivial_sorts = false;
  std::string emit = "json", out_dir = ".";
  long long max_cells = kDefaultMaxCells;
  std::string variant = "du";
};

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_')
               ? c
               : '_';
  return out;
}

// NAME[:param] -> (NAME, param)
std::pair<std::string, int> split_family(const std::string& family) {
  const auto colon = family.find(':');
  if (colon == std::string::npos) return {family, -1};
  const std::string name = family.substr(0, colon);
  const std::string arg = family.substr(colon + 1);
  try {
    size_t used = 0;
    const int v = std::stoi(arg, &used);
    if (used != arg.size() || v < 0) throw std::invalid_argument(arg);
    return {name, v};
  } catch (const std::exception&) {
    throw InputError("family parameter must be a non-negative integer: " + family);
  }
}

FamilySetup resolve_setup(const Options& opt) {
  if (!opt.family.empty() && !opt.setup_file.empty())
    throw InputError("pass either --family or --setup, not both");
  if (!opt.setup_file.empty()) return load_setup(opt.setup_file);
  if (opt.family.empty()) throw InputError("this verb needs --family or --setup");
  const auto [name, param] = split_family(opt.family);
  if (name == "kleene") {
    if (param >= 0) throw InputError("the kleene family takes no parameter");
    return kleene_setup();
  }
  if (name == "sugihara-odd")
    return sugihara_setup(SugiharaMode::odd, param < 0 ? 1 : param);
  if (name == "sugihara-even")
    return sugihara_setup(SugiharaMode::even, param < 0 ? 2 : param);
  if (name == "sugihara-isp-even")
    return sugihara_setup(SugiharaMode::isp_even_bruteforce, param < 0 ? 2 : param,
                          !opt.no_trivial_sorts);
  throw InputError("unknown family " + name +
                   " (known: kleene, sugihara-odd, sugihara-even, sugihara-isp-even)");
}

FinAlgebra resolve_algebra(const Options& opt, const FamilySetup& setup) {
  const std::string& spec = opt.algebra;
  if (spec == "trivial") return trivial_algebra(setup.sorts[0].sig, "trivial");
  if (spec.rfind("free:", 0) == 0) {
    const int k = std::stoi(spec.substr(5));
    return free_algebra(setup.sorts, k, opt.max_cells).algebra;
  }
  if (spec.rfind("power:", 0) == 0) {
    const int k = std::stoi(spec.substr(6));
    return power(setup.sorts[0], k).algebra;
  }
  return load_algebra(spec);
}

void write_dot(const Options& opt, const PointedPoset& P, const std::string& stem) {
  if (opt.emit != "dot") return;
  std::filesystem::create_directories(opt.out_dir);
  const auto path = std::filesystem::path(opt.out_dir) / (sanitize(stem) + ".dot");
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << poset_to_dot(P, sanitize(stem));
}

int verb_check_duality(const Options& opt) {
  const FamilySetup setup = resolve_setup(opt);
  const AlterEgo ego = build_alter_ego(setup.sorts, setup.G, setup.carriers);
  const FinAlgebra A = resolve_algebra(opt, setup);
  const DualityReport rep = duality_check(A, ego, opt.max_cells);
  std::cout << duality_report_to_json(rep, ego).dump(2) << "\n";
  return rep.verdict == DualityVerdict::iso ? 0 : 1;
}

int verb_reconcile(const Options& opt) {
  const FamilySetup setup = resolve_setup(opt);
  const AlterEgo ego = build_alter_ego(setup.sorts, setup.G, setup.carriers);
  const FinAlgebra A = resolve_algebra(opt, setup);
  const ReconcileReport rep = reconcile_check(A, ego);
  std::cout << reconcile_report_to_json(rep).dump(2) << "\n";
  write_dot(opt, rep.Z.poset, "Z_" + A.id);
  return rep.verdict == ReconcileVerdict::iso ? 0 : 1;
}

int verb_dual(const Options& opt) {
  const FamilySetup setup = resolve_setup(opt);
  const AlterEgo ego = build_alter_ego(setup.sorts, setup.G, setup.carriers);
  const FinAlgebra A = resolve_algebra(opt, setup);
  const MultisortedStructure X = dual_D(A, ego);
  json points = json::object();
  for (size_t s = 0; s < ego.sorts.size(); ++s) {
    json maps = json::array();
    for (const auto& h : X.points[s]) maps.push_back(h.map);
    points[ego.sorts[s].id] = maps;
  }
  std::cout << json{{"algebra", A.id}, {"points", points}, {"total", X.total()}}.dump(2)
            << "\n";
  return 0;
}

int verb_priestley(const Options& opt) {
  if (opt.algebra == "trivial" || opt.algebra.rfind("free:", 0) == 0 ||
      opt.algebra.rfind("power:", 0) == 0)
    throw InputError("the priestley verb needs --algebra FILE");
  const Variant v = opt.variant == "d1" ? Variant::d1 : Variant::du;
  const FinAlgebra B = u_reduct(load_algebra(opt.algebra));
  const DualSpace H = hu_dual(B, v);
  const DoubleDualReport rep = double_dual_check(B, v);
  json j{{"variant", opt.variant},
         {"dual", poset_to_json(H.poset)},
         {"double_dual", double_dual_report_to_json(rep, B)}};
  std::cout << j.dump(2) << "\n";
  write_dot(opt, H.poset, "H_" + B.id + (v == Variant::d1 ? "_d1" : "_du"));
  return rep.iso ? 0 : 1;
}

int verb_free(const Options& opt) {
  const FamilySetup setup = resolve_setup(opt);
  int k = 1;
  if (opt.algebra.rfind("free:", 0) == 0) k = std::stoi(opt.algebra.substr(5));
  const FreeAlgebra F = free_algebra(setup.sorts, k, opt.max_cells);
  json j{{"size", F.algebra.size},
         {"generators", F.generators},
         {"algebra", algebra_to_json(F.algebra)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int verb_family(const Options& opt) {
  const FamilySetup setup = resolve_setup(opt);
  std::cout << setup_to_json(setup).dump(2) << "\n";
  return 0;
}

int verb_relations(const Options& opt) {
  const FamilySetup setup = resolve_setup(opt);
  const AlterEgo ego = assemble_alter_ego(setup.sorts, setup.G, setup.carriers);
  json rels = json::array();
  for (const auto& r : ego.R) rels.push_back(relation_to_json(r));
  std::cout << json{{"count", rels.size()}, {"relations", rels}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-scale piggyback dualities over distributive lattices"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  auto add_common = [&](CLI::App* sub, bool wants_algebra) {
    sub->add_option("--family", opt.family, "built-in family NAME[:param]");
    sub->add_option("--setup", opt.setup_file, "piggyback setup JSON file");
    if (wants_algebra)
      sub->add_option("--algebra", opt.algebra,
                      "algebra JSON file, or trivial | free:k | power:k");
    sub->add_flag("--no-trivial-sorts", opt.no_trivial_sorts,
                  "suppress the pointing sorts of sugihara-isp-even");
    sub->add_option("--emit", opt.emit, "dot | json (default json)")
        ->check(CLI::IsMember({"dot", "json"}));
    sub->add_option("--out", opt.out_dir, "directory for DOT files");
    sub->add_option("--max-cells", opt.max_cells, "resource bound on table cells");
  };

  auto* check = app.add_subcommand("check-duality", "certify the ego and test e_A bijectivity");
  add_common(check, true);
  check->callback([&] { handler = verb_check_duality; });

  auto* rec = app.add_subcommand("reconcile", "quotient Z versus the Priestley dual");
  add_common(rec, true);
  rec->callback([&] { handler = verb_reconcile; });

  auto* dual = app.add_subcommand("dual", "list the hom-sets of D(A)");
  add_common(dual, true);
  dual->callback([&] { handler = verb_dual; });

  auto* pri = app.add_subcommand("priestley", "Priestley dual and double-dual check");
  add_common(pri, true);
  pri->add_option("--variant", opt.variant, "du (no bounds) | d1 (top only)")
      ->check(CLI::IsMember({"du", "d1"}));
  pri->callback([&] { handler = verb_priestley; });

  auto* fr = app.add_subcommand("free", "free algebra over the setup's sorts");
  add_common(fr, true);
  fr->callback([&] { handler = verb_free; });

  auto* fam = app.add_subcommand("family", "emit a built-in setup as JSON");
  add_common(fam, false);
  fam->callback([&] { handler = verb_family; });

  auto* rels = app.add_subcommand("relations", "list the piggyback relations");
  add_common(rels, false);
  rels->callback([&] { handler = verb_relations; });

  CLI11_PARSE(app, argc, argv);

  try {
    return handler(opt);
  } catch (const pigdual::CertifiedFailure& e) {
    std::cout << pigdual::failure_to_json(e).dump(2) << "\n";
    return 1;
  } catch (const pigdual::InputError& e) {
    std::cout << pigdual::json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const pigdual::ResourceLimit& e) {
    std::cout << pigdual::json{{"error", "resource"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

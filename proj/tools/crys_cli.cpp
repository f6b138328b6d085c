// Command-line front end: build catalog entries, compute cohomology, certify
// torsion-freeness and reproduce the classification tables.
#include "crys/descriptor.hpp"
#include "crys/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitTorsion = 1;
constexpr int kExitParse = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitCocycle = 4;
constexpr int kExitBudget = 5;

struct Options {
  std::string descriptor;
  std::string cocycle;
  std::uint64_t budget = std::uint64_t(1) << 20;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  long p = 3;
  long n_max = 3;
  long p_max = 5;
};

void emit(const Options& opt, const std::string& body) {
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream os(opt.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + opt.out);
  os << body;
}

// named canonical cocycle, "zero", inline JSON, or a JSON file path
crys::Cocycle resolve_cocycle(const crys::CatalogEntry& entry, const std::string& spec) {
  if (spec.empty()) {
    if (entry.canonical_cocycles.empty())
      throw std::invalid_argument(entry.descriptor + " has no canonical cocycle; pass --cocycle");
    return entry.canonical_cocycles.front().second;
  }
  if (spec == "zero") return crys::Cocycle::zero(entry.lattice);
  if (spec.find('{') != std::string::npos) return crys::cocycle_from_json(entry.lattice, spec);
  for (const auto& [name, T] : entry.canonical_cocycles)
    if (name == spec) return T;
  std::ifstream is(spec, std::ios::binary);
  if (is) {
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return crys::cocycle_from_json(entry.lattice, text);
  }
  std::string known;
  for (const auto& [name, T] : entry.canonical_cocycles)
    known += (known.empty() ? "" : ", ") + name;
  throw std::invalid_argument("unknown cocycle \"" + spec + "\" (canonical: " +
                              (known.empty() ? "none" : known) + ")");
}

int cmd_build(const Options& opt) {
  auto entry = crys::build_entry(opt.descriptor);
  emit(opt, opt.format == "json" ? crys::entry_json(entry) : crys::entry_text(entry));
  return 0;
}

int cmd_h1(const Options& opt) {
  auto entry = crys::build_entry(opt.descriptor);
  auto res = crys::h1(entry.lattice);
  emit(opt, opt.format == "json" ? crys::h1_json(opt.descriptor, res)
                                 : crys::h1_text(opt.descriptor, res));
  return 0;
}

int cmd_certify(const Options& opt) {
  auto entry = crys::build_entry(opt.descriptor);
  crys::Cocycle T = resolve_cocycle(entry, opt.cocycle);
  crys::CrysGroup C(T);
  auto cert = crys::is_torsion_free(C);
  emit(opt, opt.format == "json" ? crys::certificate_json(C, cert)
                                 : crys::certificate_text(C, cert));
  return cert.torsion_free ? 0 : kExitTorsion;
}

int cmd_theorem2(const Options& opt) {
  auto prime = [](long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) return false;
    return true;
  };
  if (!prime(opt.p))
    throw crys::DescriptorError("theorem2: p=" + std::to_string(opt.p) + " is not prime");
  if (opt.p > opt.p_max)
    throw crys::DescriptorError("theorem2: p exceeds the configured maximum " +
                                std::to_string(opt.p_max));
  auto rep = crys::theorem2_report(opt.p, opt.budget, opt.seed);
  emit(opt, opt.format == "json"  ? crys::theorem2_json(rep)
            : opt.format == "tsv" ? crys::theorem2_tsv(rep)
                                  : crys::theorem2_text(rep));
  return 0;
}

int cmd_theorem3(const Options& opt) {
  auto rows = crys::theorem3_rows(opt.n_max, opt.budget, opt.seed);
  emit(opt, opt.format == "json"  ? crys::theorem3_json(rows)
            : opt.format == "tsv" ? crys::theorem3_tsv(rows)
                                  : crys::theorem3_text(rows));
  return 0;
}

int cmd_selftest(const Options& opt) {
  std::ostringstream os;
  bool ok = true;
  auto check = [&](const std::string& name, bool pass) {
    os << (pass ? "pass" : "FAIL") << " " << name << "\n";
    ok = ok && pass;
  };
  check("h1 of the full group ring over C_9 is trivial",
        crys::h1(crys::yi_module(3, 0).lattice).trivial());
  check("h1 of X_1 over C_9 is Z/3",
        crys::h1(crys::xi_module(3, 1).lattice).group_structure().to_string() == "Z/3");
  {
    auto rep = crys::theorem2_report(2, opt.budget, opt.seed);
    check("classification total for p=2 equals 1",
          rep.total_orbits == 1 && rep.total_orbits == rep.expected_total);
  }
  {
    auto rep = crys::theorem2_report(3, opt.budget, opt.seed);
    check("classification total for p=3 equals 3",
          rep.total_orbits == 3 && rep.total_orbits == rep.expected_total);
  }
  {
    bool pass = true;
    for (const auto& row : crys::theorem3_rows(2, opt.budget, opt.seed))
      pass = pass && row.counts.torsion_free_count == row.expected_count;
    check("klein series counts match for n <= 2", pass);
  }
  {
    auto entry = crys::lemma12_module(2);
    auto cert = crys::is_torsion_free(crys::CrysGroup(entry.cocycle("canonical")));
    check("rank-8 klein module certifies torsion-free", cert.torsion_free);
  }
  emit(opt, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with torsion-free crystallographic groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "search budget")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "random seed (default 0)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--out", opt.out, "output path (default stdout)");
  };

  auto* build = app.add_subcommand("build", "construct a catalog entry");
  build->add_option("--descriptor", opt.descriptor, "entry descriptor")->required();
  add_common(build);
  auto* h1cmd = app.add_subcommand("h1", "first cohomology of a catalog lattice");
  h1cmd->add_option("--descriptor", opt.descriptor, "entry descriptor")->required();
  add_common(h1cmd);
  auto* certify = app.add_subcommand("certify", "torsion certificate for a cocycle");
  certify->add_option("--descriptor", opt.descriptor, "entry descriptor")->required();
  certify->add_option("--cocycle", opt.cocycle,
                      "canonical name, \"zero\", inline JSON or a JSON file");
  add_common(certify);
  auto* th2 = app.add_subcommand("theorem2", "classification table over C_{p^2}");
  th2->add_option("-p,--prime", opt.p, "prime p")->required();
  th2->add_option("--max-prime", opt.p_max, "largest admitted p (default 5)");
  add_common(th2);
  auto* th3 = app.add_subcommand("theorem3", "klein series table");
  th3->add_option("-n,--nmax", opt.n_max, "largest series index (default 3)");
  add_common(th3);
  auto* self = app.add_subcommand("selftest", "quick internal consistency checks");
  add_common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (build->parsed()) return cmd_build(opt);
    if (h1cmd->parsed()) return cmd_h1(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (th2->parsed()) return cmd_theorem2(opt);
    if (th3->parsed()) return cmd_theorem3(opt);
    if (self->parsed()) return cmd_selftest(opt);
  } catch (const crys::DescriptorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const crys::ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCocycle;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return 0;
}

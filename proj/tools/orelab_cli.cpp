#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orelab/batch.hpp"
#include "orelab/catalog.hpp"
#include "orelab/localize.hpp"
#include "orelab/maxden.hpp"
#include "orelab/report.hpp"
#include "orelab/ring_io.hpp"
#include "orelab/theorems.hpp"

namespace {

using namespace orelab;

enum Exit { ok = 0, math_failure = 1, usage = 2, guard = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A spec, or a path to a ring file.
FiniteRing load_target(const std::string& target, const Limits& limits) {
  try {
    return construct(target, limits);
  } catch (const BadSpec&) {
    if (!std::filesystem::exists(target)) throw;
  }
  RingSpec file;
  file.kind = RingSpec::Kind::file;
  file.path = target;
  return construct(file, limits);
}

std::vector<Elem> parse_elements(const std::string& text, const FiniteRing& r) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("--set: '" + item + "' is not an element index");
    if (v >= r.order()) throw UsageError("--set: element " + item + " out of range for order " + std::to_string(r.order()));
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

std::vector<std::string> parse_theorems(const std::string& text) {
  if (text == "all") return theorem_ids();
  std::vector<std::string> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (!is_theorem_id(item)) throw UsageError("unknown theorem id '" + item + "'");
    ids.push_back(item);
  }
  if (ids.empty()) throw UsageError("--theorems needs 'all' or a list of ids");
  return ids;
}

void emit(const std::string& report, const std::string& out_dir, const std::string& name, Format format) {
  if (out_dir.empty()) {
    std::cout << report;
    return;
  }
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / (name + (format == Format::json ? ".json" : ".txt"));
  std::ofstream(path) << report;
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring left-localization laboratory"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string out_dir;
  Limits limits = Limits::from_environment();
  app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--guard-order", limits.max_order, "Largest ring order for ideal enumeration (env ORELAB_GUARD_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--guard-bruteforce", limits.max_brute_force_order,
                 "Largest order for exhaustive multiplicative-set search (env ORELAB_GUARD_BRUTEFORCE)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "Write reports into this directory");

  std::string target, set_text, theorems = "all", manifest_path;
  unsigned jobs = 0;
  bool sided = false;

  auto* info = app.add_subcommand("info", "Order, units, ideals, minimal primes, uniform dimension");
  auto* axioms = app.add_subcommand("check-axioms", "Validate the ring tables");
  auto* ore = app.add_subcommand("ore", "Ore and denominator report for the set generated by --set");
  auto* localize = app.add_subcommand("localize", "Build S^-1 R for the set generated by --set");
  auto* prof = app.add_subcommand("profile", "Maximal denominator sets, radical and localizability");
  auto* verify = app.add_subcommand("verify", "Run the theorem-indexed property suite");
  auto* batch = app.add_subcommand("batch", "Profile every ring of a manifest in parallel");

  for (auto* sub : {info, axioms, ore, localize, prof, verify})
    sub->add_option("target", target, "Ring spec such as zmod(6), or a ring file")->required();
  for (auto* sub : {ore, localize}) sub->add_option("--set", set_text, "Comma-separated element indices")->required();
  prof->add_flag("--sided", sided, "Also profile the opposite ring and two-sided sets");
  verify->add_option("--theorems", theorems, "'all' or comma-separated theorem ids");
  batch->add_option("--manifest", manifest_path, "Manifest file")->required();
  batch->add_option("--jobs", jobs, "Worker threads (default: manifest value)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    const Format format = parse_format(format_name);

    if (*batch) {
      const BatchManifest manifest = BatchManifest::load(manifest_path);
      const BatchResult result = run_batch(manifest, jobs ? jobs : manifest.jobs, format, limits);
      const std::filesystem::path dir = !out_dir.empty() ? std::filesystem::path(out_dir) : manifest.output;
      if (!dir.empty()) write_batch(result, dir, format);
      std::cout << result.summary;
      return result.exit_code;
    }

    const FiniteRing r = load_target(target, limits);
    if (*axioms) {
      emit(render_axioms(r, format), out_dir, "axioms", format);
    } else if (*info) {
      emit(render_info(r, format, limits), out_dir, "info", format);
    } else if (*ore) {
      const MulSet s = mul_closure(r, parse_elements(set_text, r));
      emit(render_ore(ore_report(s), format), out_dir, "ore", format);
    } else if (*localize) {
      const MulSet s = mul_closure(r, parse_elements(set_text, r));
      emit(render_fraction(build_fraction_ring(r, s), format), out_dir, "localize", format);
    } else if (*prof) {
      emit(sided ? render_sided(sided_profiles(r, limits), format) : render_profile(profile(r, limits), format), out_dir,
           "profile", format);
    } else if (*verify) {
      const auto checks = verify_theorems(r, parse_theorems(theorems), limits);
      emit(render_checks(checks, format), out_dir, "verify", format);
      for (const auto& c : checks)
        if (!c.pass) return math_failure;
    }
    return ok;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const BadSpec& e) {
    std::cerr << "bad spec: " << e.what() << '\n';
    return usage;
  } catch (const SizeGuardExceeded& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return guard;
  } catch (const AxiomViolation& e) {
    std::cerr << "axiom violation: " << e.what() << '\n';
    return math_failure;
  } catch (const ZeroAbsorbed& e) {
    std::cerr << "not multiplicative: " << e.what() << '\n';
    return math_failure;
  } catch (const NotDenominator& e) {
    std::cerr << e.what() << '\n';
    return math_failure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return math_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}

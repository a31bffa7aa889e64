#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "defv/dsl.hpp"
#include "defv/families.hpp"
#include "defv/scenario.hpp"

namespace {

int write_out(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open output file '" << out_path << "'\n";
    return 2;
  }
  os << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defverify: exact verification of the glued curve and surface deformation "
               "families and their obstruction residues"};
  app.require_subcommand(1);

  std::vector<int64_t> primes;
  int64_t window = 0, box = 0;
  std::string format = "text", mutate, out_path, custom_file;
  int threads = 1;
  bool timing = false;

  auto add_common = [&](CLI::App* sub, bool with_p) {
    if (with_p)
      sub->add_option("--p", primes, "prime characteristic (repeatable)")
          ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write the report to a file");
    sub->add_option("--threads", threads, "worker threads for multiple primes")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "include wall-clock timing in the report");
  };

  CLI::App* curve = app.add_subcommand("curve", "verify the glued curve family");
  add_common(curve, true);
  curve->add_option("--window", window, "half-width of the exponent window")
      ->check(CLI::PositiveNumber);
  curve->add_option("--mutate", mutate, "negative control to apply");

  CLI::App* surface = app.add_subcommand("surface", "verify the glued surface family");
  add_common(surface, true);
  surface->add_option("--box", box, "half-width of the lattice box")
      ->check(CLI::PositiveNumber);
  surface->add_option("--mutate", mutate, "negative control to apply");

  CLI::App* custom = app.add_subcommand("custom", "run a scenario file");
  custom->add_option("file", custom_file, "scenario file")->required();
  add_common(custom, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<defv::Report> reports;
    if (app.got_subcommand(curve) || app.got_subcommand(surface)) {
      std::string kind = app.got_subcommand(curve) ? "curve" : "surface";
      if (primes.empty()) primes = kind == "curve" ? std::vector<int64_t>{2, 3, 5, 7}
                                                   : std::vector<int64_t>{2, 3, 5};
      for (int64_t p : primes) {
        if (!defv::PrimeField::is_prime(static_cast<uint64_t>(p))) {
          std::cerr << "p must be prime, got " << p << "\n";
          return 2;
        }
      }
      if (!mutate.empty() && mutate != defv::kMutFlipPsi43 && mutate != defv::kMutWrongChar &&
          mutate != defv::kMutTrivialKernel && mutate != defv::kMutDropUnitFactor) {
        std::cerr << "unknown mutation '" << mutate << "'\n";
        return 2;
      }
      if (!mutate.empty()) {
        bool curve_only = mutate != defv::kMutFlipPsi43;
        if (curve_only != (kind == "curve")) {
          std::cerr << "mutation '" << mutate << "' applies to the "
                    << (curve_only ? "curve" : "surface") << " scenario\n";
          return 2;
        }
      }
      defv::ScenarioParams base;
      base.window = window;
      base.box = box;
      base.mutation = mutate;
      reports = defv::run_scenarios(kind, primes, base, threads);
    } else {
      std::ifstream in(custom_file, std::ios::binary);
      if (!in) {
        std::cerr << "cannot open scenario file '" << custom_file << "'\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      defv::ScenarioSpec spec;
      try {
        spec = defv::parse_scenario(buf.str());
      } catch (const defv::parse_error& e) {
        std::cerr << custom_file << ": " << e.what() << "\n";
        return 2;
      }
      const defv::AstStatement* h = spec.header();
      if (h && (h->name == "curve" || h->name == "surface")) {
        defv::ScenarioParams sp;
        std::string pv = spec.value_of("p");
        if (pv.empty()) {
          std::cerr << "scenario needs p=<prime>\n";
          return 2;
        }
        sp.p = std::stoll(pv);
        if (!defv::PrimeField::is_prime(static_cast<uint64_t>(sp.p))) {
          std::cerr << "p must be prime, got " << pv << "\n";
          return 2;
        }
        if (!spec.value_of("window").empty()) sp.window = std::stoll(spec.value_of("window"));
        if (!spec.value_of("box").empty()) sp.box = std::stoll(spec.value_of("box"));
        sp.mutation = spec.value_of("mutate");
        reports.push_back(h->name == "curve" ? defv::run_curve_scenario(sp)
                                             : defv::run_surface_scenario(sp));
      } else {
        try {
          reports.push_back(defv::run_custom_scenario(spec));
        } catch (const defv::error& e) {
          std::cerr << custom_file << ": " << e.what() << "\n";
          return 2;
        }
      }
    }

    std::string payload =
        format == "json" ? defv::emit_json(reports, timing) : defv::emit_text(reports, timing);
    int rc = write_out(payload, out_path);
    if (rc != 0) return rc;
    for (const auto& r : reports)
      if (!r.all_pass()) return 1;
    return 0;
  } catch (const defv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

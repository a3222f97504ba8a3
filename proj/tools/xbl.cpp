// xbl: Gram matrices, commuting operators and spectra for exceptional
// Hermite and Laguerre families.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xbl/commuting.hpp"
#include "xbl/config.hpp"
#include "xbl/gram.hpp"
#include "xbl/io.hpp"
#include "xbl/quadrature.hpp"
#include "xbl/spectral.hpp"
#include "xbl/verify.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string out_path(const xbl::RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

int cmd_gram(const xbl::RunConfig& cfg, const xbl::PolyFamily& fam) {
  const xbl::GramMatrix g = xbl::gram_matrix(fam, cfg.N, cfg.omega, cfg.tol);
  xbl::write_json(out_path(cfg, "gram.json"), xbl::to_json(g), cfg);
  xbl::write_csv(out_path(cfg, "gram.csv"), g.entries);
  std::cout << "wrote gram.json, gram.csv (" << g.N + 1 << "x" << g.N + 1 << ")\n";
  return kOk;
}

int cmd_commute(const xbl::RunConfig& cfg, const xbl::PolyFamily& fam) {
  const xbl::GramMatrix g = xbl::gram_matrix(fam, cfg.N, cfg.omega, cfg.tol);
  const xbl::CommutingPair p = xbl::make_commuting_pair(g, cfg.perturbation);
  xbl::write_json(out_path(cfg, "commuting.json"), xbl::to_json(p), cfg);
  std::printf("cond1 %.3e  cond2 %.3e  commutator %.3e\n", p.cond1_residual, p.cond2_residual,
              p.commutator_residual);
  const bool ok = p.cond1_residual < 1e-10 && p.cond2_residual < 1e-9 && p.commutator_residual < 1e-8;
  return ok ? kOk : kVerification;
}

int cmd_spectrum(const xbl::RunConfig& cfg, const xbl::PolyFamily& fam) {
  const xbl::SpectralReport r = xbl::diagonalize_via_commuting(fam, cfg.N, cfg.omega, cfg.tol, cfg.eps);
  xbl::write_json(out_path(cfg, "spectrum.json"), xbl::to_json(r), cfg);
  xbl::write_csv_series(out_path(cfg, "eigs_M.csv"), r.eig_M_direct);
  xbl::write_csv_series(out_path(cfg, "eigs_That.csv"), r.eig_That);
  std::printf("size %zu  near one %d  plunge %d  near zero %d  mismatch %.3e%s\n", r.eig_M_direct.size(),
              r.gaps.near_one, r.gaps.plunge, r.gaps.near_zero, r.spectrum_mismatch,
              r.degenerate_That ? "  (degenerate That spectrum)" : "");
  return kOk;
}

int cmd_verify(const xbl::RunConfig& cfg) {
  const xbl::VerifyReport r = xbl::run_verify_suite(cfg);
  xbl::write_json(out_path(cfg, "verify.json"), xbl::to_json(r), cfg);
  std::cout << xbl::format_table(r);
  std::cout << r.failures() << " failure(s)\n";
  return r.failures() == 0 ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-and-band limiting for exceptional Hermite and Laguerre polynomials"};
  app.set_version_flag("--version", std::string(xbl::kVersion));
  app.require_subcommand(1);

  xbl::RunConfig cfg;
  double alpha = 0.0;
  int N = -1;
  std::string omega_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "xhermite or xlaguerre")
        ->check(CLI::IsMember({"xhermite", "xlaguerre"}));
    sub->add_option("--alpha", alpha, "Laguerre parameter, > 0");
    sub->add_option("--N", N, "time limit (largest degree)");
    sub->add_option("--omega", omega_text, "band limit; 'inf' for the full interval");
    sub->add_option("--tol", cfg.tol, "quadrature tolerance per Gram entry")->capture_default_str();
    sub->add_option("--eps", cfg.eps, "gap profile threshold")->capture_default_str();
    sub->add_option("--out", cfg.out_dir, "output directory (XBL_OUT overrides)")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for sample points")->capture_default_str();
    sub->add_option("--perturb-leading", cfg.perturbation)->group("");
  };
  CLI::App* gram = app.add_subcommand("gram", "write gram.json and gram.csv");
  CLI::App* commute = app.add_subcommand("commute", "write commuting.json");
  CLI::App* spectrum = app.add_subcommand("spectrum", "write spectrum.json, eigs_M.csv, eigs_That.csv");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite, write verify.json");
  for (CLI::App* sub : {gram, commute, spectrum, verify}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  xbl::PolyFamily fam = xbl::PolyFamily::xhermite();
  try {
    const CLI::App* sub = app.get_subcommands().front();
    const bool laguerre = cfg.family == "xlaguerre";
    if (sub->count("--alpha") > 0) cfg.alpha = alpha;
    if (N < 0) N = laguerre ? 10 : 12;
    cfg.N = N;
    if (omega_text.empty()) {
      cfg.omega = laguerre ? 0.7 : 0.3;
    } else if (omega_text == "inf") {
      cfg.omega = std::numeric_limits<double>::infinity();
    } else {
      std::size_t used = 0;
      try {
        cfg.omega = std::stod(omega_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != omega_text.size()) throw UsageError("--omega: not a number: " + omega_text);
    }
    if (const char* env = std::getenv("XBL_OUT"); env != nullptr && *env != '\0') cfg.out_dir = env;
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
    if (!(cfg.eps > 0.0 && cfg.eps < 0.5)) throw UsageError("--eps must lie in (0, 0.5)");
    fam = xbl::make_family(cfg);
    xbl::validate_time_band(fam, cfg.N, cfg.omega);
    std::filesystem::create_directories(cfg.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gram) return cmd_gram(cfg, fam);
    if (*commute) return cmd_commute(cfg, fam);
    if (*spectrum) return cmd_spectrum(cfg, fam);
    return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

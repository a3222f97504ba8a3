#include "xbl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace xbl {

PolyFamily make_family(const RunConfig& cfg) {
  if (cfg.family == "xhermite") {
    if (cfg.alpha) throw std::invalid_argument("--alpha applies to xlaguerre only");
    return PolyFamily::xhermite();
  }
  if (cfg.family == "xlaguerre") {
    if (!cfg.alpha) throw std::invalid_argument("xlaguerre requires --alpha");
    return PolyFamily::xlaguerre(*cfg.alpha);
  }
  throw std::invalid_argument("unknown family '" + cfg.family + "' (expected xhermite or xlaguerre)");
}

namespace {

// JSON has no infinity; the full interval is written as the string "inf".
json real_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

void add_family(json& j, const PolyFamily& fam) {
  j["family"] = fam.name();
  if (fam.kind() == FamilyKind::XLaguerre) j["alpha"] = fam.alpha();
}

}  // namespace

json config_json(const RunConfig& cfg) {
  json j;
  j["family"] = cfg.family;
  if (cfg.alpha) j["alpha"] = *cfg.alpha;
  j["N"] = cfg.N;
  j["omega"] = real_json(cfg.omega);
  j["tol"] = cfg.tol;
  j["eps"] = cfg.eps;
  j["out_dir"] = cfg.out_dir;
  j["seed"] = cfg.seed;
  return j;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const GramMatrix& g) {
  json j;
  add_family(j, g.family);
  j["N"] = g.N;
  j["omega"] = real_json(g.omega);
  j["tol"] = g.tol;
  j["entries"] = matrix_json(g.entries);
  return j;
}

json banded_json(const BandedOperator& a, int size) {
  json rows = json::array();
  const int k = a.bandwidth();
  for (int n = 0; n < size; ++n) {
    for (int j = -k; j <= k; ++j) {
      if (n + j < 0 || n + j >= size) continue;
      rows.push_back(json::array({n, j, a.entry(n, j)}));
    }
  }
  return {{"bandwidth", k}, {"size", size}, {"rows", rows}};
}

json to_json(const CommutingPair& p) {
  json j;
  add_family(j, p.family);
  j["N"] = p.N;
  j["omega"] = p.omega;
  j["bandwidth"] = p.That.bandwidth();
  j["That_block"] = matrix_json(finite_block(p.That, p.N + 1 + p.That.bandwidth()));
  j["cond1_residual"] = p.cond1_residual;
  j["cond2_residual"] = p.cond2_residual;
  j["commutator_residual"] = p.commutator_residual;
  return j;
}

json to_json(const SpectralReport& r) {
  json j;
  add_family(j, r.family);
  j["N"] = r.N;
  j["omega"] = r.omega;
  j["eig_M"] = r.eig_M;
  j["eig_M_direct"] = r.eig_M_direct;
  j["eig_That"] = r.eig_That;
  j["alignment_residual"] = r.alignment_residual;
  j["orthogonality"] = r.orthogonality;
  j["spectrum_mismatch"] = r.spectrum_mismatch;
  j["min_gap_That"] = r.min_gap_That;
  j["degenerate_That"] = r.degenerate_That;
  j["aligned"] = r.aligned;
  j["gap_counts"] = {{"near_one", r.gaps.near_one}, {"plunge", r.gaps.plunge}, {"near_zero", r.gaps.near_zero}};
  return j;
}

void write_json(const std::string& path, json doc, const RunConfig& cfg) {
  doc["config"] = config_json(cfg);
  doc["version"] = kVersion;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

void write_csv(const std::string& path, const Eigen::MatrixXd& m) {
  auto out = open_for_write(path);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) out << (k ? "," : "") << format_double(m(i, k));
    out << '\n';
  }
}

void write_csv_series(const std::string& path, const std::vector<double>& values) {
  auto out = open_for_write(path);
  for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << format_double(values[i]) << '\n';
}

}  // namespace xbl

// JSON and CSV serialization of results.
#ifndef XBL_IO_HPP
#define XBL_IO_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "xbl/banded.hpp"
#include "xbl/commuting.hpp"
#include "xbl/config.hpp"
#include "xbl/gram.hpp"
#include "xbl/spectral.hpp"

namespace xbl {

using nlohmann::json;

json config_json(const RunConfig& cfg);

json matrix_json(const Eigen::MatrixXd& m);  // array of rows

/// {family, alpha?, N, omega, tol, entries}
json to_json(const GramMatrix& g);

/// {bandwidth, size, rows: [[n, j, value], ...]} over the size x size block.
json banded_json(const BandedOperator& a, int size);

/// {family, alpha?, N, omega, That_block, cond1_residual, cond2_residual,
///  commutator_residual}; the block has size N + 1 + bandwidth.
json to_json(const CommutingPair& p);

json to_json(const SpectralReport& r);

/// Adds "config" and "version" keys and writes the document with a trailing
/// newline. Throws std::runtime_error when the file cannot be written.
void write_json(const std::string& path, json doc, const RunConfig& cfg);

/// %.17g formatting.
std::string format_double(double v);

/// One line per row, comma separated, no header.
void write_csv(const std::string& path, const Eigen::MatrixXd& m);

/// Lines "index,value".
void write_csv_series(const std::string& path, const std::vector<double>& values);

}  // namespace xbl

#endif  // XBL_IO_HPP

#pragma once

#include "radspec/model.hpp"
#include "radspec/oracle.hpp"
#include "radspec/recurrence.hpp"
#include "radspec/variational.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace radspec::io {

using nlohmann::json;

/// Parses {"m","g","b","B0","k","omega","l","s"}. Missing keys, wrong types,
/// non-finite numbers and s not in {+1,-1} raise ParseError naming the key.
model::PhysicalParams params_from_json(const json& j);
model::PhysicalParams params_from_file(const std::filesystem::path& path);
json to_json(const model::PhysicalParams& p);

json to_json(const model::EnergyRecord& r);

/// {n, i, gamma, beta_root, W_exact, node_count, poly_coeffs[]}
json to_json(const recurrence::TruncationSolution& s);

/// {gamma, beta, basis_kind, basis_size, eigenvalues[], convergence[], expectation_inv_xi[]}
json to_json(const variational::SpectrumResult& r);

/// {gamma, beta, states[], w_variational[], w_fd[], abs_diff[]}
json to_json(const oracle::CrossValidationReport& r);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace radspec::io

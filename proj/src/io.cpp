#include "radspec/io.hpp"

#include "radspec/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace radspec::io {

namespace {

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(key, std::string("missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number()) throw ParseError(key, std::string("key \"") + key + "\" must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(key, std::string("key \"") + key + "\" must be finite");
  return d;
}

int integer_field(const json& j, const char* key) {
  const double d = number_field(j, key);
  if (d != std::round(d) || std::abs(d) > 1e9) {
    throw ParseError(key, std::string("key \"") + key + "\" must be an integer");
  }
  return static_cast<int>(d);
}

json array_of(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) {
    if (std::isfinite(x)) {
      a.push_back(x);
    } else {
      a.push_back(nullptr);
    }
  }
  return a;
}

}  // namespace

model::PhysicalParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "physical parameters must be a JSON object");
  model::PhysicalParams p;
  p.m = number_field(j, "m");
  p.g = number_field(j, "g");
  p.b = number_field(j, "b");
  p.B0 = number_field(j, "B0");
  p.k = number_field(j, "k");
  p.omega = number_field(j, "omega");
  p.l = integer_field(j, "l");
  p.s = integer_field(j, "s");
  if (p.s != 1 && p.s != -1) throw ParseError("s", "key \"s\" must be +1 or -1");
  return p;
}

model::PhysicalParams params_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open parameter file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("", "malformed JSON in " + path.string() + ": " + e.what());
  }
  return params_from_json(j);
}

json to_json(const model::PhysicalParams& p) {
  return {{"m", p.m}, {"g", p.g},         {"b", p.b}, {"B0", p.B0},
          {"k", p.k}, {"omega", p.omega}, {"l", p.l}, {"s", p.s}};
}

json to_json(const model::EnergyRecord& r) {
  return {{"W", r.W},
          {"omega", r.omega},
          {"energy", r.energy},
          {"k", r.k},
          {"gbB0_sq_over_2m", r.gbB0_sq_over_2m}};
}

json to_json(const recurrence::TruncationSolution& s) {
  return {{"n", s.n},
          {"i", s.i},
          {"gamma", s.gamma},
          {"beta_root", s.beta_root},
          {"W_exact", s.W_exact},
          {"node_count", s.node_count},
          {"poly_coeffs", array_of(s.poly_coeffs)}};
}

json to_json(const variational::SpectrumResult& r) {
  return {{"gamma", r.gamma},
          {"beta", r.beta},
          {"basis_kind", std::string(variational::to_string(r.kind))},
          {"basis_size", r.basis_size},
          {"eigenvalues", array_of(r.eigenvalues)},
          {"convergence", array_of(r.convergence)},
          {"expectation_inv_xi", array_of(r.inv_xi)}};
}

json to_json(const oracle::CrossValidationReport& r) {
  return {{"gamma", r.gamma},
          {"beta", r.beta},
          {"states", r.states},
          {"w_variational", array_of(r.w_variational)},
          {"w_fd", array_of(r.w_fd)},
          {"abs_diff", array_of(r.abs_diff)}};
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace radspec::io

// Copyright 2026 The qentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qentropy/serialize.hpp"

#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace qent {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Index dimension(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) fail(path, "expected a positive integer");
  return Index(j.get<long long>());
}

Seed seed_value(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a non-negative integer seed");
  return j.get<Seed>();
}

Json doubles(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(std::isfinite(x) ? Json(x) : Json(nullptr));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto pos = what.rfind(": ");
    if (pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                     what);
  }
}

Json read_json(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_json(text, source);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

Json matrix_to_json(const CMat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(path + "[0]", "expected a non-empty row");
  CMat m(Index(j.size()), Index(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols)
      fail(rp, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m(Index(i), Index(k)) = complex_from_json(j[i][k], rp + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json channel_to_json(const Channel& c) {
  Json j;
  j["dim_in"] = c.dim_in();
  j["dim_out"] = c.dim_out();
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  j["flags"] = {{"cp", c.flags().cp},
                {"tp", c.flags().tp},
                {"unital", c.flags().unital},
                {"bistochastic", c.flags().bistochastic()}};
  if (c.seed()) j["seed"] = *c.seed();
  if (c.depolarizing_parameter())
    j["family"] = {{"name", "depolarizing"}, {"x", *c.depolarizing_parameter()}};
  return j;
}

Channel channel_from_json(const Json& j) {
  const Index dim_in = dimension(field(j, "dim_in", "channel"), "channel.dim_in");
  const Index dim_out = dimension(field(j, "dim_out", "channel"), "channel.dim_out");
  const Json& kraus = field(j, "kraus", "channel");
  if (!kraus.is_array() || kraus.empty()) fail("channel.kraus", "expected a non-empty array");
  std::vector<CMat> ops;
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    const std::string path = "channel.kraus[" + std::to_string(i) + "]";
    CMat k = matrix_from_json(kraus[i], path);
    if (k.rows() != dim_out || k.cols() != dim_in)
      fail(path, "shape " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                     " does not match dim_out x dim_in = " + std::to_string(dim_out) + "x" +
                     std::to_string(dim_in));
    ops.push_back(std::move(k));
  }
  Channel c{KrausSet(std::move(ops))};
  if (j.contains("seed")) c = c.with_seed(seed_value(j["seed"], "channel.seed"));
  if (j.contains("family")) {
    const Json& fam = j["family"];
    const Json& name = field(fam, "name", "channel.family");
    if (name == "depolarizing") {
      const double x = number(field(fam, "x", "channel.family"), "channel.family.x");
      if (!(x >= 0 && x <= 1)) fail("channel.family.x", "must lie in [0, 1]");
      c = c.with_depolarizing_parameter(x);
    }
  }
  return c;
}

Channel read_channel(std::istream& in, const std::string& source) {
  const Json j = read_json(in, source);
  try {
    return channel_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check_name"] = r.check_name;
  j["inputs_digest"] = r.inputs_digest;
  j["lhs"] = doubles(r.lhs);
  j["rhs"] = doubles(r.rhs);
  j["margin"] = std::isfinite(r.margin) ? Json(r.margin) : Json(nullptr);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["statistical"] = r.statistical;
  Json parts = Json::array();
  for (const auto& c : r.components)
    parts.push_back({{"name", c.name},
                     {"lhs", std::isfinite(c.lhs) ? Json(c.lhs) : Json(nullptr)},
                     {"rhs", std::isfinite(c.rhs) ? Json(c.rhs) : Json(nullptr)},
                     {"margin", std::isfinite(c.margin) ? Json(c.margin) : Json(nullptr)},
                     {"tolerance", c.tolerance},
                     {"passed", c.passed()}});
  j["components"] = std::move(parts);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

Json mixture_to_json(const MixtureParams& m) {
  Json j;
  j["weights"] = m.weights;
  Json us = Json::array();
  for (const auto& u : m.unitaries) us.push_back(matrix_to_json(u));
  j["unitaries"] = std::move(us);
  if (m.depolarizing_x) j["depolarizing_x"] = *m.depolarizing_x;
  return j;
}

MixtureParams mixture_from_json(const Json& j, const std::string& path) {
  MixtureParams m;
  const Json& w = field(j, "weights", path);
  const Json& us = field(j, "unitaries", path);
  if (!w.is_array() || !us.is_array() || w.size() != us.size() || w.empty())
    fail(path, "weights and unitaries must be non-empty arrays of equal length");
  for (std::size_t i = 0; i < w.size(); ++i) {
    m.weights.push_back(number(w[i], path + ".weights[" + std::to_string(i) + "]"));
    m.unitaries.push_back(matrix_from_json(us[i], path + ".unitaries[" + std::to_string(i) + "]"));
  }
  if (j.contains("depolarizing_x"))
    m.depolarizing_x = number(j["depolarizing_x"], path + ".depolarizing_x");
  return m;
}

Json record_to_json(const SlackRecord& r) {
  Json j;
  j["seed"] = r.seed;
  j["origin"] = r.origin;
  if (!r.state_kind.empty()) j["state_kind"] = r.state_kind;
  j["phi"] = mixture_to_json(r.phi);
  j["psi"] = mixture_to_json(r.psi);
  j["state_factor"] = matrix_to_json(r.state_factor);
  j["entropies_bits"] = {{"rho", r.entropies.rho},
                         {"phi_rho", r.entropies.phi_rho},
                         {"psi_rho", r.entropies.psi_rho},
                         {"composed", r.entropies.composed}};
  j["slack_bits"] = r.slack;
  j["converged"] = r.converged;
  if (r.origin == "descent") {
    j["iterations"] = r.iterations;
    j["trace"] = doubles(r.trace);
  }
  j["counterexample_candidate"] = r.counterexample_candidate;
  if (r.verified_slack) j["verified_slack_bits"] = *r.verified_slack;
  j["verified_counterexample"] = r.verified_counterexample;
  return j;
}

SlackRecord record_from_json(const Json& j) {
  SlackRecord r;
  r.seed = seed_value(field(j, "seed", "record"), "record.seed");
  if (j.contains("origin") && j["origin"].is_string()) r.origin = j["origin"];
  if (j.contains("state_kind") && j["state_kind"].is_string()) r.state_kind = j["state_kind"];
  r.phi = mixture_from_json(field(j, "phi", "record"), "record.phi");
  r.psi = mixture_from_json(field(j, "psi", "record"), "record.psi");
  r.state_factor = matrix_from_json(field(j, "state_factor", "record"), "record.state_factor");
  if (r.state_factor.rows() != r.state_factor.cols())
    fail("record.state_factor", "must be square");
  const Json& e = field(j, "entropies_bits", "record");
  r.entropies = {number(field(e, "rho", "record.entropies_bits"), "record.entropies_bits.rho"),
                 number(field(e, "phi_rho", "record.entropies_bits"), "record.entropies_bits.phi_rho"),
                 number(field(e, "psi_rho", "record.entropies_bits"), "record.entropies_bits.psi_rho"),
                 number(field(e, "composed", "record.entropies_bits"),
                        "record.entropies_bits.composed")};
  r.slack = number(field(j, "slack_bits", "record"), "record.slack_bits");
  if (j.contains("converged")) r.converged = j["converged"].get<bool>();
  if (j.contains("iterations")) r.iterations = j["iterations"].get<int>();
  if (j.contains("trace"))
    for (const auto& v : j["trace"]) r.trace.push_back(v.is_number() ? v.get<double>() : NAN);
  if (j.contains("counterexample_candidate"))
    r.counterexample_candidate = j["counterexample_candidate"].get<bool>();
  if (j.contains("verified_slack_bits")) r.verified_slack = j["verified_slack_bits"].get<double>();
  if (j.contains("verified_counterexample"))
    r.verified_counterexample = j["verified_counterexample"].get<bool>();
  return r;
}

void write_records(std::ostream& out, const std::vector<SlackRecord>& records) {
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

std::vector<SlackRecord> read_records(std::istream& in, const std::string& source) {
  std::vector<SlackRecord> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source + ":" + std::to_string(number);
    const Json j = parse_json(line, where);
    try {
      out.push_back(record_from_json(j));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return out;
}

Json saturation_to_json(const SaturationReport& r) {
  Json j;
  j["limitation"] = r.limitation;
  j["records"] = r.records;
  j["near_zero"] = r.near_zero;
  Json clusters = Json::array();
  for (const auto& c : r.clusters)
    clusters.push_back({{"label", c.label}, {"count", c.seeds.size()}, {"seeds", c.seeds}});
  j["clusters"] = std::move(clusters);
  return j;
}

}  // namespace qent

// Copyright 2026 The polylat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polylat/bike.hpp"
#include "polylat/encoding.hpp"
#include "polylat/qary.hpp"
#include "polylat/reduce.hpp"

namespace polylat {

using Json = nlohmann::json;

// ---- basis files ----
// { "q": int, "n": int, "encoding": "dense"|"sparse", "rows": [[poly, ...], ...] }

inline Json basis_to_json(const PolyBasis& b, Encoding enc) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < b.dim(); ++j) row.push_back(encode_poly(b.row(i)[j], enc));
    rows.push_back(std::move(row));
  }
  return Json{{"q", b.field().q()}, {"n", b.dim()}, {"encoding", encoding_name(enc)}, {"rows", rows}};
}

inline PolyBasis basis_from_json(const Json& j) {
  FieldSpec f(j.at("q").get<std::uint32_t>());
  const std::size_t n = j.at("n").get<std::size_t>();
  const Encoding enc = encoding_from_name(j.at("encoding").get<std::string>());
  const Json& rows = j.at("rows");
  if (rows.size() != n) throw ParamError("row count does not match n");
  std::vector<PolyVec> basis_rows;
  basis_rows.reserve(n);
  for (const Json& row : rows) {
    if (row.size() != n) throw ParamError("entry count does not match n");
    std::vector<Poly> entries;
    entries.reserve(n);
    for (const Json& cell : row) entries.push_back(decode_poly(f, cell.get<std::string>(), enc));
    basis_rows.push_back(PolyVec(std::move(entries)));
  }
  return PolyBasis(std::move(basis_rows));
}

inline Json reduce_output_json(const ReduceResult& rr, Encoding enc) {
  Json out = basis_to_json(rr.reduced.basis(), enc);
  Json transform = Json::array();
  for (const PolyVec& row : rr.reduced.transform()) {
    Json r = Json::array();
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(encode_poly(row[j], enc));
    transform.push_back(std::move(r));
  }
  out["transform"] = std::move(transform);
  out["stats"] = Json{{"steps", rr.stats.steps},
                      {"initial_od", rr.stats.initial_od},
                      {"row_adds", rr.stats.row_adds}};
  out["covol"] = rr.reduced.basis().covol().value();
  Json minima = Json::array();
  for (Degree d : rr.reduced.minima()) minima.push_back(d.value());
  out["minima"] = std::move(minima);
  return out;
}

// ---- key files ----
// { "r": int, "v": int, "h": dense-hex, "h1": sparse?, "h2": sparse?, "seed": string }

struct KeyFile {
  std::int64_t r = 0, v = 0;
  Poly h = Poly::zero(FieldSpec(2));
  std::optional<Poly> h1, h2;
  std::string seed;
};

inline Json keypair_to_json(const BikeKeyPair& kp, const std::string& seed, bool include_secret) {
  Json j{{"r", kp.params.r},
         {"v", kp.params.v},
         {"h", encode_dense_hex(kp.h)},
         {"seed", seed}};
  if (include_secret) {
    j["h1"] = encode_sparse(kp.h1);
    j["h2"] = encode_sparse(kp.h2);
  }
  return j;
}

inline KeyFile keyfile_from_json(const Json& j) {
  FieldSpec f(2);
  KeyFile k;
  k.r = j.at("r").get<std::int64_t>();
  k.v = j.at("v").get<std::int64_t>();
  k.h = decode_dense_hex(f, j.at("h").get<std::string>());
  if (j.contains("h1")) k.h1 = decode_sparse(f, j.at("h1").get<std::string>());
  if (j.contains("h2")) k.h2 = decode_sparse(f, j.at("h2").get<std::string>());
  if (j.contains("seed")) k.seed = j.at("seed").get<std::string>();
  return k;
}

// ---- attack results ----

inline Json attack_result_json(const AttackResult& res, std::int64_t r, const AttackConfig& cfg) {
  Json j{{"r", r},
         {"B", cfg.degree_bound},
         {"w_max", cfg.weight_max},
         {"found", res.found.has_value()},
         {"pairs_tested", res.pairs_tested},
         {"d1", res.d1.value()},
         {"d2", res.d2.value()}};
  if (res.found) {
    j["h1p"] = encode_sparse(res.found->h1p);
    j["h2p"] = encode_sparse(res.found->h2p);
    j["mu1"] = encode_sparse(res.found->mu1);
    j["mu2"] = encode_sparse(res.found->mu2);
  }
  return j;
}

// ---- q-ary instances ----
// { "q": int, "k": int, "n": int, "encoding": ..., "A": [[poly, ...], ...], "g": poly }

inline QaryInstance qary_instance_from_json(const Json& j) {
  FieldSpec f(j.at("q").get<std::uint32_t>());
  const Encoding enc = encoding_from_name(j.at("encoding").get<std::string>());
  const std::size_t k = j.at("k").get<std::size_t>();
  const std::size_t n = j.at("n").get<std::size_t>();
  const Json& a = j.at("A");
  if (a.size() != k) throw ParamError("matrix row count does not match k");
  std::vector<std::vector<Poly>> mat;
  mat.reserve(k);
  for (const Json& row : a) {
    if (row.size() != n) throw ParamError("matrix column count does not match n");
    std::vector<Poly> entries;
    entries.reserve(n);
    for (const Json& cell : row) entries.push_back(decode_poly(f, cell.get<std::string>(), enc));
    mat.push_back(std::move(entries));
  }
  Poly g = decode_poly(f, j.at("g").get<std::string>(), enc);
  return QaryInstance(std::move(mat), std::move(g));
}

// ---- experiment reports ----

inline Json experiment_report_json(const ExperimentReport& rep, bool include_timing) {
  Json j{{"r", rep.r},
         {"v", rep.v},
         {"B", rep.degree_bound},
         {"w_max", rep.weight_max},
         {"master_seed", rep.master_seed},
         {"trials", rep.trials.size()}};
  if (rep.degree_cap) j["degree_cap"] = *rep.degree_cap;
  if (!rep.trials.empty()) {
    j["success_fraction"] = rep.success_fraction;
    j["mu_fit_fraction"] = rep.mu_fit_fraction;
    j["mean_pairs_tested"] = rep.mean_pairs_tested;
  }
  Json rows = Json::array();
  for (const TrialRecord& t : rep.trials) {
    Json row{{"trial", t.trial},      {"success", t.success},
             {"pairs_tested", t.pairs_tested}, {"d1", t.d1.value()},
             {"d2", t.d2.value()},    {"mu1_deg", t.mu1_deg.str()},
             {"mu2_deg", t.mu2_deg.str()}, {"mu_fits", t.mu_fits}};
    rows.push_back(std::move(row));
  }
  j["per_trial"] = std::move(rows);
  if (include_timing) {
    j["wall_ms_total"] = rep.wall_ms_total;
    Json walls = Json::array();
    for (const TrialRecord& t : rep.trials) walls.push_back(t.wall_ms);
    j["wall_ms_per_trial"] = std::move(walls);
  }
  return j;
}

/// One CSV row per trial. Timing is an opt-in column so that fixed-seed runs
/// produce byte-identical files by default.
inline std::string experiment_report_csv(const ExperimentReport& rep, bool include_timing) {
  std::ostringstream out;
  out << "trial,success,pairs_tested,d1,d2,mu1_deg,mu2_deg,mu_fits";
  if (include_timing) out << ",wall_ms";
  out << "\n";
  for (const TrialRecord& t : rep.trials) {
    out << t.trial << ',' << (t.success ? 1 : 0) << ',' << t.pairs_tested << ',' << t.d1.value()
        << ',' << t.d2.value() << ',' << t.mu1_deg.str() << ',' << t.mu2_deg.str() << ','
        << (t.mu_fits ? 1 : 0);
    if (include_timing) out << ',' << t.wall_ms;
    out << "\n";
  }
  return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParamError("cannot open for writing: " + path);
  f << text;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParamError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Json read_json_file(const std::string& path) { return Json::parse(read_text_file(path)); }

}  // namespace polylat

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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polylat/io.hpp"
#include "polylat/thue.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

void emit(const polylat::Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    polylat::write_text_file(out_path, text);
}

struct KeygenArgs {
  std::int64_t r = 0, v = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> degree_cap;
  std::string out;
  bool public_only = false;
};

int cmd_keygen(const KeygenArgs& a) {
  polylat::BikeParams params = polylat::check_params(a.r, a.v);
  polylat::Rng rng(a.seed);
  polylat::BikeKeyPair kp = polylat::keygen(params, rng, a.degree_cap);
  emit(polylat::keypair_to_json(kp, std::to_string(a.seed), !a.public_only), a.out);
  return kExitFound;
}

struct AttackArgs {
  std::string key_path;
  std::string pub_hex;
  std::int64_t r = 0;
  std::int64_t degree_bound = 1;
  std::int64_t weight_max = 0;  // 0: take v from the key file
  std::string out;
};

int cmd_attack(const AttackArgs& a) {
  polylat::FieldSpec f(2);
  polylat::Poly h(f);
  std::int64_t r = 0, w_max = a.weight_max;
  if (!a.key_path.empty()) {
    polylat::KeyFile k = polylat::keyfile_from_json(polylat::read_json_file(a.key_path));
    h = k.h;
    r = k.r;
    if (w_max == 0) w_max = k.v;
  } else {
    if (a.pub_hex.empty() || a.r == 0)
      throw polylat::ParamError("need --key, or --pub together with --r");
    h = polylat::decode_dense_hex(f, a.pub_hex);
    r = a.r;
    if (w_max == 0) throw polylat::ParamError("--w-max is required with a raw public key");
  }
  polylat::AttackConfig cfg(a.degree_bound, w_max);
  const std::uint64_t budget = polylat::enum_budget_from_env();
  if (polylat::detail::pow_clamped(2, 2 * static_cast<std::uint64_t>(cfg.degree_bound), budget) > budget)
    throw polylat::ParamError("4^B exceeds the enumeration budget (POLYLAT_BUDGET)");

  polylat::AttackResult res = polylat::attack(h, r, cfg);
  if (res.found &&
      !polylat::verify(h, res.found->h1p, res.found->h2p, r, cfg.weight_max))
    throw polylat::ContractViolationError("attack returned a pair that fails verification");
  emit(polylat::attack_result_json(res, r, cfg), a.out);
  return res.found ? kExitFound : kExitNotFound;
}

int cmd_reduce(const std::string& in_path, const std::string& out_path) {
  polylat::PolyBasis basis = polylat::basis_from_json(polylat::read_json_file(in_path));
  const polylat::Encoding enc = basis.field().binary() ? polylat::Encoding::dense : polylat::Encoding::sparse;
  polylat::ReduceResult rr = polylat::reduce(basis);
  emit(polylat::reduce_output_json(rr, enc), out_path);
  return kExitFound;
}

int cmd_shortest(const std::string& in_path, const std::string& out_path) {
  polylat::PolyBasis basis = polylat::basis_from_json(polylat::read_json_file(in_path));
  const polylat::Encoding enc = basis.field().binary() ? polylat::Encoding::dense : polylat::Encoding::sparse;
  polylat::PolyVec sv = polylat::shortest_vector(basis);
  polylat::Json entries = polylat::Json::array();
  for (std::size_t i = 0; i < sv.size(); ++i) entries.push_back(polylat::encode_poly(sv[i], enc));
  emit(polylat::Json{{"vector", entries}, {"norm", sv.norm().value()}}, out_path);
  return kExitFound;
}

struct ExperimentArgs {
  std::int64_t r = 0, v = 0;
  std::uint64_t trials = 0;
  std::int64_t degree_bound = 1;
  std::int64_t weight_max = 0;
  std::optional<std::int64_t> degree_cap;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool timing = false;
  std::string out, csv;
};

int cmd_experiment(const ExperimentArgs& a) {
  polylat::BikeParams params = polylat::check_params(a.r, a.v);
  polylat::AttackConfig cfg(a.degree_bound, a.weight_max == 0 ? a.v : a.weight_max);
  polylat::ExperimentReport rep =
      polylat::weak_key_experiment(params, a.trials, cfg, a.degree_cap, a.seed, a.threads);
  emit(polylat::experiment_report_json(rep, a.timing), a.out);
  if (!a.csv.empty()) polylat::write_text_file(a.csv, polylat::experiment_report_csv(rep, a.timing));
  return kExitFound;
}

struct BenchArgs {
  std::vector<std::int64_t> r_list;
  std::uint64_t seed = 0;
  int reps = 5;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  if (a.r_list.empty()) throw polylat::ParamError("need at least one r");
  std::ostringstream csv;
  csv << "r,reps,seed,median_ms,ratio\n";
  double prev_median = 0.0;
  for (std::size_t idx = 0; idx < a.r_list.size(); ++idx) {
    const std::int64_t r = a.r_list[idx];
    std::int64_t v = 1;
    while ((v + 2) * (v + 2) <= r) v += 2;  // odd weight near sqrt(r)
    polylat::BikeParams params = polylat::check_params(r, v);
    std::vector<double> times;
    for (int rep = 0; rep < a.reps; ++rep) {
      polylat::Rng rng = polylat::Rng::derive(a.seed, idx * 1000 + rep);
      polylat::BikeKeyPair kp = polylat::keygen(params, rng);
      polylat::PolyBasis lattice = polylat::bike_lattice(kp.h, r);
      const auto t0 = std::chrono::steady_clock::now();
      polylat::ReduceResult rr = polylat::reduce(lattice);
      const auto t1 = std::chrono::steady_clock::now();
      if (polylat::od(rr.reduced.basis()) != 0)
        throw polylat::ContractViolationError("benchmark reduction failed");
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    csv << r << ',' << a.reps << ',' << a.seed << ',' << median << ',';
    if (idx > 0 && prev_median > 0) csv << median / prev_median;  // vs previous row
    csv << "\n";
    prev_median = median;
  }
  if (a.out.empty())
    std::cout << csv.str();
  else
    polylat::write_text_file(a.out, csv.str());
  return kExitFound;
}

struct ThueArgs {
  std::string gamma, b, a_star, t_star;
  std::string out;
};

int cmd_thue(const ThueArgs& a) {
  polylat::ThueInstance inst{polylat::BigInt(a.gamma), polylat::BigInt(a.b),
                             polylat::BigInt(a.a_star), polylat::BigInt(a.t_star)};
  polylat::ThueSolution sol = polylat::thue_solve(inst);
  emit(polylat::Json{{"gamma", a.gamma},
                     {"b", a.b},
                     {"a_star", a.a_star},
                     {"t_star", a.t_star},
                     {"a", sol.a.str()},
                     {"t", sol.t.str()}},
       a.out);
  return kExitFound;
}

int cmd_qary_check(const std::string& in_path, const std::string& out_path) {
  polylat::QaryInstance inst = polylat::qary_instance_from_json(polylat::read_json_file(in_path));
  const polylat::Encoding enc =
      inst.field().binary() ? polylat::Encoding::dense : polylat::Encoding::sparse;
  polylat::PolyBasis basis = polylat::qary_basis(inst);
  auto [covol, bound] = polylat::covol_bound_check(inst);
  polylat::Json j = polylat::basis_to_json(basis, enc);
  j["covol"] = covol.value();
  j["bound"] = bound;
  j["equality"] = covol == polylat::Degree(bound);
  emit(j, out_path);
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattices over F_q[x]: reduction, congruence lattices, weak-key search"};
  app.require_subcommand(1);

  KeygenArgs kg;
  std::int64_t kg_cap = -1;
  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--r", kg.r, "prime block length")->required();
  keygen->add_option("--v", kg.v, "secret weight (odd)")->required();
  keygen->add_option("--seed", kg.seed, "RNG seed");
  keygen->add_option("--degree-cap", kg_cap, "resample until max component degree <= cap");
  keygen->add_option("--out", kg.out, "output path (stdout otherwise)");
  keygen->add_flag("--public-only", kg.public_only, "omit the secret pair");

  AttackArgs at;
  auto* attack = app.add_subcommand("attack", "search for a sparse pair matching a public key");
  attack->add_option("--key", at.key_path, "key file (JSON)");
  attack->add_option("--pub", at.pub_hex, "public key, dense hex");
  attack->add_option("--r", at.r, "block length (with --pub)");
  attack->add_option("--B", at.degree_bound, "brute-force degree bound")->required();
  attack->add_option("--w-max", at.weight_max, "acceptance weight bound (default: v from key file)");
  attack->add_option("--out", at.out, "output path");

  std::string rd_in, rd_out;
  auto* reduce = app.add_subcommand("reduce", "reduce a basis to orthogonality defect 0");
  reduce->add_option("--in", rd_in, "basis file (JSON)")->required();
  reduce->add_option("--out", rd_out, "output path");

  std::string sh_in, sh_out;
  auto* shortest = app.add_subcommand("shortest", "shortest vector of a lattice");
  shortest->add_option("--in", sh_in, "basis file (JSON)")->required();
  shortest->add_option("--out", sh_out, "output path");

  ExperimentArgs ex;
  std::int64_t ex_cap = -1;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo keygen + attack trials");
  experiment->add_option("--r", ex.r)->required();
  experiment->add_option("--v", ex.v)->required();
  experiment->add_option("--trials", ex.trials)->required();
  experiment->add_option("--B", ex.degree_bound, "brute-force degree bound");
  experiment->add_option("--w-max", ex.weight_max, "acceptance weight bound (default v)");
  experiment->add_option("--degree-cap", ex_cap, "plant keys with max component degree <= cap");
  experiment->add_option("--seed", ex.seed, "master seed");
  experiment->add_option("--threads", ex.threads, "worker threads");
  experiment->add_flag("--timing", ex.timing, "include wall-clock columns in outputs");
  experiment->add_option("--out", ex.out, "report JSON path");
  experiment->add_option("--csv", ex.csv, "per-trial CSV path");

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "time basis reduction on random public keys");
  bench->add_option("--r-list", be.r_list, "block lengths, e.g. 509 1019 2029")->required();
  bench->add_option("--seed", be.seed, "workload seed");
  bench->add_option("--reps", be.reps, "repetitions per r (median reported)");
  bench->add_option("--out", be.out, "CSV path (stdout otherwise)");

  ThueArgs th;
  auto* thue = app.add_subcommand("thue", "solve a = b t mod gamma inside a degree box");
  thue->add_option("--gamma", th.gamma)->required();
  thue->add_option("--b", th.b)->required();
  thue->add_option("--a-star", th.a_star)->required();
  thue->add_option("--t-star", th.t_star)->required();
  thue->add_option("--out", th.out, "output path");

  std::string qc_in, qc_out;
  auto* qary = app.add_subcommand("qary-check", "congruence-lattice basis and covolume bound");
  qary->add_option("--in", qc_in, "instance file (JSON)")->required();
  qary->add_option("--out", qc_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*keygen) {
      if (kg_cap >= 0) kg.degree_cap = kg_cap;
      return cmd_keygen(kg);
    }
    if (*attack) return cmd_attack(at);
    if (*reduce) return cmd_reduce(rd_in, rd_out);
    if (*shortest) return cmd_shortest(sh_in, sh_out);
    if (*experiment) {
      if (ex_cap >= 0) ex.degree_cap = ex_cap;
      return cmd_experiment(ex);
    }
    if (*bench) return cmd_bench(be);
    if (*thue) return cmd_thue(th);
    if (*qary) return cmd_qary_check(qc_in, qc_out);
  } catch (const polylat::ContractViolationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

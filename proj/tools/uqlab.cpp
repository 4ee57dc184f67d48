// Copyright 2026 The uqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// uqlab: command-line driver for the oracle-learning laboratory.
//
// Exit codes: 0 claim verified, 1 claim falsified (witness in the report),
// 2 usage, input or capacity error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uqlab/acceptance.hpp"
#include "uqlab/gallery.hpp"
#include "uqlab/polycompile.hpp"
#include "uqlab/problems.hpp"
#include "uqlab/qsim.hpp"
#include "uqlab/report.hpp"
#include "uqlab/useless.hpp"

namespace {

using uq::json;

constexpr int kExitVerified = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("UQLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed UQLAB_SEED\n";
    }
  }
  return 7;
}

struct ProblemArgs {
  std::string gen;
  std::string path;
  int n = 4;
  int p = 5;
  int degree = 1;
};

struct CommonArgs {
  std::string out;
  std::string csv;
  std::uint64_t seed = default_seed();
  int trials = 50;
  double tol = 1e-8;
  uq::Budget budget;
};

void add_problem_options(CLI::App* cmd, ProblemArgs& a, bool k_is_degree) {
  cmd->add_option("--gen", a.gen, "Generator: parity | image-parity | shamir")
      ->check(CLI::IsMember({"parity", "image-parity", "shamir"}));
  cmd->add_option("--problem", a.path, "Problem JSON file");
  cmd->add_option("--n", a.n, "PARITY domain size N");
  cmd->add_option("--p", a.p, "Shamir prime p");
  cmd->add_option("--degree", a.degree, "Shamir polynomial degree k");
  if (k_is_degree) cmd->add_option("--k", a.degree, "Shamir polynomial degree k (alias of --degree)");
}

void add_common_options(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--out", c.out, "Write the JSON report here instead of stdout");
  cmd->add_option("--csv", c.csv, "Also write CSV rows here");
  cmd->add_option("--seed", c.seed, "Random seed (default $UQLAB_SEED or 7)");
  cmd->add_option("--trials", c.trials, "Random algorithms to sample");
  cmd->add_option("--tol", c.tol, "Posterior deviation tolerance");
  cmd->add_option("--max-dim", c.budget.max_dim, "Hilbert dimension ceiling");
  cmd->add_option("--max-functions", c.budget.max_functions, "Function class size ceiling");
  cmd->add_option("--max-transcripts", c.budget.max_transcripts, "Transcript count ceiling");
}

uq::LearningProblem load_problem(const ProblemArgs& a) {
  if (!a.path.empty() && !a.gen.empty()) throw CLI::ValidationError("use either --gen or --problem, not both");
  if (!a.path.empty()) return uq::problem_from_json(uq::read_json_file(a.path), std::filesystem::path(a.path).stem());
  if (a.gen == "parity") return uq::make_parity(a.n);
  if (a.gen == "image-parity") return uq::make_image_parity();
  if (a.gen == "shamir") return uq::make_shamir(a.p, a.degree);
  throw CLI::ValidationError("a problem is required: --gen NAME or --problem FILE");
}

json problem_config(const ProblemArgs& a) {
  if (!a.path.empty()) return {{"problem_file", a.path}};
  json j{{"generator", a.gen}};
  if (a.gen == "parity") j["n"] = a.n;
  if (a.gen == "shamir") {
    j["p"] = a.p;
    j["degree"] = a.degree;
  }
  return j;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) v.push_back(std::stoi(item));
  }
  return v;
}

void emit(const CommonArgs& c, const json& envelope) {
  const std::string text = envelope.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    uq::write_text_file(c.out, text);
  }
}

void emit_csv(const CommonArgs& c, const std::string& text) {
  if (!c.csv.empty()) uq::write_text_file(c.csv, text);
}

json budget_config(const uq::Budget& b) {
  return {{"max_dim", b.max_dim}, {"max_functions", b.max_functions}, {"max_transcripts", b.max_transcripts}};
}

int check_classical(const ProblemArgs& pa, const CommonArgs& c, int k) {
  const auto problem = load_problem(pa);
  const auto report = uq::classical_useless(problem, k, c.budget);
  json config = problem_config(pa);
  config["k"] = k;
  config["budget"] = budget_config(c.budget);
  emit(c, uq::make_envelope("check-classical", config, uq::report_to_json(report)));
  emit_csv(c, uq::report_csv_header() + uq::report_csv_row(report));
  return report.verdict == uq::Verdict::not_useless ? kExitFalsified : kExitVerified;
}

int check_quantum(const ProblemArgs& pa, const CommonArgs& c, int queries, bool include_gallery) {
  const auto problem = load_problem(pa);
  uq::FalsifyOptions opt;
  opt.queries = queries;
  opt.trials = c.trials;
  opt.seed = c.seed;
  opt.tolerance = c.tol;
  opt.budget = c.budget;
  if (include_gallery && problem.group().order() == 2 && problem.domain_size() % 2 == 0 &&
      problem.domain_size() / 2 == queries && problem.domain_size() <= 8) {
    opt.seeded.push_back(uq::pairwise_parity(problem.domain_size()));
  }
  const auto report = uq::quantum_useless_falsify(problem, opt);
  json config = problem_config(pa);
  config.update({{"queries", queries},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"tol", c.tol},
                 {"include_gallery", include_gallery},
                 {"budget", budget_config(c.budget)}});
  emit(c, uq::make_envelope("check-quantum", config, uq::report_to_json(report)));
  emit_csv(c, uq::report_csv_header() + uq::report_csv_row(report));
  return report.verdict == uq::Verdict::not_useless ? kExitFalsified : kExitVerified;
}

int bound(const ProblemArgs& pa, const CommonArgs& c) {
  const auto problem = load_problem(pa);
  const int m = uq::max_useless_k(problem, c.budget);
  json result{{"problem", problem.name()},
              {"max_useless_k", m},
              {"quantum_useless_queries", m / 2},
              {"quantum_lower_bound", m / 2 + 1}};
  json config = problem_config(pa);
  config["budget"] = budget_config(c.budget);
  emit(c, uq::make_envelope("bound", config, result));
  emit_csv(c, "problem,max_useless_k,quantum_lower_bound\n" + problem.name() + "," + std::to_string(m) + "," +
                  std::to_string(m / 2 + 1) + "\n");
  return kExitVerified;
}

int simulate(const ProblemArgs& pa, const CommonArgs& c, const std::string& alg_path, const std::string& f_text) {
  const auto alg = uq::algorithm_from_json(uq::read_json_file(alg_path));
  uq::require_within(alg, c.budget);
  json config{{"algorithm", alg_path}};
  json result;
  if (!f_text.empty()) {
    const uq::OracleFunction f{parse_int_list(f_text)};
    const auto r = uq::run(alg, f);
    config["f"] = f.values;
    result["outcome_probs"] = r.outcome_probs;
  } else {
    const auto problem = load_problem(pa);
    config.update(problem_config(pa));
    const auto joint = uq::joint_distribution(alg, problem);
    json rows = json::array();
    std::ostringstream csv;
    csv << "function,label";
    for (int s = 0; s < joint.cols(); ++s) csv << ",s" << s;
    csv << "\n" << std::setprecision(17);
    for (int i = 0; i < problem.size(); ++i) {
      std::vector<double> row(joint.cols());
      csv << i << ',' << problem.labels()[i];
      for (int s = 0; s < joint.cols(); ++s) {
        row[s] = joint(i, s);
        csv << ',' << row[s];
      }
      csv << '\n';
      rows.push_back(row);
    }
    json posteriors = json::array();
    for (int s = 0; s < joint.cols(); ++s) {
      const auto post = uq::posterior_from_joint(joint, problem, s);
      if (!post) {
        posteriors.push_back(nullptr);
        continue;
      }
      json pj = json::object();
      for (const auto& [j, v] : *post) pj[std::to_string(j)] = v;
      posteriors.push_back(pj);
    }
    result["joint"] = rows;
    result["posteriors"] = posteriors;
    if (alg.outcome_labels()) result["success_probability"] = uq::success_probability(alg, problem);
    emit_csv(c, csv.str());
  }
  emit(c, uq::make_envelope("simulate", config, result));
  return kExitVerified;
}

int compile(const CommonArgs& c, const std::string& alg_path, const std::string& accept_text,
            const std::string& certificate) {
  const auto alg = uq::algorithm_from_json(uq::read_json_file(alg_path));
  uq::require_within(alg, c.budget);
  const auto accept = parse_int_list(accept_text);
  const auto compiled = uq::compile_classical(alg, accept);
  const auto rows = uq::bias_certificate(alg, accept, compiled);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.residual));
  // --out receives the compiled algorithm itself; the summary goes to stdout.
  if (!c.out.empty()) uq::write_text_file(c.out, uq::compiled_to_json(compiled).dump(2) + "\n");
  if (!certificate.empty()) uq::write_text_file(certificate, uq::certificate_csv(rows, compiled.n));
  json result{{"compiled", uq::compiled_to_json(compiled)}, {"max_residual", worst}};
  json config{{"algorithm", alg_path}, {"accept", accept}};
  std::cout << uq::make_envelope("compile", config, result).dump(2) << "\n";
  return worst <= 1e-9 ? kExitVerified : kExitFalsified;
}

int audit(const ProblemArgs& pa, const CommonArgs& c, const std::string& alg_path, const std::string& accept_text) {
  const auto problem = load_problem(pa);
  const auto alg = uq::algorithm_from_json(uq::read_json_file(alg_path));
  uq::require_within(alg, c.budget);
  const auto accept = parse_int_list(accept_text);
  const auto a = uq::ratio_audit(problem, alg, accept, c.budget);
  json config = problem_config(pa);
  config.update({{"algorithm", alg_path}, {"accept", accept}});
  emit(c, uq::make_envelope("audit", config, uq::audit_to_json(a)));
  return a.consistent() ? kExitVerified : kExitFalsified;
}

int reproduce(const CommonArgs& c, const std::string& only) {
  uq::AcceptanceOptions opt;
  opt.seed = c.seed;
  opt.only = only;
  const auto results = uq::run_acceptance(opt);
  std::cerr << uq::acceptance_table(results);
  json config{{"seed", c.seed}, {"only", only}};
  const json summary = uq::acceptance_to_json(results);
  emit(c, uq::make_envelope("reproduce", config, summary));
  return summary["all_pass"].get<bool>() ? kExitVerified : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uqlab: oracle learning problems, query uselessness and the polynomial method"};
  app.require_subcommand(1);
  app.set_version_flag("--version", uq::kToolVersion);

  ProblemArgs pa;
  CommonArgs common;
  int k = 1;
  int queries = 1;
  bool include_gallery = false;
  std::string alg_path, accept_text = "0", certificate, f_text, gallery_name, only;
  int gallery_n = 4;

  auto* problem = app.add_subcommand("problem", "Generate or inspect learning problems");
  problem->require_subcommand(1);
  auto* gen = problem->add_subcommand("gen", "Write a generated problem as JSON");
  add_problem_options(gen, pa, true);
  add_common_options(gen, common);
  auto* dump = problem->add_subcommand("dump", "Summarise a problem");
  add_problem_options(dump, pa, true);
  add_common_options(dump, common);

  auto* cc = app.add_subcommand("check-classical", "Decide whether k classical queries are useless");
  add_problem_options(cc, pa, false);
  add_common_options(cc, common);
  cc->add_option("--k", k, "Number of classical queries")->required();

  auto* cq = app.add_subcommand("check-quantum", "Search for q-query algorithms that shift the posterior");
  add_problem_options(cq, pa, true);
  add_common_options(cq, common);
  cq->add_option("--queries", queries, "Number of quantum queries");
  cq->add_flag("--include-gallery", include_gallery, "Seed trial 0 with the matching gallery algorithm");

  auto* bd = app.add_subcommand("bound", "Quantum query lower bound from classical uselessness");
  add_problem_options(bd, pa, true);
  add_common_options(bd, common);

  auto* useless = app.add_subcommand("useless", "Uselessness checks (classical | quantum | bound)");
  useless->require_subcommand(1);
  auto* uc = useless->add_subcommand("classical", "Same as check-classical");
  add_problem_options(uc, pa, false);
  add_common_options(uc, common);
  uc->add_option("--k", k, "Number of classical queries")->required();
  auto* uquant = useless->add_subcommand("quantum", "Same as check-quantum");
  add_problem_options(uquant, pa, true);
  add_common_options(uquant, common);
  uquant->add_option("--queries", queries, "Number of quantum queries");
  uquant->add_flag("--include-gallery", include_gallery, "Seed trial 0 with the matching gallery algorithm");
  auto* ub = useless->add_subcommand("bound", "Same as bound");
  add_problem_options(ub, pa, true);
  add_common_options(ub, common);

  auto* sim = app.add_subcommand("simulate", "Run an algorithm on one oracle or a whole problem");
  add_problem_options(sim, pa, true);
  add_common_options(sim, common);
  sim->add_option("--alg", alg_path, "Algorithm JSON")->required();
  sim->add_option("--f", f_text, "Single oracle table, comma separated");

  auto* comp = app.add_subcommand("compile", "Compile a Boolean-oracle algorithm into a classical one");
  add_common_options(comp, common);
  comp->add_option("--alg", alg_path, "Algorithm JSON")->required();
  comp->add_option("--accept", accept_text, "Outcomes that mean 'output 0', comma separated");
  comp->add_option("--certificate", certificate, "Per-oracle certificate CSV");

  auto* aud = app.add_subcommand("audit", "Check the ratio identity behind the polynomial-method argument");
  add_problem_options(aud, pa, true);
  add_common_options(aud, common);
  aud->add_option("--alg", alg_path, "Algorithm JSON")->required();
  aud->add_option("--accept", accept_text, "Outcomes that mean 'output 0', comma separated");

  auto* gal = app.add_subcommand("gallery", "Named algorithms");
  gal->require_subcommand(1);
  auto* emit_cmd = gal->add_subcommand("emit", "Write a gallery algorithm as JSON");
  emit_cmd->add_option("--name", gallery_name, "deutsch | pairwise-parity")->required();
  emit_cmd->add_option("--n", gallery_n, "N for pairwise-parity");
  emit_cmd->add_option("--out", common.out, "Output file (default stdout)");
  auto* list = gal->add_subcommand("list", "List gallery algorithms");

  auto* rep = app.add_subcommand("reproduce", "Run every acceptance criterion");
  add_common_options(rep, common);
  rep->add_option("--only", only, "Comma-separated tags: parity,image-parity,shamir,polynomial,determinism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      const auto p = load_problem(pa);
      if (common.out.empty()) {
        std::cout << uq::problem_to_json(p).dump() << "\n";
      } else {
        uq::write_text_file(common.out, uq::problem_to_json(p).dump() + "\n");
      }
      return kExitVerified;
    }
    if (*dump) {
      const auto p = load_problem(pa);
      json parts = json::object();
      for (const auto& [j, w] : p.prior_distribution()) parts[std::to_string(j)] = uq::to_string(w);
      json summary{{"problem", p.name()},
                   {"domain_size", p.domain_size()},
                   {"group", p.group().factors()},
                   {"functions", p.size()},
                   {"part_priors", parts}};
      emit(common, uq::make_envelope("problem dump", problem_config(pa), summary));
      return kExitVerified;
    }
    if (*cc || *uc) return check_classical(pa, common, k);
    if (*cq || *uquant) return check_quantum(pa, common, queries, include_gallery);
    if (*bd || *ub) return bound(pa, common);
    if (*sim) return simulate(pa, common, alg_path, f_text);
    if (*comp) return compile(common, alg_path, accept_text, certificate);
    if (*aud) return audit(pa, common, alg_path, accept_text);
    if (*emit_cmd) {
      const auto entry = uq::gallery_entry(gallery_name, gallery_n);
      const std::string text = uq::algorithm_to_json(entry.algorithm).dump() + "\n";
      if (common.out.empty()) {
        std::cout << text;
      } else {
        uq::write_text_file(common.out, text);
      }
      return kExitVerified;
    }
    if (*list) {
      for (const auto& name : uq::gallery_names()) std::cout << name << "\n";
      return kExitVerified;
    }
    if (*rep) return reproduce(common, only);
  } catch (const uq::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

// Batch front end: envelope/constants/check/solve pipelines over config
// files or the built-in corpus, with JSON reports and CSV tables.
//
// Exit codes: 0 all checks pass, 1 hypothesis failure, 2 solver or
// certificate failure, 3 config error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "conebvp/config.hpp"
#include "conebvp/spectrum.hpp"

namespace fs = std::filesystem;
using namespace conebvp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 1;
constexpr int kExitSolver = 2;
constexpr int kExitConfig = 3;

struct CommonArgs {
  std::string config_path;
  std::string corpus_name;
  std::string out_dir = ".";
  std::string format = "csv";
  int grid = 101;
  double tol = 0.0;  // 0 = keep the config's value
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_grid) {
  cmd->add_option("--config", args.config_path, "path to a JSON problem config");
  cmd->add_option("--corpus", args.corpus_name, "name of a built-in corpus entry");
  cmd->add_option("--out", args.out_dir, "output directory")
      ->capture_default_str();
  cmd->add_option("--format", args.format, "table format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  if (with_grid)
    cmd->add_option("--grid", args.grid, "points per axis for tables")
        ->capture_default_str();
  cmd->add_option("--tol", args.tol, "override the solver tolerance");
}

ProblemConfig load_config(const CommonArgs& args, std::string* name) {
  if (!args.corpus_name.empty()) {
    const CorpusEntry* e = find_corpus_entry(args.corpus_name);
    if (!e) throw ConfigError("unknown corpus entry '" + args.corpus_name +
                              "' (run 'conebvp corpus' for the list)");
    *name = e->name;
    ProblemConfig cfg = e->config;
    return cfg;
  }
  if (args.config_path.empty())
    throw ConfigError("either --config or --corpus is required");
  std::ifstream in(args.config_path);
  if (!in) throw ConfigError("cannot open config file " + args.config_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  *name = fs::path(args.config_path).stem().string();
  return ProblemConfig::from_json_text(text);
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

std::string table_to_json(const std::string& csv) {
  nlohmann::json rows = nlohmann::json::array();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  for (size_t pos = 0; pos != std::string::npos;) {
    size_t next = line.find(',', pos);
    header.push_back(line.substr(pos, next == std::string::npos ? next : next - pos));
    pos = next == std::string::npos ? next : next + 1;
  }
  while (std::getline(in, line)) {
    nlohmann::json row;
    size_t pos = 0;
    for (const std::string& h : header) {
      size_t next = line.find(',', pos);
      row[h] = std::stod(line.substr(pos, next == std::string::npos ? next : next - pos));
      pos = next == std::string::npos ? line.size() : next + 1;
    }
    rows.push_back(row);
  }
  return rows.dump(2);
}

int cmd_envelope(const CommonArgs& args) {
  std::string name;
  ProblemConfig cfg = load_config(args, &name);
  std::string csv = envelope_csv(cfg, args.grid);
  fs::path out = fs::path(args.out_dir) / (name + "-envelope." +
                                           (args.format == "json" ? "json" : "csv"));
  write_file(out, args.format == "json" ? table_to_json(csv) : csv);

  RunReport rep = run_hypothesis_pipeline(cfg);
  rep.hypotheses.clear();  // envelope fragment only
  write_file(fs::path(args.out_dir) / (name + "-envelope-report.json"),
             report_to_json_text(rep));
  return kExitOk;
}

int cmd_constants(const CommonArgs& args) {
  std::string name;
  ProblemConfig cfg = load_config(args, &name);
  RunReport rep = run_hypothesis_pipeline(cfg);
  rep.hypotheses.clear();
  std::string text = report_to_json_text(rep);
  write_file(fs::path(args.out_dir) / (name + "-constants.json"), text);
  std::cout << text << "\n";
  return kExitOk;
}

int cmd_check(const CommonArgs& args) {
  std::string name;
  ProblemConfig cfg = load_config(args, &name);
  RunReport rep = run_hypothesis_pipeline(cfg);
  write_file(fs::path(args.out_dir) / (name + "-report.json"),
             report_to_json_text(rep));
  for (const auto& h : rep.hypotheses)
    std::cout << (h.pass ? "pass " : "FAIL ") << to_string(h.id)
              << "  margin=" << h.margin << "\n";
  return rep.hypotheses_pass ? kExitOk : kExitHypothesis;
}

int cmd_solve(const CommonArgs& args) {
  std::string name;
  ProblemConfig cfg = load_config(args, &name);
  if (args.tol > 0.0) cfg.tol = args.tol;
  RunReport rep = run_solve_pipeline(cfg);
  write_file(fs::path(args.out_dir) / (name + "-report.json"),
             report_to_json_text(rep));
  for (size_t i = 0; i < rep.solutions.size(); ++i)
    write_file(fs::path(args.out_dir) /
                   (name + "-solution-" + std::to_string(i + 1) + ".csv"),
               solution_csv(rep.solutions[i]));
  for (const auto& h : rep.hypotheses)
    std::cout << (h.pass ? "pass " : "FAIL ") << to_string(h.id) << "\n";
  std::cout << rep.solutions.size() << " solution(s)";
  if (rep.certificate)
    std::cout << ", certificate " << (rep.certificate->pass ? "pass" : "FAIL");
  std::cout << "\n";
  if (!rep.certificate || !rep.certificate->pass) return kExitSolver;
  if (!rep.hypotheses_pass) return kExitHypothesis;
  return kExitOk;
}

int cmd_corpus(const CommonArgs& args) {
  if (!args.corpus_name.empty()) {
    const CorpusEntry* e = find_corpus_entry(args.corpus_name);
    if (!e) throw ConfigError("unknown corpus entry '" + args.corpus_name + "'");
    std::cout << e->config.to_json_text() << "\n";
    return kExitOk;
  }
  for (const auto& e : builtin_corpus())
    std::cout << e.name << "  [" << e.config.theorem << "]  " << e.description
              << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cone-based existence and multiplicity analysis for (k,n-k) "
               "boundary value problems"};
  app.require_subcommand(1);

  CommonArgs env_args, con_args, chk_args, slv_args, cor_args;
  CLI::App* env = app.add_subcommand("envelope",
                                     "emit u~, k1, k2 tables for plotting");
  add_common(env, env_args, true);
  CLI::App* con = app.add_subcommand("constants",
                                     "compute envelope and cone constants");
  add_common(con, con_args, false);
  CLI::App* chk = app.add_subcommand("check",
                                     "machine-check the selected theorem's hypotheses");
  add_common(chk, chk_args, false);
  CLI::App* slv = app.add_subcommand("solve",
                                     "locate fixed points and certify multiplicity");
  add_common(slv, slv_args, false);
  CLI::App* cor = app.add_subcommand("corpus", "list built-in problem configs");
  cor->add_option("--corpus", cor_args.corpus_name,
                  "print this entry's config instead of the list");

  try {
    app.parse(argc, argv);
    if (env->parsed()) return cmd_envelope(env_args);
    if (con->parsed()) return cmd_constants(con_args);
    if (chk->parsed()) return cmd_check(chk_args);
    if (slv->parsed()) return cmd_solve(slv_args);
    if (cor->parsed()) return cmd_corpus(cor_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

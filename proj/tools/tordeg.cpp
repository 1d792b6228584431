#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tordeg/cli/run.hpp"

using namespace tordeg;

int main(int argc, char** argv) {
  CLI::App app{"Exact toric degenerations of flag varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string out, format = "auto";
  size_t cone = 0;

  app.add_option("--budget", cfg.budget, "cell budget for fan enumeration")->capture_default_str();
  app.add_option("--threads", cfg.threads, "workers for cone classification")->capture_default_str();
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--format", format, "json, csv, or auto (csv for tables)")
      ->check(CLI::IsMember({"auto", "json", "csv"}));

  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "flag variety Flag_n")->capture_default_str(); };
  auto file_opt = [&](CLI::App* sub) {
    sub->add_option("--ideal-file", cfg.ideal_file, "ideal JSON (variables, generators, grading) instead of I_n");
  };
  auto conv_opt = [&](CLI::App* sub) {
    sub->add_option("--convention", cfg.convention, "initial forms take the min or max weight terms")
        ->check(CLI::IsMember({"min", "max"}));
  };

  auto* ideal = app.add_subcommand("ideal", "Plücker ideal generators and grading");
  n_opt(ideal);

  auto* trop = app.add_subcommand("trop", "enumerate the maximal cones of the tropical variety");
  n_opt(trop);
  file_opt(trop);

  auto* check = app.add_subcommand("trop-check", "initial ideal and primality at a weight vector");
  n_opt(check);
  file_opt(check);
  check->add_option("--weight", cfg.weight, "comma-separated weight vector")->required();
  check->add_option("--layout", cfg.layout, "coordinate order of the weight")->check(CLI::IsMember({"plucker", "extension"}));
  conv_opt(check);

  auto* str = app.add_subcommand("string", "string polytope of a reduced word");
  n_opt(str);
  str->add_option("--word", cfg.word, "reduced word as digits, e.g. 121321")->required();
  str->add_option("--weight", cfg.weight, "rho or comma-separated coefficients on fundamental weights");

  auto* fflv = app.add_subcommand("fflv", "FFLV polytope");
  n_opt(fflv);
  fflv->add_option("--weight", cfg.weight, "rho or comma-separated coefficients on fundamental weights");

  auto* mp = app.add_subcommand("mp-check", "Minkowski property of the string polytopes of a word");
  n_opt(mp);
  mp->add_option("--word", cfg.word, "reduced word")->required();

  auto* wvec = app.add_subcommand("wvec", "weight vector of a reduced word or the FFLV weight vectors");
  n_opt(wvec);
  wvec->add_option("--word", cfg.word, "reduced word");
  wvec->add_flag("--fflv", cfg.fflv, "emit w_min and w_reg");
  conv_opt(wvec);

  auto* re = app.add_subcommand("reembed", "re-embed at a non-prime cone and harvest prime lifts");
  n_opt(re);
  file_opt(re);
  auto* cone_opt = re->add_option("--cone", cone, "cone index (default: first non-prime cone)");
  re->add_option("--depth", cfg.depth, "re-embedding depth, at most 3")->capture_default_str();

  auto* cmp = app.add_subcommand("polytope-compare", "compare two polytope JSON files");
  cmp->add_option("files", cfg.inputs, "two polytope files")->expected(2)->required();

  auto* rep = app.add_subcommand("report", "reproduce a reference table");
  rep->add_option("--table", cfg.table, "flag4-trop, flag4-string or flag5-string")->required();

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  if (cone_opt->count()) cfg.cone = cone;
  if (const char* dir = std::getenv("TORDEG_CACHE_DIR")) cfg.cache_dir = dir;

  Report report = run(cfg);
  const bool csv = !report.csv.empty() && format != "json" && !report.json.contains("error");
  if (format == "csv" && report.csv.empty() && !report.json.contains("error")) {
    std::cerr << "csv output is only available for report tables\n";
    return kExitError;
  }
  std::string text = csv ? report.csv : report.json.dump() + "\n";
  if (!out.empty() && !report.json.contains("error")) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return kExitError;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (report.json.contains("error")) std::cerr << report.json["error"]["kind"].get<std::string>() << ": " << report.json["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}

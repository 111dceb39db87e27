#include "bsk/bs_core.hpp"
#include "bsk/definable.hpp"
#include "bsk/interp.hpp"
#include "bsk/suites.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// "-4..4" (zero dropped) or a comma list
std::vector<long> parse_n_range(const std::string& s) {
  std::vector<long> out;
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    long lo = std::stol(s.substr(0, dots)), hi = std::stol(s.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty n range");
    for (long n = lo; n <= hi; ++n)
      if (n != 0) out.push_back(n);
    return out;
  }
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in BS(1,k) and its interpretations in Z"};
  app.require_subcommand(1);

  long k = 2;
  std::string word;
  auto* eval = app.add_subcommand("eval", "Evaluate a word in a and b");
  eval->add_option("-k", k, "k >= 2")->check(CLI::Range(2L, 1000000L));
  eval->add_option("word", word, "tokens sym, sym^n or inv(sym)")->required();

  std::string file, code_name = "delta";
  bool show_code = false;
  auto* trans = app.add_subcommand("translate", "Translate a formula through an interpretation code");
  trans->add_option("-k", k, "k >= 2")->check(CLI::Range(2L, 1000000L));
  trans->add_option("--code", code_name, "delta (group to ring) or gamma (ring to group)")
      ->check(CLI::IsMember({"delta", "gamma"}));
  trans->add_option("file", file, "formula file")->required();
  trans->add_flag("--show-code", show_code, "print the code as JSON instead");

  std::string dir;
  auto* formulas = app.add_subcommand("formulas", "Print the named formulas, or write one NAME.txt per formula");
  formulas->add_option("-k", k, "k >= 2")->check(CLI::Range(2L, 1000000L));
  formulas->add_option("--dir", dir, "output directory (must exist)");

  bsk::SuiteConfig cfg;
  std::string suite, out_path, n_range;
  std::vector<long> ks;
  auto* check = app.add_subcommand("check", "Run a verification suite and print a JSON report");
  check->add_option("suite", suite)->required()->check(
      CLI::IsMember({"facts", "group", "interp", "definable", "biinterp", "nonstd", "all"}));
  check->add_option("-k", ks, "comma-separated k values")->delimiter(',');
  check->add_option("--z-max", cfg.z_max);
  check->add_option("--i-max", cfg.i_max);
  check->add_option("--m-max", cfg.m_max);
  check->add_option("--ring-max", cfg.ring_max);
  check->add_option("--n-range", n_range, "n window for tau, as lo..hi or a comma list");
  check->add_option("--n-max", cfg.n_max, "bound for the divisibility sweeps");
  check->add_option("--z-search", cfg.z_search, "unit search bound on |z|");
  check->add_option("--i-search", cfg.i_search, "unit search bound on i");
  check->add_option("--samples", cfg.samples);
  check->add_option("--seed", cfg.seed);
  check->add_option("--out", out_path, "write the report here instead of stdout");
  check->add_flag("--mutate", cfg.mutate, "break the checks on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) {
      fmt::print("{}\n", bsk::to_string(bsk::eval_word(bsk::parse_word(word), k)));
      return 0;
    }
    if (*trans) {
      auto code = code_name == "delta" ? bsk::code_delta(k) : bsk::code_gamma(k);
      if (show_code) {
        fmt::print("{}\n", bsk::code_to_json(code).dump(2));
        return 0;
      }
      auto phi = bsk::parse_formula(read_file(file), code.source);
      bsk::MacroTable macros;
      if (code.source == bsk::Lang::Group) macros = bsk::group_macros(k);
      fmt::print("{}\n", bsk::to_text(bsk::translate(phi, code, macros).formula));
      return 0;
    }
    if (*formulas) {
      for (auto& name : bsk::named_formula_names()) {
        auto nf = bsk::named_formula(name, k);
        if (dir.empty()) {
          fmt::print("{}({}): {}\n", name, fmt::join(nf.params, ", "), bsk::to_text(nf.ast));
          continue;
        }
        std::ofstream out(dir + "/" + name + ".txt");
        if (!out) throw std::invalid_argument("cannot write into " + dir);
        out << bsk::to_text(nf.ast) << "\n";
      }
      return 0;
    }
    if (!ks.empty()) cfg.k = ks;
    else if (suite == "facts") cfg.k = {2, 3, 6, 10};
    if (!n_range.empty()) cfg.n_range = parse_n_range(n_range);
    bsk::validate(cfg);
    auto report = bsk::run_check(suite, cfg);
    auto text = report.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot write " + out_path);
      out << text;
    }
    return report["violations"].empty() ? 0 : 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
}

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccfix/cli.hpp"
#include "ccfix/errors.hpp"

namespace {

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ccfix::ValidationError("cannot parse number '" + item + "'");
    }
  }
  if (out.empty()) throw ccfix::ValidationError("empty number list");
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  for (double v : parse_doubles(csv)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
      throw ccfix::ValidationError("expected integers in '" + csv + "'");
    out.push_back(i);
  }
  return out;
}

int log_level() {
  const char* v = std::getenv("CCFIX_LOG");
  if (!v) return 0;
  const std::string s(v);
  if (s.empty() || s == "0" || s == "quiet") return 0;
  if (s == "debug") return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"central configurations as projective fixed points, and the "
               "inverse collinear mass problem"};
  app.require_subcommand(1);

  std::string masses_str = "1,1,1";
  std::string ordering_str;
  std::string gaps_str;
  std::string positions_str;
  std::string input_path;
  std::string alphas_str;
  std::string out_path;
  ccfix::cli::RunConfig rc;
  int samples_fig1 = 2000;
  int samples_fig2 = 1000;
  int count = 1000;
  int n_bodies = 3;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", rc.alpha, "homogeneity exponent of the pair potential");
    cmd->add_option("--tol", rc.tol, "solver tolerance");
    cmd->add_option("--format", rc.format, "output format: json or csv");
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "central configurations of the given masses, with Morse data");
  solve->add_option("--masses", masses_str, "comma-separated masses");
  solve->add_option("--ordering", ordering_str,
                    "restrict to one ordering, e.g. 1,2,3");
  add_common(solve);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "one certificate per projective ordering class");
  enumerate->add_option("--masses", masses_str, "comma-separated masses");
  add_common(enumerate);

  CLI::App* inverse = app.add_subcommand(
      "inverse", "positive masses making a collinear configuration central");
  inverse->add_option("--gaps", gaps_str, "gap coordinates, e.g. 0.5,0.5");
  inverse->add_option("--positions", positions_str,
                      "strictly decreasing coordinates, e.g. 1,0,-1");
  inverse->add_option("--input", input_path, "gap-point JSON file");
  add_common(inverse);

  CLI::App* psi = app.add_subcommand(
      "psi", "vertices of the simplex-valued inverse map at a gap point");
  psi->add_option("--gaps", gaps_str, "gap coordinates");
  add_common(psi);

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "tabulate the gradient circle map and its projective quotient");
  fig1->add_option("--masses", masses_str, "comma-separated masses (3 bodies)");
  fig1->add_option("--samples", samples_fig1, "grid resolution");
  add_common(fig1);

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "tabulate the three scalar inverse maps over the arc chart");
  fig2->add_option("--samples", samples_fig2, "grid resolution");
  add_common(fig2);

  CLI::App* survey = app.add_subcommand(
      "survey", "random-gap feasibility survey of the inverse problem");
  survey->add_option("--n", n_bodies, "number of bodies (3..6)");
  survey->add_option("--alpha", alphas_str,
                     "comma-separated exponents, e.g. 0.5,1,2");
  survey->add_option("--count", count, "samples per exponent");
  survey->add_option("--seed", rc.seed, "RNG seed");
  survey->add_option("--format", rc.format, "output format: json");
  survey->add_option("--out", out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw ccfix::ValidationError("cannot open " + out_path);
      os = &file;
    }

    if (solve->parsed()) {
      std::optional<std::vector<int>> ordering;
      if (!ordering_str.empty()) ordering = parse_ints(ordering_str);
      code = ccfix::cli::cmd_solve(parse_doubles(masses_str), ordering, rc, *os);
    } else if (enumerate->parsed()) {
      code = ccfix::cli::cmd_enumerate(parse_doubles(masses_str), rc, *os);
    } else if (inverse->parsed()) {
      ccfix::cli::InverseInput in;
      if (!gaps_str.empty()) in.gaps = parse_doubles(gaps_str);
      if (!positions_str.empty()) in.positions = parse_doubles(positions_str);
      in.input_path = input_path;
      code = ccfix::cli::cmd_inverse(in, rc, *os);
    } else if (psi->parsed()) {
      code = ccfix::cli::cmd_psi(
          gaps_str.empty() ? std::vector<double>{} : parse_doubles(gaps_str),
          rc, *os);
    } else if (fig1->parsed()) {
      code = ccfix::cli::cmd_fig1(parse_doubles(masses_str), samples_fig1, rc, *os);
    } else if (fig2->parsed()) {
      code = ccfix::cli::cmd_fig2(samples_fig2, rc, *os);
    } else if (survey->parsed()) {
      const std::vector<double> alphas =
          alphas_str.empty() ? std::vector<double>{rc.alpha}
                             : parse_doubles(alphas_str);
      code = ccfix::cli::cmd_survey(n_bodies, alphas, count, rc, *os);
    }
  } catch (const ccfix::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ccfix::OrderingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ccfix::CollisionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ccfix::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const ccfix::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }

  if (log_level() >= 1) {
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    std::cerr << "[ccfix] done in " << dt.count() << " ms\n";
  }
  return code;
}

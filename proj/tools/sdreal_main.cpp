#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sdreal/bench.hpp"
#include "sdreal/expr.hpp"

namespace {

void emit(const std::vector<sdreal::BenchResult>& rows, const std::string& csv_path) {
  if (csv_path.empty()) {
    sdreal::write_csv(std::cout, rows);
    return;
  }
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path);
  sdreal::write_csv(out, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real arithmetic on signed-digit streams"};
  app.require_subcommand(1);

  std::string expr_text;
  std::uint64_t digits = 20;
  auto* eval = app.add_subcommand("eval", "Compute digits of an expression");
  eval->add_option("expr", expr_text, "expression, e.g. \"sqrt(1/4)\"")->required();
  eval->add_option("--digits", digits, "number of digits to produce")->capture_default_str();

  std::uint64_t bench_digits = 50;
  std::uint64_t trials = 3;
  std::uint64_t seed = 12345;
  std::string csv_path;
  std::string suite;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("suite", suite, "constant | geometric | mult")
      ->required()
      ->check(CLI::IsMember({"constant", "geometric", "mult"}));
  bench->add_option("--digits", bench_digits, "digits per run")->capture_default_str();
  bench->add_option("--trials", trials, "timed trials per row")->capture_default_str();
  bench->add_option("--seed", seed, "random stream seed")->capture_default_str();
  bench->add_option("--csv", csv_path, "write CSV here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      auto e = sdreal::parse_expr(expr_text);
      auto r = sdreal::eval_digits(*e, digits);
      std::cout << r.digits << "\n" << sdreal::to_string(r.approximation) << "\n";
      return 0;
    }
    std::vector<sdreal::BenchResult> rows;
    if (suite == "constant") {
      if (bench->count("--digits") == 0) bench_digits = 50;
      rows = sdreal::bench_constant(bench_digits, trials);
    } else if (suite == "geometric") {
      if (bench->count("--digits") == 0) bench_digits = 10;
      rows = sdreal::bench_geometric(bench_digits, trials, seed);
    } else {
      if (bench->count("--digits") == 0) bench_digits = 10;
      rows = sdreal::bench_mult(bench_digits, trials, seed);
    }
    emit(rows, csv_path);
    return 0;
  } catch (const sdreal::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const sdreal::EvalError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const sdreal::InternalError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const sdreal::PreconditionError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

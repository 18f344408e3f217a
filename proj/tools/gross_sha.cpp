// gross-sha: analytic order of Sha for Gross curves.
//
//   gross-sha compute --q 71 --digits 40 --format json
//   gross-sha range --min 7 --max 503 --jobs 8 --out sweep.csv --resume
//   gross-sha verify --q 7,23,31

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gross/cli.hpp"
#include "gross/errors.hpp"

namespace {

std::vector<std::int64_t> parse_q_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch != ',') {
      cur += ch;
      continue;
    }
    if (cur.empty()) continue;
    std::size_t used = 0;
    const long long q = std::stoll(cur, &used);
    if (used != cur.size()) throw gross::InputError("'" + cur + "' is not an integer");
    out.push_back(q);
    cur.clear();
  }
  if (out.empty()) throw gross::InputError("--q list is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gross::cli;

  CLI::App app{"Analytic order of Sha for Gross curves over the Hilbert class field"};
  app.require_subcommand(1);
  const int digits_default = default_digits();

  ComputeConfig compute;
  compute.digits = digits_default;
  std::string compute_format = "csv";
  std::string grid_text;
  auto* c = app.add_subcommand("compute", "Compute one record");
  c->add_option("--q", compute.q, "Prime q = 7 (mod 8)")->required();
  c->add_option("--digits", compute.digits, "Significant decimal digits")->capture_default_str();
  c->add_option("--format", compute_format, "csv or json")->capture_default_str();
  c->add_option("--out", compute.out, "Output file (default stdout)");
  c->add_option("--t-grid", grid_text, "Smoothing parameters a/b,c/d,e/f");
  c->add_option("--margin", compute.margin_digits, "Extra truncation digits")->capture_default_str();
  c->add_option("--jobs", compute.jobs, "Threads across characters")->capture_default_str();

  RangeConfig range;
  range.digits = digits_default;
  std::string range_format = "csv";
  auto* r = app.add_subcommand("range", "Sweep all Gross primes in [min, max]");
  r->add_option("--min", range.q_min, "Lower bound")->capture_default_str();
  r->add_option("--max", range.q_max, "Upper bound")->capture_default_str();
  r->add_option("--digits", range.digits, "Significant decimal digits")->capture_default_str();
  r->add_option("--jobs", range.jobs, "Worker threads")->capture_default_str();
  r->add_option("--out", range.out, "Checkpointed output file");
  r->add_option("--format", range_format, "csv or json")->capture_default_str();
  r->add_flag("--resume", range.resume, "Skip q already verified at these digits");

  VerifyCommandConfig verify;
  verify.digits = digits_default;
  std::string q_list = "7,23,31,47,71";
  auto* v = app.add_subcommand("verify", "Run the oracle checks");
  v->add_option("--q", q_list, "Comma-separated primes")->capture_default_str();
  v->add_option("--digits", verify.digits, "Significant decimal digits")->capture_default_str();
  v->add_option("--oracle-cutoff", verify.oracle_cutoff, "Largest n in the coefficient oracle")
      ->capture_default_str();
  v->add_option("--inject-fault", verify.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*c) {
      compute.format = parse_format(compute_format);
      if (!grid_text.empty()) compute.grid = parse_grid(grid_text);
      return run_compute(compute, std::cout, std::cerr);
    }
    if (*r) {
      range.format = parse_format(range_format);
      return run_range(range, std::cout, std::cerr);
    }
    verify.qs = parse_q_list(q_list);
    return run_verify(verify, std::cout, std::cerr);
  } catch (const gross::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed --q list\n";
    return kExitInput;
  }
}

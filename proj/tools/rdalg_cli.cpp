// rdalg command-line front end. Talks to the library through the C API only.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "rdalg/rdalg.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

void check(rdalg_status s) {
  if (s != RDALG_OK) throw UsageError{std::string(rdalg_status_name(s)) + ": " + rdalg_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  rdalg_string_free(s);
  return out;
}

using SeriesPtr = std::unique_ptr<rdalg_series, decltype(&rdalg_series_free)>;

SeriesPtr eval(const std::string& expr, unsigned trunc) {
  rdalg_series* s = nullptr;
  check(rdalg_series_eval(expr.c_str(), trunc, &s));
  return SeriesPtr(s, rdalg_series_free);
}

void emit(const std::string& text) {
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
}

}  // namespace

int main(int argc, char** argv) {
  // "-e2" is accepted as a spelling of "--e2".
  std::vector<std::string> args(argv, argv + argc);
  for (auto& a : args)
    if (a == "-e2") a = "--e2";
  std::vector<char*> argp;
  for (auto& a : args) argp.push_back(a.data());

  CLI::App app{"Exact Dirichlet-composition series algebra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rdalg_version());

  std::string expr, expr2, kind = "column", suite = "all";
  unsigned index = 1, trunc = 64, size = 16, n_max = 12, m_max = 4, bound = 0, jobs = 1, fault = 0;
  std::uint64_t n_fact = 12, seed = 1;
  int m_fact = -1;
  bool json = false, csv = false, tilde = false, symbolic = false;

  auto* coeff = app.add_subcommand("coeff", "Print one coefficient of a series expression");
  coeff->add_option("-e,--expr", expr, "Series expression")->required();
  coeff->add_option("-n,--index", index, "Coefficient index")->required()->check(CLI::Range(0u, 10000u));

  auto* series = app.add_subcommand("series", "Print a truncated series");
  series->add_option("-e,--expr", expr, "Series expression")->required();
  series->add_option("-N,--trunc", trunc, "Truncation order")->capture_default_str()->check(CLI::Range(1u, 10000u));
  auto* series_json = series->add_flag("--json", json, "JSON output");
  series->add_flag("--csv", csv, "CSV output")->excludes(series_json);

  auto* matrix = app.add_subcommand("matrix", "Print a finite matrix of one of the families");
  matrix->add_option("--kind", kind, "mult, column, mixed, rd or riordan")
      ->capture_default_str()
      ->check(CLI::IsMember({"mult", "column", "mixed", "rd", "riordan"}));
  matrix->add_option("-e,--expr", expr, "Series a")->required();
  matrix->add_option("--e2", expr2, "Series b (defaults to x, or 1 for riordan)");
  matrix->add_option("-N,--size", size, "Matrix size")->capture_default_str()->check(CLI::Range(1u, 500u));
  auto* matrix_json = matrix->add_flag("--json", json, "JSON output");
  matrix->add_flag("--csv", csv, "CSV output (default)")->excludes(matrix_json);

  auto* bell = app.add_subcommand("bell", "Table of B or B~ Bell polynomials");
  bell->add_flag("--tilde", tilde, "Multiplicative B~ instead of B");
  bell->add_option("-N", n_max, "Largest n")->capture_default_str()->check(CLI::Range(1u, 2000u));
  bell->add_option("-M", m_max, "Largest m")->capture_default_str()->check(CLI::Range(0u, 2000u));
  bell->add_flag("--symbolic", symbolic, "Keep a_k symbolic instead of a_k = 1");

  auto* fact = app.add_subcommand("factorizations", "Ordered factorizations of n into m factors >= 2");
  fact->add_option("-n", n_fact, "Number to factor")->required()->check(CLI::Range(std::uint64_t(1), std::uint64_t(1) << 40));
  fact->add_option("-m", m_fact, "Number of factors (all when omitted)")->check(CLI::Range(0, 64));

  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", suite, "all, pow, log, thm1, thm2, thm3, abel, binomf or oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "pow", "log", "thm1", "thm2", "thm3", "abel", "binomf", "oracle"}));
  verify->add_option("-N,--bound", bound, "Bound overriding each check's default")->check(CLI::Range(2u, 20000u));
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  verify->add_option("--seed", seed, "Seed for random test series")->capture_default_str();
  verify->add_flag("--json", json, "Print only the JSON summary");
  verify->add_option("--fault-index", fault, "")->group("");

  try {
    app.parse(static_cast<int>(argp.size()), argp.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*coeff) {
      auto s = eval(expr, std::max(index, 1u));
      emit(take([&] {
        char* out = nullptr;
        check(rdalg_series_coeff(s.get(), index, &out));
        return out;
      }()));
    } else if (*series) {
      auto s = eval(expr, trunc);
      char* out = nullptr;
      check(json ? rdalg_series_to_json(s.get(), &out) : rdalg_series_to_csv(s.get(), &out));
      emit(take(out));
    } else if (*matrix) {
      const rdalg_matrix_kind k = kind == "mult"     ? RDALG_MATRIX_MULT
                                  : kind == "column" ? RDALG_MATRIX_COLUMN
                                  : kind == "mixed"  ? RDALG_MATRIX_MIXED
                                  : kind == "rd"     ? RDALG_MATRIX_RD
                                                     : RDALG_MATRIX_RIORDAN;
      auto a = eval(expr, size);
      SeriesPtr b(nullptr, rdalg_series_free);
      if (!expr2.empty()) b = eval(expr2, size);
      rdalg_matrix* m = nullptr;
      check(rdalg_matrix_build(k, a.get(), b.get(), size, &m));
      std::unique_ptr<rdalg_matrix, decltype(&rdalg_matrix_free)> guard(m, rdalg_matrix_free);
      char* out = nullptr;
      check(json ? rdalg_matrix_to_json(m, &out) : rdalg_matrix_to_csv(m, &out));
      emit(take(out));
    } else if (*bell) {
      char* out = nullptr;
      check(rdalg_bell_table_csv(n_max, m_max, tilde, symbolic, &out));
      emit(take(out));
    } else if (*fact) {
      char* out = nullptr;
      check(rdalg_factorizations_text(n_fact, m_fact, &out));
      emit(take(out));
    } else if (*verify) {
      rdalg_set_fault_index(fault);
      rdalg_report* r = nullptr;
      check(rdalg_verify(suite.c_str(), bound, jobs, seed, &r));
      std::unique_ptr<rdalg_report, decltype(&rdalg_report_free)> guard(r, rdalg_report_free);
      char* out = nullptr;
      if (!json) {
        check(rdalg_report_text(r, &out));
        emit(take(out));
      }
      check(rdalg_report_json(r, &out));
      emit(take(out));
      return rdalg_report_failures(r) == 0 ? 0 : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  }
  return 0;
}

#include <doctest.h>

#include <cstring>
#include <string>

#include "rdalg/rdalg.h"

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  rdalg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("series handles") {
  rdalg_series* s = nullptr;
  REQUIRE(rdalg_series_eval("dpow_param(eps)", 12, &s) == RDALG_OK);
  CHECK(rdalg_series_is_dirichlet(s) == 1);
  CHECK(rdalg_series_trunc(s) == 12);
  char* out = nullptr;
  REQUIRE(rdalg_series_coeff(s, 12, &out) == RDALG_OK);
  CHECK(take(out) == "psi^3 * 1/2");
  CHECK(rdalg_series_coeff(s, 13, &out) == RDALG_TRUNCATION_TOO_SMALL);

  REQUIRE(rdalg_series_to_json(s, &out) == RDALG_OK);
  const std::string json = take(out);
  rdalg_series* back = nullptr;
  REQUIRE(rdalg_series_from_json(json.c_str(), &back) == RDALG_OK);
  REQUIRE(rdalg_series_to_json(back, &out) == RDALG_OK);
  CHECK(take(out) == json);
  rdalg_series_free(back);
  rdalg_series_free(s);
  rdalg_series_free(nullptr);
}

TEST_CASE("status codes and messages") {
  rdalg_series* s = nullptr;
  CHECK(rdalg_series_eval("dlog(zeta", 8, &s) == RDALG_SYNTAX_ERROR);
  CHECK(s == nullptr);
  CHECK(std::strstr(rdalg_last_error(), "offset") != nullptr);
  CHECK(rdalg_series_eval("nosuch(zeta)", 8, &s) == RDALG_UNKNOWN_FUNCTION);
  CHECK(rdalg_series_eval("dmul(zeta)", 8, &s) == RDALG_ARITY_MISMATCH);
  CHECK(rdalg_series_eval("dinv(geom2)", 8, &s) == RDALG_NON_UNIT_LEADING_COEFFICIENT);
  CHECK(rdalg_series_eval(nullptr, 8, &s) == RDALG_INVALID_ARGUMENT);
  CHECK(std::string(rdalg_status_name(RDALG_OK)) == "ok");
  CHECK(std::string(rdalg_version()) == "0.1.0");
  char* out = nullptr;
  CHECK(rdalg_expr_normalize("dmul( zeta ,x )", &out) == RDALG_OK);
  CHECK(take(out) == "dmul(zeta, x)");
}

TEST_CASE("matrices") {
  rdalg_series* a = nullptr;
  REQUIRE(rdalg_series_eval("geom2", 13, &a) == RDALG_OK);
  rdalg_matrix* m = nullptr;
  REQUIRE(rdalg_matrix_build(RDALG_MATRIX_COLUMN, a, nullptr, 13, &m) == RDALG_OK);
  char* out = nullptr;
  REQUIRE(rdalg_matrix_entry(m, 12, 2, &out) == RDALG_OK);
  CHECK(take(out) == "4");
  REQUIRE(rdalg_matrix_to_csv(m, &out) == RDALG_OK);
  CHECK(take(out).find("\n8,0,1,2,1\n") != std::string::npos);
  rdalg_matrix_free(m);
  CHECK(rdalg_matrix_build(RDALG_MATRIX_COLUMN, a, nullptr, 501, &m) == RDALG_INVALID_ARGUMENT);
  CHECK(rdalg_matrix_build(RDALG_MATRIX_RD, a, nullptr, 8, &m) != RDALG_OK);
  rdalg_series_free(a);
}

TEST_CASE("tables") {
  char* out = nullptr;
  REQUIRE(rdalg_factorizations_text(8, 3, &out) == RDALG_OK);
  CHECK(take(out) == "2*2*2\n");
  REQUIRE(rdalg_bell_table_csv(4, 2, 1, 1, &out) == RDALG_OK);
  CHECK(take(out).rfind("n,0,1,2\n", 0) == 0);
}

TEST_CASE("verify reports and fault hook") {
  rdalg_report* r = nullptr;
  REQUIRE(rdalg_verify("oracle", 64, 2, 1, &r) == RDALG_OK);
  CHECK(rdalg_report_size(r) > 0);
  CHECK(rdalg_report_failures(r) == 0);
  CHECK(std::string(rdalg_report_line(r, 0)).rfind("PASS ", 0) == 0);
  CHECK(rdalg_report_line(r, rdalg_report_size(r)) == nullptr);
  rdalg_report_free(r);

  rdalg_set_fault_index(6);
  REQUIRE(rdalg_verify("pow", 32, 2, 1, &r) == RDALG_OK);
  rdalg_set_fault_index(0);
  CHECK(rdalg_report_failures(r) > 0);
  char* out = nullptr;
  REQUIRE(rdalg_report_json(r, &out) == RDALG_OK);
  CHECK(take(out).find("\"failed\"") != std::string::npos);
  rdalg_report_free(r);
  CHECK(rdalg_verify("nosuch", 0, 1, 1, &r) == RDALG_INVALID_ARGUMENT);
}

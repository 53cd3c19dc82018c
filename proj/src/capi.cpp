#include "rdalg/rdalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "rdalg/error.hpp"
#include "rdalg/expr.hpp"
#include "rdalg/io.hpp"
#include "rdalg/matrix.hpp"
#include "rdalg/verify.hpp"

struct rdalg_series {
  rdalg::SeriesValue value;
};

struct rdalg_matrix {
  rdalg::DirMatrix value;
};

struct rdalg_report {
  rdalg::VerifyReport value;
  std::vector<std::string> lines;
};

namespace {

thread_local std::string g_last_error;

rdalg_status status_of(rdalg::ErrorCode code) {
  using rdalg::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RDALG_INVALID_ARGUMENT;
    case ErrorCode::NotDivisible: return RDALG_NOT_DIVISIBLE;
    case ErrorCode::MissingSymbol: return RDALG_MISSING_SYMBOL;
    case ErrorCode::NotADivisor: return RDALG_NOT_A_DIVISOR;
    case ErrorCode::NonUnitLeadingCoefficient: return RDALG_NON_UNIT_LEADING_COEFFICIENT;
    case ErrorCode::LeadingCoefficientNotZero: return RDALG_LEADING_COEFFICIENT_NOT_ZERO;
    case ErrorCode::LeadingCoefficientNotOne: return RDALG_LEADING_COEFFICIENT_NOT_ONE;
    case ErrorCode::ConstantTermNotOne: return RDALG_CONSTANT_TERM_NOT_ONE;
    case ErrorCode::TruncationTooSmall: return RDALG_TRUNCATION_TOO_SMALL;
    case ErrorCode::KindMismatch: return RDALG_KIND_MISMATCH;
    case ErrorCode::SingularDiagonal: return RDALG_SINGULAR_DIAGONAL;
    case ErrorCode::SyntaxError: return RDALG_SYNTAX_ERROR;
    case ErrorCode::UnknownFunction: return RDALG_UNKNOWN_FUNCTION;
    case ErrorCode::ArityMismatch: return RDALG_ARITY_MISMATCH;
    case ErrorCode::Io: return RDALG_IO_ERROR;
    case ErrorCode::Internal: return RDALG_INTERNAL_ERROR;
  }
  return RDALG_INTERNAL_ERROR;
}

template <class F>
rdalg_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return RDALG_OK;
  } catch (const rdalg::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RDALG_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RDALG_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

const rdalg::DirSeries& as_dir(const rdalg_series* s, const char* what) {
  require(s, what);
  if (const auto* d = std::get_if<rdalg::DirSeries>(&s->value)) return *d;
  throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, std::string(what) + " must be a Dirichlet series");
}

const rdalg::OrdSeries& as_ord(const rdalg_series* s, const char* what) {
  require(s, what);
  if (const auto* o = std::get_if<rdalg::OrdSeries>(&s->value)) return *o;
  throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, std::string(what) + " must be an ordinary series");
}

}  // namespace

extern "C" {

const char* rdalg_last_error(void) { return g_last_error.c_str(); }

const char* rdalg_status_name(rdalg_status status) {
  switch (status) {
    case RDALG_OK: return "ok";
    case RDALG_INVALID_ARGUMENT: return "InvalidArgument";
    case RDALG_NOT_DIVISIBLE: return "NotDivisible";
    case RDALG_MISSING_SYMBOL: return "MissingSymbol";
    case RDALG_NOT_A_DIVISOR: return "NotADivisor";
    case RDALG_NON_UNIT_LEADING_COEFFICIENT: return "NonUnitLeadingCoefficient";
    case RDALG_LEADING_COEFFICIENT_NOT_ZERO: return "LeadingCoefficientNotZero";
    case RDALG_LEADING_COEFFICIENT_NOT_ONE: return "LeadingCoefficientNotOne";
    case RDALG_CONSTANT_TERM_NOT_ONE: return "ConstantTermNotOne";
    case RDALG_TRUNCATION_TOO_SMALL: return "TruncationTooSmall";
    case RDALG_KIND_MISMATCH: return "KindMismatch";
    case RDALG_SINGULAR_DIAGONAL: return "SingularDiagonal";
    case RDALG_SYNTAX_ERROR: return "SyntaxError";
    case RDALG_UNKNOWN_FUNCTION: return "UnknownFunction";
    case RDALG_ARITY_MISMATCH: return "ArityMismatch";
    case RDALG_IO_ERROR: return "Io";
    case RDALG_INTERNAL_ERROR: return "Internal";
  }
  return "unknown";
}

const char* rdalg_version(void) { return "0.1.0"; }

void rdalg_string_free(char* s) { std::free(s); }

rdalg_status rdalg_series_eval(const char* expr, unsigned trunc, rdalg_series** out) {
  return guarded([&] {
    require(expr, "expr");
    require(out, "out");
    *out = new rdalg_series{rdalg::evaluate(expr, trunc)};
  });
}

rdalg_status rdalg_series_from_json(const char* json, rdalg_series** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new rdalg_series{rdalg::series_from_json(json)};
  });
}

void rdalg_series_free(rdalg_series* s) { delete s; }

int rdalg_series_is_dirichlet(const rdalg_series* s) {
  return s && std::holds_alternative<rdalg::DirSeries>(s->value) ? 1 : 0;
}

unsigned rdalg_series_trunc(const rdalg_series* s) {
  if (!s) return 0;
  return std::visit([](const auto& v) { return v.trunc(); }, s->value);
}

rdalg_status rdalg_series_coeff(const rdalg_series* s, unsigned n, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    std::visit(
        [&](const auto& v) {
          if (n > v.trunc())
            throw rdalg::Error(rdalg::ErrorCode::TruncationTooSmall,
                               "index " + std::to_string(n) + " is beyond truncation " + std::to_string(v.trunc()));
          *out = dup(v[n].to_string());
        },
        s->value);
  });
}

rdalg_status rdalg_series_to_json(const rdalg_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    *out = dup(rdalg::series_to_json(s->value));
  });
}

rdalg_status rdalg_series_to_csv(const rdalg_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    *out = dup(rdalg::series_to_csv(s->value));
  });
}

rdalg_status rdalg_expr_normalize(const char* expr, char** out) {
  return guarded([&] {
    require(expr, "expr");
    require(out, "out");
    *out = dup(rdalg::to_string(rdalg::parse_expr(expr)));
  });
}

rdalg_status rdalg_matrix_build(rdalg_matrix_kind kind, const rdalg_series* a, const rdalg_series* b, unsigned size,
                                rdalg_matrix** out) {
  return guarded([&] {
    require(out, "out");
    if (size == 0 || size > 500) throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, "matrix size must be 1..500");
    auto dir_b = [&] { return b ? as_dir(b, "b") : rdalg::DirSeries::identity(size); };
    switch (kind) {
      case RDALG_MATRIX_MULT:
        *out = new rdalg_matrix{rdalg::build_mult(as_dir(a, "a"), size)};
        return;
      case RDALG_MATRIX_COLUMN:
        *out = new rdalg_matrix{rdalg::build_column(as_dir(a, "a"), size)};
        return;
      case RDALG_MATRIX_MIXED:
        *out = new rdalg_matrix{rdalg::build_mixed(dir_b(), as_dir(a, "a"), size)};
        return;
      case RDALG_MATRIX_RD:
        *out = new rdalg_matrix{rdalg::build_rd(dir_b(), as_dir(a, "a"), size)};
        return;
      case RDALG_MATRIX_RIORDAN: {
        const rdalg::OrdSeries one = rdalg::OrdSeries::constant(size, rdalg::Polynomial(1));
        *out = new rdalg_matrix{rdalg::build_riordan_ord(b ? as_ord(b, "b") : one, as_ord(a, "a"), size)};
        return;
      }
    }
    throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, "unknown matrix kind");
  });
}

void rdalg_matrix_free(rdalg_matrix* m) { delete m; }

rdalg_status rdalg_matrix_entry(const rdalg_matrix* m, unsigned row, unsigned col, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup(m->value(row, col).to_string());
  });
}

rdalg_status rdalg_matrix_to_csv(const rdalg_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup(rdalg::matrix_to_csv(m->value));
  });
}

rdalg_status rdalg_matrix_to_json(const rdalg_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup(rdalg::matrix_to_json(m->value));
  });
}

rdalg_status rdalg_bell_table_csv(unsigned n_max, unsigned m_max, int tilde, int symbolic, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n_max == 0 || n_max > 2000) throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, "N must be 1..2000");
    *out = dup(rdalg::bell_table_csv(n_max, m_max, tilde != 0, symbolic != 0));
  });
}

rdalg_status rdalg_factorizations_text(uint64_t n, int m, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n == 0) throw rdalg::Error(rdalg::ErrorCode::InvalidArgument, "n must be >= 1");
    *out = dup(rdalg::factorizations_text(n, m));
  });
}

rdalg_status rdalg_verify(const char* suite, unsigned bound, unsigned jobs, uint64_t seed, rdalg_report** out) {
  return guarded([&] {
    require(out, "out");
    rdalg::VerifyOptions opt;
    if (suite) opt.suite = suite;
    if (bound) opt.bound = bound;
    opt.jobs = jobs ? jobs : 1;
    opt.seed = seed;
    auto* r = new rdalg_report{rdalg::run_verify(opt), {}};
    for (const auto& l : r->value.lines) r->lines.push_back((l.pass ? "PASS " : "FAIL ") + l.id + " n=" + std::to_string(l.n));
    *out = r;
  });
}

void rdalg_report_free(rdalg_report* r) { delete r; }

size_t rdalg_report_size(const rdalg_report* r) { return r ? r->lines.size() : 0; }

size_t rdalg_report_failures(const rdalg_report* r) { return r ? r->value.failures() : 0; }

const char* rdalg_report_line(const rdalg_report* r, size_t i) {
  if (!r || i >= r->lines.size()) return nullptr;
  return r->lines[i].c_str();
}

int rdalg_report_line_passed(const rdalg_report* r, size_t i) {
  if (!r || i >= r->lines.size()) return 0;
  return r->value.lines[i].pass ? 1 : 0;
}

rdalg_status rdalg_report_text(const rdalg_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(r->value.text());
  });
}

rdalg_status rdalg_report_json(const rdalg_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(r->value.json_summary());
  });
}

void rdalg_set_fault_index(unsigned n) { rdalg::detail::set_convolution_fault(n); }

}  // extern "C"

#include "hypersurf/hypersurf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hypersurf/corpus.hpp"
#include "hypersurf/curvature.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/report.hpp"

struct hs_polynomial {
  hypersurf::PolynomialInput input;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

hs_status fail(hs_status status, const char* what, long position = -1) {
  last_error = what;
  last_position = position;
  return status;
}

template <class F>
hs_status guarded(F&& body) {
  last_error.clear();
  last_position = -1;
  try {
    body();
    return HS_OK;
  } catch (const hypersurf::ParseError& e) {
    return fail(HS_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const hypersurf::ValidationError& e) {
    return fail(HS_ERR_VALIDATION, e.what());
  } catch (const hypersurf::DimensionError& e) {
    return fail(HS_ERR_INPUT, e.what());
  } catch (const hypersurf::DomainError& e) {
    return fail(HS_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HS_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hypersurf::AnalysisOptions analysis_options(const hs_options* o) {
  hs_options defaults;
  hs_options_init(&defaults);
  if (!o) o = &defaults;
  if (o->samples <= 0) throw hypersurf::DomainError("samples must be positive");
  if (!(o->tolerance > 0)) throw hypersurf::DomainError("tolerance must be positive");
  hypersurf::AnalysisOptions a;
  a.seed = o->seed;
  a.samples = static_cast<std::size_t>(o->samples);
  a.tolerance = o->tolerance;
  return a;
}

template <class F>
hs_status emit(const hs_polynomial* p, char** json, F&& build) {
  return guarded([&] {
    if (!json) throw hypersurf::DomainError("null output pointer");
    *json = nullptr;
    if (!p) throw hypersurf::DomainError("null polynomial");
    *json = copy_string(hypersurf::dump(build(p->input)));
  });
}

}  // namespace

extern "C" {

void hs_options_init(hs_options* options) {
  if (!options) return;
  options->seed = 0;
  options->samples = 200;
  options->tolerance = 1e-6;
  options->radius = 10.0;
  options->ball_sign = 0;
  options->target_c = nullptr;
}

const char* hs_version(void) { return hypersurf::version(); }

const char* hs_last_error(void) { return last_error.c_str(); }

long hs_last_error_position(void) { return last_position; }

void hs_string_free(char* s) { std::free(s); }

hs_status hs_polynomial_parse(const char* text, size_t dim, hs_var_mode mode, hs_polynomial** out) {
  return guarded([&] {
    if (!text || !out) throw hypersurf::DomainError("null argument");
    *out = nullptr;
    std::optional<hypersurf::VarConvention::Mode> m;
    if (mode == HS_VARS_NAMED) m = hypersurf::VarConvention::Mode::Named;
    if (mode == HS_VARS_INDEXED) m = hypersurf::VarConvention::Mode::Indexed;
    auto handle = std::make_unique<hs_polynomial>();
    handle->input = hypersurf::PolynomialInput::parse(text, dim, m);
    *out = handle.release();
  });
}

hs_status hs_polynomial_from_corpus(const char* name, hs_polynomial** out) {
  if (!name || !out) return fail(HS_ERR_INPUT, "null argument");
  *out = nullptr;
  const auto* entry = hypersurf::find_corpus_entry(name);
  if (!entry) return fail(HS_ERR_NOT_FOUND, ("unknown corpus entry: " + std::string(name)).c_str());
  return guarded([&] {
    auto handle = std::make_unique<hs_polynomial>();
    handle->input.text = entry->text;
    handle->input.convention = entry->convention();
    handle->input.polynomial = entry->polynomial();
    *out = handle.release();
  });
}

void hs_polynomial_free(hs_polynomial* p) { delete p; }

size_t hs_polynomial_dim(const hs_polynomial* p) { return p ? p->input.polynomial.dim() : 0; }

int hs_polynomial_degree(const hs_polynomial* p) {
  if (!p) return -1;
  const auto d = p->input.polynomial.degree();
  return d ? static_cast<int>(*d) : -1;
}

hs_status hs_polynomial_format(const hs_polynomial* p, char** out) {
  return guarded([&] {
    if (!p || !out) throw hypersurf::DomainError("null argument");
    *out = copy_string(hypersurf::format(p->input.polynomial, p->input.convention));
  });
}

hs_status hs_polynomial_evaluate(const hs_polynomial* p, const double* x, size_t n, double* out) {
  return guarded([&] {
    if (!p || !x || !out) throw hypersurf::DomainError("null argument");
    if (n != p->input.polynomial.dim()) throw hypersurf::DimensionError("point dimension mismatch");
    *out = p->input.polynomial.evaluate(std::span<const double>(x, n));
  });
}

hs_status hs_mean_curvature_at(const hs_polynomial* p, const double* x, size_t n, double* out) {
  return guarded([&] {
    if (!p || !x || !out) throw hypersurf::DomainError("null argument");
    if (n != p->input.polynomial.dim()) throw hypersurf::DimensionError("point dimension mismatch");
    *out = hypersurf::mean_curvature_at(p->input.polynomial, std::span<const double>(x, n));
  });
}

hs_status hs_analyze(const hs_polynomial* p, const hs_options* options, char** json) {
  return emit(p, json, [&](const auto& in) { return hypersurf::analyze_report(in, analysis_options(options)); });
}

hs_status hs_classify(const hs_polynomial* p, const hs_options* options, char** json) {
  return emit(p, json, [&](const auto& in) { return hypersurf::classify_report(in, analysis_options(options)); });
}

hs_status hs_cmc(const hs_polynomial* p, const hs_options* options, char** json) {
  return emit(p, json, [&](const auto& in) {
    std::optional<hypersurf::Rational> target;
    if (options && options->target_c) target = hypersurf::parse_rational(options->target_c);
    return hypersurf::cmc_report(in, analysis_options(options), target);
  });
}

hs_status hs_decompose(const hs_polynomial* p, char** json) {
  return emit(p, json, [](const auto& in) { return hypersurf::decompose_report(in); });
}

hs_status hs_divide(const hs_polynomial* p, const char* sphere_spec, size_t block_start, char** json) {
  return emit(p, json, [&](const auto& in) {
    if (!sphere_spec) throw hypersurf::DomainError("null sphere spec");
    return hypersurf::divide_report(in, hypersurf::parse_sphere_spec(sphere_spec, block_start));
  });
}

hs_status hs_ball(const hs_polynomial* p, const hs_options* options, char** json) {
  return emit(p, json, [&](const auto& in) {
    hs_options defaults;
    hs_options_init(&defaults);
    const hs_options* o = options ? options : &defaults;
    std::optional<int> sign;
    if (o->ball_sign > 0) sign = 1;
    if (o->ball_sign < 0) sign = -1;
    return hypersurf::ball_report(in, o->radius, sign, analysis_options(o));
  });
}

hs_status hs_corpus_list(char** json) {
  return guarded([&] {
    if (!json) throw hypersurf::DomainError("null output pointer");
    *json = copy_string(hypersurf::dump(hypersurf::corpus_list()));
  });
}

hs_status hs_corpus_run(const char* name, const hs_options* options, char** json) {
  if (!json) return fail(HS_ERR_INPUT, "null output pointer");
  *json = nullptr;
  const hypersurf::CorpusEntry* entry = nullptr;
  if (name) {
    entry = hypersurf::find_corpus_entry(name);
    if (!entry) return fail(HS_ERR_NOT_FOUND, ("unknown corpus entry: " + std::string(name)).c_str());
  }
  return guarded([&] {
    const auto opts = analysis_options(options);
    *json = copy_string(hypersurf::dump(entry ? hypersurf::corpus_run(*entry, opts) : hypersurf::corpus_run_all(opts)));
  });
}

}  // extern "C"

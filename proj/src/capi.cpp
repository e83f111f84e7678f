#include "kenso.h"

#include "kenso/error.hpp"
#include "kenso/pipeline.hpp"

#include <cstring>
#include <new>
#include <string>

struct kenso_manifold {
  kenso::GeometryAnalysis analysis;
};

struct kenso_result {
  kenso::Report report;
};

namespace {

thread_local std::string g_last_error;

kenso_status status_for(const kenso::Error& e) {
  switch (e.code()) {
    case kenso::errc::parse_error:
      return KENSO_EPARSE;
    case kenso::errc::unknown_name:
      return KENSO_ENOTFOUND;
    case kenso::errc::invalid_argument:
    case kenso::errc::even_dimension:
    case kenso::errc::non_unit_frame_scale:
    case kenso::errc::xi_not_unit:
    case kenso::errc::bad_phi_shape:
    case kenso::errc::invalid_frame:
    case kenso::errc::bad_metric:
    case kenso::errc::duplicate_directive:
    case kenso::errc::undeclared_coordinate:
    case kenso::errc::undeclared_frame_field:
      return KENSO_EINVALID;
    default:
      return KENSO_EDOMAIN;
  }
}

template <typename Fn>
kenso_status guarded(Fn&& fn) {
  try {
    fn();
    return KENSO_OK;
  } catch (const kenso::Error& e) {
    g_last_error = e.what();
    return status_for(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KENSO_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return KENSO_EINTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kenso::SolitonQuery query_from(const kenso_soliton_opts* opts) {
  kenso::SolitonQuery q;
  if (!opts) return q;
  if (opts->alpha) q.params.alpha = kenso::CoeffExpr::parse(opts->alpha);
  if (opts->beta) q.params.beta = kenso::CoeffExpr::parse(opts->beta);
  if (opts->k) q.params.k = kenso::CoeffExpr::parse(opts->k);
  if (opts->lambda) q.params.lambda = kenso::CoeffExpr::parse(opts->lambda);
  if (opts->vector) q.vector_name = opts->vector;
  if (opts->function) q.function_name = opts->function;
  switch (opts->mode) {
    case KENSO_MODE_EXACT: q.mode = kenso::ResidualMode::exact; break;
    case KENSO_MODE_TRACE: q.mode = kenso::ResidualMode::trace; break;
    case KENSO_MODE_XI_TRACE: q.mode = kenso::ResidualMode::xi_trace; break;
  }
  q.params.star = opts->star != 0;
  if (opts->precision > 0) q.display_digits = static_cast<unsigned>(opts->precision);
  return q;
}

}  // namespace

extern "C" {

const char* kenso_version(void) { return kenso::kToolVersion; }

const char* kenso_last_error(void) { return g_last_error.c_str(); }

kenso_status kenso_manifold_from_source(const char* text, kenso_manifold** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] {
    auto doc = kenso::parse_manifold_dsl(text);
    *out = new kenso_manifold{kenso::analyze_geometry(doc)};
  });
}

kenso_status kenso_manifold_from_builtin(const char* name, kenso_manifold** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] {
    auto doc = kenso::parse_manifold_dsl(kenso::builtin_source(name));
    *out = new kenso_manifold{kenso::analyze_geometry(doc)};
  });
}

void kenso_manifold_free(kenso_manifold* m) { delete m; }

int kenso_manifold_dim(const kenso_manifold* m) {
  return m ? static_cast<int>(m->analysis.manifold.dim()) : 0;
}

int kenso_manifold_is_kenmotsu(const kenso_manifold* m) {
  return (m && m->analysis.kenmotsu) ? 1 : 0;
}

kenso_status kenso_builtin_source(const char* name, char** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] { *out = copy_string(kenso::builtin_source(name)); });
}

void kenso_string_free(char* s) { delete[] s; }

kenso_status kenso_run_check(const kenso_manifold* m, kenso_result** out) {
  if (!m || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] { *out = new kenso_result{kenso::run_check(m->analysis)}; });
}

kenso_status kenso_run_curvature(const kenso_manifold* m, kenso_result** out) {
  if (!m || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] { *out = new kenso_result{kenso::run_curvature(m->analysis)}; });
}

kenso_status kenso_run_soliton(const kenso_manifold* m, const kenso_soliton_opts* opts,
                               kenso_result** out) {
  if (!m || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] {
    kenso::SolitonQuery q = query_from(opts);
    *out = new kenso_result{kenso::run_soliton(m->analysis, q)};
  });
}

kenso_status kenso_run_classify_vector(const kenso_manifold* m, const char* vector,
                                       kenso_result** out) {
  if (!m || !vector || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded(
      [&] { *out = new kenso_result{kenso::run_classify_vector(m->analysis, vector)}; });
}

kenso_status kenso_run_theorems(const kenso_manifold* m, const kenso_soliton_opts* opts,
                                kenso_result** out) {
  if (!m || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] {
    kenso::SolitonQuery q = query_from(opts);
    *out = new kenso_result{kenso::run_theorems(m->analysis, q)};
  });
}

int kenso_result_passed(const kenso_result* r) { return (r && r->report.passed) ? 1 : 0; }

kenso_status kenso_result_render(const kenso_result* r, kenso_format format, char** out) {
  if (!r || !out) {
    g_last_error = "null argument";
    return KENSO_EINVALID;
  }
  return guarded([&] {
    *out = copy_string(format == KENSO_FORMAT_JSON ? r->report.to_json() : r->report.to_text());
  });
}

void kenso_result_free(kenso_result* r) { delete r; }

}  // extern "C"

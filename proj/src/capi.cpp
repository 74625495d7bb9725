#include "gtsetlin.h"

#include <cstring>
#include <string>

#include "gt/json_io.hpp"

using gt::json;

struct gts_tableau {
  gt::Tableau value;
};
struct gts_relset {
  gt::RelationSet value;
};

namespace {

thread_local std::string g_last_error;

gts_status status_of(gt::errc c) {
  switch (c) {
    case gt::errc::parse: return GTS_E_PARSE;
    case gt::errc::shape: return GTS_E_SHAPE;
    case gt::errc::anchor: return GTS_E_ANCHOR;
    case gt::errc::invalid_relation: return GTS_E_INVALID_RELATION;
    case gt::errc::unsatisfiable: return GTS_E_UNSATISFIABLE;
    case gt::errc::critical_set: return GTS_E_CRITICAL_SET;
    case gt::errc::critical_tableau: return GTS_E_CRITICAL_TABLEAU;
    case gt::errc::order_undetermined: return GTS_E_ORDER_UNDETERMINED;
    case gt::errc::not_releasable: return GTS_E_NOT_RELEASABLE;
    case gt::errc::no_case_applies: return GTS_E_NO_CASE;
    case gt::errc::not_in_basis: return GTS_E_NOT_IN_BASIS;
    case gt::errc::singular_row: return GTS_E_SINGULAR_ROW;
    case gt::errc::not_realization: return GTS_E_NOT_REALIZATION;
    case gt::errc::precondition_failed: return GTS_E_PRECONDITION;
    case gt::errc::budget: return GTS_E_BUDGET;
    case gt::errc::infinite_enumeration: return GTS_E_INFINITE_ENUMERATION;
    case gt::errc::internal: return GTS_E_INTERNAL;
  }
  return GTS_E_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
gts_status guarded(F&& f) {
  try {
    f();
    return GTS_OK;
  } catch (const gt::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return GTS_E_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GTS_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* gts_last_error(void) { return g_last_error.c_str(); }

void gts_string_free(char* s) { std::free(s); }

gts_status gts_tableau_parse(const char* text, gts_tableau** out) {
  if (!text || !out) return GTS_E_PARSE;
  return guarded([&] {
    json j = json::parse(text);
    *out = new gts_tableau{gt::tableau_from_json(j)};
  });
}

gts_status gts_tableau_to_json(const gts_tableau* t, char** json_out) {
  if (!t || !json_out) return GTS_E_PARSE;
  return guarded([&] { *json_out = dup_string(gt::tableau_to_json(t->value).dump()); });
}

void gts_tableau_free(gts_tableau* t) { delete t; }

gts_status gts_tableau_is_standard(const gts_tableau* t, int* out) {
  if (!t || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::is_standard(t->value) ? 1 : 0; });
}

gts_status gts_tableau_is_noncritical(const gts_tableau* t, int* out) {
  if (!t || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::is_noncritical_tableau(t->value) ? 1 : 0; });
}

gts_status gts_relset_parse(const char* text, gts_relset** out) {
  if (!text || !out) return GTS_E_PARSE;
  return guarded([&] {
    json j = json::parse(text);
    *out = new gts_relset{gt::relation_set_from_json(j)};
  });
}

gts_status gts_relset_to_json(const gts_relset* c, char** json_out) {
  if (!c || !json_out) return GTS_E_PARSE;
  return guarded([&] { *json_out = dup_string(gt::relation_set_to_json(c->value).dump()); });
}

void gts_relset_free(gts_relset* c) { delete c; }

gts_status gts_relset_validate(const gts_relset* c, int* out) {
  if (!c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::validate_set(c->value) ? 1 : 0; });
}

gts_status gts_relset_is_satisfiable(const gts_relset* c, int* out) {
  if (!c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::is_satisfiable(c->value) ? 1 : 0; });
}

gts_status gts_relset_is_noncritical(const gts_relset* c, int* out) {
  if (!c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::is_noncritical_set(c->value) ? 1 : 0; });
}

gts_status gts_relset_is_admissible(const gts_relset* c, int* out) {
  if (!c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::is_admissible(c->value) ? 1 : 0; });
}

gts_status gts_relset_component_count(const gts_relset* c, int* out) {
  if (!c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = static_cast<int>(gt::decompose(c->value).size()); });
}

gts_status gts_relset_reduce(const gts_relset* c, gts_relset** out) {
  if (!c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = new gts_relset{gt::reduce(c->value)}; });
}

gts_status gts_satisfies(const gts_tableau* t, const gts_relset* c, int* out) {
  if (!t || !c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::satisfies(t->value, c->value) ? 1 : 0; });
}

gts_status gts_is_realization(const gts_tableau* t, const gts_relset* c, int* out) {
  if (!t || !c || !out) return GTS_E_PARSE;
  return guarded([&] { *out = gt::is_realization(t->value, c->value) ? 1 : 0; });
}

gts_status gts_run(const char* request_json, char** response_json, int* exit_code) {
  if (!request_json || !response_json || !exit_code) return GTS_E_PARSE;
  return guarded([&] {
    json req;
    try {
      req = json::parse(request_json);
    } catch (const nlohmann::json::exception& e) {
      json resp;
      resp["error"] = {{"code", "ParseError"}, {"message", e.what()}};
      *exit_code = 2;
      *response_json = dup_string(resp.dump());
      return;
    }
    json resp = gt::run_command(req, *exit_code);
    *response_json = dup_string(resp.dump());
  });
}

}  // extern "C"

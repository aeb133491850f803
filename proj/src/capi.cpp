#include "hyperops/hyperops.h"

#include <optional>
#include <string>

#include "hyperops/corpus.hpp"
#include "hyperops/errors.hpp"

using hyperops::json;

struct hyperops_bundle {
  hyperops::Bundle bundle;
};

struct hyperops_result {
  hyperops::Outcome outcome;
  std::string json_text;
  std::string text;
};

namespace {

thread_local std::string last_error;

hyperops_status set_error(hyperops_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

hyperops_status finish(hyperops::Outcome outcome, hyperops_result** out) {
  if (!out) return set_error(HYPEROPS_INPUT_ERROR, "no result pointer given");
  auto* r = new hyperops_result{std::move(outcome), {}, {}};
  r->json_text = r->outcome.report.dump(2) + "\n";
  *out = r;
  const auto code = static_cast<hyperops_status>(r->outcome.exit_code);
  if (code == HYPEROPS_OK)
    last_error.clear();
  else if (r->outcome.report.contains("error"))
    last_error = r->outcome.report.at("error").value("message", "");
  else
    last_error = r->outcome.report.value("status", "");
  return code;
}

template <class F>
hyperops_status guarded(hyperops_result** out, F&& f) {
  if (out) *out = nullptr;
  try {
    return f();
  } catch (const std::bad_alloc&) {
    return set_error(HYPEROPS_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HYPEROPS_INTERNAL_ERROR, e.what());
  }
}

hyperops_status run(const hyperops_bundle* b, const json& request, hyperops_result** out) {
  return guarded(out, [&] {
    if (!b) return set_error(HYPEROPS_INPUT_ERROR, "no bundle given");
    return finish(hyperops::run_request(b->bundle, request), out);
  });
}

json str_or_null(const char* s) { return s ? json(s) : json(nullptr); }

hyperops::Outcome input_error(const json& req, const std::string& message) {
  hyperops::Outcome o;
  o.exit_code = HYPEROPS_INPUT_ERROR;
  o.report = {{"command", req.is_object() ? req.value("command", json(nullptr)) : json(nullptr)},
              {"status", "input_error"},
              {"exit_code", o.exit_code},
              {"claims", json::array()},
              {"result", json::object()},
              {"error", {{"kind", "input"}, {"message", message}}},
              {"request", req}};
  return o;
}

bool parse_request(const char* text, json& req, hyperops_result** out, hyperops_status& status) {
  try {
    req = json::parse(text ? text : "");
    return true;
  } catch (const json::exception& e) {
    status = finish(input_error(json(nullptr), std::string("request is not valid JSON: ") + e.what()), out);
    return false;
  }
}

}  // namespace

extern "C" {

const char* hyperops_version(void) { return HYPEROPS_VERSION; }

const char* hyperops_last_error(void) { return last_error.c_str(); }

static hyperops_status make_bundle(hyperops::Bundle (*loader)(const std::string&), const char* arg,
                                   hyperops_bundle** out) {
  if (!out) return set_error(HYPEROPS_INPUT_ERROR, "no bundle pointer given");
  *out = nullptr;
  if (!arg) return set_error(HYPEROPS_INPUT_ERROR, "no bundle given");
  try {
    *out = new hyperops_bundle{loader(arg)};
    last_error.clear();
    return HYPEROPS_OK;
  } catch (const hyperops::Error& e) {
    return set_error(HYPEROPS_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return set_error(HYPEROPS_INTERNAL_ERROR, e.what());
  }
}

hyperops_status hyperops_bundle_parse(const char* text, hyperops_bundle** out) {
  return make_bundle(&hyperops::Bundle::parse, text, out);
}

hyperops_status hyperops_bundle_load(const char* path, hyperops_bundle** out) {
  return make_bundle(&hyperops::Bundle::load_file, path, out);
}

static hyperops::Bundle corpus_loader(const std::string& id) { return hyperops::load_example(id).load(); }

hyperops_status hyperops_corpus_bundle(const char* id, hyperops_bundle** out) { return make_bundle(&corpus_loader, id, out); }

void hyperops_bundle_free(hyperops_bundle* bundle) { delete bundle; }

hyperops_status hyperops_run(const hyperops_bundle* bundle, const char* request_json, hyperops_result** out) {
  return guarded(out, [&] {
    json req;
    hyperops_status status = HYPEROPS_OK;
    if (!parse_request(request_json, req, out, status)) return status;
    if (req.is_object() && req.value("command", "") == "corpus") return finish(hyperops::run_corpus(req), out);
    return run(bundle, req, out);
  });
}

hyperops_status hyperops_run_file(const char* bundle_path, const char* request_json, hyperops_result** out) {
  return guarded(out, [&] {
    json req;
    hyperops_status status = HYPEROPS_OK;
    if (!parse_request(request_json, req, out, status)) return status;
    std::optional<hyperops::Bundle> b;
    try {
      b = hyperops::Bundle::load_file(bundle_path ? bundle_path : "");
    } catch (const std::exception& e) {
      return finish(input_error(req, e.what()), out);
    }
    return finish(hyperops::run_request(*b, req), out);
  });
}

hyperops_status hyperops_check(const hyperops_bundle* bundle, const char* what, const char* const* args, size_t nargs,
                               hyperops_result** out) {
  json names = json::array();
  for (size_t k = 0; k < nargs; ++k) names.push_back(str_or_null(args[k]));
  return run(bundle, {{"command", "check"}, {"what", str_or_null(what)}, {"args", names}}, out);
}

hyperops_status hyperops_classify_hyper(const hyperops_bundle* bundle, const char* triple, const char* flavor,
                                        hyperops_result** out) {
  return run(bundle, {{"command", "classify-hyper"}, {"triple", str_or_null(triple)}, {"flavor", str_or_null(flavor)}},
             out);
}

hyperops_status hyperops_suite(const hyperops_bundle* bundle, const char* triple, const char* which,
                               hyperops_result** out) {
  return run(bundle, {{"command", "suite"}, {"triple", str_or_null(triple)}, {"which", str_or_null(which)}}, out);
}

hyperops_status hyperops_decompose(const hyperops_bundle* bundle, const char* triple, hyperops_result** out) {
  return run(bundle, {{"command", "decompose"}, {"triple", str_or_null(triple)}}, out);
}

hyperops_status hyperops_reconstruct(const hyperops_bundle* bundle, const char* hflat, const char* i1, const char* i2,
                                     hyperops_result** out) {
  return run(bundle,
             {{"command", "reconstruct"}, {"hflat", str_or_null(hflat)}, {"i1", str_or_null(i1)}, {"i2", str_or_null(i2)}},
             out);
}

hyperops_status hyperops_search_forms(const hyperops_bundle* bundle, const char* algebra, const char* target,
                                      const char* form, hyperops_result** out) {
  return run(bundle,
             {{"command", "search-forms"}, {"algebra", str_or_null(algebra)}, {"target", str_or_null(target)},
              {"form", str_or_null(form)}},
             out);
}

hyperops_status hyperops_correspond(const hyperops_bundle* bundle, const char* form, const char* const maps[3],
                                    const char* setting, hyperops_result** out) {
  json names = json::array();
  for (int k = 0; k < 3; ++k) names.push_back(maps ? str_or_null(maps[k]) : json(nullptr));
  return run(bundle,
             {{"command", "correspond"}, {"form", str_or_null(form)}, {"maps", names}, {"setting", str_or_null(setting)}},
             out);
}

hyperops_status hyperops_corpus(const char* action, const char* id, hyperops_result** out) {
  return guarded(out, [&] {
    json req = {{"command", "corpus"}, {"action", action ? action : "list"}};
    if (id) req["id"] = id;
    return finish(hyperops::run_corpus(req), out);
  });
}

int hyperops_result_exit_code(const hyperops_result* result) {
  return result ? result->outcome.exit_code : HYPEROPS_INTERNAL_ERROR;
}

const char* hyperops_result_json(const hyperops_result* result) { return result ? result->json_text.c_str() : ""; }

const char* hyperops_result_text(hyperops_result* result, int color) {
  if (!result) return "";
  result->text = hyperops::render_text(result->outcome.report, color != 0);
  return result->text.c_str();
}

void hyperops_result_free(hyperops_result* result) { delete result; }

}  // extern "C"

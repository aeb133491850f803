#include "hyperops/corpus.hpp"

#include "hyperops/errors.hpp"

namespace hyperops {

namespace detail {
extern const char* const kCorpusJson;
}

namespace {

std::vector<ExampleEntry> build_registry() {
  const json doc = json::parse(detail::kCorpusJson);
  std::vector<ExampleEntry> out;
  for (const auto& e : doc) {
    ExampleEntry entry{e.at("id"), e.at("kind"), e.at("provenance"), e.at("bundle"), {}};
    for (const auto& p : e.at("probes")) {
      Probe probe;
      probe.label = p.at("label");
      probe.request = p.at("request");
      probe.exit_code = p.at("exit_code");
      if (p.contains("result")) probe.result = p.at("result");
      if (p.contains("failure")) probe.failure = p.at("failure");
      if (p.contains("error")) probe.error = p.at("error").get<std::string>();
      entry.probes.push_back(std::move(probe));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

const json* first_failure(const json& report) {
  for (const auto& c : report.at("claims"))
    if (!c.at("pass").get<bool>()) return &c;
  return nullptr;
}

json entry_summary(const ExampleEntry& e) {
  return {{"id", e.id}, {"kind", e.kind}, {"provenance", e.provenance}};
}

}  // namespace

const std::vector<ExampleEntry>& corpus_entries() {
  static const std::vector<ExampleEntry> registry = build_registry();
  return registry;
}

const ExampleEntry& load_example(const std::string& id) {
  for (const auto& e : corpus_entries())
    if (e.id == id) return e;
  throw ParseError("unknown corpus entry '" + id + "'");
}

ProbeOutcome run_probe(const Bundle& bundle, const Probe& probe) {
  ProbeOutcome po;
  po.outcome = run_request(bundle, probe.request);
  const json& rep = po.outcome.report;
  auto miss = [&](std::string why) {
    if (po.mismatch.empty()) po.mismatch = std::move(why);
  };
  if (po.outcome.exit_code != probe.exit_code)
    miss("exit code " + std::to_string(po.outcome.exit_code) + ", expected " + std::to_string(probe.exit_code));
  for (const auto& [k, v] : probe.result.items()) {
    const json& res = rep.at("result");
    if (!res.contains(k))
      miss("result has no '" + k + "'");
    else if (res.at(k) != v)
      miss("result '" + k + "' is " + res.at(k).dump() + ", expected " + v.dump());
  }
  if (!probe.failure.is_null()) {
    const json* f = first_failure(rep);
    if (!f) {
      miss("no failing claim, expected " + probe.failure.dump());
    } else {
      const json got = {{"claim", f->at("claim")},
                        {"indices", f->at("indices")},
                        {"basis", f->contains("counterexample") ? f->at("counterexample").at("basis") : json::array()}};
      if (got != probe.failure) miss("first failure " + got.dump() + ", expected " + probe.failure.dump());
    }
  }
  if (probe.error) {
    const std::string kind = rep.contains("error") ? rep.at("error").value("kind", "") : "";
    if (kind != *probe.error) miss("error kind '" + kind + "', expected '" + *probe.error + "'");
  }
  po.matches = po.mismatch.empty();
  return po;
}

Outcome run_corpus(const json& request) {
  Outcome o;
  o.report = {{"command", "corpus"}};
  const std::string action = request.value("action", "list");
  const std::string id = request.contains("id") && request.at("id").is_string() ? request.at("id").get<std::string>() : "";
  Report report;
  json result = json::object();
  result["action"] = action;
  auto fail_input = [&](const std::string& msg) {
    o.exit_code = kInputError;
    o.report["status"] = "input_error";
    o.report["exit_code"] = o.exit_code;
    o.report["claims"] = json::array();
    o.report["result"] = result;
    o.report["error"] = {{"kind", "input"}, {"message", msg}};
    return o;
  };

  if (action == "list") {
    json entries = json::array();
    for (const auto& e : corpus_entries()) entries.push_back(entry_summary(e));
    result["entries"] = std::move(entries);
  } else if (action == "export") {
    if (id.empty()) return fail_input("corpus export needs an entry id");
    try {
      const ExampleEntry& e = load_example(id);
      result["id"] = e.id;
      result["bundle"] = e.bundle;
    } catch (const ParseError& err) {
      return fail_input(err.what());
    }
  } else if (action == "run") {
    std::vector<const ExampleEntry*> todo;
    if (id.empty()) {
      for (const auto& e : corpus_entries()) todo.push_back(&e);
    } else {
      try {
        todo.push_back(&load_example(id));
      } catch (const ParseError& err) {
        return fail_input(err.what());
      }
    }
    json entries = json::array();
    for (const ExampleEntry* e : todo) {
      json ej = entry_summary(*e);
      json probes = json::array();
      std::optional<Bundle> bundle;
      try {
        bundle = e->load();
        report.pass(e->id + ":load");
      } catch (const std::exception& err) {
        report.fail(e->id + ":load", {}, {{}, err.what()});
      }
      if (bundle) {
        int k = 0;
        for (const auto& p : e->probes) {
          ++k;
          const ProbeOutcome po = run_probe(*bundle, p);
          json pj = {{"label", p.label}, {"exit_code", po.outcome.exit_code}, {"expected_exit_code", p.exit_code},
                     {"matches", po.matches}};
          json observed = json::object();
          for (const auto& [key, _] : p.result.items())
            if (po.outcome.report.at("result").contains(key)) observed[key] = po.outcome.report.at("result").at(key);
          if (!observed.empty()) pj["observed"] = std::move(observed);
          if (po.matches)
            report.pass(e->id + ":" + p.label, {k});
          else
            report.fail(e->id + ":" + p.label, {k}, {{}, po.mismatch});
          probes.push_back(std::move(pj));
        }
      }
      ej["probes"] = std::move(probes);
      entries.push_back(std::move(ej));
    }
    result["entries"] = std::move(entries);
  } else {
    return fail_input("unknown corpus action '" + action + "' (expected list, run or export)");
  }

  o.exit_code = report.ok() ? kPass : kCheckFailed;
  o.report["status"] = o.exit_code == kPass ? "pass" : "fail";
  o.report["exit_code"] = o.exit_code;
  json claims = json::array();
  for (const auto& c : report.claims()) {
    json cj = {{"claim", c.id}, {"kind", "check"}, {"indices", c.indices}, {"pass", c.pass}};
    if (c.counterexample) cj["counterexample"] = {{"basis", json::array()}, {"detail", c.counterexample->detail}};
    claims.push_back(std::move(cj));
  }
  o.report["claims"] = std::move(claims);
  o.report["result"] = std::move(result);
  return o;
}

}  // namespace hyperops

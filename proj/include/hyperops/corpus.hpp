#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperops/driver.hpp"

namespace hyperops {

/// One stored request against an entry's bundle with its expected outcome.
/// `result` is matched key by key against the report's result; `failure`
/// (claim, indices, basis) against the first failing claim; `error` against
/// the report's error kind.
struct Probe {
  std::string label;
  json request;
  int exit_code = 0;
  json result = json::object();
  json failure;
  std::optional<std::string> error;
};

struct ExampleEntry {
  std::string id;
  std::string kind;
  std::string provenance;
  json bundle;
  std::vector<Probe> probes;

  Bundle load() const { return Bundle::from_json(bundle); }
};

/// Registry in a fixed order.
const std::vector<ExampleEntry>& corpus_entries();

/// Throws ParseError for an unknown id.
const ExampleEntry& load_example(const std::string& id);

struct ProbeOutcome {
  bool matches = false;
  Outcome outcome;
  std::string mismatch;
};

ProbeOutcome run_probe(const Bundle& bundle, const Probe& probe);

/// {"command": "corpus", "action": "list" | "run" | "export", "id": optional}
/// `run` without an id runs every entry; it passes iff every probe
/// reproduces its expected outcome, including expected failures.
Outcome run_corpus(const json& request);

}  // namespace hyperops

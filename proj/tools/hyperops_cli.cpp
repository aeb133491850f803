#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperops/hyperops.h"

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string bundle;
  std::string what;
  std::vector<std::string> args;
  std::string triple;
  std::string flavor;
  std::string which;
  std::string hflat, i1, i2;
  std::string algebra;
  std::string target;
  std::string form;
  std::vector<std::string> maps;
  std::string setting;
  std::string id;
  std::string output;
};

bool color_enabled() {
  const char* v = std::getenv("HYPEROPS_COLOR");
  if (!v) return false;
  const std::string s = v;
  return s == "1" || s == "always" || s == "true" || s == "on";
}

class Result {
public:
  ~Result() { hyperops_result_free(r_); }
  hyperops_result** out() { return &r_; }
  hyperops_result* get() const { return r_; }

private:
  hyperops_result* r_ = nullptr;
};

int emit(hyperops_status status, const Result& res, const Options& o) {
  if (!res.get()) {
    std::cerr << "hyperops: " << hyperops_last_error() << "\n";
    return status;
  }
  if (o.format == "json")
    std::cout << hyperops_result_json(res.get());
  else
    std::cout << hyperops_result_text(res.get(), color_enabled() ? 1 : 0);
  return hyperops_result_exit_code(res.get());
}

// Section of the bundle that a request field refers to.
std::string section_for(const std::string& key, const std::string& what, std::size_t position) {
  if (key == "triple") return "triples";
  if (key == "algebra") return "algebras";
  if (key == "form") return "forms";
  if (key != "args") return "maps";
  if (what == "lie" || what == "prelie") return "algebras";
  if (what == "rep") return "reps";
  if (what == "symplectic" || what == "hessian" || what == "invariant-form") return "forms";
  if (what == "kahler") return "quads";
  if (what.rfind("hermitian:", 0) == 0) return position == 0 ? "forms" : "maps";
  return "maps";
}

// Without a bundle file, names refer to corpus entries: "<id>:<name>", or
// "<id>" alone when the entry has exactly one object of the needed kind.
std::optional<std::string> resolve_corpus_names(json& req, std::string& entry_id) {
  std::vector<std::pair<json*, std::pair<std::string, std::size_t>>> slots;
  for (const char* key : {"triple", "algebra", "form", "hflat", "i1", "i2"})
    if (req.contains(key) && req[key].is_string()) slots.push_back({&req[key], {key, 0}});
  for (const char* key : {"args", "maps"})
    if (req.contains(key))
      for (std::size_t k = 0; k < req[key].size(); ++k) slots.push_back({&req[key][k], {key, k}});
  if (slots.empty()) return "no bundle file given and no names to look up in the corpus";

  for (auto& [slot, where] : slots) {
    const std::string name = slot->get<std::string>();
    const std::string id = name.substr(0, name.find(':'));
    if (entry_id.empty()) entry_id = id;
    if (id != entry_id) return "names refer to different corpus entries ('" + entry_id + "' and '" + id + "')";
  }
  Result exported;
  if (hyperops_corpus("export", entry_id.c_str(), exported.out()) != HYPEROPS_OK)
    return "no bundle file given and '" + entry_id + "' is not a corpus entry";
  const json bundle = json::parse(hyperops_result_json(exported.get())).at("result").at("bundle");

  const std::string what = req.value("what", "");
  for (auto& [slot, where] : slots) {
    const std::string name = slot->get<std::string>();
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
      *slot = name.substr(colon + 1);
      continue;
    }
    const std::string section = section_for(where.first, what, where.second);
    const json members = bundle.contains(section) ? bundle.at(section) : json::object();
    if (members.size() != 1)
      return "corpus entry '" + entry_id + "' has " + std::to_string(members.size()) + " " + section +
             "; name one as " + entry_id + ":<name>";
    *slot = members.begin().key();
  }
  return std::nullopt;
}

int run_request(json req, const Options& o) {
  Result res;
  if (!o.bundle.empty()) return emit(hyperops_run_file(o.bundle.c_str(), req.dump().c_str(), res.out()), res, o);

  std::string entry;
  if (auto err = resolve_corpus_names(req, entry)) {
    std::cerr << "hyperops: " << *err << "\n";
    return HYPEROPS_INPUT_ERROR;
  }
  hyperops_bundle* bundle = nullptr;
  if (hyperops_corpus_bundle(entry.c_str(), &bundle) != HYPEROPS_OK) {
    std::cerr << "hyperops: " << hyperops_last_error() << "\n";
    return HYPEROPS_INPUT_ERROR;
  }
  const hyperops_status s = hyperops_run(bundle, req.dump().c_str(), res.out());
  hyperops_bundle_free(bundle);
  return emit(s, res, o);
}

json optional_string(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of relative differential operators and hyper structures on Lie and pre-Lie algebras"};
  app.set_version_flag("--version", std::string(hyperops_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto bundle_arg = [&](CLI::App* sub) {
    sub->add_option("bundle", o.bundle, "Bundle file (omit to use corpus names such as lie.L4sym:w1)");
  };

  auto* check = app.add_subcommand("check", "Run one structure check");
  bundle_arg(check);
  check->add_option("--what", o.what, "lie, prelie, rep, rdo, o-operator, nijenhuis, derivation, dn, kd, kn, compatible, "
                                      "dual-nijenhuis, symplectic, hessian, hermitian:<variant>, invariant-form, kahler")
      ->required();
  check->add_option("--args", o.args, "Object names")->delimiter(',')->required();

  auto* classify = app.add_subcommand("classify-hyper", "Compute the sign vector of a hyper triple");
  bundle_arg(classify);
  classify->add_option("--triple", o.triple)->required();
  classify->add_option("--flavor", o.flavor)->check(CLI::IsMember({"rdo", "symplectic", "hessian"}));

  auto* suite = app.add_subcommand("suite", "Run an identity suite on a hyper triple");
  bundle_arg(suite);
  suite->add_option("--triple", o.triple)->required();
  suite->add_option("--which", o.which, "hflat, cross, derived, product-one, kahler, hierarchy (prop26 and prop28 name hflat and cross)")
      ->required()
      ->check(CLI::IsMember({"prop26", "hflat", "prop28", "cross", "derived", "product-one", "kahler", "hierarchy"}));
  suite->add_option("--flavor", o.flavor)->check(CLI::IsMember({"rdo", "symplectic", "hessian"}));

  auto* decompose = app.add_subcommand("decompose", "Split a triple with sign product -1 into h-flat and I1, I2, I3");
  bundle_arg(decompose);
  decompose->add_option("--triple", o.triple)->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Build d_i = h-flat I_i and classify the result");
  bundle_arg(reconstruct);
  reconstruct->add_option("--hflat", o.hflat)->required();
  reconstruct->add_option("--i1", o.i1)->required();
  reconstruct->add_option("--i2", o.i2)->required();

  auto* search = app.add_subcommand("search-forms", "Solve for the space of forms of a given kind");
  bundle_arg(search);
  search->add_option("--algebra", o.algebra)->required();
  search->add_option("--target", o.target)
      ->required()
      ->check(CLI::IsMember({"symplectic", "hessian", "ad-invariant", "prelie-invariant"}));
  search->add_option("--form", o.form, "Also test whether this form lies in the space");

  auto* correspond = app.add_subcommand("correspond", "Compare an endomorphism triple with its induced forms");
  bundle_arg(correspond);
  correspond->add_option("--form", o.form)->required();
  correspond->add_option("--maps", o.maps)->delimiter(',')->expected(3)->required();
  correspond->add_option("--setting", o.setting)->required()->check(CLI::IsMember({"lie-b", "prelie-omega"}));

  auto* corpus = app.add_subcommand("corpus", "Built-in examples");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List entries");
  auto* corpus_run = corpus->add_subcommand("run", "Run the stored expectations");
  corpus_run->add_option("id", o.id);
  auto* corpus_export = corpus->add_subcommand("export", "Print an entry's bundle");
  corpus_export->add_option("id", o.id)->required();
  corpus_export->add_option("-o,--output", o.output, "Write the bundle to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HYPEROPS_INPUT_ERROR;
  }

  if (check->parsed()) return run_request({{"command", "check"}, {"what", o.what}, {"args", o.args}}, o);
  if (classify->parsed())
    return run_request({{"command", "classify-hyper"}, {"triple", o.triple}, {"flavor", optional_string(o.flavor)}}, o);
  if (suite->parsed())
    return run_request(
        {{"command", "suite"}, {"triple", o.triple}, {"which", o.which}, {"flavor", optional_string(o.flavor)}}, o);
  if (decompose->parsed()) return run_request({{"command", "decompose"}, {"triple", o.triple}}, o);
  if (reconstruct->parsed())
    return run_request({{"command", "reconstruct"}, {"hflat", o.hflat}, {"i1", o.i1}, {"i2", o.i2}}, o);
  if (search->parsed())
    return run_request({{"command", "search-forms"},
                        {"algebra", o.algebra},
                        {"target", o.target},
                        {"form", optional_string(o.form)}},
                       o);
  if (correspond->parsed())
    return run_request({{"command", "correspond"}, {"form", o.form}, {"maps", o.maps}, {"setting", o.setting}}, o);

  Result res;
  if (corpus_list->parsed()) return emit(hyperops_corpus("list", nullptr, res.out()), res, o);
  if (corpus_run->parsed()) return emit(hyperops_corpus("run", o.id.empty() ? nullptr : o.id.c_str(), res.out()), res, o);
  if (corpus_export->parsed()) {
    const hyperops_status s = hyperops_corpus("export", o.id.c_str(), res.out());
    if (s == HYPEROPS_OK && !o.output.empty()) {
      std::ofstream out(o.output);
      out << json::parse(hyperops_result_json(res.get())).at("result").at("bundle").dump(2) << "\n";
      if (!out) {
        std::cerr << "hyperops: cannot write '" << o.output << "'\n";
        return HYPEROPS_INPUT_ERROR;
      }
    }
    return emit(s, res, o);
  }
  return HYPEROPS_INPUT_ERROR;
}

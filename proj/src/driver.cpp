#include "hyperops/driver.hpp"

#include <optional>
#include <sstream>

#include "hyperops/errors.hpp"
#include "hyperops/search.hpp"

namespace hyperops {

namespace {

json basis_json(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

json claim_json(const Claim& c) {
  json j = json::object();
  j["claim"] = c.id;
  j["kind"] = c.kind == ClaimKind::Precondition ? "precondition" : "check";
  j["indices"] = basis_json(c.indices);
  j["pass"] = c.pass;
  if (c.counterexample) j["counterexample"] = {{"basis", basis_json(c.counterexample->basis)}, {"detail", c.counterexample->detail}};
  return j;
}

json eps_json(const std::array<int, 3>& e) { return json::array({e[0], e[1], e[2]}); }

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

json matrices_json(const std::array<Matrix, 3>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(matrix_to_json(m));
  return a;
}

const char* status_name(int code) {
  switch (code) {
    case kPass: return "pass";
    case kCheckFailed: return "fail";
    case kInputError: return "input_error";
    case kPreconditionError: return "precondition_failed";
    default: return "internal_error";
  }
}

std::string req_string(const json& req, const char* key) {
  if (!req.contains(key) || !req.at(key).is_string()) throw ParseError(std::string("request needs a string '") + key + "'");
  return req.at(key).get<std::string>();
}

std::optional<std::string> opt_string(const json& req, const char* key) {
  if (!req.contains(key) || req.at(key).is_null()) return std::nullopt;
  return req_string(req, key);
}

std::vector<std::string> req_names(const json& req, const char* key) {
  if (!req.contains(key) || !req.at(key).is_array()) throw ParseError(std::string("request needs a list '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : req.at(key)) {
    if (!v.is_string()) throw ParseError(std::string("'") + key + "' must list names");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::optional<Flavor> parse_flavor(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  if (*s == "rdo") return Flavor::Rdo;
  if (*s == "symplectic") return Flavor::Symplectic;
  if (*s == "hessian") return Flavor::Hessian;
  throw ParseError("unknown flavor '" + *s + "' (expected rdo, symplectic or hessian)");
}

const char* space_name(Space s) { return s == Space::Algebra ? "algebra" : "module"; }

struct Hyper {
  HyperClassification cls;
  AlgebraRef algebra;
  Flavor flavor = Flavor::Rdo;
  bool of_forms = false;
  std::string rep;
};

class Run {
public:
  Run(const Bundle& b, const json& req) : b_(b), req_(req) {}

  void dispatch() {
    const std::string cmd = req_string(req_, "command");
    if (cmd == "check") check();
    else if (cmd == "classify-hyper") classify();
    else if (cmd == "suite") suite();
    else if (cmd == "decompose") decompose();
    else if (cmd == "reconstruct") reconstruct();
    else if (cmd == "search-forms") search();
    else if (cmd == "correspond") correspond();
    else throw ParseError("unknown command '" + cmd + "'");
  }

  Report report;
  json result = json::object();
  std::set<std::string> names;

private:
  const Bundle& b_;
  const json& req_;

  const NamedMap& map(const std::string& name, Space dom, Space cod) {
    const NamedMap& m = b_.map(name);
    names.insert(name);
    auto norm = [&](Space s) { return m.rep.empty() ? Space::Algebra : s; };
    if (norm(m.map.domain) != norm(dom) || norm(m.map.codomain) != norm(cod))
      throw ParseError("map '" + name + "' must go from the " + space_name(dom) + " to the " + space_name(cod));
    return m;
  }

  const NamedForm& form(const std::string& name) {
    names.insert(name);
    return b_.form(name);
  }

  const AlgebraRef& algebra(const std::string& name) {
    names.insert(name);
    return b_.algebra(name).algebra;
  }

  const LieAlgebra& lie_algebra(const std::string& name) {
    const auto* g = std::get_if<LieAlgebra>(&algebra(name));
    if (!g) throw ParseError("algebra '" + name + "' is a pre-Lie algebra, expected a Lie algebra");
    return *g;
  }

  const PreLieAlgebra& prelie_algebra(const std::string& name) {
    const auto* g = std::get_if<PreLieAlgebra>(&algebra(name));
    if (!g) throw ParseError("algebra '" + name + "' is a Lie algebra, expected a pre-Lie algebra");
    return *g;
  }

  OperatorContext shared_context(const std::vector<const NamedMap*>& ms, const std::vector<std::string>& ns) {
    for (std::size_t k = 1; k < ms.size(); ++k)
      if (ms[k]->rep != ms[0]->rep || ms[k]->algebra != ms[0]->algebra)
        throw ParseError("maps '" + ns[0] + "' and '" + ns[k] + "' live over different representations");
    return b_.context_of(*ms[0]);
  }

  static void arity(const std::string& what, const std::vector<std::string>& args, std::size_t k) {
    if (args.size() != k)
      throw ParseError("check " + what + " takes " + std::to_string(k) + " name(s), got " + std::to_string(args.size()));
  }

  void check() {
    const std::string what = req_string(req_, "what");
    const std::vector<std::string> args = req_names(req_, "args");
    result["what"] = what;
    result["args"] = args;
    const Space A = Space::Algebra, M = Space::Module;
    if (what == "lie") {
      arity(what, args, 1);
      report = check_lie(lie_algebra(args[0]));
    } else if (what == "prelie") {
      arity(what, args, 1);
      report = check_prelie(prelie_algebra(args[0]));
    } else if (what == "rep") {
      arity(what, args, 1);
      names.insert(args[0]);
      report = check_representation(b_.rep(args[0]).rep);
    } else if (what == "rdo") {
      arity(what, args, 1);
      const NamedMap& d = map(args[0], A, M);
      report = is_rdo(b_.context_of(d), d.map.matrix);
    } else if (what == "o-operator") {
      arity(what, args, 1);
      const NamedMap& t = map(args[0], M, A);
      report = is_o_operator(b_.context_of(t), t.map.matrix);
    } else if (what == "nijenhuis") {
      arity(what, args, 1);
      const NamedMap& n = map(args[0], A, A);
      NijenhuisResult res = is_nijenhuis(lie_of(algebra(n.algebra)), n.map.matrix);
      report = std::move(res.report);
      result["complex"] = res.complex;
      result["para_complex"] = res.para_complex;
    } else if (what == "derivation") {
      arity(what, args, 1);
      const NamedMap& d = map(args[0], A, A);
      const AlgebraRef& g = algebra(d.algebra);
      if (const auto* lie = std::get_if<LieAlgebra>(&g))
        report = check_lie_derivation(*lie, d.map.matrix);
      else
        report = check_prelie_derivation(std::get<PreLieAlgebra>(g), d.map.matrix);
    } else if (what == "dn") {
      arity(what, args, 2);
      const NamedMap& d = map(args[0], A, M);
      const NamedMap& n = map(args[1], A, A);
      report = is_dn(context_for(d, n, args), d.map.matrix, n.map.matrix);
    } else if (what == "kd") {
      arity(what, args, 2);
      const NamedMap& t = map(args[0], M, A);
      const NamedMap& d = map(args[1], A, M);
      report = is_kd(shared_context({&t, &d}, args), t.map.matrix, d.map.matrix);
    } else if (what == "kn") {
      arity(what, args, 3);
      const NamedMap& t = map(args[0], M, A);
      const NamedMap& s = map(args[1], M, M);
      const NamedMap& n = map(args[2], A, A);
      report = is_kn(context_for(t, s, args, &n), t.map.matrix, s.map.matrix, n.map.matrix);
    } else if (what == "compatible") {
      arity(what, args, 2);
      const NamedMap& t1 = map(args[0], M, A);
      const NamedMap& t2 = map(args[1], M, A);
      report = are_compatible(shared_context({&t1, &t2}, args), t1.map.matrix, t2.map.matrix);
    } else if (what == "dual-nijenhuis") {
      arity(what, args, 2);
      const NamedMap& n = map(args[0], A, A);
      const NamedMap& s = map(args[1], M, M);
      report = is_dual_nijenhuis_pair(context_for(s, n, {args[1], args[0]}), n.map.matrix, s.map.matrix);
    } else if (what == "symplectic") {
      arity(what, args, 1);
      const NamedForm& f = form(args[0]);
      report = is_symplectic(lie_algebra(f.algebra), f.form);
    } else if (what == "hessian") {
      arity(what, args, 1);
      const NamedForm& f = form(args[0]);
      report = is_hessian(prelie_algebra(f.algebra), f.form);
    } else if (what.rfind("hermitian:", 0) == 0) {
      arity(what, args, 2);
      const auto variant = parse_hermitian_variant(what.substr(10));
      if (!variant) throw ParseError("unknown hermitian variant '" + what.substr(10) + "'");
      const NamedForm& f = form(args[0]);
      const NamedMap& i = map(args[1], A, A);
      if (i.algebra != f.algebra) throw ParseError("map '" + args[1] + "' and form '" + args[0] + "' live on different algebras");
      report = check_hermitian_variant(lie_of(algebra(f.algebra)), f.form, i.map.matrix, *variant);
    } else if (what == "invariant-form") {
      arity(what, args, 1);
      const NamedForm& f = form(args[0]);
      report = is_invariant_form(algebra(f.algebra), f.form);
    } else if (what == "kahler") {
      arity(what, args, 1);
      names.insert(args[0]);
      const NamedQuad& q = b_.quad(args[0]);
      const NamedForm& f = form(q.form);
      KahlerQuad quad{f.form, {}, q.variant};
      for (int i = 0; i < 3; ++i) quad.I[i] = map(q.I[i], A, A).map.matrix;
      result["variant"] = kahler_variant_name(q.variant);
      report = check_kahler_quad(algebra(f.algebra), quad);
    } else {
      throw ParseError("unknown check '" + what + "'");
    }
  }

  // N: 𝔤→𝔤 maps carry no representation, so only the algebras must agree.
  OperatorContext context_for(const NamedMap& with_rep, const NamedMap& other, const std::vector<std::string>& ns,
                              const NamedMap* third = nullptr) {
    auto agree = [&](const NamedMap& m, const std::string& name) {
      if (m.algebra != with_rep.algebra || (!m.rep.empty() && m.rep != with_rep.rep))
        throw ParseError("maps '" + ns[0] + "' and '" + name + "' live over different representations");
    };
    agree(other, ns[1]);
    if (third) agree(*third, ns[2]);
    return b_.context_of(with_rep);
  }

  Hyper classify_named(const std::string& tname, std::optional<Flavor> flavor) {
    names.insert(tname);
    const NamedTriple& t = b_.triple(tname);
    Hyper h;
    h.of_forms = t.of_forms;
    if (t.of_forms) {
      std::array<BilForm, 3> fs;
      for (int i = 0; i < 3; ++i) fs[i] = form(t.members[i]).form;
      const std::string& alg = b_.form(t.members[0]).algebra;
      h.algebra = algebra(alg);
      const bool lie = std::holds_alternative<LieAlgebra>(h.algebra);
      h.flavor = lie ? Flavor::Symplectic : Flavor::Hessian;
      if (flavor && *flavor != h.flavor)
        throw ParseError(std::string("triple '") + tname + "' holds forms on a " + (lie ? "Lie" : "pre-Lie") +
                         " algebra; its flavor is " + flavor_name(h.flavor));
      h.cls = lie ? classify_hyper_symplectic(std::get<LieAlgebra>(h.algebra), fs)
                  : classify_hyper_hessian(std::get<PreLieAlgebra>(h.algebra), fs);
    } else {
      if (flavor && *flavor != Flavor::Rdo)
        throw ParseError("triple '" + tname + "' holds maps; only the rdo flavor applies");
      std::array<Matrix, 3> ds;
      for (int i = 0; i < 3; ++i) ds[i] = map(t.members[i], Space::Algebra, Space::Module).map.matrix;
      names.insert(t.rep);
      h.rep = t.rep;
      h.algebra = algebra(b_.rep(t.rep).algebra);
      h.cls = classify_hyper(b_.context_of_rep(t.rep), ds);
    }
    return h;
  }

  void describe(const Hyper& h) {
    result["triple"] = req_string(req_, "triple");
    result["flavor"] = flavor_name(h.flavor);
    result["classified"] = h.cls.triple.has_value();
    if (h.cls.triple) {
      result["eps"] = eps_json(h.cls.triple->eps);
      result["eps_product"] = h.cls.triple->eps_product();
    } else {
      result["eps"] = nullptr;
    }
  }

  void classify() {
    Hyper h = classify_named(req_string(req_, "triple"), parse_flavor(opt_string(req_, "flavor")));
    report = h.cls.report;
    describe(h);
    if (h.cls.triple) result["hflat"] = matrix_to_json(h.cls.triple->hflat);
  }

  // Suites need a classified triple; a failed classification is a precondition failure.
  std::optional<Hyper> classified(const std::optional<Flavor>& flavor) {
    Hyper h = classify_named(req_string(req_, "triple"), flavor);
    report.merge_as_precondition(h.cls.report, "classify");
    describe(h);
    if (!h.cls.triple) return std::nullopt;
    return h;
  }

  void suite() {
    const std::string which = req_string(req_, "which");
    static const std::set<std::string> known = {"prop26", "hflat",       "prop28", "cross",
                                                "derived", "product-one", "kahler", "hierarchy"};
    if (!known.count(which)) throw ParseError("unknown suite '" + which + "'");
    auto h = classified(parse_flavor(opt_string(req_, "flavor")));
    result["which"] = which;
    if (!h) return;
    const HyperTriple& t = *h->cls.triple;
    if (which == "prop26" || which == "hflat") report.merge(verify_hflat_identities(t));
    else if (which == "prop28" || which == "cross") report.merge(verify_cross_identities(t));
    else if (which == "derived") report.merge(derived_structures_report(t));
    else if (which == "product-one") report.merge(product_one_suite(t));
    else if (which == "hierarchy") report.merge(hierarchy_report(t));
    else kahler(*h);
  }

  void kahler(const Hyper& h) {
    const bool lie = std::holds_alternative<LieAlgebra>(h.algebra);
    if (!h.of_forms) {
      const Representation& r = b_.rep(h.rep).rep;
      const Representation want = lie ? coadjoint_rep(std::get<LieAlgebra>(h.algebra))
                                       : coregular_rep(std::get<PreLieAlgebra>(h.algebra));
      if (r.module_dim != want.module_dim || r.mats != want.mats)
        throw PreconditionError("the Kähler suite needs maps into the " + std::string(lie ? "coadjoint" : "coregular") +
                                " representation; '" + h.rep + "' is not it");
    }
    const Decomposition dec = decompose_hyper(*h.cls.triple);
    report.merge(dec.report, "decompose");
    const KahlerQuad quad = quad_from_decomposition(dec, !lie);
    result["variant"] = kahler_variant_name(quad.variant);
    result["renumbering"] = eps_json(dec.renumbering);
    report.merge(check_kahler_quad(h.algebra, quad), "quad");
  }

  void decompose() {
    auto h = classified(std::nullopt);
    if (!h) return;
    const Decomposition dec = decompose_hyper(*h->cls.triple);
    report.merge(dec.report);
    result["normalized_eps"] = eps_json(dec.eps);
    result["renumbering"] = eps_json(dec.renumbering);
    result["para"] = dec.para;
    result["hflat"] = matrix_to_json(dec.hflat);
    result["I"] = matrices_json(dec.I);
  }

  void reconstruct() {
    const std::vector<std::string> ns = {req_string(req_, "hflat"), req_string(req_, "i1"), req_string(req_, "i2")};
    const NamedMap& h = map(ns[0], Space::Algebra, Space::Module);
    const NamedMap& i1 = map(ns[1], Space::Algebra, Space::Algebra);
    const NamedMap& i2 = map(ns[2], Space::Algebra, Space::Algebra);
    for (int k = 1; k < 3; ++k)
      if ((k == 1 ? i1 : i2).algebra != h.algebra)
        throw ParseError("map '" + ns[k] + "' lives on another algebra than '" + ns[0] + "'");
    if (auto f = parse_flavor(opt_string(req_, "flavor")); f && *f != Flavor::Rdo)
      throw ParseError("reconstruct builds maps; only the rdo flavor applies");
    HyperClassification cls = reconstruct_hyper(b_.context_of(h), h.map.matrix, i1.map.matrix, i2.map.matrix);
    report = cls.report;
    result["classified"] = cls.triple.has_value();
    if (cls.triple) {
      result["eps"] = eps_json(cls.triple->eps);
      result["d"] = matrices_json(cls.triple->d);
    } else {
      result["eps"] = nullptr;
    }
  }

  void search() {
    const std::string alg = req_string(req_, "algebra");
    const std::string tname = req_string(req_, "target");
    const auto target = parse_form_target(tname);
    if (!target) throw ParseError("unknown target '" + tname + "'");
    const AlgebraRef& g = algebra(alg);
    const FormSpaceResult res = solve_forms(g, *target);
    result["algebra"] = alg;
    result["target"] = form_target_name(res.target);
    json coords = json::array();
    for (const auto& [i, j] : form_coordinates(res.dim, target_symmetry(*target)))
      coords.push_back(json::array({static_cast<int>(i) + 1, static_cast<int>(j) + 1}));
    result["coordinates"] = coords;
    result["space_dim"] = res.space.dim();
    json basis = json::array();
    for (const auto& v : res.space.basis) basis.push_back(vector_json(v));
    result["basis"] = basis;
    result["generic_det"] = res.generic_det.str();
    result["exists_nondegenerate"] = res.exists_nondegenerate;
    if (auto fname = opt_string(req_, "form")) {
      const NamedForm& f = form(*fname);
      if (f.algebra != alg) throw ParseError("form '" + *fname + "' lives on another algebra");
      const auto params = res.parameters_of(f.form);
      if (params) {
        report.pass("member");
        result["parameters"] = vector_json(*params);
      } else {
        report.fail("member", {}, {{}, "form '" + *fname + "' is not in the solution space"});
      }
    }
  }

  void correspond() {
    const std::string fname = req_string(req_, "form");
    const std::vector<std::string> ms = req_names(req_, "maps");
    if (ms.size() != 3) throw ParseError("correspond takes three maps");
    const std::string setting = req_string(req_, "setting");
    CorrespondenceSetting s;
    if (setting == "lie-b") s = CorrespondenceSetting::LieB;
    else if (setting == "prelie-omega") s = CorrespondenceSetting::PreLieOmega;
    else throw ParseError("unknown setting '" + setting + "' (expected lie-b or prelie-omega)");
    const NamedForm& f = form(fname);
    std::array<Matrix, 3> d;
    for (int i = 0; i < 3; ++i) {
      const NamedMap& m = map(ms[i], Space::Algebra, Space::Algebra);
      if (m.algebra != f.algebra) throw ParseError("map '" + ms[i] + "' lives on another algebra than form '" + fname + "'");
      d[i] = m.map.matrix;
    }
    CorrespondenceResult res = endo_triple_correspondence(algebra(f.algebra), f.form, d, s);
    report = std::move(res.report);
    result["setting"] = setting;
    result["operator_eps"] = res.operator_eps ? eps_json(*res.operator_eps) : json(nullptr);
    result["form_eps"] = res.form_eps ? eps_json(*res.form_eps) : json(nullptr);
  }
};

json base_report(const json& request) {
  json r = json::object();
  r["command"] = request.is_object() && request.contains("command") ? request.at("command") : json(nullptr);
  return r;
}

Outcome error_outcome(const json& request, int code, const char* kind, const std::string& message,
                      const std::vector<int>& basis = {}) {
  Outcome o;
  o.exit_code = code;
  o.report = base_report(request);
  o.report["status"] = status_name(code);
  o.report["exit_code"] = code;
  o.report["claims"] = json::array();
  o.report["result"] = json::object();
  json err = {{"kind", kind}, {"message", message}};
  if (!basis.empty()) err["basis"] = basis_json(basis);
  o.report["error"] = err;
  o.report["request"] = request;
  return o;
}

}  // namespace

Outcome run_request(const Bundle& bundle, const json& request) {
  Run run(bundle, request);
  auto failed = [&](Outcome o) {
    if (!run.names.empty()) o.report["fragment"] = bundle.fragment(run.names);
    return o;
  };
  try {
    if (!request.is_object()) throw ParseError("request must be a JSON object");
    run.dispatch();
    Outcome o;
    o.exit_code = !run.report.preconditions_ok() ? kPreconditionError : run.report.ok() ? kPass : kCheckFailed;
    o.report = base_report(request);
    o.report["status"] = status_name(o.exit_code);
    o.report["exit_code"] = o.exit_code;
    json claims = json::array();
    for (const auto& c : run.report.claims()) claims.push_back(claim_json(c));
    o.report["claims"] = std::move(claims);
    o.report["result"] = std::move(run.result);
    o.report["real_inputs"] = run.names.empty() ? json(nullptr) : json(bundle.all_real(run.names));
    o.report["request"] = request;
    return o.exit_code == kPass ? o : failed(std::move(o));
  } catch (const DomainError& e) {
    return failed(error_outcome(request, kPreconditionError, "domain", e.what(), e.basis()));
  } catch (const PreconditionError& e) {
    return failed(error_outcome(request, kPreconditionError, "precondition", e.what(), e.basis()));
  } catch (const ParseError& e) {
    return failed(error_outcome(request, kInputError, "input", e.what()));
  } catch (const DimensionError& e) {
    return failed(error_outcome(request, kInputError, "input", e.what()));
  } catch (const json::exception& e) {
    return failed(error_outcome(request, kInputError, "input", e.what()));
  } catch (const std::exception& e) {
    return failed(error_outcome(request, kInternalError, "internal", e.what()));
  }
}

Outcome run_request_text(const std::string& bundle_text, const json& request) {
  std::optional<Bundle> b;
  try {
    b = Bundle::parse(bundle_text);
  } catch (const std::exception& e) {
    return error_outcome(request, kInputError, "input", e.what());
  }
  return run_request(*b, request);
}

namespace {

std::string indices_str(const json& a) {
  if (!a.is_array() || a.empty()) return "";
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + a[k].dump();
  return s + ")";
}

std::string value_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_text(const json& report, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* yellow = color ? "\033[33m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream out;
  const std::string status = report.value("status", "");
  const char* tint = status == "pass" ? green : status == "fail" ? red : yellow;
  out << value_str(report.value("command", json("?"))) << ": " << tint << status << reset << " (exit "
      << report.value("exit_code", -1) << ")\n";
  if (report.contains("claims"))
    for (const auto& c : report.at("claims")) {
      const bool pass = c.value("pass", false);
      const bool pre = c.value("kind", "") == "precondition";
      out << "  " << (pass ? green : pre ? yellow : red) << (pass ? "ok  " : pre ? "PRE " : "FAIL") << reset << " "
          << c.value("claim", "") << indices_str(c.value("indices", json::array()));
      if (c.contains("counterexample")) {
        const json& cx = c.at("counterexample");
        const std::string basis = indices_str(cx.value("basis", json::array()));
        if (!basis.empty()) out << " at basis " << basis;
        const std::string detail = cx.value("detail", "");
        if (!detail.empty()) out << ": " << detail;
      }
      out << "\n";
    }
  if (report.contains("result"))
    for (const auto& [k, v] : report.at("result").items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        out << "  " << k << ":\n";
        for (const auto& item : v) out << "    - " << item.dump() << "\n";
      } else {
        out << "  " << k << ": " << value_str(v) << "\n";
      }
    }
  if (report.contains("real_inputs") && report.at("real_inputs") == false)
    out << "  note: some inputs have imaginary parts\n";
  if (report.contains("error")) {
    const json& e = report.at("error");
    out << "  " << red << "error" << reset << " (" << e.value("kind", "") << "): " << e.value("message", "");
    if (e.contains("basis")) out << " at basis " << indices_str(e.at("basis"));
    out << "\n";
  }
  return out.str();
}

}  // namespace hyperops

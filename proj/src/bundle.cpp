#include "hyperops/bundle.hpp"

#include <fstream>
#include <sstream>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(where + "." + key, "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

int index_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  return static_cast<int>(v.get<long long>());
}

Scalar scalar_at(const json& v, const std::string& where) {
  try {
    return scalar_from_json(v);
  } catch (const ParseError& e) {
    bad(where, e.what());
  }
}

Matrix matrix_at(const json& rows, const std::string& where) {
  try {
    return matrix_from_json(rows);
  } catch (const ParseError& e) {
    bad(where, e.what());
  }
}

Space space_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return Space::Algebra;
  const std::string s = string_field(obj, key, where);
  if (s == "algebra") return Space::Algebra;
  if (s == "module") return Space::Module;
  bad(where + "." + key, "expected 'algebra' or 'module', got '" + s + "'");
}

Symmetry symmetry_field(const json& obj, const std::string& where) {
  const std::string s = obj.contains("symmetry") ? string_field(obj, "symmetry", where) : "none";
  if (s == "symmetric") return Symmetry::Symmetric;
  if (s == "skew") return Symmetry::Skew;
  if (s == "none") return Symmetry::None;
  bad(where + ".symmetry", "expected symmetric, skew or none, got '" + s + "'");
}

std::size_t algebra_dim(const AlgebraRef& g) {
  return std::visit([](const auto& a) { return a.dim(); }, g);
}

const char* kSections[] = {"algebras", "reps", "maps", "forms", "triples", "quads"};

}  // namespace

Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
  throw ParseError("expected a scalar string or integer, got " + v.dump());
}

Matrix matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw ParseError("expected an array of rows");
  if (rows.empty()) return Matrix();
  std::size_t cols = 0;
  std::vector<Vector> data;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array");
    if (r == 0) cols = row.size();
    if (row.size() != cols)
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    Vector v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      try {
        v.push_back(scalar_from_json(row[c]));
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + e.what());
      }
    }
    data.push_back(std::move(v));
  }
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = data[r][c];
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Bundle Bundle::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bundle is not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

Bundle Bundle::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read bundle file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Bundle Bundle::from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("bundle must be a JSON object");
  if (doc.contains("field") && doc.at("field") != "gaussian_rational")
    throw ParseError("unsupported field " + doc.at("field").dump() + "; only \"gaussian_rational\" is available");
  Bundle b;
  b.doc_ = doc;
  std::set<std::string> seen;
  for (const char* sec : kSections) {
    if (!doc.contains(sec)) continue;
    if (!doc.at(sec).is_object()) bad(sec, "expected an object of named entries");
    for (const auto& [name, _] : doc.at(sec).items())
      if (!seen.insert(name).second) bad(std::string(sec) + "." + name, "name already used elsewhere in the bundle");
  }
  auto section = [&](const char* sec) { return doc.contains(sec) ? doc.at(sec) : json::object(); };

  const json algebras_sec = section("algebras");
  for (const auto& [name, a] : algebras_sec.items()) {
    const std::string where = "algebras." + name;
    const std::string kind = string_field(a, "kind", where);
    const std::size_t dim = count_field(a, "dim", where);
    std::vector<StructureEntry> entries;
    bool real = true;
    if (a.contains("constants")) {
      const json& cs = a.at("constants");
      if (!cs.is_array()) bad(where + ".constants", "expected an array");
      for (std::size_t r = 0; r < cs.size(); ++r) {
        const std::string w = where + ".constants[" + std::to_string(r) + "]";
        StructureEntry e{index_field(cs[r], "i", w), index_field(cs[r], "j", w), index_field(cs[r], "k", w),
                         scalar_at(field(cs[r], "coeff", w), w + ".coeff")};
        real = real && e.coeff.is_real();
        entries.push_back(e);
      }
    }
    try {
      if (kind == "lie") {
        const bool anti = !a.contains("antisymmetric") || a.at("antisymmetric").get<bool>();
        b.algebras_.emplace(name, NamedAlgebra{LieAlgebra::from_entries(dim, entries, anti), real});
      } else if (kind == "prelie") {
        b.algebras_.emplace(name, NamedAlgebra{PreLieAlgebra::from_entries(dim, entries), real});
      } else {
        bad(where + ".kind", "expected 'lie' or 'prelie', got '" + kind + "'");
      }
    } catch (const DimensionError& e) {
      bad(where, e.what());
    } catch (const json::exception& e) {
      bad(where, e.what());
    }
  }

  const json reps_sec = section("reps");
  for (const auto& [name, r] : reps_sec.items()) {
    const std::string where = "reps." + name;
    const std::string alg = string_field(r, "algebra", where);
    if (!b.algebras_.count(alg)) bad(where + ".algebra", "unknown algebra '" + alg + "'");
    const NamedAlgebra& na = b.algebras_.at(alg);
    const LieAlgebra lie = lie_of(na.algebra);
    NamedRep nr{alg, {}, na.real};
    if (r.contains("constructor")) {
      const std::string c = string_field(r, "constructor", where);
      const auto* pre = std::get_if<PreLieAlgebra>(&na.algebra);
      if (c == "adjoint") {
        nr.rep = adjoint_rep(lie);
      } else if (c == "coadjoint") {
        nr.rep = coadjoint_rep(lie);
      } else if (c == "regular" || c == "coregular") {
        if (!pre) bad(where + ".constructor", "'" + c + "' needs a pre-Lie algebra");
        nr.rep = c == "regular" ? regular_rep(*pre) : coregular_rep(*pre);
      } else if (c == "trivial") {
        nr.rep = trivial_rep(lie, count_field(r, "dim", where));
      } else {
        bad(where + ".constructor", "unknown constructor '" + c + "'");
      }
    } else {
      const std::size_t m = count_field(r, "dim", where);
      const json& mats = field(r, "matrices", where);
      if (!mats.is_array() || mats.size() != lie.dim())
        bad(where + ".matrices", "expected one matrix per basis element (" + std::to_string(lie.dim()) + ")");
      nr.rep = Representation{lie, m, {}};
      for (std::size_t i = 0; i < mats.size(); ++i) {
        Matrix mat = matrix_at(mats[i], where + ".matrices[" + std::to_string(i) + "]");
        if (mat.rows() != m || mat.cols() != m)
          bad(where + ".matrices[" + std::to_string(i) + "]", "expected " + std::to_string(m) + "x" + std::to_string(m) +
                                                                 ", got " + mat.shape_str());
        nr.real = nr.real && mat.is_real();
        nr.rep.mats.push_back(std::move(mat));
      }
    }
    b.reps_.emplace(name, std::move(nr));
  }

  const json maps_sec = section("maps");
  for (const auto& [name, m] : maps_sec.items()) {
    const std::string where = "maps." + name;
    NamedMap nm;
    if (m.contains("rep")) {
      nm.rep = string_field(m, "rep", where);
      if (!b.reps_.count(nm.rep)) bad(where + ".rep", "unknown representation '" + nm.rep + "'");
      nm.algebra = b.reps_.at(nm.rep).algebra;
      if (m.contains("algebra") && string_field(m, "algebra", where) != nm.algebra)
        bad(where + ".algebra", "does not match the algebra of representation '" + nm.rep + "'");
    } else {
      nm.algebra = string_field(m, "algebra", where);
      if (!b.algebras_.count(nm.algebra)) bad(where + ".algebra", "unknown algebra '" + nm.algebra + "'");
    }
    nm.map.domain = space_field(m, "domain", where);
    nm.map.codomain = space_field(m, "codomain", where);
    nm.map.matrix = matrix_at(field(m, "matrix", where), where + ".matrix");
    const std::size_t n = algebra_dim(b.algebras_.at(nm.algebra).algebra);
    const bool needs_module = nm.map.domain == Space::Module || nm.map.codomain == Space::Module;
    if (needs_module && nm.rep.empty()) bad(where, "a map touching the module needs a 'rep'");
    const std::size_t mdim = nm.rep.empty() ? n : b.reps_.at(nm.rep).rep.module_dim;
    const std::size_t rows = nm.map.codomain == Space::Algebra ? n : mdim;
    const std::size_t cols = nm.map.domain == Space::Algebra ? n : mdim;
    if (nm.map.matrix.rows() != rows || nm.map.matrix.cols() != cols)
      bad(where + ".matrix", "expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                 nm.map.matrix.shape_str());
    nm.real = nm.map.matrix.is_real();
    b.maps_.emplace(name, std::move(nm));
  }

  const json forms_sec = section("forms");
  for (const auto& [name, f] : forms_sec.items()) {
    const std::string where = "forms." + name;
    NamedForm nf;
    nf.algebra = string_field(f, "algebra", where);
    if (!b.algebras_.count(nf.algebra)) bad(where + ".algebra", "unknown algebra '" + nf.algebra + "'");
    const std::size_t n = algebra_dim(b.algebras_.at(nf.algebra).algebra);
    const Symmetry sym = symmetry_field(f, where);
    if (f.contains("matrix")) {
      Matrix mat = matrix_at(f.at("matrix"), where + ".matrix");
      if (mat.rows() != n || mat.cols() != n) bad(where + ".matrix", "expected " + std::to_string(n) + "x" + std::to_string(n));
      try {
        nf.form = BilForm::make(std::move(mat), sym);
      } catch (const DimensionError& e) {
        bad(where, e.what());
      }
    } else {
      const json& terms = field(f, "terms", where);
      if (!terms.is_array()) bad(where + ".terms", "expected an array");
      std::vector<FormTerm> ts;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string w = where + ".terms[" + std::to_string(t) + "]";
        ts.push_back({string_field(terms[t], "term", w), scalar_at(field(terms[t], "coeff", w), w + ".coeff")});
      }
      try {
        nf.form = form_from_terms(n, ts, sym);
      } catch (const ParseError& e) {
        bad(where, e.what());
      }
    }
    nf.real = nf.form.matrix.is_real();
    b.forms_.emplace(name, std::move(nf));
  }

  const json triples_sec = section("triples");
  for (const auto& [name, t] : triples_sec.items()) {
    const std::string where = "triples." + name;
    NamedTriple nt;
    nt.of_forms = t.contains("forms");
    const json& members = nt.of_forms ? t.at("forms") : field(t, "maps", where);
    if (!members.is_array() || members.size() != 3) bad(where, "expected exactly three members");
    for (int i = 0; i < 3; ++i) {
      if (!members[i].is_string()) bad(where, "members must be names");
      nt.members[i] = members[i].get<std::string>();
      if (nt.of_forms ? !b.forms_.count(nt.members[i]) : !b.maps_.count(nt.members[i]))
        bad(where, std::string("unknown ") + (nt.of_forms ? "form" : "map") + " '" + nt.members[i] + "'");
    }
    if (nt.of_forms) {
      for (int i = 1; i < 3; ++i)
        if (b.forms_.at(nt.members[i]).algebra != b.forms_.at(nt.members[0]).algebra)
          bad(where, "forms live on different algebras");
    } else {
      nt.rep = t.contains("rep") ? string_field(t, "rep", where) : b.maps_.at(nt.members[0]).rep;
      if (nt.rep.empty()) bad(where, "a map triple needs a representation");
      if (!b.reps_.count(nt.rep)) bad(where + ".rep", "unknown representation '" + nt.rep + "'");
      for (const auto& mname : nt.members) {
        const NamedMap& nm = b.maps_.at(mname);
        if (nm.map.domain != Space::Algebra || nm.map.codomain != Space::Module)
          bad(where, "map '" + mname + "' must go from the algebra to the module");
        if (nm.rep != nt.rep) bad(where, "map '" + mname + "' is not over representation '" + nt.rep + "'");
      }
    }
    b.triples_.emplace(name, std::move(nt));
  }

  const json quads_sec = section("quads");
  for (const auto& [name, q] : quads_sec.items()) {
    const std::string where = "quads." + name;
    NamedQuad nq;
    nq.form = string_field(q, "form", where);
    if (!b.forms_.count(nq.form)) bad(where + ".form", "unknown form '" + nq.form + "'");
    const json& is = field(q, "I", where);
    if (!is.is_array() || is.size() != 3) bad(where + ".I", "expected three map names");
    for (int i = 0; i < 3; ++i) {
      nq.I[i] = is[i].get<std::string>();
      if (!b.maps_.count(nq.I[i])) bad(where + ".I", "unknown map '" + nq.I[i] + "'");
      if (b.maps_.at(nq.I[i]).algebra != b.forms_.at(nq.form).algebra)
        bad(where + ".I", "map '" + nq.I[i] + "' lives on another algebra");
    }
    const std::string v = string_field(q, "variant", where);
    bool found = false;
    for (auto kv : {KahlerVariant::HyperKahler, KahlerVariant::ParaHyperKahler, KahlerVariant::HyperAntiKahler,
                    KahlerVariant::ParaHyperAntiKahler})
      if (v == kahler_variant_name(kv)) {
        nq.variant = kv;
        found = true;
      }
    if (!found) bad(where + ".variant", "unknown variant '" + v + "'");
    b.quads_.emplace(name, std::move(nq));
  }
  return b;
}

namespace {
template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw ParseError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}
}  // namespace

const NamedAlgebra& Bundle::algebra(const std::string& n) const { return lookup(algebras_, n, "algebra"); }
const NamedRep& Bundle::rep(const std::string& n) const { return lookup(reps_, n, "representation"); }
const NamedMap& Bundle::map(const std::string& n) const { return lookup(maps_, n, "map"); }
const NamedForm& Bundle::form(const std::string& n) const { return lookup(forms_, n, "form"); }
const NamedTriple& Bundle::triple(const std::string& n) const { return lookup(triples_, n, "triple"); }
const NamedQuad& Bundle::quad(const std::string& n) const { return lookup(quads_, n, "quad"); }

OperatorContext Bundle::context_of(const NamedMap& m) const {
  if (!m.rep.empty()) return OperatorContext(rep(m.rep).rep);
  return OperatorContext(adjoint_rep(lie_of(algebra(m.algebra).algebra)));
}

OperatorContext Bundle::context_of_rep(const std::string& r) const { return OperatorContext(rep(r).rep); }

std::set<std::string> Bundle::closure(const std::set<std::string>& names) const {
  std::set<std::string> out;
  std::vector<std::string> todo(names.begin(), names.end());
  while (!todo.empty()) {
    std::string n = todo.back();
    todo.pop_back();
    if (n.empty() || !out.insert(n).second) continue;
    if (auto it = reps_.find(n); it != reps_.end()) todo.push_back(it->second.algebra);
    if (auto it = maps_.find(n); it != maps_.end()) {
      todo.push_back(it->second.algebra);
      todo.push_back(it->second.rep);
    }
    if (auto it = forms_.find(n); it != forms_.end()) todo.push_back(it->second.algebra);
    if (auto it = triples_.find(n); it != triples_.end()) {
      todo.insert(todo.end(), it->second.members.begin(), it->second.members.end());
      todo.push_back(it->second.rep);
    }
    if (auto it = quads_.find(n); it != quads_.end()) {
      todo.push_back(it->second.form);
      todo.insert(todo.end(), it->second.I.begin(), it->second.I.end());
    }
  }
  return out;
}

json Bundle::fragment(const std::set<std::string>& names) const {
  const std::set<std::string> keep = closure(names);
  json out = json::object();
  out["field"] = "gaussian_rational";
  for (const char* sec : kSections) {
    if (!doc_.contains(sec)) continue;
    json part = json::object();
    for (const auto& [name, v] : doc_.at(sec).items())
      if (keep.count(name)) part[name] = v;
    if (!part.empty()) out[sec] = std::move(part);
  }
  return out;
}

bool Bundle::all_real(const std::set<std::string>& names) const {
  for (const auto& n : closure(names)) {
    if (auto it = algebras_.find(n); it != algebras_.end() && !it->second.real) return false;
    if (auto it = reps_.find(n); it != reps_.end() && !it->second.real) return false;
    if (auto it = maps_.find(n); it != maps_.end() && !it->second.real) return false;
    if (auto it = forms_.find(n); it != forms_.end() && !it->second.real) return false;
  }
  return true;
}

}  // namespace hyperops

#pragma once

#include <array>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "hyperops/geometry.hpp"

namespace hyperops {

using json = nlohmann::ordered_json;

struct NamedAlgebra {
  AlgebraRef algebra;
  bool real = true;
};
struct NamedRep {
  std::string algebra;
  Representation rep;
  bool real = true;
};
/// `context` names a representation when one was given, otherwise an algebra.
struct NamedMap {
  LinMap map;
  std::string algebra;
  std::string rep;
  bool real = true;
};
struct NamedForm {
  std::string algebra;
  BilForm form;
  bool real = true;
};
struct NamedTriple {
  std::array<std::string, 3> members;
  bool of_forms = false;
  std::string rep;  // for map triples
};
struct NamedQuad {
  std::string form;
  std::array<std::string, 3> I;
  KahlerVariant variant = KahlerVariant::HyperKahler;
};

/// One document holding algebras, representations, maps, forms, triples and
/// Kähler quads, cross-referenced by name. All references are resolved and
/// all shapes checked at parse time; any problem throws ParseError.
class Bundle {
public:
  static Bundle parse(const std::string& text);
  static Bundle from_json(const json& doc);
  static Bundle load_file(const std::string& path);

  const json& document() const noexcept { return doc_; }

  const NamedAlgebra& algebra(const std::string& name) const;
  const NamedRep& rep(const std::string& name) const;
  const NamedMap& map(const std::string& name) const;
  const NamedForm& form(const std::string& name) const;
  const NamedTriple& triple(const std::string& name) const;
  const NamedQuad& quad(const std::string& name) const;

  bool has_algebra(const std::string& n) const { return algebras_.count(n) != 0; }

  /// Operator context of a map: its representation, or the adjoint
  /// representation of its algebra.
  OperatorContext context_of(const NamedMap& m) const;
  OperatorContext context_of_rep(const std::string& rep) const;

  /// Sub-document holding `names` (of any section) and everything they
  /// reference, with the same field layout as a full bundle.
  json fragment(const std::set<std::string>& names) const;
  /// Whether every scalar of the named objects (and their dependencies) is real.
  bool all_real(const std::set<std::string>& names) const;

private:
  std::set<std::string> closure(const std::set<std::string>& names) const;

  json doc_;
  std::map<std::string, NamedAlgebra> algebras_;
  std::map<std::string, NamedRep> reps_;
  std::map<std::string, NamedMap> maps_;
  std::map<std::string, NamedForm> forms_;
  std::map<std::string, NamedTriple> triples_;
  std::map<std::string, NamedQuad> quads_;
};

Scalar scalar_from_json(const json& v);
Matrix matrix_from_json(const json& rows);
json matrix_to_json(const Matrix& m);

}  // namespace hyperops

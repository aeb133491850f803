#pragma once

#include <random>
#include <string>

#include "hyperops/corpus.hpp"
#include "hyperops/errors.hpp"
#include "hyperops/search.hpp"

namespace hyperops::test {

inline Bundle corpus_bundle(const std::string& id) { return load_example(id).load(); }

inline Matrix form_map(const Bundle& b, const std::string& form) { return form_to_map(b.form(form).form); }

inline const LieAlgebra& lie(const Bundle& b, const std::string& name) {
  return std::get<LieAlgebra>(b.algebra(name).algebra);
}

inline const PreLieAlgebra& prelie(const Bundle& b, const std::string& name) {
  return std::get<PreLieAlgebra>(b.algebra(name).algebra);
}

/// The classified hyper triple of a corpus entry.
inline HyperTriple corpus_triple(const std::string& id, const std::string& triple) {
  const Bundle b = corpus_bundle(id);
  const NamedTriple& t = b.triple(triple);
  HyperClassification c;
  if (t.of_forms) {
    std::array<BilForm, 3> fs{b.form(t.members[0]).form, b.form(t.members[1]).form, b.form(t.members[2]).form};
    const AlgebraRef& g = b.algebra(b.form(t.members[0]).algebra).algebra;
    c = std::holds_alternative<LieAlgebra>(g) ? classify_hyper_symplectic(std::get<LieAlgebra>(g), fs)
                                              : classify_hyper_hessian(std::get<PreLieAlgebra>(g), fs);
  } else {
    c = classify_hyper(b.context_of_rep(t.rep),
                       {b.map(t.members[0]).map.matrix, b.map(t.members[1]).map.matrix, b.map(t.members[2]).map.matrix});
  }
  if (!c.triple) throw Error("corpus triple " + id + "/" + triple + " did not classify");
  return *c.triple;
}

struct CorpusTriple {
  std::string id;
  std::string triple;
};

inline const std::vector<CorpusTriple>& corpus_triples() {
  static const std::vector<CorpusTriple> all = {
      {"lie.L4sym", "omegas"}, {"prelie.rot4", "hessians"}, {"abelian.quat", "units"}, {"abelian.para", "pt"}};
  return all;
}

inline Scalar random_scalar(std::mt19937& rng, bool complex = true) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  return complex ? Scalar::fraction(num(rng), den(rng), num(rng), den(rng)) : Scalar::fraction(num(rng), den(rng));
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, bool complex = true) {
  Vector v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_scalar(rng, complex));
  return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool complex = true) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, complex);
  return m;
}

}  // namespace hyperops::test

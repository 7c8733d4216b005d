/*
 * ring.hpp
 * --------
 * A local ring presentation k[x1..xn]/(relations), localized at the
 * irrelevant maximal ideal, with a declared Krull dimension.
 */
#pragma once

#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

struct RingPresentation {
  Field field;
  std::vector<std::string> variables;
  std::vector<Polynomial> relations;
  int declared_dim = 0;

  int nvars() const { return static_cast<int>(variables.size()); }
  bool regular() const { return relations.empty(); }
  bool hypersurface() const { return relations.size() == 1; }

  void validate() const {
    if (declared_dim < 0 || declared_dim > nvars())
      throw std::invalid_argument("declared dimension out of range");
    for (auto& r : relations) {
      if (r.is_zero()) throw std::invalid_argument("zero relation");
      if (r.terms.count(Monomial::one(nvars())))
        throw std::invalid_argument("relation has a constant term");
    }
  }

  bool same_presentation(const RingPresentation& o) const {
    return field == o.field && variables == o.variables &&
           relations == o.relations && declared_dim == o.declared_dim;
  }
};

}  // namespace idealkit

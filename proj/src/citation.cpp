#include "torickit/citation.hpp"

#include "torickit/errors.hpp"

namespace torickit {

const std::vector<Citation> &citation_catalog() {
  static const std::vector<Citation> catalog = {
      {"qfactorial-transfer",
       "A small Q-factorial modification X' -> X carries weakly free curves through the lifted points to weakly free "
       "curves on X, so X may be assumed Q-factorial."},
      {"move-off-small-subvariety",
       "A weakly free curve can be deformed off any closed subset of codimension at least two, which reduces an "
       "arbitrary S to the union of torus orbits of codimension at least two."},
      {"general-deformation-meets-properly",
       "A general member of a family of weakly free curves meets a given closed subset only where the family is "
       "forced to, so each orbit in the induction can be avoided in turn."},
      {"image-of-weakly-free-curve",
       "The image of a weakly free curve under a finite surjective toric morphism is weakly free, which transfers "
       "curves from the smoothing isogeny back to X."},
      {"comb-smoothing",
       "A comb of free rational curves attached to a central curve smooths to an irreducible rational curve keeping "
       "the prescribed points."},
      {"freeness-criterion",
       "A rational curve in the smooth locus with ample restricted tangent bundle twisted down by the marked points "
       "is free over those points."},
      {"divisorial-points-condition",
       "The extra resolution making the curve meet exceptional loci only in divisorial points depends on a general "
       "curve of the family and is not constructed."},
  };
  return catalog;
}

const Citation &cite(std::string_view id) {
  for (const auto &c : citation_catalog())
    if (c.id == id)
      return c;
  throw ToricError("UnknownCitation", std::string(id));
}

} // namespace torickit

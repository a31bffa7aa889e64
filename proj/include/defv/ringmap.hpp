#ifndef DEFV_RINGMAP_HPP
#define DEFV_RINGMAP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defv/laurent.hpp"
#include "defv/monoid.hpp"

namespace defv {

/// A ring in one of two presentations over a common scalar tower:
///  - a monomial subalgebra of the Laurent ring in `vars` (algebra set), or
///  - a quotient of the nonnegative polynomial ring in `vars` by a single
///    binomial rule (rule set), used for the chart k[x,y,z]/(xz - y^p).
/// With neither set the ring is the full Laurent ring in `vars`.
struct RingDesc {
  std::string name;
  TowerPtr tower;
  std::vector<std::string> vars;
  std::optional<MonomialAlgebra> algebra;
  std::optional<RewriteRule> rule;

  static RingDesc laurent(std::string name, TowerPtr tower, std::vector<std::string> vars);
  static RingDesc subalgebra(std::string name, TowerPtr tower, std::vector<std::string> vars,
                             MonomialAlgebra algebra);
  static RingDesc quotient(std::string name, TowerPtr tower, std::vector<std::string> vars,
                           RewriteRule rule);

  // Generators of the ring as monomials (algebra generators, or the
  // variables themselves for quotient/Laurent presentations).
  std::vector<LaurentPoly> generators() const;
  std::vector<std::string> generator_names() const;
  // Normal form in this presentation (rewrites under the rule, if any).
  LaurentPoly normalize(const LaurentPoly& f) const;
  // Every monomial of f lies in this ring (semigroup membership for
  // subalgebras, nonnegative exponents for quotients).
  bool contains(const LaurentPoly& f, int64_t bound, std::string* offending = nullptr) const;

  RingDesc with_tower(TowerPtr t) const;
  bool same_underlying(const RingDesc& o) const;
};

/// Homomorphism between rings, stored as a substitution rule: one image per
/// ambient variable. Generator images are derived (inverting unit images for
/// negative exponents) and kept in target normal form.
class RingMap {
 public:
  RingMap() = default;
  static RingMap substitution(std::string name, RingDesc source, RingDesc target,
                              std::map<std::string, LaurentPoly> var_images, CoeffMap coeff_map);
  static RingMap identity(const RingDesc& ring);
  // The inclusion of source into target (same variables, identity images).
  static RingMap inclusion(std::string name, RingDesc source, RingDesc target);

  const std::string& name() const { return name_; }
  const RingDesc& source() const { return source_; }
  const RingDesc& target() const { return target_; }
  const CoeffMap& coeff_map() const { return *coeff_map_; }
  const std::map<std::string, LaurentPoly>& var_images() const { return var_images_; }

  // Image of an element written in the source variables.
  LaurentPoly apply(const LaurentPoly& f) const;
  // Images of the source generators, in target normal form.
  std::vector<LaurentPoly> generator_images() const;

  // Same generator images in normal form (the map-equality convention).
  bool equals_on_generators(const RingMap& o, std::string* witness = nullptr) const;

  // this o inner (apply inner first).
  RingMap compose_after(const RingMap& inner, const std::string& name = "") const;
  // id (x) pi on all coefficients.
  RingMap restrict_coefficients(const CoeffMap& pi, const std::string& name = "") const;
  // Same substitution read on different source/target presentations.
  RingMap rebase(RingDesc source, RingDesc target, const std::string& name = "") const;

  std::string describe() const;

 private:
  std::string name_;
  RingDesc source_, target_;
  std::map<std::string, LaurentPoly> var_images_;
  std::optional<CoeffMap> coeff_map_;
};

/// Outcome of a single verification step.
struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

// (a) source defining relations map to zero in target normal form, and
// (b) every monomial of every generator image lies in the target ring.
CheckOutcome check_well_defined(const RingMap& f, int64_t bound);

// True iff f's reduction modulo the nilpotent coefficient ideal equals the
// reference (the identity substitution by default) on all source generators;
// the target is a free module over the coefficient algebra, so the
// nilpotent-reduction criterion applies.
CheckOutcome check_iso_nilpotent(const RingMap& f, const RingMap* reference = nullptr);

// Compose both paths (in application order: paths[0] first) and compare the
// images of the given elements in target normal form.
CheckOutcome diagram_commutes(const std::vector<const RingMap*>& path_a,
                              const std::vector<const RingMap*>& path_b,
                              const std::vector<LaurentPoly>& elements);

RingMap compose(const RingMap& g, const RingMap& f);
RingMap restrict_coefficients(const RingMap& f, const CoeffMap& pi);

}  // namespace defv

#endif

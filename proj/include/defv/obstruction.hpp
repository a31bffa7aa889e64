#ifndef DEFV_OBSTRUCTION_HPP
#define DEFV_OBSTRUCTION_HPP

#include <set>
#include <string>
#include <vector>

#include "defv/laurent.hpp"
#include "defv/monoid.hpp"

namespace defv {

/// Exponent-support analysis of a generic infinitesimal automorphism of the
/// curve: the eps-part of the twisted coordinate must be achievable from
/// both charts, so one-sided exponents carry forced-zero coefficients.
struct CurveConstraintReport {
  bool pass = false;
  std::set<int64_t> u_support, v_support;   // within the window
  std::set<int64_t> forced_zero;            // one-sided exponents
  bool a0_forced = false;                   // the exponent -p is U-only
  bool frobenius_fixed = false;             // (t + x*eps)^p = t^p symbolically
  bool unforced_in_ideal = false;           // two-sided exponents shift into (t^p, t^(p+1))
  std::string detail;
};

CurveConstraintReport derive_curve_constraints(int64_t p, int64_t window);

/// Containment analysis for the surface: the eps-parts of the twisted
/// coordinates land in explicit monomial-module intersections.
struct SurfaceConstraintReport {
  bool pass = false;
  bool frobenius_fixed = false;          // x^p, x^-p, y^p are fixed symbolically
  std::vector<Vec> y_basis;              // x^p y^2 R2 cap R0
  std::vector<Vec> z_basis;              // y^p k[x^-1] cap R0
  bool y_basis_in_ideal = false;         // y_basis inside (y, z) R0
  bool z_basis_in_ideal = false;         // z_basis inside z R0
  bool sigma_y_shape = false;            // inverse expansion reproduces -x^p y^2 f mod eps^2
  std::string detail;
};

SurfaceConstraintReport derive_surface_constraints(int64_t p, int64_t box_halfwidth);

/// One additive term of a lifted generator image: lam^exp times either the
/// exact constant one, an unknown that vanishes at the point, or a free
/// unknown (a fresh symbol after the point projection).
struct LiftTerm {
  enum class Tag { One, Vanishes, Free };
  int lam_exp = 0;
  Tag tag = Tag::Free;
  std::string symbol;  // name for Free terms (also labels Vanishes terms)
};

struct GenLift {
  std::string gen;            // generator name in the relation
  std::string base_monomial;  // maps to zero at the point; kept for the report
  std::vector<LiftTerm> terms;
};

/// Lift data for the obstruction computation. kernel_order is the least k
/// with pi(lam^k) = 0; terms with lam_exp >= nilpotency order are dropped.
struct LiftSpec {
  std::vector<GenLift> gens;
  int kernel_order = 0;
  int nilpotency = 0;  // lam^nilpotency = 0
};

/// The residue of the relation under the lifted generators after the point
/// projection, split into the part visible downstairs and the kernel part
/// (the obstruction proper).
struct Residue {
  Scalar relation_image;  // full projected relation image in symbols (x) k[lam]
  Scalar kernel_part;     // components of lam-degree >= kernel_order
  bool downstairs_consistent = false;  // relation_image = kernel_part exactly
  std::string to_string() const { return kernel_part.to_string(); }
};

// relation: polynomial in the generator names (nonnegative exponents), e.g.
// u^(p+1) - v^p or x*z - y^p. sanity: the relation must vanish on the
// unlifted base monomials (checked by the caller against the actual ring).
Residue obstruction_residue(const LaurentPoly& relation, const LiftSpec& lift);

/// Outcome of the final contradiction step of a scenario.
struct ContradictionReport {
  bool pass = false;
  std::string residue;       // printed kernel part
  bool residue_is_minus_lam_p = false;
  bool nonzero = false;
  std::string detail;
};

// Assembles the lift exactly as the proofs do and checks the residue equals
// -lam^p and is nonzero. kernel_order comes from the coefficient map.
ContradictionReport curve_contradiction(int64_t p, int kernel_order,
                                        const CurveConstraintReport& constraints);
ContradictionReport surface_contradiction(int64_t p, int kernel_order,
                                          const SurfaceConstraintReport& constraints);

}  // namespace defv

#endif

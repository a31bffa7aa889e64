#ifndef DEFV_FAMILIES_HPP
#define DEFV_FAMILIES_HPP

#include <string>
#include <vector>

#include "defv/gluing.hpp"

namespace defv {

// Mutation names accepted by the scenario runners.
inline const char* kMutFlipPsi43 = "flip-psi43-sign";
inline const char* kMutWrongChar = "wrong-char";
inline const char* kMutTrivialKernel = "trivial-kernel";
inline const char* kMutDropUnitFactor = "drop-unit-factor";

/// The glued curve family: charts k[t^p, t^(p+1)] and k[s^(2p+1), s^(2p+2)]
/// meeting along k[t, t^-1] with s = t^-1 applied eagerly, deformed over
/// k[lam]/(lam^(p+1)) by twisting the overlap identification.
struct CurveFamily {
  int64_t p = 0;
  uint32_t characteristic = 0;  // equals p except under the wrong-char control
  int eps_order = 2;
  TowerPtr lam_tower, eps_tower;
  CoeffMap pi;  // lam -> eps

  RingDesc chart_u;   // k[t^p, t^(p+1)][lam]
  RingDesc chart_v;   // k[t^-(2p+1), t^-(2p+2)][lam]
  RingDesc overlap;   // k[t, t^-1][lam]
  GluingDatum datum;  // two patches, one transition

  // The same rings over the eps algebra.
  RingDesc chart_u_eps, chart_v_eps, overlap_eps;

  static CurveFamily make(int64_t p, const std::string& mutation = "");
};

/// The glued surface family: the chart k[x,y,z]/(xz - y^p) and its four
/// smooth companions, deformed over k[lam]/(lam^(p+1)) by the transition
/// automorphisms on the pairwise overlaps.
struct SurfaceFamily {
  int64_t p = 0;
  TowerPtr lam_tower, eps_tower;
  CoeffMap pi;  // lam -> eps, with eps^p = 0

  std::vector<Vec> zeta;                 // images of the ten ambient ratios, index 1..9
  std::vector<MonomialAlgebra> charts;   // index 0..9 (0 = the singular chart)
  GluingDatum datum;                     // patches 0..4 over lam

  RingMap psi43;  // transition in the (4,3) direction as given; psi34 is its inverse

  RingDesc r0_quotient;      // k[x,y,z]/(xz - y^p) over lam
  RingDesc r0_quotient_eps;  // the same over eps
  RingMap phi;               // (x, y, z) -> (x, y+eps, z) on r0_quotient_eps

  // Localization witnesses for charts 5..9: (source chart index, inverted element).
  std::vector<std::pair<int, Vec>> localization_witnesses;

  static SurfaceFamily make(int64_t p, const std::string& mutation = "");
};

}  // namespace defv

#endif

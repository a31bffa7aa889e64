#ifndef DEFV_GLUING_HPP
#define DEFV_GLUING_HPP

#include <map>
#include <string>
#include <vector>

#include "defv/ringmap.hpp"

namespace defv {

/// A deformation presented purely by gluing data: patch rings, overlap rings
/// for each pair, transition automorphisms on the overlaps (ordered i < j),
/// and a common ring containing every triple overlap.
struct GluingDatum {
  std::vector<RingDesc> patches;
  std::map<std::pair<int, int>, RingDesc> overlaps;
  std::map<std::pair<int, int>, RingMap> transitions;
  RingDesc triple_overlap;

  const RingMap& transition(int i, int j) const;
  // The transition read on the triple-overlap ring.
  RingMap extend_to_triple(int i, int j) const;
};

// Every triple i < j < k: psi_jk o psi_ij = psi_ik on the triple overlap.
// Also checks each transition is well-defined and reduces to the identity.
struct CocycleReport {
  bool pass = true;
  std::vector<std::string> failures;
  int triples_checked = 0;
};
CocycleReport verify_cocycle(const GluingDatum& d, int64_t bound);

// Curve input: +-1 must be reachable from the chart exponents
// {p, p+1, -(2p+1), -(2p+2)} so that the two charts generate the overlap.
CheckOutcome verify_separated_inputs(int64_t p, int64_t bound);

// Restrict every transition (and ring tower) along pi.
GluingDatum restrict_gluing(const GluingDatum& d, const CoeffMap& pi);

// rho_j o (transition of d) = rho_i on each overlap, i.e. the rho_i glue to
// an isomorphism between d and the trivial deformation (whose transitions
// are identities).
CheckOutcome compare_with_trivial(const GluingDatum& d, const std::vector<RingMap>& rho,
                                  int64_t bound);

/// A pair of elements glued through a twist: valid when the twisted
/// restriction of the left element equals the restriction of the right one.
struct TwistPair {
  LaurentPoly left, right;
  const RingMap* twist;       // acts on the restricted left element
  const CoeffMap* restrict_l;  // both sides restrict to the A-level
  const CoeffMap* restrict_r;

  TwistPair add(const TwistPair& o) const;
  TwistPair mul(const TwistPair& o) const;
};

bool twist_pair_valid(const TwistPair& pr);

}  // namespace defv

#endif

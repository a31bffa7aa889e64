#ifndef DEFV_MONOID_HPP
#define DEFV_MONOID_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "defv/fp.hpp"

namespace defv {

using Vec = std::vector<int64_t>;

/// Finitely generated monomial subalgebra of a Laurent ring, modelled by its
/// exponent semigroup: generators in Z^d, a subset of which have their
/// negatives adjoined. The zero vector always belongs (the constant 1).
struct MonomialAlgebra {
  int rank = 0;
  std::vector<Vec> gens;
  std::vector<bool> invertible;  // aligned with gens

  static MonomialAlgebra make(int rank, std::vector<Vec> gens, std::vector<int> inv_indices = {});
  std::string describe(const std::vector<std::string>& var_names) const;
  bool operator==(const MonomialAlgebra& o) const {
    return rank == o.rank && gens == o.gens && invertible == o.invertible;
  }
};

/// Multiplicities certifying membership: query = sum mults[i] * gens[i],
/// with mults[i] >= 0 unless gens[i] is invertible.
struct MembershipWitness {
  std::vector<int64_t> mults;
  Vec recombine(const MonomialAlgebra& alg) const;
};

/// Result of a bounded membership search. `exact` records whether a negative
/// answer is a proof (lattice or cone separation, or cap-free exhaustion)
/// rather than a bound exhaustion.
struct MembershipResult {
  std::optional<MembershipWitness> witness;
  bool exact = true;
  bool found() const { return witness.has_value(); }
};

MembershipResult semigroup_member(const Vec& v, const MonomialAlgebra& alg, int64_t bound);

// Mutual generator membership within the bound.
bool algebra_equal(const MonomialAlgebra& a, const MonomialAlgebra& b, int64_t bound);
// Every generator of `sub` (and inverses of its invertible ones) in `super`.
bool algebra_subset(const MonomialAlgebra& sub, const MonomialAlgebra& super, int64_t bound);

// True iff loc equals alg with +-inverted adjoined. Pre: inverted in alg.
bool localization_check(const MonomialAlgebra& loc, const MonomialAlgebra& alg,
                        const Vec& inverted, int64_t bound);

struct Box {
  Vec lo, hi;  // inclusive per-coordinate interval
};

// All v in the box with v - shift in mod_alg and v in ring_alg, sorted
// lexicographically. Exact: box enumeration with exact membership.
std::vector<Vec> module_intersection_basis(const Vec& shift, const MonomialAlgebra& mod_alg,
                                           const MonomialAlgebra& ring_alg, const Box& box,
                                           int64_t bound);

/// Unit/pointed decomposition of the exponent semigroup. A smooth chart has a
/// free structure: pointed minimal generator count equals the pointed rank.
struct SemigroupStructure {
  int unit_rank = 0;
  std::vector<Vec> unit_basis;        // basis of the unit lattice
  std::vector<Vec> pointed_min_gens;  // representatives in the original lattice
  int pointed_rank = 0;
  bool is_free = false;
  bool exact = true;  // false if a bound was exhausted before stabilization
  std::string detail;
};

SemigroupStructure semigroup_structure(const MonomialAlgebra& alg, int64_t bound);

// Rank-1 only: { shift + direction * r : r in alg } within [window_lo, window_hi].
std::set<int64_t> achievable_exponents(const MonomialAlgebra& alg, int64_t shift, int direction,
                                       int64_t window_lo, int64_t window_hi);

// Exact rank-1 membership for semigroups with all generators of one sign
// (sieve up to the query; conductor-aware).
bool numerical_member(const std::vector<int64_t>& gens, int64_t v);
// Frobenius conductor g1*g2 - g1 - g2 + 1 for two coprime positive generators.
int64_t conductor(int64_t g1, int64_t g2);

}  // namespace defv

#endif

#include "defv/gluing.hpp"

#include <sstream>

namespace defv {

namespace {
void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}
}  // namespace

const RingMap& GluingDatum::transition(int i, int j) const {
  auto it = transitions.find({i, j});
  require(it != transitions.end(), "no transition for the pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
  return it->second;
}

RingMap GluingDatum::extend_to_triple(int i, int j) const {
  const RingMap& t = transition(i, j);
  return t.rebase(triple_overlap, triple_overlap,
                  t.name() + " on " + triple_overlap.name);
}

CocycleReport verify_cocycle(const GluingDatum& d, int64_t bound) {
  CocycleReport rep;
  int n = static_cast<int>(d.patches.size());
  // the overlap rings must embed in the common triple-overlap ring
  for (const auto& [pair, ring] : d.overlaps) {
    if (ring.algebra && d.triple_overlap.algebra) {
      if (!algebra_subset(*ring.algebra, *d.triple_overlap.algebra, bound)) {
        rep.pass = false;
        rep.failures.push_back("overlap " + ring.name + " does not embed in " +
                               d.triple_overlap.name);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (!d.transitions.count({i, j}) || !d.transitions.count({j, k}) ||
            !d.transitions.count({i, k}))
          continue;
        RingMap ij = d.extend_to_triple(i, j);
        RingMap jk = d.extend_to_triple(j, k);
        RingMap ik = d.extend_to_triple(i, k);
        RingMap lhs = jk.compose_after(ij);
        std::string witness;
        ++rep.triples_checked;
        if (!lhs.equals_on_generators(ik, &witness)) {
          rep.pass = false;
          std::ostringstream os;
          os << "cocycle fails on (" << i << "," << j << "," << k << "): " << witness;
          rep.failures.push_back(os.str());
        }
      }
  return rep;
}

CheckOutcome verify_separated_inputs(int64_t p, int64_t bound) {
  CheckOutcome out;
  auto alg = MonomialAlgebra::make(1, {{p}, {p + 1}, {-(2 * p + 1)}, {-(2 * p + 2)}});
  auto plus = semigroup_member({1}, alg, bound);
  auto minus = semigroup_member({-1}, alg, bound);
  if (!plus.found() || !minus.found()) {
    out.detail = "exponent 1 or -1 unreachable from {p, p+1, -(2p+1), -(2p+2)} within bound " +
                 std::to_string(bound);
    return out;
  }
  auto show = [&](const MembershipWitness& w) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < w.mults.size(); ++i) {
      if (w.mults[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << w.mults[i] << "*(" << alg.gens[i][0] << ")";
    }
    return os.str();
  };
  out.pass = true;
  out.detail = "1 = " + show(*plus.witness) + "; -1 = " + show(*minus.witness);
  return out;
}

GluingDatum restrict_gluing(const GluingDatum& d, const CoeffMap& pi) {
  GluingDatum r;
  for (const auto& patch : d.patches)
    r.patches.push_back(patch.with_tower(patch.tower->with_coeff(pi.target())));
  for (const auto& [pair, ring] : d.overlaps)
    r.overlaps.emplace(pair, ring.with_tower(ring.tower->with_coeff(pi.target())));
  for (const auto& [pair, t] : d.transitions)
    r.transitions.emplace(pair, t.restrict_coefficients(pi));
  r.triple_overlap =
      d.triple_overlap.with_tower(d.triple_overlap.tower->with_coeff(pi.target()));
  return r;
}

CheckOutcome compare_with_trivial(const GluingDatum& d, const std::vector<RingMap>& rho,
                                  int64_t bound) {
  (void)bound;
  CheckOutcome out;
  require(rho.size() == d.patches.size(), "one trivialization per patch required");
  for (const auto& [pair, t] : d.transitions) {
    const RingDesc& overlap = d.overlaps.at(pair);
    // read everything on the overlap ring
    RingMap t_ov = t.rebase(overlap, overlap);
    RingMap rho_i = rho[pair.first].rebase(overlap, overlap);
    RingMap rho_j = rho[pair.second].rebase(overlap, overlap);
    RingMap lhs = rho_j.compose_after(t_ov);
    std::string witness;
    if (!lhs.equals_on_generators(rho_i, &witness)) {
      out.detail = "overlap (" + std::to_string(pair.first) + "," +
                   std::to_string(pair.second) + "): rho_j o psi != rho_i: " + witness;
      return out;
    }
  }
  out.pass = true;
  out.detail = "the trivializations intertwine every transition with the identity";
  return out;
}

TwistPair TwistPair::add(const TwistPair& o) const {
  return TwistPair{left.add(o.left), right.add(o.right), twist, restrict_l, restrict_r};
}

TwistPair TwistPair::mul(const TwistPair& o) const {
  return TwistPair{left.mul(o.left), right.mul(o.right), twist, restrict_l, restrict_r};
}

bool twist_pair_valid(const TwistPair& pr) {
  const RingMap* sigma = pr.twist;
  TowerPtr a_tower = pr.left.tower()->with_coeff(pr.restrict_l->target());
  LaurentPoly left_a = pr.left.map_coeff(*pr.restrict_l, a_tower);
  TowerPtr a_tower_r = pr.right.tower()->with_coeff(pr.restrict_r->target());
  LaurentPoly right_a = pr.right.map_coeff(*pr.restrict_r, a_tower_r);
  LaurentPoly twisted = sigma ? sigma->apply(left_a) : left_a;
  return twisted == right_a;
}

}  // namespace defv

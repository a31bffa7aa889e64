#include "defv/obstruction.hpp"

#include <algorithm>
#include <sstream>

namespace defv {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kXY{"x", "y"};

Scalar minus_lam_p(const TowerPtr& tower, int64_t p) {
  uint32_t minus_one = tower->field().p() - 1;
  return Scalar::from_coeff(tower,
                            tower->coeff()->monomial(minus_one, static_cast<int>(p)));
}

// Keep only coefficient components of lam-degree >= order.
Scalar kernel_component(const Scalar& s, int order) {
  Scalar out(s.tower());
  for (const auto& [se, ce] : s.terms()) {
    std::vector<uint32_t> c = ce.coeffs();
    for (int i = 0; i < std::min<int>(order, static_cast<int>(c.size())); ++i) c[i] = 0;
    CoeffElem trimmed = CoeffElem::make_dense(ce.owner(), std::move(c));
    if (!trimmed.is_zero()) out = out.add(Scalar::term(s.tower(), se, trimmed));
  }
  return out;
}

// Least eps-valuation over every coefficient of the polynomial.
int min_coeff_valuation(const LaurentPoly& f) {
  int best = 1 << 20;
  for (const auto& [e, s] : f.terms())
    for (const auto& [se, ce] : s.terms())
      for (size_t i = 0; i < ce.coeffs().size(); ++i)
        if (ce.coeffs()[i] != 0) best = std::min<int>(best, static_cast<int>(i));
  return best;
}

}  // namespace

CurveConstraintReport derive_curve_constraints(int64_t p, int64_t window) {
  require(PrimeField::is_prime(static_cast<uint64_t>(p)), "p must be prime");
  require(window >= 4 * p + 4, "window too small: need at least 4p+4");
  CurveConstraintReport rep;
  auto u_alg = MonomialAlgebra::make(1, {{p}, {p + 1}});
  auto v_alg = MonomialAlgebra::make(1, {{2 * p + 1}, {2 * p + 2}});
  // eps-part exponents of the twisted coordinate, seen from each chart:
  // from U as t^(i-p) with i in {0} u <p,p+1>, from V as t^(2p+2-j) with
  // j in {0} u <2p+1,2p+2>
  rep.u_support = achievable_exponents(u_alg, -p, +1, -window, window);
  rep.v_support = achievable_exponents(v_alg, 2 * p + 2, -1, -window, window);

  for (int64_t e : rep.u_support)
    if (!rep.v_support.count(e)) rep.forced_zero.insert(e);
  for (int64_t e : rep.v_support)
    if (!rep.u_support.count(e)) rep.forced_zero.insert(e);

  rep.a0_forced = rep.u_support.count(-p) && !rep.v_support.count(-p);

  // the coefficients that may survive sit at i = e + p with e two-sided;
  // each such monomial must shift into the ideal (t^p, t^(p+1))
  rep.unforced_in_ideal = true;
  std::vector<int64_t> u_gens{p, p + 1};
  for (int64_t e : rep.u_support) {
    if (!rep.v_support.count(e)) continue;
    int64_t i = e + p;
    if (i == 0) {
      rep.unforced_in_ideal = false;  // would contradict a0 = 0
      continue;
    }
    bool in_ideal = numerical_member(u_gens, i - p) || numerical_member(u_gens, i - (p + 1));
    if (!in_ideal) rep.unforced_in_ideal = false;
  }

  // sigma(t^p) = t^p: (t + x*eps)^p = t^p with a symbolic eps-part
  auto eps = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), "eps", 2);
  auto tw = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)), {"x"}, eps,
                              static_cast<int>(2 * p + 2));
  auto perturbed = LaurentPoly::variable(tw, kT, "t")
                       .add(LaurentPoly::constant(
                           tw, kT,
                           Scalar::symbol(tw, "x").mul(Scalar::from_coeff(tw, eps->gen()))));
  rep.frobenius_fixed =
      perturbed.frobenius_power(static_cast<uint64_t>(p)) ==
      LaurentPoly::variable(tw, kT, "t", p);

  rep.pass = rep.a0_forced && rep.frobenius_fixed && rep.unforced_in_ideal;
  std::ostringstream os;
  os << "window [" << -window << "," << window << "]; exponent -" << p
     << (rep.a0_forced ? " is one-sided (U only): constant eps-coefficient forced to zero"
                       : " is NOT one-sided");
  rep.detail = os.str();
  return rep;
}

SurfaceConstraintReport derive_surface_constraints(int64_t p, int64_t box_halfwidth) {
  require(PrimeField::is_prime(static_cast<uint64_t>(p)), "p must be prime");
  require(box_halfwidth >= 2 * p, "box too small: need halfwidth >= 2p");
  SurfaceConstraintReport rep;
  int64_t B = box_halfwidth;
  int64_t bound = 4 * p + 8;
  auto s0 = MonomialAlgebra::make(2, {{1, 0}, {0, 1}, {-1, p}});
  auto r2 = MonomialAlgebra::make(2, {{-1, 0}, {-p, -1}});
  auto xinv = MonomialAlgebra::make(2, {{-1, 0}});

  // sigma fixes x^p, x^-p, y^p: p-th powers kill the eps-parts
  auto eps = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), "eps",
                                     static_cast<int>(p));
  auto tw = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)), {"f", "g"}, eps,
                              static_cast<int>(2 * p + 2));
  auto eps_s = Scalar::from_coeff(tw, eps->gen());
  auto x_inv_pert = LaurentPoly::variable(tw, kXY, "x", -1)
                        .add(LaurentPoly::constant(tw, kXY, Scalar::symbol(tw, "g").mul(eps_s)));
  auto y_inv_pert = LaurentPoly::variable(tw, kXY, "y", -1)
                        .add(LaurentPoly::monomial(tw, kXY, {p, 0},
                                                   Scalar::symbol(tw, "f").mul(eps_s)));
  bool fx = x_inv_pert.frobenius_power(static_cast<uint64_t>(p)) ==
            LaurentPoly::variable(tw, kXY, "x", -p);
  bool fy = y_inv_pert.frobenius_power(static_cast<uint64_t>(p)) ==
            LaurentPoly::variable(tw, kXY, "y", -p);
  rep.frobenius_fixed = fx && fy;

  // sigma(y) from inverting sigma(y^-1): the eps-linear part is -x^p y^2 f
  auto sigma_y = y_inv_pert.invert_unit();
  auto y_poly = LaurentPoly::variable(tw, kXY, "y");
  auto expected_linear = LaurentPoly::monomial(
      tw, kXY, {p, 2}, Scalar::symbol(tw, "f").mul(eps_s).neg());
  auto tail = sigma_y.sub(y_poly).sub(expected_linear);
  rep.sigma_y_shape = tail.is_zero() || min_coeff_valuation(tail) >= 2;

  Box box{{-B, -B}, {B, B}};
  rep.y_basis = module_intersection_basis({p, 2}, r2, s0, box, bound);
  rep.z_basis = module_intersection_basis({0, p}, xinv, s0, box, bound);
  for (const auto& v : rep.y_basis)
    for (int64_t c : v)
      require(c > -B && c < B, "box too small: intersection basis touches the boundary");
  for (const auto& v : rep.z_basis)
    for (int64_t c : v)
      require(c > -B && c < B, "box too small: intersection basis touches the boundary");

  rep.y_basis_in_ideal = !rep.y_basis.empty();
  for (const auto& v : rep.y_basis) {
    Vec vy{v[0], v[1] - 1};
    Vec vz{v[0] + 1, v[1] - p};
    if (!semigroup_member(vy, s0, bound).found() && !semigroup_member(vz, s0, bound).found())
      rep.y_basis_in_ideal = false;
  }
  rep.z_basis_in_ideal = !rep.z_basis.empty();
  for (const auto& v : rep.z_basis) {
    Vec vz{v[0] + 1, v[1] - p};
    if (!semigroup_member(vz, s0, bound).found()) rep.z_basis_in_ideal = false;
  }

  rep.pass = rep.frobenius_fixed && rep.sigma_y_shape && rep.y_basis_in_ideal &&
             rep.z_basis_in_ideal;
  std::ostringstream os;
  os << "box [-" << B << "," << B << "]^2; y-part basis has " << rep.y_basis.size()
     << " monomials inside (y,z); z-part basis has " << rep.z_basis.size()
     << " monomials inside zR0";
  rep.detail = os.str();
  return rep;
}

Residue obstruction_residue(const LaurentPoly& relation, const LiftSpec& lift) {
  require(lift.nilpotency >= 2, "nilpotency order must be at least 2");
  require(lift.kernel_order >= 1, "kernel order must be at least 1");
  // collect the free symbols in declaration order
  std::vector<std::string> symbols;
  for (const auto& g : lift.gens)
    for (const auto& t : g.terms)
      if (t.tag == LiftTerm::Tag::Free &&
          std::find(symbols.begin(), symbols.end(), t.symbol) == symbols.end())
        symbols.push_back(t.symbol);
  std::sort(symbols.begin(), symbols.end());

  require(!relation.tower()->has_coeff_algebra() && relation.tower()->symbols().empty(),
          "the relation must have plain prime-field coefficients");
  uint32_t q = relation.tower()->field().p();
  auto lam = CoeffAlgebra::truncated(PrimeField(q), "lam", lift.nilpotency);
  auto tower = ScalarTower::make(PrimeField(q), symbols, lam,
                                 static_cast<int>(2 * lift.nilpotency + 2));
  // rebuild the relation over the residue tower
  LaurentPoly relation_t(tower, relation.vars());
  for (const auto& [e, c] : relation.terms())
    relation_t = relation_t.add(LaurentPoly::monomial(
        tower, relation.vars(), e,
        Scalar::from_int(tower, c.constant_part().residue())));

  // projected images: base monomials and vanishing unknowns are already zero
  std::vector<std::string> no_vars;
  std::vector<LaurentPoly> images;
  for (const auto& v : relation.vars()) {
    const GenLift* gl = nullptr;
    for (const auto& g : lift.gens)
      if (g.gen == v) gl = &g;
    require(gl != nullptr, "no lift given for generator '" + v + "'");
    LaurentPoly img = LaurentPoly::zero(tower, no_vars);
    for (const auto& t : gl->terms) {
      if (t.lam_exp >= lift.nilpotency) continue;  // the term is zero
      Scalar lam_pow = Scalar::from_coeff(tower, lam->monomial(1, t.lam_exp));
      switch (t.tag) {
        case LiftTerm::Tag::One:
          img = img.add(LaurentPoly::constant(tower, no_vars, lam_pow));
          break;
        case LiftTerm::Tag::Vanishes:
          break;  // maps to zero at the point
        case LiftTerm::Tag::Free:
          img = img.add(LaurentPoly::constant(
              tower, no_vars, lam_pow.mul(Scalar::symbol(tower, t.symbol))));
          break;
      }
    }
    images.push_back(std::move(img));
  }

  LaurentPoly substituted = relation_t.substitute(images);
  Residue r;
  r.relation_image = substituted.constant_scalar();
  r.kernel_part = kernel_component(r.relation_image, lift.kernel_order);
  r.downstairs_consistent = r.relation_image == r.kernel_part;
  return r;
}

namespace {

ContradictionReport finish_contradiction(int64_t p, const Residue& res, const TowerPtr& tower,
                                         int kernel_order) {
  ContradictionReport rep;
  rep.residue = res.kernel_part.to_string();
  rep.residue_is_minus_lam_p = res.kernel_part == minus_lam_p(tower, p);
  rep.nonzero = !res.kernel_part.is_zero();
  rep.pass = res.downstairs_consistent && rep.residue_is_minus_lam_p && rep.nonzero;
  std::ostringstream os;
  if (rep.pass) {
    os << "relation image after the point projection lies in the kernel (lam^" << kernel_order
       << ") and equals " << rep.residue << ", nonzero mod lam^" << (p + 1);
  } else if (!rep.nonzero) {
    os << "no obstruction detected: kernel part of the relation image is zero";
    if (!res.downstairs_consistent)
      os << " (relation already fails below the kernel: " << res.relation_image.to_string()
         << ")";
  } else {
    os << "unexpected residue " << rep.residue;
  }
  rep.detail = os.str();
  return rep;
}

}  // namespace

ContradictionReport curve_contradiction(int64_t p, int kernel_order,
                                        const CurveConstraintReport& constraints) {
  ContradictionReport rep;
  if (!constraints.pass) {
    rep.detail = "constraint derivation did not pass; lift tags unavailable";
    return rep;
  }
  // sanity: the chart relation vanishes on the unlifted generators
  auto plain = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)));
  std::vector<std::string> uv{"u", "v"};
  auto relation = LaurentPoly::variable(plain, uv, "u", p + 1)
                      .sub(LaurentPoly::variable(plain, uv, "v", p));
  auto tp = LaurentPoly::variable(plain, kT, "t", p);
  auto tp1 = LaurentPoly::variable(plain, kT, "t", p + 1);
  require(relation.substitute({tp, tp1}).is_zero(), "relation fails at lam = 0");

  LiftSpec lift;
  lift.nilpotency = static_cast<int>(p) + 1;
  lift.kernel_order = kernel_order;
  // t^p picks up only a kernel term; t^(p+1) picks up the comparison shift
  // 1 (x) lam, a point-vanishing unknown (its eps-part lies in the maximal
  // ideal by the support analysis), and a kernel term.
  lift.gens.push_back(GenLift{"u", "t^" + std::to_string(p),
                              {LiftTerm{kernel_order, LiftTerm::Tag::Free, "x1"}}});
  lift.gens.push_back(GenLift{"v", "t^" + std::to_string(p + 1),
                              {LiftTerm{1, LiftTerm::Tag::Vanishes, "m"},
                               LiftTerm{1, LiftTerm::Tag::One, ""},
                               LiftTerm{kernel_order, LiftTerm::Tag::Free, "y1"}}});
  Residue res = obstruction_residue(relation, lift);
  return finish_contradiction(p, res, res.kernel_part.tower(), kernel_order);
}

ContradictionReport surface_contradiction(int64_t p, int kernel_order,
                                          const SurfaceConstraintReport& constraints) {
  ContradictionReport rep;
  if (!constraints.pass) {
    rep.detail = "constraint derivation did not pass; lift tags unavailable";
    return rep;
  }
  auto plain = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)));
  std::vector<std::string> xyz{"x", "y", "z"};
  auto relation =
      LaurentPoly::monomial(plain, xyz, {1, 0, 1}, Scalar::from_int(plain, 1))
          .sub(LaurentPoly::variable(plain, xyz, "y", p));
  RewriteRule rule = RewriteRule::make(xyz, "y", p, {1, 0, 1});
  require(relation.normal_form(rule).is_zero(), "relation fails at lam = 0");

  LiftSpec lift;
  lift.nilpotency = static_cast<int>(p) + 1;
  lift.kernel_order = kernel_order;
  lift.gens.push_back(GenLift{"x", "x", {LiftTerm{1, LiftTerm::Tag::Free, "m1"}}});
  lift.gens.push_back(GenLift{"y", "y",
                              {LiftTerm{1, LiftTerm::Tag::One, ""},
                               LiftTerm{1, LiftTerm::Tag::Vanishes, "n1"},
                               LiftTerm{2, LiftTerm::Tag::Free, "n2"},
                               LiftTerm{static_cast<int>(p), LiftTerm::Tag::Free, "n3"}}});
  lift.gens.push_back(GenLift{"z", "z",
                              {LiftTerm{1, LiftTerm::Tag::Vanishes, "l"},
                               LiftTerm{static_cast<int>(p), LiftTerm::Tag::Free, "l1"}}});
  Residue res = obstruction_residue(relation, lift);
  return finish_contradiction(p, res, res.kernel_part.tower(), kernel_order);
}

}  // namespace defv

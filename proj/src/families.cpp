#include "defv/families.hpp"

#include <algorithm>

namespace defv {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

}  // namespace

CurveFamily CurveFamily::make(int64_t p, const std::string& mutation) {
  require(PrimeField::is_prime(static_cast<uint64_t>(p)), "p must be prime");
  CurveFamily f;
  f.p = p;
  f.characteristic = static_cast<uint32_t>(p);
  f.eps_order = 2;
  int64_t twist_exp = -p;  // the eps-part of the overlap twist, in the t chart

  if (mutation == kMutWrongChar) {
    // evaluate the same formulas where the binomial coefficients of
    // (t + lam t^-p)^(p+1) are nonzero, i.e. over a large characteristic
    f.characteristic = 101;
  } else if (mutation == kMutTrivialKernel) {
    f.eps_order = static_cast<int>(p) + 1;
  } else if (mutation == kMutDropUnitFactor) {
    // twist term loses its monomial unit factor: s^-1 + lam s^(p+1)
    twist_exp = -(p + 1);
  } else if (mutation == kMutFlipPsi43) {
    throw error("mutation '" + mutation + "' applies to the surface scenario");
  } else {
    require(mutation.empty(), "unknown mutation '" + mutation + "'");
  }

  PrimeField k(f.characteristic);
  auto lam = CoeffAlgebra::truncated(k, "lam", static_cast<int>(p) + 1);
  auto eps = CoeffAlgebra::truncated(k, "eps", f.eps_order);
  f.lam_tower = ScalarTower::make(k, {}, lam);
  f.eps_tower = ScalarTower::make(k, {}, eps);
  f.pi = CoeffMap::var_image(lam, eps, eps->gen());

  auto u_alg = MonomialAlgebra::make(1, {{p}, {p + 1}});
  auto v_alg = MonomialAlgebra::make(1, {{-(2 * p + 1)}, {-(2 * p + 2)}});
  f.chart_u = RingDesc::subalgebra("R[lam]", f.lam_tower, kT, u_alg);
  f.chart_v = RingDesc::subalgebra("S[lam]", f.lam_tower, kT, v_alg);
  f.overlap = RingDesc::laurent("T[lam]", f.lam_tower, kT);
  f.chart_u_eps = RingDesc::subalgebra("R[eps]", f.eps_tower, kT, u_alg);
  f.chart_v_eps = RingDesc::subalgebra("S[eps]", f.eps_tower, kT, v_alg);
  f.overlap_eps = RingDesc::laurent("T[eps]", f.eps_tower, kT);

  auto t_img = LaurentPoly::variable(f.lam_tower, kT, "t")
                   .add(LaurentPoly::monomial(f.lam_tower, kT, {twist_exp},
                                              Scalar::from_coeff(f.lam_tower, lam->gen())));
  RingMap tau = RingMap::substitution("tau", f.overlap, f.overlap, {{"t", t_img}},
                                      CoeffMap::identity(lam));

  f.datum.patches = {f.chart_u, f.chart_v};
  f.datum.overlaps.emplace(std::make_pair(0, 1), f.overlap);
  f.datum.transitions.emplace(std::make_pair(0, 1), tau);
  f.datum.triple_overlap = f.overlap;
  return f;
}

SurfaceFamily SurfaceFamily::make(int64_t p, const std::string& mutation) {
  require(PrimeField::is_prime(static_cast<uint64_t>(p)), "p must be prime");
  SurfaceFamily f;
  f.p = p;
  int flip = 1;
  if (mutation == kMutFlipPsi43) {
    flip = -1;  // (1 - lam/y)^p becomes (1 + lam/y)^p
  } else if (!mutation.empty()) {
    throw error("mutation '" + mutation + "' applies to the curve scenario");
  }

  PrimeField k(static_cast<uint32_t>(p));
  auto lam = CoeffAlgebra::truncated(k, "lam", static_cast<int>(p) + 1);
  auto eps = CoeffAlgebra::truncated(k, "eps", static_cast<int>(p));
  f.lam_tower = ScalarTower::make(k, {}, lam);
  f.eps_tower = ScalarTower::make(k, {}, eps);
  f.pi = CoeffMap::var_image(lam, eps, eps->gen());

  // ambient ratio images in the exponent lattice: x = (1,0), y = (0,1),
  // z = y^p/x = (-1,p)
  f.zeta.assign(10, Vec{});
  f.zeta[1] = {1, 0};
  f.zeta[2] = {p * p + p + 1, p + 1};
  f.zeta[3] = {-1, p + 1};
  f.zeta[4] = {-1, p};
  f.zeta[5] = {0, 1};
  f.zeta[6] = {p + 1, 1};
  f.zeta[7] = {p * p + 1, p};
  f.zeta[8] = {p * p + p, p + 1};
  f.zeta[9] = {0, p + 1};

  f.charts.assign(10, MonomialAlgebra{});
  f.charts[0] = MonomialAlgebra::make(2, {{1, 0}, {0, 1}, {-1, p}});
  f.charts[1] = MonomialAlgebra::make(2, {{-1, 0}, {p, 1}});
  f.charts[2] = MonomialAlgebra::make(2, {{-1, 0}, {-p, -1}});
  f.charts[3] = MonomialAlgebra::make(2, {{1, 0}, {0, -1}});
  f.charts[4] = MonomialAlgebra::make(2, {{1, -p}, {0, 1}});
  f.charts[5] = MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {0, 1});
  f.charts[6] = MonomialAlgebra::make(2, {{p, 1}, {-p, -1}, {-1, 0}});
  f.charts[7] = f.charts[6];
  f.charts[8] = MonomialAlgebra::make(2, {{1, 0}, {-1, 0}, {0, -1}});
  f.charts[9] = f.charts[8];

  f.localization_witnesses = {
      {3, {1, -1}},  // chart 5 from chart 3 at x*y^-1
      {1, {p, 1}},   // chart 6 from chart 1 at x^p*y
      {1, {p, 1}},   // chart 7 likewise
      {3, {1, 0}},   // chart 8 from chart 3 at x
      {3, {1, 0}},   // chart 9 likewise
  };

  auto desc = [&](const std::string& name, const MonomialAlgebra& alg) {
    return RingDesc::subalgebra(name, f.lam_tower, kXY, alg);
  };
  RingDesc s0 = desc("R0[lam]", f.charts[0]);
  RingDesc r1 = desc("R1[lam]", f.charts[1]);
  RingDesc r2 = desc("R2[lam]", f.charts[2]);
  RingDesc r3 = desc("R3[lam]", f.charts[3]);
  RingDesc r4 = desc("R4[lam]", f.charts[4]);

  auto full = MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {0, 1});
  RingDesc r01 = desc("R01[lam]", MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {0}));
  RingDesc r12 = desc("R12[lam]", f.charts[6]);
  RingDesc r23 = desc("R23[lam]", f.charts[8]);
  RingDesc r34 = desc("R34[lam]", MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {1}));
  RingDesc r04 = desc("R04[lam]", MonomialAlgebra::make(2, {{1, -p}, {0, 1}}, {0}));
  RingDesc r02 = desc("R02[lam]", full);

  auto x = LaurentPoly::variable(f.lam_tower, kXY, "x");
  auto y = LaurentPoly::variable(f.lam_tower, kXY, "y");
  auto lam_c = LaurentPoly::constant(f.lam_tower, kXY, Scalar::from_coeff(f.lam_tower, lam->gen()));
  CoeffMap id_cm = CoeffMap::identity(lam);

  // (1 +- lam/y)^p as an exact Laurent polynomial
  auto twist_pos =
      y.add(lam_c).frobenius_power(static_cast<uint64_t>(p))
          .mul(y.invert_unit().frobenius_power(static_cast<uint64_t>(p)));
  auto y_minus = flip > 0 ? y.sub(lam_c) : y.add(lam_c);
  auto twist_43 = y_minus.frobenius_power(static_cast<uint64_t>(p))
                      .mul(y.invert_unit().frobenius_power(static_cast<uint64_t>(p)));

  auto shift_map = [&](const std::string& name, const RingDesc& ring) {
    return RingMap::substitution(name, ring, ring, {{"x", x}, {"y", y.add(lam_c)}}, id_cm);
  };
  auto twist_map = [&](const std::string& name, const RingDesc& ring, const LaurentPoly& tw,
                       bool shift_y) {
    return RingMap::substitution(
        name, ring, ring, {{"x", x.mul(tw)}, {"y", shift_y ? y.add(lam_c) : y}}, id_cm);
  };

  f.psi43 = twist_map("psi43", r34, twist_43, false);
  // the (3,4)-direction transition is the inverse: invert the unit twist
  RingMap psi34 = twist_map("psi34", r34, twist_43.invert_unit(), false);

  f.datum.patches = {s0, r1, r2, r3, r4};
  f.datum.overlaps.emplace(std::make_pair(0, 1), r01);
  f.datum.overlaps.emplace(std::make_pair(0, 2), r02);
  f.datum.overlaps.emplace(std::make_pair(0, 3), desc("R03[lam]", full));
  f.datum.overlaps.emplace(std::make_pair(0, 4), r04);
  f.datum.overlaps.emplace(std::make_pair(1, 2), r12);
  f.datum.overlaps.emplace(std::make_pair(1, 3), desc("R13[lam]", full));
  f.datum.overlaps.emplace(std::make_pair(1, 4), desc("R14[lam]", full));
  f.datum.overlaps.emplace(std::make_pair(2, 3), r23);
  f.datum.overlaps.emplace(std::make_pair(2, 4), desc("R24[lam]", full));
  f.datum.overlaps.emplace(std::make_pair(3, 4), r34);
  f.datum.triple_overlap = desc("R02[lam]", full);

  f.datum.transitions.emplace(std::make_pair(0, 1), shift_map("psi01", r01));
  f.datum.transitions.emplace(std::make_pair(0, 2), shift_map("psi02", r02));
  f.datum.transitions.emplace(std::make_pair(0, 3),
                              shift_map("psi03", f.datum.overlaps.at({0, 3})));
  f.datum.transitions.emplace(std::make_pair(0, 4), twist_map("psi04", r04, twist_pos, true));
  f.datum.transitions.emplace(std::make_pair(1, 2), RingMap::identity(r12));
  f.datum.transitions.emplace(std::make_pair(1, 3),
                              RingMap::identity(f.datum.overlaps.at({1, 3})));
  f.datum.transitions.emplace(
      std::make_pair(1, 4),
      twist_map("psi14", f.datum.overlaps.at({1, 4}), twist_pos, false));
  f.datum.transitions.emplace(std::make_pair(2, 3), RingMap::identity(r23));
  f.datum.transitions.emplace(
      std::make_pair(2, 4),
      twist_map("psi24", f.datum.overlaps.at({2, 4}), twist_pos, false));
  f.datum.transitions.emplace(std::make_pair(3, 4), psi34);

  // the singular chart in its quotient presentation, with phi over eps
  RewriteRule rule = RewriteRule::make(kXYZ, "y", p, {1, 0, 1});
  f.r0_quotient = RingDesc::quotient("R0[lam]", f.lam_tower, kXYZ, rule);
  f.r0_quotient_eps = RingDesc::quotient("R0[eps]", f.eps_tower, kXYZ, rule);
  auto xe = LaurentPoly::variable(f.eps_tower, kXYZ, "x");
  auto ye = LaurentPoly::variable(f.eps_tower, kXYZ, "y");
  auto ze = LaurentPoly::variable(f.eps_tower, kXYZ, "z");
  auto eps_c = LaurentPoly::constant(f.eps_tower, kXYZ, Scalar::from_coeff(f.eps_tower, eps->gen()));
  f.phi = RingMap::substitution("phi", f.r0_quotient_eps, f.r0_quotient_eps,
                                {{"x", xe}, {"y", ye.add(eps_c)}, {"z", ze}},
                                CoeffMap::identity(eps));
  return f;
}

}  // namespace defv

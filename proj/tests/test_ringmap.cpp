#include <random>

#include "defv/ringmap.hpp"
#include "doctest.h"

using namespace defv;

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

struct CurveRings {
  TowerPtr eps_tower;
  RingDesc R;  // k[t^p, t^(p+1)][eps]
  RingDesc T;  // k[t, t^-1][eps]

  explicit CurveRings(int64_t p, uint32_t characteristic = 0) {
    uint32_t q = characteristic ? characteristic : static_cast<uint32_t>(p);
    auto eps = CoeffAlgebra::truncated(PrimeField(q), "eps", 2);
    eps_tower = ScalarTower::make(PrimeField(q), {}, eps);
    R = RingDesc::subalgebra("R[eps]", eps_tower, kT,
                             MonomialAlgebra::make(1, {{p}, {p + 1}}));
    T = RingDesc::laurent("T[eps]", eps_tower, kT);
  }

  // beta: t -> t + eps*t^-p on the Laurent overlap
  RingMap beta_on(const RingDesc& ring, int64_t p) const {
    auto img = LaurentPoly::variable(eps_tower, kT, "t")
                   .add(LaurentPoly::monomial(
                       eps_tower, kT, {-p},
                       Scalar::from_coeff(eps_tower, eps_tower->coeff()->gen())));
    return RingMap::substitution("beta", ring, ring, {{"t", img}},
                                 CoeffMap::identity(eps_tower->coeff()));
  }
};

}  // namespace

TEST_CASE("beta stabilizes k[t^p,t^(p+1),eps] exactly in characteristic p") {
  for (int64_t p : {2, 3, 5, 7}) {
    CurveRings rings(p);
    RingMap beta_R = rings.beta_on(rings.R, p);
    auto wd = check_well_defined(beta_R, 4 * p + 8);
    CHECK(wd.pass);

    // generator images: t^p -> t^p and t^(p+1) -> t^(p+1) + eps
    auto tp = LaurentPoly::variable(rings.eps_tower, kT, "t", p);
    auto tp1 = LaurentPoly::variable(rings.eps_tower, kT, "t", p + 1);
    CHECK(beta_R.apply(tp) == tp);
    auto eps_const = LaurentPoly::constant(
        rings.T.tower, kT, Scalar::from_coeff(rings.T.tower, rings.T.tower->coeff()->gen()));
    CHECK(beta_R.apply(tp1) == tp1.add(eps_const));
  }
}

TEST_CASE("the characteristic assumption is essential for beta") {
  // same formulas over F_101 (= integer binomial coefficients at this size)
  for (int64_t p : {2, 3, 5}) {
    CurveRings rings(p, 101);
    RingMap beta_R = rings.beta_on(rings.R, p);
    auto wd = check_well_defined(beta_R, 4 * p + 8);
    CHECK_FALSE(wd.pass);
    // the offending monomial is t^-1 from p*t^(p-1)*eps*t^-p
    CHECK(wd.detail.find("t^-1") != std::string::npos);
  }
}

TEST_CASE("a shifted perturbation fails membership on the gap exponent") {
  // t -> t + eps t^-1 on k[t^2,t^3,eps], p=2: image of t^3 contains eps*t^1
  CurveRings rings(2);
  auto img = LaurentPoly::variable(rings.eps_tower, kT, "t")
                 .add(LaurentPoly::monomial(
                     rings.eps_tower, kT, {-1},
                     Scalar::from_coeff(rings.eps_tower, rings.eps_tower->coeff()->gen())));
  RingMap bad = RingMap::substitution("bad", rings.R, rings.R, {{"t", img}},
                                      CoeffMap::identity(rings.eps_tower->coeff()));
  auto wd = check_well_defined(bad, 16);
  CHECK_FALSE(wd.pass);
  CHECK(wd.detail.find("t") != std::string::npos);
}

TEST_CASE("phi is well-defined on the quotient chart for every tested p") {
  for (int64_t p : {2, 3, 5}) {
    auto eps = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), "eps",
                                       static_cast<int>(p));
    auto tw = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)), {}, eps);
    RingDesc r0 = RingDesc::quotient("R0[eps]", tw, kXYZ,
                                     RewriteRule::make(kXYZ, "y", p, {1, 0, 1}));
    auto y_img = LaurentPoly::variable(tw, kXYZ, "y")
                     .add(LaurentPoly::constant(tw, kXYZ, Scalar::from_coeff(tw, eps->gen())));
    RingMap phi = RingMap::substitution(
        "phi", r0, r0,
        {{"x", LaurentPoly::variable(tw, kXYZ, "x")},
         {"y", y_img},
         {"z", LaurentPoly::variable(tw, kXYZ, "z")}},
        CoeffMap::identity(eps));
    auto wd = check_well_defined(phi, 4 * p + 8);
    CHECK(wd.pass);
  }
}

TEST_CASE("composition: id is neutral and psi14 after psi01 is psi04") {
  int64_t p = 2;
  auto lam = CoeffAlgebra::truncated(PrimeField(2), "lam", static_cast<int>(p) + 1);
  auto tw = ScalarTower::make(PrimeField(2), {}, lam);
  RingDesc r02 = RingDesc::subalgebra("R02[lam]", tw, kXY,
                                      MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {0, 1}));
  auto x = LaurentPoly::variable(tw, kXY, "x");
  auto y = LaurentPoly::variable(tw, kXY, "y");
  auto lam_c = LaurentPoly::constant(tw, kXY, Scalar::from_coeff(tw, lam->gen()));
  CoeffMap id_cm = CoeffMap::identity(lam);

  RingMap psi01 = RingMap::substitution("psi01", r02, r02, {{"x", x}, {"y", y.add(lam_c)}}, id_cm);
  // x -> x*(1 + lam/y)^p = x*y^-p*(y+lam)^p
  auto twist = y.add(lam_c).frobenius_power(p).mul(y.invert_unit().frobenius_power(p));
  RingMap psi14 = RingMap::substitution("psi14", r02, r02, {{"x", x.mul(twist)}, {"y", y}}, id_cm);
  RingMap psi04 =
      RingMap::substitution("psi04", r02, r02, {{"x", x.mul(twist)}, {"y", y.add(lam_c)}}, id_cm);

  RingMap composed = compose(psi14, psi01);
  std::string witness;
  CHECK(composed.equals_on_generators(psi04, &witness));
  CHECK(witness.empty());

  RingMap ident = RingMap::identity(r02);
  CHECK(compose(ident, psi01).equals_on_generators(psi01));
  CHECK(compose(psi01, ident).equals_on_generators(psi01));

  // x -> x(1 + lam^2 y^-2) both ways for p = 2
  auto expect_x = x.add(x.mul(LaurentPoly::monomial(
      tw, kXY, {0, -2}, Scalar::from_coeff(tw, lam->monomial(1, 2)))));
  CHECK(composed.apply(x) == expect_x);
}

TEST_CASE("composition is associative on random transition triples") {
  std::mt19937_64 rng(5150);
  for (int64_t p : {2, 3}) {
    auto lam = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), "lam",
                                       static_cast<int>(p) + 1);
    auto tw = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)), {}, lam);
    RingDesc r02 = RingDesc::subalgebra("R02[lam]", tw, kXY,
                                        MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {0, 1}));
    auto x = LaurentPoly::variable(tw, kXY, "x");
    auto y = LaurentPoly::variable(tw, kXY, "y");
    auto lam_c = LaurentPoly::constant(tw, kXY, Scalar::from_coeff(tw, lam->gen()));
    CoeffMap id_cm = CoeffMap::identity(lam);
    auto twist = y.add(lam_c).frobenius_power(p).mul(y.invert_unit().frobenius_power(p));
    std::vector<RingMap> maps{
        RingMap::identity(r02),
        RingMap::substitution("a", r02, r02, {{"x", x}, {"y", y.add(lam_c)}}, id_cm),
        RingMap::substitution("b", r02, r02, {{"x", x.mul(twist)}, {"y", y}}, id_cm),
        RingMap::substitution("c", r02, r02, {{"x", x.mul(twist)}, {"y", y.add(lam_c)}}, id_cm)};
    std::uniform_int_distribution<size_t> pick(0, maps.size() - 1);
    for (int i = 0; i < 25; ++i) {
      const RingMap& f = maps[pick(rng)];
      const RingMap& g = maps[pick(rng)];
      const RingMap& h = maps[pick(rng)];
      RingMap lhs = compose(compose(h, g), f);
      RingMap rhs = compose(h, compose(g, f));
      CHECK(lhs.equals_on_generators(rhs));
    }
  }
}

TEST_CASE("coefficient restriction matches the worked examples") {
  int64_t p = 2;
  auto lam = CoeffAlgebra::truncated(PrimeField(2), "lam", 3);
  auto eps = CoeffAlgebra::truncated(PrimeField(2), "eps", 2);
  CoeffMap pi = CoeffMap::var_image(lam, eps, eps->gen());
  auto tw = ScalarTower::make(PrimeField(2), {}, lam);

  RingDesc t_ring = RingDesc::laurent("T[lam]", tw, kT);
  auto tvar = LaurentPoly::variable(tw, kT, "t");
  auto tau_img = tvar.add(LaurentPoly::monomial(
      tw, kT, {-p}, Scalar::from_coeff(tw, lam->gen())));
  RingMap tau = RingMap::substitution("tau", t_ring, t_ring, {{"t", tau_img}},
                                      CoeffMap::identity(lam));
  RingMap tau_A = restrict_coefficients(tau, pi);
  // t -> t + eps t^-p after restriction
  auto tw_eps = tw->with_coeff(eps);
  auto expect = LaurentPoly::variable(tw_eps, kT, "t")
                    .add(LaurentPoly::monomial(tw_eps, kT, {-p},
                                               Scalar::from_coeff(tw_eps, eps->gen())));
  CHECK(tau_A.var_images().at("t") == expect);

  // restriction along the identity changes nothing
  RingMap same = restrict_coefficients(tau, CoeffMap::identity(lam));
  CHECK(same.var_images().at("t") == tau_img);

  // psi43 (x) A becomes the identity: x(1 - lam/y)^p -> x when eps^p = 0
  auto eps_p = CoeffAlgebra::truncated(PrimeField(2), "eps", static_cast<int>(p));
  CoeffMap pi_p = CoeffMap::var_image(lam, eps_p, eps_p->gen());
  auto twl = ScalarTower::make(PrimeField(2), {}, lam);
  RingDesc r43 = RingDesc::subalgebra("R43[lam]", twl, kXY,
                                      MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {1}));
  auto x = LaurentPoly::variable(twl, kXY, "x");
  auto y = LaurentPoly::variable(twl, kXY, "y");
  auto lam_c = LaurentPoly::constant(twl, kXY, Scalar::from_coeff(twl, lam->gen()));
  auto twist = y.sub(lam_c).frobenius_power(p).mul(y.invert_unit().frobenius_power(p));
  RingMap psi43 = RingMap::substitution("psi43", r43, r43, {{"x", x.mul(twist)}, {"y", y}},
                                        CoeffMap::identity(lam));
  RingMap psi43_A = restrict_coefficients(psi43, pi_p);
  RingMap id_A = RingMap::identity(psi43_A.source());
  CHECK(psi43_A.equals_on_generators(id_A));
}

TEST_CASE("restriction commutes with composition on the transition maps") {
  for (int64_t p : {2, 3}) {
    auto lam = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), "lam",
                                       static_cast<int>(p) + 1);
    auto eps = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), "eps",
                                       static_cast<int>(p));
    CoeffMap pi = CoeffMap::var_image(lam, eps, eps->gen());
    auto tw = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)), {}, lam);
    RingDesc r02 = RingDesc::subalgebra("R02[lam]", tw, kXY,
                                        MonomialAlgebra::make(2, {{1, 0}, {0, 1}}, {0, 1}));
    auto x = LaurentPoly::variable(tw, kXY, "x");
    auto y = LaurentPoly::variable(tw, kXY, "y");
    auto lam_c = LaurentPoly::constant(tw, kXY, Scalar::from_coeff(tw, lam->gen()));
    CoeffMap id_cm = CoeffMap::identity(lam);
    auto twist = y.add(lam_c).frobenius_power(p).mul(y.invert_unit().frobenius_power(p));
    RingMap f = RingMap::substitution("f", r02, r02, {{"x", x}, {"y", y.add(lam_c)}}, id_cm);
    RingMap g = RingMap::substitution("g", r02, r02, {{"x", x.mul(twist)}, {"y", y}}, id_cm);
    RingMap lhs = restrict_coefficients(compose(g, f), pi);
    RingMap rhs = compose(restrict_coefficients(g, pi), restrict_coefficients(f, pi));
    CHECK(lhs.equals_on_generators(rhs));
  }
}

TEST_CASE("iso detection by nilpotent reduction") {
  CurveRings rings(2);
  RingMap beta_R = rings.beta_on(rings.R, 2);
  CHECK(check_iso_nilpotent(beta_R).pass);

  // the overlap transition reduces to the reference identification
  auto lam = CoeffAlgebra::truncated(PrimeField(2), "lam", 3);
  auto tw = ScalarTower::make(PrimeField(2), {}, lam);
  RingDesc t_ring = RingDesc::laurent("T[lam]", tw, kT);
  auto tau_img = LaurentPoly::variable(tw, kT, "t").add(LaurentPoly::monomial(
      tw, kT, {-2}, Scalar::from_coeff(tw, lam->gen())));
  RingMap tau = RingMap::substitution("tau", t_ring, t_ring, {{"t", tau_img}},
                                      CoeffMap::identity(lam));
  CHECK(check_iso_nilpotent(tau).pass);

  // a non-nilpotent perturbation is rejected
  auto bad_img = LaurentPoly::variable(tw, kT, "t")
                     .add(LaurentPoly::variable(tw, kT, "t", 2));
  RingMap bad = RingMap::substitution("bad", t_ring, t_ring, {{"t", bad_img}},
                                      CoeffMap::identity(lam));
  auto res = check_iso_nilpotent(bad);
  CHECK_FALSE(res.pass);
  CHECK(res.detail.find("t") != std::string::npos);
}

TEST_CASE("diagram commutativity on the curve squares") {
  int64_t p = 2;
  CurveRings rings(p);
  RingMap beta_T = rings.beta_on(rings.T, p);
  RingMap beta_R = rings.beta_on(rings.R, p);
  RingMap incl = RingMap::inclusion("incl", rings.R, rings.T);

  // bottom-left square: incl o alpha = beta o incl on the generators
  auto tp = LaurentPoly::variable(rings.eps_tower, kT, "t", p);
  auto tp1 = LaurentPoly::variable(rings.eps_tower, kT, "t", p + 1);
  auto sq = diagram_commutes({&beta_R, &incl}, {&incl, &beta_T}, {tp, tp1});
  CHECK(sq.pass);

  // identity paths
  RingMap id_T = RingMap::identity(rings.T);
  CHECK(diagram_commutes({&id_T}, {&id_T}, {tp}).pass);

  // a genuinely failing square is reported with a witness element
  RingMap id_R = RingMap::identity(rings.R);
  auto bad = diagram_commutes({&beta_R, &incl}, {&incl, &id_T}, {tp1});
  CHECK_FALSE(bad.pass);
}

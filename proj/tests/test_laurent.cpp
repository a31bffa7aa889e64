#include <random>

#include "defv/laurent.hpp"
#include "doctest.h"

using namespace defv;

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kS{"s"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

LaurentPoly random_poly(const TowerPtr& tw, const std::vector<std::string>& vars,
                        std::mt19937_64& rng, int max_terms, int64_t emin, int64_t emax,
                        bool nonneg_y = false) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int64_t> de(emin, emax);
  std::uniform_int_distribution<uint32_t> dc(0, tw->field().p() - 1);
  std::uniform_int_distribution<int> dk(0, tw->coeff()->dim() - 1);
  LaurentPoly f = LaurentPoly::zero(tw, vars);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    ExpVec e(vars.size());
    for (size_t j = 0; j < vars.size(); ++j) {
      e[j] = de(rng);
      if (nonneg_y && vars[j] == "y" && e[j] < 0) e[j] = -e[j];
    }
    CoeffElem c = tw->has_coeff_algebra() ? tw->coeff()->monomial(dc(rng), dk(rng))
                                          : tw->coeff()->from_int(dc(rng));
    f = f.add(LaurentPoly::monomial(tw, vars, std::move(e), Scalar::from_coeff(tw, c)));
  }
  return f;
}

}  // namespace

TEST_CASE("poly_arith worked examples") {
  // (t + t^-1)(t - t^-1) = t^2 - t^-2 over F_5
  auto tw = ScalarTower::make(PrimeField(5));
  auto t = LaurentPoly::variable(tw, kT, "t");
  auto tinv = LaurentPoly::variable(tw, kT, "t", -1);
  auto lhs = t.add(tinv).mul(t.sub(tinv));
  auto expect = LaurentPoly::variable(tw, kT, "t", 2).sub(LaurentPoly::variable(tw, kT, "t", -2));
  CHECK(lhs == expect);

  // f + (-f) = 0
  CHECK(lhs.add(lhs.neg()).is_zero());

  // over k[eps]/(eps^2), p=2: (t + eps t^-2)^2 = t^2
  auto eps2 = CoeffAlgebra::truncated(PrimeField(2), "eps", 2);
  auto tw2 = ScalarTower::make(PrimeField(2), {}, eps2);
  auto f = LaurentPoly::variable(tw2, kT, "t").add(
      LaurentPoly::monomial(tw2, kT, {-2}, Scalar::from_coeff(tw2, eps2->gen())));
  CHECK(f.mul(f) == LaurentPoly::variable(tw2, kT, "t", 2));
  CHECK_THROWS_AS(f.add(LaurentPoly::variable(tw2, kS, "s")), error);
}

TEST_CASE("normal form under y^p -> xz") {
  auto tw = ScalarTower::make(PrimeField(2));
  RewriteRule r2 = RewriteRule::make(kXYZ, "y", 2, {1, 0, 1});
  // y^3 -> xyz
  auto y3 = LaurentPoly::variable(tw, kXYZ, "y", 3);
  CHECK(y3.normal_form(r2) == LaurentPoly::monomial(tw, kXYZ, {1, 1, 1}, Scalar::from_int(tw, 1)));

  // xz - y^p -> 0 for p in {2,3,5}
  for (uint32_t p : {2u, 3u, 5u}) {
    auto twp = ScalarTower::make(PrimeField(p));
    RewriteRule rp = RewriteRule::make(kXYZ, "y", p, {1, 0, 1});
    auto rel = LaurentPoly::monomial(twp, kXYZ, {1, 0, 1}, Scalar::from_int(twp, 1))
                   .sub(LaurentPoly::variable(twp, kXYZ, "y", static_cast<int64_t>(p)));
    CHECK(rel.normal_form(rp).is_zero());
  }

  // p=3: y^7 -> x^2 y z^2
  auto tw3 = ScalarTower::make(PrimeField(3));
  RewriteRule r3 = RewriteRule::make(kXYZ, "y", 3, {1, 0, 1});
  CHECK(LaurentPoly::variable(tw3, kXYZ, "y", 7).normal_form(r3) ==
        LaurentPoly::monomial(tw3, kXYZ, {2, 1, 2}, Scalar::from_int(tw3, 1)));

  // negative exponent in the rewrite variable is an error
  CHECK_THROWS_AS(LaurentPoly::variable(tw3, kXYZ, "y", -1).normal_form(r3), error);
}

TEST_CASE("normal form is idempotent and multiplicative on random polys") {
  std::mt19937_64 rng(20240812);
  for (uint32_t p : {2u, 3u, 5u}) {
    auto tw = ScalarTower::make(PrimeField(p));
    RewriteRule rule = RewriteRule::make(kXYZ, "y", p, {1, 0, 1});
    for (int i = 0; i < 200; ++i) {
      auto f = random_poly(tw, kXYZ, rng, 4, -3, 3 * static_cast<int64_t>(p), true);
      auto g = random_poly(tw, kXYZ, rng, 4, -3, 3 * static_cast<int64_t>(p), true);
      auto nf = f.normal_form(rule);
      CHECK(nf.normal_form(rule) == nf);
      CHECK(f.mul(g).normal_form(rule) ==
            f.normal_form(rule).mul(g.normal_form(rule)).normal_form(rule));
    }
  }
}

TEST_CASE("invert_unit worked examples") {
  // p=2, k[lam]/(lam^3): (s^-1 + lam s^2)^-1 = s - lam s^4 + lam^2 s^7
  auto lam3 = CoeffAlgebra::truncated(PrimeField(2), "lam", 3);
  auto tw = ScalarTower::make(PrimeField(2), {}, lam3);
  auto u = LaurentPoly::variable(tw, kS, "s", -1)
               .add(LaurentPoly::monomial(tw, kS, {2}, Scalar::from_coeff(tw, lam3->gen())));
  auto inv = u.invert_unit();
  auto expect = LaurentPoly::variable(tw, kS, "s", 1)
                    .sub(LaurentPoly::monomial(tw, kS, {4}, Scalar::from_coeff(tw, lam3->gen())))
                    .add(LaurentPoly::monomial(tw, kS, {7},
                                               Scalar::from_coeff(tw, lam3->monomial(1, 2))));
  CHECK(inv == expect);
  CHECK(u.mul(inv) == LaurentPoly::from_int(tw, kS, 1));

  // monomial units for any p
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    auto twp = ScalarTower::make(PrimeField(p));
    auto tk = LaurentPoly::variable(twp, kT, "t", 4);
    CHECK(tk.invert_unit() == LaurentPoly::variable(twp, kT, "t", -4));
  }

  // p=2, k[eps]/(eps^2): (s^5 (1+eps s))^-1 = s^-5 (1-eps s)
  auto eps2 = CoeffAlgebra::truncated(PrimeField(2), "eps", 2);
  auto tw2 = ScalarTower::make(PrimeField(2), {}, eps2);
  auto v = LaurentPoly::variable(tw2, kS, "s", 5).add(
      LaurentPoly::monomial(tw2, kS, {6}, Scalar::from_coeff(tw2, eps2->gen())));
  auto vinv = v.invert_unit();
  CHECK(v.mul(vinv) == LaurentPoly::from_int(tw2, kS, 1));
  auto expect2 = LaurentPoly::variable(tw2, kS, "s", -5).add(
      LaurentPoly::monomial(tw2, kS, {-4}, Scalar::from_coeff(tw2, eps2->gen())));
  CHECK(vinv == expect2);

  // non-units are rejected
  auto tw5 = ScalarTower::make(PrimeField(5));
  auto not_unit = LaurentPoly::from_int(tw5, kT, 1).add(LaurentPoly::variable(tw5, kT, "t"));
  CHECK_THROWS_AS(not_unit.invert_unit(), error);
}

TEST_CASE("invert_unit round-trips on random units") {
  std::mt19937_64 rng(99);
  int cases = 0;
  for (uint32_t p : {2u, 3u, 5u}) {
    auto alg = CoeffAlgebra::truncated(PrimeField(p), "lam", static_cast<int>(p) + 1);
    auto tw = ScalarTower::make(PrimeField(p), {}, alg);
    std::uniform_int_distribution<int64_t> de(-4, 4);
    std::uniform_int_distribution<uint32_t> dc(1, p - 1);
    std::uniform_int_distribution<int> dk(1, static_cast<int>(p));
    for (int i = 0; i < 40; ++i) {
      // unit = c * t^m * (1 + nilpotent random part)
      auto unit = LaurentPoly::monomial(tw, kT, {de(rng)},
                                        Scalar::from_coeff(tw, alg->from_int(dc(rng))));
      auto one = LaurentPoly::from_int(tw, kT, 1);
      auto nil = LaurentPoly::zero(tw, kT);
      int nterms = 1 + (i % 3);
      for (int j = 0; j < nterms; ++j) {
        nil = nil.add(LaurentPoly::monomial(
            tw, kT, {de(rng)}, Scalar::from_coeff(tw, alg->monomial(dc(rng), dk(rng)))));
      }
      auto u = unit.mul(one.add(nil));
      CHECK(u.mul(u.invert_unit()) == one);
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("invert_unit handles multi-atom symbolic nilpotent parts") {
  // the nilpotent remainder carries several symbol monomials per exponent
  auto eps3 = CoeffAlgebra::truncated(PrimeField(3), "eps", 3);
  auto tw = ScalarTower::make(PrimeField(3), {"f", "g"}, eps3, 32);
  auto eps_s = Scalar::from_coeff(tw, eps3->gen());
  auto fg = Scalar::symbol(tw, "f").add(Scalar::symbol(tw, "g"));
  auto u = LaurentPoly::variable(tw, kT, "t")
               .add(LaurentPoly::monomial(tw, kT, {-1}, fg.mul(eps_s)))
               .add(LaurentPoly::monomial(tw, kT, {2},
                                          Scalar::symbol(tw, "f").mul(eps_s)));
  CHECK(u.mul(u.invert_unit()) == LaurentPoly::from_int(tw, kT, 1));
}

TEST_CASE("frobenius_power worked examples") {
  // p=2, k[eps]/(eps^2), symbol x: (t + x eps)^2 = t^2
  auto eps2 = CoeffAlgebra::truncated(PrimeField(2), "eps", 2);
  auto tw = ScalarTower::make(PrimeField(2), {"x"}, eps2);
  auto f = LaurentPoly::variable(tw, kT, "t").add(LaurentPoly::constant(
      tw, kT, Scalar::symbol(tw, "x").mul(Scalar::from_coeff(tw, eps2->gen()))));
  CHECK(f.frobenius_power(2) == LaurentPoly::variable(tw, kT, "t", 2));

  // p=3, k[eps]/(eps^3): (y + eps)^3 = y^3
  auto eps3 = CoeffAlgebra::truncated(PrimeField(3), "eps", 3);
  auto tw3 = ScalarTower::make(PrimeField(3), {}, eps3);
  std::vector<std::string> vy{"y"};
  auto g = LaurentPoly::variable(tw3, vy, "y")
               .add(LaurentPoly::constant(tw3, vy, Scalar::from_coeff(tw3, eps3->gen())));
  CHECK(g.frobenius_power(3) == LaurentPoly::variable(tw3, vy, "y", 3));

  // p=2: (1 + t)^4 = 1 + t^4, against the naive oracle
  auto tw2 = ScalarTower::make(PrimeField(2));
  auto h = LaurentPoly::from_int(tw2, kT, 1).add(LaurentPoly::variable(tw2, kT, "t"));
  CHECK(h.frobenius_power(4) == h.pow_naive(4));
  CHECK(h.frobenius_power(4) ==
        LaurentPoly::from_int(tw2, kT, 1).add(LaurentPoly::variable(tw2, kT, "t", 4)));
}

TEST_CASE("frobenius additivity and agreement with naive powers") {
  std::mt19937_64 rng(31337);
  int cases = 0;
  for (uint32_t p : {2u, 3u, 5u}) {
    auto alg = CoeffAlgebra::truncated(PrimeField(p), "lam", static_cast<int>(p) + 1);
    auto tw = ScalarTower::make(PrimeField(p), {}, alg);
    for (int i = 0; i < 40; ++i) {
      auto f = random_poly(tw, kT, rng, 3, -3, 3);
      auto g = random_poly(tw, kT, rng, 3, -3, 3);
      CHECK(f.add(g).frobenius_power(p) ==
            f.frobenius_power(p).add(g.frobenius_power(p)));
      uint64_t e = 1 + (i % 6);
      CHECK(f.frobenius_power(e) == f.pow_naive(e));
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("coefficient_at reads scalars including symbolic ones") {
  auto tw = ScalarTower::make(PrimeField(5));
  auto f = LaurentPoly::variable(tw, kT, "t", 2).sub(LaurentPoly::variable(tw, kT, "t", -2));
  CHECK(coefficient_at(f, {2}) == Scalar::from_int(tw, 1));
  CHECK(coefficient_at(LaurentPoly::zero(tw, kT), {0}).is_zero());

  auto tws = ScalarTower::make(PrimeField(5), {"a0", "a2"});
  auto g = LaurentPoly::monomial(tws, kT, {-2}, Scalar::symbol(tws, "a0"))
               .add(LaurentPoly::constant(tws, kT, Scalar::symbol(tws, "a2")));
  CHECK(coefficient_at(g, {-2}) == Scalar::symbol(tws, "a0"));
}

TEST_CASE("exponent overflow is detected, not wrapped") {
  auto tw = ScalarTower::make(PrimeField(2));
  auto big = LaurentPoly::variable(tw, kT, "t", INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big.mul(big), error);
}

TEST_CASE("symbol degree cap is enforced") {
  auto tw = ScalarTower::make(PrimeField(3), {"m"}, nullptr, 4);
  Scalar m = Scalar::symbol(tw, "m");
  CHECK_THROWS_AS(m.pow(5), error);
}

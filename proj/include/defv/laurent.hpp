#ifndef DEFV_LAURENT_HPP
#define DEFV_LAURENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defv/scalar.hpp"

namespace defv {

using ExpVec = std::vector<int64_t>;  // one exponent per variable, may be negative

/// Single binomial rewrite y^p -> x*z: a pure power of one variable replaced
/// by a monomial with a strictly smaller exponent in that variable.
struct RewriteRule {
  int var = 0;         // index of the rewritten variable
  int64_t lhs_exp = 0; // exponent of the pure power (> rhs[var])
  ExpVec rhs;          // replacement monomial

  static RewriteRule make(const std::vector<std::string>& vars, const std::string& var,
                          int64_t lhs_exp, ExpVec rhs);
  bool operator==(const RewriteRule& o) const {
    return var == o.var && lhs_exp == o.lhs_exp && rhs == o.rhs;
  }
};

/// Sparse multivariate Laurent polynomial over a scalar tower. Terms are
/// kept in lexicographic exponent order; zero scalars are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(TowerPtr tower, std::vector<std::string> vars);

  static LaurentPoly zero(const TowerPtr& t, const std::vector<std::string>& vars);
  static LaurentPoly constant(const TowerPtr& t, const std::vector<std::string>& vars, Scalar c);
  static LaurentPoly from_int(const TowerPtr& t, const std::vector<std::string>& vars, int64_t n);
  static LaurentPoly monomial(const TowerPtr& t, const std::vector<std::string>& vars, ExpVec e,
                              Scalar c);
  static LaurentPoly variable(const TowerPtr& t, const std::vector<std::string>& vars,
                              const std::string& name, int64_t exp = 1);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<ExpVec, Scalar>& terms() const { return terms_; }
  int var_index(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_scalar() const;  // the exponent-zero coefficient

  LaurentPoly add(const LaurentPoly& o) const;
  LaurentPoly sub(const LaurentPoly& o) const;
  LaurentPoly neg() const;
  LaurentPoly mul(const LaurentPoly& o) const;
  LaurentPoly mul_scalar(const Scalar& c) const;
  LaurentPoly pow_naive(uint64_t e) const;  // plain repeated multiplication

  // Coefficient of a given exponent vector; zero scalar if absent.
  Scalar coefficient_at(const ExpVec& e) const;

  // Unique normal form under the rule. Requires nonnegative exponents of the
  // rewritten variable in every term.
  LaurentPoly normal_form(const RewriteRule& rule) const;

  // Exact inverse of a unit of the shape (monomial unit) * (1 + nilpotent).
  LaurentPoly invert_unit() const;
  bool is_unit_shape() const;

  // e-th power. Equals pow_naive(e); uses termwise Frobenius p-th powers
  // whenever p divides the remaining exponent.
  LaurentPoly frobenius_power(uint64_t e) const;

  // Substitute each variable by the given polynomial over the target ring.
  // Negative exponents use invert_unit on the substituted image.
  LaurentPoly substitute(const std::vector<LaurentPoly>& var_images) const;

  // id (x) pi on coefficients; result lives over tower.with_coeff(pi.target).
  LaurentPoly map_coeff(const CoeffMap& pi, const TowerPtr& target_tower) const;
  // Kill nilpotent coefficient parts (reduction modulo the maximal ideal of
  // the coefficient algebra); result lives over the reduced tower.
  LaurentPoly reduce_nilpotent() const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void insert_term(ExpVec e, Scalar c);
  friend class LaurentPolyBuilder;

  TowerPtr tower_;
  std::vector<std::string> vars_;
  std::map<ExpVec, Scalar> terms_;
};

// Free-function entry points.
LaurentPoly poly_arith(const LaurentPoly& f, const LaurentPoly& g, char op);
LaurentPoly normal_form(const LaurentPoly& f, const RewriteRule& rule);
LaurentPoly invert_unit(const LaurentPoly& u);
LaurentPoly frobenius_power(const LaurentPoly& f, uint64_t e);
Scalar coefficient_at(const LaurentPoly& f, const ExpVec& e);

}  // namespace defv

#endif

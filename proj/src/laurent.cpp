#include "defv/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace defv {

namespace {
void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}
}  // namespace

RewriteRule RewriteRule::make(const std::vector<std::string>& vars, const std::string& var,
                              int64_t lhs_exp, ExpVec rhs) {
  require(rhs.size() == vars.size(), "rewrite rhs has the wrong arity");
  int idx = -1;
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == var) idx = static_cast<int>(i);
  require(idx >= 0, "rewrite variable '" + var + "' not in the ring");
  require(lhs_exp >= 1, "rewrite lhs exponent must be positive");
  require(rhs[idx] < lhs_exp, "rewrite must strictly decrease the rewritten variable");
  RewriteRule r;
  r.var = idx;
  r.lhs_exp = lhs_exp;
  r.rhs = std::move(rhs);
  return r;
}

LaurentPoly::LaurentPoly(TowerPtr tower, std::vector<std::string> vars)
    : tower_(std::move(tower)), vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::zero(const TowerPtr& t, const std::vector<std::string>& vars) {
  return LaurentPoly(t, vars);
}

LaurentPoly LaurentPoly::constant(const TowerPtr& t, const std::vector<std::string>& vars,
                                  Scalar c) {
  LaurentPoly f(t, vars);
  f.insert_term(ExpVec(vars.size(), 0), std::move(c));
  return f;
}

LaurentPoly LaurentPoly::from_int(const TowerPtr& t, const std::vector<std::string>& vars,
                                  int64_t n) {
  return constant(t, vars, Scalar::from_int(t, n));
}

LaurentPoly LaurentPoly::monomial(const TowerPtr& t, const std::vector<std::string>& vars,
                                  ExpVec e, Scalar c) {
  require(e.size() == vars.size(), "exponent vector has the wrong arity");
  LaurentPoly f(t, vars);
  f.insert_term(std::move(e), std::move(c));
  return f;
}

LaurentPoly LaurentPoly::variable(const TowerPtr& t, const std::vector<std::string>& vars,
                                  const std::string& name, int64_t exp) {
  ExpVec e(vars.size(), 0);
  int idx = -1;
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) idx = static_cast<int>(i);
  require(idx >= 0, "unknown variable '" + name + "'");
  e[idx] = exp;
  return monomial(t, vars, std::move(e), Scalar::from_int(t, 1));
}

int LaurentPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool LaurentPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int64_t x : e)
      if (x != 0) return false;
  return true;
}

Scalar LaurentPoly::constant_scalar() const { return coefficient_at(ExpVec(vars_.size(), 0)); }

void LaurentPoly::insert_term(ExpVec e, Scalar c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    Scalar s = it->second.add(c);
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

namespace {
void check_compat(const LaurentPoly& a, const LaurentPoly& b) {
  require(a.tower() && b.tower() && a.tower()->same_as(*b.tower()),
          "polynomial operands over different towers");
  require(a.vars() == b.vars(), "polynomial operands in different variables");
}
}  // namespace

LaurentPoly LaurentPoly::add(const LaurentPoly& o) const {
  check_compat(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::neg() const {
  LaurentPoly r(tower_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.neg());
  return r;
}

LaurentPoly LaurentPoly::sub(const LaurentPoly& o) const { return add(o.neg()); }

LaurentPoly LaurentPoly::mul(const LaurentPoly& o) const {
  check_compat(*this, o);
  LaurentPoly r(tower_, vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Scalar c = c1.mul(c2);
      if (c.is_zero()) continue;
      ExpVec e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(e1[i], e2[i]);
      r.insert_term(std::move(e), std::move(c));
    }
  }
  return r;
}

LaurentPoly LaurentPoly::mul_scalar(const Scalar& c) const {
  LaurentPoly r(tower_, vars_);
  for (const auto& [e, s] : terms_) r.insert_term(e, s.mul(c));
  return r;
}

LaurentPoly LaurentPoly::pow_naive(uint64_t e) const {
  LaurentPoly r = from_int(tower_, vars_, 1);
  for (uint64_t i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

Scalar LaurentPoly::coefficient_at(const ExpVec& e) const {
  require(e.size() == vars_.size(), "exponent vector has the wrong arity");
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(tower_) : it->second;
}

LaurentPoly LaurentPoly::normal_form(const RewriteRule& rule) const {
  require(rule.var >= 0 && rule.var < static_cast<int>(vars_.size()),
          "rewrite rule variable out of range");
  LaurentPoly r(tower_, vars_);
  for (const auto& [e0, c] : terms_) {
    ExpVec e = e0;
    require(e[rule.var] >= 0, "negative exponent of the rewritten variable in " + to_string());
    // Each application trades lhs_exp of the rewritten variable for rhs;
    // rule.rhs[rule.var] < rule.lhs_exp makes this terminate.
    while (e[rule.var] >= rule.lhs_exp) {
      e[rule.var] -= rule.lhs_exp;
      for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(e[i], rule.rhs[i]);
    }
    r.insert_term(std::move(e), c);
  }
  return r;
}

bool LaurentPoly::is_unit_shape() const {
  int units = 0;
  for (const auto& [e, c] : terms_) {
    if (c.is_unit())
      ++units;
    else if (!c.is_nilpotent())
      return false;
  }
  return units == 1;
}

LaurentPoly LaurentPoly::invert_unit() const {
  require(!is_zero(), "cannot invert zero");
  // Locate the single term with an invertible scalar; everything else must
  // be nilpotent so the remainder admits a finite geometric series.
  const ExpVec* lead_e = nullptr;
  const Scalar* lead_c = nullptr;
  for (const auto& [e, c] : terms_) {
    if (c.is_unit()) {
      require(lead_e == nullptr,
              "not a unit of monomial*(1+nilpotent) shape: two invertible terms in " + to_string());
      lead_e = &e;
      lead_c = &c;
    } else {
      require(c.is_nilpotent(), "term with non-invertible, non-nilpotent scalar in " + to_string());
    }
  }
  require(lead_e != nullptr,
          "constant term of the monomial-normalized form is not invertible in " + to_string());
  ExpVec inv_e(lead_e->size());
  for (size_t i = 0; i < inv_e.size(); ++i) inv_e[i] = checked_mul((*lead_e)[i], -1);
  LaurentPoly lead_inv = monomial(tower_, vars_, std::move(inv_e), lead_c->inverse());
  // v = u * lead^-1 - 1 is nilpotent; sum the geometric series. Each atomic
  // summand carries a nilpotent algebra coefficient, so v^N = 0 once N
  // exceeds (order-1) * atom count.
  LaurentPoly v = mul(lead_inv).sub(from_int(tower_, vars_, 1));
  LaurentPoly acc = from_int(tower_, vars_, 1);
  LaurentPoly power = v.neg();
  int atoms = 0;
  for (const auto& [e, c] : v.terms()) atoms += static_cast<int>(c.terms().size());
  int guard = (tower_->coeff()->dim() + 1) * (atoms + 1) + 2;
  while (!power.is_zero() && guard-- > 0) {
    acc = acc.add(power);
    power = power.mul(v.neg());
  }
  require(power.is_zero(), "unit inversion did not terminate for " + to_string());
  return lead_inv.mul(acc);
}

LaurentPoly LaurentPoly::frobenius_power(uint64_t e) const {
  if (e == 0) return from_int(tower_, vars_, 1);
  uint64_t p = tower_->field().p();
  LaurentPoly base = *this;
  // (sum m_i)^p = sum m_i^p in characteristic p: take termwise p-th powers
  // while p divides the exponent, then finish naively.
  while (e % p == 0) {
    LaurentPoly next(tower_, vars_);
    for (const auto& [ex, c] : base.terms_) {
      ExpVec pe(ex.size());
      for (size_t i = 0; i < ex.size(); ++i) pe[i] = checked_mul(ex[i], static_cast<int64_t>(p));
      next.insert_term(std::move(pe), c.pow(p));
    }
    base = std::move(next);
    e /= p;
  }
  return base.pow_naive(e);
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& var_images) const {
  require(var_images.size() == vars_.size(), "one image per variable required");
  for (const auto& im : var_images)
    require(im.tower() != nullptr, "missing substitution image");
  const TowerPtr& tt = var_images.empty() ? tower_ : var_images[0].tower();
  const std::vector<std::string>& tv = var_images.empty() ? vars_ : var_images[0].vars();
  LaurentPoly r(tt, tv);
  std::vector<std::optional<LaurentPoly>> inverses(var_images.size());
  for (const auto& [e, c] : terms_) {
    LaurentPoly m = constant(tt, tv, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] > 0) {
        m = m.mul(var_images[i].frobenius_power(static_cast<uint64_t>(e[i])));
      } else {
        if (!inverses[i]) inverses[i] = var_images[i].invert_unit();
        m = m.mul(inverses[i]->frobenius_power(static_cast<uint64_t>(-e[i])));
      }
    }
    r = r.add(m);
  }
  return r;
}

LaurentPoly LaurentPoly::map_coeff(const CoeffMap& pi, const TowerPtr& target_tower) const {
  LaurentPoly r(target_tower, vars_);
  for (const auto& [e, c] : terms_) r.insert_term(e, c.map_coeff(pi, target_tower));
  return r;
}

LaurentPoly LaurentPoly::reduce_nilpotent() const {
  TowerPtr rt = tower_->reduced();
  LaurentPoly r(rt, vars_);
  for (const auto& [e, c] : terms_) r.insert_term(e, c.reduce_nilpotent(rt));
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (!tower_ || !o.tower_ || !tower_->same_as(*o.tower_) || vars_ != o.vars_) return false;
  return terms_ == o.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int64_t x) { return x != 0; });
    std::string cs = c.to_string();
    bool composite = cs.find(" + ") != std::string::npos;
    if (!has_var) {
      os << (composite ? "(" + cs + ")" : cs);
      continue;
    }
    bool wrote_coeff = false;
    if (!c.is_one()) {
      os << (composite ? "(" + cs + ")" : cs);
      wrote_coeff = true;
    }
    bool first_var = !wrote_coeff;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

LaurentPoly poly_arith(const LaurentPoly& f, const LaurentPoly& g, char op) {
  switch (op) {
    case '+': return f.add(g);
    case '-': return f.sub(g);
    case '*': return f.mul(g);
    default: throw error("unknown polynomial operation");
  }
}

LaurentPoly normal_form(const LaurentPoly& f, const RewriteRule& rule) {
  return f.normal_form(rule);
}
LaurentPoly invert_unit(const LaurentPoly& u) { return u.invert_unit(); }
LaurentPoly frobenius_power(const LaurentPoly& f, uint64_t e) { return f.frobenius_power(e); }
Scalar coefficient_at(const LaurentPoly& f, const ExpVec& e) { return f.coefficient_at(e); }

}  // namespace defv

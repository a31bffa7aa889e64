#include "defv/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace defv {

namespace {
void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}
}  // namespace

TowerPtr ScalarTower::make(PrimeField field, std::vector<std::string> symbols,
                           CoeffAlgebraPtr coeff, int max_symbol_degree) {
  for (size_t i = 0; i < symbols.size(); ++i)
    for (size_t j = i + 1; j < symbols.size(); ++j)
      require(symbols[i] != symbols[j], "duplicate symbol '" + symbols[i] + "' in tower");
  auto t = TowerPtr(new ScalarTower(field));
  auto& m = const_cast<ScalarTower&>(*t);
  m.symbols_ = std::move(symbols);
  m.coeff_ = coeff ? std::move(coeff) : CoeffAlgebra::ground(field);
  require(m.coeff_->field() == field, "coefficient algebra over a different field");
  m.max_symbol_degree_ = max_symbol_degree;
  return t;
}

int ScalarTower::symbol_index(const std::string& name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<int>(i);
  return -1;
}

bool ScalarTower::same_as(const ScalarTower& o) const {
  return field_ == o.field_ && symbols_ == o.symbols_ && coeff_->same_as(*o.coeff_);
}

std::string ScalarTower::describe() const {
  std::ostringstream os;
  os << coeff_->describe();
  if (!symbols_.empty()) {
    os << "[";
    for (size_t i = 0; i < symbols_.size(); ++i) os << (i ? "," : "") << symbols_[i];
    os << "]";
  }
  return os.str();
}

TowerPtr ScalarTower::with_coeff(CoeffAlgebraPtr coeff) const {
  return make(field_, symbols_, std::move(coeff), max_symbol_degree_);
}

TowerPtr ScalarTower::reduced() const {
  return make(field_, symbols_, CoeffAlgebra::ground(field_), max_symbol_degree_);
}

// ------------------------------------------------------------------ scalar

void Scalar::check_degree(const SymExp& e) const {
  long total = std::accumulate(e.begin(), e.end(), 0L);
  if (total > tower_->max_symbol_degree())
    throw error("symbol degree " + std::to_string(total) + " exceeds the tower cap " +
                std::to_string(tower_->max_symbol_degree()));
}

void Scalar::insert_term(SymExp e, CoeffElem c) {
  if (c.is_zero()) return;
  check_degree(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    CoeffElem s = it->second.add(c);
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

Scalar Scalar::from_int(const TowerPtr& t, int64_t n) {
  return from_coeff(t, t->coeff()->from_int(n));
}

Scalar Scalar::from_coeff(const TowerPtr& t, CoeffElem c) {
  require(c.owner() && c.owner()->same_as(*t->coeff()), "coefficient not in the tower's algebra");
  Scalar s(t);
  s.insert_term(SymExp(t->symbols().size(), 0), std::move(c));
  return s;
}

Scalar Scalar::symbol(const TowerPtr& t, const std::string& name) {
  int i = t->symbol_index(name);
  require(i >= 0, "undeclared symbol '" + name + "'");
  SymExp e(t->symbols().size(), 0);
  e[i] = 1;
  Scalar s(t);
  s.insert_term(std::move(e), t->coeff()->one());
  return s;
}

Scalar Scalar::term(const TowerPtr& t, SymExp e, CoeffElem c) {
  require(e.size() == t->symbols().size(), "symbol exponent vector has the wrong length");
  Scalar s(t);
  s.insert_term(std::move(e), std::move(c));
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second.is_one() &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](uint32_t x) { return x == 0; });
}

bool Scalar::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (uint32_t x : e)
      if (x != 0) return false;
  return true;
}

CoeffElem Scalar::constant_part() const {
  SymExp zero(tower_->symbols().size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? tower_->coeff()->zero() : it->second;
}

bool Scalar::is_unit() const {
  if (!constant_part().is_unit()) return false;
  SymExp zero(tower_->symbols().size(), 0);
  for (const auto& [e, c] : terms_)
    if (e != zero && !c.is_nilpotent()) return false;
  return true;
}

bool Scalar::is_nilpotent() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_nilpotent()) return false;
  return true;
}

namespace {
void check_tower(const Scalar& a, const Scalar& b) {
  require(a.tower() && b.tower() && a.tower()->same_as(*b.tower()),
          "scalar operands over different towers");
}
}  // namespace

Scalar Scalar::add(const Scalar& o) const {
  check_tower(*this, o);
  Scalar r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

Scalar Scalar::neg() const {
  Scalar r(tower_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.neg());
  return r;
}

Scalar Scalar::sub(const Scalar& o) const { return add(o.neg()); }

Scalar Scalar::mul(const Scalar& o) const {
  check_tower(*this, o);
  Scalar r(tower_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      CoeffElem c = c1.mul(c2);
      if (c.is_zero()) continue;
      SymExp e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.insert_term(std::move(e), std::move(c));
    }
  }
  return r;
}

Scalar Scalar::pow(uint64_t e) const {
  Scalar r = from_int(tower_, 1);
  Scalar base = *this;
  while (e) {
    if (e & 1) r = r.mul(base);
    e >>= 1;
    if (e) base = base.mul(base);
  }
  return r;
}

Scalar Scalar::inverse() const {
  require(is_unit(), "scalar " + to_string() + " is not a unit");
  CoeffElem c0 = constant_part();
  Scalar n = sub(from_coeff(tower_, c0));  // nilpotent remainder
  Scalar c0inv = from_coeff(tower_, c0.inverse());
  Scalar t = c0inv.mul(n).neg();
  Scalar acc = from_int(tower_, 1);
  Scalar power = t;
  // Terminates: every coefficient of t is nilpotent in the coefficient
  // algebra, so powers vanish after at most order * #terms steps.
  int guard = (tower_->coeff()->dim() + 1) * (static_cast<int>(t.terms_.size()) + 1) + 2;
  while (!power.is_zero() && guard-- > 0) {
    acc = acc.add(power);
    power = power.mul(t);
  }
  require(power.is_zero(), "unit inversion did not terminate (non-nilpotent remainder)");
  return c0inv.mul(acc);
}

Scalar Scalar::map_coeff(const CoeffMap& pi, const TowerPtr& target_tower) const {
  require(pi.source()->same_as(*tower_->coeff()), "coefficient map source mismatch");
  require(pi.target()->same_as(*target_tower->coeff()), "coefficient map target mismatch");
  require(tower_->symbols() == target_tower->symbols(), "towers declare different symbols");
  Scalar r(target_tower);
  for (const auto& [e, c] : terms_) r.insert_term(e, pi.apply(c));
  return r;
}

Scalar Scalar::reduce_nilpotent(const TowerPtr& reduced_tower) const {
  require(tower_->symbols() == reduced_tower->symbols(), "towers declare different symbols");
  Scalar r(reduced_tower);
  for (const auto& [e, c] : terms_) {
    uint32_t res = c.residue();
    if (res != 0) r.insert_term(e, reduced_tower->coeff()->from_int(res));
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!tower_ || !o.tower_ || !tower_->same_as(*o.tower_)) return false;
  return terms_ == o.terms_;
}

bool Scalar::less(const Scalar& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (!(it->second == jt->second)) return it->second.less(jt->second);
  }
  return it == terms_.end() && jt != o.terms_.end();
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_sym = std::any_of(e.begin(), e.end(), [](uint32_t x) { return x != 0; });
    std::string cs = c.to_string();
    bool composite = cs.find(" + ") != std::string::npos;
    if (!has_sym) {
      os << cs;
      continue;
    }
    bool wrote_coeff = false;
    if (!c.is_one()) {
      os << (composite ? "(" + cs + ")" : cs);
      wrote_coeff = true;
    }
    bool first_sym = !wrote_coeff;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_sym) os << "*";
      first_sym = false;
      os << tower_->symbols()[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace defv

#ifndef DEFV_SCALAR_HPP
#define DEFV_SCALAR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "defv/coeff.hpp"

namespace defv {

class ScalarTower;
using TowerPtr = std::shared_ptr<const ScalarTower>;

/// The coefficient tower for polynomial arithmetic: F_p, then an optional
/// list of symbolic coefficient names, then an optional nilpotent
/// coefficient algebra. A scalar is a polynomial in the symbols with
/// coefficients in the algebra (or in F_p when none is attached).
class ScalarTower : public std::enable_shared_from_this<ScalarTower> {
 public:
  static TowerPtr make(PrimeField field, std::vector<std::string> symbols = {},
                       CoeffAlgebraPtr coeff = nullptr, int max_symbol_degree = 64);

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const CoeffAlgebraPtr& coeff() const { return coeff_; }  // never null (Ground fallback)
  bool has_coeff_algebra() const { return coeff_->kind() != CoeffAlgebra::Kind::Ground; }
  int max_symbol_degree() const { return max_symbol_degree_; }
  int symbol_index(const std::string& name) const;  // -1 when absent

  bool same_as(const ScalarTower& o) const;
  std::string describe() const;

  // Tower with the coefficient algebra replaced (used by id (x) pi).
  TowerPtr with_coeff(CoeffAlgebraPtr coeff) const;
  // Tower with the coefficient algebra stripped to F_p (nilpotent reduction).
  TowerPtr reduced() const;

 private:
  ScalarTower(PrimeField field) : field_(field) {}
  PrimeField field_;
  std::vector<std::string> symbols_;
  CoeffAlgebraPtr coeff_;
  int max_symbol_degree_ = 64;
};

using SymExp = std::vector<uint32_t>;  // one exponent per tower symbol

/// An element of the scalar tower: sparse polynomial in the symbols over the
/// coefficient algebra. Immutable value type with canonical term order.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(TowerPtr tower) : tower_(std::move(tower)) {}

  static Scalar from_int(const TowerPtr& t, int64_t n);
  static Scalar from_coeff(const TowerPtr& t, CoeffElem c);
  static Scalar symbol(const TowerPtr& t, const std::string& name);
  static Scalar term(const TowerPtr& t, SymExp e, CoeffElem c);

  const TowerPtr& tower() const { return tower_; }
  const std::map<SymExp, CoeffElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;  // no symbol appears
  // Constant coefficient (the symbol-free part), zero elem if absent.
  CoeffElem constant_part() const;
  // A unit: symbol-free constant part invertible, all other terms nilpotent.
  bool is_unit() const;
  bool is_nilpotent() const;

  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar neg() const;
  Scalar mul(const Scalar& o) const;
  Scalar pow(uint64_t e) const;
  Scalar inverse() const;  // geometric series; throws unless is_unit()
  // Termwise application of a coefficient-algebra map (symbols fixed).
  Scalar map_coeff(const CoeffMap& pi, const TowerPtr& target_tower) const;
  // Kill every nilpotent part; result lives over the reduced tower.
  Scalar reduce_nilpotent(const TowerPtr& reduced_tower) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool less(const Scalar& o) const;

  std::string to_string() const;

 private:
  void insert_term(SymExp e, CoeffElem c);
  void check_degree(const SymExp& e) const;

  TowerPtr tower_;
  std::map<SymExp, CoeffElem> terms_;
};

}  // namespace defv

#endif

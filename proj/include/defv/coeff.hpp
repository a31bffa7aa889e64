#ifndef DEFV_COEFF_HPP
#define DEFV_COEFF_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "defv/fp.hpp"

namespace defv {

class CoeffAlgebra;
class CoeffElem;
class CoeffMap;
using CoeffAlgebraPtr = std::shared_ptr<const CoeffAlgebra>;

/// An Artinian local coefficient algebra: the ground field k = F_p, a
/// truncated polynomial algebra k[v]/(v^n), or a fiber product of two such
/// algebras over a common base.
class CoeffAlgebra : public std::enable_shared_from_this<CoeffAlgebra> {
 public:
  enum class Kind { Ground, Truncated, FiberProduct };

  static CoeffAlgebraPtr ground(PrimeField k);
  // k[var]/(var^order), order >= 1. order == 1 collapses to a copy of k.
  static CoeffAlgebraPtr truncated(PrimeField k, std::string var, int order);
  // left x_base right along two surjections onto base. Throws if either
  // projection is not surjective or the endpoints do not match.
  static CoeffAlgebraPtr fiber_product(CoeffAlgebraPtr left, CoeffAlgebraPtr right,
                                       CoeffAlgebraPtr base, const CoeffMap& proj_left,
                                       const CoeffMap& proj_right);

  Kind kind() const { return kind_; }
  const PrimeField& field() const { return field_; }
  const std::string& var() const { return var_; }
  int order() const { return order_; }
  const CoeffAlgebraPtr& left() const { return left_; }
  const CoeffAlgebraPtr& right() const { return right_; }
  const CoeffAlgebraPtr& base() const { return base_; }
  const CoeffMap& proj_left() const;
  const CoeffMap& proj_right() const;

  // k-dimension as a vector space.
  int dim() const;

  bool same_as(const CoeffAlgebra& o) const;
  std::string describe() const;

  CoeffElem zero() const;
  CoeffElem one() const;
  CoeffElem from_int(int64_t n) const;
  // The nilpotent generator var (Truncated only).
  CoeffElem gen() const;
  // c * var^k (Truncated only).
  CoeffElem monomial(uint32_t c, int k) const;
  // Builds a validated compatible pair (FiberProduct only).
  CoeffElem pair(const CoeffElem& a, const CoeffElem& b) const;

 private:
  CoeffAlgebra(Kind kind, PrimeField k) : kind_(kind), field_(k) {}

  Kind kind_;
  PrimeField field_;
  std::string var_;
  int order_ = 1;
  CoeffAlgebraPtr left_, right_, base_;
  std::shared_ptr<const CoeffMap> pleft_, pright_;
};

/// An element of a CoeffAlgebra. Immutable; all operations return new values.
class CoeffElem {
 public:
  CoeffElem() = default;

  const CoeffAlgebraPtr& owner() const { return owner_; }
  // Dense coefficient vector, c[i] multiplies var^i (Ground/Truncated).
  const std::vector<uint32_t>& coeffs() const { return c_; }
  const CoeffElem& first() const;
  const CoeffElem& second() const;

  bool is_zero() const;
  bool is_one() const;
  // Invertible, i.e. residue in k is nonzero.
  bool is_unit() const;
  bool is_nilpotent() const { return residue() == 0; }
  // Image in the residue field k.
  uint32_t residue() const;

  CoeffElem add(const CoeffElem& o) const;
  CoeffElem sub(const CoeffElem& o) const;
  CoeffElem neg() const;
  CoeffElem mul(const CoeffElem& o) const;
  CoeffElem pow(uint64_t e) const;
  CoeffElem inverse() const;  // throws unless is_unit()

  bool operator==(const CoeffElem& o) const;
  bool operator!=(const CoeffElem& o) const { return !(*this == o); }
  // Deterministic total order (for canonical container keys).
  bool less(const CoeffElem& o) const;

  std::string to_string() const;

  static CoeffElem make_scalar(CoeffAlgebraPtr owner, uint32_t c);
  static CoeffElem make_dense(CoeffAlgebraPtr owner, std::vector<uint32_t> c);
  static CoeffElem make_pair(CoeffAlgebraPtr owner, CoeffElem a, CoeffElem b);

 private:
  friend class CoeffAlgebra;
  friend class CoeffMap;

  CoeffAlgebraPtr owner_;
  std::vector<uint32_t> c_;
  std::shared_ptr<const CoeffElem> a_, b_;  // FiberProduct components
};

/// A local k-algebra homomorphism between coefficient algebras, given by the
/// image of the nilpotent generator (or as a fiber-product projection).
class CoeffMap {
 public:
  enum class Kind { Identity, VarImage, Projection1, Projection2 };

  // An empty map; only the factory-built maps are usable.
  CoeffMap() = default;

  static CoeffMap identity(CoeffAlgebraPtr a);
  // source Truncated, var |-> image in target. The image must be nilpotent.
  static CoeffMap var_image(CoeffAlgebraPtr source, CoeffAlgebraPtr target, CoeffElem image);
  static CoeffMap projection(CoeffAlgebraPtr fiber, int which);  // which in {1, 2}

  Kind kind() const { return kind_; }
  const CoeffAlgebraPtr& source() const { return source_; }
  const CoeffAlgebraPtr& target() const { return target_; }

  CoeffElem apply(const CoeffElem& a) const;
  CoeffMap compose_after(const CoeffMap& inner) const;  // this o inner

  bool is_identity_like() const;
  bool is_surjective() const;
  int kernel_dim() const;  // requires surjectivity
  // Least i with apply(gen^i) == 0; dim(source)+... for identity-like maps
  // this is the truncation order of the target. Requires Truncated source.
  int kernel_order() const;

  std::string describe() const;

 private:
  // Rank of the induced k-linear map on monomial bases.
  int image_rank() const;

  Kind kind_ = Kind::Identity;
  CoeffAlgebraPtr source_, target_;
  std::optional<CoeffElem> image_;
};

// Free-function entry points.
CoeffElem coeff_arith(const CoeffElem& a, const CoeffElem& b, char op);
CoeffElem coeff_map_apply(const CoeffMap& pi, const CoeffElem& a);
bool is_small_extension(const CoeffMap& pi);

}  // namespace defv

#endif

#include "defv/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace defv {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

std::vector<uint32_t> trim(std::vector<uint32_t> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

// ---------------------------------------------------------------- algebra

CoeffAlgebraPtr CoeffAlgebra::ground(PrimeField k) {
  return CoeffAlgebraPtr(new CoeffAlgebra(Kind::Ground, k));
}

CoeffAlgebraPtr CoeffAlgebra::truncated(PrimeField k, std::string var, int order) {
  require(order >= 1, "truncation order must be >= 1");
  auto a = CoeffAlgebraPtr(new CoeffAlgebra(Kind::Truncated, k));
  const_cast<CoeffAlgebra&>(*a).var_ = std::move(var);
  const_cast<CoeffAlgebra&>(*a).order_ = order;
  return a;
}

CoeffAlgebraPtr CoeffAlgebra::fiber_product(CoeffAlgebraPtr left, CoeffAlgebraPtr right,
                                            CoeffAlgebraPtr base, const CoeffMap& proj_left,
                                            const CoeffMap& proj_right) {
  require(left && right && base, "fiber product needs three algebras");
  require(left->field() == right->field() && left->field() == base->field(),
          "fiber product over mixed characteristics");
  require(proj_left.source()->same_as(*left) && proj_left.target()->same_as(*base),
          "left projection endpoints do not match");
  require(proj_right.source()->same_as(*right) && proj_right.target()->same_as(*base),
          "right projection endpoints do not match");
  require(proj_left.is_surjective(), "left projection is not surjective onto the base");
  require(proj_right.is_surjective(), "right projection is not surjective onto the base");
  auto a = CoeffAlgebraPtr(new CoeffAlgebra(Kind::FiberProduct, left->field()));
  auto& m = const_cast<CoeffAlgebra&>(*a);
  m.left_ = std::move(left);
  m.right_ = std::move(right);
  m.base_ = std::move(base);
  m.pleft_ = std::make_shared<CoeffMap>(proj_left);
  m.pright_ = std::make_shared<CoeffMap>(proj_right);
  return a;
}

const CoeffMap& CoeffAlgebra::proj_left() const {
  require(kind_ == Kind::FiberProduct, "not a fiber product");
  return *pleft_;
}
const CoeffMap& CoeffAlgebra::proj_right() const {
  require(kind_ == Kind::FiberProduct, "not a fiber product");
  return *pright_;
}

int CoeffAlgebra::dim() const {
  switch (kind_) {
    case Kind::Ground: return 1;
    case Kind::Truncated: return order_;
    case Kind::FiberProduct: return left_->dim() + right_->dim() - base_->dim();
  }
  return 0;
}

bool CoeffAlgebra::same_as(const CoeffAlgebra& o) const {
  if (kind_ != o.kind_ || field_ != o.field_) return false;
  switch (kind_) {
    case Kind::Ground: return true;
    case Kind::Truncated: return var_ == o.var_ && order_ == o.order_;
    case Kind::FiberProduct:
      return left_->same_as(*o.left_) && right_->same_as(*o.right_) && base_->same_as(*o.base_);
  }
  return false;
}

std::string CoeffAlgebra::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Ground: os << "F_" << field_.p(); break;
    case Kind::Truncated:
      os << "F_" << field_.p() << "[" << var_ << "]/(" << var_ << "^" << order_ << ")";
      break;
    case Kind::FiberProduct:
      os << left_->describe() << " x_{" << base_->describe() << "} " << right_->describe();
      break;
  }
  return os.str();
}

CoeffElem CoeffAlgebra::zero() const { return from_int(0); }
CoeffElem CoeffAlgebra::one() const { return from_int(1); }

CoeffElem CoeffAlgebra::from_int(int64_t n) const {
  uint32_t c = field_.reduce(n);
  auto self = shared_from_this();
  if (kind_ == Kind::FiberProduct)
    return CoeffElem::make_pair(self, left_->from_int(c), right_->from_int(c));
  return CoeffElem::make_scalar(self, c);
}

CoeffElem CoeffAlgebra::gen() const { return monomial(1, 1); }

CoeffElem CoeffAlgebra::monomial(uint32_t c, int k) const {
  require(kind_ == Kind::Truncated, "nilpotent generator only exists in truncated algebras");
  std::vector<uint32_t> v;
  if (k < order_ && c % field_.p() != 0) {
    v.assign(k + 1, 0);
    v[k] = c % field_.p();
  }
  return CoeffElem::make_dense(shared_from_this(), std::move(v));
}

CoeffElem CoeffAlgebra::pair(const CoeffElem& a, const CoeffElem& b) const {
  require(kind_ == Kind::FiberProduct, "pair construction needs a fiber product");
  return CoeffElem::make_pair(shared_from_this(), a, b);
}

// ---------------------------------------------------------------- element

CoeffElem CoeffElem::make_scalar(CoeffAlgebraPtr owner, uint32_t c) {
  CoeffElem e;
  e.owner_ = std::move(owner);
  c %= e.owner_->field().p();
  if (c != 0) e.c_ = {c};
  return e;
}

CoeffElem CoeffElem::make_dense(CoeffAlgebraPtr owner, std::vector<uint32_t> c) {
  CoeffElem e;
  e.owner_ = std::move(owner);
  if (e.owner_->kind() == CoeffAlgebra::Kind::Truncated &&
      c.size() > static_cast<size_t>(e.owner_->order()))
    c.resize(e.owner_->order());
  e.c_ = trim(std::move(c));
  return e;
}

CoeffElem CoeffElem::make_pair(CoeffAlgebraPtr owner, CoeffElem a, CoeffElem b) {
  require(owner && owner->kind() == CoeffAlgebra::Kind::FiberProduct, "pair without fiber product");
  require(a.owner_ && a.owner_->same_as(*owner->left()), "left component in wrong algebra");
  require(b.owner_ && b.owner_->same_as(*owner->right()), "right component in wrong algebra");
  CoeffElem la = owner->proj_left().apply(a);
  CoeffElem rb = owner->proj_right().apply(b);
  require(la == rb, "incompatible pair: projections to the base differ (" + la.to_string() +
                        " vs " + rb.to_string() + ")");
  CoeffElem e;
  e.owner_ = std::move(owner);
  e.a_ = std::make_shared<CoeffElem>(std::move(a));
  e.b_ = std::make_shared<CoeffElem>(std::move(b));
  return e;
}

const CoeffElem& CoeffElem::first() const {
  require(a_ != nullptr, "not a fiber-product element");
  return *a_;
}
const CoeffElem& CoeffElem::second() const {
  require(b_ != nullptr, "not a fiber-product element");
  return *b_;
}

bool CoeffElem::is_zero() const {
  if (a_) return a_->is_zero() && b_->is_zero();
  return c_.empty();
}

bool CoeffElem::is_one() const {
  if (a_) return a_->is_one() && b_->is_one();
  return c_.size() == 1 && c_[0] == 1;
}

uint32_t CoeffElem::residue() const {
  if (a_) return a_->residue();
  return c_.empty() ? 0 : c_[0];
}

bool CoeffElem::is_unit() const {
  if (a_) return a_->is_unit() && b_->is_unit();
  return residue() != 0;
}

namespace {
void check_same_owner(const CoeffElem& a, const CoeffElem& b) {
  require(a.owner() && b.owner() && a.owner()->same_as(*b.owner()),
          "coefficient operands belong to different algebras");
}
}  // namespace

CoeffElem CoeffElem::add(const CoeffElem& o) const {
  check_same_owner(*this, o);
  if (a_) return make_pair(owner_, a_->add(o.first()), b_->add(o.second()));
  const PrimeField& k = owner_->field();
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = k.add(r[i], o.c_[i]);
  return make_dense(owner_, std::move(r));
}

CoeffElem CoeffElem::neg() const {
  if (a_) return make_pair(owner_, a_->neg(), b_->neg());
  const PrimeField& k = owner_->field();
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = k.neg(x);
  return make_dense(owner_, std::move(r));
}

CoeffElem CoeffElem::sub(const CoeffElem& o) const { return add(o.neg()); }

CoeffElem CoeffElem::mul(const CoeffElem& o) const {
  check_same_owner(*this, o);
  if (a_) return make_pair(owner_, a_->mul(o.first()), b_->mul(o.second()));
  const PrimeField& k = owner_->field();
  size_t cap = owner_->kind() == CoeffAlgebra::Kind::Truncated
                   ? static_cast<size_t>(owner_->order())
                   : 1;
  std::vector<uint32_t> r;
  if (!c_.empty() && !o.c_.empty()) {
    r.assign(std::min(c_.size() + o.c_.size() - 1, cap), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size() && i + j < cap; ++j)
        r[i + j] = k.add(r[i + j], k.mul(c_[i], o.c_[j]));
    }
  }
  return make_dense(owner_, std::move(r));
}

CoeffElem CoeffElem::pow(uint64_t e) const {
  CoeffElem r = owner_->one();
  CoeffElem base = *this;
  while (e) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

CoeffElem CoeffElem::inverse() const {
  require(is_unit(), "coefficient " + to_string() + " is not a unit");
  if (a_) return make_pair(owner_, a_->inverse(), b_->inverse());
  const PrimeField& k = owner_->field();
  CoeffElem c0 = make_scalar(owner_, residue());
  CoeffElem n = sub(c0);  // nilpotent part
  CoeffElem c0inv = make_scalar(owner_, k.inv(residue()));
  // (c0 + n)^-1 = c0^-1 * sum (-c0^-1 n)^i, a finite geometric series.
  CoeffElem t = c0inv.mul(n).neg();
  CoeffElem acc = owner_->one();
  CoeffElem power = t;
  int guard = owner_->dim() + 1;
  while (!power.is_zero() && guard-- > 0) {
    acc = acc.add(power);
    power = power.mul(t);
  }
  require(power.is_zero(), "geometric series for inverse did not terminate");
  return c0inv.mul(acc);
}

bool CoeffElem::operator==(const CoeffElem& o) const {
  if (!owner_ || !o.owner_ || !owner_->same_as(*o.owner_)) return false;
  if (a_) return *a_ == o.first() && *b_ == o.second();
  return c_ == o.c_;
}

bool CoeffElem::less(const CoeffElem& o) const {
  if (a_) {
    if (a_->less(o.first())) return true;
    if (o.first().less(*a_)) return false;
    return b_->less(o.second());
  }
  return c_ < o.c_;
}

std::string CoeffElem::to_string() const {
  if (a_) return "(" + a_->to_string() + ", " + b_->to_string() + ")";
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << owner_->var();
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- map

CoeffMap CoeffMap::identity(CoeffAlgebraPtr a) {
  CoeffMap m;
  m.kind_ = Kind::Identity;
  m.source_ = a;
  m.target_ = std::move(a);
  return m;
}

CoeffMap CoeffMap::var_image(CoeffAlgebraPtr source, CoeffAlgebraPtr target, CoeffElem image) {
  require(source && source->kind() == CoeffAlgebra::Kind::Truncated,
          "var_image map needs a truncated source");
  require(image.owner() && image.owner()->same_as(*target), "image lies in the wrong algebra");
  require(image.is_nilpotent(), "image of the nilpotent generator must be nilpotent");
  // The generator's nilpotency order must not drop below the source order.
  CoeffElem power = image.pow(static_cast<uint64_t>(source->order()));
  require(power.is_zero(), "image of " + source->var() + " is not nilpotent of order >= " +
                               std::to_string(source->order()));
  CoeffMap m;
  m.kind_ = Kind::VarImage;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.image_ = std::move(image);
  return m;
}

CoeffMap CoeffMap::projection(CoeffAlgebraPtr fiber, int which) {
  require(fiber && fiber->kind() == CoeffAlgebra::Kind::FiberProduct,
          "projection needs a fiber product source");
  require(which == 1 || which == 2, "projection index must be 1 or 2");
  CoeffMap m;
  m.kind_ = which == 1 ? Kind::Projection1 : Kind::Projection2;
  m.source_ = fiber;
  m.target_ = which == 1 ? fiber->left() : fiber->right();
  return m;
}

CoeffElem CoeffMap::apply(const CoeffElem& a) const {
  require(source_ != nullptr, "applying an empty coefficient map");
  require(a.owner() && a.owner()->same_as(*source_), "element not in the map's source algebra");
  switch (kind_) {
    case Kind::Identity: return a;
    case Kind::Projection1: return a.first();
    case Kind::Projection2: return a.second();
    case Kind::VarImage: {
      // a = sum a_i var^i |-> sum a_i image^i, truncated in the target.
      CoeffElem r = target_->zero();
      CoeffElem power = target_->one();
      for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] != 0)
          r = r.add(power.mul(target_->from_int(a.coeffs()[i])));
        if (i + 1 < a.coeffs().size()) power = power.mul(*image_);
      }
      return r;
    }
  }
  throw error("unreachable");
}

CoeffMap CoeffMap::compose_after(const CoeffMap& inner) const {
  require(inner.target_->same_as(*source_), "coefficient maps not composable");
  if (inner.kind_ == Kind::Identity) return *this;
  if (kind_ == Kind::Identity) return inner;
  require(inner.kind_ == Kind::VarImage, "unsupported coefficient map composition");
  return CoeffMap::var_image(inner.source_, target_, apply(*inner.image_));
}

bool CoeffMap::is_identity_like() const {
  if (kind_ == Kind::Identity) return true;
  if (kind_ == Kind::VarImage && source_->same_as(*target_))
    return *image_ == source_->gen();
  return false;
}

int CoeffMap::image_rank() const {
  // Gaussian elimination over the monomial basis of a truncated target.
  require(target_->kind() != CoeffAlgebra::Kind::FiberProduct,
          "rank computation not supported for fiber-product targets");
  const PrimeField& k = source_->field();
  int n = target_->dim();
  std::vector<std::vector<uint32_t>> rows;
  CoeffElem power = target_->one();
  for (int i = 0; i < source_->dim(); ++i) {
    std::vector<uint32_t> row(n, 0);
    for (size_t j = 0; j < power.coeffs().size(); ++j) row[j] = power.coeffs()[j];
    rows.push_back(std::move(row));
    if (kind_ == Kind::VarImage && i + 1 < source_->dim()) power = power.mul(*image_);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    uint32_t inv = k.inv(rows[rank][col]);
    for (int j = 0; j < n; ++j) rows[rank][j] = k.mul(rows[rank][j], inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      uint32_t f = rows[r][col];
      for (int j = 0; j < n; ++j) rows[r][j] = k.sub(rows[r][j], k.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

bool CoeffMap::is_surjective() const {
  switch (kind_) {
    case Kind::Identity: return true;
    case Kind::Projection1:
    case Kind::Projection2: return true;  // components of validated pairs
    case Kind::VarImage: return image_rank() == target_->dim();
  }
  return false;
}

int CoeffMap::kernel_dim() const {
  require(is_surjective(), "kernel dimension defined here for surjective maps only");
  return source_->dim() - target_->dim();
}

int CoeffMap::kernel_order() const {
  require(source_->kind() == CoeffAlgebra::Kind::Truncated, "kernel order needs truncated source");
  CoeffElem power = source_->one();
  for (int i = 0; i < source_->order(); ++i) {
    if (apply(power).is_zero()) return i;
    power = power.mul(source_->gen());
  }
  // Kernel is trivial: the first vanishing power is the source truncation.
  return source_->order();
}

std::string CoeffMap::describe() const {
  switch (kind_) {
    case Kind::Identity: return "id on " + source_->describe();
    case Kind::Projection1: return "pr1: " + source_->describe();
    case Kind::Projection2: return "pr2: " + source_->describe();
    case Kind::VarImage:
      return source_->var() + " -> " + image_->to_string() + " : " + source_->describe() +
             " -> " + target_->describe();
  }
  return "";
}

// ------------------------------------------------------------- operations

CoeffElem coeff_arith(const CoeffElem& a, const CoeffElem& b, char op) {
  switch (op) {
    case '+': return a.add(b);
    case '*': return a.mul(b);
    case '-': return a.sub(b);
    default: throw error("unknown coefficient operation");
  }
}

CoeffElem coeff_map_apply(const CoeffMap& pi, const CoeffElem& a) { return pi.apply(a); }

bool is_small_extension(const CoeffMap& pi) {
  if (!pi.is_surjective()) throw error("small-extension test requires a surjective map");
  return pi.kernel_dim() == 1;
}

}  // namespace defv

#include "defv/ringmap.hpp"

#include <algorithm>
#include <sstream>

namespace defv {

namespace {
void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

std::string monomial_name(const std::vector<std::string>& vars, const Vec& e) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << vars[i];
    if (e[i] != 1) os << "^" << e[i];
  }
  return any ? os.str() : "1";
}
}  // namespace

RingDesc RingDesc::laurent(std::string name, TowerPtr tower, std::vector<std::string> vars) {
  RingDesc d;
  d.name = std::move(name);
  d.tower = std::move(tower);
  d.vars = std::move(vars);
  return d;
}

RingDesc RingDesc::subalgebra(std::string name, TowerPtr tower, std::vector<std::string> vars,
                              MonomialAlgebra algebra) {
  require(algebra.rank == static_cast<int>(vars.size()),
          "algebra rank does not match the variable count");
  RingDesc d;
  d.name = std::move(name);
  d.tower = std::move(tower);
  d.vars = std::move(vars);
  d.algebra = std::move(algebra);
  return d;
}

RingDesc RingDesc::quotient(std::string name, TowerPtr tower, std::vector<std::string> vars,
                            RewriteRule rule) {
  RingDesc d;
  d.name = std::move(name);
  d.tower = std::move(tower);
  d.vars = std::move(vars);
  d.rule = std::move(rule);
  return d;
}

std::vector<LaurentPoly> RingDesc::generators() const {
  std::vector<LaurentPoly> gens;
  if (algebra) {
    for (size_t i = 0; i < algebra->gens.size(); ++i) {
      gens.push_back(
          LaurentPoly::monomial(tower, vars, algebra->gens[i], Scalar::from_int(tower, 1)));
      if (algebra->invertible[i]) {
        Vec n = algebra->gens[i];
        for (auto& x : n) x = -x;
        gens.push_back(LaurentPoly::monomial(tower, vars, n, Scalar::from_int(tower, 1)));
      }
    }
  } else {
    for (const auto& v : vars) gens.push_back(LaurentPoly::variable(tower, vars, v));
    if (!rule)
      for (const auto& v : vars) gens.push_back(LaurentPoly::variable(tower, vars, v, -1));
  }
  return gens;
}

std::vector<std::string> RingDesc::generator_names() const {
  std::vector<std::string> names;
  if (algebra) {
    for (size_t i = 0; i < algebra->gens.size(); ++i) {
      names.push_back(monomial_name(vars, algebra->gens[i]));
      if (algebra->invertible[i]) {
        Vec n = algebra->gens[i];
        for (auto& x : n) x = -x;
        names.push_back(monomial_name(vars, n));
      }
    }
  } else {
    for (const auto& v : vars) names.push_back(v);
    if (!rule)
      for (const auto& v : vars) names.push_back(v + "^-1");
  }
  return names;
}

LaurentPoly RingDesc::normalize(const LaurentPoly& f) const {
  return rule ? f.normal_form(*rule) : f;
}

bool RingDesc::contains(const LaurentPoly& f, int64_t bound, std::string* offending) const {
  LaurentPoly g = normalize(f);
  for (const auto& [e, c] : g.terms()) {
    bool ok;
    if (algebra) {
      ok = semigroup_member(e, *algebra, bound).found();
    } else if (rule) {
      ok = std::all_of(e.begin(), e.end(), [](int64_t x) { return x >= 0; });
    } else {
      ok = true;  // full Laurent ring
    }
    if (!ok) {
      if (offending) *offending = monomial_name(vars, e);
      return false;
    }
  }
  return true;
}

RingDesc RingDesc::with_tower(TowerPtr t) const {
  RingDesc d = *this;
  d.tower = std::move(t);
  return d;
}

bool RingDesc::same_underlying(const RingDesc& o) const {
  if (vars != o.vars) return false;
  if (algebra.has_value() != o.algebra.has_value()) return false;
  if (algebra && !(*algebra == *o.algebra)) return false;
  if (rule.has_value() != o.rule.has_value()) return false;
  if (rule && !(*rule == *o.rule)) return false;
  return true;
}

// -------------------------------------------------------------------- map

RingMap RingMap::substitution(std::string name, RingDesc source, RingDesc target,
                              std::map<std::string, LaurentPoly> var_images, CoeffMap coeff_map) {
  require(coeff_map.source()->same_as(*source.tower->coeff()),
          "coefficient map does not start at the source tower");
  require(coeff_map.target()->same_as(*target.tower->coeff()),
          "coefficient map does not end at the target tower");
  for (const auto& v : source.vars)
    require(var_images.count(v) == 1, "missing image for variable '" + v + "'");
  for (const auto& [v, img] : var_images)
    require(img.tower()->same_as(*target.tower) && img.vars() == target.vars,
            "image of '" + v + "' lives in the wrong ring");
  RingMap m;
  m.name_ = std::move(name);
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.var_images_ = std::move(var_images);
  m.coeff_map_ = std::move(coeff_map);
  return m;
}

RingMap RingMap::identity(const RingDesc& ring) {
  std::map<std::string, LaurentPoly> images;
  for (const auto& v : ring.vars)
    images.emplace(v, LaurentPoly::variable(ring.tower, ring.vars, v));
  return substitution("id", ring, ring, std::move(images),
                      CoeffMap::identity(ring.tower->coeff()));
}

RingMap RingMap::inclusion(std::string name, RingDesc source, RingDesc target) {
  require(source.vars == target.vars, "inclusion requires matching ambient variables");
  require(source.tower->same_as(*target.tower), "inclusion requires a common tower");
  std::map<std::string, LaurentPoly> images;
  for (const auto& v : source.vars)
    images.emplace(v, LaurentPoly::variable(target.tower, target.vars, v));
  CoeffMap cm = CoeffMap::identity(source.tower->coeff());
  return substitution(std::move(name), std::move(source), std::move(target), std::move(images),
                      std::move(cm));
}

LaurentPoly RingMap::apply(const LaurentPoly& f) const {
  require(f.tower()->same_as(*source_.tower) && f.vars() == source_.vars,
          "element not in the map's source ring");
  // push coefficients through pi, rebuild over the target tower, substitute
  TowerPtr tt = target_.tower;
  TowerPtr bridge = source_.tower->with_coeff(tt->coeff());
  LaurentPoly coeff_mapped = f.map_coeff(*coeff_map_, bridge);
  LaurentPoly rebuilt(tt, source_.vars);
  for (const auto& [e, c] : coeff_mapped.terms()) {
    Scalar s(tt);
    for (const auto& [se, ce] : c.terms()) s = s.add(Scalar::term(tt, se, ce));
    rebuilt = rebuilt.add(LaurentPoly::monomial(tt, source_.vars, e, s));
  }
  std::vector<LaurentPoly> images;
  for (const auto& v : source_.vars) images.push_back(var_images_.at(v));
  return target_.normalize(rebuilt.substitute(images));
}

std::vector<LaurentPoly> RingMap::generator_images() const {
  std::vector<LaurentPoly> out;
  for (const auto& g : source_.generators()) out.push_back(apply(g));
  return out;
}

bool RingMap::equals_on_generators(const RingMap& o, std::string* witness) const {
  require(source_.same_underlying(o.source_), "maps compared on different sources");
  auto mine = generator_images();
  auto theirs = o.generator_images();
  auto names = source_.generator_names();
  for (size_t i = 0; i < mine.size(); ++i) {
    if (!(mine[i] == theirs[i])) {
      if (witness)
        *witness = names[i] + ": " + mine[i].to_string() + " vs " + theirs[i].to_string();
      return false;
    }
  }
  return true;
}

RingMap RingMap::compose_after(const RingMap& inner, const std::string& name) const {
  require(inner.target_.vars == source_.vars, "maps not composable: variable mismatch");
  require(inner.target_.tower->same_as(*source_.tower), "maps not composable: tower mismatch");
  std::map<std::string, LaurentPoly> images;
  for (const auto& v : inner.source_.vars) images.emplace(v, apply(inner.var_images_.at(v)));
  CoeffMap cm = coeff_map_->compose_after(*inner.coeff_map_);
  return substitution(name.empty() ? name_ + "." + inner.name_ : name, inner.source_, target_,
                      std::move(images), std::move(cm));
}

RingMap RingMap::restrict_coefficients(const CoeffMap& pi, const std::string& name) const {
  require(coeff_map_->is_identity_like(),
          "coefficient restriction implemented for coefficient-identity maps");
  require(pi.source()->same_as(*source_.tower->coeff()), "restriction map source mismatch");
  TowerPtr src_t = source_.tower->with_coeff(pi.target());
  TowerPtr tgt_t = target_.tower->with_coeff(pi.target());
  std::map<std::string, LaurentPoly> images;
  for (const auto& [v, img] : var_images_) images.emplace(v, img.map_coeff(pi, tgt_t));
  return substitution(name.empty() ? name_ + "@A" : name, source_.with_tower(src_t),
                      target_.with_tower(tgt_t), std::move(images),
                      CoeffMap::identity(pi.target()));
}

RingMap RingMap::rebase(RingDesc source, RingDesc target, const std::string& name) const {
  require(source.vars == source_.vars && target.vars == target_.vars,
          "rebase requires the same ambient variables");
  require(source.tower->same_as(*source_.tower) && target.tower->same_as(*target_.tower),
          "rebase requires the same towers");
  return substitution(name.empty() ? name_ : name, std::move(source), std::move(target),
                      var_images_, *coeff_map_);
}

std::string RingMap::describe() const {
  std::ostringstream os;
  os << name_ << ": " << source_.name << " -> " << target_.name << ", ";
  bool first = true;
  for (const auto& [v, img] : var_images_) {
    if (!first) os << ", ";
    first = false;
    os << v << " -> " << img.to_string();
  }
  return os.str();
}

// ------------------------------------------------------------------ checks

CheckOutcome check_well_defined(const RingMap& f, int64_t bound) {
  CheckOutcome out;
  const RingDesc& src = f.source();
  const RingDesc& tgt = f.target();
  if (src.rule) {
    const RewriteRule& r = *src.rule;
    ExpVec lhs(src.vars.size(), 0);
    lhs[r.var] = r.lhs_exp;
    LaurentPoly rel =
        LaurentPoly::monomial(src.tower, src.vars, lhs, Scalar::from_int(src.tower, 1))
            .sub(LaurentPoly::monomial(src.tower, src.vars, r.rhs,
                                       Scalar::from_int(src.tower, 1)));
    LaurentPoly image = f.apply(rel);
    if (!image.is_zero()) {
      out.detail = "defining relation " + rel.to_string() + " maps to " + image.to_string();
      return out;
    }
  }
  auto gens = src.generators();
  auto names = src.generator_names();
  for (size_t i = 0; i < gens.size(); ++i) {
    LaurentPoly img;
    try {
      img = f.apply(gens[i]);
    } catch (const error& e) {
      out.detail = "image of " + names[i] + " undefined: " + e.what();
      return out;
    }
    std::string offending;
    if (!tgt.contains(img, bound, &offending)) {
      out.detail = "image of " + names[i] + " = " + img.to_string() + " has monomial " +
                   offending + " outside " + tgt.name;
      return out;
    }
  }
  out.pass = true;
  out.detail = "all relations vanish; all generator images lie in " + tgt.name;
  return out;
}

CheckOutcome check_iso_nilpotent(const RingMap& f, const RingMap* reference) {
  CheckOutcome out;
  if (!f.source().same_underlying(f.target())) {
    out.detail = "source and target are not the same underlying ring";
    return out;
  }
  auto gens = f.source().generators();
  auto names = f.source().generator_names();
  for (size_t i = 0; i < gens.size(); ++i) {
    LaurentPoly img = f.apply(gens[i]);
    LaurentPoly expect = reference ? reference->apply(gens[i]) : gens[i];
    if (!(img.reduce_nilpotent() == expect.reduce_nilpotent())) {
      out.detail = "reduction differs on " + names[i] + ": " +
                   img.reduce_nilpotent().to_string() + " vs " +
                   expect.reduce_nilpotent().to_string();
      return out;
    }
  }
  out.pass = true;
  out.detail =
      "reduction mod nilpotents is the reference identification on all generators; the target "
      "is a free coefficient module";
  return out;
}

CheckOutcome diagram_commutes(const std::vector<const RingMap*>& path_a,
                              const std::vector<const RingMap*>& path_b,
                              const std::vector<LaurentPoly>& elements) {
  CheckOutcome out;
  auto run = [](const std::vector<const RingMap*>& path, LaurentPoly f) {
    for (const RingMap* m : path) f = m->apply(f);
    return f;
  };
  for (const auto& el : elements) {
    LaurentPoly a = run(path_a, el);
    LaurentPoly b = run(path_b, el);
    if (!(a == b)) {
      out.detail =
          "paths differ on " + el.to_string() + ": " + a.to_string() + " vs " + b.to_string();
      return out;
    }
  }
  out.pass = true;
  out.detail = "both paths agree on all listed elements";
  return out;
}

RingMap compose(const RingMap& g, const RingMap& f) { return g.compose_after(f); }

RingMap restrict_coefficients(const RingMap& f, const CoeffMap& pi) {
  return f.restrict_coefficients(pi);
}

}  // namespace defv

#include "defv/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace defv {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

int64_t igcd(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Extended gcd: returns g >= 0 and writes x, y with a*x + b*y = g.
int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  int64_t x1, y1;
  int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

int64_t cross2(const Vec& a, const Vec& b) {
  return checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]));
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

struct StateHash {
  size_t operator()(const std::pair<int, Vec>& k) const {
    size_t h = std::hash<int>()(k.first);
    for (int64_t x : k.second)
      h ^= std::hash<int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Subgroup of Z^d (d <= 2) generated by the given vectors, in staircase form:
// u with u[0] = dx (when dx != 0) and (0, dy) (when dy != 0).
struct Lattice {
  int dim = 0;
  int64_t dx = 0, dy = 0;
  Vec u;

  static Lattice span(int d, const std::vector<Vec>& vecs) {
    Lattice L;
    L.dim = d;
    if (d == 1) {
      for (const auto& v : vecs) L.dx = igcd(L.dx, v[0]);
      L.u = {L.dx};
      return L;
    }
    L.u = {0, 0};
    for (const auto& v : vecs) {
      if (v[0] == 0) continue;
      if (L.dx == 0) {
        L.u = v;
        L.dx = v[0];
        continue;
      }
      int64_t x, y;
      int64_t g = egcd(L.dx, v[0], x, y);
      L.u = {checked_add(checked_mul(x, L.u[0]), checked_mul(y, v[0])),
             checked_add(checked_mul(x, L.u[1]), checked_mul(y, v[1]))};
      L.dx = g;
    }
    if (L.dx < 0) {
      L.dx = -L.dx;
      L.u = {-L.u[0], -L.u[1]};
    }
    for (const auto& v : vecs) {
      int64_t rem_y = v[1];
      if (L.dx != 0) rem_y = checked_add(v[1], -checked_mul(v[0] / L.dx, L.u[1]));
      L.dy = igcd(L.dy, rem_y);
    }
    return L;
  }

  int rank() const { return (dx != 0 ? 1 : 0) + (dy != 0 ? 1 : 0); }

  bool contains(const Vec& v) const {
    if (dim == 1) return dx == 0 ? v[0] == 0 : v[0] % dx == 0;
    if (dx == 0) {
      if (v[0] != 0) return false;
      return dy == 0 ? v[1] == 0 : v[1] % dy == 0;
    }
    if (v[0] % dx != 0) return false;
    int64_t ry = checked_add(v[1], -checked_mul(v[0] / dx, u[1]));
    return dy == 0 ? ry == 0 : ry % dy == 0;
  }
};

// Bounded multiplicity search with exactness tracking. A negative answer is
// exact unless some branch was cut by the multiplicity cap alone.
struct MemberSearch {
  const MonomialAlgebra& alg;
  int64_t bound;
  bool capped = false;
  std::unordered_map<std::pair<int, Vec>, char, StateHash> failed;  // 1 exact, 0 capped
  static constexpr size_t kMemoCap = 1u << 21;

  MemberSearch(const MonomialAlgebra& a, int64_t b) : alg(a), bound(b) { precompute(); }

  struct Reach {
    std::vector<int64_t> lo_c, hi_c;
    std::vector<char> lo_unbounded, hi_unbounded;
  };
  std::vector<Reach> reach;

  void precompute() {
    int d = alg.rank;
    int n = static_cast<int>(alg.gens.size());
    reach.assign(n + 1, Reach{std::vector<int64_t>(d, 0), std::vector<int64_t>(d, 0),
                              std::vector<char>(d, 0), std::vector<char>(d, 0)});
    for (int i = n - 1; i >= 0; --i) {
      reach[i] = reach[i + 1];
      for (int k = 0; k < d; ++k) {
        int64_t g = alg.gens[i][k];
        int64_t cmin = alg.invertible[i] ? -bound : 0;
        int64_t lo = std::min(checked_mul(cmin, g), checked_mul(bound, g));
        int64_t hi = std::max(checked_mul(cmin, g), checked_mul(bound, g));
        reach[i].lo_c[k] = checked_add(reach[i].lo_c[k], std::min<int64_t>(lo, 0));
        reach[i].hi_c[k] = checked_add(reach[i].hi_c[k], std::max<int64_t>(hi, 0));
        if (g < 0 || (alg.invertible[i] && g != 0)) reach[i].lo_unbounded[k] = 1;
        if (g > 0 || (alg.invertible[i] && g != 0)) reach[i].hi_unbounded[k] = 1;
      }
    }
  }

  enum class Prune { None, Exact, Capped };
  Prune prune(int i, const Vec& r) const {
    for (int k = 0; k < alg.rank; ++k) {
      if (!reach[i].lo_unbounded[k] && r[k] < 0) return Prune::Exact;
      if (!reach[i].hi_unbounded[k] && r[k] > 0) return Prune::Exact;
      if (r[k] < reach[i].lo_c[k] || r[k] > reach[i].hi_c[k]) return Prune::Capped;
    }
    return Prune::None;
  }

  // One-generator tail: the multiplicity is forced coordinatewise.
  // Returns 1 found, 0 exact fail, -1 capped fail.
  int leaf1(int i, const Vec& r, std::vector<int64_t>& mults) {
    const Vec& g = alg.gens[i];
    int64_t c = 0;
    bool set = false;
    for (int k = 0; k < alg.rank; ++k) {
      if (g[k] == 0) {
        if (r[k] != 0) return 0;
      } else {
        if (r[k] % g[k] != 0) return 0;
        int64_t ck = r[k] / g[k];
        if (set && ck != c) return 0;
        c = ck;
        set = true;
      }
    }
    if (!set) return is_zero_vec(r) ? 1 : 0;
    if (c < 0 && !alg.invertible[i]) return 0;
    if (c < -bound || c > bound) return -1;
    mults[i] = c;
    return 1;
  }

  // Independent two-generator tail in rank 2: exact 2x2 solve.
  // Returns 1 found, 0 exact fail, -1 capped fail, -2 dependent (unhandled).
  int leaf2(int i, const Vec& r, std::vector<int64_t>& mults) {
    const Vec& a = alg.gens[i];
    const Vec& b = alg.gens[i + 1];
    int64_t det = cross2(a, b);
    if (det == 0) return -2;
    int64_t num1 = cross2(r, b);
    int64_t num2 = cross2(a, r);
    if (num1 % det != 0 || num2 % det != 0) return 0;
    int64_t c1 = num1 / det, c2 = num2 / det;
    if ((c1 < 0 && !alg.invertible[i]) || (c2 < 0 && !alg.invertible[i + 1])) return 0;
    if (c1 < -bound || c1 > bound || c2 < -bound || c2 > bound) return -1;
    mults[i] = c1;
    mults[i + 1] = c2;
    return 1;
  }

  bool dfs(int i, Vec r, std::vector<int64_t>& mults) {
    int n = static_cast<int>(alg.gens.size());
    if (i == n) return is_zero_vec(r);
    Prune p = prune(i, r);
    if (p == Prune::Exact) return false;
    if (p == Prune::Capped) {
      capped = true;
      return false;
    }
    auto key = std::make_pair(i, r);
    if (auto it = failed.find(key); it != failed.end()) {
      if (it->second == 0) capped = true;
      return false;
    }
    if (i == n - 1) {
      int rr = leaf1(i, r, mults);
      if (rr == 1) return true;
      if (rr == -1) capped = true;
      if (failed.size() < kMemoCap) failed.emplace(key, rr == 0 ? 1 : 0);
      return false;
    }
    if (alg.rank == 2 && i == n - 2) {
      int rr = leaf2(i, r, mults);
      if (rr != -2) {
        if (rr == 1) return true;
        if (rr == -1) capped = true;
        if (failed.size() < kMemoCap) failed.emplace(key, rr == 0 ? 1 : 0);
        return false;
      }
    }
    bool was_capped = capped;
    const Vec& g = alg.gens[i];
    // 1 found, 0 continue, 2 break ascending, 3 break descending
    auto try_c = [&](int64_t c) -> int {
      Vec r2(r.size());
      for (size_t k = 0; k < r.size(); ++k) r2[k] = checked_add(r[k], -checked_mul(c, g[k]));
      for (int k = 0; k < alg.rank; ++k) {
        bool below = !reach[i + 1].lo_unbounded[k] && r2[k] < 0;
        bool above = !reach[i + 1].hi_unbounded[k] && r2[k] > 0;
        if (below && g[k] >= 0) return c >= 0 ? 2 : 0;
        if (above && g[k] <= 0) return c >= 0 ? 2 : 0;
        if (below && g[k] <= 0 && c <= 0) return 3;
        if (above && g[k] >= 0 && c <= 0) return 3;
      }
      if (dfs(i + 1, std::move(r2), mults)) {
        mults[i] = c;
        return 1;
      }
      return 0;
    };
    bool open_up = true, open_down = alg.invertible[i];
    for (int64_t a = 0; a <= bound && (open_up || open_down); ++a) {
      if (open_up) {
        int rr = try_c(a);
        if (rr == 1) return true;
        if (rr == 2) open_up = false;
      }
      if (open_down && a > 0) {
        int rr = try_c(-a);
        if (rr == 1) return true;
        if (rr == 3) open_down = false;
      }
    }
    if (open_up || open_down) capped = true;  // the cap was the binding stop
    if (failed.size() < kMemoCap) failed.emplace(key, (capped && !was_capped) ? 0 : 1);
    return false;
  }
};

// Exact cone separation: a functional nonnegative on every generator (zero on
// invertible ones) and negative on v proves non-membership. In rank 2 the
// facet normals of the generated cone occur among rotated generators.
bool farkas_separated(const Vec& v, const MonomialAlgebra& alg) {
  std::vector<Vec> candidates;
  if (alg.rank == 1) {
    candidates = {{1}, {-1}};
  } else {
    candidates = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& g : alg.gens) {
      candidates.push_back({g[1], -g[0]});
      candidates.push_back({-g[1], g[0]});
    }
  }
  for (const auto& l : candidates) {
    if (is_zero_vec(l)) continue;
    bool ok = true;
    for (size_t i = 0; i < alg.gens.size() && ok; ++i) {
      int64_t d = 0;
      for (int k = 0; k < alg.rank; ++k) d = checked_add(d, checked_mul(l[k], alg.gens[i][k]));
      if (alg.invertible[i] ? d != 0 : d < 0) ok = false;
    }
    if (!ok) continue;
    int64_t dv = 0;
    for (int k = 0; k < alg.rank; ++k) dv = checked_add(dv, checked_mul(l[k], v[k]));
    if (dv < 0) return true;
  }
  return false;
}

}  // namespace

MonomialAlgebra MonomialAlgebra::make(int rank, std::vector<Vec> gens,
                                      std::vector<int> inv_indices) {
  require(rank >= 1 && rank <= 2, "supported lattice ranks are 1 and 2");
  require(!gens.empty(), "generator list must be nonempty");
  for (const auto& g : gens)
    require(static_cast<int>(g.size()) == rank, "generator rank mismatch");
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      require(gens[i] != gens[j], "duplicate generator");
  MonomialAlgebra a;
  a.rank = rank;
  a.gens = std::move(gens);
  a.invertible.assign(a.gens.size(), false);
  for (int i : inv_indices) {
    require(i >= 0 && i < static_cast<int>(a.gens.size()), "invertible index out of range");
    a.invertible[i] = true;
  }
  return a;
}

std::string MonomialAlgebra::describe(const std::vector<std::string>& var_names) const {
  std::ostringstream os;
  os << "k[";
  auto mono = [&](const Vec& g) {
    std::ostringstream m;
    bool any = false;
    for (int k = 0; k < rank; ++k) {
      if (g[k] == 0) continue;
      if (any) m << "*";
      any = true;
      m << var_names[k];
      if (g[k] != 1) m << "^" << g[k];
    }
    return any ? m.str() : std::string("1");
  };
  bool first = true;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!first) os << ", ";
    first = false;
    os << mono(gens[i]);
    if (invertible[i]) {
      Vec n(gens[i]);
      for (auto& x : n) x = -x;
      os << ", " << mono(n);
    }
  }
  os << "]";
  return os.str();
}

Vec MembershipWitness::recombine(const MonomialAlgebra& alg) const {
  Vec v(alg.rank, 0);
  for (size_t i = 0; i < mults.size(); ++i)
    for (int k = 0; k < alg.rank; ++k)
      v[k] = checked_add(v[k], checked_mul(mults[i], alg.gens[i][k]));
  return v;
}

bool numerical_member(const std::vector<int64_t>& gens, int64_t v) {
  if (v == 0) return true;
  bool has_pos = std::any_of(gens.begin(), gens.end(), [](int64_t g) { return g > 0; });
  bool has_neg = std::any_of(gens.begin(), gens.end(), [](int64_t g) { return g < 0; });
  require(!(has_pos && has_neg), "numerical_member expects one-signed generators");
  int64_t sign = has_neg ? -1 : 1;
  int64_t target = sign * v;
  if (target < 0) return false;
  std::vector<char> reach(static_cast<size_t>(target) + 1, 0);
  reach[0] = 1;
  for (int64_t x = 1; x <= target; ++x)
    for (int64_t g : gens) {
      int64_t gp = sign * g;
      if (gp > 0 && gp <= x && reach[x - gp]) {
        reach[x] = 1;
        break;
      }
    }
  return reach[target] != 0;
}

int64_t conductor(int64_t g1, int64_t g2) {
  require(g1 > 0 && g2 > 0, "conductor needs positive generators");
  require(igcd(g1, g2) == 1, "conductor formula needs coprime generators");
  return g1 * g2 - g1 - g2 + 1;
}

MembershipResult semigroup_member(const Vec& v, const MonomialAlgebra& alg, int64_t bound) {
  require(static_cast<int>(v.size()) == alg.rank, "query vector rank mismatch");
  require(bound >= 1, "bound must be positive");
  MembershipResult res;
  if (is_zero_vec(v)) {
    res.witness = MembershipWitness{std::vector<int64_t>(alg.gens.size(), 0)};
    return res;
  }

  // Rank-1 one-signed semigroups: exact sieve with witness reconstruction.
  bool any_inv =
      std::any_of(alg.invertible.begin(), alg.invertible.end(), [](bool b) { return b; });
  if (alg.rank == 1 && !any_inv) {
    bool has_pos = false, has_neg = false;
    for (const auto& g : alg.gens) {
      if (g[0] > 0) has_pos = true;
      if (g[0] < 0) has_neg = true;
    }
    if (!(has_pos && has_neg)) {
      int64_t sign = has_neg ? -1 : 1;
      int64_t target = sign * v[0];
      if (target < 0) return res;  // exact non-member
      std::vector<int> parent(static_cast<size_t>(target) + 1, -1);
      std::vector<char> reach(static_cast<size_t>(target) + 1, 0);
      reach[0] = 1;
      for (int64_t x = 1; x <= target; ++x)
        for (size_t gi = 0; gi < alg.gens.size(); ++gi) {
          int64_t gp = sign * alg.gens[gi][0];
          if (gp > 0 && gp <= x && reach[x - gp]) {
            reach[x] = 1;
            parent[x] = static_cast<int>(gi);
            break;
          }
        }
      if (!reach[target]) return res;  // exact non-member
      MembershipWitness w{std::vector<int64_t>(alg.gens.size(), 0)};
      for (int64_t x = target; x > 0;) {
        int gi = parent[x];
        ++w.mults[gi];
        x -= sign * alg.gens[gi][0];
      }
      res.witness = std::move(w);
      return res;
    }
  }

  // Exact negative certificates before searching.
  if (!Lattice::span(alg.rank, alg.gens).contains(v)) return res;
  if (farkas_separated(v, alg)) return res;

  MemberSearch search(alg, bound);
  std::vector<int64_t> mults(alg.gens.size(), 0);
  if (search.dfs(0, v, mults)) {
    res.witness = MembershipWitness{std::move(mults)};
    return res;
  }
  res.exact = !search.capped;
  return res;
}

bool algebra_subset(const MonomialAlgebra& sub, const MonomialAlgebra& super, int64_t bound) {
  require(sub.rank == super.rank, "rank mismatch");
  for (size_t i = 0; i < sub.gens.size(); ++i) {
    if (!semigroup_member(sub.gens[i], super, bound).found()) return false;
    if (sub.invertible[i]) {
      Vec n(sub.gens[i]);
      for (auto& x : n) x = -x;
      if (!semigroup_member(n, super, bound).found()) return false;
    }
  }
  return true;
}

bool algebra_equal(const MonomialAlgebra& a, const MonomialAlgebra& b, int64_t bound) {
  return algebra_subset(a, b, bound) && algebra_subset(b, a, bound);
}

bool localization_check(const MonomialAlgebra& loc, const MonomialAlgebra& alg,
                        const Vec& inverted, int64_t bound) {
  require(semigroup_member(inverted, alg, bound).found(),
          "element to invert does not lie in the algebra");
  MonomialAlgebra localized = alg;
  auto it = std::find(localized.gens.begin(), localized.gens.end(), inverted);
  if (it != localized.gens.end()) {
    localized.invertible[it - localized.gens.begin()] = true;
  } else {
    localized.gens.push_back(inverted);
    localized.invertible.push_back(true);
  }
  return algebra_equal(loc, localized, bound);
}

std::vector<Vec> module_intersection_basis(const Vec& shift, const MonomialAlgebra& mod_alg,
                                           const MonomialAlgebra& ring_alg, const Box& box,
                                           int64_t bound) {
  require(mod_alg.rank == ring_alg.rank, "rank mismatch");
  require(box.lo.size() == box.hi.size() && static_cast<int>(box.lo.size()) == ring_alg.rank,
          "box rank mismatch");
  for (size_t k = 0; k < box.lo.size(); ++k)
    require(box.lo[k] <= box.hi[k], "empty box");
  std::vector<Vec> basis;
  Vec v = box.lo;
  while (true) {
    Vec diff(v.size());
    for (size_t k = 0; k < v.size(); ++k) diff[k] = checked_add(v[k], -shift[k]);
    if (semigroup_member(diff, mod_alg, bound).found() &&
        semigroup_member(v, ring_alg, bound).found())
      basis.push_back(v);
    int k = static_cast<int>(v.size()) - 1;
    while (k >= 0 && v[k] == box.hi[k]) {
      v[k] = box.lo[k];
      --k;
    }
    if (k < 0) break;
    ++v[k];
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

SemigroupStructure semigroup_structure(const MonomialAlgebra& alg, int64_t bound) {
  require(alg.rank <= 2, "semigroup structure supported in rank <= 2");
  SemigroupStructure st;
  std::ostringstream detail;

  // Units among the generators. In a commutative monoid a sum is invertible
  // only if every summand is, so the unit group is generated by the
  // generators g with -g in the semigroup.
  std::vector<Vec> unit_gens;
  std::vector<size_t> non_unit;
  for (size_t i = 0; i < alg.gens.size(); ++i) {
    if (is_zero_vec(alg.gens[i])) continue;
    bool unit = alg.invertible[i];
    if (!unit) {
      Vec n(alg.gens[i]);
      for (auto& x : n) x = -x;
      MembershipResult r = semigroup_member(n, alg, bound);
      unit = r.found();
      if (!unit && !r.exact) {
        st.exact = false;
        detail << "unit status of generator " << i << " unresolved within bound; ";
      }
    }
    if (unit)
      unit_gens.push_back(alg.gens[i]);
    else
      non_unit.push_back(i);
  }
  Lattice U = Lattice::span(
      alg.rank, unit_gens.empty() ? std::vector<Vec>{Vec(alg.rank, 0)} : unit_gens);
  st.unit_rank = unit_gens.empty() ? 0 : U.rank();
  if (st.unit_rank >= 1 && U.dx != 0) st.unit_basis.push_back(U.u);
  if (alg.rank == 2 && U.dy != 0) st.unit_basis.push_back({0, U.dy});

  if (st.unit_rank == alg.rank) {
    // Full-rank unit lattice: any remaining generator class is torsion in the
    // quotient, hence itself a unit; failing to see that means the bound was
    // too small. Otherwise the semigroup is a group, i.e. free with a = 0.
    if (!non_unit.empty()) {
      st.exact = false;
      detail << non_unit.size() << " generator(s) unresolved at full unit rank; ";
      st.is_free = false;
    } else {
      st.pointed_rank = 0;
      st.is_free = true;
    }
    st.detail = detail.str();
    return st;
  }

  if (alg.rank == 1 || st.unit_rank == 1) {
    // Quotient by the unit line, coordinatized by the cross product with a
    // primitive direction (rank 2) or the values themselves (rank 1).
    std::vector<int64_t> coords;
    std::vector<size_t> coord_gen;
    if (alg.rank == 1) {
      for (size_t i : non_unit) {
        coords.push_back(alg.gens[i][0]);
        coord_gen.push_back(i);
      }
    } else {
      Vec u = st.unit_rank == 1 ? st.unit_basis[0] : Vec{0, 0};
      if (st.unit_rank == 1 && igcd(u[0], u[1]) > 1) {
        st.exact = false;
        st.detail = detail.str() + "non-primitive unit lattice (torsion quotient unsupported)";
        return st;
      }
      for (size_t i : non_unit) {
        coords.push_back(st.unit_rank == 1 ? cross2(u, alg.gens[i]) : 0);
        coord_gen.push_back(i);
      }
    }
    bool pos = std::any_of(coords.begin(), coords.end(), [](int64_t c) { return c > 0; });
    bool neg = std::any_of(coords.begin(), coords.end(), [](int64_t c) { return c < 0; });
    if (pos && neg) {
      st.exact = false;
      st.detail = detail.str() + "mixed signs in the pointed quotient: undetected units";
      return st;
    }
    int64_t sign = neg ? -1 : 1;
    std::vector<int64_t> vals;
    for (int64_t c : coords) vals.push_back(sign * c);
    for (size_t j = 0; j < vals.size(); ++j)
      if (vals[j] == 0) {
        st.exact = false;
        detail << "generator " << coord_gen[j] << " lies on the unit line unclassified; ";
      }
    st.pointed_rank =
        std::any_of(vals.begin(), vals.end(), [](int64_t v) { return v > 0; }) ? 1 : 0;
    std::vector<int64_t> distinct;
    for (int64_t v : vals)
      if (v > 0 && std::find(distinct.begin(), distinct.end(), v) == distinct.end())
        distinct.push_back(v);
    std::sort(distinct.begin(), distinct.end());
    for (int64_t v : distinct) {
      bool decomposable = false;
      for (int64_t w : distinct) {
        if (w >= v) break;
        if (numerical_member(distinct, v - w)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        for (size_t i = 0; i < vals.size(); ++i)
          if (vals[i] == v) {
            st.pointed_min_gens.push_back(alg.gens[coord_gen[i]]);
            break;
          }
      }
    }
    st.is_free = static_cast<int>(st.pointed_min_gens.size()) == st.pointed_rank;
    st.detail = detail.str();
    return st;
  }

  // No units: pointed semigroup in rank 2. Minimal generators are the
  // generators that do not split as g = h + s with h a generator, s nonzero.
  std::vector<Vec> pointed;
  for (size_t i : non_unit) pointed.push_back(alg.gens[i]);
  Lattice span = Lattice::span(alg.rank, pointed.empty() ? std::vector<Vec>{Vec(alg.rank, 0)}
                                                         : pointed);
  st.pointed_rank = pointed.empty() ? 0 : span.rank();
  for (const Vec& g : pointed) {
    bool decomposable = false;
    for (const Vec& h : pointed) {
      Vec diff(g.size());
      for (size_t k = 0; k < g.size(); ++k) diff[k] = checked_add(g[k], -h[k]);
      if (is_zero_vec(diff)) continue;
      MembershipResult r = semigroup_member(diff, alg, bound);
      if (r.found()) {
        decomposable = true;
        break;
      }
      if (!r.exact) {
        st.exact = false;
        detail << "minimality of a generator unresolved within bound; ";
      }
    }
    if (!decomposable) st.pointed_min_gens.push_back(g);
  }
  st.is_free = static_cast<int>(st.pointed_min_gens.size()) == st.pointed_rank;
  st.detail = detail.str();
  return st;
}

std::set<int64_t> achievable_exponents(const MonomialAlgebra& alg, int64_t shift, int direction,
                                       int64_t window_lo, int64_t window_hi) {
  require(alg.rank == 1, "achievable_exponents is a rank-1 operation");
  require(direction == 1 || direction == -1, "direction must be +1 or -1");
  std::vector<int64_t> gens;
  for (const auto& g : alg.gens) gens.push_back(g[0]);
  std::set<int64_t> out;
  for (int64_t e = window_lo; e <= window_hi; ++e) {
    int64_t r = direction * checked_add(e, -shift);
    if (r < 0) continue;
    if (numerical_member(gens, r)) out.insert(e);
  }
  return out;
}

}  // namespace defv

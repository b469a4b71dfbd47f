// Relative root data of a standard Levi subgroup M = M_theta: the reduced
// relative roots Phi_M, the relative Weyl group W_M realized by W^M-minimal
// coset representatives, the reflection part Phi_M^0 and the splitting
// W_M = W_M^0 x| W_M^1.

#ifndef RELWEYL_LEVI_HPP_
#define RELWEYL_LEVI_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "rootsys.hpp"
#include "subgroup.hpp"

namespace relweyl {

struct LeviDatum {
  Ambient ambient;
  std::vector<int> theta; // sorted, 0-based simple-root indices

  const RootSystem& roots() const { return *ambient.roots; }
  const WeylGroup& weyl() const { return *ambient.weyl; }
  bool contains(int i) const { return std::binary_search(theta.begin(), theta.end(), i); }
  bool in_levi(std::size_t root) const { return roots().supported_in(root, theta); }
};

inline LeviDatum make_levi(Ambient ambient, std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  if (std::adjacent_find(theta.begin(), theta.end()) != theta.end())
    impl::reject("Levi subset lists a simple root twice");
  for (int i : theta)
    if (i < 0 || i >= ambient.roots->rank())
      impl::reject("Levi subset index " + std::to_string(i + 1) + " out of range 1.." +
                   std::to_string(ambient.roots->rank()));
  return {std::move(ambient), std::move(theta)};
}

struct RelativeRoot {
  IVector coords;                 // restriction: coefficients on simple roots outside theta
  std::vector<std::size_t> fiber; // absolute roots restricting into this ray
  std::size_t representative = 0; // fiber root whose restriction equals coords
  bool positive = true;
  QVector projection; // orthogonal projection to a_M^*, simple-root basis
  Rational norm;      // (projection, projection)
};

struct RelativeData {
  LeviDatum levi;
  std::vector<int> outside; // simple roots not in theta
  std::vector<RelativeRoot> roots;
  std::vector<int> of_root; // absolute root -> relative root index, -1 inside M

  // Filled by reflections_in_WM and delta_M_0.
  std::vector<std::size_t> phi0;               // both signs, sorted
  std::map<std::size_t, ElementId> reflection; // every member of phi0 -> w_alpha
  std::vector<std::size_t> delta0;

  std::size_t num_positive() const { return roots.size() / 2; }
  bool is_positive(std::size_t a) const { return a < num_positive(); }
  std::size_t negate(std::size_t a) const {
    return a < num_positive() ? a + num_positive() : a - num_positive();
  }
  std::size_t positive_part(std::size_t a) const { return is_positive(a) ? a : negate(a); }
  bool in_phi0(std::size_t a) const { return std::binary_search(phi0.begin(), phi0.end(), a); }
  std::size_t dim() const { return outside.size(); }

  std::optional<std::size_t> find(const IVector& coords) const {
    for (std::size_t a = 0; a < roots.size(); ++a)
      if (roots[a].coords == coords)
        return a;
    return std::nullopt;
  }

  // Relative simple: the fiber meets a simple root outside theta.
  bool is_relative_simple(std::size_t a) const {
    if (!is_positive(a))
      return false;
    for (std::size_t b : roots[a].fiber)
      if (b < std::size_t(levi.roots().rank()))
        return true;
    return false;
  }
};

inline IVector restriction(const LeviDatum& levi, const std::vector<int>& outside,
                           std::size_t root) {
  IVector r(outside.size());
  const auto& v = levi.roots().root(root);
  for (std::size_t k = 0; k < outside.size(); ++k)
    r[k] = v[outside[k]];
  return r;
}

inline RelativeData relative_roots(const LeviDatum& levi) {
  const RootSystem& rs = levi.roots();
  RelativeData rd;
  rd.levi = levi;
  for (int j = 0; j < rs.rank(); ++j)
    if (!levi.contains(j))
      rd.outside.push_back(j);

  struct Ray {
    int multiple = 0;
    std::size_t rep = 0;
    std::vector<std::size_t> fiber;
  };
  std::map<IVector, Ray> rays;
  for (std::size_t b = 0; b < rs.num_positive(); ++b) {
    if (levi.in_levi(b))
      continue;
    IVector r = restriction(levi, rd.outside, b);
    int g = 0;
    for (int x : r)
      g = std::gcd(g, x);
    IVector dir(r);
    for (auto& x : dir)
      x /= g;
    auto& ray = rays[dir];
    if (ray.fiber.empty() || g < ray.multiple) {
      ray.multiple = g;
      ray.rep = b;
    }
    ray.fiber.push_back(b);
  }

  std::vector<RelativeRoot> pos;
  for (auto& [dir, ray] : rays) {
    RelativeRoot a;
    a.coords = dir;
    for (auto& x : a.coords)
      x *= ray.multiple;
    a.fiber = ray.fiber;
    a.representative = ray.rep;
    pos.push_back(std::move(a));
  }
  std::sort(pos.begin(), pos.end(), [](const RelativeRoot& a, const RelativeRoot& b) {
    int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
    int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
    if (ha != hb)
      return ha < hb;
    return a.coords > b.coords;
  });

  // Projection onto the orthogonal complement of span(theta).
  const std::size_t t = levi.theta.size();
  QMatrix gram_theta(t, QVector(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      gram_theta[i][j] = rs.form()[levi.theta[i]][levi.theta[j]];
  auto project = [&](std::size_t root) {
    QVector v = to_q(rs.root(root));
    if (t == 0)
      return v;
    QVector rhs(t);
    for (std::size_t i = 0; i < t; ++i) {
      QVector e(rs.rank(), Rational(0));
      e[levi.theta[i]] = 1;
      rhs[i] = rs.inner(v, e);
    }
    auto x = solve(gram_theta, rhs);
    if (!x)
      impl::broken("Gram matrix of a Levi subset is singular");
    for (std::size_t i = 0; i < t; ++i)
      v[levi.theta[i]] -= (*x)[i];
    return v;
  };

  const std::size_t np = pos.size();
  rd.roots.resize(2 * np);
  for (std::size_t k = 0; k < np; ++k) {
    auto& a = pos[k];
    a.positive = true;
    a.projection = project(a.representative);
    a.norm = rs.inner(a.projection, a.projection);
    RelativeRoot n;
    n.coords = a.coords;
    for (auto& x : n.coords)
      x = -x;
    for (std::size_t b : a.fiber)
      n.fiber.push_back(rs.negate(b));
    n.representative = rs.negate(a.representative);
    n.positive = false;
    n.projection = a.projection;
    for (auto& x : n.projection)
      x = -x;
    n.norm = a.norm;
    rd.roots[k] = std::move(a);
    rd.roots[k + np] = std::move(n);
  }
  rd.of_root.assign(rs.num_roots(), -1);
  for (std::size_t a = 0; a < rd.roots.size(); ++a)
    for (std::size_t b : rd.roots[a].fiber)
      rd.of_root[b] = static_cast<int>(a);
  return rd;
}

struct RelativeWeylGroup {
  Subgroup reps;
  std::vector<int> position;                   // ElementId -> index in reps, or -1
  std::vector<std::vector<std::uint32_t>> act; // [rep index][relative root]
  std::vector<IMatrix> matrix;                 // action on a_M^* in relative coordinates

  // Filled by decompose_WM.
  Subgroup small;
  Subgroup complement;
  SemidirectCheck split;
  std::vector<ElementId> small_gens;

  bool contains(ElementId w) const { return position[w] >= 0; }
  std::size_t act_on(ElementId w, std::size_t a) const {
    int p = position[w];
    if (p < 0)
      impl::reject("Weyl element does not normalize the Levi subgroup");
    return act[p][a];
  }
  const IMatrix& matrix_of(ElementId w) const { return matrix[position[w]]; }
};

// reps = { w in W : w(theta) = theta, w((Phi^M)^+) > 0 }.
inline RelativeWeylGroup relative_weyl_group(const LeviDatum& levi, const RelativeData& rd) {
  const WeylGroup& w = levi.weyl();
  const RootSystem& rs = levi.roots();
  RelativeWeylGroup wm;
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < w.order(); ++x) {
    bool keep = true;
    for (int i : levi.theta) {
      std::size_t img = w.image(x, i);
      if (img >= std::size_t(rs.rank()) || !levi.contains(int(img))) {
        keep = false;
        break;
      }
    }
    if (keep)
      reps.push_back(x);
  }
  wm.reps = Subgroup(reps);
  wm.position.assign(w.order(), -1);
  const std::size_t d = rd.dim();
  for (std::size_t p = 0; p < wm.reps.order(); ++p) {
    ElementId x = wm.reps.elements()[p];
    wm.position[x] = int(p);
    std::vector<std::uint32_t> act(rd.roots.size());
    for (std::size_t a = 0; a < rd.roots.size(); ++a) {
      std::size_t img = w.image(x, rd.roots[a].representative);
      int b = rd.of_root[img];
      if (b < 0 || restriction(levi, rd.outside, img) != rd.roots[b].coords)
        impl::broken("relative Weyl element does not permute reduced relative roots");
      act[a] = std::uint32_t(b);
    }
    wm.act.push_back(std::move(act));
    IMatrix m(d, IVector(d));
    for (std::size_t c = 0; c < d; ++c) {
      IVector col = restriction(levi, rd.outside, w.image(x, rd.outside[c]));
      for (std::size_t r = 0; r < d; ++r)
        m[r][c] = col[r];
    }
    wm.matrix.push_back(std::move(m));
  }
  return wm;
}

namespace impl {

inline IMatrix mat_mul(const IMatrix& a, const IMatrix& b) {
  const std::size_t n = a.size();
  IMatrix c(n, IVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IMatrix identity_matrix(std::size_t n) {
  IMatrix m(n, IVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

inline IVector mat_vec(const IMatrix& m, const IVector& v) {
  IVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] += m[i][j] * v[j];
  return out;
}

inline std::string word_string(const IVector& word) {
  std::string s = "[";
  for (std::size_t k = 0; k < word.size(); ++k)
    s += (k ? "," : "") + std::to_string(word[k] + 1);
  return s + "]";
}

} // namespace impl

// Scans W_M for elements acting on a_M^* as reflections. Each such element
// negates a relative root alpha, which is then a member of Phi_M^0 with
// w_alpha = that element. Also asserts that W_M acts faithfully on a_M^*.
inline const std::map<std::size_t, ElementId>& reflections_in_WM(RelativeData& rd,
                                                                 const RelativeWeylGroup& wm) {
  const WeylGroup& w = rd.levi.weyl();
  const std::size_t d = rd.dim();
  const IMatrix one = impl::identity_matrix(d);
  rd.reflection.clear();
  for (std::size_t p = 0; p < wm.reps.order(); ++p) {
    ElementId x = wm.reps.elements()[p];
    const IMatrix& m = wm.matrix[p];
    if (m == one) {
      if (x != w.identity())
        impl::broken("W_M does not act faithfully on a_M^*: kernel contains " +
                     impl::word_string(w.word(x)));
      continue;
    }
    if (impl::mat_mul(m, m) != one)
      continue;
    QMatrix diff(d, QVector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        diff[i][j] = m[i][j] - one[i][j];
    if (rank_of(diff) != 1)
      continue;
    for (std::size_t a = 0; a < rd.num_positive(); ++a) {
      IVector img = impl::mat_vec(m, rd.roots[a].coords);
      IVector neg(rd.roots[a].coords);
      for (auto& v : neg)
        v = -v;
      if (img == neg) {
        if (rd.reflection.count(a))
          impl::broken("two elements of W_M reflect the same relative root");
        rd.reflection[a] = x;
        rd.reflection[rd.negate(a)] = x;
      }
    }
  }
  rd.phi0.clear();
  for (auto& [a, x] : rd.reflection)
    rd.phi0.push_back(a);
  return rd.reflection;
}

// omega_alpha = w_0^{M_alpha} w_0^M for a relative simple root alpha.
inline ElementId relative_reflection_simple(const RelativeData& rd, std::size_t alpha) {
  if (!rd.is_relative_simple(alpha))
    impl::reject("relative root is not relative simple");
  const LeviDatum& levi = rd.levi;
  int j = -1;
  for (std::size_t b : rd.roots[alpha].fiber)
    if (b < std::size_t(levi.roots().rank()))
      j = int(b);
  std::vector<int> big = levi.theta;
  big.push_back(j);
  std::sort(big.begin(), big.end());
  const WeylGroup& w = levi.weyl();
  return w.multiply(longest_element(w, big), longest_element(w, levi.theta));
}

// Positive roots of a reflection-closed subset S of Phi_M^0 that are simple:
// alpha is simple iff w_alpha makes exactly one positive root of S negative.
inline std::vector<std::size_t> simple_system(const RelativeData& rd, const RelativeWeylGroup& wm,
                                              const std::vector<std::size_t>& set) {
  std::vector<std::size_t> out;
  for (std::size_t a : set) {
    if (!rd.is_positive(a))
      continue;
    ElementId s = rd.reflection.at(a);
    int flipped = 0;
    for (std::size_t b : set)
      if (rd.is_positive(b) && !rd.is_positive(wm.act_on(s, b)))
        ++flipped;
    if (flipped == 1)
      out.push_back(a);
  }
  return out;
}

inline const std::vector<std::size_t>& delta_M_0(RelativeData& rd, const RelativeWeylGroup& wm) {
  rd.delta0 = simple_system(rd, wm, rd.phi0);
  return rd.delta0;
}

// Splitting of `group` (a subgroup of W_M normalizing `set`) into the
// subgroup generated by the reflections of `set` and the complement fixing
// the positive part of `set`.
struct ReflectionSplit {
  Subgroup reflection_part;
  Subgroup complement;
  std::vector<ElementId> gens;
  SemidirectCheck check;
};

inline ReflectionSplit split_by_reflections(const RelativeData& rd, const RelativeWeylGroup& wm,
                                            const Subgroup& group,
                                            const std::vector<std::size_t>& set) {
  const WeylGroup& w = rd.levi.weyl();
  ReflectionSplit s;
  for (std::size_t a : set)
    if (rd.is_positive(a))
      s.gens.push_back(rd.reflection.at(a));
  s.reflection_part = generate_subgroup(w, s.gens);
  std::vector<ElementId> comp;
  for (ElementId x : group) {
    bool keep = true;
    for (std::size_t a : set)
      if (rd.is_positive(a) && !rd.is_positive(wm.act_on(x, a))) {
        keep = false;
        break;
      }
    if (keep)
      comp.push_back(x);
  }
  s.complement = Subgroup(std::move(comp));
  s.check = check_semidirect(w, group, s.reflection_part, s.gens, s.complement);
  return s;
}

// W_M^0 = <w_alpha : alpha in Phi_M^0>, W_M^1 = { w : w((Phi_M^0)^+) > 0 }.
inline void decompose_WM(RelativeWeylGroup& wm, const RelativeData& rd) {
  auto s = split_by_reflections(rd, wm, wm.reps, rd.phi0);
  if (!s.check.ok())
    impl::broken("W_M does not split as W_M^0 x| W_M^1");
  wm.small = std::move(s.reflection_part);
  wm.complement = std::move(s.complement);
  wm.small_gens = std::move(s.gens);
  wm.split = std::move(s.check);
}

struct LeviAnalysis {
  RelativeData rd;
  RelativeWeylGroup wm;
};

inline LeviAnalysis analyze_levi(const LeviDatum& levi) {
  LeviAnalysis la{relative_roots(levi), {}};
  la.wm = relative_weyl_group(levi, la.rd);
  reflections_in_WM(la.rd, la.wm);
  delta_M_0(la.rd, la.wm);
  decompose_WM(la.wm, la.rd);
  return la;
}

// Subroot-system checks on Phi_M^0. Returns human-readable failures.
inline std::vector<std::string> check_subroot_system(const RelativeData& rd,
                                                     const RelativeWeylGroup& wm) {
  const WeylGroup& w = rd.levi.weyl();
  std::vector<std::string> bad;
  for (ElementId x : wm.reps)
    for (std::size_t a : rd.phi0) {
      std::size_t b = wm.act_on(x, a);
      if (!rd.in_phi0(b)) {
        bad.push_back("Phi_M^0 not W_M-stable at " + impl::word_string(w.word(x)));
        continue;
      }
      if (w.conjugate(x, rd.reflection.at(a)) != rd.reflection.at(b))
        bad.push_back("w w_a w^-1 != w_{w.a} at " + impl::word_string(w.word(x)));
    }
  for (std::size_t a : rd.phi0) {
    const auto& ra = rd.roots[a];
    for (std::size_t b : rd.phi0) {
      std::size_t img = wm.act_on(rd.reflection.at(a), b);
      if (!rd.in_phi0(img)) {
        bad.push_back("Phi_M^0 not closed under its reflections");
        continue;
      }
      // Orthogonal reflection formula in a_M^*.
      const auto& rb = rd.roots[b];
      Rational c = 2 * rd.levi.roots().inner(rb.projection, ra.projection) / ra.norm;
      for (std::size_t k = 0; k < rd.dim(); ++k)
        if (Rational(rd.roots[img].coords[k]) != rb.coords[k] - c * ra.coords[k]) {
          bad.push_back("w_alpha is not the orthogonal reflection on a_M^*");
          break;
        }
    }
  }
  for (std::size_t a : rd.phi0)
    if (!wm.small.contains(rd.reflection.at(a)))
      bad.push_back("a reflection of Phi_M^0 lies outside W_M^0");
  return bad;
}

} // namespace relweyl

#endif // RELWEYL_LEVI_HPP_

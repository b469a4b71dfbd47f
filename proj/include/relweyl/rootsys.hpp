// Finite crystallographic root systems and their Weyl groups, realized as
// permutation groups on the signed root list.
//
// Convention: the Cartan matrix entry A(i, j) is <alpha_j, alpha_i^vee>.
// Simple roots are numbered as in Bourbaki; in B_n, F_4 and G_2 the short
// simple roots are the last ones.

#ifndef RELWEYL_ROOTSYS_HPP_
#define RELWEYL_ROOTSYS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace relweyl {

struct CartanDatum {
  char family = 'A';
  int rank = 0;
  IMatrix matrix;

  int operator()(int i, int j) const { return matrix[i][j]; }
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

inline bool valid_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

inline CartanDatum build_cartan(char family, int rank) {
  if (!valid_type(family, rank))
    impl::reject("invalid Cartan type " + std::string(1, family) + std::to_string(rank) +
                 ": rank outside the range allowed for the family");
  CartanDatum c{family, rank, IMatrix(rank, IVector(rank, 0))};
  auto& a = c.matrix;
  for (int i = 0; i < rank; ++i)
    a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i)
        link(i, i + 1);
      break;
    case 'B': // alpha_n short
      for (int i = 0; i + 1 < rank; ++i)
        link(i, i + 1);
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C': // alpha_n long
      for (int i = 0; i + 1 < rank; ++i)
        link(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < rank; ++i)
        link(i, i + 1);
      link(rank - 3, rank - 1);
      break;
    case 'E': // 1-3-4-5-6-..., 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < rank; ++i)
        link(i, i + 1);
      break;
    case 'F': // 1-2=>3-4
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return c;
}

// Closed-form |W| for an irreducible type.
inline std::uint64_t weyl_order_formula(char family, int rank) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
      f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (family) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << rank) * fact(rank);
    case 'D': return (std::uint64_t{1} << (rank - 1)) * fact(rank);
    case 'E': return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

// Roots are addressed by index: [0, npos) are the positive roots ordered by
// height and then by decreasing coordinates (so index i < rank is alpha_i),
// [npos, 2 npos) their negatives in the same order.
class RootSystem {
public:
  const CartanDatum& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }
  std::size_t num_positive() const { return npos_; }
  std::size_t num_roots() const { return 2 * npos_; }

  const IVector& root(std::size_t idx) const { return roots_[idx]; }
  bool is_positive(std::size_t idx) const { return idx < npos_; }
  std::size_t negate(std::size_t idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  std::size_t simple(int i) const { return static_cast<std::size_t>(i); }

  std::optional<std::size_t> find(const IVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const IVector& v) const {
    auto idx = find(v);
    if (!idx)
      impl::reject("vector is not a root of " + cartan_.name());
    return *idx;
  }

  int height(std::size_t idx) const {
    return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
  }

  // Coroot of a root in the basis of simple coroots (integral).
  const IVector& coroot(std::size_t idx) const { return coroots_[idx]; }
  QVector coroot_q(std::size_t idx) const { return to_q(coroots_[idx]); }

  // W-invariant form on the root span, in the simple-root basis.
  const QMatrix& form() const { return gram_; }
  const QVector& simple_lengths() const { return len2_; }

  Rational inner(const QVector& x, const QVector& y) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (x[i] == 0)
        continue;
      for (int j = 0; j < rank(); ++j)
        s += x[i] * gram_[i][j] * y[j];
    }
    return s;
  }

  // <beta, alpha^vee>
  int pairing(std::size_t beta, std::size_t alpha) const {
    const auto& b = roots_[beta];
    const auto& c = coroots_[alpha];
    int s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        s += c[i] * cartan_(i, j) * b[j];
    return s;
  }

  int pairing(const IVector& beta, const IVector& alpha) const {
    return pairing(index_of(beta), index_of(alpha));
  }

  // <v, alpha_i^vee> for a rational vector in the simple-root basis.
  Rational pairing_simple(const QVector& v, int i) const {
    Rational s = 0;
    for (int j = 0; j < rank(); ++j)
      s += v[j] * cartan_(i, j);
    return s;
  }

  const std::vector<std::uint16_t>& simple_reflection(int i) const { return sref_[i]; }

  // Roots whose support lies in `theta`.
  bool supported_in(std::size_t idx, const std::vector<int>& theta) const {
    const auto& v = roots_[idx];
    for (int j = 0; j < rank(); ++j)
      if (v[j] != 0 && !std::binary_search(theta.begin(), theta.end(), j))
        return false;
    return true;
  }

private:
  friend RootSystem build_root_system(const CartanDatum&, std::size_t);

  CartanDatum cartan_;
  std::size_t npos_ = 0;
  std::vector<IVector> roots_;
  std::vector<IVector> coroots_;
  std::map<IVector, std::size_t> index_;
  QMatrix gram_;
  QVector len2_;
  std::vector<std::vector<std::uint16_t>> sref_;
};

inline RootSystem build_root_system(const CartanDatum& cartan, std::size_t root_bound = 10000) {
  const int r = cartan.rank;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j ? cartan(i, j) != 2 : cartan(i, j) > 0)
        impl::reject("not a Cartan matrix: bad entry at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        impl::reject("not a Cartan matrix: asymmetric zero pattern");
    }

  RootSystem rs;
  rs.cartan_ = cartan;

  // Symmetrizer: (alpha_i, alpha_i) = len2[i], (alpha_i, alpha_j) = len2[i] A(i,j) / 2.
  QVector len2(r, Rational(0));
  for (int start = 0; start < r; ++start) {
    if (len2[start] != 0)
      continue;
    len2[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j)
        if (j != i && cartan(i, j) != 0) {
          Rational want = len2[i] * cartan(i, j) / cartan(j, i);
          if (len2[j] == 0) {
            len2[j] = want;
            stack.push_back(j);
          } else if (len2[j] != want) {
            impl::reject("Cartan matrix is not symmetrizable");
          }
        }
    }
  }
  Rational shortest = *std::min_element(len2.begin(), len2.end());
  for (auto& x : len2)
    x *= Rational(2) / shortest;
  rs.len2_ = len2;
  rs.gram_.assign(r, QVector(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rs.gram_[i][j] = len2[i] * cartan(i, j) / 2;

  // Positive roots by closure under simple reflections.
  std::vector<IVector> pos;
  std::map<IVector, std::size_t> seen;
  for (int i = 0; i < r; ++i) {
    IVector e(r, 0);
    e[i] = 1;
    seen.emplace(e, pos.size());
    pos.push_back(e);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      IVector beta = pos[k];
      int c = 0;
      for (int j = 0; j < r; ++j)
        c += beta[j] * cartan(i, j);
      if (c == 0)
        continue;
      beta[i] -= c;
      bool positive = std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
      if (!positive || seen.count(beta))
        continue;
      seen.emplace(beta, pos.size());
      pos.push_back(beta);
      if (pos.size() > root_bound)
        impl::reject("root closure exceeded the bound of " + std::to_string(root_bound) + " roots");
    }
  }
  std::sort(pos.begin(), pos.end(), [](const IVector& a, const IVector& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb)
      return ha < hb;
    return a > b;
  });
  rs.npos_ = pos.size();
  rs.roots_ = pos;
  for (const auto& p : pos) {
    IVector n(p);
    for (auto& x : n)
      x = -x;
    rs.roots_.push_back(n);
  }
  for (std::size_t k = 0; k < rs.roots_.size(); ++k)
    rs.index_.emplace(rs.roots_[k], k);

  // alpha^vee = sum_i (alpha_i, alpha_i)/(alpha, alpha) * a_i * alpha_i^vee
  for (const auto& v : rs.roots_) {
    QVector q = to_q(v);
    Rational norm = rs.inner(q, q);
    IVector cv(r);
    for (int i = 0; i < r; ++i) {
      Rational c = len2[i] * v[i] / norm;
      if (!is_integer(c))
        impl::broken("non-integral coroot coordinate");
      cv[i] = to_int(c);
    }
    rs.coroots_.push_back(cv);
  }

  rs.sref_.assign(r, std::vector<std::uint16_t>(rs.roots_.size()));
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
      IVector beta = rs.roots_[k];
      int c = 0;
      for (int j = 0; j < r; ++j)
        c += beta[j] * cartan(i, j);
      beta[i] -= c;
      rs.sref_[i][k] = static_cast<std::uint16_t>(rs.index_.at(beta));
    }
  return rs;
}

using ElementId = std::uint32_t;

// Materialized Weyl group element.
struct WeylElement {
  std::vector<std::uint16_t> perm; // perm[k] = index of w(root k)
  IVector word;                    // lexicographically least reduced word (0-based letters)

  std::size_t length() const { return word.size(); }
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

inline std::uint64_t default_cap() { return 1'000'000; }

// Elements are enumerated by length and then by canonical word; id 0 is the
// identity. An element is identified by the images of the simple roots.
class WeylGroup {
public:
  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  std::size_t order() const { return length_.size(); }
  ElementId identity() const { return 0; }
  int rank() const { return rs_->rank(); }

  std::span<const std::uint16_t> perm(ElementId w) const {
    return {perms_.data() + std::size_t(w) * nroots_, nroots_};
  }
  std::size_t image(ElementId w, std::size_t root) const {
    return perms_[std::size_t(w) * nroots_ + root];
  }
  int length(ElementId w) const { return length_[w]; }

  IVector word(ElementId w) const {
    IVector out(length_[w]);
    for (auto k = out.size(); k-- > 0; w = parent_[w])
      out[k] = letter_[w];
    return out;
  }

  WeylElement element(ElementId w) const {
    auto p = perm(w);
    return {std::vector<std::uint16_t>(p.begin(), p.end()), word(w)};
  }

  ElementId multiply(ElementId a, ElementId b) const {
    std::u16string key(rank(), u'\0');
    for (int i = 0; i < rank(); ++i)
      key[i] = static_cast<char16_t>(image(a, image(b, i)));
    return lookup(key);
  }

  ElementId inverse(ElementId a) const { return inverse_[a]; }

  ElementId conjugate(ElementId g, ElementId x) const {
    return multiply(multiply(g, x), inverse(g));
  }

  ElementId times_simple(ElementId a, int i) const {
    std::u16string key(rank(), u'\0');
    const auto& s = rs_->simple_reflection(i);
    for (int k = 0; k < rank(); ++k)
      key[k] = static_cast<char16_t>(image(a, s[k]));
    return lookup(key);
  }

  ElementId from_word(const IVector& word) const {
    ElementId w = identity();
    for (int i : word) {
      if (i < 0 || i >= rank())
        impl::reject("letter " + std::to_string(i + 1) + " is not a simple reflection index");
      w = times_simple(w, i);
    }
    return w;
  }

  std::optional<ElementId> find(std::span<const std::uint16_t> perm) const {
    if (perm.size() != nroots_)
      return std::nullopt;
    std::u16string key(rank(), u'\0');
    for (int i = 0; i < rank(); ++i)
      key[i] = static_cast<char16_t>(perm[i]);
    auto it = index_.find(key);
    if (it == index_.end())
      return std::nullopt;
    auto p = this->perm(it->second);
    if (!std::equal(p.begin(), p.end(), perm.begin()))
      return std::nullopt;
    return it->second;
  }

  // Linear action on a vector in the simple-root basis.
  QVector act(ElementId w, const QVector& v) const {
    QVector out(rank(), Rational(0));
    for (int i = 0; i < rank(); ++i) {
      if (v[i] == 0)
        continue;
      const auto& img = rs_->root(image(w, i));
      for (int j = 0; j < rank(); ++j)
        out[j] += v[i] * img[j];
    }
    return out;
  }

private:
  friend WeylGroup generate_weyl(std::shared_ptr<const RootSystem>, std::uint64_t);

  ElementId lookup(const std::u16string& key) const {
    auto it = index_.find(key);
    if (it == index_.end())
      impl::broken("product left the enumerated Weyl group");
    return it->second;
  }

  std::shared_ptr<const RootSystem> rs_;
  std::size_t nroots_ = 0;
  std::vector<std::uint16_t> perms_;
  std::vector<ElementId> parent_;
  std::vector<std::uint8_t> letter_;
  std::vector<int> length_;
  std::vector<ElementId> inverse_;
  std::unordered_map<std::u16string, ElementId> index_;
};

inline WeylGroup generate_weyl(std::shared_ptr<const RootSystem> rs,
                               std::uint64_t cap = default_cap()) {
  WeylGroup g;
  g.rs_ = rs;
  const int r = rs->rank();
  const std::size_t n = rs->num_roots();
  g.nroots_ = n;

  auto add = [&](std::vector<std::uint16_t> p, ElementId parent, int letter, int len) {
    std::u16string key(r, u'\0');
    for (int i = 0; i < r; ++i)
      key[i] = static_cast<char16_t>(p[i]);
    if (g.index_.count(key))
      return;
    if (g.length_.size() >= cap)
      impl::reject("Weyl group of " + rs->cartan().name() + " exceeds the enumeration cap of " +
                   std::to_string(cap) + " elements (stopped at " +
                   std::to_string(g.length_.size()) + ")");
    auto id = static_cast<ElementId>(g.length_.size());
    g.index_.emplace(std::move(key), id);
    g.perms_.insert(g.perms_.end(), p.begin(), p.end());
    g.parent_.push_back(parent);
    g.letter_.push_back(static_cast<std::uint8_t>(letter));
    g.length_.push_back(len);
  };

  std::vector<std::uint16_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  add(id, 0, 0, 0);

  std::size_t level_begin = 0, level_end = 1;
  for (int len = 0; level_begin < level_end; ++len) {
    for (std::size_t u = level_begin; u < level_end; ++u) {
      for (int i = 0; i < r; ++i) {
        if (!rs->is_positive(g.image(ElementId(u), i)))
          continue; // u s_i is shorter
        const auto& s = rs->simple_reflection(i);
        std::vector<std::uint16_t> p(n);
        for (std::size_t k = 0; k < n; ++k)
          p[k] = g.perms_[u * n + s[k]];
        add(std::move(p), ElementId(u), i, len + 1);
      }
    }
    level_begin = level_end;
    level_end = g.length_.size();
  }

  g.inverse_.resize(g.length_.size());
  for (std::size_t w = 0; w < g.length_.size(); ++w) {
    std::u16string key(r, u'\0');
    for (std::size_t k = 0; k < n; ++k) {
      auto img = g.perms_[w * n + k];
      if (img < r)
        key[img] = static_cast<char16_t>(k);
    }
    g.inverse_[w] = g.lookup(key);
  }
  return g;
}

// Longest element of the parabolic subgroup generated by {s_i : i in theta}.
inline ElementId longest_element(const WeylGroup& w, const std::vector<int>& theta) {
  for (int i : theta)
    if (i < 0 || i >= w.rank())
      impl::reject("simple root index " + std::to_string(i + 1) + " out of range");
  ElementId x = w.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : theta)
      if (w.roots().is_positive(w.image(x, i))) {
        x = w.times_simple(x, i);
        grew = true;
        break;
      }
  }
  return x;
}

// Root system + Weyl group in one immutable bundle.
struct Ambient {
  std::shared_ptr<const RootSystem> roots;
  std::shared_ptr<const WeylGroup> weyl;
};

inline Ambient make_ambient(char family, int rank, std::uint64_t cap = default_cap()) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(build_cartan(family, rank)));
  auto w = std::make_shared<const WeylGroup>(generate_weyl(rs, cap));
  return {rs, w};
}

} // namespace relweyl

#endif // RELWEYL_ROOTSYS_HPP_

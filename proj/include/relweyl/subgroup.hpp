// Subgroups of an enumerated Weyl group, held as sorted element-id lists.

#ifndef RELWEYL_SUBGROUP_HPP_
#define RELWEYL_SUBGROUP_HPP_

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "rootsys.hpp"

namespace relweyl {

class Subgroup {
public:
  Subgroup() : elems_{0} {}
  explicit Subgroup(std::vector<ElementId> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  std::size_t order() const { return elems_.size(); }
  bool trivial() const { return elems_.size() == 1; }
  bool contains(ElementId w) const { return std::binary_search(elems_.begin(), elems_.end(), w); }
  const std::vector<ElementId>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }

private:
  std::vector<ElementId> elems_;
};

inline Subgroup generate_subgroup(const WeylGroup& w, const std::vector<ElementId>& gens) {
  std::vector<ElementId> out{w.identity()};
  std::unordered_set<ElementId> seen{w.identity()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (ElementId g : gens) {
      ElementId x = w.multiply(out[k], g);
      if (seen.insert(x).second)
        out.push_back(x);
    }
  return Subgroup(std::move(out));
}

inline bool is_closed(const WeylGroup& w, const Subgroup& h) {
  if (!h.contains(w.identity()))
    return false;
  for (ElementId a : h) {
    if (!h.contains(w.inverse(a)))
      return false;
    for (ElementId b : h)
      if (!h.contains(w.multiply(a, b)))
        return false;
  }
  return true;
}

inline bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subgroup(std::move(out));
}

// n normalized by every element of g; `n_gens` generates n.
inline bool is_normalized_by(const WeylGroup& w, const Subgroup& n,
                             const std::vector<ElementId>& n_gens, const Subgroup& g) {
  for (ElementId x : g)
    for (ElementId y : n_gens)
      if (!n.contains(w.conjugate(x, y)))
        return false;
  return true;
}

// Outcome of checking g = n x| h with unique factorization.
struct SemidirectCheck {
  bool normal = false;
  bool trivial_intersection = false;
  bool orders_multiply = false;
  bool unique_factorization = false;
  // factor[k] = (a, b) with a in n, b in h, a*b = g.elements()[k].
  std::vector<std::pair<ElementId, ElementId>> factor;

  bool ok() const { return normal && trivial_intersection && orders_multiply && unique_factorization; }
};

inline SemidirectCheck check_semidirect(const WeylGroup& w, const Subgroup& g, const Subgroup& n,
                                        const std::vector<ElementId>& n_gens, const Subgroup& h) {
  SemidirectCheck c;
  c.normal = is_subset(n, g) && is_subset(h, g) && is_normalized_by(w, n, n_gens, g);
  c.trivial_intersection = intersect(n, h).trivial();
  c.orders_multiply = g.order() == n.order() * h.order();
  c.factor.assign(g.order(), {0, 0});
  std::vector<int> hits(g.order(), 0);
  bool inside = true;
  for (ElementId a : n)
    for (ElementId b : h) {
      ElementId x = w.multiply(a, b);
      auto it = std::lower_bound(g.begin(), g.end(), x);
      if (it == g.end() || *it != x) {
        inside = false;
        continue;
      }
      auto k = std::size_t(it - g.begin());
      ++hits[k];
      c.factor[k] = {a, b};
    }
  c.unique_factorization =
    inside && std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; });
  return c;
}

} // namespace relweyl

#endif // RELWEYL_SUBGROUP_HPP_

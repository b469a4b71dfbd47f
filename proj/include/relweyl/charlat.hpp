// Unramified characters with values q^r * exp(2 pi i s), r in Q, s in Q/Z.
//
// A character is stored by its values on a Z-basis l_1..l_m of the
// cocharacter lattice of the split torus: q_part[k] is the q-exponent and
// t_part[k] (reduced to [0, 1)) the phase of its value at l_k evaluated on
// the uniformizer. Two tori are modelled:
//   simply_connected  lattice = coroot lattice, l_k = alpha_k^vee; the
//                     coordinates are fundamental-weight coordinates.
//   general_linear    type A_{n-1} only, lattice = Z^n (the torus of GL_n);
//                     the coordinates are the usual epsilon coordinates.

#ifndef RELWEYL_CHARLAT_HPP_
#define RELWEYL_CHARLAT_HPP_

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "levi.hpp"
#include "rational.hpp"
#include "rootsys.hpp"
#include "subgroup.hpp"

namespace relweyl {

enum class TorusKind { simply_connected, general_linear };

inline std::string to_string(TorusKind k) {
  return k == TorusKind::simply_connected ? "simply-connected" : "general-linear";
}

struct ValueExp {
  Rational q_exp = 0;
  Rational torsion = 0; // in [0, 1)

  ValueExp() = default;
  ValueExp(Rational q, Rational t) : q_exp(q), torsion(mod_one(t)) {}

  ValueExp operator+(const ValueExp& o) const { return {q_exp + o.q_exp, torsion + o.torsion}; }
  ValueExp operator-() const { return {-q_exp, -torsion}; }
  ValueExp operator-(const ValueExp& o) const { return *this + (-o); }
  bool operator==(const ValueExp& o) const = default;
  bool is_identity() const { return q_exp == 0 && torsion == 0; }
};

// |.|^{+1} or |.|^{-1}: the rank-one unramified reducibility points.
inline bool is_wall(const ValueExp& v) {
  return v.torsion == 0 && (v.q_exp == 1 || v.q_exp == -1);
}

class CharacterLattice {
public:
  CharacterLattice() = default;
  CharacterLattice(std::shared_ptr<const RootSystem> rs, TorusKind kind) : rs_(rs), kind_(kind) {
    const int r = rs->rank();
    if (kind == TorusKind::general_linear && rs->cartan().family != 'A')
      impl::reject("the general-linear torus is only available for type A");
    dim_ = kind == TorusKind::simply_connected ? r : r + 1;
    root_pair_.assign(r, IVector(dim_, 0));
    coroot_.assign(r, IVector(dim_, 0));
    for (int i = 0; i < r; ++i) {
      if (kind == TorusKind::simply_connected) {
        for (int k = 0; k < r; ++k)
          root_pair_[i][k] = rs->cartan()(k, i);
        coroot_[i][i] = 1;
      } else {
        root_pair_[i][i] = 1;
        root_pair_[i][i + 1] = -1;
        coroot_[i][i] = 1;
        coroot_[i][i + 1] = -1;
      }
    }
  }

  TorusKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const RootSystem& roots() const { return *rs_; }

  // <alpha_i, l_k>
  int root_pairing(int i, std::size_t k) const { return root_pair_[i][k]; }
  // alpha_i^vee in lattice coordinates.
  const IVector& simple_coroot(int i) const { return coroot_[i]; }

  // Coroot of an absolute root, in lattice coordinates.
  IVector coroot(std::size_t root) const {
    IVector out(dim_, 0);
    const auto& c = rs_->coroot(root);
    for (int i = 0; i < rs_->rank(); ++i)
      for (std::size_t k = 0; k < dim_; ++k)
        out[k] += c[i] * coroot_[i][k];
    return out;
  }

  // Matrix of w on lattice coordinates of cocharacters.
  IMatrix cocharacter_action(const WeylGroup& w, ElementId x) const {
    IMatrix m = impl::identity_matrix(dim_);
    for (int i : w.word(x)) {
      // m <- m * S_i, S_i u = u - <alpha_i, u> alpha_i^vee
      IMatrix s = impl::identity_matrix(dim_);
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
          s[r][c] -= coroot_[i][r] * root_pair_[i][c];
      m = impl::mat_mul(m, s);
    }
    return m;
  }

  // Matrix T with (w.chi) = T chi on character coordinates:
  // (w.chi)(l) = chi(w^{-1} l), so T is the transpose of the cocharacter
  // action of w^{-1}.
  IMatrix character_action(const WeylGroup& w, ElementId x) const {
    IMatrix m = cocharacter_action(w, w.inverse(x));
    IMatrix t(dim_, IVector(dim_));
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        t[r][c] = m[c][r];
    return t;
  }

  // Character given in the simple-root basis: chi = sum a_i alpha_i.
  QVector from_simple_root(const QVector& a) const {
    QVector x(dim_, Rational(0));
    for (int i = 0; i < rs_->rank(); ++i)
      for (std::size_t k = 0; k < dim_; ++k)
        x[k] += a[i] * root_pair_[i][k];
    return x;
  }

private:
  std::shared_ptr<const RootSystem> rs_;
  TorusKind kind_ = TorusKind::simply_connected;
  std::size_t dim_ = 0;
  IMatrix root_pair_;
  IMatrix coroot_;
};

inline QVector apply(const IMatrix& m, const QVector& v) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0)
        out[i] += v[j] * m[i][j];
  return out;
}

// Unramified character of M_theta: q_part/t_part in lattice coordinates,
// t_part reduced mod 1. Vanishes on the coroots of theta.
struct UnramifiedParam {
  QVector q_part;
  QVector t_part;
  std::vector<int> theta;

  bool operator==(const UnramifiedParam& o) const {
    return q_part == o.q_part && t_part == o.t_part;
  }
  UnramifiedParam operator+(const UnramifiedParam& o) const {
    UnramifiedParam s{q_part, t_part, theta};
    for (std::size_t k = 0; k < q_part.size(); ++k) {
      s.q_part[k] += o.q_part[k];
      s.t_part[k] = mod_one(s.t_part[k] + o.t_part[k]);
    }
    return s;
  }
};

// The coroot of a reduced relative root alpha, defined intrinsically on
// a_M^* as 2 alpha / (alpha, alpha) and written in lattice coordinates.
struct RelativeCoroot {
  QVector vector;
  std::size_t source = 0;
};

inline RelativeCoroot relative_coroot(const CharacterLattice& lat, const RelativeData& rd,
                                      std::size_t alpha) {
  const RelativeRoot& a = rd.roots[alpha];
  const RootSystem& rs = lat.roots();
  RelativeCoroot c{QVector(lat.dim(), Rational(0)), alpha};
  for (int i = 0; i < rs.rank(); ++i) {
    Rational coef = a.projection[i] * rs.simple_lengths()[i] / a.norm;
    if (coef == 0)
      continue;
    for (std::size_t k = 0; k < lat.dim(); ++k)
      c.vector[k] += coef * lat.simple_coroot(i)[k];
  }
  return c;
}

// Everything determined by (type, torus, theta), built once and shared.
struct LeviContext {
  Ambient ambient;
  CharacterLattice lattice;
  LeviDatum levi;
  RelativeData rd;
  RelativeWeylGroup wm;
  std::vector<IMatrix> char_action;     // per index into wm.reps
  std::vector<RelativeCoroot> coroots;  // per relative root

  const WeylGroup& weyl() const { return *ambient.weyl; }
  const RootSystem& roots() const { return *ambient.roots; }
  const IMatrix& action(ElementId w) const {
    int p = wm.position[w];
    if (p < 0)
      impl::reject("Weyl element " + impl::word_string(weyl().word(w)) +
                   " does not normalize the Levi subgroup");
    return char_action[p];
  }
};

inline LeviContext make_context(Ambient ambient, TorusKind kind, std::vector<int> theta) {
  LeviContext ctx;
  ctx.ambient = ambient;
  ctx.lattice = CharacterLattice(ambient.roots, kind);
  ctx.levi = make_levi(ambient, std::move(theta));
  auto la = analyze_levi(ctx.levi);
  ctx.rd = std::move(la.rd);
  ctx.wm = std::move(la.wm);
  for (ElementId x : ctx.wm.reps)
    ctx.char_action.push_back(ctx.lattice.character_action(ctx.weyl(), x));
  for (std::size_t a = 0; a < ctx.rd.roots.size(); ++a)
    ctx.coroots.push_back(relative_coroot(ctx.lattice, ctx.rd, a));
  return ctx;
}

inline UnramifiedParam make_unramified(const LeviContext& ctx, QVector q, QVector t) {
  const std::size_t m = ctx.lattice.dim();
  if (q.size() != m || t.size() != m)
    impl::reject("character needs " + std::to_string(m) + " coordinates");
  t = mod_one(std::move(t));
  for (int i : ctx.levi.theta) {
    const IVector& c = ctx.lattice.simple_coroot(i);
    Rational pq = 0, pt = 0;
    for (std::size_t k = 0; k < m; ++k) {
      pq += q[k] * c[k];
      pt += t[k] * c[k];
    }
    if (pq != 0 || !is_integer(pt))
      impl::reject("character does not vanish on the coroot of simple root " +
                   std::to_string(i + 1) + " of the Levi subgroup");
  }
  return {std::move(q), std::move(t), ctx.levi.theta};
}

inline UnramifiedParam trivial_character(const LeviContext& ctx) {
  QVector z(ctx.lattice.dim(), Rational(0));
  return {z, z, ctx.levi.theta};
}

// nu_alpha = (<q, alpha^vee>, <t, alpha^vee> mod 1). The phase component
// depends on the stored representative when theta is nonempty.
inline ValueExp eval_on_coroot(const LeviContext& ctx, const UnramifiedParam& nu,
                               std::size_t alpha) {
  if (alpha >= ctx.rd.roots.size())
    impl::reject("not a relative root of the Levi subgroup");
  const QVector& y = ctx.coroots[alpha].vector;
  return {dot(nu.q_part, y), dot(nu.t_part, y)};
}

inline UnramifiedParam weyl_act(const LeviContext& ctx, ElementId w, const UnramifiedParam& nu) {
  const IMatrix& t = ctx.action(w);
  return {apply(t, nu.q_part), mod_one(apply(t, nu.t_part)), nu.theta};
}

inline Subgroup stabilizer(const LeviContext& ctx, const UnramifiedParam& nu) {
  std::vector<ElementId> out;
  for (ElementId w : ctx.wm.reps)
    if (weyl_act(ctx, w, nu) == nu)
      out.push_back(w);
  return Subgroup(std::move(out));
}

// q_part pairs to zero with every relative coroot.
inline bool is_unitary(const LeviContext& ctx, const UnramifiedParam& nu) {
  for (std::size_t a = 0; a < ctx.rd.num_positive(); ++a)
    if (eval_on_coroot(ctx, nu, a).q_exp != 0)
      return false;
  return true;
}

} // namespace relweyl

#endif // RELWEYL_CHARLAT_HPP_

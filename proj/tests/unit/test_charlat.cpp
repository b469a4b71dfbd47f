#include <gtest/gtest.h>

#include "relweyl/charlat.hpp"

using namespace relweyl;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

LeviContext context(char f, int r, std::vector<int> theta,
                    TorusKind kind = TorusKind::simply_connected) {
  return make_context(make_ambient(f, r), kind, std::move(theta));
}

} // namespace

TEST(Character, TrivialPairsToZero) {
  auto ctx = context('B', 3, {});
  auto nu = trivial_character(ctx);
  for (std::size_t a = 0; a < ctx.rd.roots.size(); ++a)
    EXPECT_TRUE(eval_on_coroot(ctx, nu, a).is_identity());
  EXPECT_EQ(stabilizer(ctx, nu).order(), ctx.weyl().order());
}

TEST(Character, QuadraticSL2) {
  auto ctx = context('A', 1, {});
  auto nu = make_unramified(ctx, {q(0)}, {q(1, 2)});
  ValueExp v = eval_on_coroot(ctx, nu, 0);
  EXPECT_EQ(v, ValueExp(q(0), q(1, 2)));
  EXPECT_TRUE((v + v).is_identity());
  EXPECT_FALSE(v.is_identity());
  EXPECT_EQ(stabilizer(ctx, nu).order(), 2u);
  EXPECT_FALSE(is_wall(v));
}

TEST(Character, RhoOfA2) {
  auto ctx = context('A', 2, {});
  auto rho = make_unramified(ctx, ctx.lattice.from_simple_root({q(1), q(1)}), {q(0), q(0)});
  for (int i = 0; i < 2; ++i) {
    IVector e(2, 0);
    e[i] = 1;
    EXPECT_EQ(eval_on_coroot(ctx, rho, *ctx.rd.find(e)), ValueExp(q(1), q(0)));
  }
}

TEST(Character, ReflectionNegatesExponent) {
  auto ctx = context('A', 1, {});
  auto nu = make_unramified(ctx, {q(3, 2)}, {q(0)});
  auto moved = weyl_act(ctx, ctx.weyl().from_word({0}), nu);
  EXPECT_EQ(eval_on_coroot(ctx, moved, 0).q_exp, q(-3, 2));
  EXPECT_EQ(weyl_act(ctx, ctx.weyl().identity(), nu), nu);
  EXPECT_TRUE(stabilizer(ctx, make_unramified(ctx, {q(1)}, {q(0)})).trivial());
}

TEST(Character, BlockSwapFlipsPairing) {
  auto ctx = context('A', 3, {0, 2});
  // Vanishing on alpha_1^vee and alpha_3^vee: only the second coordinate is free.
  auto nu = make_unramified(ctx, {q(0), q(2, 3), q(0)}, {q(0), q(1, 5), q(0)});
  ElementId swap = ctx.wm.reps.elements().back();
  ASSERT_NE(swap, ctx.weyl().identity());
  std::size_t a = *ctx.rd.find({1});
  ValueExp before = eval_on_coroot(ctx, nu, a);
  ValueExp after = eval_on_coroot(ctx, weyl_act(ctx, swap, nu), a);
  EXPECT_EQ(after, -before);
  EXPECT_NE(after, before);
}

TEST(Character, ActionIsAHomomorphism) {
  for (auto kind : {TorusKind::simply_connected, TorusKind::general_linear}) {
    auto ctx = context('A', 3, {}, kind);
    const WeylGroup& w = ctx.weyl();
    QVector x;
    for (std::size_t k = 0; k < ctx.lattice.dim(); ++k)
      x.push_back(q(long(k * k) + 1, 7));
    auto nu = make_unramified(ctx, x, x);
    for (ElementId a = 0; a < w.order(); a += 5)
      for (ElementId b = 0; b < w.order(); b += 3)
        EXPECT_EQ(weyl_act(ctx, w.multiply(a, b), nu), weyl_act(ctx, a, weyl_act(ctx, b, nu)));
  }
}

TEST(Character, PairingIsEquivariant) {
  auto ctx = context('G', 2, {});
  auto nu = make_unramified(ctx, {q(1, 2), q(-2)}, {q(1, 3), q(1, 2)});
  for (ElementId x : ctx.wm.reps)
    for (std::size_t a = 0; a < ctx.rd.roots.size(); ++a)
      EXPECT_EQ(eval_on_coroot(ctx, weyl_act(ctx, x, nu), ctx.wm.act_on(x, a)),
                eval_on_coroot(ctx, nu, a));
}

TEST(Character, GeneralLinearLattice) {
  auto ctx = context('A', 2, {}, TorusKind::general_linear);
  EXPECT_EQ(ctx.lattice.dim(), 3u);
  auto nu = make_unramified(ctx, {q(1), q(0), q(0)}, {q(0), q(0), q(1, 2)});
  // e_1 - e_2 coroot
  EXPECT_EQ(eval_on_coroot(ctx, nu, *ctx.rd.find({1, 0})), ValueExp(q(1), q(0)));
  EXPECT_EQ(eval_on_coroot(ctx, nu, *ctx.rd.find({0, 1})), ValueExp(q(0), q(1, 2)));
  EXPECT_THROW(context('B', 2, {}, TorusKind::general_linear), Rejection);
}

TEST(Character, MustVanishOnTheta) {
  auto ctx = context('A', 3, {0, 2});
  EXPECT_THROW(make_unramified(ctx, {q(1), q(0), q(0)}, {q(0), q(0), q(0)}), Rejection);
  EXPECT_THROW(make_unramified(ctx, {q(0), q(0), q(0)}, {q(0), q(0), q(1, 2)}), Rejection);
  EXPECT_THROW(make_unramified(ctx, {q(0), q(0)}, {q(0), q(0)}), Rejection);
  EXPECT_NO_THROW(make_unramified(ctx, {q(0), q(5), q(0)}, {q(1), q(0), q(2)}));
}

TEST(Character, ActionOutsideWMRejected) {
  auto ctx = context('A', 2, {0});
  auto nu = trivial_character(ctx);
  EXPECT_THROW(weyl_act(ctx, ctx.weyl().from_word({1}), nu), Rejection);
}

TEST(Character, WallPoints) {
  EXPECT_FALSE(is_wall(ValueExp(q(0), q(0))));
  EXPECT_TRUE(is_wall(ValueExp(q(1), q(0))));
  EXPECT_TRUE(is_wall(ValueExp(q(-1), q(0))));
  EXPECT_FALSE(is_wall(ValueExp(q(0), q(1, 2))));
  EXPECT_FALSE(is_wall(ValueExp(q(1), q(1, 2))));
}

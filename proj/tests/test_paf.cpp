#include <doctest.h>

#include "char1/error.hpp"
#include "char1/paf.hpp"
#include "char1/random.hpp"
#include "char1/scalar.hpp"
#include "char1/semifield.hpp"
#include "oracles.hpp"

using namespace char1;

namespace {

Paf t_fn() { return Paf::affine(0, 1, 1, 0); }
Paf one_minus_t() { return Paf::affine(0, 1, -1, 1); }
Paf two_t_minus_one() { return Paf::affine(0, 1, 2, -1); }
Paf abs_half() { return Paf::interpolate({0, Rat(1, 2), 1}, {Rat(1, 2), 0, Rat(1, 2)}); }

Rat max_of(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat min_of(const Rat& a, const Rat& b) { return b < a ? b : a; }

}  // namespace

TEST_CASE("scalar order and decomposition") {
  const ScalarTrop s;
  CHECK(leq(s, Rat(2), Rat(3)));
  CHECK(leq(s, Rat(3), Rat(3)));
  CHECK_FALSE(leq(s, Rat(3), Rat(2)));
  CHECK(decompose(s, Rat(-5)) == std::pair<Rat, Rat>{0, 5});
  CHECK(decompose(s, Rat(7)) == std::pair<Rat, Rat>{7, 0});
  CHECK(tropical_min(s, Rat(2), Rat(3)) == 2);
  CHECK(s.plus(s.oplus(2, 3), tropical_min(s, Rat(2), Rat(3))) == 5);
  CHECK(frobenius_scale(s, Rat(3, 2), Rat(4)) == 6);
  CHECK(frobenius_scale(s, Rat(1), Rat(-7, 3)) == Rat(-7, 3));
  CHECK(power_identity_check(s, 2, Rat(1), Rat(3)));
  CHECK(r_norm(s, Rat(-5)) == 5);
  CHECK(r_norm(s, s.unit()) == 1);
  CHECK(r_norm(s, s.zero()) == 0);
}

TEST_CASE("paf decomposition against pointwise oracle") {
  const PafModel m(0, 1);
  const Paf f = two_t_minus_one();
  const auto [pos, negp] = decompose(m, f);
  CHECK(oracle::agrees(pos, [&](const Rat& t) -> Rat { return max_of(oracle::at(f, t), 0); }, {&f}));
  CHECK(oracle::agrees(negp, [&](const Rat& t) -> Rat { return max_of(-oracle::at(f, t), 0); }, {&f}));
  CHECK(plus(pos, neg(negp)) == f);
}

TEST_CASE("paf tropical min is the lower envelope") {
  const PafModel m(0, 1);
  const Paf a = t_fn();
  const Paf b = one_minus_t();
  const Paf lo = tropical_min(m, a, b);
  CHECK(lo.breakpoints() == std::vector<Rat>{0, Rat(1, 2), 1});
  CHECK(oracle::agrees(lo, [&](const Rat& t) -> Rat { return min_of(oracle::at(a, t), oracle::at(b, t)); }, {&a, &b}));
}

TEST_CASE("paf frobenius scaling and power identity") {
  const PafModel m(0, 1);
  CHECK(frobenius_scale(m, Rat(1, 2), Paf::affine(0, 1, 2, 0)) == t_fn());
  CHECK(frobenius_scale(m, Rat(1), abs_half()) == abs_half());
  const Paf x = t_fn();
  const Paf y = one_minus_t();
  CHECK(power_identity_check(m, 3, x, y));
  // Both sides against the pointwise oracle 3 max(x, y).
  const Paf lhs = nat_multiple(m, m.oplus(x, y), 3);
  CHECK(oracle::agrees(lhs, [&](const Rat& t) -> Rat { return 3 * max_of(oracle::at(x, t), oracle::at(y, t)); }, {&x, &y}));
  CHECK(power_identity_check(m, 1, x, y));
}

TEST_CASE("paf norms of the constant unit") {
  const PafModel m(0, 1);
  CHECK(r_norm(m, m.unit()) == 1);
  CHECK(r_norm(m, m.zero()) == 0);
  CHECK(r_norm_const(two_t_minus_one()) == oracle::sup_abs(two_t_minus_one()));
  CHECK(r_norm_const(two_t_minus_one()) == 1);
  CHECK(r_norm_const(Paf::constant(0, 1, 1)) == 1);
}

TEST_CASE("paf evaluation") {
  CHECK(two_t_minus_one().eval(Rat(1, 2)) == 0);
  const Paf v = abs_half();
  CHECK(v.eval(Rat(1, 4)) == Rat(1, 4));
  for (const Rat& t : oracle::grid(0, 1, 1000)) {
    const Rat d = t - Rat(1, 2);
    REQUIRE(v.eval(t) == (d < 0 ? Rat(-d) : d));
  }
  CHECK(Paf::constant(0, 1, 1).eval(Rat(3, 7)) == 1);
  CHECK_THROWS_AS(v.eval(2), precondition_error);
}

TEST_CASE("paf oplus examples") {
  const Paf r = oplus(t_fn(), one_minus_t());
  CHECK(r.breakpoints() == std::vector<Rat>{0, Rat(1, 2), 1});
  CHECK(r.pieces() == std::vector<AffinePiece>{{-1, 1}, {1, 0}});
  CHECK(oplus(abs_half(), abs_half()) == abs_half());
  const Paf z = Paf::constant(0, 1, 0);
  const Paf f = two_t_minus_one();
  const Paf relu = oplus(z, f);
  CHECK(relu.breakpoints() == std::vector<Rat>{0, Rat(1, 2), 1});
  CHECK(oracle::agrees(relu, [&](const Rat& t) -> Rat { return max_of(0, oracle::at(f, t)); }, {&f}));
}

TEST_CASE("paf additive structure") {
  CHECK(plus(t_fn(), one_minus_t()) == Paf::constant(0, 1, 1));
  CHECK(plus(t_fn(), one_minus_t()).pieces().size() == 1);
  const Paf m = oplus(t_fn(), one_minus_t());
  const Paf n = neg(m);
  CHECK(oracle::agrees(n, [&](const Rat& t) -> Rat { return -oracle::at(m, t); }, {&m}));
  CHECK_FALSE(is_convex(n));
  CHECK(scale(Rat(1, 2), Paf::affine(0, 1, 2, 0)) == t_fn());
}

TEST_CASE("weighted norms of the anchored model") {
  CHECK(weighted_norms(t_fn()).r == 1);
  CHECK(weighted_norms(t_fn()).lipschitz == 1);
  const Paf relu = oplus(Paf::constant(0, 1, 0), two_t_minus_one());
  const WeightedNorms w = weighted_norms(relu);
  CHECK(w.r == 1);
  CHECK(w.lipschitz == 2);
  // Ratio oracle: |f(t)| / t on a grid of ]0,1] never exceeds r and reaches it.
  Rat best = 0;
  for (const Rat& t : oracle::grid(0, 1, 1000)) {
    if (t == 0) continue;
    const Rat q = abs(oracle::at(relu, t)) / t;
    if (best < q) best = q;
  }
  CHECK(best == w.r);
  const WeightedNorms z = weighted_norms(Paf::constant(0, 1, 0));
  CHECK(z.r == 0);
  CHECK(z.lipschitz == 0);
  CHECK_THROWS_AS(weighted_norms(Paf::constant(0, 1, 1)), precondition_error);
}

TEST_CASE("convexity by slopes") {
  CHECK(is_convex(abs_half()));
  CHECK_FALSE(is_convex(neg(abs_half())));
  CHECK(is_convex(two_t_minus_one()));
}

TEST_CASE("clamp examples") {
  const Paf c = clamp(two_t_minus_one(), Rat(1, 2));
  CHECK(c.breakpoints() == std::vector<Rat>{0, Rat(1, 4), Rat(3, 4), 1});
  CHECK(c.pieces() == std::vector<AffinePiece>{{0, Rat(-1, 2)}, {2, -1}, {0, Rat(1, 2)}});
  const Paf f = two_t_minus_one();
  CHECK(oracle::agrees(c, [&](const Rat& t) -> Rat { return max_of(min_of(oracle::at(f, t), Rat(1, 2)), Rat(-1, 2)); },
                       {&f}));
  CHECK(clamp(f, 1) == f);
  CHECK(clamp(f, 5) == f);
  CHECK(clamp(f, 0) == Paf::constant(0, 1, 0));
}

TEST_CASE("plot rows include every breakpoint") {
  const auto rows = plot_rows(t_fn(), 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == std::pair<Rat, Rat>{Rat(1, 2), Rat(1, 2)});
  const Paf f = Paf::interpolate({0, Rat(1, 3), 1}, {0, 1, 0});
  const auto r2 = plot_rows(f, 2);
  CHECK(std::find(r2.begin(), r2.end(), std::pair<Rat, Rat>{Rat(1, 3), 1}) != r2.end());
  const auto r5 = plot_rows(oplus(t_fn(), one_minus_t()), 5);
  CHECK(std::find(r5.begin(), r5.end(), std::pair<Rat, Rat>{Rat(1, 2), Rat(1, 2)}) != r5.end());
  CHECK_THROWS_AS(plot_rows(t_fn(), 1), precondition_error);
}

TEST_CASE("paf construction rejects bad input") {
  CHECK_THROWS_AS(Paf({0, 1}, {}), invariant_error);
  CHECK_THROWS_AS(Paf({1, 0}, {{1, 0}}), invariant_error);
  CHECK_THROWS_AS(Paf({0, Rat(1, 2), 1}, {{1, 0}, {1, 1}}), invariant_error);
  // Equal adjacent pieces merge, so structural equality is function equality.
  CHECK(Paf({0, Rat(1, 2), 1}, {{1, 0}, {1, 0}}) == t_fn());
}

TEST_CASE("random paf operations match the pointwise oracle") {
  Gen g(20260415);
  for (int i = 0; i < 300; ++i) {
    const Paf f = g.paf();
    const Paf h = g.paf();
    const Rat q = g.rat();
    REQUIRE(oracle::agrees(oplus(f, h), [&](const Rat& t) -> Rat { return max_of(oracle::at(f, t), oracle::at(h, t)); },
                           {&f, &h}));
    REQUIRE(oracle::agrees(plus(f, h), [&](const Rat& t) -> Rat { return oracle::at(f, t) + oracle::at(h, t); }, {&f, &h}));
    REQUIRE(oracle::agrees(scale(q, f), [&](const Rat& t) -> Rat { return q * oracle::at(f, t); }, {&f}));
    REQUIRE(r_norm_const(f) == oracle::sup_abs(f));
    REQUIRE(is_convex(f) == oracle::slopes_sorted(f));
  }
}

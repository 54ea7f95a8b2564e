#pragma once

/**
 * @file semifield.hpp
 * @brief Contract of a commutative perfect semifield of characteristic one.
 *
 * A model is a small object carrying whatever context its elements need
 * (a domain interval, a unit polygon, ...) and exposing:
 *
 *   oplus(X, Y)        idempotent law, X (+) X = X
 *   plus(X, Y), neg(X), zero()   the abelian group
 *   div_by_nat(X, n)   inverse of X -> nX (perfectness)
 *   unit()             the absorbing element E
 *   equal(X, Y)        canonical-form equality
 *
 * Everything else here (order, decomposition, min, rational scaling, the
 * r-norm) is derived from that contract alone.
 */

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "char1/error.hpp"
#include "char1/rational.hpp"

namespace char1 {

template <typename M>
concept Char1Semifield = requires(const M& m, const typename M::value_type& x,
                                  const typename M::value_type& y, std::size_t n) {
  typename M::value_type;
  { m.oplus(x, y) } -> std::same_as<typename M::value_type>;
  { m.plus(x, y) } -> std::same_as<typename M::value_type>;
  { m.neg(x) } -> std::same_as<typename M::value_type>;
  { m.zero() } -> std::same_as<typename M::value_type>;
  { m.unit() } -> std::same_as<typename M::value_type>;
  { m.div_by_nat(x, n) } -> std::same_as<typename M::value_type>;
  { m.equal(x, y) } -> std::same_as<bool>;
  { m.describe(x) } -> std::convertible_to<std::string>;
};

/// Models that know how to compute r(X) exactly.
template <typename M>
concept NormedSemifield = Char1Semifield<M> && requires(const M& m, const typename M::value_type& x) {
  { m.r_norm(x) } -> std::same_as<Rat>;
};

/// Thrown by r_norm() for models without an exact infimum procedure.
class no_exact_norm : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <Char1Semifield M>
using element_t = typename M::value_type;

/// X <= Y iff X (+) Y = Y.
template <Char1Semifield M>
bool leq(const M& m, const element_t<M>& x, const element_t<M>& y) {
  return m.equal(m.oplus(x, y), y);
}

template <Char1Semifield M>
element_t<M> minus(const M& m, const element_t<M>& x, const element_t<M>& y) {
  return m.plus(x, m.neg(y));
}

template <Char1Semifield M>
element_t<M> pos_part(const M& m, const element_t<M>& x) {
  return m.oplus(m.zero(), x);
}

template <Char1Semifield M>
element_t<M> neg_part(const M& m, const element_t<M>& x) {
  return m.oplus(m.zero(), m.neg(x));
}

/// X = pos - neg with both parts >= 0.
template <Char1Semifield M>
std::pair<element_t<M>, element_t<M>> decompose(const M& m, const element_t<M>& x) {
  return {pos_part(m, x), neg_part(m, x)};
}

/// The dual law -((-X) (+) (-Y)).
template <Char1Semifield M>
element_t<M> tropical_min(const M& m, const element_t<M>& x, const element_t<M>& y) {
  return m.neg(m.oplus(m.neg(x), m.neg(y)));
}

/// n-fold sum nX by doubling; n = 0 gives the neutral element.
template <Char1Semifield M>
element_t<M> nat_multiple(const M& m, const element_t<M>& x, mpz_class n) {
  element_t<M> acc = m.zero();
  element_t<M> base = x;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = m.plus(acc, base);
    n >>= 1;
    if (n > 0) base = m.plus(base, base);
  }
  return acc;
}

/// theta_t for rational t: theta_{a/b} = theta_a o theta_b^{-1}, extended to
/// t <= 0 by theta_{-t}(X) = -theta_t(X) and theta_0 = 0.
template <Char1Semifield M>
element_t<M> frobenius_scale(const M& m, const Rat& t, const element_t<M>& x) {
  if (t == 0) return m.zero();
  const mpz_class num = abs(t.get_num());
  const mpz_class den = t.get_den();
  element_t<M> y = x;
  if (den != 1) {
    if (!den.fits_ulong_p()) throw precondition_error("scale denominator too large");
    y = m.div_by_nat(y, den.get_ui());
  }
  y = nat_multiple(m, y, num);
  return t < 0 ? m.neg(y) : y;
}

/// n(X (+) Y) == (+)_{k=0..n} (kX + (n-k)Y); true for every lawful model.
template <Char1Semifield M>
bool power_identity_check(const M& m, unsigned n, const element_t<M>& x, const element_t<M>& y) {
  if (n == 0) throw precondition_error("power identity needs n >= 1");
  const element_t<M> lhs = nat_multiple(m, m.oplus(x, y), n);
  std::vector<element_t<M>> xs{m.zero()};
  std::vector<element_t<M>> ys{m.zero()};
  for (unsigned k = 1; k <= n; ++k) {
    xs.push_back(m.plus(xs.back(), x));
    ys.push_back(m.plus(ys.back(), y));
  }
  element_t<M> rhs = ys[n];
  for (unsigned k = 1; k <= n; ++k) rhs = m.oplus(rhs, m.plus(xs[k], ys[n - k]));
  return m.equal(lhs, rhs);
}

/// Least t >= 0 with -tE <= X <= tE, delegated to the model's exact procedure.
template <Char1Semifield M>
Rat r_norm(const M& m, const element_t<M>& x) {
  if constexpr (NormedSemifield<M>) {
    return m.r_norm(x);
  } else {
    (void)m;
    (void)x;
    throw no_exact_norm("model has no exact r-norm procedure");
  }
}

/// Order-side check that t bounds X: -tE <= X <= tE.
template <Char1Semifield M>
bool within_unit_band(const M& m, const Rat& t, const element_t<M>& x) {
  const element_t<M> band = frobenius_scale(m, t, m.unit());
  return leq(m, m.neg(band), x) && leq(m, x, band);
}

}  // namespace char1

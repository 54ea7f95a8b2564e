#include "char1/congruence.hpp"

#include <algorithm>

#include "char1/error.hpp"

namespace char1 {

ClosedSet::ClosedSet(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.b < iv.a) throw invariant_error("interval with a > b");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); });
  for (Interval& iv : intervals) {
    if (!intervals_.empty() && iv.a <= intervals_.back().b) {
      intervals_.back().b = max_rat(intervals_.back().b, iv.b);
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

bool ClosedSet::contains(const Rat& t) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.a <= t && t <= iv.b; });
}

bool ClosedSet::within(const Rat& lo, const Rat& hi) const {
  return empty() || (lo <= intervals_.front().a && intervals_.back().b <= hi);
}

ClosedSet set_union(const ClosedSet& x, const ClosedSet& y) {
  std::vector<Interval> all = x.intervals();
  all.insert(all.end(), y.intervals().begin(), y.intervals().end());
  return ClosedSet(std::move(all));
}

ClosedSet set_intersection(const ClosedSet& x, const ClosedSet& y) {
  std::vector<Interval> out;
  for (const Interval& p : x.intervals()) {
    for (const Interval& q : y.intervals()) {
      const Rat a = max_rat(p.a, q.a);
      const Rat b = min_rat(p.b, q.b);
      if (a <= b) out.push_back({a, b});
    }
  }
  return ClosedSet(std::move(out));
}

Paf distance_to(const ClosedSet& k, const Rat& lo, const Rat& hi) {
  if (k.empty()) throw precondition_error("distance to the empty set");
  const auto dist = [&](const Rat& t) {
    Rat best = -1;
    for (const Interval& iv : k.intervals()) {
      const Rat d = t < iv.a ? Rat(iv.a - t) : (iv.b < t ? Rat(t - iv.b) : Rat(0));
      if (best < 0 || d < best) best = d;
    }
    return best;
  };
  // dist is affine between interval ends and gap midpoints.
  std::vector<Rat> nodes{lo, hi};
  const auto& ivs = k.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    nodes.push_back(ivs[i].a);
    nodes.push_back(ivs[i].b);
    if (i + 1 < ivs.size()) nodes.push_back((ivs[i].b + ivs[i + 1].a) / 2);
  }
  std::vector<Rat> inside;
  for (const Rat& t : nodes) {
    if (lo <= t && t <= hi) inside.push_back(t);
  }
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  std::vector<Rat> values;
  values.reserve(inside.size());
  for (const Rat& t : inside) values.push_back(dist(t));
  return Paf::interpolate(inside, values);
}

namespace {

void require_within(const ClosedSet& k, const Paf& f) {
  if (!k.within(f.lo(), f.hi())) throw precondition_error("closed set leaves the function's domain");
}

Rat sup_abs_on(const Paf& f, const ClosedSet& k) {
  require_within(k, f);
  Rat best = 0;
  for (const Interval& iv : k.intervals()) best = max_rat(best, max_abs_on(f, iv.a, iv.b));
  return best;
}

}  // namespace

bool class_of_zero_contains(const RestrictionCongruence& r, const Paf& f) {
  return sup_abs_on(f, r.support_set()) == 0;
}

bool related(const RestrictionCongruence& r, const Paf& f, const Paf& g) {
  return class_of_zero_contains(r, plus(f, neg(g)));
}

bool sandwich(const RestrictionCongruence& r, const Paf& a, const Paf& b, const Paf& c) {
  if (!(oplus(a, b) == b && oplus(b, c) == c)) throw precondition_error("sandwich needs A <= B <= C");
  return class_of_zero_contains(r, b);
}

Rat quotient_norm(const Paf& f, const ClosedSet& k) {
  if (k.empty()) throw precondition_error("quotient norm over an empty set");
  return sup_abs_on(f, k);
}

Paf min_representative(const Paf& f, const ClosedSet& k) { return clamp(f, quotient_norm(f, k)); }

bool quotient_leq(const RestrictionCongruence& r, const Paf& x, const Paf& y) {
  const Paf d = plus(x, neg(y));
  for (const Interval& iv : r.support_set().intervals()) {
    if (d.eval(iv.a) > 0 || d.eval(iv.b) > 0) return false;
    for (const Rat& t : d.breakpoints()) {
      if (iv.a < t && t < iv.b && d.eval(t) > 0) return false;
    }
  }
  return true;
}

Paf quotient_order_witness(const Paf& x, const Paf& y) {
  const Paf d = plus(x, neg(y));
  return oplus(Paf::constant(d.lo(), d.hi(), 0), d);
}

RestrictionCongruence join(const RestrictionCongruence& r1, const RestrictionCongruence& r2) {
  return RestrictionCongruence(set_intersection(r1.support_set(), r2.support_set()));
}

RestrictionCongruence meet(const RestrictionCongruence& r1, const RestrictionCongruence& r2) {
  return RestrictionCongruence(set_union(r1.support_set(), r2.support_set()));
}

std::pair<Paf, Paf> join_decompose(const Paf& f, const RestrictionCongruence& r1,
                                   const RestrictionCongruence& r2) {
  const ClosedSet& k1 = r1.support_set();
  const ClosedSet& k2 = r2.support_set();
  if (!class_of_zero_contains(join(r1, r2), f)) {
    throw precondition_error("function does not vanish on K1 n K2");
  }
  const Paf zero = Paf::constant(f.lo(), f.hi(), 0);
  if (k1.empty()) return {f, zero};
  if (k2.empty()) return {zero, f};
  require_within(k2, f);
  const Paf d1 = distance_to(k1, f.lo(), f.hi());

  // M = sup over K2 of |f| / d1. On a cell where both are affine the ratio
  // is monotone; where d1 vanishes at a cell end, f does too (that end lies
  // in K1 n K2) and the ratio tends to |slope_f / slope_d1|.
  const auto ratio_at = [&](const Rat& t) -> Rat { return abs_rat(f.eval(t)) / d1.eval(t); };
  Rat m = 0;
  const std::vector<Rat> grid = merge_grids(f.breakpoints(), d1.breakpoints());
  for (const Interval& iv : k2.intervals()) {
    if (iv.a == iv.b) {
      if (d1.eval(iv.a) > 0) m = max_rat(m, ratio_at(iv.a));
      continue;
    }
    std::vector<Rat> cell_ends{iv.a};
    for (const Rat& t : grid) {
      if (iv.a < t && t < iv.b) cell_ends.push_back(t);
    }
    cell_ends.push_back(iv.b);
    for (std::size_t c = 0; c + 1 < cell_ends.size(); ++c) {
      const Rat& u = cell_ends[c];
      const Rat& v = cell_ends[c + 1];
      const Rat du = d1.eval(u);
      const Rat dv = d1.eval(v);
      if (du == 0 && dv == 0) continue;  // cell inside K1 n K2, f = 0 there
      const Rat mid = (u + v) / 2;
      const Rat fs = f.right_slope(mid);
      const Rat ds = d1.right_slope(mid);
      const auto bound_at = [&](const Rat& t, const Rat& d) { return d > 0 ? ratio_at(t) : Rat(abs_rat(fs / ds)); };
      m = max_rat(m, bound_at(u, du));
      m = max_rat(m, bound_at(v, dv));
    }
  }
  const Paf f1 = clamp_by(f, scale(m, d1));
  return {f1, plus(f, neg(f1))};
}

ClosedSet zariski_V(const RestrictionCongruence& r) { return r.support_set(); }

bool in_zariski_V(const RestrictionCongruence& r, const Rat& x, const Rat& lo, const Rat& hi) {
  if (r.is_trivial()) return false;  // 0 ~ E, and phi(E) = 1 != 0 = phi(0)
  // Every g in the class of zero vanishes wherever dist(., K) does, and this
  // bump is itself in the class of zero.
  return distance_to(r.support_set(), lo, hi).eval(x) == 0;
}

bool zariski_laws(const RestrictionCongruence& r1, const RestrictionCongruence& r2) {
  return zariski_V(meet(r1, r2)) == set_union(zariski_V(r1), zariski_V(r2)) &&
         zariski_V(join(r1, r2)) == set_intersection(zariski_V(r1), zariski_V(r2));
}

bool fractions_related(const RestrictionCongruence& r, const Paf& a, const Paf& b, const Paf& a2,
                       const Paf& b2) {
  for (const Paf* p : {&a, &b, &a2, &b2}) {
    if (!is_convex(*p)) throw precondition_error("fraction pairs must be built from convex PAFs");
  }
  return related(r, plus(a, b2), plus(a2, b));
}

}  // namespace char1

#include "char1/paf.hpp"

#include <algorithm>
#include <functional>

#include "char1/error.hpp"
#include "char1/io.hpp"

namespace char1 {

namespace {

// Builds a canonical Paf from (breakpoint, piece) data already known to be
// continuous. Skips the validating constructor's continuity scan.
struct Builder {
  std::vector<Rat> breaks;
  std::vector<AffinePiece> pieces;

  void start(const Rat& lo) { breaks.push_back(lo); }
  void push(const AffinePiece& p, const Rat& right_end) {
    pieces.push_back(p);
    breaks.push_back(right_end);
  }
};

// Walks the common refinement of two breakpoint grids and calls
// visit(u, v, piece_f, piece_g) once per cell.
void for_each_cell(const Paf& f, const Paf& g,
                   const std::function<void(const Rat&, const Rat&, const AffinePiece&,
                                            const AffinePiece&)>& visit) {
  const std::vector<Rat> grid = merge_grids(f.breakpoints(), g.breakpoints());
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t c = 0; c + 1 < grid.size(); ++c) {
    const Rat& u = grid[c];
    const Rat& v = grid[c + 1];
    while (f.breakpoints()[i + 1] <= u) ++i;
    while (g.breakpoints()[j + 1] <= u) ++j;
    visit(u, v, f.pieces()[i], g.pieces()[j]);
  }
}

void require_same_domain(const Paf& f, const Paf& g) {
  if (!f.same_domain(g)) {
    throw precondition_error("domain mismatch: [" + to_string(f.lo()) + "," + to_string(f.hi()) +
                             "] vs [" + to_string(g.lo()) + "," + to_string(g.hi()) + "]");
  }
}

// Upper (take_max) or lower envelope of two PAFs on the same domain.
Paf envelope(const Paf& f, const Paf& g, bool take_max) {
  require_same_domain(f, g);
  Builder b;
  b.start(f.lo());
  for_each_cell(f, g, [&](const Rat& u, const Rat& v, const AffinePiece& pf, const AffinePiece& pg) {
    Rat du = pf.at(u) - pg.at(u);
    Rat dv = pf.at(v) - pg.at(v);
    if (!take_max) {
      du = -du;
      dv = -dv;
    }
    if (du >= 0 && dv >= 0) {
      b.push(pf, v);
    } else if (du <= 0 && dv <= 0) {
      b.push(pg, v);
    } else {
      // Strict sign change: the crossing lies strictly inside (u, v).
      const Rat c = u + (v - u) * du / (du - dv);
      b.push(du > 0 ? pf : pg, c);
      b.push(du > 0 ? pg : pf, v);
    }
  });
  return Paf(std::move(b.breaks), std::move(b.pieces));
}

}  // namespace

Paf::Paf(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.size() < 2) throw invariant_error("a PAF needs at least the two domain ends");
  if (pieces_.size() + 1 != breaks_.size()) {
    throw invariant_error("a PAF needs exactly one piece per cell");
  }
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1])) throw invariant_error("breakpoints must be strictly increasing");
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Rat& t = breaks_[i + 1];
    if (pieces_[i].at(t) != pieces_[i + 1].at(t)) {
      throw invariant_error("discontinuity at breakpoint " + to_string(t));
    }
  }
  canonicalize();
}

void Paf::canonicalize() {
  std::vector<Rat> breaks{breaks_.front()};
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!pieces.empty() && pieces_[i] == pieces.back()) {
      breaks.back() = breaks_[i + 1];
    } else {
      pieces.push_back(pieces_[i]);
      breaks.push_back(breaks_[i + 1]);
    }
  }
  breaks_ = std::move(breaks);
  pieces_ = std::move(pieces);
}

Paf Paf::affine(const Rat& lo, const Rat& hi, const Rat& slope, const Rat& intercept) {
  if (!(lo < hi)) throw invariant_error("domain needs lo < hi");
  return Paf({lo, hi}, {AffinePiece{slope, intercept}});
}

Paf Paf::constant(const Rat& lo, const Rat& hi, const Rat& value) { return affine(lo, hi, 0, value); }

Paf Paf::interpolate(const std::vector<Rat>& ts, const std::vector<Rat>& values) {
  if (ts.size() != values.size() || ts.size() < 2) {
    throw invariant_error("interpolation needs matching lists of at least two points");
  }
  std::vector<AffinePiece> pieces;
  pieces.reserve(ts.size() - 1);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (!(ts[i] < ts[i + 1])) throw invariant_error("interpolation nodes must be strictly increasing");
    const Rat slope = (values[i + 1] - values[i]) / (ts[i + 1] - ts[i]);
    pieces.push_back({slope, values[i] - slope * ts[i]});
  }
  return Paf(ts, std::move(pieces));
}

std::vector<Rat> Paf::interior_breakpoints() const {
  return {breaks_.begin() + 1, breaks_.end() - 1};
}

std::size_t Paf::cell_of(const Rat& t) const {
  if (!in_domain(t)) {
    throw precondition_error("point " + to_string(t) + " outside [" + to_string(lo()) + "," +
                             to_string(hi()) + "]");
  }
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  const auto idx = static_cast<std::size_t>(it - breaks_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, pieces_.size() - 1);
}

Rat Paf::eval(const Rat& t) const { return pieces_[cell_of(t)].at(t); }

Rat Paf::right_slope(const Rat& t) const { return pieces_[cell_of(t)].slope; }

Rat Paf::left_slope(const Rat& t) const {
  const std::size_t c = cell_of(t);
  if (c > 0 && breaks_[c] == t) return pieces_[c - 1].slope;
  return pieces_[c].slope;
}

Rat eval(const Paf& f, const Rat& t) { return f.eval(t); }

Paf oplus(const Paf& f, const Paf& g) { return envelope(f, g, true); }
Paf pointwise_min(const Paf& f, const Paf& g) { return envelope(f, g, false); }

Paf plus(const Paf& f, const Paf& g) {
  require_same_domain(f, g);
  Builder b;
  b.start(f.lo());
  for_each_cell(f, g, [&](const Rat&, const Rat& v, const AffinePiece& pf, const AffinePiece& pg) {
    b.push({pf.slope + pg.slope, pf.intercept + pg.intercept}, v);
  });
  return Paf(std::move(b.breaks), std::move(b.pieces));
}

Paf neg(const Paf& f) { return scale(-1, f); }

Paf scale(const Rat& q, const Paf& f) {
  std::vector<AffinePiece> pieces;
  pieces.reserve(f.pieces().size());
  for (const AffinePiece& p : f.pieces()) pieces.push_back({q * p.slope, q * p.intercept});
  return Paf(f.breakpoints(), std::move(pieces));
}

Rat r_norm_const(const Paf& f) { return max_abs_on(f, f.lo(), f.hi()); }

bool is_anchored(const Paf& f) { return f.lo() == 0 && f.hi() == 1 && f.eval(0) == 0; }

WeightedNorms weighted_norms(const Paf& f) {
  if (!(f.lo() == 0 && f.hi() == 1)) throw precondition_error("weighted norms need domain [0,1]");
  if (f.eval(0) != 0) throw precondition_error("weighted norms need f(0) = 0");
  // f(t)/t = a + b/t is monotone on each cell, and on the first cell b = 0,
  // so the supremum over ]0,1] is a maximum over breakpoints t > 0.
  WeightedNorms out{0, 0};
  for (std::size_t i = 1; i < f.breakpoints().size(); ++i) {
    const Rat& t = f.breakpoints()[i];
    out.r = max_rat(out.r, abs_rat(f.eval(t)) / t);
  }
  for (const AffinePiece& p : f.pieces()) out.lipschitz = max_rat(out.lipschitz, abs_rat(p.slope));
  return out;
}

bool is_convex(const Paf& f) {
  for (std::size_t i = 0; i + 1 < f.pieces().size(); ++i) {
    if (f.pieces()[i + 1].slope < f.pieces()[i].slope) return false;
  }
  return true;
}

Paf clamp(const Paf& f, const Rat& c) {
  if (c < 0) throw precondition_error("clamp bound must be nonnegative");
  return clamp_by(f, Paf::constant(f.lo(), f.hi(), c));
}

Paf clamp_by(const Paf& f, const Paf& bound) {
  return oplus(pointwise_min(f, bound), neg(bound));
}

Rat max_abs_on(const Paf& f, const Rat& a, const Rat& b) {
  if (b < a) throw precondition_error("empty interval");
  Rat best = max_rat(abs_rat(f.eval(a)), abs_rat(f.eval(b)));
  for (const Rat& t : f.breakpoints()) {
    if (a < t && t < b) best = max_rat(best, abs_rat(f.eval(t)));
  }
  return best;
}

Extremum global_min(const Paf& f) {
  Extremum e{f.eval(f.lo()), f.lo()};
  for (const Rat& t : f.breakpoints()) {
    const Rat v = f.eval(t);
    if (v < e.value) e = {v, t};
  }
  return e;
}

Extremum global_max(const Paf& f) {
  Extremum e{f.eval(f.lo()), f.lo()};
  for (const Rat& t : f.breakpoints()) {
    const Rat v = f.eval(t);
    if (v > e.value) e = {v, t};
  }
  return e;
}

Paf pullback(const Paf& f, const Rat& alpha, const Rat& beta, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw invariant_error("domain needs lo < hi");
  const Rat glo = alpha * lo + beta;
  const Rat ghi = alpha * hi + beta;
  if (!f.in_domain(glo) || !f.in_domain(ghi)) {
    throw precondition_error("reparametrization does not map [" + to_string(lo) + "," +
                             to_string(hi) + "] into the domain");
  }
  std::vector<Rat> nodes{lo, hi};
  if (alpha != 0) {
    for (const Rat& t : f.breakpoints()) {
      const Rat s = (t - beta) / alpha;
      if (lo < s && s < hi) nodes.push_back(s);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<Rat> values;
  values.reserve(nodes.size());
  for (const Rat& s : nodes) values.push_back(f.eval(alpha * s + beta));
  return Paf::interpolate(nodes, values);
}

std::vector<Rat> merge_grids(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Rat, Rat>> plot_rows(const Paf& f, std::size_t samples) {
  if (samples < 2) throw precondition_error("plot needs at least 2 samples");
  std::vector<Rat> grid;
  grid.reserve(samples);
  const Rat step = (f.hi() - f.lo()) / Rat(static_cast<unsigned long>(samples - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    grid.push_back(i + 1 == samples ? f.hi() : Rat(f.lo() + step * static_cast<unsigned long>(i)));
  }
  std::vector<std::pair<Rat, Rat>> rows;
  for (const Rat& t : merge_grids(grid, f.breakpoints())) rows.emplace_back(t, f.eval(t));
  return rows;
}

PafModel::PafModel(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw invariant_error("domain needs lo < hi");
}

void PafModel::check(const Paf& x) const {
  if (x.lo() != lo_ || x.hi() != hi_) throw precondition_error("element outside the model's domain");
}

Paf PafModel::oplus(const Paf& x, const Paf& y) const {
  check(x);
  return char1::oplus(x, y);
}

Paf PafModel::plus(const Paf& x, const Paf& y) const {
  check(x);
  return char1::plus(x, y);
}

Paf PafModel::neg(const Paf& x) const {
  check(x);
  return char1::neg(x);
}

Paf PafModel::div_by_nat(const Paf& x, std::size_t n) const {
  if (n == 0) throw precondition_error("division by zero");
  check(x);
  return scale(Rat(1, static_cast<unsigned long>(n)), x);
}

Rat PafModel::r_norm(const Paf& x) const {
  check(x);
  return r_norm_const(x);
}

std::string PafModel::describe(const Paf& x) const { return to_json(x).dump(); }

void AnchoredPafModel::check(const Paf& x) {
  if (!is_anchored(x)) throw precondition_error("element is not in the anchored semifield (f(0) = 0 on [0,1])");
}

Paf AnchoredPafModel::oplus(const Paf& x, const Paf& y) const {
  check(x);
  check(y);
  return char1::oplus(x, y);
}

Paf AnchoredPafModel::plus(const Paf& x, const Paf& y) const {
  check(x);
  check(y);
  return char1::plus(x, y);
}

Paf AnchoredPafModel::neg(const Paf& x) const {
  check(x);
  return char1::neg(x);
}

Paf AnchoredPafModel::div_by_nat(const Paf& x, std::size_t n) const {
  if (n == 0) throw precondition_error("division by zero");
  check(x);
  return scale(Rat(1, static_cast<unsigned long>(n)), x);
}

Rat AnchoredPafModel::r_norm(const Paf& x) const { return weighted_norms(x).r; }
Rat AnchoredPafModel::f_norm(const Paf& x) const { return weighted_norms(x).lipschitz; }

std::string AnchoredPafModel::describe(const Paf& x) const { return to_json(x).dump(); }

}  // namespace char1

#include "hilbloc/localize.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <stdexcept>
#include <thread>

#include "hilbloc/errors.hpp"

namespace hilbloc {

std::string to_string(AssignmentKind k) {
  switch (k) {
    case AssignmentKind::T: return "T";
    case AssignmentKind::Seg: return "Seg";
    case AssignmentKind::L: return "L";
  }
  return "?";
}

AssignmentKind parse_kind(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "t") return AssignmentKind::T;
  if (l == "seg" || l == "s") return AssignmentKind::Seg;
  if (l == "l") return AssignmentKind::L;
  throw std::invalid_argument("unknown assignment kind '" + s + "' (expected T, Seg or L)");
}

namespace {

void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= n; ++i) {
    cur.push_back(i);
    compositions(n - i, k - 1, cur, out);
    cur.pop_back();
  }
}

void check_compact_fixed_locus(const ToricSurface& s) {
  if (s.complete()) return;
  for (const auto& c : s.charts())
    if (c.w1.c == 0 && c.w2.c == 0)
      throw InvalidGeometry("chart (" + std::to_string(c.ray1) + "," + std::to_string(c.ray2) +
                            ") has no fiber direction; the fixed locus of the fiber action is not compact");
}

}  // namespace

std::vector<FixedPointTuple> fixed_point_tuples(int charts, int n) {
  if (charts <= 0 || n < 0) throw std::invalid_argument("bad tuple request");
  std::vector<std::vector<int>> sizes;
  std::vector<int> cur;
  compositions(n, charts, cur, sizes);
  std::vector<std::vector<Partition>> parts(n + 1);
  for (int k = 0; k <= n; ++k) parts[k] = enumerate_partitions(k);

  std::vector<FixedPointTuple> out;
  for (const auto& sz : sizes) {
    std::vector<std::size_t> idx(charts, 0);
    while (true) {
      FixedPointTuple t;
      for (int c = 0; c < charts; ++c) t.push_back(parts[sz[c]][idx[c]]);
      out.push_back(std::move(t));
      int c = charts - 1;
      while (c >= 0 && ++idx[c] == parts[sz[c]].size()) idx[c--] = 0;
      if (c < 0) break;
    }
  }
  return out;
}

FactoredTerm contribution_factored(AssignmentKind kind, const FixedPointTuple& tuple, const ToricSurface& s,
                                   const EqLineBundle& m, const VertexConvention& conv) {
  if (tuple.size() != s.charts().size()) throw std::invalid_argument("tuple does not match chart count");
  FactoredTerm t;
  int n = 0;
  if (kind == AssignmentKind::Seg) t.sym_degree = 0;
  for (std::size_t c = 0; c < tuple.size(); ++c) {
    const Partition& p = tuple[c];
    if (p.empty()) continue;
    n += p.size();
    const FixedChart& ch = s.charts()[c];
    LinForm mu = bundle_weight_at(s, m, static_cast<int>(c));
    WeightList tw = tangent_weights(p, ch.w1, ch.w2, conv);
    t.den.insert(t.den.end(), tw.begin(), tw.end());
    switch (kind) {
      case AssignmentKind::T:
        for (const auto& w : tw) t.num.push_back(w + mu);
        break;
      case AssignmentKind::Seg: {
        WeightList tau = taut_weights(p, ch.w1, ch.w2, mu, conv);
        t.sym_forms.insert(t.sym_forms.end(), tau.begin(), tau.end());
        break;
      }
      case AssignmentKind::L: {
        WeightList tau = taut_weights(p, ch.w1, ch.w2, mu, conv);
        for (const auto& x : tau) {
          t.num.push_back(x);
          t.num.push_back(x);
        }
        break;
      }
    }
  }
  if (kind == AssignmentKind::Seg) t.sym_degree = 2 * n;
  return t;
}

RatFunc contribution(AssignmentKind kind, const FixedPointTuple& tuple, const ToricSurface& s,
                     const EqLineBundle& m, const VertexConvention& conv) {
  return to_ratfunc(contribution_factored(kind, tuple, s, m, conv));
}

std::vector<Direction> default_directions() {
  static const long kRho[][2] = {{2, 1}, {3, 2}, {5, 3}, {7, 2}, {11, 7}, {13, 5}, {17, 11}, {19, 13}, {23, 7}, {29, 17}};
  constexpr std::size_t k = std::size(kRho);
  std::vector<Direction> out;
  for (std::size_t i = 0; i < k; ++i) {
    const long* f = kRho[(i + 1) % k];
    out.push_back({make_rational(kRho[i][0], kRho[i][1]), make_rational(f[0], f[1])});
  }
  return out;
}

LaurentAccumulator integrate_along(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                                   const Direction& dir, int top, const IntegrateOptions& opts) {
  std::vector<FixedPointTuple> tuples = fixed_point_tuples(static_cast<int>(s.charts().size()), n);
  constexpr std::size_t kChunk = 32;
  std::size_t chunks = (tuples.size() + kChunk - 1) / kChunk;
  std::vector<LaurentAccumulator> partial(chunks, LaurentAccumulator(top));
  std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, std::max<std::size_t>(chunks, 1));

  auto run_chunk = [&](std::size_t c) {
    std::size_t end = std::min(tuples.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i)
      partial[c].add(expand(contribution_factored(kind, tuples[i], s, m, opts.conv), dir, top));
  };

  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Balanced pairwise fold in chunk order.
  for (std::size_t step = 1; step < chunks; step *= 2)
    for (std::size_t i = 0; i + step < chunks; i += 2 * step) partial[i].merge(partial[i + step]);
  return chunks ? partial[0] : LaurentAccumulator(top);
}

IntegrateResult integrate_detailed(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                                   const IntegrateOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative number of points");
  check_compact_fixed_locus(s);
  IntegrateResult r;
  r.fixed_points = fixed_point_tuples(static_cast<int>(s.charts().size()), n).size();
  const int top = s.complete() ? 1 : 0;
  for (const auto& dir : opts.directions) {
    if (static_cast<int>(r.used.size()) == opts.required_directions) break;
    LaurentAccumulator acc;
    try {
      acc = integrate_along(kind, s, m, n, dir, top, opts);
    } catch (const DegenerateDirection&) {
      continue;
    }
    if (acc.has_pole()) {
      if (!opts.expect_pole)
        throw PoleAtZero(to_string(kind) + " on " + s.name() + " at n=" + std::to_string(n) +
                         ": localized sum has a pole of order " + std::to_string(-acc.lowest_nonzero()) +
                         " at z=0");
      r.pole = true;
      r.pole_order = std::max(r.pole_order, -acc.lowest_nonzero());
    }
    if (s.complete() && sgn(acc.at(1)) != 0)
      throw NonzeroResidual(to_string(kind) + " on " + s.name() + ": localized sum is not constant");
    r.used.push_back(dir);
    r.per_direction.push_back(acc.at(0));
  }
  if (static_cast<int>(r.used.size()) < opts.required_directions)
    throw DegenerateDirection("fewer than " + std::to_string(opts.required_directions) +
                              " generic directions available");
  for (std::size_t i = 1; i < r.per_direction.size(); ++i)
    if (!r.pole && r.per_direction[i] != r.per_direction[0])
      throw DirectionMismatch(to_string(kind) + " on " + s.name() + " at n=" + std::to_string(n) + ": " +
                              to_string(r.per_direction[0]) + " vs " + to_string(r.per_direction[i]));
  r.value = r.per_direction.front();
  return r;
}

BigRational integrate(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                      const IntegrateOptions& opts) {
  IntegrateOptions o = opts;
  o.expect_pole = false;
  return integrate_detailed(kind, s, m, n, o).value;
}

RatFunc integrate_symbolic(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                           const VertexConvention& conv) {
  RatFunc sum;
  for (const auto& t : fixed_point_tuples(static_cast<int>(s.charts().size()), n))
    sum = sum + contribution(kind, t, s, m, conv);
  return sum;
}

QSeries series(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int order,
               const IntegrateOptions& opts) {
  QSeries z(order);
  for (int k = 1; k <= order; ++k) z[k] = integrate(kind, s, m, k, opts);
  return z;
}

}  // namespace hilbloc

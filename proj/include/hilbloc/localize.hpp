#pragma once

#include <string>
#include <vector>

#include "hilbloc/laurent.hpp"
#include "hilbloc/partition.hpp"
#include "hilbloc/qseries.hpp"
#include "hilbloc/ratfunc.hpp"
#include "hilbloc/toric.hpp"

namespace hilbloc {

enum class AssignmentKind { T, Seg, L };

std::string to_string(AssignmentKind k);
// Accepts T, Seg, L (case-insensitive); throws std::invalid_argument.
AssignmentKind parse_kind(const std::string& s);

using FixedPointTuple = std::vector<Partition>;

// All tuples (one partition per chart) of total size n, in a fixed order.
std::vector<FixedPointTuple> fixed_point_tuples(int charts, int n);

FactoredTerm contribution_factored(AssignmentKind kind, const FixedPointTuple& tuple, const ToricSurface& s,
                                   const EqLineBundle& m, const VertexConvention& conv = {});
RatFunc contribution(AssignmentKind kind, const FixedPointTuple& tuple, const ToricSurface& s,
                     const EqLineBundle& m, const VertexConvention& conv = {});

// Generic directions tried in order; the fiber value of each is the next rho.
std::vector<Direction> default_directions();

struct IntegrateOptions {
  int workers = 1;
  bool expect_pole = false;
  VertexConvention conv{};
  std::vector<Direction> directions = default_directions();
  int required_directions = 2;
};

struct IntegrateResult {
  BigRational value;
  bool pole = false;
  int pole_order = 0;  // order of the worst pole when pole is set
  std::vector<Direction> used;
  std::vector<BigRational> per_direction;
  std::size_t fixed_points = 0;
};

// Non-equivariant limit of the localized sum. Throws PoleAtZero (unless
// expect_pole), DirectionMismatch, DegenerateDirection when too few
// directions succeed.
IntegrateResult integrate_detailed(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                                   const IntegrateOptions& opts = {});
BigRational integrate(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                      const IntegrateOptions& opts = {});

// Sum along a single direction, keeping z^k for k <= top.
LaurentAccumulator integrate_along(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                                   const Direction& dir, int top, const IntegrateOptions& opts = {});

// Symbolic sum of all contributions (small n only).
RatFunc integrate_symbolic(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int n,
                           const VertexConvention& conv = {});

QSeries series(AssignmentKind kind, const ToricSurface& s, const EqLineBundle& m, int order,
               const IntegrateOptions& opts = {});

}  // namespace hilbloc

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specjump/factor.hpp"
#include "specjump/poly2.hpp"
#include "specjump/resolution.hpp"

namespace specjump {

struct ResolverLimits {
  int max_blowups = 64;
  int max_factor_degree = kDefaultMaxFactorDegree;
};

/// A squarefree strict-transform factor through a point, with its multiplicity in f.
struct LocalBranch {
  Poly2 germ;
  unsigned multiplicity = 1;
};

/// Worklist state: a point of the partial resolution, moved to the origin of
/// local coordinates (u, v). Exceptional curves through it are coordinate axes:
/// axes[0] is the component {u = 0}, axes[1] the component {v = 0}.
struct InfinitelyNearPoint {
  std::array<std::optional<std::string>, 2> axes;
  std::vector<LocalBranch> strict;
  ChartMap chart;  // original (x, y) in terms of (u, v)

  int axis_count() const { return (axes[0] ? 1 : 0) + (axes[1] ? 1 : 0); }
};

enum class PointVerdict { Snc, BlowUp };

struct Inspection {
  PointVerdict verdict = PointVerdict::Snc;
  std::string reason;
};

/// SNC test at a rational point: every strict branch smooth, transverse to the
/// axes, and at most two curves (axes plus branches) through the point.
Inspection inspect_point(const InfinitelyNearPoint& point);

struct BlowupRecord {
  std::string component;             // id of the new exceptional curve
  std::size_t point = 0;             // index into Resolution::points
  std::vector<std::string> parents;  // exceptional components through the center
};

struct VisitedPoint {
  InfinitelyNearPoint point;
  PointVerdict verdict = PointVerdict::Snc;
};

struct Resolution {
  ResolutionData data;
  std::vector<VisitedPoint> points;
  std::vector<BlowupRecord> blowups;
};

/// Embedded resolution of div(f) at the origin by point blow-ups, with the full trace.
/// Errors: DomainError (f zero or f(0,0) != 0), NonRationalCenter,
/// BlowupLimitExceeded, FactorDegreeExceeded.
Resolution resolve(const Poly2& f, const ResolverLimits& limits = {});

/// The resolution data only.
ResolutionData resolve_germ(const Poly2& f, const ResolverLimits& limits = {});

}  // namespace specjump

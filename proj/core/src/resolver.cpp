#include "specjump/resolver.hpp"

#include <algorithm>
#include <deque>

#include "specjump/error.hpp"
#include "specjump/squarefree2.hpp"
#include "specjump/unipoly.hpp"

namespace specjump {

namespace {

unsigned order_of(const Poly2& p) { return p.order().value_or(0); }

// Order of vanishing of the branch along axis {var = 0} restricted to that axis.
std::optional<unsigned> restricted_order(const Poly2& g, int var) {
  Poly2 restricted;
  for (const auto& [m, c] : g.terms()) {
    if ((var == 0 ? m.a : m.b) == 0) restricted += Poly2::monomial(m.a, m.b, c);
  }
  return restricted.order();
}

// The tangent-cone residual h(1, t) of a branch of order r at the origin.
UniPoly residual(const Poly2& g, unsigned r) {
  std::vector<Rational> coeffs(r + 1);
  const Poly2 cone = g.homogeneous_part(r);
  for (const auto& [m, c] : cone.terms()) coeffs[m.b] = c;
  return UniPoly(std::move(coeffs));
}

class Resolver {
 public:
  Resolver(const Poly2& f, const ResolverLimits& limits) : f_(f), limits_(limits) {}

  Resolution run() {
    if (f_.is_zero()) throw Error(ErrorKind::DomainError, "cannot resolve the zero polynomial");
    if (!f_.constant_term().is_zero()) {
      throw Error(ErrorKind::DomainError, "f(0,0) != 0: the germ does not pass through the origin");
    }
    InfinitelyNearPoint origin;
    for (auto& [layer, mult] : squarefree_decompose(f_)) {
      if (layer.constant_term().is_zero()) origin.strict.push_back({layer, mult});
    }
    origin.chart = ChartMap{Poly2::x(), Poly2::y()};
    out_.data.set_germ(f_);
    // The origin is blown up unconditionally so the fiber over it is a divisor.
    out_.points.push_back({origin, PointVerdict::BlowUp});
    queue_.push_back(0);
    while (!queue_.empty()) {
      const std::size_t index = queue_.front();
      queue_.pop_front();
      blow_up(index);
    }
    return std::move(out_);
  }

 private:
  void blow_up(std::size_t index) {
    if (static_cast<int>(out_.blowups.size()) >= limits_.max_blowups) {
      throw Error(ErrorKind::BlowupLimitExceeded,
                  "blow-up limit " + std::to_string(limits_.max_blowups) + " exceeded");
    }
    const InfinitelyNearPoint point = out_.points[index].point;
    ResolutionData& data = out_.data;

    Component fresh;
    fresh.id = "E" + std::to_string(++exceptional_count_);
    fresh.kind = ComponentKind::Exceptional;
    fresh.over_origin = true;
    fresh.self_intersection = -1;
    fresh.k = 1;
    BlowupRecord record{fresh.id, index, {}};
    for (const auto& axis : point.axes) {
      if (!axis) continue;
      const Component& c = data.component(*axis);
      fresh.m += c.m;
      fresh.k += c.k;
      record.parents.push_back(*axis);
    }
    std::vector<unsigned> orders;
    for (const auto& branch : point.strict) {
      orders.push_back(order_of(branch.germ));
      fresh.m += static_cast<std::int64_t>(branch.multiplicity * orders.back());
    }
    const std::string e = fresh.id;
    data.add_component(std::move(fresh));
    for (const auto& axis : point.axes) {
      if (!axis) continue;
      Component& c = data.component(*axis);
      *c.self_intersection -= 1;
      data.set_intersection(e, *axis, 1);
    }
    if (point.axes[0] && point.axes[1]) {
      data.set_intersection(*point.axes[0], *point.axes[1],
                            data.intersection(*point.axes[0], *point.axes[1]) - 1);
    }
    data.set_chart(e, ChartMap{substitute(point.chart.x, Poly2::x(), Poly2::x() * Poly2::y()),
                               substitute(point.chart.y, Poly2::x(), Poly2::x() * Poly2::y())});
    out_.blowups.push_back(record);

    // Directions on the new line: t in h(1, t) = 0, plus t = infinity.
    std::vector<UniPoly> residuals;
    UniPoly product(Rational(1));
    unsigned at_infinity = 0;
    for (std::size_t i = 0; i < point.strict.size(); ++i) {
      residuals.push_back(residual(point.strict[i].germ, orders[i]));
      product = product * residuals.back();
      at_infinity += orders[i] - static_cast<unsigned>(residuals.back().degree());
    }
    std::vector<IrreducibleFactor> factors =
        product.degree() > 0 ? factor_over_rationals(product, limits_.max_factor_degree)
                             : std::vector<IrreducibleFactor>{};
    std::vector<Rational> roots;
    for (const auto& factor : factors) {
      if (factor.factor.degree() == 1) roots.push_back(-factor.factor.coefficient(0));
    }
    std::sort(roots.begin(), roots.end());
    for (const auto& t : roots) handle(finite_chart(point, orders, t, e));
    if (at_infinity > 0) handle(infinite_chart(point, orders, e));
    for (const auto& factor : factors) {
      if (factor.factor.degree() > 1) add_cluster(point, residuals, factor, e);
    }
  }

  InfinitelyNearPoint finite_chart(const InfinitelyNearPoint& p, const std::vector<unsigned>& orders,
                                   const Rational& t, const std::string& e) const {
    const Poly2 u = Poly2::x();
    const Poly2 y_image = Poly2::x() * (Poly2::y() + Poly2(t));
    InfinitelyNearPoint next;
    next.axes = {e, t.is_zero() ? p.axes[1] : std::nullopt};
    next.chart = ChartMap{substitute(p.chart.x, u, y_image), substitute(p.chart.y, u, y_image)};
    transform_branches(p, orders, u, y_image, next);
    return next;
  }

  InfinitelyNearPoint infinite_chart(const InfinitelyNearPoint& p,
                                     const std::vector<unsigned>& orders,
                                     const std::string& e) const {
    const Poly2 x_image = Poly2::x() * Poly2::y();
    const Poly2 y_image = Poly2::x();
    InfinitelyNearPoint next;
    next.axes = {e, p.axes[0]};
    next.chart = ChartMap{substitute(p.chart.x, x_image, y_image),
                          substitute(p.chart.y, x_image, y_image)};
    transform_branches(p, orders, x_image, y_image, next);
    return next;
  }

  static void transform_branches(const InfinitelyNearPoint& p, const std::vector<unsigned>& orders,
                                 const Poly2& x_image, const Poly2& y_image,
                                 InfinitelyNearPoint& next) {
    for (std::size_t i = 0; i < p.strict.size(); ++i) {
      Poly2 strict = substitute(p.strict[i].germ, x_image, y_image).divide_monomial(orders[i], 0);
      if (strict.constant_term().is_zero()) next.strict.push_back({strict, p.strict[i].multiplicity});
    }
  }

  void handle(InfinitelyNearPoint point) {
    const Inspection inspection = inspect_point(point);
    const std::size_t index = out_.points.size();
    out_.points.push_back({point, inspection.verdict});
    if (inspection.verdict == PointVerdict::BlowUp) {
      queue_.push_back(index);
      return;
    }
    for (const auto& branch : point.strict) {
      const std::string id = add_strict(branch.multiplicity, 1);
      for (const auto& axis : point.axes) {
        if (axis) out_.data.set_intersection(id, *axis, 1);
      }
    }
  }

  // A simple irreducible residual factor of degree > 1: its conjugate points
  // are smooth transverse crossings, recorded together as one cluster.
  void add_cluster(const InfinitelyNearPoint& p, const std::vector<UniPoly>& residuals,
                   const IrreducibleFactor& factor, const std::string& e) {
    if (factor.multiplicity > 1) {
      throw Error(ErrorKind::NonRationalCenter,
                  "non-SNC point with irrational coordinates on " + e + ": residual factor " +
                      factor.factor.str("t") + " has multiplicity " +
                      std::to_string(factor.multiplicity));
    }
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      if (residuals[i].degree() >= factor.factor.degree() &&
          divmod(residuals[i], factor.factor).second.is_zero()) {
        const std::string id = add_strict(p.strict[i].multiplicity, factor.factor.degree());
        out_.data.set_intersection(id, e, factor.factor.degree());
        return;
      }
    }
    throw Error(ErrorKind::InvalidArgument, "internal: residual factor owned by no branch");
  }

  std::string add_strict(unsigned multiplicity, int cluster_degree) {
    Component c;
    c.id = "S" + std::to_string(++strict_count_);
    c.kind = ComponentKind::Strict;
    c.m = multiplicity;
    c.k = 0;
    c.over_origin = false;
    c.cluster_degree = cluster_degree;
    out_.data.add_component(c);
    return c.id;
  }

  Poly2 f_;
  ResolverLimits limits_;
  Resolution out_;
  std::deque<std::size_t> queue_;
  int exceptional_count_ = 0;
  int strict_count_ = 0;
};

}  // namespace

Inspection inspect_point(const InfinitelyNearPoint& point) {
  unsigned total = 0;
  const Poly2* smooth = nullptr;
  for (const auto& branch : point.strict) {
    const unsigned r = order_of(branch.germ);
    total += r;
    if (r == 1) smooth = &branch.germ;
  }
  const int axes = point.axis_count();
  if (total == 0) return {PointVerdict::Snc, "no strict branch through the point"};
  if (total >= 2) return {PointVerdict::BlowUp, "singular strict transform (order " +
                                                    std::to_string(total) + ")"};
  if (axes >= 2) return {PointVerdict::BlowUp, "strict branch through a crossing of two exceptional curves"};
  for (int var = 0; var < 2; ++var) {
    if (!point.axes[static_cast<std::size_t>(var)]) continue;
    const auto contact = restricted_order(*smooth, var);
    if (!contact || *contact != 1) {
      return {PointVerdict::BlowUp, "strict branch tangent to " + *point.axes[static_cast<std::size_t>(var)] +
                                        " (contact " + (contact ? std::to_string(*contact) : "inf") + ")"};
    }
  }
  return {PointVerdict::Snc, "smooth strict branch crossing transversally"};
}

Resolution resolve(const Poly2& f, const ResolverLimits& limits) { return Resolver(f, limits).run(); }

ResolutionData resolve_germ(const Poly2& f, const ResolverLimits& limits) {
  return resolve(f, limits).data;
}

}  // namespace specjump

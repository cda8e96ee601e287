#include "specjump/resolution.hpp"

#include <algorithm>

#include "specjump/error.hpp"
#include "specjump/unipoly.hpp"

namespace specjump {

std::string_view to_string(ComponentKind kind) {
  return kind == ComponentKind::Exceptional ? "exceptional" : "strict";
}

ResolutionData::PairKey ResolutionData::key(std::string_view a, std::string_view b) {
  return a < b ? PairKey{std::string(a), std::string(b)} : PairKey{std::string(b), std::string(a)};
}

void ResolutionData::add_component(Component c) {
  if (c.id.empty()) throw Error(ErrorKind::Schema, "component id must be nonempty");
  if (index_.contains(c.id)) throw Error(ErrorKind::Schema, "duplicate component id '" + c.id + "'");
  index_.emplace(c.id, components_.size());
  components_.push_back(std::move(c));
}

void ResolutionData::set_intersection(std::string_view a, std::string_view b, std::int64_t points) {
  if (a == b) throw Error(ErrorKind::Schema, "intersection of '" + std::string(a) + "' with itself");
  if (!contains(a) || !contains(b)) {
    throw Error(ErrorKind::UnknownComponent,
                "intersection references unknown component '" +
                    std::string(contains(a) ? b : a) + "'");
  }
  if (points < 0) throw Error(ErrorKind::Schema, "negative intersection count");
  if (points == 0) {
    intersections_.erase(key(a, b));
  } else {
    intersections_[key(a, b)] = points;
  }
}

const Component& ResolutionData::component(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownComponent, "unknown component '" + std::string(id) + "'");
  }
  return components_[it->second];
}

Component& ResolutionData::component(std::string_view id) {
  return const_cast<Component&>(std::as_const(*this).component(id));
}

bool ResolutionData::contains(std::string_view id) const { return index_.find(id) != index_.end(); }

std::int64_t ResolutionData::intersection(std::string_view a, std::string_view b) const {
  if (a == b) {
    const Component& c = component(a);
    if (!c.self_intersection) {
      throw Error(ErrorKind::Schema, "component '" + c.id + "' has no recorded self-intersection");
    }
    return *c.self_intersection;
  }
  auto it = intersections_.find(key(a, b));
  return it == intersections_.end() ? 0 : it->second;
}

std::vector<std::pair<const Component*, std::int64_t>> ResolutionData::neighbours(
    std::string_view id) const {
  std::vector<std::pair<const Component*, std::int64_t>> out;
  for (const auto& c : components_) {
    if (c.id == id) continue;
    const std::int64_t n = intersection(id, c.id);
    if (n != 0) out.emplace_back(&c, n);
  }
  return out;
}

void ResolutionData::set_chart(std::string_view id, ChartMap chart) {
  if (!component(id).exceptional()) {
    throw Error(ErrorKind::Schema, "chart map given for strict component '" + std::string(id) + "'");
  }
  charts_.insert_or_assign(std::string(id), std::move(chart));
}

const ChartMap* ResolutionData::chart(std::string_view id) const {
  auto it = charts_.find(id);
  return it == charts_.end() ? nullptr : &it->second;
}

bool ResolutionData::has_charts() const {
  return std::all_of(components_.begin(), components_.end(), [this](const Component& c) {
    return !c.exceptional() || chart(c.id) != nullptr;
  });
}

bool ResolutionData::reduced() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Component& c) { return c.exceptional() || c.m == 1; });
}

std::string ResolutionData::fresh_exceptional_id() const {
  for (std::size_t n = 1;; ++n) {
    std::string id = "E" + std::to_string(n);
    if (!contains(id)) return id;
  }
}

std::vector<Violation> validate(const ResolutionData& data) {
  std::vector<Violation> out;
  auto report = [&out](std::string identity, const std::string& id, std::string detail) {
    out.push_back(Violation{std::move(identity), id, std::move(detail)});
  };

  if (data.components().empty()) report("structure", "", "no components");
  bool identities_checkable = true;
  for (const auto& c : data.components()) {
    if (c.m <= 0) report("structure", c.id, "multiplicity m must be positive");
    if (c.k < 0) report("structure", c.id, "discrepancy k must be nonnegative");
    if (c.cluster_degree < 1) report("structure", c.id, "cluster_degree must be positive");
    if (c.exceptional()) {
      if (!c.over_origin) report("structure", c.id, "exceptional component must lie over the origin");
      if (!c.self_intersection) {
        report("structure", c.id, "exceptional component lacks self_intersection");
        identities_checkable = false;
      }
      if (c.cluster_degree != 1) report("structure", c.id, "exceptional component with cluster_degree != 1");
    } else {
      if (c.k != 0) report("structure", c.id, "strict component must have k = 0");
      if (c.over_origin) report("structure", c.id, "strict component cannot lie over the origin");
      if (c.self_intersection) report("structure", c.id, "self_intersection recorded on strict component");
    }
  }
  for (const auto& [pair, points] : data.intersections()) {
    const Component& a = data.component(pair.first);
    const Component& b = data.component(pair.second);
    if (a.exceptional() && b.exceptional() && points > 1) {
      report("structure", a.id, "meets exceptional '" + b.id + "' in " + std::to_string(points) +
                                    " points (expected 0 or 1)");
    }
  }
  if (!identities_checkable) return out;

  for (const auto& ei : data.components()) {
    if (!ei.exceptional()) continue;
    std::int64_t principal = 0;
    std::int64_t canonical = 0;
    for (const auto& ej : data.components()) {
      const std::int64_t meet = data.intersection(ej.id, ei.id);
      principal += ej.m * meet;
      if (ej.exceptional()) canonical += ej.k * meet;
    }
    if (principal != 0) {
      report("principality", ei.id,
             "sum_j m_j (E_j . E_i) = " + std::to_string(principal) + ", expected 0");
    }
    const std::int64_t expected = -2 - *ei.self_intersection;
    if (canonical != expected) {
      report("adjunction", ei.id,
             "sum_j k_j (E_j . E_i) = " + std::to_string(canonical) + ", expected " +
                 std::to_string(expected));
    }
  }
  return out;
}

namespace {

// Chart for a free point of the parent: (u, v) -> (u, t + u v) composed with
// the parent's chart, with t avoiding every other component's trace on E_parent.
std::optional<ChartMap> free_point_chart(const ResolutionData& data, const Component& parent) {
  const ChartMap* base = data.chart(parent.id);
  if (base == nullptr || !data.germ()) return std::nullopt;
  const Poly2 pulled = substitute(*data.germ(), base->x, base->y);
  const auto order = pulled.adic_order(0);
  if (!order || *order < static_cast<unsigned>(parent.m)) return std::nullopt;
  Poly2 residual;
  for (const auto& [mono, c] : pulled.terms()) {
    if (mono.a == static_cast<unsigned>(parent.m)) residual += Poly2::monomial(0, mono.b, c);
  }
  const UniPoly trace = to_unipoly(residual, 1);
  long t = 0;
  while (trace.evaluate(Rational(t)).is_zero()) ++t;
  const Poly2 u = Poly2::x();
  const Poly2 v = Poly2(Rational(t)) + Poly2::x() * Poly2::y();
  return ChartMap{substitute(base->x, u, v), substitute(base->y, u, v)};
}

}  // namespace

ResolutionData extra_blowup(const ResolutionData& data, std::string_view id) {
  const Component& parent = data.component(id);
  if (!parent.exceptional()) {
    throw Error(ErrorKind::InvalidArgument,
                "extra_blowup needs an exceptional component, '" + parent.id + "' is strict");
  }
  if (!parent.self_intersection) {
    throw Error(ErrorKind::Schema, "component '" + parent.id + "' has no self_intersection");
  }
  ResolutionData out = data;
  Component fresh;
  fresh.id = data.fresh_exceptional_id();
  fresh.kind = ComponentKind::Exceptional;
  fresh.m = parent.m;
  fresh.k = parent.k + 1;
  fresh.over_origin = true;
  fresh.self_intersection = -1;
  out.component(parent.id).self_intersection = *parent.self_intersection - 1;
  const std::string fresh_id = fresh.id;
  out.add_component(std::move(fresh));
  out.set_intersection(fresh_id, parent.id, 1);
  if (auto chart = free_point_chart(data, parent)) out.set_chart(fresh_id, std::move(*chart));
  return out;
}

}  // namespace specjump

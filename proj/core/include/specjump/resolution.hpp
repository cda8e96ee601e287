#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specjump/poly2.hpp"

namespace specjump {

enum class ComponentKind { Exceptional, Strict };

std::string_view to_string(ComponentKind kind);

/// One prime divisor E_i of mu^*D: its multiplicity m_i and its coefficient k_i in K_{Y/X}.
struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::Exceptional;
  std::int64_t m = 0;
  std::int64_t k = 0;
  bool over_origin = false;
  std::optional<std::int64_t> self_intersection;  // exceptional components only
  std::int64_t cluster_degree = 1;                // > 1 for a conjugate cluster of branches

  bool exceptional() const { return kind == ComponentKind::Exceptional; }
  friend bool operator==(const Component&, const Component&) = default;
};

/// Original coordinates (x, y) expressed in a chart (u, v) where the component is {u = 0}.
struct ChartMap {
  Poly2 x;
  Poly2 y;
  friend bool operator==(const ChartMap&, const ChartMap&) = default;
};

/// Combinatorics of an embedded resolution of a plane-curve germ.
///
/// Intersection counts are geometric point counts and are symmetric; only
/// positive counts are stored. Self-intersections live on the components.
class ResolutionData {
 public:
  static constexpr int kAmbientDimension = 2;

  using PairKey = std::pair<std::string, std::string>;

  void add_component(Component c);
  /// Sets E_a . E_b for a != b; zero erases the entry.
  void set_intersection(std::string_view a, std::string_view b, std::int64_t points);

  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::string_view id) const;
  Component& component(std::string_view id);
  bool contains(std::string_view id) const;

  /// E_a . E_b; for a == b the recorded self-intersection (exceptional only).
  std::int64_t intersection(std::string_view a, std::string_view b) const;
  const std::map<PairKey, std::int64_t>& intersections() const { return intersections_; }
  /// Components meeting `id` with their point counts, in component order.
  std::vector<std::pair<const Component*, std::int64_t>> neighbours(std::string_view id) const;

  void set_chart(std::string_view id, ChartMap chart);
  const ChartMap* chart(std::string_view id) const;
  const std::map<std::string, ChartMap, std::less<>>& charts() const { return charts_; }
  /// True when every exceptional component carries a chart map.
  bool has_charts() const;

  /// The germ f the data was computed from, when known.
  const std::optional<Poly2>& germ() const { return germ_; }
  void set_germ(Poly2 f) { germ_ = std::move(f); }

  /// True when every strict component has m = 1.
  bool reduced() const;

  /// A fresh exceptional id of the form E<n>.
  std::string fresh_exceptional_id() const;

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;

 private:
  static PairKey key(std::string_view a, std::string_view b);

  std::vector<Component> components_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<PairKey, std::int64_t> intersections_;
  std::map<std::string, ChartMap, std::less<>> charts_;
  std::optional<Poly2> germ_;
};

struct Violation {
  std::string identity;   // e.g. "principality", "adjunction", "structure"
  std::string component;  // offending component id ("" when global)
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every failed invariant; empty iff the data is valid.
std::vector<Violation> validate(const ResolutionData& data);

/// Blows up a free point of exceptional component `id` (a point on no other
/// component): appends E_new with m = m_parent, k = k_parent + 1, E_new^2 = -1,
/// E_new . E_parent = 1 and lowers E_parent^2 by one. When the parent has a
/// chart map and the germ is known, the new component gets a chart map too.
ResolutionData extra_blowup(const ResolutionData& data, std::string_view id);

}  // namespace specjump

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "q2mlo/rational.hpp"

namespace q2mlo {

// Nonempty interval with rational endpoints. Singletons ([a,a]) are
// first-class; [a,a) and (a,a] are rejected.
struct Interval {
  Rat lo;
  Rat hi;
  bool lo_closed = false;
  bool hi_closed = false;

  Interval(Rat lo_, Rat hi_, bool lo_closed_, bool hi_closed_);

  bool is_singleton() const { return lo == hi; }
  bool contains(const Rat& t) const;
  std::string to_string() const;

  bool operator==(const Interval& other) const = default;
};

Interval open_iv(Rat lo, Rat hi);
Interval closed_iv(Rat lo, Rat hi);
Interval point_iv(Rat p);

// Canonical finite union of intervals: sorted, pairwise disjoint, and
// maximal (touching pieces merged). Canonical form is unique per point set.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet normalized(std::vector<Interval> raw);
  static IntervalSet empty_set() { return IntervalSet(); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rat& t) const;
  bool has_positive_length_part() const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet intersect(const Interval& window) const;
  // Complement relative to [lo, hi] (both closed).
  IntervalSet complement_within(const Rat& lo, const Rat& hi) const;
  IntervalSet shift(std::int64_t delta) const;
  // Mirror image t -> pivot - t.
  IntervalSet reflect(const Rat& pivot) const;

  bool is_subset_of(const IntervalSet& other) const;
  std::vector<Rat> endpoints() const;
  std::string to_string() const;

  bool operator==(const IntervalSet& other) const = default;

 private:
  std::vector<Interval> parts_;
};

// Count of distinct time points in a window (see count_in_window): either
// a finite cardinality, or infinite when a positive-length piece overlaps.
struct WindowCount {
  bool infinite = false;
  std::int64_t count = 0;

  bool at_least(std::int64_t n) const { return infinite || count >= n; }
  bool operator==(const WindowCount&) const = default;
};

// Distinct points of xs strictly inside (a, b). Requires a < b.
WindowCount count_in_window(const IntervalSet& xs, const Rat& a, const Rat& b);

}  // namespace q2mlo

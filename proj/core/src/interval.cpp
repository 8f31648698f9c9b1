#include "q2mlo/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace q2mlo {

Interval::Interval(Rat lo_, Rat hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  if (lo == hi && !(lo_closed && hi_closed))
    throw std::invalid_argument("degenerate half-open interval");
}

bool Interval::contains(const Rat& t) const {
  if (t < lo || t > hi) return false;
  if (t == lo && !lo_closed) return false;
  if (t == hi && !hi_closed) return false;
  return true;
}

std::string Interval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + rat_to_string(lo) + "," + rat_to_string(hi) +
         (hi_closed ? "]" : ")");
}

Interval open_iv(Rat lo, Rat hi) { return Interval(std::move(lo), std::move(hi), false, false); }
Interval closed_iv(Rat lo, Rat hi) { return Interval(std::move(lo), std::move(hi), true, true); }
Interval point_iv(Rat p) { return Interval(p, p, true, true); }

namespace {

// a and b overlap or touch, so their union is a single interval.
bool mergeable(const Interval& a, const Interval& b) {
  // Assumes a.lo <= b.lo (callers sort first).
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

Interval merge(const Interval& a, const Interval& b) {
  Rat lo = a.lo;
  bool lo_closed = a.lo_closed;
  if (b.lo < lo || (b.lo == lo && b.lo_closed)) {
    lo_closed = (b.lo == lo) ? (lo_closed || b.lo_closed) : b.lo_closed;
    lo = std::min(lo, b.lo);
  }
  Rat hi = a.hi;
  bool hi_closed = a.hi_closed;
  if (b.hi > hi) {
    hi = b.hi;
    hi_closed = b.hi_closed;
  } else if (b.hi == hi) {
    hi_closed = hi_closed || b.hi_closed;
  }
  return Interval(lo, hi, lo_closed, hi_closed);
}

}  // namespace

IntervalSet IntervalSet::normalized(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed starts first
    if (a.hi != b.hi) return a.hi < b.hi;
    return b.hi_closed && !a.hi_closed;
  });
  IntervalSet out;
  for (const Interval& iv : raw) {
    if (!out.parts_.empty() && mergeable(out.parts_.back(), iv)) {
      out.parts_.back() = merge(out.parts_.back(), iv);
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

bool IntervalSet::contains(const Rat& t) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                             [](const Rat& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(t);
}

bool IntervalSet::has_positive_length_part() const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [](const Interval& iv) { return !iv.is_singleton(); });
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return normalized(std::move(all));
}

IntervalSet IntervalSet::intersect(const Interval& window) const {
  std::vector<Interval> out;
  for (const Interval& iv : parts_) {
    Rat lo = std::max(iv.lo, window.lo);
    Rat hi = std::min(iv.hi, window.hi);
    if (lo > hi) continue;
    bool lo_closed = (lo == iv.lo ? iv.lo_closed : true) && (lo == window.lo ? window.lo_closed : true);
    bool hi_closed = (hi == iv.hi ? iv.hi_closed : true) && (hi == window.hi ? window.hi_closed : true);
    if (lo == hi && !(lo_closed && hi_closed)) continue;
    out.emplace_back(lo, hi, lo_closed, hi_closed);
  }
  return normalized(std::move(out));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& w : other.parts_) {
    IntervalSet piece = intersect(w);
    out.insert(out.end(), piece.parts_.begin(), piece.parts_.end());
  }
  return normalized(std::move(out));
}

IntervalSet IntervalSet::complement_within(const Rat& lo, const Rat& hi) const {
  // Walk [lo, hi] left to right, emitting the gaps between parts.
  std::vector<Interval> out;
  Rat cur = lo;
  bool cur_closed = true;
  IntervalSet clipped = intersect(closed_iv(lo, hi));
  for (const Interval& iv : clipped.parts_) {
    if (cur < iv.lo || (cur == iv.lo && cur_closed && !iv.lo_closed)) {
      out.emplace_back(cur, iv.lo, cur_closed, !iv.lo_closed);
    }
    cur = iv.hi;
    cur_closed = !iv.hi_closed;
  }
  if (cur < hi || (cur == hi && cur_closed)) {
    out.emplace_back(cur, hi, cur_closed, true);
  }
  return normalized(std::move(out));
}

IntervalSet IntervalSet::shift(std::int64_t delta) const {
  IntervalSet out;
  out.parts_ = parts_;
  for (Interval& iv : out.parts_) {
    iv.lo += Rat(delta);
    iv.hi += Rat(delta);
  }
  return out;
}

IntervalSet IntervalSet::reflect(const Rat& pivot) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out.emplace_back(pivot - it->hi, pivot - it->lo, it->hi_closed, it->lo_closed);
  }
  return normalized(std::move(out));
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const {
  return intersect(other) == *this;
}

std::vector<Rat> IntervalSet::endpoints() const {
  std::vector<Rat> out;
  for (const Interval& iv : parts_) {
    out.push_back(iv.lo);
    if (iv.hi != iv.lo) out.push_back(iv.hi);
  }
  return out;
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (const Interval& iv : parts_) {
    if (!s.empty()) s += " u ";
    s += iv.to_string();
  }
  return s;
}

WindowCount count_in_window(const IntervalSet& xs, const Rat& a, const Rat& b) {
  if (!(a < b)) throw std::invalid_argument("count_in_window requires a < b");
  IntervalSet inside = xs.intersect(open_iv(a, b));
  WindowCount wc;
  for (const Interval& iv : inside.parts()) {
    if (!iv.is_singleton()) {
      wc.infinite = true;
      wc.count = 0;
      return wc;
    }
    ++wc.count;
  }
  return wc;
}

}  // namespace q2mlo

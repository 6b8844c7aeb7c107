#pragma once

// Exact intervals over Q with optional infinite and open/closed endpoints.
// Used for ampleness ranges and discrepancy (singularity) ranges in epsilon;
// every endpoint is an exact rational, never a float.

#include <optional>
#include <string>

#include "logfano/rational.hpp"

namespace logfano {

class EpsilonInterval {
 public:
  // The empty interval.
  EpsilonInterval() : empty_(true) {}

  // General constructor: absent optional = infinite on that side (the open
  // flag is forced on an infinite side).
  EpsilonInterval(std::optional<Rat> lower, bool lower_open, std::optional<Rat> upper,
                  bool upper_open);

  static EpsilonInterval empty_interval() { return EpsilonInterval(); }
  static EpsilonInterval whole_line();
  static EpsilonInterval open(const Rat& lo, const Rat& hi);
  static EpsilonInterval closed(const Rat& lo, const Rat& hi);
  // [lo, hi): the shape of every klt epsilon range here.
  static EpsilonInterval half_open(const Rat& lo, const Rat& hi);
  static EpsilonInterval point(const Rat& v) { return closed(v, v); }

  bool is_empty() const { return empty_; }
  bool has_lower() const { return !empty_ && lower_.has_value(); }
  bool has_upper() const { return !empty_ && upper_.has_value(); }
  const Rat& lower() const;
  const Rat& upper() const;
  bool lower_open() const { return lower_open_; }
  bool upper_open() const { return upper_open_; }

  bool contains(const Rat& x) const;
  EpsilonInterval intersect(const EpsilonInterval& other) const;

  bool operator==(const EpsilonInterval& other) const;

  // "(2/3, 1)", "[0, 2/5)", "(-inf, 1)", "{}" for the empty interval.
  std::string to_string() const;

 private:
  bool empty_ = false;
  std::optional<Rat> lower_;  // nullopt = -infinity
  std::optional<Rat> upper_;  // nullopt = +infinity
  bool lower_open_ = true;
  bool upper_open_ = true;

  void normalize();
};

}  // namespace logfano

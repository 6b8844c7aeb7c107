#include "logfano/interval.hpp"

#include <stdexcept>

namespace logfano {

EpsilonInterval::EpsilonInterval(std::optional<Rat> lower, bool lower_open,
                                 std::optional<Rat> upper, bool upper_open)
    : empty_(false),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      lower_open_(lower_open),
      upper_open_(upper_open) {
  if (!lower_.has_value()) lower_open_ = true;
  if (!upper_.has_value()) upper_open_ = true;
  normalize();
}

void EpsilonInterval::normalize() {
  if (empty_) return;
  if (lower_.has_value() && upper_.has_value()) {
    if (*lower_ > *upper_ || (*lower_ == *upper_ && (lower_open_ || upper_open_))) {
      empty_ = true;
      lower_.reset();
      upper_.reset();
      lower_open_ = upper_open_ = true;
    }
  }
}

EpsilonInterval EpsilonInterval::whole_line() {
  return EpsilonInterval(std::nullopt, true, std::nullopt, true);
}

EpsilonInterval EpsilonInterval::open(const Rat& lo, const Rat& hi) {
  return EpsilonInterval(lo, true, hi, true);
}

EpsilonInterval EpsilonInterval::closed(const Rat& lo, const Rat& hi) {
  return EpsilonInterval(lo, false, hi, false);
}

EpsilonInterval EpsilonInterval::half_open(const Rat& lo, const Rat& hi) {
  return EpsilonInterval(lo, false, hi, true);
}

const Rat& EpsilonInterval::lower() const {
  if (!has_lower()) throw std::logic_error("interval has no finite lower endpoint");
  return *lower_;
}

const Rat& EpsilonInterval::upper() const {
  if (!has_upper()) throw std::logic_error("interval has no finite upper endpoint");
  return *upper_;
}

bool EpsilonInterval::contains(const Rat& x) const {
  if (empty_) return false;
  if (lower_.has_value()) {
    if (lower_open_ ? !(x > *lower_) : !(x >= *lower_)) return false;
  }
  if (upper_.has_value()) {
    if (upper_open_ ? !(x < *upper_) : !(x <= *upper_)) return false;
  }
  return true;
}

EpsilonInterval EpsilonInterval::intersect(const EpsilonInterval& other) const {
  if (empty_ || other.empty_) return EpsilonInterval();
  std::optional<Rat> lo;
  bool lo_open = true;
  if (lower_.has_value() && other.lower_.has_value()) {
    if (*lower_ > *other.lower_ || (*lower_ == *other.lower_ && lower_open_)) {
      lo = lower_;
      lo_open = lower_open_;
    } else {
      lo = other.lower_;
      lo_open = other.lower_open_;
    }
  } else if (lower_.has_value()) {
    lo = lower_;
    lo_open = lower_open_;
  } else if (other.lower_.has_value()) {
    lo = other.lower_;
    lo_open = other.lower_open_;
  }
  std::optional<Rat> hi;
  bool hi_open = true;
  if (upper_.has_value() && other.upper_.has_value()) {
    if (*upper_ < *other.upper_ || (*upper_ == *other.upper_ && upper_open_)) {
      hi = upper_;
      hi_open = upper_open_;
    } else {
      hi = other.upper_;
      hi_open = other.upper_open_;
    }
  } else if (upper_.has_value()) {
    hi = upper_;
    hi_open = upper_open_;
  } else if (other.upper_.has_value()) {
    hi = other.upper_;
    hi_open = other.upper_open_;
  }
  return EpsilonInterval(std::move(lo), lo_open, std::move(hi), hi_open);
}

bool EpsilonInterval::operator==(const EpsilonInterval& other) const {
  if (empty_ != other.empty_) return false;
  if (empty_) return true;
  return lower_ == other.lower_ && upper_ == other.upper_ && lower_open_ == other.lower_open_ &&
         upper_open_ == other.upper_open_;
}

std::string EpsilonInterval::to_string() const {
  if (empty_) return "{}";
  std::string out = lower_open_ ? "(" : "[";
  out += lower_.has_value() ? rat_to_string(*lower_) : "-inf";
  out += ", ";
  out += upper_.has_value() ? rat_to_string(*upper_) : "+inf";
  out += upper_open_ ? ")" : "]";
  return out;
}

}  // namespace logfano

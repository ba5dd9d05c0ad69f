#pragma once

// Edge lengths in [0, ∞] with ∞ as a tagged value.

#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "folab/colored.hpp"

namespace folab {

class Length {
 public:
  constexpr Length() = default;
  explicit Length(double v) : value_(v) {
    if (!(v >= 0.0) || std::isinf(v)) throw error("edge length must be a finite nonnegative number");
  }
  static constexpr Length infinity() {
    Length l;
    l.infinite_ = true;
    return l;
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0.0; }
  /// The finite value; ∞ reads as IEEE infinity.
  double value() const { return infinite_ ? HUGE_VAL : value_; }

  friend Length operator+(Length a, Length b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Length(a.value_ + b.value_);
  }
  Length& operator+=(Length b) { return *this = *this + b; }

  friend bool operator==(Length a, Length b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(Length a, Length b) {
    if (a.infinite_) return false;
    return b.infinite_ || a.value_ < b.value_;
  }

  std::string to_string() const {
    if (infinite_) return "inf";
    std::string s = std::to_string(value_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, Length l) {
    if (l.infinite_) return os << "inf";
    return os << l.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline const Length kInfinity = Length::infinity();

/// An edge labeling t : E(g) -> [0, ∞], keyed by the lower vertex (index into J of the source).
using Labels = std::map<std::size_t, Length>;

}  // namespace folab

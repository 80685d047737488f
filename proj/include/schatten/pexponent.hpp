#pragma once

#include <stdexcept>

namespace schatten {

// Exponent for Schatten norms: a finite value in (0, inf), or infinity.
// Finite values below 1 give quasi-norms; that is intentional.
class PExponent {
 public:
  explicit PExponent(double value) : value_(value), infinite_(false) {
    if (!(value > 0.0) || value > 1e300) {
      throw std::invalid_argument("PExponent: requires 0 < p < inf");
    }
  }

  static PExponent infinity() noexcept {
    PExponent p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }

  // Finite value; calling this with the infinite exponent is a logic error.
  double value() const {
    if (infinite_) throw std::logic_error("PExponent: value() on infinity");
    return value_;
  }

  // 1/p, with 1/inf = 0.
  double inv() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  bool operator==(const PExponent& o) const noexcept {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

 private:
  PExponent() noexcept : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

}  // namespace schatten

#pragma once

#include <cmath>

namespace sgcor {

/// Neumaier's variant of Kahan summation. Order-dependent but reproducible:
/// a fixed sequence of add() calls always yields the same bits.
class NeumaierSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  NeumaierSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }

  void merge(const NeumaierSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace sgcor

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lls {

// Nonnegative extended real, the codomain of a time separation function.
// +infinity is an exact tagged value (the IEEE infinity), never a large float.
class ExtReal {
  public:
    ExtReal() = default;
    explicit ExtReal(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0)
            throw std::invalid_argument("ExtReal: value must be >= 0");
    }

    static ExtReal infinity() {
        ExtReal r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_infinite() const { return std::isinf(v_); }
    // Finite value, or +inf as a double for infinite instances.
    double value() const { return v_; }

    ExtReal operator+(const ExtReal& o) const {
        ExtReal r;
        r.v_ = v_ + o.v_;
        return r;
    }
    ExtReal& operator+=(const ExtReal& o) {
        v_ += o.v_;
        return *this;
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) { return a.v_ == b.v_; }
    friend bool operator<(const ExtReal& a, const ExtReal& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return a.v_ >= b.v_; }

  private:
    double v_ = 0.0;
};

}  // namespace lls

#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace topofilt {

// A real number extended with +/-infinity, totally ordered:
// -inf < every finite value < +inf. NaN is rejected at construction, so the
// ordering is total and exact equality is meaningful. Subtracting infinities
// of the same sign (and adding opposite ones) is a domain error; all other
// mixed arithmetic follows the usual conventions, e.g. (+inf) - finite = +inf.
class ExtendedValue {
public:
    constexpr ExtendedValue() : v_(0.0) {}
    ExtendedValue(double v) : v_(v) {  // implicit: finite doubles promote naturally
        if (std::isnan(v)) throw std::domain_error("ExtendedValue: NaN is not a value");
    }

    static ExtendedValue infinity() { return ExtendedValue(std::numeric_limits<double>::infinity()); }
    static ExtendedValue neg_infinity() { return ExtendedValue(-std::numeric_limits<double>::infinity()); }

    double value() const { return v_; }
    bool finite() const { return std::isfinite(v_); }
    bool is_pos_infinity() const { return std::isinf(v_) && v_ > 0; }
    bool is_neg_infinity() const { return std::isinf(v_) && v_ < 0; }

    friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;
    // NaN is excluded at construction, so the double ordering is total here.
    friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    ExtendedValue operator-() const { return ExtendedValue(-v_); }

    ExtendedValue operator-(const ExtendedValue& rhs) const {
        if (!finite() && !rhs.finite() && v_ == rhs.v_)
            throw std::domain_error("ExtendedValue: subtracting infinities of equal sign");
        return ExtendedValue(v_ - rhs.v_);
    }

    ExtendedValue operator+(const ExtendedValue& rhs) const {
        if (!finite() && !rhs.finite() && v_ != rhs.v_)
            throw std::domain_error("ExtendedValue: adding infinities of opposite sign");
        return ExtendedValue(v_ + rhs.v_);
    }

private:
    double v_;
};

}  // namespace topofilt

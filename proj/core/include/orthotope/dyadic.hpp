#pragma once

#include <cstdint>
#include <string>

#include "orthotope/errors.hpp"

namespace ortho {

/// Exact dyadic rational num / 2^exp, kept normalized (exp == 0 or num odd).
class Dyadic {
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(std::int64_t n) : num_(n) {}

    static constexpr Dyadic scaled(std::int64_t num, unsigned exp) {
        Dyadic d;
        d.num_ = num;
        d.exp_ = exp;
        d.normalize();
        return d;
    }

    /// 2^k, k possibly negative.
    static constexpr Dyadic pow2(int k) {
        return k >= 0 ? Dyadic(std::int64_t{1} << k)
                      : scaled(1, static_cast<unsigned>(-k));
    }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr unsigned exponent() const { return exp_; }
    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return exp_ == 0; }

    constexpr std::int64_t integer_value() const {
        if (exp_ != 0)
            throw NonIntegralResult("dyadic " + to_string() +
                                    " is not an integer");
        return num_;
    }

    constexpr Dyadic operator-() const { return scaled(-num_, exp_); }

    constexpr Dyadic operator+(const Dyadic& o) const {
        const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
        return scaled((num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e);
    }
    constexpr Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    constexpr Dyadic operator*(const Dyadic& o) const {
        return scaled(num_ * o.num_, exp_ + o.exp_);
    }

    constexpr Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    constexpr Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    constexpr Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    constexpr bool operator==(const Dyadic&) const = default;

    std::string to_string() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/2^" + std::to_string(exp_);
    }

private:
    constexpr void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && num_ % 2 == 0) {
            num_ /= 2;
            --exp_;
        }
    }

    std::int64_t num_ = 0;
    std::uint32_t exp_ = 0;
};

} // namespace ortho

#pragma once

#include "isoprod/error.hpp"
#include "isoprod/integer.hpp"

#include <ostream>
#include <string>

namespace isoprod {

/// Exact rational in lowest terms with a positive denominator.
template <exact_integer Int>
class Fraction {
public:
    Fraction(Int num = Int(0), Int den = Int(1)) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == Int(0)) throw precondition_error(error_kind::invalid_argument, "zero denominator");
        if (den_ < Int(0)) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = igcd(num_, den_);
        if (g > Int(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_integer() const { return den_ == Int(1); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend bool operator<(const Fraction& p, const Fraction& q) {
        return p.num_ * q.den_ < q.num_ * p.den_;
    }

    std::string str() const {
        return is_integer() ? to_decimal(num_) : to_decimal(num_) + "/" + to_decimal(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

private:
    Int num_;
    Int den_;
};

}  // namespace isoprod

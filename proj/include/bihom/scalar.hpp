#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

/// Error type for everything the engine can reject: malformed input,
/// shape mismatches, unsatisfied construction preconditions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; equality is value equality. There is no floating-point
/// path anywhere: residuals computed from Scalars are exactly zero or
/// exactly nonzero.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("scalar: zero denominator");
        v_.canonicalize();
    }

    /// Parse "p", "-p", or "p/q". Throws Error on anything else.
    static Scalar parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const { return Scalar(-v_); }
    Scalar operator+(const Scalar& o) const { return Scalar(v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { return Scalar(v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { return Scalar(v_ * o.v_); }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw Error("scalar: division by zero");
        return Scalar(v_ / o.v_);
    }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

using Vec = std::vector<Scalar>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace bihom

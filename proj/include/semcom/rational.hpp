#pragma once
// Exact rational numbers backed by GMP. Every analytic quantity in the
// library (probabilities, costs, distortions, region coordinates) is a
// Rational; floating point appears only in exported plot data and in the
// entropy helper.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace semcom {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "a", "-a", "a/b" with arbitrary-precision decimal digits.
    // Throws std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.v_ > b.v_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.v_ >= b.v_;
    }

    // "a/b", with "/b" omitted when the denominator is 1.
    std::string str() const;
    // Fixed-point decimal with the given number of fractional digits,
    // rounded half away from zero.
    std::string decimal(int digits) const;
    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace semcom

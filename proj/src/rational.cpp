#include "semcom/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace semcom {

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.v_ = -r.v_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!valid_integer(den)) {
            throw std::invalid_argument("rational: malformed denominator in '" +
                                        std::string(text) + "'");
        }
    }
    if (!valid_integer(num)) {
        throw std::invalid_argument("rational: malformed number '" +
                                    std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);  // mpz rejects a leading '+'
    if (!den.empty() && den.front() == '+') den.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("rational: zero denominator in '" +
                                    std::string(text) + "'");
    }
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = num() * scale * 2;  // doubled for round-half-away
    mpz_class q, r;
    mpz_class d2 = den() * 2;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d2.get_mpz_t());
    if (abs(r) * 2 >= d2) q += (sgn(n) < 0 ? -1 : 1);
    bool neg = q < 0;
    mpz_class mag = neg ? mpz_class(-q) : q;
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace semcom

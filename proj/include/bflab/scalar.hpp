#pragma once

// Exact rational scalars on top of GMP. Values are always in canonical
// reduced form: gcd(|num|, den) = 1, den >= 1, zero is 0/1. Equality,
// ordering and the content hash therefore agree with the represented
// rational.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bflab {

static_assert(sizeof(long) == 8, "bflab assumes an LP64 platform");

class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(static_cast<long>(n)) {}
    Scalar(long n) : v_(n) {}
    Scalar(long long n) : v_(static_cast<long>(n)) {}
    explicit Scalar(const mpz_class& n) : v_(n) {}

    Scalar(long num, long den) : Scalar(mpz_class(num), mpz_class(den)) {}

    Scalar(const mpz_class& num, const mpz_class& den) {
        if (sgn(den) == 0) throw std::domain_error("Scalar: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Text grammar: optional sign, decimal integer, optional "/" followed by
    // a positive decimal integer. Examples: "-3/7", "12", "+4/6" (-> 2/3).
    static Scalar parse(std::string_view text) {
        std::string_view rest = text;
        bool negative = false;
        if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
            negative = rest.front() == '-';
            rest.remove_prefix(1);
        }
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num = rest, den = "1";
        if (auto slash = rest.find('/'); slash != std::string_view::npos) {
            num = rest.substr(0, slash);
            den = rest.substr(slash + 1);
        }
        if (!digits(num) || !digits(den))
            throw std::domain_error("Scalar: malformed rational '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (sgn(d) == 0)
            throw std::domain_error("Scalar: zero denominator in '" + std::string(text) + "'");
        if (negative) n = -n;
        return Scalar(n, d);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }
    int signum() const { return sgn(v_); }

    // The integer value, when this is an integer fitting a signed long.
    std::optional<long> as_long() const {
        if (!is_integer()) return std::nullopt;
        if (!mpz_fits_slong_p(v_.get_num().get_mpz_t())) return std::nullopt;
        return v_.get_num().get_si();
    }

    double double_value() const { return v_.get_d(); }

    // Largest integer <= value.
    mpz_class floor_value() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (!is_integer()) s += "/" + v_.get_den().get_str();
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return wrap(a.v_ + b.v_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return wrap(a.v_ - b.v_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return wrap(a.v_ * b.v_); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        return wrap(a.v_ / b.v_);
    }
    Scalar operator-() const { return wrap(-v_); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar reciprocal() const {
        if (is_zero()) throw std::domain_error("Scalar: reciprocal of zero");
        return Scalar(v_.get_den(), v_.get_num());
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](std::size_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mpq_srcptr q = v_.get_mpq_t();
        mpz_srcptr n = mpq_numref(q), d = mpq_denref(q);
        mix(static_cast<std::size_t>(mpz_sgn(n) + 1));
        for (std::size_t i = 0, e = mpz_size(n); i < e; ++i) mix(mpz_getlimbn(n, i));
        for (std::size_t i = 0, e = mpz_size(d); i < e; ++i) mix(mpz_getlimbn(d, i));
        return h;
    }

    const mpq_class& raw() const { return v_; }

private:
    static Scalar wrap(mpq_class q) {
        Scalar s;
        s.v_ = std::move(q);  // results of mpq arithmetic on canonical inputs are canonical
        return s;
    }

    mpq_class v_;
};

inline Scalar abs(const Scalar& s) { return s.signum() < 0 ? -s : s; }

inline Scalar pow(const Scalar& base, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return Scalar(n, d);
}

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace bflab

template <>
struct std::hash<bflab::Scalar> {
    std::size_t operator()(const bflab::Scalar& s) const { return s.hash(); }
};

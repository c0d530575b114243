#pragma once

// Points of the punctured plane, canonical projective directions, and
// nondegenerate 2x2 bilinear forms.

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "bflab/scalar.hpp"

namespace bflab {

struct Point {
    Scalar x, y;

    bool is_origin() const { return x.is_zero() && y.is_zero(); }

    friend bool operator==(const Point& a, const Point& b) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    std::size_t hash() const {
        std::size_t h = x.hash();
        h ^= y.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    std::string str() const { return x.str() + " " + y.str(); }
};

struct PointHash {
    std::size_t operator()(const Point& p) const { return p.hash(); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Scalar& t, const Point& p) { return {t * p.x, t * p.y}; }

// Signed area of the origin triangle 0pq, i.e. det(p q). This is the value of
// the canonical skew form.
inline Scalar cross_det(const Point& p, const Point& q) { return p.x * q.y - p.y * q.x; }

// Primitive integer class of the unoriented line through the origin and a
// nonzero point: gcd(|a|,|b|) = 1 and a > 0, or a = 0 and b = 1, so the two
// antipodal rays map to the same Direction.
class Direction {
public:
    Direction(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {
        if (sgn(a_) == 0 && sgn(b_) == 0)
            throw std::domain_error("degenerate direction");
        mpz_class g = gcd(a_, b_);
        a_ /= g;
        b_ /= g;
        if (sgn(a_) < 0 || (sgn(a_) == 0 && sgn(b_) < 0)) {
            a_ = -a_;
            b_ = -b_;
        }
    }
    Direction(long a, long b) : Direction(mpz_class(a), mpz_class(b)) {}

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }

    // Slope b/a as a point of the projective line ((0:1) has no finite slope).
    bool is_vertical() const { return sgn(a_) == 0; }

    friend bool operator==(const Direction& p, const Direction& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend std::strong_ordering operator<=>(const Direction& p, const Direction& q) {
        if (int c = cmp(p.a_, q.a_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp(p.b_, q.b_);
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
        mix(static_cast<std::size_t>(mpz_sgn(a_.get_mpz_t()) + 1));
        for (std::size_t i = 0, e = mpz_size(a_.get_mpz_t()); i < e; ++i)
            mix(mpz_getlimbn(a_.get_mpz_t(), i));
        mix(static_cast<std::size_t>(mpz_sgn(b_.get_mpz_t()) + 1));
        for (std::size_t i = 0, e = mpz_size(b_.get_mpz_t()); i < e; ++i)
            mix(mpz_getlimbn(b_.get_mpz_t(), i));
        return h;
    }

    std::string str() const { return a_.get_str() + ":" + b_.get_str(); }

private:
    mpz_class a_, b_;
};

struct DirectionHash {
    std::size_t operator()(const Direction& d) const { return d.hash(); }
};

inline Direction direction_of(const Point& p) {
    if (p.is_origin()) throw std::domain_error("degenerate direction");
    // (xn/xd, yn/yd) ~ (xn*yd, yn*xd), the scale xd*yd being positive.
    return Direction(p.x.numerator() * p.y.denominator(),
                     p.y.numerator() * p.x.denominator());
}

enum class FormKind { symmetric, skew_symmetric };

class BilinearForm {
public:
    BilinearForm(Scalar m11, Scalar m12, Scalar m21, Scalar m22, FormKind kind)
        : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)),
          m22_(std::move(m22)), kind_(kind) {
        if ((m11_ * m22_ - m12_ * m21_).is_zero())
            throw std::domain_error("BilinearForm: degenerate (zero determinant)");
        if (kind_ == FormKind::symmetric) {
            if (!(m12_ == m21_))
                throw std::domain_error("BilinearForm: symmetric kind requires m12 = m21");
        } else {
            if (!(m12_ == -m21_) || !m11_.is_zero() || !m22_.is_zero())
                throw std::domain_error(
                    "BilinearForm: skew-symmetric kind requires m11 = m22 = 0, m12 = -m21");
        }
    }

    // Canonical symmetric form: the dot product.
    static BilinearForm dot() {
        return BilinearForm(Scalar(1), Scalar(0), Scalar(0), Scalar(1), FormKind::symmetric);
    }

    // Canonical skew form, matrix ((0,1),(-1,0)); its values are signed areas.
    static BilinearForm skew() {
        return BilinearForm(Scalar(0), Scalar(1), Scalar(-1), Scalar(0),
                            FormKind::skew_symmetric);
    }

    Scalar eval(const Point& p, const Point& q) const {
        return m11_ * p.x * q.x + m12_ * p.x * q.y + m21_ * p.y * q.x + m22_ * p.y * q.y;
    }

    FormKind kind() const { return kind_; }
    const Scalar& m11() const { return m11_; }
    const Scalar& m12() const { return m12_; }
    const Scalar& m21() const { return m21_; }
    const Scalar& m22() const { return m22_; }

private:
    Scalar m11_, m12_, m21_, m22_;
    FormKind kind_;
};

inline Scalar eval_form(const BilinearForm& f, const Point& p, const Point& q) {
    return f.eval(p, q);
}

}  // namespace bflab

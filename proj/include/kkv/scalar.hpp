#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace kkv {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& r);
Integer to_integer(const Rational& r); // throws DomainError when r is not integral

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Rational numbers with a formal imaginary unit adjoined, i^2 = -1.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend GaussianRational operator*(GaussianRational a, const Rational& s)
    {
        a.re_ *= s;
        a.im_ *= s;
        return a;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    Rational re_{0};
    Rational im_{0};
};

// Coefficient rings usable in series, graded series and linear algebra.
template <typename C>
concept RingElement = std::copyable<C> && std::equality_comparable<C> && std::constructible_from<C, int> &&
                      requires(const C a, const C b, const Rational s) {
                          { a + b } -> std::convertible_to<C>;
                          { a - b } -> std::convertible_to<C>;
                          { a * b } -> std::convertible_to<C>;
                          { -a } -> std::convertible_to<C>;
                          { a * s } -> std::convertible_to<C>;
                      };

template <typename C>
concept FieldElement = RingElement<C> && requires(const C a, const C b) {
    { a / b } -> std::convertible_to<C>;
};

} // namespace kkv

#include "kkv/scalar.hpp"

#include "kkv/errors.hpp"

#include <string>

namespace kkv {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    Integer num;
    Integer den(1);
    // mpz_class::set_str rejects leading '+' and whitespace, which is the strictness we want.
    if (num.set_str(s.substr(0, slash), 10) != 0) {
        throw DomainError("malformed rational: '" + s + "'");
    }
    if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0) {
        throw DomainError("malformed rational: '" + s + "'");
    }
    return make_rational(num, den);
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer to_integer(const Rational& r)
{
    if (!is_integral(r)) {
        throw DomainError("expected an integer, got " + to_string(r));
    }
    return r.get_num();
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    Rational n = o.norm();
    if (sgn(n) == 0) {
        throw DomainError("division by zero in GaussianRational");
    }
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
{
    os << z.re_;
    if (!z.is_real()) {
        os << (sgn(z.im_) < 0 ? " - " : " + ") << abs(z.im_) << "i";
    }
    return os;
}

} // namespace kkv

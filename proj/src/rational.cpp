#include "signpat/rational.hpp"

#include <stdexcept>

namespace signpat {

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    std::string s(text);
    if (s.find_first_not_of("+-0123456789/") != std::string::npos)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string den = s.substr(slash + 1);
        if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed rational literal: " + s);
        if (den.find_first_not_of('0') == std::string::npos)
            throw std::invalid_argument("zero denominator in rational literal: " + s);
    }
    Rational value;
    if (value.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value)
{
    Rational r(value);
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite value has no rational form");
    Rational r(value);  // mpq_set_d is exact
    r.canonicalize();
    return r;
}

Rational sqrt_upper(const Rational& value)
{
    if (value <= 0)
        return Rational(0);
    mpz_class ceil_value;
    mpz_cdiv_q(ceil_value.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), ceil_value.get_mpz_t());
    if (root * root < ceil_value)
        root += 1;
    return Rational(root);
}

double sqrt_upper(double value)
{
    return value > 0.0 ? std::sqrt(value) : 0.0;
}

Rational rationalize(double value, long max_den)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite value cannot be rationalized");
    // Convergents h/k of the continued fraction expansion.
    mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;
    Rational rest = rational_from_double(value);
    Rational best(0);
    for (int iter = 0; iter < 64; ++iter) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class h_next = a * h_prev + h;
        mpz_class k_next = a * k_prev + k;
        if (k_next > max_den)
            break;
        h = h_prev;
        k = k_prev;
        h_prev = h_next;
        k_prev = k_next;
        best = Rational(h_prev, k_prev);
        best.canonicalize();
        Rational frac = rest - Rational(a);
        if (frac == 0)
            break;
        rest = 1 / frac;
    }
    return best;
}

}  // namespace signpat

#include "signpat/matrix.hpp"

namespace signpat {

FloatMatrix to_float(const RationalMatrix& m)
{
    std::vector<double> e;
    e.reserve(m.entries().size());
    for (const auto& x : m.entries())
        e.push_back(x.get_d());
    return FloatMatrix(m.order(), std::move(e));
}

RationalMatrix to_rational(const FloatMatrix& m)
{
    std::vector<Rational> e;
    e.reserve(m.entries().size());
    for (double x : m.entries())
        e.push_back(rational_from_double(x));
    return RationalMatrix(m.order(), std::move(e));
}

}  // namespace signpat

#pragma once

#include <initializer_list>

#include <cfree/cfree.hpp>

namespace testing_helpers {

using Q = cfree::ComplexRational;
using SQ = cfree::Series<Q>;
using SD = cfree::Series<cfree::ComplexDouble>;

inline Q q(long p, long d = 1) { return Q(mpq_class(p, d)); }
inline Q qi(long p, long d = 1) { return Q(mpq_class(0), mpq_class(p, d)); }

// Coefficients c_0, c_1, ... padded with zeros up to `order`.
inline SQ sq(std::size_t order, std::initializer_list<Q> coeffs) { return SQ(order, std::vector<Q>(coeffs)); }

// Moments m_1..m_N of a point mass at lambda, as a series with zero constant term.
inline SQ point_mass_moments(const Q &lambda, std::size_t order)
{
    SQ m(order);
    Q p = lambda;
    for (std::size_t n = 1; n <= order; ++n) {
        m.set(n, p);
        p = p * lambda;
    }
    return m;
}

} // namespace testing_helpers

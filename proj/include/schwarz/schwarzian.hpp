#pragma once

#include "errors.hpp"
#include "ratfunc.hpp"

namespace schwarz {

/// S(f) = f'''/f' - 3/2 (f''/f')^2, computed as h' - h^2/2 with
/// h = f''/f' = (log f')'. Degree-one polynomials (and every Mobius map)
/// give the zero function.
inline RatFunc schwarzian(const RatFunc& f)
{
    const RatFunc d1 = f.derivative();
    if (d1.is_zero()) {
        throw DomainError("Schwarzian of a constant function");
    }
    const RatFunc h = d1.derivative() / d1;
    return h.derivative() - Rational(1, 2) * (h * h);
}

/// R_phi = R(phi) * (phi')^2 + S(phi): solutions of the R_phi equation
/// are carried by phi to solutions of the R equation.
inline RatFunc schwarz_pullback(const RatFunc& r, const RatFunc& phi)
{
    const RatFunc dphi = phi.derivative();
    if (dphi.is_zero()) {
        throw DomainError("pullback along a constant map");
    }
    return r.compose(phi) * (dphi * dphi) + schwarzian(phi);
}

} // namespace schwarz

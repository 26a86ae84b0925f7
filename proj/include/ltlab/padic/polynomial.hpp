#pragma once

#include <utility>
#include <vector>

#include "ltlab/padic/local_ring.hpp"

namespace ltlab {

// Dense polynomial, coefficients low..high.
using Poly = std::vector<LocalElem>;

int poly_degree(const Poly& a);
void poly_trim(Poly& a);
LocalElem poly_eval(const Poly& a, const LocalElem& x);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const LocalElem& c);
Poly poly_derivative(const Poly& a);
Poly poly_compose(const Poly& f, const Poly& g);
// Division by a monic polynomial.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_from_ints(const LocalRing& R, const std::vector<long>& c);

}  // namespace ltlab

#pragma once

#include <cmath>
#include <limits>

#include "uclab/errors.hpp"

namespace uclab {

// Closed interval with finite double endpoints.  Every operation rounds
// outward: arithmetic results are widened by one ulp per correctly rounded
// machine operation, and transcendental kernels are evaluated in long double
// and widened by two ulps plus a small absolute slack.  The enclosure
// property (true result contained in the returned interval) is what the
// verifier's proofs rest on.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

Interval point(double v);
Interval of(double lo, double hi);

Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator-(Interval a);
Interval operator*(Interval a, Interval b);
Interval operator/(Interval a, Interval b);  // requires 0 outside b
Interval operator+(double a, Interval b);
Interval operator-(double a, Interval b);
Interval operator*(double a, Interval b);

// x^2 as a single operation (tighter than x*x when 0 is inside).
Interval sqr(Interval x);

// Intersection; throws DomainError when empty.
Interval intersect(Interval a, Interval b);

Interval sqrt_i(Interval x);   // requires lo >= 0
Interval log2_i(Interval x);   // requires lo > 0
Interval exp_i(Interval x);

// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x) on [0,1], using
// monotonicity on [0, 1/2] and [1/2, 1] and h(0) = h(1) = 0.
Interval h_i(Interval x);      // requires x inside [0,1]

// h'(t) = log2((1-t)/t), strictly decreasing; requires t inside (0,1).
Interval h_prime_i(Interval t);

// h''(t) = -1 / (ln2 * t * (1-t)); requires t inside (0,1).
Interval h_second_i(Interval t);

// Enclosures of sqrt(5), phi = (1+sqrt 5)/2, 1/phi = phi - 1, and
// psi = (3-sqrt 5)/2 = 1/phi^2, each a few ulps wide; and of ln 2.
Interval sqrt5_i();
Interval phi_i();
Interval inv_phi_i();
Interval psi_i();
Interval ln2_i();

// Point evaluations with guaranteed outward bounds (used by h_i and the
// verifier's local arguments).
Interval h_point(double x);        // x in [0,1]
Interval h_prime_point(double t);  // t in (0,1)
Interval log2_point(double x);     // x > 0
Interval exp_point(double x);

}  // namespace uclab

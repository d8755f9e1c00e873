#include "uclab/interval.hpp"

#include <algorithm>

namespace uclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// 1/ln(2), more long-double digits than needed.
constexpr long double kInvLn2 = 1.44269504088896340735992468100189L;

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

Interval checked(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("interval endpoint is not finite");
  return Interval{lo, hi};
}

// Encloses a long-double kernel result: two double ulps outward plus a small
// absolute slack for near-zero results whose intermediate terms were large
// (the slack dominates exactly where ulps become negligible).
Interval widen_kernel(long double r) {
  const double m = static_cast<double>(r);
  const double lo = down(down(m)) - 1e-18;
  const double hi = up(up(m)) + 1e-18;
  return checked(lo, hi);
}

}  // namespace

Interval point(double v) { return checked(v, v); }

Interval of(double lo, double hi) {
  if (lo > hi) throw DomainError("interval endpoints out of order");
  return checked(lo, hi);
}

Interval operator+(Interval a, Interval b) {
  return checked(down(a.lo + b.lo), up(a.hi + b.hi));
}

Interval operator-(Interval a, Interval b) {
  return checked(down(a.lo - b.hi), up(a.hi - b.lo));
}

Interval operator-(Interval a) { return Interval{-a.hi, -a.lo}; }

Interval operator*(Interval a, Interval b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return checked(down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4})));
}

Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) throw DomainError("interval division by zero");
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return checked(down(std::min({q1, q2, q3, q4})), up(std::max({q1, q2, q3, q4})));
}

Interval operator+(double a, Interval b) { return point(a) + b; }
Interval operator-(double a, Interval b) { return point(a) - b; }
Interval operator*(double a, Interval b) { return point(a) * b; }

Interval sqr(Interval x) {
  if (x.lo >= 0.0) return checked(down(x.lo * x.lo), up(x.hi * x.hi));
  if (x.hi <= 0.0) return checked(down(x.hi * x.hi), up(x.lo * x.lo));
  return checked(0.0, up(std::max(x.lo * x.lo, x.hi * x.hi)));
}

Interval intersect(Interval a, Interval b) {
  const double lo = std::max(a.lo, b.lo);
  const double hi = std::min(a.hi, b.hi);
  if (lo > hi) throw DomainError("empty interval intersection");
  return Interval{lo, hi};
}

Interval sqrt_i(Interval x) {
  if (x.lo < 0.0) throw DomainError("sqrt of a negative interval");
  // std::sqrt is correctly rounded, so one step outward suffices.
  const double lo = x.lo == 0.0 ? 0.0 : down(std::sqrt(x.lo));
  return checked(lo, up(std::sqrt(x.hi)));
}

Interval log2_point(double x) {
  if (!(x > 0.0)) throw DomainError("log2 of a non-positive point");
  const long double xl = x;
  // Near 1 the direct log loses absolute accuracy; x-1 is exact there.
  const long double r =
      (x >= 0.5 && x < 2.0) ? log1pl(xl - 1.0L) * kInvLn2 : log2l(xl);
  return widen_kernel(r);
}

Interval exp_point(double x) { return widen_kernel(expl(static_cast<long double>(x))); }

Interval log2_i(Interval x) {
  if (x.lo <= 0.0) throw DomainError("log2 of an interval touching zero");
  return Interval{log2_point(x.lo).lo, log2_point(x.hi).hi};
}

Interval exp_i(Interval x) {
  return Interval{exp_point(x.lo).lo, exp_point(x.hi).hi};
}

Interval h_point(double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("binary entropy outside [0, 1]");
  if (x == 0.0 || x == 1.0) return Interval{0.0, 0.0};
  const long double xl = x;
  // -x log2 x: for x > 1/2 route through log1p so the argument stays exact.
  const long double a =
      x <= 0.5 ? -xl * log2l(xl) : -xl * (log1pl(xl - 1.0L) * kInvLn2);
  // -(1-x) log2(1-x): for x < 1/2 the complement 1-x rounds, so use log1p(-x);
  // for x >= 1/2 the complement is exact (Sterbenz) and the direct log is fine.
  const long double b = x < 0.5 ? -(1.0L - xl) * (log1pl(-xl) * kInvLn2)
                                : -(1.0L - xl) * log2l(1.0L - xl);
  Interval out = widen_kernel(a + b);
  out.lo = std::max(out.lo, 0.0);
  out.hi = std::min(out.hi, 1.0);
  return out;
}

Interval h_prime_point(double t) {
  if (!(t > 0.0) || !(t < 1.0)) throw DomainError("h' outside (0, 1)");
  const long double tl = t;
  long double r;
  if (t >= 0.3 && t <= 0.7) {
    // log2((1-t)/t) = log1p((1-2t)/t)/ln2; 1-2t is exact here (Sterbenz),
    // which keeps the evaluation accurate through the zero at t = 1/2.
    r = log1pl((1.0L - 2.0L * tl) / tl) * kInvLn2;
  } else if (t < 0.3) {
    r = log1pl(-tl) * kInvLn2 - log2l(tl);
  } else {
    // t > 0.7: 1-t and t-1 are exact doubles here.
    r = log2l(1.0L - tl) - log1pl(tl - 1.0L) * kInvLn2;
  }
  return widen_kernel(r);
}

Interval h_prime_i(Interval t) {
  // h' is strictly decreasing on (0, 1).
  return Interval{h_prime_point(t.hi).lo, h_prime_point(t.lo).hi};
}

Interval h_second_i(Interval t) {
  if (!(t.lo > 0.0) || !(t.hi < 1.0)) throw DomainError("h'' outside (0, 1)");
  const Interval one{1.0, 1.0};
  const Interval p = t * (one - t);
  if (p.lo <= 0.0) throw DomainError("h'' evaluated too close to the boundary");
  return -(one / (ln2_i() * p));
}

Interval h_i(Interval x) {
  if (x.lo < 0.0 || x.hi > 1.0) throw DomainError("binary entropy outside [0, 1]");
  Interval out;
  if (x.hi <= 0.5) {
    out = Interval{h_point(x.lo).lo, h_point(x.hi).hi};  // increasing here
  } else if (x.lo >= 0.5) {
    out = Interval{h_point(x.hi).lo, h_point(x.lo).hi};  // decreasing here
  } else {
    out = Interval{std::min(h_point(x.lo).lo, h_point(x.hi).lo), 1.0};
  }
  out.lo = std::max(out.lo, 0.0);
  out.hi = std::min(out.hi, 1.0);
  return out;
}

Interval sqrt5_i() {
  const double v = std::sqrt(5.0);
  return Interval{down(v), up(v)};
}

Interval phi_i() { return (1.0 + sqrt5_i()) * point(0.5); }

Interval inv_phi_i() { return (sqrt5_i() - point(1.0)) * point(0.5); }

Interval psi_i() { return (3.0 - sqrt5_i()) * point(0.5); }

Interval ln2_i() {
  const double v = 0.6931471805599453;
  return Interval{down(v), up(v)};
}

}  // namespace uclab

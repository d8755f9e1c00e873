#include "uclab/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace uclab {

namespace {

// ---- target evaluators -------------------------------------------------

// Key lemma target f(x) = h(x^2) - phi x h(x); the claim is f >= 0 on [0,1].
Interval eval_key(Interval x) {
  const Interval xsq = intersect(sqr(x), of(0.0, 1.0));
  return h_i(xsq) - phi_i() * x * h_i(x);
}

// f''(x) = 2 h'(x^2) + 4 x^2 h''(x^2) - 2 phi h'(x) - phi x h''(x).
Interval eval_key_second(Interval x) {
  const Interval xsq = sqr(x);
  return 2.0 * h_prime_i(xsq) + 4.0 * (xsq * h_second_i(xsq)) -
         2.0 * (phi_i() * h_prime_i(x)) - phi_i() * x * h_second_i(x);
}

// The lift p -> 2p - p^2 written as 1 - (1-p)^2, the monotone form whose
// interval image is tight.
Interval lift_image(Interval p) {
  return intersect(1.0 - sqr(1.0 - p), of(0.0, 1.0));
}

// Refinement target g(p) = h(2p - p^2) - h(p); the claim is g >= 0 on
// [0, psi].
Interval eval_refine(Interval p) { return h_i(lift_image(p)) - h_i(p); }

// g'(p) = (2 - 2p) h'(2p - p^2) - h'(p).
Interval eval_refine_deriv(Interval p) {
  return (2.0 - 2.0 * p) * h_prime_i(lift_image(p)) - h_prime_i(p);
}

// ---- local arguments ----------------------------------------------------

// On (0, thr] the key target dominates x^2 (-(2-phi) ln x - phi) / ln 2,
// which is nonnegative up to thr = exp(-phi/(2-phi)) = exp(-(2 phi + 1))
// (about 0.0145).  This is the guaranteed lower end of that threshold.
double minorant_threshold_lo() {
  return exp_i(-(2.0 * phi_i() + point(1.0))).lo;
}

// Upper-bounds f'(x) = x W(x) - phi h(x) on [lo, 1], where
//   W(x) = (2-phi) log2(1-x) + 2 log2(1+x) - (4-phi) log2 x.
// Each term of W has a finite upper bound even though the piece touches the
// logarithmic singularity at x = 1, and -phi h(x) <= 0 is dropped.  With
// f(1) = 0 (h(1) = 0 exactly), f' < 0 forces f > 0 on [lo, 1).
bool right_edge_key_ok(double lo) {
  if (!(lo >= 0.5) || !(lo < 1.0)) return false;
  const double complement = 1.0 - lo;  // exact for lo in [0.5, 1]
  const Interval w_sup = (2.0 - phi_i()) * log2_point(complement) +
                         2.0 * log2_point(2.0) +
                         (4.0 - phi_i()) * (-log2_point(lo));
  if (!(w_sup.hi < 0.0)) return false;
  // x W(x) <= x * w_sup.hi <= lo * w_sup.hi since w_sup.hi < 0 and x >= lo.
  const Interval fprime_sup = point(lo) * point(w_sup.hi);
  if (!(fprime_sup.hi < 0.0)) return false;
  // f(1) = h(1)(1 - phi) because 1^2 = 1 exactly, and h(1) must enclose to
  // the exact zero; a decreasing f landing on f(1) = 0 is nonnegative before.
  const Interval h_at_one = h_point(1.0);
  return h_at_one.lo == 0.0 && h_at_one.hi == 0.0;
}

// ---- certificate assembly ----------------------------------------------

struct EvalResult {
  bool ok = false;
  double bound = 0.0;
};

constexpr int kMaxDepth = 60;

// Deterministic midpoint bisection: subdivides [lo, hi] until every piece
// passes `eval`, appending pieces left to right so the tiling is exact.
template <class Eval>
bool cover(double lo, double hi, int depth, const Eval& eval, PieceKind kind,
           ProofCertificate& cert) {
  if (!(lo < hi)) return true;
  const EvalResult r = eval(of(lo, hi));
  if (r.ok) {
    cert.pieces.push_back(CertPiece{lo, hi, r.bound, kind});
    return true;
  }
  const double mid = lo + (hi - lo) / 2.0;
  if (depth <= 0 || !(lo < mid) || !(mid < hi)) {
    cert.status = CertStatus::Failed;
    cert.fail_lo = lo;
    cert.fail_hi = hi;
    return false;
  }
  return cover(lo, mid, depth - 1, eval, kind, cert) &&
         cover(mid, hi, depth - 1, eval, kind, cert);
}

// Width of the neighbourhoods handled by local arguments instead of direct
// interval evaluation, tied to the requested tolerance.
double eta_for(double tolerance) {
  if (!(tolerance > 0.0) || !(tolerance < 1.0))
    throw DomainError("tolerance must lie in (0, 1)");
  return std::clamp(std::cbrt(tolerance), 1e-6, 1e-2);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::DirectBound: return "direct-bound";
    case PieceKind::LeftEdgeMinorant: return "left-edge-minorant";
    case PieceKind::MonotoneLift: return "monotone-lift";
    case PieceKind::InteriorSecondDeriv: return "interior-second-deriv";
    case PieceKind::RightEdgeDecreasing: return "right-edge-decreasing";
  }
  return "direct-bound";
}

PieceKind kind_from(const std::string& s, int line) {
  if (s == "direct-bound") return PieceKind::DirectBound;
  if (s == "left-edge-minorant") return PieceKind::LeftEdgeMinorant;
  if (s == "monotone-lift") return PieceKind::MonotoneLift;
  if (s == "interior-second-deriv") return PieceKind::InteriorSecondDeriv;
  if (s == "right-edge-decreasing") return PieceKind::RightEdgeDecreasing;
  throw ParseError("unknown piece kind: " + s, line);
}

bool fail_why(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

std::string span(double lo, double hi) {
  return "[" + fmt(lo) + ", " + fmt(hi) + "]";
}

}  // namespace

ProofCertificate verify_key_lemma(double tolerance) {
  const double eta = eta_for(tolerance);
  ProofCertificate c;
  c.target = "key-lemma";
  c.domain_lo = 0.0;
  c.domain_hi = 1.0;
  c.tolerance = tolerance;
  c.status = CertStatus::Proved;

  if (!(eta <= minorant_threshold_lo())) {
    c.status = CertStatus::Failed;
    c.fail_lo = 0.0;
    c.fail_hi = eta;
    return c;
  }
  c.pieces.push_back(CertPiece{0.0, eta, 0.0, PieceKind::LeftEdgeMinorant});

  const Interval root = inv_phi_i();  // interior equality point 1/phi
  // Direct bounds cost O(1/d) pieces at distance d from the equality point
  // (the enclosure defect shrinks only linearly while f shrinks
  // quadratically), so the convexity window is kept macroscopic: the
  // second-derivative argument is valid on any window with f'' > 0
  // throughout, independent of the tolerance.
  const double radius = eta + 0.01;
  const double ra = root.lo - radius;
  const double rb = root.hi + radius;
  const double edge = 1.0 - eta;

  const auto direct = [](Interval x) {
    const Interval e = eval_key(x);
    return EvalResult{e.lo >= 0.0, e.lo};
  };
  const auto convex = [](Interval x) {
    return EvalResult{eval_key_second(x).lo > 0.0, 0.0};
  };

  if (!cover(eta, ra, kMaxDepth, direct, PieceKind::DirectBound, c)) return c;
  if (!cover(ra, rb, kMaxDepth, convex, PieceKind::InteriorSecondDeriv, c)) return c;
  if (!cover(rb, edge, kMaxDepth, direct, PieceKind::DirectBound, c)) return c;

  if (!right_edge_key_ok(edge)) {
    c.status = CertStatus::Failed;
    c.fail_lo = edge;
    c.fail_hi = 1.0;
    return c;
  }
  c.pieces.push_back(CertPiece{edge, 1.0, 0.0, PieceKind::RightEdgeDecreasing});
  return c;
}

ProofCertificate verify_gilmer_refinement(double tolerance) {
  const double eta = eta_for(tolerance);
  const Interval psi_enc = psi_i();
  ProofCertificate c;
  c.target = "gilmer-refinement";
  c.domain_lo = 0.0;
  c.domain_hi = psi_enc.hi;
  c.tolerance = tolerance;
  c.status = CertStatus::Proved;

  // On [0, 1/4] the lift stays inside [0, 1/2], where h increases, and
  // 2p - p^2 >= p; so h(2p - p^2) >= h(p) pointwise.
  const double a0 = 0.25;
  if (!(lift_image(point(a0)).hi <= 0.5)) {
    c.status = CertStatus::Failed;
    c.fail_lo = 0.0;
    c.fail_hi = a0;
    return c;
  }
  c.pieces.push_back(CertPiece{0.0, a0, 0.0, PieceKind::MonotoneLift});

  const double b = psi_enc.lo - eta;
  const auto direct = [](Interval p) {
    const Interval e = eval_refine(p);
    return EvalResult{e.lo >= 0.0, e.lo};
  };
  if (!cover(a0, b, kMaxDepth, direct, PieceKind::DirectBound, c)) return c;

  // Final piece contains the equality point psi; g(psi) = 0 algebraically
  // (2 psi - psi^2 = 1 - psi and h is symmetric), and g' < 0 on the piece.
  const Interval gp = eval_refine_deriv(of(b, psi_enc.hi));
  if (!(gp.hi < 0.0)) {
    c.status = CertStatus::Failed;
    c.fail_lo = b;
    c.fail_hi = psi_enc.hi;
    return c;
  }
  c.pieces.push_back(CertPiece{b, psi_enc.hi, 0.0, PieceKind::RightEdgeDecreasing});
  return c;
}

std::string serialize_certificate(const ProofCertificate& c) {
  std::ostringstream out;
  out << "uclab-proof-certificate v1\n";
  out << "target: " << c.target << "\n";
  out << "domain: " << span(c.domain_lo, c.domain_hi) << "\n";
  out << "tolerance: " << fmt(c.tolerance) << "\n";
  out << "status: " << (c.status == CertStatus::Proved ? "proved" : "failed")
      << "\n";
  out << "pieces: " << c.pieces.size() << "\n";
  for (const CertPiece& p : c.pieces)
    out << "piece: " << span(p.lo, p.hi) << " lower_bound=" << fmt(p.bound)
        << " kind=" << kind_name(p.kind) << "\n";
  if (c.status == CertStatus::Failed)
    out << "witness: " << span(c.fail_lo, c.fail_hi) << "\n";
  return out.str();
}

ProofCertificate parse_certificate(const std::string& text) {
  std::vector<std::pair<std::string, int>> lines;
  {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.emplace_back(line, number);
    }
  }
  std::size_t at = 0;
  const auto need = [&](const char* what) -> const std::pair<std::string, int>& {
    if (at >= lines.size()) throw ParseError(std::string("missing ") + what);
    return lines[at++];
  };

  {
    const auto& [s, ln] = need("header");
    if (s != "uclab-proof-certificate v1")
      throw ParseError("not a proof certificate", ln);
  }
  ProofCertificate c;
  {
    const auto& [s, ln] = need("target line");
    if (s.rfind("target: ", 0) != 0) throw ParseError("expected 'target: '", ln);
    c.target = s.substr(8);
  }
  {
    const auto& [s, ln] = need("domain line");
    if (std::sscanf(s.c_str(), "domain: [%lf, %lf]", &c.domain_lo, &c.domain_hi) != 2)
      throw ParseError("expected 'domain: [lo, hi]'", ln);
  }
  {
    const auto& [s, ln] = need("tolerance line");
    if (std::sscanf(s.c_str(), "tolerance: %lf", &c.tolerance) != 1)
      throw ParseError("expected 'tolerance: '", ln);
  }
  {
    const auto& [s, ln] = need("status line");
    if (s == "status: proved")
      c.status = CertStatus::Proved;
    else if (s == "status: failed")
      c.status = CertStatus::Failed;
    else
      throw ParseError("expected 'status: proved' or 'status: failed'", ln);
  }
  unsigned long long count = 0;
  {
    const auto& [s, ln] = need("piece count");
    if (std::sscanf(s.c_str(), "pieces: %llu", &count) != 1)
      throw ParseError("expected 'pieces: '", ln);
  }
  c.pieces.reserve(count);
  for (unsigned long long i = 0; i < count; ++i) {
    const auto& [s, ln] = need("piece line");
    CertPiece p;
    char kind_buf[40] = {0};
    if (std::sscanf(s.c_str(), "piece: [%lf, %lf] lower_bound=%lf kind=%39s",
                    &p.lo, &p.hi, &p.bound, kind_buf) != 4)
      throw ParseError("malformed piece line", ln);
    p.kind = kind_from(kind_buf, ln);
    c.pieces.push_back(p);
  }
  if (c.status == CertStatus::Failed) {
    const auto& [s, ln] = need("witness line");
    if (std::sscanf(s.c_str(), "witness: [%lf, %lf]", &c.fail_lo, &c.fail_hi) != 2)
      throw ParseError("expected 'witness: [lo, hi]'", ln);
  }
  if (at != lines.size())
    throw ParseError("unexpected trailing content", lines[at].second);
  return c;
}

bool replay_certificate(const ProofCertificate& c, std::string* why) {
  try {
    const bool key = c.target == "key-lemma";
    const bool refine = c.target == "gilmer-refinement";
    if (!key && !refine) return fail_why(why, "unknown target: " + c.target);
    if (c.status != CertStatus::Proved)
      return fail_why(why, "certificate records a failure, nothing to replay");
    if (c.pieces.empty()) return fail_why(why, "certificate has no pieces");

    // The tiling must cover the whole claim.
    const double claim_hi = key ? 1.0 : psi_i().hi;
    if (!(c.domain_lo <= 0.0) || !(c.domain_hi >= claim_hi))
      return fail_why(why, "domain does not cover the claim");
    if (c.pieces.front().lo != c.domain_lo || c.pieces.back().hi != c.domain_hi)
      return fail_why(why, "pieces do not tile the domain");
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      if (!(c.pieces[i].lo < c.pieces[i].hi))
        return fail_why(why, "degenerate piece " + span(c.pieces[i].lo, c.pieces[i].hi));
      if (i > 0 && c.pieces[i].lo != c.pieces[i - 1].hi)
        return fail_why(why, "gap or overlap at " + fmt(c.pieces[i].lo));
    }

    std::ptrdiff_t convex_first = -1, convex_last = -1;
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      const CertPiece& p = c.pieces[i];
      const std::string at = span(p.lo, p.hi);
      switch (p.kind) {
        case PieceKind::DirectBound: {
          const Interval e = key ? eval_key(of(p.lo, p.hi)) : eval_refine(of(p.lo, p.hi));
          if (!(e.lo >= 0.0))
            return fail_why(why, "direct bound not established on " + at);
          if (!(p.bound <= e.lo + 1e-12))
            return fail_why(why, "stored bound overstates the verified bound on " + at);
          break;
        }
        case PieceKind::LeftEdgeMinorant: {
          if (!key) return fail_why(why, "minorant piece under the wrong target");
          if (!(p.bound <= 0.0)) return fail_why(why, "minorant piece claims a positive bound");
          if (!(p.lo >= 0.0) || !(p.hi <= minorant_threshold_lo()))
            return fail_why(why, "minorant piece exceeds its validity range " + at);
          break;
        }
        case PieceKind::MonotoneLift: {
          if (!refine) return fail_why(why, "lift piece under the wrong target");
          if (!(p.bound <= 0.0)) return fail_why(why, "lift piece claims a positive bound");
          if (!(p.lo >= 0.0) || !(lift_image(point(p.hi)).hi <= 0.5))
            return fail_why(why, "lift leaves the increasing half of h on " + at);
          break;
        }
        case PieceKind::InteriorSecondDeriv: {
          if (!key) return fail_why(why, "convexity piece under the wrong target");
          if (!(p.bound <= 0.0)) return fail_why(why, "convexity piece claims a positive bound");
          if (!(eval_key_second(of(p.lo, p.hi)).lo > 0.0))
            return fail_why(why, "second derivative not provably positive on " + at);
          if (convex_first == -1) {
            convex_first = static_cast<std::ptrdiff_t>(i);
          } else if (static_cast<std::ptrdiff_t>(i) != convex_last + 1) {
            return fail_why(why, "convexity pieces are not contiguous");
          }
          convex_last = static_cast<std::ptrdiff_t>(i);
          break;
        }
        case PieceKind::RightEdgeDecreasing: {
          if (!(p.bound <= 0.0))
            return fail_why(why, "decreasing piece claims a positive bound");
          if (key) {
            if (p.hi != 1.0)
              return fail_why(why, "decreasing piece must end at the zero at 1");
            if (!right_edge_key_ok(p.lo))
              return fail_why(why, "derivative not provably negative on " + at);
          } else {
            const Interval psi_enc = psi_i();
            if (!(p.lo <= psi_enc.lo) || !(psi_enc.hi <= p.hi))
              return fail_why(why, "decreasing piece must contain the equality point");
            if (!(eval_refine_deriv(of(p.lo, p.hi)).hi < 0.0))
              return fail_why(why, "derivative not provably negative on " + at);
          }
          break;
        }
      }
    }
    if (convex_first != -1) {
      // The Taylor argument needs the equality point inside the convex run:
      // f and f' vanish at 1/phi (from phi^2 = phi + 1), so f'' > 0 around it
      // forces f >= 0 there.
      const double a = c.pieces[static_cast<std::size_t>(convex_first)].lo;
      const double b = c.pieces[static_cast<std::size_t>(convex_last)].hi;
      const Interval root = inv_phi_i();
      if (!(a <= root.lo) || !(root.hi <= b))
        return fail_why(why, "convexity run does not contain the equality point");
    }
    return true;
  } catch (const std::exception& e) {
    return fail_why(why, std::string("replay aborted: ") + e.what());
  }
}

double psi_k(int k, double tolerance) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  // (1-x)^k - x is strictly decreasing on [0,1], positive at 0, negative at 1.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2.0;
    if (!(lo < mid) || !(mid < hi)) break;
    const double d = std::pow(1.0 - mid, k) - mid;
    if (d == 0.0) return mid;
    (d > 0.0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2.0;
}

double phi() { return (1.0 + std::sqrt(5.0)) / 2.0; }

double psi() { return (3.0 - std::sqrt(5.0)) / 2.0; }

ScanResult two_variate_scan(int grid_resolution) {
  if (grid_resolution < 100)
    throw DomainError("grid resolution must be at least 100");
  const auto h = [](double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
  };
  const auto f = [&h](double x, double y) {
    const double den = h(x) * y + h(y) * x;
    if (den < 1e-300) return std::numeric_limits<double>::infinity();
    return h(x * y) / den;
  };

  ScanResult best;
  best.min_value = std::numeric_limits<double>::infinity();
  const double step0 = 1.0 / grid_resolution;
  for (int i = 1; i < grid_resolution; ++i)
    for (int j = 1; j < grid_resolution; ++j) {
      const double v = f(i * step0, j * step0);
      if (v < best.min_value) best = {v, i * step0, j * step0};
    }

  // Shrinking-window refinement around the grid minimum.
  double half = step0;
  for (int round = 0; round < 8; ++round) {
    const int m = 24;
    const double cx = best.argmin_x, cy = best.argmin_y;
    const double step = half / m;
    for (int i = -m; i <= m; ++i)
      for (int j = -m; j <= m; ++j) {
        const double x = cx + i * step, y = cy + j * step;
        if (x <= 0.0 || x >= 1.0 || y <= 0.0 || y >= 1.0) continue;
        const double v = f(x, y);
        if (v < best.min_value) best = {v, x, y};
      }
    half = 4.0 * step;
  }
  return best;
}

}  // namespace uclab

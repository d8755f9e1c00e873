#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uclab/interval.hpp"

namespace uclab {

// How a certificate piece is verified.
//
//   DirectBound            interval evaluation of the target gives lower bound >= 0
//   LeftEdgeMinorant       key lemma near x = 0: on [0, eta] the target dominates
//                          x^2 (-(2-phi) ln x - phi)/ln 2, which is nonnegative up to
//                          exp(-(2 phi + 1)); the check is eta <= that threshold
//   MonotoneLift           refinement near p = 0: u = 2p - p^2 >= p, and while both
//                          stay in [0, 1/2] where h increases, h(u) >= h(p); the
//                          check is u(piece.hi) <= 1/2
//   InteriorSecondDeriv    key lemma around 1/phi: the target and its derivative
//                          vanish there (algebraic identities via phi^2 = phi + 1),
//                          so f'' > 0 on the piece forces f >= 0 by Taylor
//   RightEdgeDecreasing    target vanishes at the right end of the claim and its
//                          derivative is verified < 0 on the piece, so the target
//                          decreases to zero from above
enum class PieceKind {
  DirectBound,
  LeftEdgeMinorant,
  MonotoneLift,
  InteriorSecondDeriv,
  RightEdgeDecreasing,
};

struct CertPiece {
  double lo = 0.0;
  double hi = 0.0;
  double bound = 0.0;  // verified lower bound of the target on the piece
  PieceKind kind = PieceKind::DirectBound;
};

enum class CertStatus { Proved, Failed };

// A machine-checkable cover of the claim's domain.  Pieces tile the domain
// exactly (adjacent endpoints are equal); each piece carries the verified
// lower bound and how it was obtained.  Serializes to text; replayable.
struct ProofCertificate {
  std::string target;  // "key-lemma" or "gilmer-refinement"
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  double tolerance = 0.0;
  CertStatus status = CertStatus::Failed;
  std::vector<CertPiece> pieces;
  double fail_lo = 0.0, fail_hi = 0.0;  // witness subinterval when Failed
};

// Proves h(x^2) >= phi * x * h(x) on [0,1] (equality at 0, 1/phi, 1).
ProofCertificate verify_key_lemma(double tolerance);

// Proves h(p) <= h(2p - p^2) on [0, psi], psi = (3 - sqrt 5)/2 (equality at
// 0 and psi).  The final piece extends to the upper end of psi's enclosure.
ProofCertificate verify_gilmer_refinement(double tolerance);

std::string serialize_certificate(const ProofCertificate& c);
ProofCertificate parse_certificate(const std::string& text);

// Re-verifies every piece of a parsed certificate from scratch: tiling,
// per-piece bounds, and the local arguments.  `why` (optional) receives the
// first failure's description.
bool replay_certificate(const ProofCertificate& c, std::string* why = nullptr);

// Unique root in [0,1] of (1-x)^k = x, by bisection on the strictly
// decreasing difference; psi_1 = 1/2 exactly, psi_2 = (3 - sqrt 5)/2.
double psi_k(int k, double tolerance);

double phi();  // (1 + sqrt 5) / 2
double psi();  // (3 - sqrt 5) / 2

// Grid scan plus local refinement of f(x, y) = h(xy) / (h(x) y + h(y) x)
// over (0,1)^2.  Numerical exploration only -- reported values carry no
// enclosure guarantee.  Resolution >= 100.
struct ScanResult {
  double min_value = 0.0;
  double argmin_x = 0.0;
  double argmin_y = 0.0;
};

ScanResult two_variate_scan(int grid_resolution);

}  // namespace uclab

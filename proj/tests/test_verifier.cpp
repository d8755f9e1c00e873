// Rigorous inequality verification: proof certificates, replay, serialization,
// root tables, and the two-variate scan.
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "uclab/interval.hpp"
#include "uclab/verifier.hpp"

using namespace uclab;

namespace {

// Structural invariants every proved key-lemma certificate must satisfy.
void check_key_cert_shape(const ProofCertificate& c) {
  REQUIRE(c.status == CertStatus::Proved);
  CHECK(c.target == "key-lemma");
  CHECK(c.domain_lo == 0.0);
  CHECK(c.domain_hi == 1.0);
  REQUIRE(c.pieces.size() >= 4);

  CHECK(c.pieces.front().kind == PieceKind::LeftEdgeMinorant);
  CHECK(c.pieces.front().lo == 0.0);
  CHECK(c.pieces.back().kind == PieceKind::RightEdgeDecreasing);
  CHECK(c.pieces.back().hi == 1.0);

  // Exact tiling, left to right.
  for (std::size_t i = 1; i < c.pieces.size(); ++i) {
    CHECK(c.pieces[i].lo == c.pieces[i - 1].hi);
    CHECK(c.pieces[i].lo < c.pieces[i].hi);
  }

  // The convexity pieces form one contiguous run around the equality point.
  std::ptrdiff_t first = -1, last = -1;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    if (c.pieces[i].kind == PieceKind::InteriorSecondDeriv) {
      if (first == -1) first = static_cast<std::ptrdiff_t>(i);
      else CHECK(static_cast<std::ptrdiff_t>(i) == last + 1);
      last = static_cast<std::ptrdiff_t>(i);
    }
  }
  REQUIRE(first != -1);
  const Interval root = inv_phi_i();
  CHECK(c.pieces[static_cast<std::size_t>(first)].lo <= root.lo);
  CHECK(c.pieces[static_cast<std::size_t>(last)].hi >= root.hi);

  // Direct pieces carry honest nonnegative lower bounds.
  for (const CertPiece& p : c.pieces)
    if (p.kind == PieceKind::DirectBound) CHECK(p.bound >= 0.0);
}

}  // namespace

TEST_CASE("key inequality is proved with a replayable certificate") {
  for (const double tol : {1e-3, 1e-9}) {
    CAPTURE(tol);
    const ProofCertificate c = verify_key_lemma(tol);
    check_key_cert_shape(c);
    CHECK(c.tolerance == tol);
    std::string why;
    CHECK(replay_certificate(c, &why));
    CHECK(why.empty());
  }
}

TEST_CASE("certificate generation is deterministic") {
  const std::string a = serialize_certificate(verify_key_lemma(1e-3));
  const std::string b = serialize_certificate(verify_key_lemma(1e-3));
  CHECK(a == b);
}

TEST_CASE("refinement inequality is proved up to the fixed point") {
  const ProofCertificate c = verify_gilmer_refinement(1e-9);
  REQUIRE(c.status == CertStatus::Proved);
  CHECK(c.target == "gilmer-refinement");
  CHECK(c.domain_lo == 0.0);
  CHECK(std::fabs(c.domain_hi - 0.3819660113) <= 1e-9);

  REQUIRE(c.pieces.size() >= 3);
  CHECK(c.pieces.front().kind == PieceKind::MonotoneLift);
  CHECK(c.pieces.front().lo == 0.0);
  CHECK(c.pieces.front().hi == 0.25);
  CHECK(c.pieces.back().kind == PieceKind::RightEdgeDecreasing);
  // The last piece brackets the equality point.
  CHECK(c.pieces.back().lo <= psi_i().lo);
  CHECK(c.pieces.back().hi >= psi_i().hi);
  for (std::size_t i = 1; i < c.pieces.size(); ++i)
    CHECK(c.pieces[i].lo == c.pieces[i - 1].hi);

  std::string why;
  CHECK(replay_certificate(c, &why));
  CHECK(why.empty());
}

TEST_CASE("tolerance outside (0, 1) is rejected") {
  CHECK_THROWS_AS(verify_key_lemma(0.0), DomainError);
  CHECK_THROWS_AS(verify_key_lemma(1.0), DomainError);
  CHECK_THROWS_AS(verify_key_lemma(-1e-9), DomainError);
  CHECK_THROWS_AS(verify_gilmer_refinement(0.0), DomainError);
}

TEST_CASE("certificates round-trip through text exactly") {
  const ProofCertificate c = verify_key_lemma(1e-6);
  const std::string text = serialize_certificate(c);
  const ProofCertificate d = parse_certificate(text);

  CHECK(d.target == c.target);
  CHECK(d.domain_lo == c.domain_lo);
  CHECK(d.domain_hi == c.domain_hi);
  CHECK(d.tolerance == c.tolerance);
  CHECK(d.status == c.status);
  REQUIRE(d.pieces.size() == c.pieces.size());
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    CHECK(d.pieces[i].lo == c.pieces[i].lo);
    CHECK(d.pieces[i].hi == c.pieces[i].hi);
    CHECK(d.pieces[i].bound == c.pieces[i].bound);
    CHECK(d.pieces[i].kind == c.pieces[i].kind);
  }
  std::string why;
  CHECK(replay_certificate(d, &why));

  // Serializing the parsed copy reproduces the text byte for byte.
  CHECK(serialize_certificate(d) == text);
}

TEST_CASE("failed certificates serialize their witness interval") {
  ProofCertificate c;
  c.target = "key-lemma";
  c.domain_lo = 0.0;
  c.domain_hi = 1.0;
  c.tolerance = 1e-9;
  c.status = CertStatus::Failed;
  c.pieces.push_back(CertPiece{0.0, 0.5, 0.0, PieceKind::DirectBound});
  c.fail_lo = 0.5;
  c.fail_hi = 1.0;

  const std::string text = serialize_certificate(c);
  CHECK(text.find("status: failed") != std::string::npos);
  CHECK(text.find("witness:") != std::string::npos);

  const ProofCertificate d = parse_certificate(text);
  CHECK(d.status == CertStatus::Failed);
  CHECK(d.fail_lo == 0.5);
  CHECK(d.fail_hi == 1.0);

  std::string why;
  CHECK_FALSE(replay_certificate(d, &why));
  CHECK(why.find("failure") != std::string::npos);
}

TEST_CASE("replay rejects tampered certificates") {
  const ProofCertificate base = verify_key_lemma(1e-3);
  REQUIRE(base.status == CertStatus::Proved);
  std::string why;

  SUBCASE("unknown target") {
    ProofCertificate c = base;
    c.target = "some-other-claim";
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("unknown target") != std::string::npos);
  }
  SUBCASE("no pieces") {
    ProofCertificate c = base;
    c.pieces.clear();
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("no pieces") != std::string::npos);
  }
  SUBCASE("domain shrunk below the claim") {
    ProofCertificate c = base;
    c.domain_hi = 0.9;
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("domain") != std::string::npos);
  }
  SUBCASE("piece removed from the tiling") {
    ProofCertificate c = base;
    REQUIRE(c.pieces.size() > 3);
    c.pieces.erase(c.pieces.begin() + 2);
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("gap or overlap") != std::string::npos);
  }
  SUBCASE("last piece shortened") {
    ProofCertificate c = base;
    c.pieces.back().hi = 0.999;
    CHECK_FALSE(replay_certificate(c, &why));
  }
  SUBCASE("degenerate piece") {
    ProofCertificate c = base;
    c.pieces[1].hi = c.pieces[1].lo;
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("degenerate") != std::string::npos);
  }
  SUBCASE("inflated lower bound on a direct piece") {
    ProofCertificate c = base;
    const auto it = std::find_if(c.pieces.begin(), c.pieces.end(), [](const CertPiece& p) {
      return p.kind == PieceKind::DirectBound;
    });
    REQUIRE(it != c.pieces.end());
    it->bound += 0.5;
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("overstates") != std::string::npos);
  }
  SUBCASE("edge argument relabeled as a direct bound") {
    // The left-edge piece contains 0, where the raw interval evaluation
    // cannot establish nonnegativity.
    ProofCertificate c = base;
    REQUIRE(c.pieces.front().kind == PieceKind::LeftEdgeMinorant);
    c.pieces.front().kind = PieceKind::DirectBound;
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("direct bound not established") != std::string::npos);
  }
  SUBCASE("piece kind from the wrong target") {
    ProofCertificate c = base;
    c.pieces.front().kind = PieceKind::MonotoneLift;
    CHECK_FALSE(replay_certificate(c, &why));
    CHECK(why.find("wrong target") != std::string::npos);
  }
  SUBCASE("recorded failure is not replayable") {
    ProofCertificate c = base;
    c.status = CertStatus::Failed;
    CHECK_FALSE(replay_certificate(c, &why));
  }
  SUBCASE("tamper survives a serialization round-trip") {
    ProofCertificate c = base;
    c.pieces.erase(c.pieces.begin() + 2);
    const ProofCertificate d = parse_certificate(serialize_certificate(c));
    CHECK_FALSE(replay_certificate(d, &why));
  }
}

TEST_CASE("certificate text parsing rejects malformed input") {
  const std::string good = serialize_certificate(verify_gilmer_refinement(1e-3));
  CHECK_NOTHROW(parse_certificate(good));

  SUBCASE("wrong header") {
    std::string bad = good;
    bad.replace(bad.find("v1"), 2, "v9");
    CHECK_THROWS_AS(parse_certificate(bad), ParseError);
  }
  SUBCASE("truncated piece list") {
    std::string bad = good;
    bad.erase(bad.rfind("piece: "));
    CHECK_THROWS_AS(parse_certificate(bad), ParseError);
  }
  SUBCASE("trailing garbage") {
    CHECK_THROWS_AS(parse_certificate(good + "extra line\n"), ParseError);
  }
  SUBCASE("unknown piece kind") {
    std::string bad = good;
    bad.replace(bad.find("kind=monotone-lift"), 18, "kind=wishful-think");
    CHECK_THROWS_AS(parse_certificate(bad), ParseError);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_certificate(""), ParseError);
  }
}

TEST_CASE("root table of (1-x)^k = x") {
  // Frozen to 1e-9 via an independent high-precision solve.
  const double expected[] = {0.5,
                             0.38196601125010515,
                             0.31767219617198067,
                             0.27550804099948439,
                             0.24512233375330724,
                             0.22191040132139890,
                             0.20345564587154290,
                             0.18834767997219735,
                             0.17569943677031299,
                             0.16492095727644095};
  double prev = 1.0;
  for (int k = 1; k <= 10; ++k) {
    const double r = psi_k(k, 1e-12);
    CAPTURE(k);
    CHECK(std::fabs(r - expected[k - 1]) <= 1e-9);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(psi_k(1, 1e-12) == 0.5);  // exact: the first bisection midpoint is the root

  CHECK_THROWS_AS(psi_k(0, 1e-9), DomainError);
  CHECK_THROWS_AS(psi_k(1, 0.0), DomainError);
  CHECK_THROWS_AS(psi_k(1, -1.0), DomainError);
}

TEST_CASE("closed-form constants agree with their defining relations") {
  CHECK(std::fabs(phi() - 1.6180339887498948482) <= 1e-15);
  CHECK(std::fabs(psi() - 0.38196601125010515180) <= 1e-15);
  CHECK(std::fabs(phi() * phi() - phi() - 1.0) <= 1e-15);         // phi^2 = phi + 1
  CHECK(std::fabs(psi() - (1.0 - 1.0 / phi())) <= 1e-15);         // psi = 1 - 1/phi
  CHECK(std::fabs(psi_k(2, 1e-13) - psi()) <= 1e-12);             // k = 2 root is psi
}

TEST_CASE("two-variate scan localizes the interior minimum") {
  const ScanResult r = two_variate_scan(150);
  CHECK(std::fabs(r.min_value - 0.80901699437494742) <= 1e-8);  // phi/2
  CHECK(std::fabs(r.argmin_x - 0.61803398874989485) <= 1e-4);
  CHECK(std::fabs(r.argmin_y - 0.61803398874989485) <= 1e-4);
  CHECK_THROWS_AS(two_variate_scan(99), DomainError);
}

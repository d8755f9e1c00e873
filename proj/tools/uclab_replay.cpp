// uclab_replay — independent re-verification of a serialized proof
// certificate.  Reads the certificate file, re-checks the domain tiling and
// every piece's bound with fresh interval evaluations, and reports whether
// the proof stands.  Exit codes: 0 replayed and verified, 1 rejected,
// 2 unreadable or malformed certificate.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "uclab/errors.hpp"
#include "uclab/verifier.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: uclab_replay <certificate-file>\n");
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: cannot open file: %s\n", argv[1]);
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  uclab::ProofCertificate cert;
  try {
    cert = uclab::parse_certificate(buf.str());
  } catch (const uclab::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  std::printf("target: %s\n", cert.target.c_str());
  std::printf("domain: [%.17g, %.17g]\n", cert.domain_lo, cert.domain_hi);
  std::printf("pieces: %zu\n", cert.pieces.size());

  std::string why;
  if (uclab::replay_certificate(cert, &why)) {
    std::printf("replay: verified\n");
    return 0;
  }
  std::printf("replay: REJECTED (%s)\n", why.c_str());
  return 1;
}

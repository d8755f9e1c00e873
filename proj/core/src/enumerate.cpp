#include "uclab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "uclab/entropy.hpp"

namespace uclab {

namespace {

SetFamily family_from_encoding(int n, std::uint32_t enc) {
  const int member_masks = 1 << n;
  std::vector<Bitset> members;
  members.reserve(static_cast<std::size_t>(std::popcount(enc)));
  for (int m = 0; m < member_masks; ++m) {
    if (!(enc >> m & 1)) continue;
    Bitset b(n);
    for (int e = 1; e <= n; ++e)
      if (m >> (e - 1) & 1) b.add(e);
    members.push_back(std::move(b));
  }
  return SetFamily(GroundSet(n), std::move(members));
}

bool encoding_union_closed(int member_masks, std::uint32_t enc) {
  for (int i = 0; i < member_masks; ++i) {
    if (!(enc >> i & 1)) continue;
    for (int j = i + 1; j < member_masks; ++j)
      if ((enc >> j & 1) && !(enc >> (i | j) & 1)) return false;
  }
  return true;
}

// The empty family and {emptyset} do not qualify; everything else does.
bool qualifies(std::uint32_t enc) { return enc != 0 && enc != 1; }

// Tracks the qualifying union-closed family minimizing its maximum element
// frequency; exact comparisons by int64 cross-multiplication, ties broken
// toward the smaller encoding so both enumeration orders agree.
struct Tally {
  std::uint64_t uc = 0;
  std::int64_t best_num = 0, best_den = 1;
  std::uint32_t best_enc = 0;
  bool any = false;

  void consider(int n, std::uint32_t enc) {
    ++uc;
    const std::int64_t total = std::popcount(enc);
    std::int64_t top = 0;
    for (int e = 0; e < n; ++e) {
      std::int64_t c = 0;
      for (int m = 0; m < (1 << n); ++m)
        if ((enc >> m & 1) && (m >> e & 1)) ++c;
      top = std::max(top, c);
    }
    const bool better =
        !any || top * best_den < best_num * total ||
        (top * best_den == best_num * total && enc < best_enc);
    if (better) {
      best_num = top;
      best_den = total;
      best_enc = enc;
      any = true;
    }
  }

  void finish(int n, EnumerationReport& rep) const {
    rep.uc_count = uc;
    if (any) {
      rep.min_max_fraction = Rational(BigInt(best_num), BigInt(best_den));
      rep.worst = family_from_encoding(n, best_enc);
      rep.conjecture_holds = 2 * best_num >= best_den;
    }
  }
};

void validate_n(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw DomainError("ground set size must lie in [1, " + std::to_string(max_n) +
                      "] for exhaustive enumeration");
}

}  // namespace

EnumerationReport enumerate_union_closed(
    int n, const std::function<void(const SetFamily&)>& visitor) {
  validate_n(n, 4);
  const int member_masks = 1 << n;
  const std::uint64_t encodings = std::uint64_t{1} << member_masks;

  EnumerationReport rep;
  rep.n = n;
  rep.families_scanned = encodings;
  Tally tally;
  for (std::uint64_t enc = 0; enc < encodings; ++enc) {
    const auto e = static_cast<std::uint32_t>(enc);
    if (!qualifies(e) || !encoding_union_closed(member_masks, e)) continue;
    tally.consider(n, e);
    if (visitor) visitor(family_from_encoding(n, e));
  }
  tally.finish(n, rep);
  return rep;
}

EnumerationReport enumerate_union_closed_pruned(int n) {
  validate_n(n, 4);
  const int member_masks = 1 << n;

  EnumerationReport rep;
  rep.n = n;
  rep.families_scanned = std::uint64_t{1} << member_masks;
  Tally tally;

  // Members are decided in descending mask value, so the union of any two
  // already-chosen members has itself been decided; a new member is
  // admissible only if all its unions with chosen members are chosen.
  std::vector<std::uint32_t> chosen;
  const std::function<void(int)> walk = [&](int next) {
    if (next < 0) {
      std::uint32_t enc = 0;
      for (std::uint32_t m : chosen) enc |= std::uint32_t{1} << m;
      if (qualifies(enc)) tally.consider(n, enc);
      return;
    }
    walk(next - 1);
    const auto s = static_cast<std::uint32_t>(next);
    bool admissible = true;
    for (std::uint32_t t : chosen) {
      const std::uint32_t u = s | t;
      if (u != s && u != t &&
          !std::binary_search(chosen.rbegin(), chosen.rend(), u)) {
        admissible = false;
        break;
      }
    }
    if (admissible) {
      chosen.push_back(s);
      walk(next - 1);
      chosen.pop_back();
    }
  };
  walk(member_masks - 1);
  tally.finish(n, rep);
  return rep;
}

std::pair<std::uint64_t, std::uint64_t> certificate_coverage(int n) {
  validate_n(n, 3);
  const int member_masks = 1 << n;
  const std::uint64_t encodings = std::uint64_t{1} << member_masks;
  std::uint64_t total = 0, proved = 0;
  for (std::uint64_t enc = 1; enc < encodings; ++enc) {
    const auto e = static_cast<std::uint32_t>(enc);
    if (encoding_union_closed(member_masks, e)) continue;
    ++total;
    const CertificateReport r = gilmer_certificate(family_from_encoding(n, e));
    if (r.verdict == Verdict::ProvedNotUnionClosed) ++proved;
  }
  return {total, proved};
}

}  // namespace uclab

#include "uclab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "uclab/interval.hpp"
#include "uclab/limits.hpp"

namespace uclab {

SubsetDistribution::SubsetDistribution(GroundSet ground, std::vector<Atom> atoms)
    : ground_(ground), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("distribution needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.first < b.first; });
  Rational sum = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].first.width() != ground_.n)
      throw DomainError("atom width does not match ground set");
    if (atoms_[i].second <= 0) throw DomainError("atom weights must be positive");
    if (i > 0 && atoms_[i].first == atoms_[i - 1].first)
      throw DomainError("duplicate atom in distribution");
    sum += atoms_[i].second;
  }
  if (sum != 1) throw DomainError("atom weights must sum to exactly 1");
}

SubsetDistribution uniform_distribution(const SetFamily& f) {
  std::vector<SubsetDistribution::Atom> atoms;
  atoms.reserve(f.size());
  const Rational w(BigInt(1), BigInt(static_cast<std::int64_t>(f.size())));
  for (const Bitset& m : f.members()) atoms.emplace_back(m, w);
  return SubsetDistribution(f.ground(), std::move(atoms));
}

namespace {

// Enclosure of log2 of a positive integer.  log2_big is accurate to a couple
// of ulps; the padding below is a conservative absolute bound on that error.
Interval log2_big_i(const BigInt& x) {
  if (x == 1) return Interval{0.0, 0.0};
  const double v = log2_big(x);
  const double pad = 2.220446049250313e-16 * (4.0 * std::fabs(v) + 4.0);
  return Interval{v - pad, v + pad};
}

// Enclosure of an exact rational as a double interval (2 ulps outward).
Interval rational_i(const Rational& q) {
  const double v = to_double(q);
  double lo = std::nextafter(std::nextafter(v, -1e308), -1e308);
  double hi = std::nextafter(std::nextafter(v, 1e308), 1e308);
  return Interval{lo, hi};
}

}  // namespace

EntropyValue shannon_entropy(const SubsetDistribution& d) {
  // Common denominator D; atom i carries integer weight c_i with sum_i c_i = D.
  BigInt den = 1;
  for (const auto& [s, w] : d.atoms())
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(w));

  const Interval log_den = log2_big_i(den);
  Interval h{0.0, 0.0};
  for (const auto& [s, w] : d.atoms()) {
    const BigInt c = boost::multiprecision::numerator(w) *
                     (den / boost::multiprecision::denominator(w));
    // p * log2(1/p) with p = c / D, as an interval product.
    h = h + rational_i(w) * (log_den - log2_big_i(c));
  }

  EntropyValue out;
  out.bits = (h.lo + h.hi) / 2.0;
  out.err = (h.hi - h.lo) / 2.0 + 1e-18;
  out.provenance = Provenance::ExactRationalWeights;
  return out;
}

SubsetDistribution union_distribution(const SubsetDistribution& d1,
                                      const SubsetDistribution& d2) {
  if (d1.n() != d2.n()) throw DomainError("distributions live on different ground sets");
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(d1.support_size()) * d2.support_size();
  if (pairs > kPairGuard)
    throw ResourceError("union distribution over " + std::to_string(pairs) +
                        " atom pairs exceeds the pair guard");

  BigInt den1 = 1, den2 = 1;
  for (const auto& [s, w] : d1.atoms())
    den1 = boost::multiprecision::lcm(den1, boost::multiprecision::denominator(w));
  for (const auto& [s, w] : d2.atoms())
    den2 = boost::multiprecision::lcm(den2, boost::multiprecision::denominator(w));

  std::unordered_map<Bitset, BigInt, BitsetHash> acc;
  acc.reserve(d1.support_size() + d2.support_size());
  for (const auto& [a, wa] : d1.atoms()) {
    const BigInt ca = boost::multiprecision::numerator(wa) *
                      (den1 / boost::multiprecision::denominator(wa));
    for (const auto& [b, wb] : d2.atoms()) {
      const BigInt cb = boost::multiprecision::numerator(wb) *
                        (den2 / boost::multiprecision::denominator(wb));
      acc[a | b] += ca * cb;
    }
  }

  const BigInt den = den1 * den2;
  std::vector<SubsetDistribution::Atom> atoms;
  atoms.reserve(acc.size());
  for (auto& [s, num] : acc) atoms.emplace_back(s, Rational(num, den));
  return SubsetDistribution(d1.ground(), std::move(atoms));
}

CertificateReport gilmer_certificate(const SetFamily& f) {
  const SubsetDistribution dist = uniform_distribution(f);
  CertificateReport r;
  r.n = f.n();
  r.family_size = f.size();
  r.h_a = shannon_entropy(dist);
  r.h_aub = shannon_entropy(union_distribution(dist, dist));
  r.max_fraction = frequency_profile(f).max_fraction;
  const bool proved = r.h_aub.bits - r.h_aub.err > r.h_a.bits + r.h_a.err;
  r.verdict = proved ? Verdict::ProvedNotUnionClosed : Verdict::Inconclusive;
  return r;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string certificate_to_json(const CertificateReport& r) {
  std::string out = "{";
  out += "\"n\":" + std::to_string(r.n);
  out += ",\"family_size\":" + std::to_string(r.family_size);
  out += ",\"h_a\":" + fmt_double(r.h_a.bits);
  out += ",\"h_a_err\":" + fmt_double(r.h_a.err);
  out += ",\"h_union\":" + fmt_double(r.h_aub.bits);
  out += ",\"h_union_err\":" + fmt_double(r.h_aub.err);
  out += ",\"max_fraction\":\"" + rational_to_string(r.max_fraction) + "\"";
  out += ",\"max_fraction_value\":" + fmt_double(to_double(r.max_fraction));
  out += ",\"verdict\":\"";
  out += r.verdict == Verdict::ProvedNotUnionClosed ? "proved_not_union_closed"
                                                    : "inconclusive";
  out += "\"}";
  return out;
}

GilmerRatio gilmer_ratio(const SubsetDistribution& d) {
  const EntropyValue h = shannon_entropy(d);
  if (h.bits <= h.err)
    throw DomainError("entropy ratio needs a distribution with positive entropy");
  const EntropyValue hu = shannon_entropy(union_distribution(d, d));

  GilmerRatio out;
  out.ratio = hu.bits / h.bits;
  out.max_marginal = 0;
  for (int e = 1; e <= d.n(); ++e) {
    Rational marg = 0;
    for (const auto& [s, w] : d.atoms())
      if (s.contains(e)) marg += w;
    if (marg > out.max_marginal) out.max_marginal = marg;
  }
  return out;
}

bool power_corollary_check(const SetFamily& f, double exponent) {
  const SetFamily step = union_closure_step(f);
  return static_cast<double>(step.size()) >=
         std::pow(static_cast<double>(f.size()), exponent);
}

SubsetDistribution perturbed_distribution(const SetFamily& f, const Rational& delta) {
  if (delta < 0 || delta > 1) throw DomainError("delta must lie in [0, 1]");
  const SubsetDistribution base = uniform_distribution(f);
  if (delta == 0) return base;
  const SubsetDistribution un = union_distribution(base, base);
  if (delta == 1) return un;

  std::unordered_map<Bitset, Rational, BitsetHash> acc;
  const Rational keep = Rational(1) - delta;
  for (const auto& [s, w] : base.atoms()) acc[s] += keep * w;
  for (const auto& [s, w] : un.atoms()) acc[s] += delta * w;

  std::vector<SubsetDistribution::Atom> atoms;
  atoms.reserve(acc.size());
  for (auto& [s, w] : acc) atoms.emplace_back(s, std::move(w));
  return SubsetDistribution(f.ground(), std::move(atoms));
}

GainScan entropy_gain_scan(const SetFamily& f, const std::vector<Rational>& deltas) {
  if (deltas.empty()) throw DomainError("delta grid is empty");
  for (const Rational& d : deltas)
    if (d <= 0 || d > 1) throw DomainError("deltas must lie in (0, 1]");
  if (is_union_closed(f))
    throw DomainError("family is union-closed; the gain scan applies to families "
                      "that are not");

  const SubsetDistribution base = uniform_distribution(f);
  const SubsetDistribution un = union_distribution(base, base);
  const double h0 = shannon_entropy(base).bits;

  GainScan scan;
  scan.rows.reserve(deltas.size());
  for (const Rational& delta : deltas) {
    GainRow row;
    row.delta = delta;
    if (delta == 1) {
      row.gain = shannon_entropy(un).bits - h0;
    } else {
      std::unordered_map<Bitset, Rational, BitsetHash> acc;
      const Rational keep = Rational(1) - delta;
      for (const auto& [s, w] : base.atoms()) acc[s] += keep * w;
      for (const auto& [s, w] : un.atoms()) acc[s] += delta * w;
      std::vector<SubsetDistribution::Atom> atoms;
      atoms.reserve(acc.size());
      for (auto& [s, w] : acc) atoms.emplace_back(s, std::move(w));
      row.gain = shannon_entropy(SubsetDistribution(f.ground(), std::move(atoms))).bits - h0;
    }
    scan.rows.push_back(std::move(row));
  }
  for (std::size_t i = 1; i < scan.rows.size(); ++i)
    if (scan.rows[i].gain > scan.rows[scan.best].gain) scan.best = i;
  return scan;
}

std::vector<Rational> default_delta_grid() {
  std::vector<Rational> out;
  out.reserve(20);
  BigInt den = 1;
  for (int k = 1; k <= 20; ++k) {
    den *= 2;
    out.emplace_back(BigInt(1), den);
  }
  return out;
}

}  // namespace uclab

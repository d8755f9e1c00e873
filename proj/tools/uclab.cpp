// uclab — analysis toolkit for union-closed set families.
//
// Subcommands: analyze, verify, construct, enumerate, approx-uc,
// entropy-gain.  Exit codes are a stable scripting contract:
//   0  success / property verified
//   1  verification failed (a Failed proof certificate)
//   2  input error (unreadable or malformed file, bad parameters)
//   3  resource guard tripped (family-size cap, pair-count cap)

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "uclab/constructions.hpp"
#include "uclab/entropy.hpp"
#include "uclab/enumerate.hpp"
#include "uclab/family.hpp"
#include "uclab/rng.hpp"
#include "uclab/verifier.hpp"

namespace {

using nlohmann::json;
using namespace uclab;

// Text mode prints 12 significant digits; JSON keeps full double precision.
std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string set_label(const Bitset& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw uclab::ParseError("cannot write file: " + path);
  out << text;
  if (!out.flush()) throw uclab::ParseError("cannot write file: " + path);
}

// Union atoms are printed only while the support stays table-sized.
constexpr std::size_t kAtomTableLimit = 64;

// ---- analyze --------------------------------------------------------------

int run_analyze(const std::string& path, const std::string& format) {
  const SetFamily f = load_family(path);
  const bool uc = is_union_closed(f);
  const FrequencyProfile prof = frequency_profile(f);
  const std::vector<int> abundant = abundant_elements(f);
  const BlockPartition blk = blocks(f);
  const CertificateReport cert = gilmer_certificate(f);

  std::optional<SubsetDistribution> atoms;
  const SetFamily step = union_closure_step(f);
  if (step.size() <= kAtomTableLimit) {
    const SubsetDistribution u = uniform_distribution(f);
    atoms = union_distribution(u, u);
  }

  if (format == "json") {
    json j;
    j["n"] = f.n();
    j["size"] = f.size();
    j["union_closed"] = uc;
    json counts = json::array();
    for (int e = 1; e <= f.n(); ++e) counts.push_back(prof.counts[static_cast<std::size_t>(e)]);
    j["counts"] = counts;
    j["max_fraction"] = rational_to_string(prof.max_fraction);
    j["max_fraction_value"] = to_double(prof.max_fraction);
    j["argmax"] = prof.argmax;
    j["abundant"] = abundant;
    j["blocks"] = blk.classes;
    j["never_class"] = blk.never_class;
    j["union_support_size"] = step.size();
    if (atoms) {
      json rows = json::array();
      for (const auto& [s, w] : atoms->atoms())
        rows.push_back({{"set", set_label(s)}, {"weight", rational_to_string(w)}});
      j["union_atoms"] = rows;
    }
    j["certificate"] = json::parse(certificate_to_json(cert));
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }

  std::printf("family: n=%d, %zu members\n", f.n(), f.size());
  std::printf("union-closed: %s\n", uc ? "yes" : "no");
  std::printf("frequencies:");
  for (int e = 1; e <= f.n(); ++e)
    std::printf(" %d:%lld", e, static_cast<long long>(prof.counts[static_cast<std::size_t>(e)]));
  std::printf("\n");
  std::printf("max fraction: %s = %s (element %d)\n",
              rational_to_string(prof.max_fraction).c_str(),
              fmt12(to_double(prof.max_fraction)).c_str(), prof.argmax);
  std::printf("abundant elements: %s\n", join_ints(abundant).c_str());
  std::printf("blocks:");
  for (std::size_t i = 0; i < blk.classes.size(); ++i) {
    std::string cls = "{";
    for (std::size_t k = 0; k < blk.classes[i].size(); ++k) {
      if (k) cls += ",";
      cls += std::to_string(blk.classes[i][k]);
    }
    cls += "}";
    std::printf(" %s%s", cls.c_str(),
                static_cast<int>(i) == blk.never_class ? "*" : "");
  }
  std::printf("%s\n", blk.never_class >= 0 ? "   (* = in no member)" : "");
  std::printf("union support: %zu sets\n", step.size());
  if (atoms) {
    std::printf("union atoms:\n");
    for (const auto& [s, w] : atoms->atoms())
      std::printf("  %-20s %s = %s\n", set_label(s).c_str(),
                  rational_to_string(w).c_str(),
                  fmt12(to_double(w)).c_str());
  }
  std::printf("entropy H(A): %s (err <= %s)\n", fmt12(cert.h_a.bits).c_str(),
              fmt12(cert.h_a.err).c_str());
  std::printf("entropy H(AuB): %s (err <= %s)\n", fmt12(cert.h_aub.bits).c_str(),
              fmt12(cert.h_aub.err).c_str());
  std::printf("certificate verdict: %s\n",
              cert.verdict == Verdict::ProvedNotUnionClosed
                  ? "proved-not-union-closed"
                  : "inconclusive");
  return 0;
}

// ---- verify ---------------------------------------------------------------

const char* kind_label(PieceKind k) {
  switch (k) {
    case PieceKind::DirectBound: return "direct-bound";
    case PieceKind::LeftEdgeMinorant: return "left-edge-minorant";
    case PieceKind::MonotoneLift: return "monotone-lift";
    case PieceKind::InteriorSecondDeriv: return "interior-second-deriv";
    case PieceKind::RightEdgeDecreasing: return "right-edge-decreasing";
  }
  return "direct-bound";
}

int run_verify(const std::string& target, double tolerance, int table_k_max,
               const std::string& emit, const std::string& format) {
  if (target == "psi-table") {
    if (format == "json") {
      json rows = json::array();
      for (int k = 1; k <= table_k_max; ++k)
        rows.push_back({{"k", k}, {"psi_k", psi_k(k, tolerance)}});
      std::printf("%s\n", json({{"target", "psi-table"}, {"rows", rows}}).dump(2).c_str());
      return 0;
    }
    std::printf("k   psi_k (root of (1-x)^k = x)\n");
    for (int k = 1; k <= table_k_max; ++k)
      std::printf("%-3d %s\n", k, fmt12(psi_k(k, tolerance)).c_str());
    return 0;
  }

  ProofCertificate cert;
  if (target == "key-lemma") {
    cert = verify_key_lemma(tolerance);
  } else if (target == "gilmer-refinement") {
    cert = verify_gilmer_refinement(tolerance);
  } else {
    throw DomainError("unknown verify target: " + target +
                      " (expected key-lemma, gilmer-refinement, or psi-table)");
  }

  if (!emit.empty()) write_text_file(emit, serialize_certificate(cert));

  const bool proved = cert.status == CertStatus::Proved;
  if (format == "json") {
    json j;
    j["target"] = cert.target;
    j["status"] = proved ? "proved" : "failed";
    j["tolerance"] = cert.tolerance;
    j["domain"] = {cert.domain_lo, cert.domain_hi};
    j["pieces"] = cert.pieces.size();
    json kinds = json::object();
    for (const auto& p : cert.pieces) {
      const std::string name = kind_label(p.kind);
      kinds[name] = kinds.value(name, 0) + 1;
    }
    j["piece_kinds"] = kinds;
    if (!proved) j["witness"] = {cert.fail_lo, cert.fail_hi};
    if (!emit.empty()) j["certificate_file"] = emit;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("target: %s\n", cert.target.c_str());
    std::printf("domain: [%s, %s]\n", fmt12(cert.domain_lo).c_str(),
                fmt12(cert.domain_hi).c_str());
    std::printf("tolerance: %s\n", fmt12(cert.tolerance).c_str());
    std::printf("pieces: %zu\n", cert.pieces.size());
    std::printf("status: %s\n", proved ? "proved" : "FAILED");
    if (!proved)
      std::printf("witness: [%s, %s]\n", fmt12(cert.fail_lo).c_str(),
                  fmt12(cert.fail_hi).c_str());
    if (!emit.empty()) std::printf("wrote: %s\n", emit.c_str());
  }
  return proved ? 0 : 1;
}

// ---- construct ------------------------------------------------------------

void print_family_summary(const std::string& name, const SetFamily& f,
                          const std::optional<AbundanceInequality>& ineq,
                          const std::string& out_path, const std::string& format) {
  const bool uc = is_union_closed(f);
  const std::vector<int> abundant = abundant_elements(f);
  if (!out_path.empty()) save_family(f, out_path);

  if (format == "json") {
    json j;
    j["construction"] = name;
    j["n"] = f.n();
    j["size"] = f.size();
    j["union_closed"] = uc;
    j["abundant"] = abundant;
    if (ineq) {
      j["abundance_inequality"] = {{"lhs", ineq->lhs.str()},
                                   {"rhs", ineq->rhs.str()},
                                   {"holds", ineq->holds}};
    }
    if (!out_path.empty()) j["file"] = out_path;
    std::printf("%s\n", j.dump(2).c_str());
    return;
  }
  std::printf("construction: %s\n", name.c_str());
  std::printf("ground set: [%d]\n", f.n());
  std::printf("size: %zu\n", f.size());
  std::printf("union-closed: %s\n", uc ? "yes" : "no");
  std::printf("abundant elements: %s\n", join_ints(abundant).c_str());
  if (ineq)
    std::printf("abundance inequality: %s < %s: %s\n", ineq->lhs.str().c_str(),
                ineq->rhs.str().c_str(), ineq->holds ? "true" : "false");
  if (!out_path.empty()) std::printf("wrote: %s\n", out_path.c_str());
}

int run_construct_snk(int n, int k, const std::string& out_path,
                      const std::string& format) {
  // The structural report never materializes the family; writing a file does.
  const SnkReport rep = snk_structural_report(n, k);
  const AbundanceInequality ineq = abundance_inequality(n, k);
  if (format == "json") {
    json j;
    j["construction"] = "S^" + std::to_string(n) + "_" + std::to_string(k);
    j["n"] = n;
    j["k"] = k;
    j["size"] = rep.counts.size.str();
    j["designated_count"] = rep.counts.designated.str();
    j["other_count"] = rep.counts.other.str();
    j["union_closed"] = rep.union_closed;
    j["abundant"] = rep.abundant;
    j["blocks_all_singletons"] = rep.blocks_all_singletons;
    j["abundance_inequality"] = {{"lhs", ineq.lhs.str()},
                                 {"rhs", ineq.rhs.str()},
                                 {"holds", ineq.holds}};
    if (!out_path.empty()) {
      const SetFamily f = make_Snk(n, k);  // may trip the size cap
      save_family(f, out_path);
      j["file"] = out_path;
    }
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  std::printf("construction: S^%d_%d\n", n, k);
  std::printf("ground set: [%d]\n", n);
  std::printf("size: %s\n", rep.counts.size.str().c_str());
  std::printf("count per designated element (1, 2): %s\n",
              rep.counts.designated.str().c_str());
  std::printf("count per other element (3..%d): %s\n", n,
              rep.counts.other.str().c_str());
  std::printf("union-closed: %s\n", rep.union_closed ? "yes" : "no");
  std::printf("abundant elements: %s\n", join_ints(rep.abundant).c_str());
  std::printf("blocks: %s\n",
              rep.blocks_all_singletons ? "all singletons" : "NOT all singletons");
  std::printf("abundance inequality: %s < %s: %s\n", ineq.lhs.str().c_str(),
              ineq.rhs.str().c_str(), ineq.holds ? "true" : "false");
  if (!out_path.empty()) {
    const SetFamily f = make_Snk(n, k);  // may trip the size cap
    save_family(f, out_path);
    std::printf("wrote: %s\n", out_path.c_str());
  }
  return 0;
}

// ---- enumerate ------------------------------------------------------------

int run_enumerate(int n, const std::string& method, const std::string& emit_worst) {
  const EnumerationReport rep = method == "brute"
                                    ? enumerate_union_closed(n)
                                    : enumerate_union_closed_pruned(n);
  json j;
  j["n"] = rep.n;
  j["method"] = method;
  j["families_scanned"] = rep.families_scanned;
  j["union_closed_count"] = rep.uc_count;
  j["min_max_fraction"] = rational_to_string(rep.min_max_fraction);
  j["min_max_fraction_value"] = to_double(rep.min_max_fraction);
  j["conjecture_holds"] = rep.conjecture_holds;
  if (rep.worst) {
    json members = json::array();
    for (const auto& s : rep.worst->members()) members.push_back(set_label(s));
    j["worst_family"] = members;
    if (!emit_worst.empty()) {
      save_family(*rep.worst, emit_worst);
      j["worst_family_file"] = emit_worst;
    }
  }
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

// ---- approx-uc ------------------------------------------------------------

int run_approx_uc(int n, int k_draws, int trials, std::uint64_t seed) {
  const ApproxUcResult r = approx_uc_experiment(n, k_draws, trials, seed);
  std::printf("n,k_draws,trials,seed,p_hat,log_gap\n");
  std::printf("%d,%d,%d,%llu,%s,%s\n", r.n, r.k_draws, r.trials,
              static_cast<unsigned long long>(r.seed), fmt12(r.p_hat).c_str(),
              fmt12(r.log_gap).c_str());
  return 0;
}

// ---- entropy-gain ---------------------------------------------------------

int run_entropy_gain(const std::string& path, const std::vector<std::string>& delta_args,
                     const std::string& format) {
  const SetFamily f = load_family(path);
  std::vector<Rational> deltas;
  for (const auto& a : delta_args) deltas.push_back(parse_rational(a));
  if (deltas.empty()) deltas = default_delta_grid();

  const GainScan scan = entropy_gain_scan(f, deltas);
  const EntropyValue base = shannon_entropy(uniform_distribution(f));

  if (format == "json") {
    json j;
    j["n"] = f.n();
    j["size"] = f.size();
    j["h_base"] = base.bits;
    json rows = json::array();
    for (const auto& r : scan.rows)
      rows.push_back({{"delta", rational_to_string(r.delta)}, {"gain", r.gain}});
    j["rows"] = rows;
    j["best_delta"] = rational_to_string(scan.rows[scan.best].delta);
    j["best_gain"] = scan.rows[scan.best].gain;
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }
  std::printf("family: n=%d, %zu members (not union-closed)\n", f.n(), f.size());
  std::printf("H(A) = %s\n", fmt12(base.bits).c_str());
  std::printf("%-14s %s\n", "delta", "H(A^delta) - H(A)");
  for (std::size_t i = 0; i < scan.rows.size(); ++i)
    std::printf("%-14s %s%s\n", rational_to_string(scan.rows[i].delta).c_str(),
                fmt12(scan.rows[i].gain).c_str(), i == scan.best ? "   <- best" : "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uclab: union-closed set family analysis toolkit"};
  app.require_subcommand(1);

  std::string format = "text";

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Report structure and entropy certificate of a family file");
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "family file (.ucf)")->required();
  analyze->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Prove an entropy inequality with an interval certificate");
  std::string verify_target;
  double tolerance = 1e-9;
  int table_k_max = 10;
  std::string emit;
  verify->add_option("target", verify_target, "key-lemma | gilmer-refinement | psi-table")->required();
  verify->add_option("--tolerance", tolerance, "certificate tolerance (default 1e-9)");
  verify->add_option("--k-max", table_k_max, "last row of the psi table")->check(CLI::Range(1, 64));
  verify->add_option("--emit", emit, "write the serialized certificate to this path");
  verify->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // construct
  auto* construct = app.add_subcommand("construct", "Build a named family and summarize it");
  construct->require_subcommand(1);
  std::string out_path;
  int fm_m = 3;
  auto* c_fm = construct->add_subcommand("fm", "powerset of [m] plus the chain of prefixes up to [m^2]");
  c_fm->add_option("--m", fm_m, "parameter m")->required();
  int bin_n = 3, bin_k = 2;
  std::string bin_mode = "atmost";
  auto* c_bin = construct->add_subcommand("binomial", "all subsets of [n] with size constrained by k");
  c_bin->add_option("--n", bin_n, "ground set size")->required();
  c_bin->add_option("--k", bin_k, "size bound")->required();
  c_bin->add_option("--mode", bin_mode, "atmost | atleast | exact")
      ->check(CLI::IsMember({"atmost", "atleast", "exact"}));
  auto* c_s12 = construct->add_subcommand("s12-4", "the 1045-member witness family on [12]");
  int snk_n = 30, snk_k = 3;
  auto* c_snk = construct->add_subcommand("snk", "S^n_k: large-set clauses over designated elements 1, 2");
  c_snk->add_option("--n", snk_n, "ground set size (even)")->required();
  c_snk->add_option("--k", snk_k, "minimum member size")->required();
  for (auto* c : {c_fm, c_bin, c_s12, c_snk}) {
    c->add_option("-o,--out", out_path, "write the family to this .ucf path");
    c->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  }

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustively check the conjecture over all families on [n]");
  int enum_n = 3;
  std::string method = "pruned";
  std::string emit_worst;
  enumerate->add_option("--n", enum_n, "ground set size (1..4)")->required();
  enumerate->add_option("--method", method, "pruned | brute")
      ->check(CLI::IsMember({"pruned", "brute"}));
  enumerate->add_option("--emit-worst", emit_worst, "write a minimizing family to this .ucf path");

  // approx-uc
  auto* approx = app.add_subcommand("approx-uc", "Monte Carlo approximate-union-closedness experiment (CSV)");
  int auc_n = 1000, auc_k = 2, auc_trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  approx->add_option("--n", auc_n, "ground set size");
  approx->add_option("--k", auc_k, "draws per trial");
  approx->add_option("--trials", auc_trials, "number of trials");
  approx->add_option("--seed", seed, "PRNG seed (default fixed for reproducibility)");

  // entropy-gain
  auto* gain = app.add_subcommand("entropy-gain", "Scan mixture weights for entropy increase on a non-union-closed family");
  std::string gain_path;
  std::vector<std::string> delta_args;
  gain->add_option("file", gain_path, "family file (.ucf)")->required();
  gain->add_option("--deltas", delta_args, "mixture weights, e.g. 1/2,1/4")->delimiter(',');
  gain->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad invocation is an input error
  }

  try {
    if (*analyze) return run_analyze(analyze_path, format);
    if (*verify) return run_verify(verify_target, tolerance, table_k_max, emit, format);
    if (*c_fm) {
      const SetFamily f = make_Fm(fm_m);
      print_family_summary("F_" + std::to_string(fm_m), f, std::nullopt, out_path, format);
      return 0;
    }
    if (*c_bin) {
      const BinomialMode mode = bin_mode == "atmost"   ? BinomialMode::AtMost
                                : bin_mode == "atleast" ? BinomialMode::AtLeast
                                                        : BinomialMode::Exact;
      const SetFamily f = make_binomial(bin_n, mode, bin_k);
      print_family_summary("binom([" + std::to_string(bin_n) + "], " + bin_mode + " " +
                               std::to_string(bin_k) + ")",
                           f, std::nullopt, out_path, format);
      return 0;
    }
    if (*c_s12) {
      const SetFamily f = make_S12_4();
      print_family_summary("S^12_4", f, abundance_inequality(12, 4), out_path, format);
      return 0;
    }
    if (*c_snk) return run_construct_snk(snk_n, snk_k, out_path, format);
    if (*enumerate) return run_enumerate(enum_n, method, emit_worst);
    if (*approx) return run_approx_uc(auc_n, auc_k, auc_trials, seed);
    if (*gain) return run_entropy_gain(gain_path, delta_args, format);
  } catch (const uclab::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const uclab::ResourceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const uclab::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

#include "uclab/family.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "uclab/limits.hpp"

namespace uclab {

SetFamily::SetFamily(GroundSet ground, std::vector<Bitset> members)
    : ground_(ground), members_(std::move(members)) {
  if (members_.empty()) throw DomainError("empty family");
  for (const Bitset& m : members_)
    if (m.width() != ground_.n) throw DomainError("member width does not match ground set");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const Bitset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

namespace {

struct RawLine {
  std::string text;
  int number = 0;
};

std::vector<RawLine> content_lines(std::string_view text) {
  std::vector<RawLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') {
      const auto last = line.find_last_not_of(" \t");
      out.push_back({line.substr(first, last - first + 1), number});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

bool is_bitstring(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

std::vector<int> parse_brace_line(const RawLine& line) {
  const std::string& s = line.text;
  if (s.front() != '{' || s.back() != '}')
    throw ParseError("expected a brace set like {1,3,4}", line.number);
  std::vector<int> elems;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    while (i < end && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= end) break;
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an element number", line.number);
    long v = 0;
    while (i < end && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > kMaxGroundSet) throw ParseError("element too large", line.number);
      ++i;
    }
    elems.push_back(static_cast<int>(v));
    while (i < end && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i < end) {
      if (s[i] != ',') throw ParseError("expected ','", line.number);
      ++i;
    }
  }
  return elems;
}

}  // namespace

SetFamily parse_family(std::string_view text, FamilyFormat format) {
  std::vector<RawLine> lines = content_lines(text);
  if (lines.empty()) throw ParseError("no family data in input");

  int header_n = 0;
  if (lines.front().text.rfind("n=", 0) == 0) {
    const std::string v = lines.front().text.substr(2);
    try {
      header_n = std::stoi(v);
    } catch (...) {
      throw ParseError("bad header value: " + v, lines.front().number);
    }
    if (header_n < 1 || header_n > kMaxGroundSet)
      throw DomainError("header ground set size out of range: " + v);
    lines.erase(lines.begin());
    if (lines.empty()) throw ParseError("header but no member lines");
  }

  if (format == FamilyFormat::Auto)
    format = lines.front().text.front() == '{' ? FamilyFormat::Braces : FamilyFormat::Bitstring;

  if (format == FamilyFormat::Braces) {
    std::vector<std::vector<int>> rows;
    int max_elem = 0;
    for (const RawLine& line : lines) {
      rows.push_back(parse_brace_line(line));
      for (int e : rows.back()) {
        if (e < 1) throw DomainError("element out of range: " + std::to_string(e));
        max_elem = std::max(max_elem, e);
      }
    }
    const int n = header_n > 0 ? header_n : std::max(max_elem, 1);
    if (max_elem > n)
      throw DomainError("element " + std::to_string(max_elem) + " outside ground set [" +
                        std::to_string(n) + "]");
    std::vector<Bitset> members;
    members.reserve(rows.size());
    for (const auto& row : rows) {
      Bitset b(n);
      for (int e : row) b.add(e);
      members.push_back(std::move(b));
    }
    return SetFamily(GroundSet(n), std::move(members));
  }

  // Bitstring rows: all the same width; header, if present, must agree.
  const std::size_t width = lines.front().text.size();
  if (width > static_cast<std::size_t>(kMaxGroundSet))
    throw DomainError("bitstring wider than the ground set ceiling");
  if (header_n > 0 && static_cast<std::size_t>(header_n) != width)
    throw ParseError("bitstring width disagrees with header", lines.front().number);
  std::vector<Bitset> members;
  members.reserve(lines.size());
  for (const RawLine& line : lines) {
    if (!is_bitstring(line.text))
      throw ParseError("expected a 0/1 bitstring", line.number);
    if (line.text.size() != width)
      throw ParseError("bitstring width differs from first row", line.number);
    Bitset b(static_cast<int>(width));
    for (std::size_t i = 0; i < width; ++i)
      if (line.text[i] == '1') b.add(static_cast<int>(i) + 1);
    members.push_back(std::move(b));
  }
  return SetFamily(GroundSet(static_cast<int>(width)), std::move(members));
}

std::string serialize_family(const SetFamily& f, FamilyFormat format, bool with_header) {
  if (format == FamilyFormat::Auto) format = FamilyFormat::Braces;
  std::ostringstream out;
  if (with_header) out << "n=" << f.n() << "\n";
  for (const Bitset& m : f.members()) {
    if (format == FamilyFormat::Braces) {
      out << '{';
      bool first = true;
      for (int e : m.elements()) {
        if (!first) out << ',';
        out << e;
        first = false;
      }
      out << "}\n";
    } else {
      out << m.bitstring() << "\n";
    }
  }
  return out.str();
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void save_family(const SetFamily& f, const std::string& path, FamilyFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << serialize_family(f, format);
}

SetFamily union_closure_step(const SetFamily& f) {
  const std::size_t m = f.size();
  if (static_cast<std::uint64_t>(m) * m > kPairGuard)
    throw ResourceError("union closure step over " + std::to_string(m) +
                        " members exceeds the pair guard");
  std::vector<Bitset> out = f.members();
  out.reserve(m + m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      out.push_back(f.members()[i] | f.members()[j]);
  return SetFamily(f.ground(), std::move(out));
}

bool is_union_closed(const SetFamily& f) {
  const std::size_t m = f.size();
  if (static_cast<std::uint64_t>(m) * m > kPairGuard)
    throw ResourceError("union-closedness check over " + std::to_string(m) +
                        " members exceeds the pair guard");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!f.contains(f.members()[i] | f.members()[j])) return false;
  return true;
}

SetFamily generate_closure(const SetFamily& generators) {
  std::unordered_set<Bitset, BitsetHash> all(generators.members().begin(),
                                             generators.members().end());
  std::vector<Bitset> frontier = generators.members();
  const std::uint64_t cap = family_size_cap();
  while (!frontier.empty()) {
    std::vector<Bitset> fresh;
    for (const Bitset& a : frontier) {
      for (const Bitset& b : all) {
        Bitset u = a | b;
        if (all.find(u) == all.end()) {
          all.insert(u);
          fresh.push_back(std::move(u));
          if (all.size() > cap)
            throw ResourceError("closure exceeds the family size cap");
        }
      }
    }
    frontier = std::move(fresh);
  }
  return SetFamily(generators.ground(), std::vector<Bitset>(all.begin(), all.end()));
}

FrequencyProfile frequency_profile(const SetFamily& f) {
  FrequencyProfile p;
  p.counts.assign(static_cast<std::size_t>(f.n()) + 1, 0);
  p.total = static_cast<std::int64_t>(f.size());
  for (const Bitset& m : f.members())
    for (int e : m.elements()) ++p.counts[static_cast<std::size_t>(e)];
  std::int64_t best = -1;
  for (int i = 1; i <= f.n(); ++i) {
    if (p.counts[static_cast<std::size_t>(i)] > best) {
      best = p.counts[static_cast<std::size_t>(i)];
      p.argmax = i;
    }
  }
  p.max_fraction = Rational(BigInt(best), BigInt(p.total));
  return p;
}

std::vector<int> abundant_elements(const SetFamily& f) {
  const FrequencyProfile p = frequency_profile(f);
  std::vector<int> out;
  for (int i = 1; i <= f.n(); ++i)
    if (2 * p.counts[static_cast<std::size_t>(i)] >= p.total) out.push_back(i);
  return out;
}

BlockPartition blocks(const SetFamily& f) {
  // Column signature of element i: which members contain i.
  const std::size_t words = (f.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> sig(
      static_cast<std::size_t>(f.n()) + 1, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < f.size(); ++j)
    for (int e : f.members()[j].elements())
      sig[static_cast<std::size_t>(e)][j >> 6] |= 1ULL << (j & 63);

  std::map<std::vector<std::uint64_t>, std::vector<int>> groups;
  for (int i = 1; i <= f.n(); ++i) groups[sig[static_cast<std::size_t>(i)]].push_back(i);

  BlockPartition out;
  const std::vector<std::uint64_t> zero(words, 0);
  std::vector<std::pair<int, std::vector<int>>> ordered;
  ordered.reserve(groups.size());
  for (auto& [key, elems] : groups) {
    const bool never = key == zero;
    ordered.emplace_back(elems.front(), std::move(elems));
    if (never) ordered.back().first = -ordered.back().first;  // mark; order fixed below
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first) < std::abs(b.first);
  });
  for (auto& [mark, elems] : ordered) {
    out.classes.push_back(std::move(elems));
    if (mark < 0) out.never_class = static_cast<int>(out.classes.size()) - 1;
  }
  return out;
}

}  // namespace uclab

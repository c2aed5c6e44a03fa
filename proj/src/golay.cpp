#include "sodforge/golay.hpp"

#include <algorithm>
#include <bit>

namespace sodforge {

Gaussian SeqEntry::value() const {
  static constexpr Gaussian kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return is_zero() ? Gaussian{} : kUnits[power];
}

GroupElement unit_element(int power) {
  power = ((power % 4) + 4) % 4;
  return {power >= 2 ? -1 : 1, static_cast<std::uint32_t>(power & 1)};
}

Sequence::Sequence(std::vector<SeqEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.power < -1 || e.power > 3) throw Error("sequence entry has an invalid unit");
}

Sequence Sequence::parse(std::string_view text) {
  std::vector<SeqEntry> entries;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ',') continue;
    std::string_view tok = text.substr(start, i - start);
    start = i + 1;
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok == "1" || tok == "+1" || tok == "+") entries.push_back(SeqEntry::unit(0));
    else if (tok == "-1" || tok == "-") entries.push_back(SeqEntry::unit(2));
    else if (tok == "i" || tok == "+i") entries.push_back(SeqEntry::unit(1));
    else if (tok == "-i") entries.push_back(SeqEntry::unit(3));
    else if (tok == "0") entries.push_back(SeqEntry::zero());
    else throw Error("bad sequence token '" + std::string(tok) + "'");
  }
  if (entries.empty()) throw Error("empty sequence");
  return Sequence(std::move(entries));
}

bool Sequence::has_variables() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const SeqEntry& e) { return e.var >= 0; });
}

bool Sequence::is_real_pm1() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SeqEntry& e) { return !e.is_zero() && e.power % 2 == 0 && e.var < 0; });
}

bool Sequence::is_complex_unit() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const SeqEntry& e) { return !e.is_zero() && e.var < 0; });
}

Sequence Sequence::with_variable(std::int32_t v) const {
  Sequence out = *this;
  for (auto& e : out.entries_)
    if (!e.is_zero()) e.var = v;
  return out;
}

Sequence Sequence::times_unit(int power) const {
  Sequence out = *this;
  for (auto& e : out.entries_) e = e.times_unit(power);
  return out;
}

Sequence Sequence::concat(const Sequence& other) const {
  std::vector<SeqEntry> entries = entries_;
  entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
  return Sequence(std::move(entries));
}

std::string Sequence::to_string() const {
  static constexpr const char* kTokens[4] = {"1", "i", "-1", "-i"};
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    const SeqEntry& e = entries_[k];
    if (e.is_zero()) {
      out += '0';
      continue;
    }
    out += kTokens[e.power];
    if (e.var >= 0) out += "*x" + std::to_string(e.var + 1);
  }
  return out;
}

Gaussian npaf(const Sequence& a, std::size_t j) {
  if (a.has_variables()) throw Error("npaf: sequence carries variables; use npaf_ring");
  Gaussian sum;
  for (std::size_t i = 0; i + j < a.length(); ++i) sum = sum + a[i + j].value() * a[i].value().conj();
  return sum;
}

RingElement npaf_ring(const Sequence& a, std::size_t j) {
  const GroupPresentation sc = GroupPresentation::complex();
  std::vector<RingElement::Term> terms;
  for (std::size_t i = 0; i + j < a.length(); ++i) {
    const SeqEntry& hi = a[i + j];
    const SeqEntry& lo = a[i];
    if (hi.is_zero() || lo.is_zero()) continue;
    const GroupElement g = sc.multiply(unit_element(hi.power), unit_element(lo.conj().power));
    VarMonomial m;
    if (hi.var >= 0) m = m * VarMonomial::of(static_cast<VarIndex>(hi.var));
    if (lo.var >= 0) m = m * VarMonomial::of(static_cast<VarIndex>(lo.var));
    terms.push_back({RingElement::make_key(g.mask, m), g.sign});
  }
  return RingElement::from_terms(std::move(terms));
}

bool is_complementary(std::span<const Sequence> seqs) {
  std::size_t longest = 0;
  bool symbolic = false;
  for (const auto& s : seqs) {
    longest = std::max(longest, s.length());
    symbolic = symbolic || s.has_variables();
  }
  for (std::size_t j = 1; j < longest; ++j) {
    if (symbolic) {
      RingElement sum;
      for (const auto& s : seqs) sum += npaf_ring(s, j);
      if (!sum.is_zero()) return false;
    } else {
      Gaussian sum;
      for (const auto& s : seqs) sum = sum + npaf(s, j);
      if (!(sum == Gaussian{})) return false;
    }
  }
  return true;
}

bool is_complementary(const Sequence& a, const Sequence& b) {
  const Sequence both[2] = {a, b};
  return is_complementary(both);
}

Sequence reverse_conjugate(const Sequence& a) {
  std::vector<SeqEntry> entries;
  entries.reserve(a.length());
  for (std::size_t i = a.length(); i-- > 0;) entries.push_back(a[i].conj());
  return Sequence(std::move(entries));
}

bool GolayPair::valid() const {
  if (a.length() != b.length() || a.length() == 0) return false;
  const bool alphabet_ok = alphabet == Alphabet::Real ? a.is_real_pm1() && b.is_real_pm1()
                                                      : a.is_complex_unit() && b.is_complex_unit();
  return alphabet_ok && is_complementary(a, b);
}

GolayPair golay_double(const GolayPair& pair) {
  if (!pair.valid()) throw Error("golay_double: input is not a Golay pair");
  GolayPair out{pair.a.concat(pair.b), pair.a.concat(pair.b.negated()), pair.alphabet};
  if (!out.valid()) throw Error("golay_double: doubled pair failed verification");
  return out;
}

namespace {

class GolaySearcher {
 public:
  GolaySearcher(std::size_t n, Alphabet alphabet, const GolaySearchOptions& options)
      : n_(n), options_(options), a_(n), b_(n) {
    units_ = alphabet == Alphabet::Real ? std::vector<int>{0, 2} : std::vector<int>{0, 1, 2, 3};
    alphabet_ = alphabet;
    for (std::size_t lo = 0, hi = n - 1; lo <= hi && hi < n; ++lo, --hi) {
      order_.push_back(lo);
      if (hi != lo) order_.push_back(hi);
      if (hi == 0) break;
    }
  }

  GolaySearchResult run() {
    dfs(0);
    return std::move(result_);
  }

 private:
  Gaussian lag(std::size_t j) const {
    Gaussian sum;
    for (std::size_t i = 0; i + j < n_; ++i)
      sum = sum + a_[i + j].value() * a_[i].value().conj() + b_[i + j].value() * b_[i].value().conj();
    return sum;
  }

  bool dfs(std::size_t depth) {
    if (depth == n_) {
      for (std::size_t j = 1; j < n_; ++j)
        if (!(lag(j) == Gaussian{})) return false;
      result_.pairs.push_back({Sequence(a_), Sequence(b_), alphabet_});
      return options_.first_only;
    }
    const std::size_t pos = order_[depth];
    const std::size_t assigned = depth + 1;
    for (int ua : units_)
      for (int ub : units_) {
        if (pos == 0 && (ua != 0 || ub != 0)) continue;
        if (++result_.nodes > options_.node_budget)
          throw BudgetExceeded("Golay search exceeded its node budget");
        a_[pos] = SeqEntry::unit(ua);
        b_[pos] = SeqEntry::unit(ub);
        // Once the outer k entries on both ends are fixed, lag n - k is determined.
        if (assigned % 2 == 0 && assigned < n_ && !(lag(n_ - assigned / 2) == Gaussian{})) continue;
        if (dfs(depth + 1)) return true;
      }
    a_[pos] = b_[pos] = SeqEntry::zero();
    return false;
  }

  std::size_t n_;
  GolaySearchOptions options_;
  Alphabet alphabet_;
  std::vector<int> units_;
  std::vector<std::size_t> order_;
  std::vector<SeqEntry> a_, b_;
  GolaySearchResult result_;
};

}  // namespace

GolaySearchResult search_golay(std::size_t length, Alphabet alphabet, const GolaySearchOptions& options) {
  if (length == 0) throw Error("search_golay: length must be positive");
  const std::size_t limit = alphabet == Alphabet::Real ? 14 : 8;
  if (length > limit && !options.allow_large)
    throw BudgetExceeded("search_golay: length " + std::to_string(length) + " exceeds the default limit of " +
                         std::to_string(limit));
  if (length == 1) {
    GolaySearchResult r;
    r.nodes = 1;
    r.pairs.push_back({Sequence({SeqEntry::unit(0)}), Sequence({SeqEntry::unit(0)}), alphabet});
    return r;
  }
  return GolaySearcher(length, alphabet, options).run();
}

const std::vector<CatalogEntry>& golay_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    auto real = [](std::string name, std::string source, const char* a, const char* b) {
      return CatalogEntry{std::move(name), std::move(source), {Sequence::parse(a), Sequence::parse(b), Alphabet::Real}};
    };
    auto cplx = [](std::string name, std::string source, const char* a, const char* b) {
      return CatalogEntry{std::move(name), std::move(source), {Sequence::parse(a), Sequence::parse(b), Alphabet::Complex}};
    };
    std::vector<CatalogEntry> c = {
        real("real-2", "standard", "1,1", "1,-1"),
        real("real-8", "worked example (order-31 COD)", "1,1,1,-1,1,1,-1,1", "1,1,1,-1,-1,-1,1,-1"),
        real("real-10", "exhaustive search", "1,1,-1,1,-1,1,-1,-1,1,1", "1,1,-1,1,1,1,1,1,-1,-1"),
        real("real-26", "first pair found by depth-first search",
             "1,1,1,1,-1,1,1,-1,-1,1,-1,1,-1,1,-1,-1,1,-1,1,1,1,-1,-1,1,1,1",
             "1,1,1,1,-1,1,1,-1,-1,1,-1,1,1,1,1,1,-1,1,-1,-1,-1,1,1,-1,-1,-1"),
        cplx("complex-3", "standard", "1,1,-1", "1,i,1"),
        cplx("complex-5", "first pair found by depth-first search", "1,1,1,-i,i", "1,i,-1,1,-i"),
        cplx("complex-11", "worked example (order-31 COD)", "1,i,-1,1,-1,i,-i,-1,i,i,1", "1,1,-i,-i,-i,1,1,i,-1,1,-1"),
        cplx("complex-13", "first pair found by depth-first search", "1,1,1,i,-1,1,1,-i,1,-1,1,-i,i",
             "1,i,-1,-1,-1,i,-1,1,1,-i,-1,1,-i"),
    };
    for (const auto& e : c)
      if (!e.pair.valid()) throw Error("Golay catalog entry " + e.name + " is not complementary");
    return c;
  }();
  return catalog;
}

std::optional<GolayPair> find_golay_pair(std::size_t length, Alphabet alphabet) {
  if (length == 0) return std::nullopt;
  if (length == 1) return GolayPair{Sequence::parse("1"), Sequence::parse("1"), alphabet};
  const CatalogEntry* best = nullptr;
  for (const auto& e : golay_catalog()) {
    if (alphabet == Alphabet::Real && e.pair.alphabet != Alphabet::Real) continue;
    const std::size_t base = e.pair.length();
    if (length % base != 0 || !std::has_single_bit(length / base)) continue;
    if (!best || base > best->pair.length()) best = &e;
  }
  if (!best) return std::nullopt;
  GolayPair pair = best->pair;
  while (pair.length() < length) pair = golay_double(pair);
  pair.alphabet = alphabet;
  return pair;
}

bool is_admissible_cgn(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e, unsigned u) {
  return b + c + d + e <= a + 2 * u + 1 && u <= c + e;
}

std::uint64_t cgn_value(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e, unsigned u) {
  std::uint64_t m = 1;
  auto times = [&m](std::uint64_t base, unsigned k) {
    for (unsigned i = 0; i < k; ++i) {
      if (m > UINT64_MAX / base) throw Error("cgn_value: overflow");
      m *= base;
    }
  };
  times(2, a + u);
  times(3, b);
  times(5, c);
  times(11, d);
  times(13, e);
  return m;
}

}  // namespace sodforge

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <set>

#include "sodforge/golay.hpp"

using namespace sodforge;

namespace {

const char* kA8 = "1,1,1,-1,1,1,-1,1";
const char* kB8 = "1,1,1,-1,-1,-1,1,-1";
const char* kC11 = "1,i,-1,1,-1,i,-i,-1,i,i,1";
const char* kD11 = "1,1,-i,-i,-i,1,1,i,-1,1,-1";

using Z = std::complex<long long>;

Z unit(const SeqEntry& e) {
  static const Z units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return e.is_zero() ? Z{} : units[e.power];
}

// Direct sum over all index pairs with difference j.
Z npaf_oracle(const Sequence& a, std::size_t j) {
  Z s{};
  for (std::size_t p = 0; p < a.length(); ++p)
    for (std::size_t q = 0; q < a.length(); ++q)
      if (p == q + j) s += unit(a[p]) * std::conj(unit(a[q]));
  return s;
}

bool complementary_oracle(const std::vector<Sequence>& seqs) {
  std::size_t n = 0;
  for (const auto& s : seqs) n = std::max(n, s.length());
  for (std::size_t j = 1; j < n; ++j) {
    Z s{};
    for (const auto& a : seqs) s += npaf_oracle(a, j);
    if (s != Z{}) return false;
  }
  return true;
}

// Number of complementary pairs with a_0 = b_0 = 1 by full enumeration.
std::size_t brute_force_count(std::size_t n, int units) {
  std::size_t count = 0;
  const std::size_t free = 2 * (n - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= static_cast<std::size_t>(units);
  const int step = units == 2 ? 2 : 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<SeqEntry> a{SeqEntry::unit(0)}, b{SeqEntry::unit(0)};
    std::size_t rest = code;
    for (std::size_t i = 0; i < free; ++i) {
      const int p = static_cast<int>(rest % static_cast<std::size_t>(units)) * step;
      rest /= static_cast<std::size_t>(units);
      (i < n - 1 ? a : b).push_back(SeqEntry::unit(p));
    }
    if (complementary_oracle({Sequence(a), Sequence(b)})) ++count;
  }
  return count;
}

Sequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<SeqEntry> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(rng() % 5 == 0 ? SeqEntry::zero() : SeqEntry::unit(static_cast<int>(rng() % 4)));
  return Sequence(e);
}

}  // namespace

TEST_SUITE("golay") {

TEST_CASE("NPAF examples") {
  const Sequence a = Sequence::parse(kA8);
  CHECK(npaf(Sequence::parse("1,1"), 1) == Gaussian{1, 0});
  CHECK(npaf(a, 1) == Gaussian{-1, 0});
  CHECK(npaf(a, 0) == Gaussian{8, 0});
  CHECK(npaf(a, 8) == Gaussian{0, 0});
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Sequence s = random_sequence(rng, 1 + rng() % 9);
    for (std::size_t j = 0; j <= s.length(); ++j) {
      const Z o = npaf_oracle(s, j);
      CHECK(npaf(s, j) == Gaussian{o.real(), o.imag()});
    }
  }
}

TEST_CASE("reversing and conjugating preserves the NPAF") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const Sequence s = random_sequence(rng, 1 + rng() % 9);
    for (std::size_t j = 0; j < s.length(); ++j) CHECK(npaf(reverse_conjugate(s), j) == npaf(s, j));
  }
}

TEST_CASE("complementarity of the worked pairs") {
  CHECK(is_complementary(Sequence::parse("1,1"), Sequence::parse("1,-1")));
  const GolayPair ab{Sequence::parse(kA8), Sequence::parse(kB8), Alphabet::Real};
  const GolayPair cd{Sequence::parse(kC11), Sequence::parse(kD11), Alphabet::Complex};
  CHECK(ab.valid());
  CHECK(cd.valid());
  CHECK(complementary_oracle({ab.a, ab.b}));
  CHECK(complementary_oracle({cd.a, cd.b}));
  CHECK_FALSE(is_complementary(Sequence::parse(kA8), Sequence::parse(kA8)));
}

TEST_CASE("reverse conjugate") {
  CHECK(reverse_conjugate(Sequence::parse("1,i")) == Sequence::parse("-i,1"));
  const Sequence c = Sequence::parse(kC11);
  CHECK(reverse_conjugate(reverse_conjugate(c)) == c);
  const Sequence r = reverse_conjugate(c);
  // conj(c_11) = 1, conj(c_10) = -i, ..., conj(c_1) = 1
  CHECK(r == Sequence::parse("1,-i,-i,-1,i,-i,-1,1,-1,-i,1"));
}

TEST_CASE("complementarity invariances") {
  std::mt19937_64 rng(3);
  for (const auto& e : golay_catalog()) {
    const Sequence& a = e.pair.a;
    const Sequence& b = e.pair.b;
    CHECK(is_complementary(a.negated(), b));
    CHECK(is_complementary(reverse_conjugate(a), reverse_conjugate(b)));
    CHECK(is_complementary(a.times_unit(static_cast<int>(rng() % 4)), b));
  }
}

TEST_CASE("doubling") {
  const GolayPair one{Sequence::parse("1"), Sequence::parse("1"), Alphabet::Real};
  const GolayPair two = golay_double(one);
  CHECK(two.a == Sequence::parse("1,1"));
  CHECK(two.b == Sequence::parse("1,-1"));
  const GolayPair four = golay_double(two);
  CHECK(complementary_oracle({four.a, four.b}));
  const GolayPair sixteen = golay_double({Sequence::parse(kA8), Sequence::parse(kB8), Alphabet::Real});
  CHECK(sixteen.length() == 16);
  CHECK(complementary_oracle({sixteen.a, sixteen.b}));
  CHECK_THROWS_AS(golay_double({Sequence::parse("1,1"), Sequence::parse("1,1"), Alphabet::Real}), Error);
}

TEST_CASE("search agrees with full enumeration") {
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(search_golay(n, Alphabet::Real).pairs.size() == brute_force_count(n, 2));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(search_golay(n, Alphabet::Complex).pairs.size() == brute_force_count(n, 4));
  }
}

TEST_CASE("search results") {
  CHECK(search_golay(3, Alphabet::Real).pairs.empty());
  const auto ten = search_golay(10, Alphabet::Real);
  CHECK_FALSE(ten.pairs.empty());
  for (const auto& p : ten.pairs) CHECK(p.valid());
  const auto two = search_golay(2, Alphabet::Real);
  CHECK(std::any_of(two.pairs.begin(), two.pairs.end(), [](const GolayPair& p) {
    return p.a == Sequence::parse("1,1") && p.b == Sequence::parse("1,-1");
  }));
  CHECK(search_golay(10, Alphabet::Real).nodes == ten.nodes);
  GolaySearchOptions tiny;
  tiny.node_budget = 10;
  CHECK_THROWS_AS(search_golay(10, Alphabet::Real, tiny), BudgetExceeded);
  CHECK_THROWS_AS(search_golay(20, Alphabet::Real), BudgetExceeded);
}

TEST_CASE("catalog integrity and lookup") {
  std::set<std::pair<std::size_t, bool>> lengths;
  for (const auto& e : golay_catalog()) {
    CHECK(e.pair.valid());
    CHECK(complementary_oracle({e.pair.a, e.pair.b}));
    lengths.insert({e.pair.length(), e.pair.alphabet == Alphabet::Real});
  }
  for (std::size_t n : {2, 8, 10, 26}) CHECK(lengths.count({n, true}));
  for (std::size_t n : {3, 5, 11, 13}) CHECK(lengths.count({n, false}));
  for (std::size_t n : {1, 2, 4, 8, 16, 20, 40, 52, 64}) {
    const auto p = find_golay_pair(n, Alphabet::Real);
    REQUIRE(p);
    CHECK(p->length() == n);
    CHECK(p->valid());
  }
  for (std::size_t n : {3, 6, 11, 22, 13, 26}) CHECK(find_golay_pair(n, Alphabet::Complex));
  CHECK_FALSE(find_golay_pair(3, Alphabet::Real));
  CHECK_FALSE(find_golay_pair(7, Alphabet::Complex));
}

TEST_CASE("complex Golay number predicate") {
  CHECK(is_admissible_cgn(0, 0, 0, 1, 0, 0));
  CHECK(cgn_value(0, 0, 0, 1, 0, 0) == 11);
  CHECK(is_admissible_cgn(0, 0, 0, 0, 0, 0));
  CHECK(cgn_value(0, 0, 0, 0, 0, 0) == 1);
  CHECK_FALSE(is_admissible_cgn(0, 2, 0, 0, 0, 0));
  CHECK(cgn_value(1, 1, 0, 0, 0, 1) == 12);
}

TEST_CASE("sequence parsing") {
  CHECK(Sequence::parse("-, -i, i, 0, 1").to_string() == "-1,-i,i,0,1");
  CHECK_THROWS_AS(Sequence::parse("1,2"), Error);
  CHECK_THROWS_AS(Sequence::parse(""), Error);
}

}

#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>

#include "sodforge/nonexistence.hpp"

using namespace sodforge;

namespace {

struct OCell {
  int var = -1;
  GroupElement g;
};
using ORow = std::vector<OCell>;

bool orth(const GroupPresentation& grp, const ORow& a, const ORow& b) {
  std::map<std::tuple<std::uint32_t, int, int>, int> acc;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].var < 0 || b[c].var < 0) continue;
    const GroupElement p = grp.multiply(a[c].g, grp.conjugate(b[c].g));
    acc[{p.mask, std::min(a[c].var, b[c].var), std::max(a[c].var, b[c].var)}] += p.sign;
  }
  for (const auto& [k, v] : acc)
    if (v != 0) return false;
  return true;
}

// Existence of an SOD(n; type) by unnormalized row-by-row search: rows are
// any vectors whose Gram diagonal equals the type, taken in increasing order.
bool exists_oracle(std::size_t n, const std::vector<std::int64_t>& type, const GroupPresentation& grp) {
  const auto elems = grp.enumerate();
  const int k = static_cast<int>(type.size());
  std::vector<ORow> rows;
  ORow cur(n);
  std::function<void(std::size_t)> gen = [&](std::size_t c) {
    if (c == n) {
      std::vector<std::int64_t> count(type.size(), 0);
      for (const auto& x : cur)
        if (x.var >= 0) ++count[static_cast<std::size_t>(x.var)];
      if (count == type) rows.push_back(cur);
      return;
    }
    cur[c] = {};
    gen(c + 1);
    for (int v = 0; v < k; ++v)
      for (const auto& g : elems) {
        cur[c] = {v, g};
        gen(c + 1);
      }
  };
  gen(0);
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
    if (chosen.size() == n) return true;
    for (std::size_t i = from; i < rows.size(); ++i) {
      bool ok = true;
      for (std::size_t j : chosen) ok = ok && orth(grp, rows[i], rows[j]);
      if (!ok) continue;
      chosen.push_back(i);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(0);
}

}  // namespace

TEST_SUITE("nonexistence") {

TEST_CASE("no SW(6, 3) over S_R or S_C") {
  const auto r = search_sw(6, 3, GroupPresentation::real());
  CHECK_FALSE(r.found);
  CHECK(r.nodes > 0);
  const auto c = search_sw(6, 3, GroupPresentation::complex());
  CHECK_FALSE(c.found);
  SearchOptions q;
  q.allow_large_groups = true;
  CHECK_FALSE(search_sw(6, 3, GroupPresentation::quaternion(), q).found);
}

TEST_CASE("no full SH of odd order over S_R") {
  for (std::size_t n : {3, 5, 7}) CHECK_FALSE(search_full_sh(n, GroupPresentation::real()).found);
  const auto two = search_full_sh(2, GroupPresentation::real());
  REQUIRE(two.found);
  CHECK(verify_sod(*two.witness));
  CHECK(two.witness->at(1, 1).element().sign == -1);
}

TEST_CASE("SOD(6; 2,2,2) and SOD(6; 3,3) do not exist over S_R") {
  CHECK_FALSE(search_sod(6, {2, 2, 2}, GroupPresentation::real()).found);
  CHECK_FALSE(search_sod(6, {3, 3}, GroupPresentation::real()).found);
  CHECK_FALSE(search_sod(6, {3, 3}, GroupPresentation::complex()).found);
}

TEST_CASE("witnesses are verified designs") {
  const auto h4 = search_sw(4, 4, GroupPresentation::real());
  REQUIRE(h4.found);
  CHECK(verify_sod(*h4.witness, {true, 1}));
  SearchOptions q;
  q.allow_large_groups = true;
  const auto quat = search_sod(4, {1, 1, 2}, GroupPresentation::quaternion(), q);
  REQUIRE(quat.found);
  CHECK(quat.witness->group().name() == "SQ");
  CHECK(verify_sod(*quat.witness, {true, 1}));
  const auto real = search_sod(4, {1, 1, 2}, GroupPresentation::real());
  REQUIRE(real.found);
  CHECK(verify_sod(*real.witness, {true, 1}));
}

TEST_CASE("agreement with an unnormalized search") {
  const auto sr = GroupPresentation::real(), sc = GroupPresentation::complex();
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t w = 1; w <= n; ++w) {
      CAPTURE(n);
      CAPTURE(w);
      CHECK(search_sw(n, w, sr).found == exists_oracle(n, {static_cast<std::int64_t>(w)}, sr));
      if (n <= 4) CHECK(search_sw(n, w, sc).found == exists_oracle(n, {static_cast<std::int64_t>(w)}, sc));
    }
  for (const auto& t : std::vector<std::vector<std::int64_t>>{{1, 1}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}, {1, 3}, {1, 2}, {1, 1, 1}}) {
    CAPTURE(t.size());
    CHECK(search_sod(4, t, sr).found == exists_oracle(4, t, sr));
  }
  CHECK(search_sod(3, {1, 1}, sc).found == exists_oracle(3, {1, 1}, sc));
  CHECK(search_sod(3, {1, 2}, sc).found == exists_oracle(3, {1, 2}, sc));
}

TEST_CASE("node counts are reproducible and independent of the worker count") {
  const auto a = search_sw(6, 3, GroupPresentation::complex());
  const auto b = search_sw(6, 3, GroupPresentation::complex());
  SearchOptions two;
  two.jobs = 2;
  const auto c = search_sw(6, 3, GroupPresentation::complex(), two);
  CHECK(a.nodes == b.nodes);
  CHECK(a.nodes == c.nodes);
  CHECK(report_json(a, false) == report_json(c, false));
  const auto d = search_sod(4, {1, 1, 2}, GroupPresentation::quaternion(), {0, 1, true});
  const auto e = search_sod(4, {1, 1, 2}, GroupPresentation::quaternion(), {0, 3, true});
  CHECK(d.nodes == e.nodes);
  CHECK(*d.witness == *e.witness);
}

TEST_CASE("SOD(6; 3,3) nonexistence agrees with SW(6, 3)") {
  for (const auto& g : {GroupPresentation::real(), GroupPresentation::complex()})
    CHECK(search_sod(6, {3, 3}, g).found == search_sw(6, 3, g).found);
}

TEST_CASE("budgets and argument checks") {
  SearchOptions tiny;
  tiny.node_budget = 5;
  CHECK_THROWS_AS(search_sw(6, 3, GroupPresentation::complex(), tiny), BudgetExceeded);
  CHECK_THROWS_AS(search_sw(6, 3, GroupPresentation::quaternion()), BudgetExceeded);
  CHECK_THROWS_AS(search_sw(9, 3, GroupPresentation::real()), Error);
  CHECK_THROWS_AS(search_sod(4, {3, 3}, GroupPresentation::real()), Error);
  setenv("SODFORGE_BUDGET", "3", 1);
  CHECK(default_search_budget() == 3);
  CHECK_THROWS_AS(search_sw(6, 3, GroupPresentation::complex()), BudgetExceeded);
  unsetenv("SODFORGE_BUDGET");
}

TEST_CASE("report JSON") {
  const auto r = search_sw(6, 3, GroupPresentation::real());
  const std::string j = report_json(r, false);
  CHECK(j.find("\"result\":\"none\"") != std::string::npos);
  CHECK(j.find("\"nodes\":") != std::string::npos);
  CHECK(j.find("elapsed") == std::string::npos);
  CHECK(report_json(r).find("elapsed") != std::string::npos);
}

}

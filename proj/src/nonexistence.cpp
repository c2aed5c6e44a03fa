#include "sodforge/nonexistence.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>

#include <json.hpp>

#include "sodforge/design_io.hpp"
#include "sodforge/parallel.hpp"

namespace sodforge {

namespace {

constexpr const char* kNormalization =
    "row 0 = (x_1^(u_1), ..., x_k^(u_k), 0, ...) by column permutation and right scaling; "
    "rows 1..n-1 left-scaled to a leading coefficient of 1 and strictly increasing in candidate order";

struct Cell {
  std::int16_t var = -1;  // -1 = zero
  std::uint16_t elem = 0;
};
using Row = std::vector<Cell>;

class Searcher {
 public:
  Searcher(std::size_t n, std::vector<std::int64_t> type, GroupPresentation group, const SearchOptions& options)
      : n_(n), type_(std::move(type)), group_(std::move(group)), options_(options) {
    elements_ = group_.enumerate();
    const std::size_t e = elements_.size();
    times_conj_.assign(e * e, 0);
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t b = 0; b < e; ++b) {
        const GroupElement p = group_.multiply(elements_[a], group_.conjugate(elements_[b]));
        times_conj_[a * e + b] = index_of(p);
      }
    budget_ = options_.node_budget ? options_.node_budget : default_search_budget();
    build_row0();
    build_candidates();
    build_compat();
  }

  SearchReport run() {
    SearchReport rep;
    rep.n = n_;
    rep.type = type_;
    rep.group = group_.name();
    rep.candidates = cands_.size();
    rep.normalization = kNormalization;

    if (n_ == 1) {
      rep.nodes = 0;
      finish(rep, {});
      return rep;
    }
    // Partition on the choice of row 1.
    const std::size_t parts = cands_.size();
    std::vector<std::uint64_t> nodes(parts, 0);
    std::vector<std::optional<std::vector<std::size_t>>> found(parts);
    std::atomic<std::uint64_t> total{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    parallel_for(parts, options_.jobs, [&](unsigned, std::size_t p) {
      if (!test(base_, p)) return;
      try {
      std::vector<std::size_t> chosen{p};
      std::vector<std::uint64_t> avail(words_);
      for (std::size_t w = 0; w < words_; ++w) avail[w] = base_[w] & compat_[p * words_ + w];
      std::uint64_t local = 1;
      if (dfs(chosen, avail, local, total)) found[p] = chosen;
      nodes[p] = local;
      total += local;
      if (total > budget_) throw BudgetExceeded("search exceeded its node budget of " + std::to_string(budget_));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
    if (error) std::rethrow_exception(error);
    for (std::size_t p = 0; p < parts; ++p) {
      rep.nodes += nodes[p];
      if (found[p]) {
        finish(rep, *found[p]);
        return rep;
      }
    }
    finish(rep, {});
    return rep;
  }

 private:
  std::uint16_t index_of(const GroupElement& g) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == g) return static_cast<std::uint16_t>(i);
    throw Error("element outside the enumerated group");
  }

  void build_row0() {
    row0_.assign(n_, Cell{});
    std::size_t c = 0;
    for (std::size_t v = 0; v < type_.size(); ++v)
      for (std::int64_t t = 0; t < type_[v]; ++t) row0_[c++] = {static_cast<std::int16_t>(v), index_of(GroupElement::identity())};
  }

  void build_candidates() {
    std::vector<int> pattern;
    for (std::size_t v = 0; v < type_.size(); ++v) pattern.insert(pattern.end(), static_cast<std::size_t>(type_[v]), static_cast<int>(v));
    pattern.insert(pattern.begin(), n_ - pattern.size(), -1);
    std::sort(pattern.begin(), pattern.end());
    const std::size_t weight = n_ - static_cast<std::size_t>(std::count(pattern.begin(), pattern.end(), -1));
    const std::size_t e = elements_.size();
    do {
      std::vector<std::size_t> nz;
      for (std::size_t c = 0; c < n_; ++c)
        if (pattern[c] >= 0) nz.push_back(c);
      std::size_t combos = 1;
      for (std::size_t i = 1; i < weight; ++i) {
        combos *= e;
        if (combos > options_.max_candidates) throw BudgetExceeded("too many row candidates");
      }
      for (std::size_t code = 0; code < combos; ++code) {
        Row row(n_);
        std::size_t rest = code;
        for (std::size_t i = 0; i < nz.size(); ++i) {
          std::uint16_t elem = 0;
          if (i > 0) {
            elem = static_cast<std::uint16_t>(rest % e);
            rest /= e;
          }
          row[nz[i]] = {static_cast<std::int16_t>(pattern[nz[i]]), elem};
        }
        cands_.push_back(std::move(row));
        if (cands_.size() > options_.max_candidates) throw BudgetExceeded("too many row candidates");
      }
    } while (std::next_permutation(pattern.begin(), pattern.end()));
  }

  bool orthogonal(const Row& a, const Row& b) const {
    // Accumulate coefficients of (element mask, variable pair); signs add.
    const std::size_t e = elements_.size();
    const std::size_t k = type_.size();
    thread_local std::vector<int> acc;
    thread_local std::vector<std::size_t> touched;
    acc.assign(e * k * k, 0);
    touched.clear();
    for (std::size_t c = 0; c < n_; ++c) {
      if (a[c].var < 0 || b[c].var < 0) continue;
      const GroupElement& g = elements_[times_conj_[a[c].elem * e + b[c].elem]];
      const std::size_t lo = static_cast<std::size_t>(std::min(a[c].var, b[c].var));
      const std::size_t hi = static_cast<std::size_t>(std::max(a[c].var, b[c].var));
      const std::size_t slot = (g.mask * k + lo) * k + hi;
      acc[slot] += g.sign;
      touched.push_back(slot);
    }
    for (std::size_t s : touched)
      if (acc[s] != 0) return false;
    return true;
  }

  void build_compat() {
    const std::size_t c = cands_.size();
    words_ = (c + 63) / 64;
    base_.assign(words_, 0);
    compat_.assign(c * words_, 0);
    for (std::size_t i = 0; i < c; ++i)
      if (orthogonal(row0_, cands_[i])) base_[i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t i = 0; i < c; ++i) {
      if (!test(base_, i)) continue;
      for (std::size_t j = i + 1; j < c; ++j) {
        if (!test(base_, j) || !orthogonal(cands_[i], cands_[j])) continue;
        compat_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        compat_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  static bool test(const std::vector<std::uint64_t>& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1U; }

  std::size_t count_above(const std::vector<std::uint64_t>& avail, std::size_t last) const {
    std::size_t w = (last + 1) / 64;
    if (w >= words_) return 0;
    std::size_t count = static_cast<std::size_t>(std::popcount(avail[w] & (~std::uint64_t{0} << ((last + 1) % 64))));
    for (++w; w < words_; ++w) count += static_cast<std::size_t>(std::popcount(avail[w]));
    return count;
  }

  bool dfs(std::vector<std::size_t>& chosen, const std::vector<std::uint64_t>& avail, std::uint64_t& nodes,
           const std::atomic<std::uint64_t>& total) {
    const std::size_t need = n_ - 1 - chosen.size();
    if (need == 0) return true;
    const std::size_t last = chosen.back();
    if (count_above(avail, last) < need) return false;
    std::vector<std::uint64_t> next(words_);
    for (std::size_t i = last + 1; i < cands_.size(); ++i) {
      if (!test(avail, i)) continue;
      if (++nodes + total.load(std::memory_order_relaxed) > budget_)
        throw BudgetExceeded("search exceeded its node budget of " + std::to_string(budget_));
      for (std::size_t w = 0; w < words_; ++w) next[w] = avail[w] & compat_[i * words_ + w];
      chosen.push_back(i);
      if (dfs(chosen, next, nodes, total)) return true;
      chosen.pop_back();
    }
    return false;
  }

  void finish(SearchReport& rep, const std::vector<std::size_t>& chosen) {
    if (chosen.empty() && n_ > 1) return;
    DesignMatrix x(n_, group_, type_);
    auto put = [&](std::size_t r, const Row& row) {
      for (std::size_t c = 0; c < n_; ++c)
        if (row[c].var >= 0) x.set(r, c, elements_[row[c].elem], static_cast<VarIndex>(row[c].var));
    };
    put(0, row0_);
    for (std::size_t r = 0; r < chosen.size(); ++r) put(r + 1, cands_[chosen[r]]);
    if (!verify_sod(x, {true, 1})) throw Error("search produced a witness that fails verification");
    rep.found = true;
    rep.witness = std::move(x);
  }

  std::size_t n_;
  std::vector<std::int64_t> type_;
  GroupPresentation group_;
  SearchOptions options_;
  std::uint64_t budget_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<std::uint16_t> times_conj_;
  Row row0_;
  std::vector<Row> cands_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> base_, compat_;
};

}  // namespace

std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("SODFORGE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw Error("SODFORGE_BUDGET must be a positive integer");
  }
  return 10'000'000'000ULL;
}

SearchReport search_sod(std::size_t n, const std::vector<std::int64_t>& type, const GroupPresentation& group,
                        const SearchOptions& options) {
  if (n == 0 || n > 8) throw Error("search: n must lie in [1, 8]");
  if (type.empty()) throw Error("search: empty type");
  std::int64_t sum = 0;
  for (auto u : type) {
    if (u <= 0) throw Error("search: type entries must be positive");
    sum += u;
  }
  if (sum > static_cast<std::int64_t>(n)) throw Error("search: the type sum exceeds n");
  if (group.generator_count() > 3) throw Error("search: groups with more than three generators are not supported");
  if (group.generator_count() > 1 && !options.allow_large_groups)
    throw BudgetExceeded("search over " + group.name() + " needs the large-group flag");
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep = Searcher(n, type, group, options).run();
  rep.kind = "sod";
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SearchReport search_sw(std::size_t n, std::size_t w, const GroupPresentation& group, const SearchOptions& options) {
  if (w == 0) throw Error("search: weight must be positive");
  SearchReport rep = search_sod(n, {static_cast<std::int64_t>(w)}, group, options);
  rep.kind = "sw";
  return rep;
}

SearchReport search_full_sh(std::size_t n, const GroupPresentation& group, const SearchOptions& options) {
  SearchReport rep = search_sw(n, n, group, options);
  rep.kind = "sh";
  return rep;
}

std::string report_json(const SearchReport& rep, bool include_elapsed) {
  nlohmann::ordered_json j;
  j["result"] = rep.found ? "found" : "none";
  j["kind"] = rep.kind;
  j["n"] = rep.n;
  j["type"] = rep.type;
  j["group"] = rep.group;
  j["nodes"] = rep.nodes;
  j["candidates"] = rep.candidates;
  if (include_elapsed) j["elapsed"] = rep.elapsed_seconds;
  j["normalization"] = rep.normalization;
  j["scope"] = "exhaustive over the named group only";
  if (rep.witness) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < rep.witness->order(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& e : rep.witness->row(r)) row.push_back(format_entry(rep.witness->group(), e));
      rows.push_back(row);
    }
    j["witness"] = rows;
  }
  return j.dump();
}

}  // namespace sodforge

#include "sodforge/design.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <random>

#include "sodforge/parallel.hpp"

namespace sodforge {

Entry Entry::term(const GroupElement& g, VarIndex var) {
  if (var > VarMonomial::kMaxVar) throw Error("variable index out of range");
  if (g.sign != 1 && g.sign != -1) throw Error("entry sign must be +-1");
  Entry e;
  e.mask_ = g.mask;
  e.var_ = static_cast<std::uint16_t>(var);
  e.sign_ = static_cast<std::int8_t>(g.sign);
  return e;
}

DesignMatrix::DesignMatrix(std::size_t order, GroupPresentation group, std::vector<std::int64_t> type)
    : order_(order), group_(std::move(group)), entries_(order * order) {
  set_type(std::move(type));
}

void DesignMatrix::set_type(std::vector<std::int64_t> type) {
  for (auto u : type)
    if (u <= 0) throw Error("type entries must be positive integers");
  if (type.size() > std::size_t{VarMonomial::kMaxVar} + 1) throw Error("too many variables");
  for (const Entry& e : entries_)
    if (!e.is_zero() && e.var() >= type.size())
      throw Error("type vector does not cover every variable in use");
  type_ = std::move(type);
}

void DesignMatrix::set(std::size_t r, std::size_t c, Entry e) {
  if (r >= order_ || c >= order_) throw Error("design entry index out of range");
  if (!e.is_zero()) {
    if (e.var() >= type_.size())
      throw Error("variable x" + std::to_string(e.var() + 1) + " exceeds the variable count");
    if (!group_.contains(e.element())) throw Error("entry element not in group " + group_.name());
  }
  entries_[r * order_ + c] = e;
}

void DesignMatrix::set(std::size_t r, std::size_t c, const GroupElement& g, VarIndex var) {
  set(r, c, Entry::term(g, var));
}

std::size_t DesignMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const Entry& e : entries_) n += !e.is_zero();
  return n;
}

DesignMatrix conj_transpose(const DesignMatrix& x) {
  DesignMatrix out(x.order(), x.group(), x.type());
  for (std::size_t r = 0; r < x.order(); ++r)
    for (std::size_t c = 0; c < x.order(); ++c) {
      const Entry& e = x.at(c, r);
      if (!e.is_zero()) out.set(r, c, x.group().conjugate(e.element()), e.var());
    }
  return out;
}

RingElement gram_entry(const DesignMatrix& x, std::size_t a, std::size_t b) {
  const GroupPresentation& group = x.group();
  std::vector<RingElement::Term> terms;
  terms.reserve(x.order());
  const auto row_a = x.row(a), row_b = x.row(b);
  for (std::size_t c = 0; c < x.order(); ++c) {
    const Entry& ea = row_a[c];
    const Entry& eb = row_b[c];
    if (ea.is_zero() || eb.is_zero()) continue;
    const GroupElement g = group.multiply(ea.element(), group.conjugate(eb.element()));
    terms.push_back({RingElement::make_key(g.mask, VarMonomial::of(ea.var(), eb.var())), g.sign});
  }
  return RingElement::from_terms(std::move(terms));
}

RingMatrix gram(const DesignMatrix& x, unsigned jobs) {
  RingMatrix out{x.order(), std::vector<RingElement>(x.order() * x.order())};
  parallel_for(x.order(), jobs, [&](unsigned, std::size_t a) {
    for (std::size_t b = 0; b < x.order(); ++b) out.entries[a * x.order() + b] = gram_entry(x, a, b);
  });
  return out;
}

RingElement diagonal_form(const std::vector<std::int64_t>& type) {
  std::vector<RingElement::Term> terms;
  for (VarIndex v = 0; v < type.size(); ++v)
    terms.push_back({RingElement::make_key(0, VarMonomial::of(v, v)), type[v]});
  return RingElement::from_terms(std::move(terms));
}

namespace {

// Gram entries are Hermitian, (XX*)_{ba} = conj((XX*)_{ab}), so the upper
// triangle decides the whole identity.
std::optional<VerifyFailure> first_failure(const DesignMatrix& x, unsigned jobs) {
  const RingElement expected = diagonal_form(x.type());
  const std::size_t n = x.order();
  std::atomic<std::size_t> first_bad_row{std::numeric_limits<std::size_t>::max()};
  std::mutex mu;
  std::optional<VerifyFailure> best;
  parallel_for(n, jobs, [&](unsigned, std::size_t a) {
    if (a > first_bad_row.load(std::memory_order_relaxed)) return;
    for (std::size_t b = a; b < n; ++b) {
      RingElement g = gram_entry(x, a, b);
      const bool good = (a == b) ? g == expected : g.is_zero();
      if (good) continue;
      if (a == b) g -= expected;
      std::lock_guard lock(mu);
      if (!best || std::pair(a, b) < std::pair(best->row, best->col))
        best = VerifyFailure{a, b, std::move(g), false};
      std::size_t cur = first_bad_row.load();
      while (a < cur && !first_bad_row.compare_exchange_weak(cur, a)) {
      }
      return;
    }
  });
  return best;
}

}  // namespace

VerifyResult verify_sod(const DesignMatrix& x, const VerifyOptions& options) {
  if (auto f = first_failure(x, options.jobs)) return {false, std::move(f)};
  if (options.both_sides) {
    if (auto f = first_failure(conj_transpose(x), options.jobs)) {
      f->transposed_side = true;
      return {false, std::move(f)};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Randomized verification modulo a prime.

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
  for (std::uint64_t c = 2; c < p; ++c)
    if (pow_mod(c, (p - 1) / 2, p) == p - 1) return pow_mod(c, (p - 1) / 4, p);
  throw Error("no square root of -1 modulo " + std::to_string(p));
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, p);
      if (x == p - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t default_prime(const GroupPresentation& group) {
  // 2^31 - 1 is 3 mod 4; the S_C default is the largest prime below it that is 1 mod 4.
  return group == GroupPresentation::complex() ? 2147483629ULL : 2147483647ULL;
}

RandomizedResult verify_scalar_randomized(const DesignMatrix& x, const RandomizedOptions& options) {
  const bool complex = x.group() == GroupPresentation::complex();
  if (!complex && !(x.group() == GroupPresentation::real()))
    throw Error("randomized verification needs a design over SR or SC, got " + x.group().name());
  const std::uint64_t p = options.prime ? options.prime : default_prime(x.group());
  if (p < 3 || p >= (1ULL << 32) || !is_prime(p))
    throw Error("randomized verification needs an odd prime below 2^32, got " + std::to_string(p));
  if (complex && p % 4 != 1) throw Error("designs over SC need a prime congruent to 1 mod 4");
  const std::uint64_t iota = complex ? sqrt_minus_one(p) : 0;

  const std::size_t n = x.order();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> residue(0, p - 1);
  RandomizedResult result;
  result.prime = p;

  std::vector<std::uint64_t> point(x.var_count());
  auto value = [&](const Entry& e, bool conj) -> std::uint64_t {
    if (e.is_zero()) return 0;
    std::uint64_t v = point[e.var()];
    if (e.element().mask) v = mul_mod(v, conj ? p - iota : iota, p);
    return (e.element().sign < 0 && v) ? p - v : v;
  };

  for (unsigned trial = 0; trial < options.trials; ++trial) {
    for (auto& a : point) a = residue(rng);
    std::uint64_t diag = 0;
    for (VarIndex v = 0; v < point.size(); ++v)
      diag = (diag + mul_mod(static_cast<std::uint64_t>(x.type()[v]) % p, mul_mod(point[v], point[v], p), p)) % p;

    bool ok = true;
    if (n <= options.dense_limit) {
      std::vector<std::uint64_t> m(n * n), mc(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          m[r * n + c] = value(x.at(r, c), false);
          mc[r * n + c] = value(x.at(r, c), true);
        }
      for (std::size_t r = 0; r < n && ok; ++r)
        for (std::size_t s = 0; s < n && ok; ++s) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < n; ++c) acc = (acc + m[r * n + c] * mc[s * n + c]) % p;
          ok = acc == (r == s ? diag : 0);
        }
    } else {
      // Freivalds: compare M (conj(M)^T w) with diag * w for random w.
      for (int probe = 0; probe < 2 && ok; ++probe) {
        std::vector<std::uint64_t> w(n), u(n, 0);
        for (auto& wi : w) wi = residue(rng);
        for (std::size_t r = 0; r < n; ++r) {
          const auto row = x.row(r);
          for (std::size_t c = 0; c < n; ++c) u[c] = (u[c] + value(row[c], true) * w[r]) % p;
        }
        for (std::size_t r = 0; r < n && ok; ++r) {
          const auto row = x.row(r);
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < n; ++c) acc = (acc + value(row[c], false) * u[c]) % p;
          ok = acc == mul_mod(diag, w[r], p);
        }
      }
    }
    ++result.trials_run;
    if (!ok) {
      result.ok = false;
      result.failed_trial = trial;
      return result;
    }
  }
  return result;
}

DesignMatrix equate_variables(const DesignMatrix& x, const std::vector<std::vector<VarIndex>>& blocks) {
  std::vector<VarIndex> target(x.var_count(), static_cast<VarIndex>(-1));
  std::vector<std::int64_t> type(blocks.size(), 0);
  for (VarIndex b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("equate_variables: empty block");
    for (VarIndex v : blocks[b]) {
      if (v >= x.var_count()) throw Error("equate_variables: variable out of range");
      if (target[v] != static_cast<VarIndex>(-1)) throw Error("equate_variables: blocks overlap");
      target[v] = b;
      type[b] += x.type()[v];
    }
  }
  for (VarIndex t : target)
    if (t == static_cast<VarIndex>(-1)) throw Error("equate_variables: blocks do not cover every variable");
  DesignMatrix out(x.order(), x.group(), std::move(type));
  for (std::size_t r = 0; r < x.order(); ++r)
    for (std::size_t c = 0; c < x.order(); ++c) {
      const Entry& e = x.at(r, c);
      if (!e.is_zero()) out.set(r, c, e.element(), target[e.var()]);
    }
  return out;
}

DesignMatrix apply_equivalence(const DesignMatrix& x, std::span<const std::size_t> row_perm,
                               std::span<const std::size_t> col_perm,
                               std::span<const GroupElement> row_scale,
                               std::span<const GroupElement> col_scale) {
  const std::size_t n = x.order();
  auto check_perm = [n](std::span<const std::size_t> perm) {
    if (perm.empty()) return;
    if (perm.size() != n) throw Error("equivalence: permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (auto i : perm) {
      if (i >= n || seen[i]) throw Error("equivalence: not a permutation");
      seen[i] = true;
    }
  };
  check_perm(row_perm);
  check_perm(col_perm);
  if ((!row_scale.empty() && row_scale.size() != n) || (!col_scale.empty() && col_scale.size() != n))
    throw Error("equivalence: scale vector has wrong length");

  const GroupPresentation& group = x.group();
  DesignMatrix out(n, group, x.type());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Entry& e = x.at(row_perm.empty() ? r : row_perm[r], col_perm.empty() ? c : col_perm[c]);
      if (e.is_zero()) continue;
      GroupElement g = e.element();
      if (!row_scale.empty()) g = group.multiply(row_scale[r], g);
      if (!col_scale.empty()) g = group.multiply(g, col_scale[c]);
      out.set(r, c, g, e.var());
    }
  return out;
}

}  // namespace sodforge

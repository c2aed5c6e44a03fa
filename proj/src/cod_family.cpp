#include "sodforge/cod_family.hpp"

#include <ostream>

#include <json.hpp>

#include "sodforge/constructions.hpp"
#include "sodforge/design_io.hpp"
#include "sodforge/remrep.hpp"

namespace sodforge {

namespace {

const GroupPresentation& sc() {
  static const GroupPresentation g = GroupPresentation::complex();
  return g;
}

RingElement entry_to_ring(const SeqEntry& e) {
  if (e.is_zero()) return {};
  const VarMonomial m = e.var >= 0 ? VarMonomial::of(static_cast<VarIndex>(e.var)) : VarMonomial{};
  return RingElement::term(unit_element(e.power), m);
}

SeqEntry ring_to_entry(const RingElement& x) {
  if (x.is_zero()) return SeqEntry::zero();
  if (x.terms().size() != 1) throw Error("circulant entry is not a single unit term");
  const auto& t = x.terms().front();
  const VarMonomial m = t.monomial();
  if ((t.coeff != 1 && t.coeff != -1) || m.degree() > 1) throw Error("circulant entry is not a unit times a variable");
  const int power = static_cast<int>(t.mask()) + (t.coeff < 0 ? 2 : 0);
  return SeqEntry::unit(power, m.degree() == 1 ? static_cast<std::int32_t>(m.first()) : -1);
}

RingElement halve(const RingElement& x) {
  std::vector<RingElement::Term> terms = x.terms();
  for (auto& t : terms) {
    if (t.coeff % 2 != 0) throw Error("hermitian_split: G + G* has an odd coefficient");
    t.coeff /= 2;
  }
  return RingElement::from_terms(std::move(terms));
}

RingElement times_i(const RingElement& x) {
  return multiply(sc(), RingElement::term(unit_element(1), VarMonomial{}), x);
}

CirculantRow combine(const CirculantRow& a, const CirculantRow& b, int sign) {
  std::vector<SeqEntry> out(a.length());
  for (std::size_t k = 0; k < a.length(); ++k) {
    RingElement v = entry_to_ring(a[k]);
    v += sign * entry_to_ring(b[k]);
    out[k] = ring_to_entry(v);
  }
  return CirculantRow(std::move(out));
}

std::string var_name(const std::vector<std::string>& names, std::int32_t v) {
  if (static_cast<std::size_t>(v) < names.size()) return names[static_cast<std::size_t>(v)];
  return "x" + std::to_string(v - 1);
}

}  // namespace

CirculantRow CirculantRow::star() const {
  const std::size_t m = length();
  std::vector<SeqEntry> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = entries_[(m - k) % m].conj();
  return CirculantRow(std::move(out));
}

CirculantRow CirculantRow::negated() const {
  std::vector<SeqEntry> out = entries_;
  for (auto& e : out) e = e.times_unit(2);
  return CirculantRow(std::move(out));
}

std::vector<std::string> CirculantRow::tokens(const std::vector<std::string>& names) const {
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  static constexpr const char* kBare[4] = {"1", "i", "-1", "-i"};
  const std::vector<std::string> use = names.empty() ? cod_variable_names(1) : names;
  std::vector<std::string> out;
  out.reserve(length());
  for (const auto& e : entries_) {
    if (e.is_zero()) out.emplace_back("0");
    else if (e.var < 0) out.emplace_back(kBare[e.power]);
    else out.push_back(kPrefix[e.power] + var_name(use, e.var));
  }
  return out;
}

CirculantRow CirculantRow::parse_tokens(const std::vector<std::string>& tokens,
                                        const std::vector<std::string>& names) {
  std::vector<SeqEntry> out;
  out.reserve(tokens.size());
  for (std::string_view tok : tokens) {
    if (tok == "0") {
      out.push_back(SeqEntry::zero());
      continue;
    }
    int power = 0;
    if (!tok.empty() && tok.front() == '-') power += 2, tok.remove_prefix(1);
    if (!tok.empty() && tok.front() == 'i') power += 1, tok.remove_prefix(1);
    if (tok.empty() || tok == "1") {
      out.push_back(SeqEntry::unit(power));
      continue;
    }
    std::int32_t var = -1;
    for (std::size_t v = 0; v < names.size(); ++v)
      if (names[v] == tok) var = static_cast<std::int32_t>(v);
    if (var < 0) throw Error("unknown variable in circulant token '" + std::string(tok) + "'");
    out.push_back(SeqEntry::unit(power, var));
  }
  return CirculantRow(std::move(out));
}

RingCirculant& RingCirculant::operator+=(const RingCirculant& other) {
  if (entries.empty()) entries.resize(other.length());
  if (other.length() != length()) throw Error("circulant lengths differ");
  for (std::size_t k = 0; k < length(); ++k) entries[k] += other.entries[k];
  return *this;
}

RingCirculant to_ring(const CirculantRow& row) {
  RingCirculant out;
  out.entries.reserve(row.length());
  for (const auto& e : row.entries()) out.entries.push_back(entry_to_ring(e));
  return out;
}

RingCirculant star(const RingCirculant& a) {
  const std::size_t m = a.length();
  RingCirculant out;
  out.entries.resize(m);
  for (std::size_t k = 0; k < m; ++k) out.entries[k] = conjugate(sc(), a.entries[(m - k) % m]);
  return out;
}

RingCirculant circulant_product(const RingCirculant& a, const RingCirculant& b) {
  const std::size_t m = a.length();
  if (b.length() != m) throw Error("circulant lengths differ");
  std::vector<std::vector<RingElement::Term>> acc(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.entries[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.entries[j].is_zero()) continue;
      const RingElement p = multiply(sc(), a.entries[i], b.entries[j]);
      auto& slot = acc[(i + j) % m];
      slot.insert(slot.end(), p.terms().begin(), p.terms().end());
    }
  }
  RingCirculant out;
  out.entries.reserve(m);
  for (auto& terms : acc) out.entries.push_back(RingElement::from_terms(std::move(terms)));
  return out;
}

bool is_scalar_circulant(const RingCirculant& a, const RingElement& form) {
  if (a.entries.empty() || !(a.entries[0] == form)) return false;
  for (std::size_t k = 1; k < a.length(); ++k)
    if (!a.entries[k].is_zero()) return false;
  return true;
}

std::vector<std::string> cod_variable_names(std::size_t x_count) {
  std::vector<std::string> names{"y", "z"};
  if (x_count == 1) {
    names.emplace_back("x");
  } else {
    for (std::size_t j = 1; j <= x_count; ++j) names.push_back("x" + std::to_string(j));
  }
  return names;
}

std::size_t CodInputs::m() const {
  std::size_t m = r() + 1;
  for (const auto& p : cd) m += 2 * p.length();
  return m;
}

std::vector<std::size_t> CodInputs::k() const {
  std::vector<std::size_t> out;
  for (const auto& p : cd) out.push_back(p.length());
  return out;
}

void CodInputs::validate() const {
  if (n < 3 || n > 12) throw Error("n must lie in [3, 12]");
  const std::size_t want = (std::size_t{1} << (n - 3)) - 1;
  if (cd.size() != want)
    throw Error("expected " + std::to_string(want) + " complex Golay pairs, got " + std::to_string(cd.size()));
  if (ab.alphabet != Alphabet::Real || !ab.valid()) throw Error("(A;B) is not a real Golay pair");
  for (const auto& p : cd)
    if (!p.valid()) throw Error("a (C;D) input is not a complex Golay pair");
}

CodInputs cod_inputs_from_catalog(unsigned n, std::size_t r, const std::vector<std::size_t>& k) {
  CodInputs in;
  in.n = n;
  auto ab = find_golay_pair(r, Alphabet::Real);
  if (!ab) throw Error("no Golay pair of length " + std::to_string(r) + " is reachable from the catalog");
  in.ab = *ab;
  for (std::size_t len : k) {
    auto cd = find_golay_pair(len, Alphabet::Complex);
    if (!cd) throw Error("no complex Golay pair of length " + std::to_string(len) + " is reachable from the catalog");
    in.cd.push_back(*cd);
  }
  in.validate();
  return in;
}

SymbolicArrays build_EF(const CodInputs& in) {
  in.validate();
  auto side = [&](bool first) {
    const Sequence y = Sequence({SeqEntry::unit(0, 0)});
    std::vector<Sequence> segs{y};
    for (std::size_t j = 0; j < in.cd.size(); ++j)
      segs.push_back((first ? in.cd[j].a : in.cd[j].b).with_variable(static_cast<std::int32_t>(j + 2)));
    segs.push_back((first ? in.ab.a : in.ab.b).with_variable(1));
    for (std::size_t j = in.cd.size(); j-- > 0;)
      segs.push_back(reverse_conjugate(first ? in.cd[j].a : in.cd[j].b).with_variable(static_cast<std::int32_t>(j + 2)));
    return segs;
  };
  return {side(true), side(false), in.m()};
}

ExpandedRows expand_rows(const SymbolicArrays& arrays, const IntMatrix& h) {
  const std::size_t segments = arrays.e.size();
  if (h.rows() != segments || h.cols() != segments)
    throw Error("expand_rows: Hadamard order " + std::to_string(h.rows()) + " does not match " +
                std::to_string(segments) + " segments");
  auto expand = [&](const std::vector<Sequence>& segs) {
    std::vector<CirculantRow> rows;
    for (std::size_t j = 0; j < segments; ++j) {
      std::vector<SeqEntry> row;
      row.reserve(arrays.m);
      for (std::size_t t = 0; t < segments; ++t) {
        const Sequence s = segs[t].times_unit(h(j, t) > 0 ? 0 : 2);
        row.insert(row.end(), s.entries().begin(), s.entries().end());
      }
      rows.emplace_back(std::move(row));
    }
    return rows;
  };
  return {expand(arrays.e), expand(arrays.f)};
}

HermitianSplit hermitian_split(const CirculantRow& g) {
  const std::size_t m = g.length();
  const CirculantRow gs = g.star();
  std::vector<SeqEntry> prime(m), dprime(m);
  for (std::size_t k = 0; k < m; ++k) {
    RingElement sum = entry_to_ring(g[k]);
    sum += entry_to_ring(gs[k]);
    RingElement diff = entry_to_ring(g[k]);
    diff -= entry_to_ring(gs[k]);
    prime[k] = ring_to_entry(halve(sum));
    dprime[k] = ring_to_entry(times_i(halve(diff)));
  }
  return {CirculantRow(std::move(prime)), CirculantRow(std::move(dprime))};
}

RingCirculant ef_gram_sum(const ExpandedRows& rows) {
  RingCirculant total;
  for (const auto* side : {&rows.e, &rows.f})
    for (const auto& g : *side) {
      const RingCirculant r = to_ring(g);
      total += circulant_product(r, star(r));
    }
  return total;
}

RingElement cod_form(std::int64_t c, std::size_t r, const std::vector<std::size_t>& k) {
  RingElement out = RingElement::term(GroupElement::identity(), VarMonomial::of(0, 0), c);
  out += RingElement::term(GroupElement::identity(), VarMonomial::of(1, 1), c * static_cast<std::int64_t>(r));
  for (std::size_t j = 0; j < k.size(); ++j) {
    const auto v = static_cast<VarIndex>(j + 2);
    out += RingElement::term(GroupElement::identity(), VarMonomial::of(v, v), 2 * c * static_cast<std::int64_t>(k[j]));
  }
  return out;
}

bool verify_EF_identity(const ExpandedRows& rows, const RingElement& expected) {
  return is_scalar_circulant(ef_gram_sum(rows), expected);
}

std::vector<CirculantRow> omega_from_rows(const ExpandedRows& rows) {
  std::vector<CirculantRow> omega;
  for (const auto* side : {&rows.e, &rows.f})
    for (const auto& g : *side) {
      const HermitianSplit s = hermitian_split(g);
      omega.push_back(combine(s.prime, s.double_prime, -1));
      omega.push_back(combine(s.prime, s.double_prime, 1));
    }
  return omega;
}

std::vector<CirculantRow> omega_set(const CodInputs& in) {
  const SymbolicArrays arrays = build_EF(in);
  return omega_from_rows(expand_rows(arrays, sylvester_hadamard(in.n - 2)));
}

RingCirculant omega_sum_of_squares(const std::vector<CirculantRow>& omega) {
  RingCirculant total;
  for (const auto& w : omega) {
    const RingCirculant r = to_ring(w);
    total += circulant_product(r, r);
  }
  return total;
}

std::vector<std::int64_t> plugged_type(const DesignMatrix& od, const std::vector<CirculantRow>& omega) {
  if (od.group().generator_count() != 0) throw Error("plug_into_od: the OD must be over S_R");
  if (od.var_count() != omega.size())
    throw Error("plug_into_od: OD has " + std::to_string(od.var_count()) + " variables but Omega has " +
                std::to_string(omega.size()) + " members");
  if (omega.empty()) throw Error("plug_into_od: Omega is empty");
  const std::int64_t u = od.type().front();
  for (auto t : od.type())
    if (t != u) throw Error("plug_into_od: the OD type is not equal");
  const std::size_t m = omega.front().length();
  std::int32_t max_var = -1;
  for (const auto& w : omega) {
    if (w.length() != m) throw Error("plug_into_od: Omega members differ in length");
    if (!w.is_hermitian()) throw Error("plug_into_od: an Omega member is not Hermitian");
    for (const auto& e : w.entries()) max_var = std::max(max_var, e.var);
  }
  const RingCirculant sum = omega_sum_of_squares(omega);
  for (std::size_t k = 1; k < m; ++k)
    if (!sum.entries[k].is_zero()) throw Error("plug_into_od: sum of squares of Omega is not diagonal");
  std::vector<std::int64_t> type(static_cast<std::size_t>(max_var + 1), 0);
  for (const auto& t : sum.entries[0].terms()) {
    const VarMonomial mono = t.monomial();
    if (t.mask() != 0 || mono.degree() != 2 || mono.first() != mono.second())
      throw Error("plug_into_od: sum of squares of Omega has a cross term");
    type[mono.first()] = u * t.coeff;
  }
  for (auto t : type)
    if (t <= 0) throw Error("plug_into_od: a variable has non-positive weight");
  return type;
}

void plugged_row(const DesignMatrix& od, const std::vector<CirculantRow>& omega, std::size_t row,
                 std::vector<Entry>& out) {
  const std::size_t m = omega.front().length();
  const std::size_t block = row / m, a = row % m;
  out.assign(od.order() * m, Entry::zero());
  for (std::size_t c = 0; c < od.order(); ++c) {
    const Entry& e = od.at(block, c);
    if (e.is_zero()) continue;
    const CirculantRow& w = omega[e.var()];
    const int sign = e.element().sign;
    for (std::size_t b = 0; b < m; ++b) {
      const SeqEntry& s = w[(b + m - a) % m];
      if (s.is_zero()) continue;
      GroupElement g = unit_element(s.power);
      g.sign *= sign;
      out[c * m + b] = Entry::term(g, static_cast<VarIndex>(s.var));
    }
  }
}

DesignMatrix plug_into_od(const DesignMatrix& od, const std::vector<CirculantRow>& omega) {
  std::vector<std::int64_t> type = plugged_type(od, omega);
  const std::size_t order = od.order() * omega.front().length();
  DesignMatrix out(order, sc(), std::move(type));
  std::vector<Entry> row;
  for (std::size_t r = 0; r < order; ++r) {
    plugged_row(od, omega, r, row);
    for (std::size_t c = 0; c < order; ++c)
      if (!row[c].is_zero()) out.set(r, c, row[c]);
  }
  return out;
}

void stream_plugged(std::ostream& os, const DesignMatrix& od, const std::vector<CirculantRow>& omega) {
  const std::vector<std::int64_t> type = plugged_type(od, omega);
  const std::size_t order = od.order() * omega.front().length();
  write_design_header(os, order, sc(), type);
  std::vector<Entry> row;
  for (std::size_t r = 0; r < order; ++r) {
    plugged_row(od, omega, r, row);
    write_design_row(os, sc(), row);
  }
}

DesignMatrix cod_family_od(unsigned n) {
  return expand_sod(sod_power2(n), canonical_remrep_S(n));
}

PipelineResult cod_family_pipeline(const CodInputs& in, const PipelineOptions& options) {
  in.validate();
  if (in.n > options.max_n)
    throw BudgetExceeded("cod-family: n = " + std::to_string(in.n) + " exceeds the materializable limit " +
                         std::to_string(options.max_n));
  PipelineResult res;
  res.inputs = in;
  res.arrays = build_EF(in);
  res.rows = expand_rows(res.arrays, sylvester_hadamard(in.n - 2));
  const std::int64_t half = std::int64_t{1} << (in.n - 1);
  if (!verify_EF_identity(res.rows, cod_form(half, in.r(), in.k())))
    throw Error("cod-family: sum of E_j E_j* + F_j F_j* is not the expected diagonal form");
  res.omega = omega_from_rows(res.rows);
  res.omega_sum = omega_sum_of_squares(res.omega);
  if (!is_scalar_circulant(res.omega_sum, cod_form(2 * half, in.r(), in.k())))
    throw Error("cod-family: sum of squares of Omega is not the expected diagonal form");
  res.od = cod_family_od(in.n);
  res.q = (1U << (in.n - 1)) + in.n - 1;
  res.order = res.od.order() * in.m();
  res.type = plugged_type(res.od, res.omega);
  std::vector<std::int64_t> expected{std::int64_t{1} << res.q, (std::int64_t{1} << res.q) * static_cast<std::int64_t>(in.r())};
  for (auto kj : in.k()) expected.push_back((std::int64_t{1} << (res.q + 1)) * static_cast<std::int64_t>(kj));
  if (res.type != expected) throw Error("cod-family: substituted type differs from the family formula");
  if (res.order <= options.materialize_limit) res.cod = plug_into_od(res.od, res.omega);
  return res;
}

std::string pipeline_manifest(const PipelineResult& res) {
  using nlohmann::ordered_json;
  const auto names = cod_variable_names(res.inputs.cd.size());
  auto join = [](const std::vector<std::string>& tokens) {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) s += (i ? "," : "") + tokens[i];
    return s;
  };
  ordered_json j;
  j["family"] = "complex orthogonal design from Golay pairs";
  j["n"] = res.inputs.n;
  j["q"] = res.q;
  j["m"] = res.inputs.m();
  j["order"] = res.order;
  j["group"] = "SC";
  j["variables"] = names;
  j["type"] = res.type;
  j["golay_pair"] = {{"length", res.inputs.r()}, {"a", res.inputs.ab.a.to_string()}, {"b", res.inputs.ab.b.to_string()}};
  ordered_json pairs = ordered_json::array();
  for (const auto& p : res.inputs.cd)
    pairs.push_back({{"length", p.length()}, {"c", p.a.to_string()}, {"d", p.b.to_string()}});
  j["complex_pairs"] = pairs;
  j["hadamard"] = {{"kind", "sylvester"}, {"order", std::size_t{1} << (res.inputs.n - 2)}};
  j["od"] = {{"construction", "expand_sod(sod_power2(n), canonical S(n) remrep, Sylvester H)"},
             {"order", res.od.order()},
             {"type", res.od.type()}};
  ordered_json omega = ordered_json::array();
  for (const auto& w : res.omega) omega.push_back(join(w.tokens(names)));
  j["omega"] = omega;
  j["omega_sum_of_squares"] = res.omega_sum.entries.at(0).to_string(sc(), names);
  j["substitution"] = "block (R, C) of order m is s * circ(omega[v]) where OD entry (R, C) is s * x_v";
  return j.dump(2);
}

}  // namespace sodforge

#include <doctest.h>

#include <complex>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sodforge/cod_family.hpp"
#include "sodforge/constructions.hpp"
#include "sodforge/design_io.hpp"
#include "sodforge/remrep.hpp"

using namespace sodforge;

namespace {

using oracle::C;
using oracle::CMat;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) out.push_back(t);
  return out;
}

// The three printed first rows of the order-31 example.
const char* kE3 =
    "y,x,ix,-x,x,-x,ix,-ix,-x,ix,ix,x,-z,-z,-z,z,-z,-z,z,-z,-x,ix,ix,x,-ix,ix,x,-x,x,ix,-x";
const char* kE3Prime = "y,0,0,0,0,0,0,0,0,0,0,0,-z,0,-z,0,0,-z,0,-z,0,0,0,0,0,0,0,0,0,0,0";
const char* kE3DoublePrime =
    "0,ix,-x,-ix,ix,-ix,-x,x,-ix,-x,-x,ix,0,-iz,0,iz,-iz,0,iz,0,-ix,-x,-x,ix,x,-x,ix,-ix,ix,-x,-ix";

CodInputs order31_inputs() {
  CodInputs in;
  in.n = 4;
  in.ab = {Sequence::parse("1,1,1,-1,1,1,-1,1"), Sequence::parse("1,1,1,-1,-1,-1,1,-1"), Alphabet::Real};
  in.cd = {{Sequence::parse("1,i,-1,1,-1,i,-i,-1,i,i,1"), Sequence::parse("1,1,-i,-i,-i,1,1,i,-1,1,-1"), Alphabet::Complex}};
  return in;
}

C evaluate(const RingElement& e, const std::vector<C>& vals) {
  C s{};
  for (const auto& t : e.terms()) {
    C v = static_cast<double>(t.coeff) * (t.mask() ? C(0, 1) : C(1, 0));
    const VarMonomial m = t.monomial();
    if (m.degree() >= 1) v *= vals[m.first()];
    if (m.degree() == 2) v *= vals[m.second()];
    s += v;
  }
  return s;
}

CMat dense(const RingCirculant& a, const std::vector<C>& vals) {
  const std::size_t m = a.length();
  CMat out(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) out(r, (r + k) % m) = evaluate(a.entries[k], vals);
  return out;
}

CirculantRow random_row(std::mt19937_64& rng, std::size_t m, int vars) {
  std::vector<SeqEntry> e;
  for (std::size_t k = 0; k < m; ++k)
    e.push_back(rng() % 4 == 0 ? SeqEntry::zero() : SeqEntry::unit(static_cast<int>(rng() % 4), static_cast<std::int32_t>(rng() % vars)));
  return CirculantRow(e);
}

RingElement sq(VarIndex v, std::int64_t c) { return RingElement::term(GroupElement::identity(), VarMonomial::of(v, v), c); }

}  // namespace

TEST_SUITE("cod_family") {

TEST_CASE("convolution matches dense circulant products") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const RingCirculant a = to_ring(random_row(rng, m, 3)), b = to_ring(random_row(rng, m, 3));
    std::vector<C> vals = {C(1 + rng() % 3, 0), C(-2, 0), C(static_cast<double>(rng() % 5), 0)};
    CHECK(dense(circulant_product(a, b), vals) == dense(a, vals) * dense(b, vals));
    CHECK(dense(star(a), vals) == oracle::adjoint(dense(a, vals)));
  }
}

TEST_CASE("symbolic arrays") {
  const auto in3 = cod_inputs_from_catalog(3, 2, {});
  const SymbolicArrays a3 = build_EF(in3);
  CHECK(a3.m == 3);
  CHECK(a3.e.size() == 2);
  const SymbolicArrays a4 = build_EF(order31_inputs());
  CHECK(a4.m == 31);
  CHECK(a4.e.size() == 4);
  CHECK(a4.f.size() == 4);
  // E = (y, xC, zA, x C_Rbar) with y, z, x = variables 0, 1, 2.
  CHECK(a4.e[0] == Sequence({SeqEntry::unit(0, 0)}));
  CHECK(a4.e[1] == order31_inputs().cd[0].a.with_variable(2));
  CHECK(a4.e[2] == order31_inputs().ab.a.with_variable(1));
  CHECK(a4.e[3] == reverse_conjugate(order31_inputs().cd[0].a).with_variable(2));
}

TEST_CASE("expanded rows of the order-31 example") {
  const auto in = order31_inputs();
  const SymbolicArrays arr = build_EF(in);
  const ExpandedRows rows = expand_rows(arr, sylvester_hadamard(2));
  const auto names = cod_variable_names(1);
  CHECK(rows.e[2] == CirculantRow::parse_tokens(split(kE3), names));
  // E_2 = circ(y, -xC, zA, -xC_Rbar)
  std::vector<SeqEntry> e2{SeqEntry::unit(0, 0)};
  for (const auto& s : {arr.e[1].negated(), arr.e[2], arr.e[3].negated()}) e2.insert(e2.end(), s.entries().begin(), s.entries().end());
  CHECK(rows.e[1] == CirculantRow(e2));
  const HermitianSplit s = hermitian_split(rows.e[2]);
  CHECK(s.prime.tokens(names) == split(kE3Prime));
  CHECK(s.double_prime.tokens(names) == split(kE3DoublePrime));
  CHECK_THROWS_AS(expand_rows(arr, sylvester_hadamard(3)), Error);
}

TEST_CASE("n = 3 rows with H_2") {
  const auto in = cod_inputs_from_catalog(3, 2, {});
  const ExpandedRows rows = expand_rows(build_EF(in), sylvester_hadamard(1));
  const auto names = cod_variable_names(0);
  CHECK(rows.e[0].tokens(names) == split("y,z,z"));
  CHECK(rows.e[1].tokens(names) == split("y,-z,-z"));
}

TEST_CASE("Hermitian split properties") {
  const auto gsc = GroupPresentation::complex();
  const RingElement i = RingElement::term({1, 1}, {});
  for (const auto& g : expand_rows(build_EF(order31_inputs()), sylvester_hadamard(2)).e) {
    const HermitianSplit s = hermitian_split(g);
    CHECK(s.prime.is_hermitian());
    CHECK(s.double_prime.is_hermitian());
    const RingCirculant gp = to_ring(s.prime), gpp = to_ring(s.double_prime), gr = to_ring(g);
    for (std::size_t k = 0; k < g.length(); ++k) {
      CHECK(gp.entries[k] - multiply(gsc, i, gpp.entries[k]) == gr.entries[k]);
      CHECK((s.prime[k].is_zero() || s.double_prime[k].is_zero()));
    }
  }
  const CirculantRow pal = CirculantRow::parse_tokens(split("y,z,-x,-x,z"), cod_variable_names(1));
  const HermitianSplit ps = hermitian_split(pal);
  CHECK(ps.prime == pal);
  for (const auto& e : ps.double_prime.entries()) CHECK(e.is_zero());
  const CirculantRow odd = CirculantRow::parse_tokens(split("y,x,0"), cod_variable_names(1));
  CHECK_THROWS_AS(hermitian_split(odd), Error);
}

TEST_CASE("Omega for the order-31 example") {
  const auto in = order31_inputs();
  const ExpandedRows rows = expand_rows(build_EF(in), sylvester_hadamard(2));
  CHECK(verify_EF_identity(rows, cod_form(8, 8, {11})));
  CHECK(is_scalar_circulant(ef_gram_sum(rows), sq(0, 8) + sq(1, 64) + sq(2, 176)));
  const auto omega = omega_set(in);
  CHECK(omega.size() == 16);
  for (const auto& w : omega) {
    CHECK(w.length() == 31);
    CHECK(w.is_hermitian());
    for (std::size_t k = 0; k < 31; ++k) CHECK(w[k] == w[(31 - k) % 31].conj());
  }
  const RingCirculant sum = omega_sum_of_squares(omega);
  CHECK(is_scalar_circulant(sum, sq(0, 16) + sq(1, 128) + sq(2, 352)));
  CHECK(is_scalar_circulant(sum, cod_form(16, 8, {11})));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const RingCirculant a = to_ring(omega[rng() % 16]), b = to_ring(omega[rng() % 16]);
    CHECK(circulant_product(a, b) == circulant_product(b, a));
  }
}

TEST_CASE("corrupting E_1 breaks the identity") {
  ExpandedRows rows = expand_rows(build_EF(order31_inputs()), sylvester_hadamard(2));
  std::vector<SeqEntry> e = rows.e[0].entries();
  e[5] = e[5].times_unit(2);
  rows.e[0] = CirculantRow(e);
  CHECK_FALSE(verify_EF_identity(rows, cod_form(8, 8, {11})));
}

TEST_CASE("Omega for n = 3, r = 2") {
  const auto in = cod_inputs_from_catalog(3, 2, {});
  const auto omega = omega_set(in);
  CHECK(omega.size() == 8);
  for (const auto& w : omega) CHECK(w.is_hermitian());
  CHECK(is_scalar_circulant(omega_sum_of_squares(omega), sq(0, 8) + sq(1, 16)));
  CHECK(verify_EF_identity(expand_rows(build_EF(in), sylvester_hadamard(1)), sq(0, 4) + sq(1, 8)));
}

TEST_CASE("Omega identity for other admissible inputs") {
  for (std::size_t r : {2, 4, 8, 10, 16}) {
    const auto in = cod_inputs_from_catalog(3, r, {});
    CHECK(is_scalar_circulant(omega_sum_of_squares(omega_set(in)), cod_form(8, r, {})));
  }
  for (auto [r, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {10, 5}, {8, 13}, {2, 2}}) {
    const auto in = cod_inputs_from_catalog(4, r, {k});
    CHECK(is_scalar_circulant(omega_sum_of_squares(omega_set(in)), cod_form(16, r, {k})));
  }
  const auto in5 = cod_inputs_from_catalog(5, 2, {3, 5, 11});
  CHECK(is_scalar_circulant(omega_sum_of_squares(omega_set(in5)), cod_form(32, 2, {3, 5, 11})));
}

TEST_CASE("plugging into OD(2; 1, 1)") {
  const DesignMatrix od = hurwitz_radon_design(1);
  const std::vector<CirculantRow> omega = {CirculantRow({SeqEntry::unit(0, 0)}), CirculantRow({SeqEntry::unit(0, 1)})};
  const DesignMatrix cod = plug_into_od(od, omega);
  CHECK(cod.order() == 2);
  CHECK(cod.type() == std::vector<std::int64_t>{1, 1});
  CHECK(verify_sod(cod));
}

TEST_CASE("plugging rejects bad inputs") {
  const auto omega = omega_set(cod_inputs_from_catalog(3, 2, {}));
  CHECK_THROWS_AS(plug_into_od(hurwitz_radon_design(1), omega), Error);
  CHECK_THROWS_AS(plug_into_od(sod_power2(3), omega), Error);
  auto bad = omega;
  bad[0] = CirculantRow::parse_tokens(split("y,z,-z"), cod_variable_names(0));
  CHECK_THROWS_AS(plug_into_od(cod_family_od(3), bad), Error);
}

TEST_CASE("pipeline n = 3 gives COD(192; 64, 128)") {
  const PipelineResult res = cod_family_pipeline(cod_inputs_from_catalog(3, 2, {}));
  REQUIRE(res.cod);
  CHECK(res.order == 192);
  CHECK(res.q == 6);
  CHECK(res.type == std::vector<std::int64_t>{64, 128});
  CHECK(res.cod->is_full());
  CHECK(verify_sod(*res.cod, {true, 0}));
  std::mt19937_64 rng(7);
  CHECK(oracle::gram_identity_holds(*res.cod, rng));
  const DesignMatrix od = cod_to_od(*res.cod);
  CHECK(od.order() == 384);
  CHECK(od.type() == std::vector<std::int64_t>{128, 256});
  CHECK(verify_sod(od));
}

TEST_CASE("pipeline n = 4 components and sampled rows") {
  const PipelineResult res = cod_family_pipeline(order31_inputs());
  CHECK_FALSE(res.cod);
  CHECK(res.order == 63488);
  CHECK(res.q == 11);
  CHECK(res.type == std::vector<std::int64_t>{2048, 16384, 45056});
  std::int64_t total = 0;
  for (auto t : res.type) total += t;
  CHECK(total == static_cast<std::int64_t>(res.order));
  // Sampled Gram entries of the streamed rows.
  const auto gsc = GroupPresentation::complex();
  std::mt19937_64 rng(9);
  std::vector<Entry> ra, rb;
  const RingElement diag = sq(0, 2048) + sq(1, 16384) + sq(2, 45056);
  for (int t = 0; t < 6; ++t) {
    const std::size_t a = rng() % res.order, b = t == 0 ? a : rng() % res.order;
    plugged_row(res.od, res.omega, a, ra);
    plugged_row(res.od, res.omega, b, rb);
    std::vector<RingElement::Term> terms;
    for (std::size_t c = 0; c < res.order; ++c) {
      const GroupElement g = gsc.multiply(ra[c].element(), gsc.conjugate(rb[c].element()));
      terms.push_back({RingElement::make_key(g.mask, VarMonomial::of(ra[c].var(), rb[c].var())), g.sign});
    }
    const RingElement s = RingElement::from_terms(terms);
    CHECK(s == (a == b ? diag : RingElement{}));
  }
  std::ostringstream os;
  CHECK_NOTHROW(pipeline_manifest(res));
  PipelineOptions narrow;
  narrow.max_n = 3;
  CHECK_THROWS_AS(cod_family_pipeline(order31_inputs(), narrow), BudgetExceeded);
}

TEST_CASE("input validation") {
  CodInputs in = order31_inputs();
  in.cd.clear();
  CHECK_THROWS_AS(build_EF(in), Error);
  in = order31_inputs();
  in.ab.b = in.ab.a;
  CHECK_THROWS_AS(build_EF(in), Error);
  CHECK_THROWS_AS(cod_inputs_from_catalog(3, 3, {}), Error);
}

TEST_CASE("streamed and materialized outputs agree") {
  const PipelineResult res = cod_family_pipeline(cod_inputs_from_catalog(3, 2, {}));
  std::ostringstream streamed, direct;
  stream_plugged(streamed, res.od, res.omega);
  write_design_text(direct, *res.cod);
  CHECK(streamed.str() == direct.str());
}

}

#include "sodforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sodforge/cod_family.hpp"
#include "sodforge/constructions.hpp"
#include "sodforge/design_io.hpp"
#include "sodforge/golay.hpp"
#include "sodforge/nonexistence.hpp"
#include "sodforge/remrep.hpp"

namespace sodforge {

namespace {

using nlohmann::ordered_json;

struct Common {
  std::string format;  // empty = subcommand default
  std::string output = "-";
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 0;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

bool want_json(const Common& c, bool json_default = false) {
  if (c.format.empty()) return json_default;
  return c.format == "json";
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw Error("bad integer '" + tok + "'");
    }
    if (used != tok.size()) throw Error("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string type_string(const std::vector<std::int64_t>& type) {
  std::string s;
  for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s;
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  DesignMatrix load(const std::string& path) {
    if (path == "-") return read_design(in_);
    return load_design(path);
  }

  template <class Fn>
  void with_output(const std::string& path, Fn&& fn) {
    if (path == "-") {
      fn(out_);
      return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path + "'");
    fn(f);
  }

  void emit_design(const Common& c, const DesignMatrix& x) {
    with_output(c.output, [&](std::ostream& os) { want_json(c) ? write_design_json(os, x) : write_design_text(os, x); });
  }

  struct VerifyChoice {
    bool exact = false, randomized = false, both_sides = false;
    unsigned trials = 3;
    std::uint64_t prime = 0;
  };

  // Returns true on success and prints the certificate either way.
  bool verify_and_report(const Common& c, const DesignMatrix& x, const VerifyChoice& v) {
    bool exact = v.exact;
    if (!v.exact && !v.randomized) exact = x.order() <= 512 || x.group().generator_count() > 1;
    ordered_json j;
    j["order"] = x.order();
    j["group"] = x.group().name();
    j["type"] = x.type();
    bool ok = false;
    std::string detail;
    if (exact) {
      j["mode"] = "exact";
      const VerifyResult r = verify_sod(x, {v.both_sides, c.jobs});
      ok = r.ok;
      if (r.failure) {
        j["row"] = r.failure->row;
        j["col"] = r.failure->col;
        j["side"] = r.failure->transposed_side ? "X*X" : "XX*";
        j["residual"] = r.failure->residual.to_string(x.group());
        detail = " at (" + std::to_string(r.failure->row) + "," + std::to_string(r.failure->col) + ") of " +
                 (r.failure->transposed_side ? "X*X" : "XX*") + ": residual " + j["residual"].get<std::string>();
      }
    } else {
      j["mode"] = "randomized";
      RandomizedOptions o;
      o.trials = v.trials;
      o.prime = v.prime;
      o.seed = c.seed;
      const RandomizedResult r = verify_scalar_randomized(x, o);
      ok = r.ok;
      j["trials"] = r.trials_run;
      j["prime"] = r.prime;
      j["seed"] = c.seed;
      if (r.failed_trial) {
        j["failed_trial"] = *r.failed_trial;
        detail = " in trial " + std::to_string(*r.failed_trial);
      }
    }
    j["ok"] = ok;
    if (want_json(c)) {
      out_ << j.dump() << '\n';
    } else {
      out_ << (ok ? "ok " : "FAIL ") << j["mode"].get<std::string>() << " order " << x.order() << "; group "
           << x.group().name() << "; type " << type_string(x.type()) << detail << '\n';
    }
    return ok;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

Remrep pick_remrep(const DesignMatrix& x, const std::string& kind, unsigned n) {
  const std::string& g = x.group().name();
  std::string k = kind;
  if (k == "auto") {
    if (g == "SR") return trivial_remrep();
    if (g == "SC") return complex_remrep();
    if (g.starts_with("Sprime")) return canonical_remrep_Sprime(static_cast<unsigned>(std::stoi(g.substr(6))));
    if (g.starts_with("S") && g.size() > 1 && std::isdigit(static_cast<unsigned char>(g[1])))
      return canonical_remrep_S(static_cast<unsigned>(std::stoi(g.substr(1))));
    throw Error("no default remrep for group " + g + "; pass --remrep");
  }
  if (k == "S") return canonical_remrep_S(n);
  if (k == "Sprime") return canonical_remrep_Sprime(n);
  if (k == "SC") return complex_remrep();
  if (k == "trivial") return trivial_remrep();
  throw Error("unknown remrep '" + kind + "'");
}

std::vector<std::vector<VarIndex>> parse_blocks(const std::string& text) {
  std::vector<std::vector<VarIndex>> blocks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<VarIndex> block;
    for (auto v : parse_int_list(part)) {
      if (v < 1) throw Error("variables are numbered from 1");
      block.push_back(static_cast<VarIndex>(v - 1));
    }
    if (block.empty()) throw Error("empty block in --blocks");
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Alphabet alphabet_of(const std::string& name, const Sequence& a, const Sequence& b) {
  if (name == "real") return Alphabet::Real;
  if (name == "complex") return Alphabet::Complex;
  return a.is_real_pm1() && b.is_real_pm1() ? Alphabet::Real : Alphabet::Complex;
}

ordered_json pair_json(const GolayPair& p) {
  return {{"length", p.length()},
          {"alphabet", p.alphabet == Alphabet::Real ? "real" : "complex"},
          {"a", p.a.to_string()},
          {"b", p.b.to_string()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Runner run(in, out, err);
  Common common;
  int status = kExitOk;

  CLI::App app{"Signed group orthogonal designs: constructions, verification and searches", "sodforge"};
  app.require_subcommand(1);
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", common.output, "Output file ('-' for stdout)");
  app.add_option("--seed", common.seed, "Seed for randomized verification");
  app.add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a design");
  std::string what;
  unsigned cn = 3, ct = 3;
  bool equate_blocks = false;
  construct->add_option("kind", what, "sod2n | order32 | hr-family | hadamard")
      ->required()
      ->check(CLI::IsMember({"sod2n", "order32", "hr-family", "hadamard"}));
  construct->add_option("--n", cn, "n for sod2n (order 2^n)");
  construct->add_option("--t", ct, "t for hr-family and hadamard (order 2^t)");
  construct->add_flag("--equate", equate_blocks, "order32: merge variables into type 1,1,1,9,9,11");
  construct->callback([&] {
    DesignMatrix x;
    if (what == "sod2n") x = sod_power2(cn);
    else if (what == "order32") x = equate_blocks ? equate_variables(sod_order32(), order32_equating_blocks()) : sod_order32();
    else if (what == "hr-family") x = hurwitz_radon_design(ct);
    else x = sylvester_design(ct);
    run.emit_design(common, x);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check X X* = (sum u_i x_i^2) I");
  std::string vpath;
  Runner::VerifyChoice vc;
  verify->add_option("design", vpath, "Design file ('-' for stdin)")->required();
  auto* exact_flag = verify->add_flag("--exact", vc.exact, "Exact check in the signed group ring");
  verify->add_flag("--randomized", vc.randomized, "Evaluate at random points modulo a prime")->excludes(exact_flag);
  verify->add_option("--trials", vc.trials, "Random points for --randomized");
  verify->add_option("--prime", vc.prime, "Modulus for --randomized");
  verify->add_flag("--both-sides", vc.both_sides, "Also check X* X (exact mode)");
  verify->callback([&] {
    if (!run.verify_and_report(common, run.load(vpath), vc)) status = kExitVerificationFailed;
  });

  // expand
  auto* expand = app.add_subcommand("expand", "Replace each entry s x by (phi(s) H) x");
  std::string epath, remrep_kind = "auto";
  unsigned en = 3;
  expand->add_option("--design", epath, "Design file ('-' for stdin)")->required();
  expand->add_option("--remrep", remrep_kind, "auto | S | Sprime | SC | trivial")
      ->check(CLI::IsMember({"auto", "S", "Sprime", "SC", "trivial"}));
  expand->add_option("--n", en, "n for the S(n) / S'(n) remrep");
  expand->callback([&] {
    const DesignMatrix x = run.load(epath);
    run.emit_design(common, expand_sod(x, pick_remrep(x, remrep_kind, en)));
  });

  // equate
  auto* equate = app.add_subcommand("equate", "Merge variables");
  std::string qpath, blocks;
  equate->add_option("design", qpath, "Design file ('-' for stdin)")->required();
  equate->add_option("--blocks", blocks, "1-based variables, blocks separated by ';', e.g. '6;7;8;1,9;2,10;3,4,5,11'")
      ->required();
  equate->callback([&] { run.emit_design(common, equate_variables(run.load(qpath), parse_blocks(blocks))); });

  // golay
  auto* golay = app.add_subcommand("golay", "Golay pairs");
  golay->require_subcommand(1);
  std::string ga, gb, galpha = "auto";
  auto* gverify = golay->add_subcommand("verify", "Check that two sequences are complementary");
  gverify->add_option("--a", ga, "First sequence, e.g. 1,1,-1,i")->required();
  gverify->add_option("--b", gb, "Second sequence")->required();
  gverify->add_option("--alphabet", galpha)->check(CLI::IsMember({"auto", "real", "complex"}));
  gverify->callback([&] {
    GolayPair p{Sequence::parse(ga), Sequence::parse(gb), Alphabet::Real};
    p.alphabet = alphabet_of(galpha, p.a, p.b);
    const bool ok = p.valid();
    if (want_json(common)) {
      ordered_json j = pair_json(p);
      j["complementary"] = ok;
      out << j.dump() << '\n';
    } else {
      out << (ok ? "ok complementary " : "FAIL not a Golay pair ")
          << (p.alphabet == Alphabet::Real ? "real" : "complex") << " length " << p.a.length() << '\n';
    }
    if (!ok) status = kExitVerificationFailed;
  });
  auto* gsearch = golay->add_subcommand("search", "Exhaustive search (first entries fixed to 1)");
  std::size_t glen = 0;
  std::string gsalpha = "real";
  GolaySearchOptions gopts;
  gsearch->add_option("--length", glen)->required();
  gsearch->add_option("--alphabet", gsalpha)->check(CLI::IsMember({"real", "complex"}));
  gsearch->add_flag("--first", gopts.first_only, "Stop at the first pair");
  gsearch->add_flag("--allow-large", gopts.allow_large, "Permit lengths beyond the default limits");
  gsearch->callback([&] {
    const auto r = search_golay(glen, gsalpha == "real" ? Alphabet::Real : Alphabet::Complex, gopts);
    if (want_json(common)) {
      ordered_json pairs = ordered_json::array();
      for (const auto& p : r.pairs) pairs.push_back({{"a", p.a.to_string()}, {"b", p.b.to_string()}});
      out << ordered_json{{"length", glen}, {"alphabet", gsalpha}, {"count", r.pairs.size()}, {"nodes", r.nodes}, {"pairs", pairs}}
                 .dump()
          << '\n';
    } else {
      for (const auto& p : r.pairs) out << p.a.to_string() << " ; " << p.b.to_string() << '\n';
      out << "pairs " << r.pairs.size() << "; nodes " << r.nodes << '\n';
    }
  });
  auto* gdouble = golay->add_subcommand("double", "(A;B) -> (A|B ; A|-B)");
  gdouble->add_option("--a", ga)->required();
  gdouble->add_option("--b", gb)->required();
  gdouble->callback([&] {
    GolayPair p{Sequence::parse(ga), Sequence::parse(gb), Alphabet::Real};
    p.alphabet = alphabet_of("auto", p.a, p.b);
    const GolayPair d = golay_double(p);
    if (want_json(common)) out << pair_json(d).dump() << '\n';
    else out << d.a.to_string() << " ; " << d.b.to_string() << '\n';
  });

  // cod-family
  auto* cod = app.add_subcommand("cod-family", "COD(2^q m; 2^q, 2^q r, 2^(q+1) k_1, ...) from Golay pairs");
  unsigned fn = 3;
  std::size_t fr = 2;
  std::string fk, emit = "components", manifest_path;
  bool allow_large = false;
  cod->add_option("--n", fn, "n > 2");
  cod->add_option("--golay-length", fr, "Length r of the real Golay pair");
  cod->add_option("--complex-lengths", fk, "Comma-separated lengths k_j of the complex pairs");
  cod->add_option("--emit", emit, "components | full")->check(CLI::IsMember({"components", "full"}));
  cod->add_option("--manifest", manifest_path, "Also write the JSON manifest here");
  cod->add_flag("--allow-large", allow_large, "Stream designs of order above 4096");
  cod->callback([&] {
    std::vector<std::size_t> k;
    for (auto v : parse_int_list(fk)) {
      if (v < 1) throw Error("complex lengths must be positive");
      k.push_back(static_cast<std::size_t>(v));
    }
    const CodInputs inputs = cod_inputs_from_catalog(fn, fr, k);
    const PipelineResult res = cod_family_pipeline(inputs);
    const std::string manifest = pipeline_manifest(res);
    if (!manifest_path.empty()) {
      std::ofstream f(manifest_path);
      if (!f) throw Error("cannot write '" + manifest_path + "'");
      f << manifest << '\n';
    }
    if (emit == "components") {
      run.with_output(common.output, [&](std::ostream& os) {
        if (want_json(common)) {
          os << manifest << '\n';
          return;
        }
        const auto names = cod_variable_names(inputs.cd.size());
        os << "COD(" << res.order << "; " << type_string(res.type) << ") over SC, m = " << inputs.m() << ", q = " << res.q
           << '\n';
        os << "sum W^2 = (" << res.omega_sum.entries[0].to_string(GroupPresentation::complex(), names) << ") I_"
           << inputs.m() << '\n';
        for (std::size_t i = 0; i < res.omega.size(); ++i) {
          os << "W" << i + 1 << " = circ(";
          const auto t = res.omega[i].tokens(names);
          for (std::size_t j = 0; j < t.size(); ++j) os << (j ? "," : "") << t[j];
          os << ")\n";
        }
      });
      return;
    }
    if (res.cod) {
      Runner::VerifyChoice v;
      std::ostringstream cert;
      Runner quiet(in, cert, err);
      if (!quiet.verify_and_report(common, *res.cod, v)) throw VerificationFailed(cert.str());
      run.emit_design(common, *res.cod);
      return;
    }
    if (!allow_large)
      throw BudgetExceeded("COD of order " + std::to_string(res.order) + " is above 4096; pass --allow-large to stream it");
    if (want_json(common)) throw Error("streamed output is text only");
    run.with_output(common.output, [&](std::ostream& os) { stream_plugged(os, res.od, res.omega); });
  });

  // nonexist
  auto* nonexist = app.add_subcommand("nonexist", "Exhaustive searches for small SWs, SHs and SODs");
  nonexist->require_subcommand(1);
  std::size_t sn = 6, sw = 3;
  std::string sgroup = "SR", stype;
  SearchOptions sopts;
  bool no_timing = false;
  auto add_search_common = [&](CLI::App* s) {
    s->add_option("--n", sn, "Order")->required();
    s->add_option("--group", sgroup, "SR | SC | SQ");
    s->add_option("--budget", sopts.node_budget, "Node budget (default: SODFORGE_BUDGET or 1e10)");
    s->add_flag("--allow-large-groups", sopts.allow_large_groups, "Permit groups with more than one generator");
    s->add_flag("--no-timing", no_timing, "Omit the elapsed time from the report");
  };
  auto report = [&](const SearchReport& r) {
    if (want_json(common, true)) {
      out << report_json(r, !no_timing) << '\n';
    } else {
      out << (r.found ? "found " : "none ") << r.kind << " n " << r.n << "; type " << type_string(r.type) << "; group "
          << r.group << "; nodes " << r.nodes << '\n';
      if (r.witness) write_design_text(out, *r.witness);
    }
  };
  auto* nsw = nonexist->add_subcommand("sw", "SW(n, w, S)");
  add_search_common(nsw);
  nsw->add_option("--w", sw, "Weight")->required();
  nsw->callback([&] {
    sopts.jobs = common.jobs;
    report(search_sw(sn, sw, GroupPresentation::by_name(sgroup), sopts));
  });
  auto* nsh = nonexist->add_subcommand("sh", "Full SH(n, S)");
  add_search_common(nsh);
  nsh->callback([&] {
    sopts.jobs = common.jobs;
    report(search_full_sh(sn, GroupPresentation::by_name(sgroup), sopts));
  });
  auto* nsod = nonexist->add_subcommand("sod", "SOD(n; u_1, ..., u_k, S)");
  add_search_common(nsod);
  nsod->add_option("--type", stype, "Comma-separated type")->required();
  nsod->callback([&] {
    sopts.jobs = common.jobs;
    report(search_sod(sn, parse_int_list(stype), GroupPresentation::by_name(sgroup), sopts));
  });

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List Golay seeds and constructions");
  catalog->callback([&] {
    static const std::vector<std::pair<std::string, std::string>> constructions = {
        {"sod2n", "SOD(2^n; 1_(2^n)) over S(n), n >= 3"},
        {"order32", "SOD(32; 1_(8), 8, 8, 8) over S'(4); --equate gives type 1,1,1,9,9,11"},
        {"hr-family", "OD(2^t; 1_(rho(2^t))) from a Hurwitz-Radon family, t <= 12"},
        {"hadamard", "Sylvester Hadamard matrix of order 2^t as OD(2^t; 2^t)"},
    };
    if (want_json(common)) {
      ordered_json seeds = ordered_json::array();
      for (const auto& e : golay_catalog()) {
        ordered_json j = pair_json(e.pair);
        j["name"] = e.name;
        j["source"] = e.source;
        seeds.push_back(j);
      }
      ordered_json cons = ordered_json::array();
      for (const auto& [k, d] : constructions) cons.push_back({{"name", k}, {"design", d}});
      out << ordered_json{{"golay", seeds}, {"constructions", cons}}.dump(2) << '\n';
      return;
    }
    out << "Golay seeds:\n";
    for (const auto& e : golay_catalog())
      out << "  " << e.name << " (" << e.source << "): " << e.pair.a.to_string() << " ; " << e.pair.b.to_string() << '\n';
    out << "Constructions:\n";
    for (const auto& [k, d] : constructions) out << "  " << k << ": " << d << '\n';
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const VerificationFailed& e) {
    out << e.what();
    return kExitVerificationFailed;
  } catch (const BudgetExceeded& e) {
    err << "sodforge: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "sodforge: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}

}  // namespace sodforge

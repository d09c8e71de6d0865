#include "ccx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccx/io.hpp"
#include "ccx/sweeps.hpp"

namespace ccx::cli {

namespace {

struct Inputs {
  std::vector<std::string> registry_files;
  std::vector<std::string> constants;
  std::uint64_t stages = 0;
  std::vector<std::string> injections;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Numbering load_numbering(const Inputs& in) {
  Numbering numbering;
  for (const auto& path : in.registry_files)
    for (const auto& s : parse_scheme_list(read_file(path))) numbering.register_scheme(s);
  for (const auto& w : in.constants) numbering.register_scheme(constant_machine(Word(w)));
  return numbering;
}

std::vector<Injection> load_injections(const Inputs& in) {
  std::vector<Injection> out;
  for (std::size_t j = 0; j < in.injections.size(); ++j)
    out.push_back({Rational::parse(in.injections[j]), j});
  return out;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

Json manifest(const Inputs& in, const Numbering& numbering, const std::vector<std::string>& args) {
  return Json{{"numbering_version", std::string(kNumberingVersion)},
              {"registry", in.registry_files},
              {"constants", in.constants},
              {"registry_digest", numbering.registry_digest()},
              {"stages", in.stages},
              {"injections", in.injections},
              {"command", joined(args)},
              {"outputs", Json::array({in.out.empty() ? "-" : in.out})}};
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << j.dump(2) << '\n';
}

void add_registry_options(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--registry", in.registry_files, "scheme file prepended to the numbering")
      ->check(CLI::ExistingFile);
  cmd->add_option("--constant", in.constants, "register constant_machine(WORD)");
}

Json budget_json(const BudgetExhausted& b) {
  return Json{{"phase", b.phase}, {"stage", b.stage}, {"detail", b.detail}};
}

std::optional<BudgetExhausted> build_rows(DiagonalState& state, std::size_t rows,
                                          const DiagonalOptions& options) {
  while (state.rows().size() < rows)
    if (auto b = extend_diagonal(state, options)) return b;
  return std::nullopt;
}

Json report_json(const SweepReport& r, std::uint64_t seed) {
  return Json{{"suite", r.name},       {"seed", seed},
              {"cases", r.cases},      {"comparisons", r.comparisons},
              {"violations", r.violations}, {"first_failure", r.first_failure},
              {"passed", r.passed()}};
}

// Constant machines whose outputs are valid (delta, g) lists.
std::vector<Scheme> selftest_seeds() {
  const std::vector<std::pair<Rational, std::vector<Point>>> lists{
      {{1, 4}, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}},
      {{1, 2}, {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}}},
      {{1}, {{Rational(0), Rational(1, 4)}, {Rational(1), Rational(1, 4)}}},
      {{1, 3}, {{Rational(0), Rational(3, 4)}, {Rational(1), Rational(0)}}},
  };
  std::vector<Scheme> out;
  for (const auto& [delta, pts] : lists) out.push_back(constant_machine(encode_candidate(delta, pts)));
  return out;
}

int run_selftest(std::uint64_t seed, std::ostream& out) {
  bool ok = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail = "") {
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << '\n';
  };

  for (const auto& r : {sweep_oscillation_oracle(seed, 50), sweep_riemann_bound(seed, 50),
                        sweep_bump_bound(seed, 50)})
    line(r.name + " sweep", r.passed(), r.passed() ? "" : r.first_failure);

  CaseRng rng(seed);
  bool roundtrip = true;
  for (int i = 0; i < 200; ++i) {
    BigInt idx(static_cast<unsigned long>(rng.between(0, 1'000'000)));
    roundtrip = roundtrip && canonical_rank(canonical_unrank(idx)) == idx;
  }
  line("numbering roundtrip", roundtrip);

  Numbering numbering(selftest_seeds());
  DiagonalState state(numbering);
  auto exhausted = build_rows(state, 4, {});
  line("diagonal rows 0-3", !exhausted, exhausted ? exhausted->detail : "");
  if (exhausted) return kVerificationFailed;
  bool rows_ok = true;
  for (std::size_t n = 0; n < 4; ++n) rows_ok = rows_ok && all_hold(row_checks(state, n));
  line("row checks", rows_ok);
  bool riemann = true;
  for (std::size_t N = 0; N < 4; ++N)
    for (const auto& eps : {Rational(1, 2), Rational(1, 8), Rational(1, 32)})
      riemann = riemann && verify_riemann(state, N, eps).passed();
  line("riemann certificates", riemann);

  Scheme cheater = constant_machine(
      encode_candidate(Rational(1), {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}));
  RefuteResult result = refute({cheater}, numbering, {});
  const auto* cert = std::get_if<Certificate>(&result.outcome);
  line("refute cheater", cert && check_certificate(*cert, result.state).ok);
  if (cert) {
    Certificate tampered = *cert;
    tampered.beta = tampered.delta_m;
    line("tampered certificate rejected", !check_certificate(tampered, result.state).ok);
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction of a Riemann-integrable, non-Darboux-integrable function", "ccx"};
  app.require_subcommand(1);
  Inputs in;
  std::uint64_t seed = 0;
  std::size_t count = 200;
  std::size_t rows = 4;
  std::optional<std::size_t> n_opt;
  bool no_accel = false;
  bool inject_accel = false;
  std::string scheme_file, function_file, cert_file;
  std::vector<std::string> xs;
  std::vector<std::string> eps_list{"1/2", "1/8", "1/32"};
  int refine = 0;
  int digits = -1;

  auto* cover = app.add_subcommand("cover", "covering prefix after a number of dovetail stages");
  auto* hseq = app.add_subcommand("hseq", "h_n sequence built from the covering prefix");
  auto* enumerate = app.add_subcommand("enumerate", "enrolled (delta, g) lists in discovery order");
  auto* diagonal = app.add_subcommand("diagonal", "diagonal rows");
  auto* build = app.add_subcommand("build", "partial sum F_N");
  auto* eval = app.add_subcommand("eval", "evaluate a polygonal function JSON");
  auto* verify = app.add_subcommand("verify", "exact verification suites");
  auto* v_omega = verify->add_subcommand("omega", "oscillation against the oracle");
  auto* v_partition = verify->add_subcommand("partition", "Riemann-sum bound");
  auto* v_bump = verify->add_subcommand("bump", "bump oscillation bound");
  auto* v_riemann = verify->add_subcommand("riemann", "Riemann certificates for F_N");
  verify->require_subcommand(1);
  auto* refute_cmd = app.add_subcommand("refute", "refute a claimed Darboux modulus");
  auto* check_cmd = app.add_subcommand("check-cert", "replay a refutation and check a certificate");
  auto* csv = app.add_subcommand("emit-csv", "CSV samples of a polygonal function JSON");
  auto* selftest = app.add_subcommand("selftest", "invariant suite");

  for (auto* cmd : {cover, hseq, enumerate, diagonal, build, v_riemann, refute_cmd, check_cmd}) {
    add_registry_options(cmd, in);
    cmd->add_option("--stages", in.stages, "dovetail stages (budget for construction)")->required();
  }
  for (auto* cmd : {cover, hseq, enumerate, diagonal, build, v_omega, v_partition, v_bump, v_riemann,
                    refute_cmd, csv, eval})
    cmd->add_option("--out", in.out, "output file (default stdout)");
  for (auto* cmd : {cover, hseq}) cmd->add_option("--inject", in.injections, "injection centre p/q");
  hseq->add_option("--n", n_opt, "emit only h_n");
  for (auto* cmd : {diagonal, v_riemann}) cmd->add_option("--rows", rows, "rows to build")->capture_default_str();
  build->add_option("--n", n_opt, "build rows 0..N and emit F_N")->required();
  for (auto* cmd : {diagonal, build, v_riemann, refute_cmd, check_cmd})
    cmd->add_flag("--no-accelerator", no_accel, "cover zeta only through the dovetailer");
  for (auto* cmd : {refute_cmd, check_cmd}) {
    cmd->add_flag("--inject-accelerator", inject_accel, "inject coverage at zeta (default)");
    cmd->add_option("--scheme", scheme_file, "claim scheme file")->required()->check(CLI::ExistingFile);
  }
  check_cmd->add_option("--cert", cert_file, "certificate JSON")->required()->check(CLI::ExistingFile);
  v_riemann->add_option("--eps", eps_list, "windows p/q")->capture_default_str();
  for (auto* cmd : {v_omega, v_partition, v_bump}) {
    cmd->add_option("--seed", seed, "sweep seed")->required();
    cmd->add_option("--count", count, "cases")->capture_default_str();
  }
  selftest->add_option("--seed", seed, "sweep seed")->required();
  for (auto* cmd : {eval, csv})
    cmd->add_option("--function", function_file, "polygonal function JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--x", xs, "points p/q")->required();
  csv->add_option("--refine", refine, "extra samples per segment")->capture_default_str();
  csv->add_option("--digits", digits, "decimal digits (exact p/q if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (no_accel && inject_accel) {
    err << "--inject-accelerator and --no-accelerator are exclusive\n";
    return kUsage;
  }
  const DiagonalOptions dopts{in.stages, !no_accel};

  try {
    if (*cover) {
      Numbering numbering = load_numbering(in);
      CoveringPrefix prefix = covering_prefix(numbering, in.stages, load_injections(in));
      Json j = to_json(prefix);
      j["numbering_version"] = std::string(kNumberingVersion);
      j["stages"] = in.stages;
      j["manifest"] = manifest(in, numbering, args);
      emit(j, in.out, out);
      return kOk;
    }
    if (*hseq) {
      Numbering numbering = load_numbering(in);
      HSequence hs(covering_prefix(numbering, in.stages, load_injections(in)));
      Json list = Json::array();
      std::size_t lo = n_opt ? *n_opt : 0;
      std::size_t hi = n_opt ? *n_opt : hs.size();
      if (hi > hs.size()) {
        err << "h_" << hi << " needs more stages; only " << hs.size() << " intervals\n";
        return kBudgetExhausted;
      }
      for (std::size_t n = lo; n <= hi; ++n) {
        Json e = to_json(hs.h(n));
        e["n"] = n;
        e["integral"] = hs.h(n).integral().str();
        list.push_back(e);
      }
      emit(Json{{"manifest", manifest(in, numbering, args)}, {"size", hs.size()}, {"h", list}}, in.out, out);
      return kOk;
    }
    if (*enumerate) {
      Numbering numbering = load_numbering(in);
      EnumerationState st = enumerate_mu(numbering, in.stages);
      Json entries = Json::array();
      for (const auto& e : st.entries()) entries.push_back(to_json(e));
      Json rejected = Json::array();
      for (const auto& [index, r] : st.rejections())
        rejected.push_back({{"index", index}, {"reason", to_string(r.reason)}, {"detail", r.detail}});
      emit(Json{{"manifest", manifest(in, numbering, args)},
                {"numbering_version", std::string(kNumberingVersion)},
                {"stages", in.stages},
                {"entries", entries},
                {"rejections", rejected}},
           in.out, out);
      return kOk;
    }
    if (*diagonal || *build) {
      Numbering numbering = load_numbering(in);
      DiagonalState state(numbering);
      std::size_t want = *build ? *n_opt + 1 : rows;
      if (auto b = build_rows(state, want, dopts)) {
        err << "budget exhausted (" << b->phase << ") at stage " << b->stage << ": " << b->detail << '\n';
        return kBudgetExhausted;
      }
      Json j;
      if (*build) {
        j = to_json(partial_sum(state, *n_opt));
        j["N"] = *n_opt;
      } else {
        Json list = Json::array();
        for (const auto& r : state.rows()) list.push_back(to_json(r));
        j["rows"] = list;
      }
      j["manifest"] = manifest(in, numbering, args);
      emit(j, in.out, out);
      return kOk;
    }
    if (*eval) {
      PolygonalFunction f = polygon_from_json(read_json(function_file));
      Json values = Json::array();
      for (const auto& x : xs) {
        Rational r = Rational::parse(x);
        values.push_back({{"x", r.str()}, {"value", f(r).str()}});
      }
      emit(Json{{"values", values}}, in.out, out);
      return kOk;
    }
    if (*v_omega || *v_partition || *v_bump) {
      SweepReport r = *v_omega     ? sweep_oscillation_oracle(seed, count)
                      : *v_partition ? sweep_riemann_bound(seed, count)
                                     : sweep_bump_bound(seed, count);
      emit(report_json(r, seed), in.out, out);
      return r.passed() ? kOk : kVerificationFailed;
    }
    if (*v_riemann) {
      Numbering numbering = load_numbering(in);
      DiagonalState state(numbering);
      if (auto b = build_rows(state, rows, dopts)) {
        err << "budget exhausted (" << b->phase << ") at stage " << b->stage << ": " << b->detail << '\n';
        return kBudgetExhausted;
      }
      Json reports = Json::array();
      bool passed = true;
      for (std::size_t N = 0; N < rows; ++N)
        for (const auto& e : eps_list) {
          RiemannReport r = verify_riemann(state, N, Rational::parse(e));
          passed = passed && r.passed();
          reports.push_back(to_json(r));
        }
      emit(Json{{"manifest", manifest(in, numbering, args)}, {"reports", reports}, {"passed", passed}},
           in.out, out);
      return passed ? kOk : kVerificationFailed;
    }
    if (*refute_cmd || *check_cmd) {
      auto schemes = parse_scheme_list(read_file(scheme_file));
      if (schemes.size() != 1) throw UsageError(scheme_file + ": expected exactly one scheme");
      Numbering numbering = load_numbering(in);
      RefuteResult result = refute({schemes.front()}, numbering, {in.stages, !no_accel, true});
      if (const auto* b = std::get_if<BudgetExhausted>(&result.outcome)) {
        err << "budget exhausted (" << b->phase << ") at stage " << b->stage << ": " << b->detail << '\n';
        if (*refute_cmd) emit(Json{{"kind", "budget_exhausted"}, {"budget", budget_json(*b)}}, in.out, out);
        return kBudgetExhausted;
      }
      if (const auto* bad = std::get_if<InvalidListRefutation>(&result.outcome)) {
        Json j{{"kind", "invalid_list"},
               {"claim_index", bad->index},
               {"output", bad->output.str()},
               {"reason", to_string(bad->rejection.reason)},
               {"detail", bad->rejection.detail},
               {"manifest", manifest(in, result.state.numbering(), args)}};
        if (*check_cmd) {
          err << "claim produced no valid list; there is no certificate to check\n";
          return kVerificationFailed;
        }
        emit(j, in.out, out);
        return kOk;
      }
      const Certificate& produced = std::get<Certificate>(result.outcome);
      if (*check_cmd) {
        Certificate cert = certificate_from_json(read_json(cert_file));
        CertificateVerdict v = check_certificate(cert, result.state);
        out << (v.ok ? "certificate ok" : "certificate rejected: " + v.reason) << '\n';
        return v.ok ? kOk : kVerificationFailed;
      }
      CertificateVerdict v = check_certificate(produced, result.state);
      Json j = to_json(produced);
      j["kind"] = "certificate";
      j["claim_index"] = result.claim_index;
      j["manifest"] = manifest(in, result.state.numbering(), args);
      emit(j, in.out, out);
      if (!v.ok) err << "certificate failed re-verification: " << v.reason << '\n';
      return v.ok ? kOk : kVerificationFailed;
    }
    if (*csv) {
      PolygonalFunction f = polygon_from_json(read_json(function_file));
      if (refine < 0) throw UsageError("--refine must be >= 0");
      std::ostringstream ss;
      write_csv(ss, f, refine, digits);
      if (in.out.empty() || in.out == "-") {
        out << ss.str();
      } else {
        std::ofstream file(in.out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + in.out);
        file << ss.str();
      }
      return kOk;
    }
    if (*selftest) return run_selftest(seed, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const NeedsMoreStages& e) {
    err << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

int dispatch(const std::vector<std::string>& args) { return dispatch(args, std::cout, std::cerr); }

}  // namespace ccx::cli

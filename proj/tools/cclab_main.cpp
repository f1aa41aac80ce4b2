// cclab: command-line surface over the machine, the oracles, the codecs,
// and the verification harnesses. Every subcommand prints a human-readable
// text report by default or, with --json, a stable envelope
//   {command, parameters, result, timing_ms, tool_version}
// whose result payload is byte-identical across reruns of the same inputs.
//
// Exit codes: 0 success, 1 a verification/check ran and failed,
// 2 usage error or ceiling/precondition refusal.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cclab/acceptance.hpp"
#include "cclab/report_json.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using cclab::BitString;
using cclab::Compressor;
using cclab::Oracle;
using json = nlohmann::json;

struct CommandOutcome {
  json parameters;
  json result;
  std::string text;
  int exit_code = 0;
};

struct Cli {
  bool as_json = false;
  std::string command;
  CommandOutcome out;
};

BitString parse_bits(const std::string& s) {
  try {
    return BitString::parse(s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

cclab::TimeBound parse_poly(const std::string& s) {
  std::istringstream is(s);
  cclab::TimeBound t;
  char c1 = 0, c2 = 0;
  if (!(is >> t.a >> c1 >> t.b >> c2 >> t.c) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof()) {
    throw CLI::ValidationError("--poly expects a,b,c (steps bound a*n^b + c)");
  }
  return t;
}

// Grid syntax "M0-M1xN0-N1" (single values allowed): all pairs m in M, n in N
// with m <= n.
std::vector<std::pair<std::size_t, std::size_t>> parse_grid(const std::string& s) {
  auto parse_range = [](const std::string& r) -> std::pair<std::size_t, std::size_t> {
    std::size_t dash = r.find('-');
    std::size_t lo = std::stoul(r.substr(0, dash));
    std::size_t hi = dash == std::string::npos ? lo : std::stoul(r.substr(dash + 1));
    return {lo, hi};
  };
  std::size_t x = s.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--grid expects M0-M1xN0-N1, e.g. 0-4x2-5");
  std::pair<std::size_t, std::size_t> mr, nr;
  try {
    mr = parse_range(s.substr(0, x));
    nr = parse_range(s.substr(x + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid expects M0-M1xN0-N1, e.g. 0-4x2-5");
  }
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  for (std::size_t m = mr.first; m <= mr.second; ++m) {
    for (std::size_t n = nr.first; n <= nr.second; ++n) {
      if (m <= n) grid.emplace_back(m, n);
    }
  }
  if (grid.empty()) throw CLI::ValidationError("--grid contains no (m, n) pairs with m <= n");
  return grid;
}

Compressor make_codec(const std::string& name, std::size_t m, Oracle& oracle) {
  if (name == "literal") return cclab::make_literal_codec();
  if (name == "rle") return cclab::make_rle_codec();
  if (name == "lz") return cclab::make_lz_codec();
  if (name == "best") return cclab::make_best_codec();
  if (name == "thm1") return cclab::theorem1_compressor(m, oracle);
  throw CLI::ValidationError("unknown codec: " + name);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void setup_commands(CLI::App& app, Cli& cli, Oracle& oracle) {
  // ---- vm ----
  auto* vm = app.add_subcommand("vm", "run or disassemble machine programs");
  vm->require_subcommand(1);
  {
    auto* run = vm->add_subcommand("run", "execute a program on an input");
    auto program = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>("_");
    auto cap = std::make_shared<std::int64_t>(-1);
    run->add_option("--program", *program, "program bits ('_' for the empty string)")->required();
    run->add_option("--input", *input, "input bits");
    run->add_option("--cap", *cap, "step cap");
    run->callback([&cli, program, input, cap, run] {
      cli.command = "vm run";
      BitString p = parse_bits(*program), in = parse_bits(*input);
      std::optional<std::uint64_t> c;
      if (run->count("--cap")) {
        if (*cap < 0) throw CLI::ValidationError("--cap must be nonnegative");
        c = static_cast<std::uint64_t>(*cap);
      }
      cclab::ExecResult r = cclab::exec(p, in, c);
      cli.out.parameters = {{"program", p.str()}, {"input", in.str()}};
      cli.out.parameters["cap"] = c ? json(*c) : json(nullptr);
      cli.out.result = to_json(r);
      std::ostringstream os;
      os << "output " << r.output.display() << "\nsteps " << r.steps << "\nhalt "
         << halt_reason_name(r.halt_reason) << "\n";
      cli.out.text = os.str();
    });

    auto* dis = vm->add_subcommand("disasm", "disassemble a program");
    auto dprog = std::make_shared<std::string>();
    dis->add_option("--program", *dprog, "program bits")->required();
    dis->callback([&cli, dprog] {
      cli.command = "vm disasm";
      BitString p = parse_bits(*dprog);
      std::string listing = cclab::disassemble(p);
      cli.out.parameters = {{"program", p.str()}};
      cli.out.result = {{"listing", listing}};
      cli.out.text = listing;
    });
  }

  // ---- oracle ----
  auto* orc = app.add_subcommand("oracle", "exact complexity oracles");
  orc->require_subcommand(1);
  {
    auto* c = orc->add_subcommand("c", "plain complexity C(x)");
    auto x = std::make_shared<std::string>();
    c->add_option("--x", *x, "the string")->required();
    c->callback([&cli, &oracle, x] {
      cli.command = "oracle c";
      BitString bx = parse_bits(*x);
      cclab::ComplexityRecord rec = oracle.complexity(bx);
      cli.out.parameters = {{"x", bx.str()}};
      cli.out.result = to_json(rec);
      std::ostringstream os;
      os << "C(" << bx.display() << ") = " << rec.value << "\nwitness " << rec.witness.display() << "\n";
      cli.out.text = os.str();
    });

    auto* ct = orc->add_subcommand("ct", "time-bounded complexity C^t(x)");
    auto ctx = std::make_shared<std::string>();
    auto budget = std::make_shared<std::uint64_t>(0);
    auto poly = std::make_shared<std::string>();
    ct->add_option("--x", *ctx, "the string")->required();
    auto* budget_opt = ct->add_option("--budget", *budget, "step budget");
    auto* poly_opt = ct->add_option("--poly", *poly, "bound a,b,c meaning a*n^b+c steps");
    budget_opt->excludes(poly_opt);
    ct->callback([&cli, &oracle, ctx, budget, poly, budget_opt, poly_opt] {
      cli.command = "oracle ct";
      BitString bx = parse_bits(*ctx);
      std::uint64_t b;
      cli.out.parameters = {{"x", bx.str()}};
      if (poly_opt->count()) {
        cclab::TimeBound t = parse_poly(*poly);
        b = t.eval(bx.size());
        cli.out.parameters["poly"] = to_json(t);
      } else if (budget_opt->count()) {
        b = *budget;
        cli.out.parameters["budget"] = b;
      } else {
        throw CLI::ValidationError("oracle ct needs --budget or --poly");
      }
      cclab::ComplexityRecord rec = oracle.complexity_time_bounded(bx, b);
      cli.out.result = to_json(rec);
      std::ostringstream os;
      os << "C^" << b << "(" << bx.display() << ") = " << rec.value
         << (rec.exceeds_budget ? " (no program within the Print bound fits the budget)" : "")
         << "\nwitness " << rec.witness.display() << "\n";
      cli.out.text = os.str();
    });

    auto* bb = orc->add_subcommand("bb", "busy beaver BB(m)");
    auto m = std::make_shared<std::size_t>(0);
    bb->add_option("--m", *m, "program length bound")->required();
    bb->callback([&cli, &oracle, m] {
      cli.command = "oracle bb";
      cclab::BBRecord rec = oracle.busy_beaver(*m);
      cli.out.parameters = {{"m", *m}};
      cli.out.result = to_json(rec);
      std::ostringstream os;
      os << "BB(" << *m << ") = " << rec.bb << "\np_m " << rec.p_m.display() << "\n";
      cli.out.text = os.str();
    });

    auto* aset = orc->add_subcommand("aset", "A-set of a step bound and length");
    auto s = std::make_shared<std::uint64_t>(0);
    auto len = std::make_shared<std::size_t>(0);
    aset->add_option("--s", *s, "step bound")->required();
    aset->add_option("--len", *len, "string length")->required();
    aset->callback([&cli, &oracle, s, len] {
      cli.command = "oracle aset";
      cclab::ASet a = oracle.a_set(*s, *len);
      cli.out.parameters = {{"s", *s}, {"len", *len}};
      cli.out.result = to_json(a);
      std::ostringstream os;
      os << "count " << a.members.size() << "\n" << a.canonical_serialization();
      cli.out.text = os.str();
    });

    auto* frac = orc->add_subcommand("fraction", "fraction of incompressible strings");
    auto n = std::make_shared<std::size_t>(0);
    frac->add_option("--n", *n, "string length")->required();
    frac->callback([&cli, &oracle, n] {
      cli.command = "oracle fraction";
      cclab::IncompressibleFraction f = oracle.incompressible_fraction(*n);
      cli.out.parameters = {{"n", *n}};
      cli.out.result = to_json(f);
      std::ostringstream os;
      os << "fraction " << f.str() << " = " << f.value() << "\n";
      cli.out.text = os.str();
    });
  }

  // ---- compress ----
  {
    auto* cp = app.add_subcommand("compress", "compress a string to a machine program");
    auto codec = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    auto m = std::make_shared<std::size_t>(0);
    cp->add_option("--codec", *codec, "literal|rle|lz|best|thm1")->required();
    cp->add_option("--x", *x, "the string")->required();
    auto* m_opt = cp->add_option("--m", *m, "level for the thm1 codec");
    cp->callback([&cli, &oracle, codec, x, m, m_opt] {
      cli.command = "compress";
      if (*codec == "thm1" && !m_opt->count()) {
        throw CLI::ValidationError("--codec thm1 requires --m");
      }
      BitString bx = parse_bits(*x);
      Compressor c = make_codec(*codec, *m, oracle);
      BitString out = c.compress(bx);
      cli.out.parameters = {{"codec", *codec}, {"x", bx.str()}};
      if (m_opt->count()) cli.out.parameters["m"] = *m;
      cli.out.result = {{"compressed", out.str()},
                        {"bits", out.size()},
                        {"input_bits", bx.size()},
                        {"compressor", to_json(c)}};
      std::ostringstream os;
      os << "compressed " << out.display() << "\nbits " << out.size() << " (input " << bx.size()
         << ")\n";
      cli.out.text = os.str();
    });
  }

  // ---- check ----
  auto* check = app.add_subcommand("check", "contract checks");
  check->require_subcommand(1);
  {
    auto* cf = check->add_subcommand("cf", "is q a compression function for length n?");
    auto q = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(0);
    cf->add_option("--q", *q, "program bits")->required();
    cf->add_option("--n", *n, "string length")->required();
    cf->callback([&cli, q, n] {
      cli.command = "check cf";
      BitString bq = parse_bits(*q);
      Compressor c = cclab::program_as_compressor(bq, *n);
      bool ok = cclab::is_compression_function(c, *n, 8);
      cli.out.parameters = {{"q", bq.str()}, {"n", *n}};
      cli.out.result = {{"compression_function", ok}};
      cli.out.text = std::string("compression function for length ") + std::to_string(*n) + ": " +
                     yesno(ok) + "\n";
      cli.out.exit_code = ok ? 0 : 1;
    });
  }

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "verification harnesses");
  verify->require_subcommand(1);
  {
    auto* t1 = verify->add_subcommand("thm1", "dovetailing-compressor tradeoff");
    auto m = std::make_shared<std::size_t>(0);
    auto nmax = std::make_shared<std::size_t>(0);
    t1->add_option("--m", *m, "compressor level")->required();
    t1->add_option("--nmax", *nmax, "check all strings up to this length")->required();
    t1->callback([&cli, &oracle, m, nmax] {
      cli.command = "verify thm1";
      cclab::Thm1Report rep = cclab::verify_theorem1(*m, *nmax, oracle);
      cli.out.parameters = {{"m", *m}, {"n_max", *nmax}};
      cli.out.result = to_json(rep);
      std::ostringstream os;
      os << "pass " << yesno(rep.pass) << "\ncase1 " << rep.case1_count << ", case2 "
         << rep.case2_count << "\ncorollary slack " << rep.corollary_slack << "\ndeclared length "
         << rep.declared_length << "\n";
      cli.out.text = os.str();
      cli.out.exit_code = rep.pass ? 0 : 1;
    });

    auto* t2 = verify->add_subcommand("thm2", "adversarial lower bound");
    auto m2 = std::make_shared<std::size_t>(0);
    auto n2 = std::make_shared<std::size_t>(0);
    auto qmax = std::make_shared<std::size_t>(10);
    t2->add_option("--m", *m2, "step-bound level")->required();
    t2->add_option("--n", *n2, "adversarial string length")->required();
    t2->add_option("--qmax", *qmax, "enumerate programs up to this length");
    t2->callback([&cli, &oracle, m2, n2, qmax] {
      cli.command = "verify thm2";
      cclab::Thm2Report rep = cclab::verify_theorem2(*m2, *n2, *qmax, oracle);
      cli.out.parameters = {{"m", *m2}, {"n", *n2}, {"q_len_max", *qmax}};
      cli.out.result = to_json(rep);
      std::ostringstream os;
      os << "pass " << yesno(rep.pass) << "\nx_adv " << rep.x_adv.display() << " (C = "
         << rep.c_x_adv << ", t = " << rep.t << ")\ncompression functions " << rep.cf_count
         << ", violations " << rep.violations.size() << "\n";
      if (rep.degenerate) os << "degenerate instance (n <= 1): size bounds are vacuous\n";
      os << "k_min items " << rep.k_min_items << "\n";
      cli.out.text = os.str();
      cli.out.exit_code = rep.pass ? 0 : 1;
    });

    auto* kc = verify->add_subcommand("constants", "minimal constants over a grid");
    auto grid = std::make_shared<std::string>();
    auto qmax2 = std::make_shared<std::size_t>(10);
    kc->add_option("--grid", *grid, "M0-M1xN0-N1, e.g. 0-4x2-5")->required();
    kc->add_option("--qmax", *qmax2, "enumerate programs up to this length");
    kc->callback([&cli, &oracle, grid, qmax2] {
      cli.command = "verify constants";
      auto pairs = parse_grid(*grid);
      cclab::MeasuredConstants k = cclab::estimate_constants(pairs, *qmax2, oracle);
      cli.out.parameters = {{"grid", *grid}, {"q_len_max", *qmax2}};
      cli.out.result = to_json(k);
      std::ostringstream os;
      os << "k_print " << k.k_print << "\nk_driver " << k.k_driver << "\nk_min thm1 "
         << k.k_min_thm1 << " at (m=" << k.thm1_witness_m << ", n=" << k.thm1_witness_n
         << ")\nk_min thm2 " << k.k_min_thm2 << " at (m=" << k.thm2_witness_m << ", n="
         << k.thm2_witness_n << ")\n";
      cli.out.text = os.str();
    });
  }

  // ---- extract-random ----
  {
    auto* ex = app.add_subcommand("extract-random", "random-string extraction reduction");
    auto q = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(0);
    auto m = std::make_shared<std::size_t>(0);
    ex->add_option("--q", *q, "compression-function program bits")->required();
    ex->add_option("--n", *n, "compression length")->required();
    ex->add_option("--m", *m, "extracted string length")->required();
    ex->callback([&cli, &oracle, q, n, m] {
      cli.command = "extract-random";
      BitString bq = parse_bits(*q);
      Compressor c = cclab::program_as_compressor(bq, *n);
      cclab::ExtractRandomResult r = cclab::extract_random(c, *n, *m, oracle);
      cli.out.parameters = {{"q", bq.str()}, {"n", *n}, {"m", *m}};
      cli.out.result = to_json(r);
      std::ostringstream os;
      os << "z " << r.z.display() << "\nt' " << r.t_prime << " (BB(" << *m << ") = " << r.bb_m
         << ", contract " << (r.contract_applies ? "applies" : "does not apply") << ")\n";
      cli.out.text = os.str();
    });
  }

  // ---- acceptance ----
  {
    auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
    auto criterion = std::make_shared<int>(0);
    auto* c_opt = acc->add_option("--criterion", *criterion, "run a single criterion (1..9)");
    acc->callback([&cli, criterion, c_opt] {
      cli.command = "acceptance";
      std::optional<int> only;
      if (c_opt->count()) only = *criterion;
      auto results = cclab::run_acceptance(only);
      cli.out.parameters = only ? json{{"criterion", *only}} : json::object();
      json arr = json::array();
      std::ostringstream os;
      bool all = true;
      for (const cclab::CriterionResult& r : results) {
        arr.push_back(json{{"criterion", r.id}, {"pass", r.pass}, {"detail", r.detail},
                           {"payload", r.payload}});
        os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.detail
           << "\n";
        all = all && r.pass;
      }
      cli.out.result = {{"criteria", arr}, {"pass", all}};
      cli.out.text = os.str();
      cli.out.exit_code = all ? 0 : 1;
    });
  }

  // ---- distinguish ----
  {
    auto* d = app.add_subcommand("distinguish", "compression-based distinguisher");
    auto seed_len = std::make_shared<std::size_t>(0);
    auto out_len = std::make_shared<std::size_t>(0);
    auto trials = std::make_shared<std::uint64_t>(0);
    auto rng_seed = std::make_shared<std::uint64_t>(0);
    auto codec = std::make_shared<std::string>("best");
    d->add_option("--seed-len", *seed_len, "expander seed length")->required();
    d->add_option("--out-len", *out_len, "output length")->required();
    d->add_option("--trials", *trials, "trials per distribution")->required();
    d->add_option("--rng-seed", *rng_seed, "seed for the trial generator")->required();
    d->add_option("--codec", *codec, "literal|rle|lz|best");
    d->callback([&cli, &oracle, seed_len, out_len, trials, rng_seed, codec] {
      cli.command = "distinguish";
      Compressor c = make_codec(*codec, 0, oracle);
      cclab::DistinguisherReport rep =
          cclab::run_distinguisher(c, *seed_len, *out_len, *trials, *rng_seed);
      cli.out.parameters = {{"seed_len", *seed_len},
                            {"out_len", *out_len},
                            {"trials", *trials},
                            {"rng_seed", *rng_seed},
                            {"codec", *codec}};
      cli.out.result = to_json(rep);
      std::ostringstream os;
      os << "accept rate uniform " << rep.accept_rate_uniform << "\naccept rate prg "
         << rep.accept_rate_prg << "\nadvantage " << rep.advantage << "\n";
      cli.out.text = os.str();
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compression-complexity laboratory"};
  app.require_subcommand(1);
  Cli cli;
  app.add_flag("--json", cli.as_json, "emit a JSON report envelope");

  Oracle oracle;
  setup_commands(app, cli, oracle);

  auto started = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cclab::RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (cli.as_json) {
    json envelope{{"tool_version", kToolVersion},
                  {"command", cli.command},
                  {"parameters", cli.out.parameters},
                  {"result", cli.out.result},
                  {"timing_ms", ms}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << cli.out.text;
  }
  return cli.out.exit_code;
}

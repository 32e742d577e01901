// pathpack: command-line front end.
//
// Exit codes: 0 success, 1 property failure or rejection, 2 usage or parse error.
// The machine-readable report goes to stdout, a human summary to stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pathpack/dual.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/generate.hpp"
#include "pathpack/io.hpp"
#include "pathpack/solvers.hpp"
#include "pathpack/theorem_checks.hpp"

using namespace pathpack;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

std::string approx_text(const Rational& r) {
  std::ostringstream os;
  os << "~" << approx(r);
  return os.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_validate(const std::string& file, bool require_flat) {
  Network net = load_network(file);
  ValidationReport rep = validate(net, require_flat);
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  emit({{"command", "validate"},
        {"file", file},
        {"structural_errors", rep.structural_errors},
        {"checks", checks},
        {"warnings", rep.warnings},
        {"ok", rep.ok()}});
  for (const CheckResult& c : rep.checks) {
    std::cerr << (c.passed ? "pass  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  for (const auto& w : rep.warnings) std::cerr << "warn  " << w << "\n";
  return rep.ok() ? kOk : kFailed;
}

int cmd_solve(const std::string& file, const std::string& problem, const std::string& mode,
              const std::string& witness_out) {
  Network net = load_network(file);
  const Mode m = mode == "integer" ? Mode::Integer : Mode::Fractional;
  SolveResult res = problem == "strong" ? solve_strong(net, m) : solve_weak(net, m);
  Json witness = multiflow_to_json(net, res.witness);
  if (!witness_out.empty()) write_text_file(witness_out, witness.dump(2) + "\n");
  emit({{"command", "solve"},
        {"file", file},
        {"problem", to_string(res.problem)},
        {"mode", to_string(res.mode)},
        {"objective", to_string(res.objective)},
        {"witness", witness}});
  std::cerr << to_string(res.problem) << " " << to_string(res.mode) << " optimum " << to_string(res.objective)
            << " (" << approx_text(res.objective) << ")\n";
  return kOk;
}

int cmd_dual(const std::string& file, int max_inner, const std::string& cert_out, const std::string& packing_out) {
  Network net = load_network(file);
  ExpansionLimits limits = ExpansionLimits::from_env();
  limits.max_inner = max_inner;
  CertificateSearch cs = search_certificate(net, limits);
  SolveResult strong = solve_strong(net, Mode::Integer);
  Json cert = certificate_to_json(cs.certificate);
  if (!cert_out.empty()) write_text_file(cert_out, cert.dump(2) + "\n");
  if (!packing_out.empty()) write_text_file(packing_out, multiflow_to_json(net, strong.witness).dump(2) + "\n");
  const bool equal = cs.min_value == strong.objective;
  emit({{"command", "dual"},
        {"file", file},
        {"min_phi", to_string(cs.min_value)},
        {"eta", to_string(strong.objective)},
        {"equal", equal},
        {"candidates", cs.evaluated},
        {"certificate", cert}});
  std::cerr << "min phi " << to_string(cs.min_value) << " over " << cs.evaluated << " candidates, eta "
            << to_string(strong.objective) << (equal ? " (equal)" : " (gap)") << "\n";
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& cert_file, const std::string& packing_file,
               const std::string& eta_text) {
  Network net = load_network(file);
  Certificate cert;
  try {
    cert = parse_certificate(read_json_file(cert_file));
  } catch (const ParseError& e) {
    throw ParseError(cert_file + ": " + e.what());
  }
  std::optional<Multiflow> packing;
  if (!packing_file.empty()) {
    try {
      packing = parse_multiflow(net, read_json_file(packing_file));
    } catch (const ParseError& e) {
      throw ParseError(packing_file + ": " + e.what());
    }
  }
  Rational eta;
  if (!eta_text.empty()) eta = parse_rational(eta_text);
  else if (packing) eta = count_classes(net, *packing).strong;
  else eta = cert.value;
  VerificationReport rep = verify_certificate(net, cert, eta, packing ? &*packing : nullptr);
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  emit({{"command", "verify"},
        {"file", file},
        {"certificate", cert_file},
        {"claimed_eta", to_string(eta)},
        {"recomputed_phi", rep.recomputed ? Json(to_string(rep.recomputed_value)) : Json(nullptr)},
        {"checks", checks},
        {"accepted", rep.accepted()}});
  for (const CheckResult& c : rep.checks) {
    std::cerr << (c.passed ? "pass  " : "FAIL  ") << c.name << "  " << c.detail << "\n";
  }
  std::cerr << (rep.accepted() ? "certificate accepted" : "certificate rejected") << "\n";
  return rep.accepted() ? kOk : kFailed;
}

int cmd_gen(const GenParams& p, const std::string& out) {
  Network net = generate(p);
  const std::string text = network_to_json(net).dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
  std::cerr << "generated " << net.graph().node_count() << " nodes, " << net.graph().edge_count() << " edges, "
            << net.clutter().members.size() << " clutter members (seed " << p.seed << ")\n";
  return kOk;
}

int cmd_check(const std::string& file, const std::string& suites) {
  Network net = load_network(file);
  std::vector<std::string> ids = suites.empty() ? suite_ids() : split_list(suites);
  for (const auto& id : ids) {
    if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) {
      throw CLI::ValidationError("--suite", "unknown suite '" + id + "'");
    }
  }
  ValidationReport vr = validate(net, false);
  if (!vr.ok()) {
    std::string why;
    for (const CheckResult& c : vr.checks) {
      if (!c.passed) why += (why.empty() ? "" : ", ") + c.name;
    }
    std::cerr << "network is not a valid K-network (" << why << ")\n";
    emit({{"command", "check-theorems"}, {"file", file}, {"checks", Json::array()}, {"ok", false}, {"invalid", why}});
    return kFailed;
  }
  Json table = Json::array();
  bool failed = false;
  for (const auto& id : ids) {
    SuiteReport rep = run_suite(net, id);
    for (const CheckLine& l : rep.lines) {
      table.push_back({{"suite", id}, {"anchor", l.anchor}, {"status", to_string(l.status)}, {"detail", l.detail}});
      std::cerr << std::left << std::setw(8) << id << std::setw(26) << l.anchor << std::setw(6) << to_string(l.status)
                << l.detail << "\n";
      failed = failed || l.status == CheckStatus::Fail;
    }
  }
  emit({{"command", "check-theorems"}, {"file", file}, {"checks", table}, {"ok", !failed}});
  return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint S-path packing in Eulerian flat networks: solvers, certificates and checks"};
  app.require_subcommand(1);

  std::string file;
  bool require_flat = false;
  auto* validate_cmd = app.add_subcommand("validate", "check clutter, Eulerian, K-condition, simplicity, flatness");
  validate_cmd->add_option("FILE", file, "network document")->required();
  validate_cmd->add_flag("--require-flat", require_flat, "fail unless the network is flat");

  std::string problem = "strong";
  std::string mode = "integer";
  std::string witness_out;
  auto* solve_cmd = app.add_subcommand("solve", "solve the strong or weak packing problem");
  solve_cmd->add_option("FILE", file, "network document")->required();
  solve_cmd->add_option("--problem", problem)->check(CLI::IsMember({"strong", "weak"}));
  solve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"integer", "fractional"}));
  solve_cmd->add_option("--witness-out", witness_out, "write the optimal multiflow here");

  int max_inner = -1;
  std::string cert_out;
  std::string packing_out;
  auto* dual_cmd = app.add_subcommand("dual", "search a minimum certificate over extensions and expansions");
  dual_cmd->add_option("FILE", file, "network document")->required();
  dual_cmd->add_option("--max-inner", max_inner, "at most this many inner nodes assigned to blocks")
      ->check(CLI::NonNegativeNumber);
  dual_cmd->add_option("--out", cert_out, "write the certificate here");
  dual_cmd->add_option("--packing-out", packing_out, "write a maximum S-path packing here");

  std::string cert_file;
  std::string packing_file;
  std::string eta_text;
  auto* verify_cmd = app.add_subcommand("verify", "recompute and check a certificate");
  verify_cmd->add_option("FILE", file, "network document")->required();
  verify_cmd->add_option("--certificate", cert_file, "certificate document")->required();
  verify_cmd->add_option("--packing", packing_file, "integer S-path packing attaining the bound");
  verify_cmd->add_option("--eta", eta_text, "claimed optimum (default: packing size, else certificate value)");

  GenParams gp;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random network");
  gen_cmd->add_option("--nodes", gp.nodes)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--terminals", gp.terminals)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--edges", gp.edges)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--density", gp.clutter_density, "clutter density")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gp.seed);
  gen_cmd->add_option("--retries", gp.max_retries, "attempt budget for --ensure-integral")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--ensure-eulerian", gp.ensure_eulerian);
  gen_cmd->add_flag("--ensure-flat", gp.ensure_flat);
  gen_cmd->add_flag("--ensure-simple", gp.ensure_simple);
  gen_cmd->add_flag("--ensure-integral", gp.ensure_integral);
  gen_cmd->add_flag("--double-edges", gp.double_edges);
  gen_cmd->add_option("--out", gen_out, "write here instead of stdout");

  std::string suites;
  auto* check_cmd = app.add_subcommand("check-theorems", "run the invariant suites and print a traceability table");
  check_cmd->add_option("FILE", file, "network document")->required();
  check_cmd->add_option("--suite", suites, "comma-separated subset of t1,t2,t5,t8,locking,pivots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, require_flat);
    if (*solve_cmd) return cmd_solve(file, problem, mode, witness_out);
    if (*dual_cmd) return cmd_dual(file, max_inner, cert_out, packing_out);
    if (*verify_cmd) return cmd_verify(file, cert_file, packing_file, eta_text);
    if (*gen_cmd) return cmd_gen(gp, gen_out);
    if (*check_cmd) return cmd_check(file, suites);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kFailed;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

#include "pathpack/theorem_checks.hpp"

#include <algorithm>
#include <sstream>

#include "pathpack/cuts.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/lp.hpp"

namespace pathpack {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

CheckStatus SuiteReport::status() const {
  bool any_pass = false;
  for (const CheckLine& l : lines) {
    if (l.status == CheckStatus::Fail) return CheckStatus::Fail;
    any_pass = any_pass || l.status == CheckStatus::Pass;
  }
  return any_pass ? CheckStatus::Pass : CheckStatus::Skip;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"t1", "t2", "t5", "t8", "locking", "pivots"};
  return ids;
}

Network expanded_with(const Network& net, const Expansion& x, const Clutter& r) {
  Network h = expand(net, x).network;
  std::vector<std::vector<NodeId>> names;
  for (const Member& m : r.members) names.push_back(net.member_names(m));
  return h.with_clutter(h.make_clutter(names));
}

namespace {

std::vector<int> crossing_columns(const Network& h, const std::vector<TPath>& cols, const Member& a) {
  std::vector<int> out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const bool f = std::binary_search(a.begin(), a.end(), cols[c].front());
    const bool b = std::binary_search(a.begin(), a.end(), cols[c].back());
    if (f != b) out.push_back(static_cast<int>(c));
  }
  (void)h;
  return out;
}

long long lambda_total(const Network& h) {
  long long s = 0;
  for (int t : h.terminals()) s += lambda(h, t);
  return s;
}

std::vector<Member> proper_subsets(const Network& h) {
  const auto& ts = h.terminals();
  std::vector<Member> out;
  const std::size_t k = ts.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    Member a;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) a.push_back(ts[i]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::string names_of(const Network& net, const Member& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + net.graph().name(m[i]);
  return s + "}";
}

CheckLine line(std::string anchor, bool ok, std::string detail) {
  return {std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckLine skip(std::string anchor, std::string why) { return {std::move(anchor), CheckStatus::Skip, std::move(why)}; }

// --- suites -----------------------------------------------------------------

void suite_t1(const Network& net, const CheckOptions& o, SuiteReport& rep) {
  const Rational eta = solve_strong(net, Mode::Integer, o.solver).objective;
  const Rational eta_fr = solve_strong(net, Mode::Fractional, o.solver).objective;
  const Rational th = solve_weak(net, Mode::Integer, o.solver).objective;
  const Rational th_fr = solve_weak(net, Mode::Fractional, o.solver).objective;
  {
    const bool ok = eta <= th && th <= th_fr && eta <= eta_fr;
    rep.lines.push_back(line("relaxation chain", ok,
                             "eta=" + to_string(eta) + " theta=" + to_string(th) + " thetaFR=" + to_string(th_fr) +
                                 " etaFR=" + to_string(eta_fr)));
  }
  try {
    SolveResult c = common_solution(net, o.solver);
    const FlowCounts fc = count_classes(net, c.witness);
    const bool ok = fc.theta() == th && fc.strong == eta;
    rep.lines.push_back(line("common solution", ok,
                             "Theta(f)=" + to_string(fc.theta()) + " f[S]=" + to_string(fc.strong)));
  } catch (const TheoremViolation& e) {
    rep.lines.push_back(line("common solution", false, e.what()));
  }
}

void suite_t2(const Network& net, const CheckOptions& o, SuiteReport& rep) {
  if (!is_flat(net.clutter())) {
    rep.lines.push_back(skip("extension monotonicity", "network is not flat"));
    return;
  }
  const Rational eta = solve_strong(net, Mode::Integer, o.solver).objective;
  std::size_t pairs = 0;
  std::string bad;
  for (const Expansion& x : enumerate_expansions(net, o.expansions)) {
    for (const Clutter& r : enumerate_flat_extensions(net.clutter())) {
      ++pairs;
      const Rational v = solve_strong(expanded_with(net, x, r), Mode::Integer, o.solver).objective;
      if (v < eta && bad.empty()) bad = "eta drops to " + to_string(v) + " at some (R, X)";
    }
  }
  rep.lines.push_back(line("extension monotonicity", bad.empty(),
                           bad.empty() ? std::to_string(pairs) + " (R, X) pairs, eta=" + to_string(eta) : bad));
}

void suite_t5(const Network& net, const CheckOptions& o, SuiteReport& rep) {
  if (!is_flat(net.clutter())) {
    rep.lines.push_back(skip("certificate upper bound", "network is not flat"));
    rep.lines.push_back(skip("certificate equality", "network is not flat"));
    return;
  }
  SolveResult strong = solve_strong(net, Mode::Integer, o.solver);
  const Rational eta = strong.objective;
  std::size_t pairs = 0;
  std::string bad;
  auto exts = enumerate_flat_extensions(net.clutter());
  for (const Expansion& x : enumerate_expansions(net, o.expansions)) {
    for (const Clutter& r : exts) {
      ++pairs;
      const Rational v = phi(net, x, r);
      if (v < eta && bad.empty()) bad = "phi=" + to_string(v) + " below eta=" + to_string(eta);
    }
  }
  rep.lines.push_back(line("certificate upper bound", bad.empty(),
                           bad.empty() ? std::to_string(pairs) + " (R, X) pairs" : bad));
  if (!integrality(net, o.solver)) {
    rep.lines.push_back(skip("certificate equality", "network is not integral"));
    return;
  }
  CertificateSearch cs = search_certificate(net, o.expansions);
  VerificationReport vr = verify_certificate(net, cs.certificate, eta, &strong.witness);
  std::string detail = "min phi=" + to_string(cs.min_value) + " eta=" + to_string(eta);
  for (const auto& f : vr.failures()) detail += "; " + f;
  rep.lines.push_back(line("certificate equality", cs.min_value == eta && vr.accepted(), detail));
}

void suite_t8(const Network& net, const CheckOptions& o, SuiteReport& rep) {
  if (!is_simple(net.clutter())) {
    for (const char* a : {"weak max-min", "inequality chain", "dual solution"}) {
      rep.lines.push_back(skip(a, "clutter is not simple"));
    }
    return;
  }
  const Rational th = solve_weak(net, Mode::Integer, o.solver).objective;
  const Rational th_fr = solve_weak(net, Mode::Fractional, o.solver).objective;
  std::optional<Rational> best;
  std::size_t count = 0;
  std::string bad;
  for (const Expansion& x : enumerate_expansions(net, o.expansions)) {
    ++count;
    const Rational w = weak_dual_value(net, x);
    const Rational tx = expanded_weak_value(net, x, o.solver);
    if (!best || w < *best) best = w;
    if (bad.empty() && !(th <= th_fr && th_fr <= tx && tx <= w)) {
      bad = "chain breaks: theta=" + to_string(th) + " thetaFR=" + to_string(th_fr) + " thetaX=" + to_string(tx) +
            " bound=" + to_string(w);
    }
  }
  rep.lines.push_back(line("weak max-min", best && *best == th_fr,
                           "thetaFR=" + to_string(th_fr) + " min bound=" + (best ? to_string(*best) : "none")));
  rep.lines.push_back(line("inequality chain", bad.empty(),
                           bad.empty() ? std::to_string(count) + " expansions" : bad));
  try {
    MinimalDual md = minimal_dual_solution(net, o.solver);
    const Rational w = weak_dual_value(net, md.expansion);
    CriticalityReport cr = check_criticality(net, md.expansion, o.solver);
    std::string detail = "bound=" + to_string(w) + " thetaX=" + to_string(cr.theta_x);
    for (const auto& s : cr.flat_neighbours) detail += "; not critical at " + s;
    rep.lines.push_back(line("dual solution", w == th_fr && cr.theta_x == th_fr && cr.critical, detail));
  } catch (const TheoremViolation& e) {
    rep.lines.push_back(line("dual solution", false, e.what()));
  }
}

void suite_locking(const Network& net, const CheckOptions& o, SuiteReport& rep) {
  if (!is_simple(net.clutter())) {
    for (const char* a : {"saturation", "locking clutter", "augmenting sequences"}) {
      rep.lines.push_back(skip(a, "clutter is not simple"));
    }
    return;
  }
  MinimalDual md = minimal_dual_solution(net, o.solver);
  Network h = expand(net, md.expansion).network;
  std::vector<Member> blocks;
  for (int t : h.terminals()) blocks.push_back({t});
  rep.lines.push_back(line("saturation", locking_optimum(h, blocks, o.solver).has_value(),
                           "weak optimum locking every block"));
  std::vector<Member> all = blocks;
  for (const Member& m : h.clutter().members) all.push_back(m);
  rep.lines.push_back(line("locking clutter", locking_optimum(h, all, o.solver).has_value(),
                           "weak optimum locking every block and every clutter member"));
  AugmentingAudit a = audit_augmenting_sequences(h, o.solver, o.max_optima);
  if (a.flows == 0) {
    rep.lines.push_back(skip("augmenting sequences", "no integer weak optimum is maximum and covers every edge"));
  } else {
    std::string detail = std::to_string(a.flows) + " flows, " + std::to_string(a.subsets) + " subsets";
    if (!a.complete) detail += " (optimum cap reached)";
    for (const auto& m : a.mismatches) detail += "; " + m;
    rep.lines.push_back(line("augmenting sequences", a.mismatches.empty(), detail));
  }
}

void suite_pivots(const Network& net, const CheckOptions& o, SuiteReport& rep) {
  if (!is_simple(net.clutter())) {
    rep.lines.push_back(skip("pivot containment", "clutter is not simple"));
    return;
  }
  MinimalDual md = minimal_dual_solution(net, o.solver);
  PivotAudit p = audit_pivots(net, md.expansion, o.solver);
  if (!p.qualifying) {
    rep.lines.push_back(skip("pivot containment", "integer weak optimum of the expanded network is not fractional-optimal"));
    return;
  }
  std::string detail = std::to_string(p.tridents) + " tridents";
  for (const auto& s : p.outside) detail += "; pivot " + s + " outside the blocks";
  rep.lines.push_back(line("pivot containment", p.outside.empty(), detail));
}

}  // namespace

std::optional<Multiflow> locking_optimum(const Network& h, const std::vector<Member>& sets, const SolverLimits& limits) {
  WeakLp cols = weak_lp_columns(h, limits);
  const std::size_t n = cols.columns.size();
  LpProblem lp;
  lp.objective.assign(n, Rational(0));
  const int m = h.graph().edge_count();
  for (int e = 0; e < m; ++e) {
    LpRow row;
    row.coeffs.assign(n, Rational(0));
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (std::count(cols.columns[c].edges.begin(), cols.columns[c].edges.end(), e)) {
        row.coeffs[c] = 1;
        any = true;
      }
    }
    if (!any) continue;
    row.rhs = 1;
    lp.rows.push_back(std::move(row));
  }
  {
    LpProblem opt = lp;
    opt.objective = cols.objective;
    const Rational th = n == 0 ? Rational(0) : solve_lp(opt).value;
    LpRow row;
    row.coeffs = cols.objective;
    row.sense = Sense::GreaterEq;
    row.rhs = th;
    lp.rows.push_back(std::move(row));
  }
  for (const Member& a : sets) {
    LpRow row;
    row.coeffs.assign(n, Rational(0));
    for (int c : crossing_columns(h, cols.columns, a)) row.coeffs[static_cast<std::size_t>(c)] = 1;
    row.sense = Sense::Equal;
    row.rhs = lambda_or_zero(h, a);
    lp.rows.push_back(std::move(row));
  }
  if (n == 0) {
    for (const LpRow& r : lp.rows) {
      if (r.rhs != 0) return std::nullopt;
    }
    return Multiflow{};
  }
  LpSolution s = solve_lp(lp);
  if (s.status != LpStatus::Optimal) return std::nullopt;
  Multiflow f;
  for (std::size_t c = 0; c < n; ++c) {
    if (s.x[c] > 0) f.add(cols.columns[c], s.x[c]);
  }
  return f;
}

AugmentingAudit audit_augmenting_sequences(const Network& h, const SolverLimits& limits, std::size_t max_optima) {
  AugmentingAudit audit;
  const Rational th_fr = solve_weak(h, Mode::Fractional, limits).objective;
  const long long total = lambda_total(h);
  auto paths = enumerate_paths(h, limits);
  PackingProblem pb;
  pb.edge_count = h.graph().edge_count();
  const long long scale = pb.edge_count + 1;
  for (const TPath& p : paths) {
    pb.paths.push_back(p.edges);
    pb.weights.push_back(doubled_theta_weight(h, p) * scale + 1);
  }
  auto subsets = proper_subsets(h);
  audit.complete = for_each_optimal_packing(
      pb,
      [&](const std::vector<int>& chosen) {
        Multiflow f = to_multiflow(paths, chosen);
        if (theta(h, f) != th_fr || f.size() * 2 != Rational(static_cast<long>(total))) return;
        for (const Rational& u : f.edge_usage(h.graph())) {
          if (u == 0) return;
        }
        ++audit.flows;
        for (const Member& a : subsets) {
          ++audit.subsets;
          auto seq = find_augmenting_sequence(h, f, a);
          const bool locked = locks(h, f, a);
          if (seq.has_value() == locked && audit.mismatches.size() < 5) {
            audit.mismatches.push_back("subset " + names_of(h, a) + (locked ? " locked but augmentable" : " unlocked without a sequence"));
          }
          if (seq && !is_augmenting_sequence(h, *seq, a) && audit.mismatches.size() < 5) {
            audit.mismatches.push_back("subset " + names_of(h, a) + ": malformed sequence");
          }
        }
      },
      max_optima);
  return audit;
}

PivotAudit audit_pivots(const Network& net, const Expansion& x, const SolverLimits& limits) {
  PivotAudit audit;
  ExpandedNetwork ex = expand(net, x);
  const Network& h = ex.network;
  SolveResult sol = maximum_weak_solution(h, limits);
  const Rational th_fr = solve_weak(h, Mode::Fractional, limits).objective;
  audit.qualifying = sol.objective == th_fr && sol.witness.size() * 2 == Rational(static_cast<long>(lambda_total(h)));
  if (!audit.qualifying) return audit;
  auto tridents = detect_tridents(h, sol.witness);
  audit.tridents = tridents.size();
  for (const Trident& t : tridents) {
    const NodeId& name = h.graph().name(t.pivot);
    const int v = net.graph().node_index(name);
    if (x.owner()[static_cast<std::size_t>(v)] < 0) audit.outside.push_back(name);
  }
  return audit;
}

SuiteReport run_suite(const Network& net, std::string_view id, const CheckOptions& opts) {
  SuiteReport rep;
  rep.id = std::string(id);
  if (id == "t1") suite_t1(net, opts, rep);
  else if (id == "t2") suite_t2(net, opts, rep);
  else if (id == "t5") suite_t5(net, opts, rep);
  else if (id == "t8") suite_t8(net, opts, rep);
  else if (id == "locking") suite_locking(net, opts, rep);
  else if (id == "pivots") suite_pivots(net, opts, rep);
  else throw PreconditionError("unknown suite '" + std::string(id) + "'");
  return rep;
}

}  // namespace pathpack

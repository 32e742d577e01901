#include "pathpack/dual.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <exception>
#include <set>
#include <tuple>

#include "pathpack/cuts.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/lp.hpp"

namespace pathpack {

ExpansionLimits ExpansionLimits::from_env() {
  ExpansionLimits l;
  if (const char* v = std::getenv("PATHPACK_MAX_EXPANSIONS")) l.max_expansions = std::stoul(v);
  return l;
}

namespace {

int cover_in(const Clutter& k, int u, int v) {
  int n = 0;
  for (const Member& m : k.members) {
    if (std::binary_search(m.begin(), m.end(), u) && std::binary_search(m.begin(), m.end(), v)) ++n;
  }
  return n;
}

void require_terminals(const Network& net, const Clutter& k, const char* which) {
  for (const Member& m : k.members) {
    for (int v : m) {
      if (v < 0 || v >= net.graph().node_count() || !net.is_terminal(v)) {
        throw PreconditionError(std::string(which) + " clutter mentions a node outside the terminal set");
      }
    }
  }
}

std::array<NodeId, 2> pair_names(const Network& net, const Member& m) {
  return {net.graph().name(m[0]), net.graph().name(m[1])};
}

}  // namespace

bool clutter_extends(const Network& net, const Clutter& k1, const Clutter& k2) {
  require_terminals(net, k1, "first");
  require_terminals(net, k2, "second");
  const auto& ts = net.terminals();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (cover_in(k1, ts[i], ts[j]) == 0 && cover_in(k2, ts[i], ts[j]) != 0) return false;
    }
  }
  return true;
}

std::vector<Clutter> enumerate_flat_extensions(const Clutter& k) {
  if (!is_flat(k)) throw PreconditionError("flat extensions need a flat clutter");
  const std::size_t n = k.members.size();
  if (n > 20) throw BoundExceeded("clutter has " + std::to_string(n) + " members, extension cap is 20");
  std::vector<Clutter> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Clutter c;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) c.members.push_back(k.members[i]);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Clutter& a, const Clutter& b) { return a.members < b.members; });
  return out;
}

std::size_t count_expansions(const Network& net, int max_inner) {
  const int inner = net.graph().node_count() - net.terminal_count();
  const int cap = max_inner < 0 ? inner : std::min(max_inner, inner);
  const auto t = static_cast<long double>(net.terminal_count());
  long double total = 0;
  long double binom = 1;
  for (int j = 0; j <= cap; ++j) {
    if (j > 0) binom = binom * (inner - j + 1) / j;
    long double term = binom;
    for (int i = 0; i < j; ++i) term *= t;
    total += term;
  }
  if (total > 1e18L) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(total + 0.5L);
}

std::vector<Expansion> enumerate_expansions(const Network& net, const ExpansionLimits& limits) {
  const std::size_t total = count_expansions(net, limits.max_inner);
  if (total > limits.max_expansions) {
    throw BoundExceeded("network has " + (total == static_cast<std::size_t>(-1) ? std::string("too many")
                                                                                 : std::to_string(total)) +
                        " expansions, cap is " + std::to_string(limits.max_expansions));
  }
  const Multigraph& g = net.graph();
  std::vector<int> inner;
  for (int v = 0; v < g.node_count(); ++v) {
    if (!net.is_terminal(v)) inner.push_back(v);
  }
  const int cap = limits.max_inner < 0 ? static_cast<int>(inner.size()) : limits.max_inner;
  std::vector<int> owner(static_cast<std::size_t>(g.node_count()), -1);
  for (int t : net.terminals()) owner[static_cast<std::size_t>(t)] = net.terminal_position(t);

  std::vector<Expansion> out;
  out.reserve(total);
  auto rec = [&](auto&& self, std::size_t i, int assigned) -> void {
    if (i == inner.size()) {
      out.push_back(Expansion::from_owner(net, owner));
      return;
    }
    int& slot = owner[static_cast<std::size_t>(inner[i])];
    slot = -1;
    self(self, i + 1, assigned);
    if (assigned < cap) {
      for (int p = 0; p < net.terminal_count(); ++p) {
        slot = p;
        self(self, i + 1, assigned + 1);
      }
    }
    slot = -1;
  };
  rec(rec, 0, 0);
  return out;
}

int lambda_or_zero(const Network& net, std::span<const int> terminal_subset) {
  if (static_cast<int>(terminal_subset.size()) == net.terminal_count()) return 0;
  return lambda(net, terminal_subset);
}

Rational beta_or_full(const Network& net, std::span<const int> terminal_subset) {
  long long sum = 0;
  for (int t : terminal_subset) sum += lambda(net, t);
  return make_rational(sum - lambda_or_zero(net, terminal_subset), 2);
}

// ---------------------------------------------------------------------------
// Gamma and phi

namespace {

// Per-expansion quantities that do not depend on R.
struct ExpandedCuts {
  std::vector<int> lambda_values;              // per terminal position
  std::map<Member, Rational> beta_of_member;   // keyed by original indices
};

ExpandedCuts expanded_cuts(const Network& net, const Expansion& x, const std::vector<Member>& members) {
  ExpandedNetwork ex = expand(net, x);
  const Network& h = ex.network;
  ExpandedCuts out;
  for (int t : h.terminals()) out.lambda_values.push_back(lambda(h, t));
  for (const Member& m : members) {
    if (out.beta_of_member.count(m)) continue;
    std::vector<int> mapped;
    long long sum = 0;
    for (int v : m) {
      const int w = ex.node_map[static_cast<std::size_t>(v)];
      mapped.push_back(w);
      sum += out.lambda_values[static_cast<std::size_t>(h.terminal_position(w))];
    }
    std::sort(mapped.begin(), mapped.end());
    out.beta_of_member.emplace(m, make_rational(sum - lambda_or_zero(h, mapped), 2));
  }
  return out;
}

GammaGraph gamma_from(const Network& net, const Clutter& r, const ExpandedCuts& cuts) {
  GammaGraph g;
  g.block_count = net.terminal_count();
  for (const Member& m : r.members) g.edges.push_back({m, cuts.beta_of_member.at(m)});
  return g;
}

void require_flat_extension(const Network& net, const Clutter& r) {
  require_terminals(net, r, "extension");
  if (!is_flat(r)) throw PreconditionError("extension clutter is not flat");
  if (!clutter_extends(net, net.clutter(), r)) throw PreconditionError("clutter does not extend the network clutter");
}

PhiBreakdown breakdown_from(const Network& net, const Clutter& r, const ExpandedCuts& cuts) {
  PhiBreakdown b;
  b.lambda_values = cuts.lambda_values;
  long long sum = 0;
  for (int l : cuts.lambda_values) sum += l;
  b.half_lambda_sum = make_rational(sum, 2);
  GammaGraph gamma = gamma_from(net, r, cuts);
  b.beta_sum = 0;
  for (const GammaEdge& e : gamma.edges) {
    b.beta_values.push_back(e.mul);
    b.beta_sum += e.mul;
  }
  b.line_graph = line_graph_instance(net, gamma);
  b.matching = max_b_matching(b.line_graph);
  b.value = b.half_lambda_sum - b.beta_sum + Rational(static_cast<long>(b.matching.value));
  return b;
}

}  // namespace

GammaGraph build_gamma(const Network& net, const Expansion& x, const Clutter& r) {
  require_flat_extension(net, r);
  return gamma_from(net, r, expanded_cuts(net, x, r.members));
}

BMatchingInstance line_graph_instance(const Network& net, const GammaGraph& gamma) {
  BMatchingInstance inst;
  inst.vertex_count = static_cast<int>(gamma.edges.size());
  for (const GammaEdge& e : gamma.edges) {
    inst.b.push_back(e.mul);
    std::string label = "{";
    for (std::size_t i = 0; i < e.pair.size(); ++i) label += (i ? "," : "") + net.graph().name(e.pair[i]);
    inst.labels.push_back(label + "}");
  }
  for (int i = 0; i < inst.vertex_count; ++i) {
    for (int j = i + 1; j < inst.vertex_count; ++j) {
      const Member& a = gamma.edges[static_cast<std::size_t>(i)].pair;
      const Member& b = gamma.edges[static_cast<std::size_t>(j)].pair;
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) inst.edges.emplace_back(i, j);
    }
  }
  return inst;
}

PhiBreakdown phi_breakdown(const Network& net, const Expansion& x, const Clutter& r) {
  require_flat_extension(net, r);
  return breakdown_from(net, r, expanded_cuts(net, x, r.members));
}

Rational phi(const Network& net, const Expansion& x, const Clutter& r) { return phi_breakdown(net, x, r).value; }

Certificate make_certificate(const Network& net, const Expansion& x, const Clutter& r) {
  PhiBreakdown b = phi_breakdown(net, x, r);
  const Multigraph& g = net.graph();
  Certificate c;
  for (const Member& m : r.members) c.extension.push_back(pair_names(net, m));
  c.expansion = x.named_blocks(net);
  for (int i = 0; i < net.terminal_count(); ++i) {
    c.lambda_values[g.name(net.terminals()[static_cast<std::size_t>(i)])] = b.lambda_values[static_cast<std::size_t>(i)];
  }
  for (std::size_t i = 0; i < r.members.size(); ++i) c.beta_values[pair_names(net, r.members[i])] = b.beta_values[i];
  for (std::size_t k = 0; k < b.line_graph.edges.size(); ++k) {
    if (b.matching.multiplicity[k] == 0) continue;
    auto [u, v] = b.line_graph.edges[k];
    c.matching.push_back({pair_names(net, r.members[static_cast<std::size_t>(u)]),
                          pair_names(net, r.members[static_cast<std::size_t>(v)]), b.matching.multiplicity[k]});
  }
  c.value = b.value;
  return c;
}

// ---------------------------------------------------------------------------
// Certificate search

namespace {

struct Best {
  Rational value;
  std::size_t r = 0;
  std::size_t x = 0;
  bool set = false;

  bool improves(const Rational& v, std::size_t ri, std::size_t xi) const {
    if (!set) return true;
    return std::tie(v, ri, xi) < std::tie(value, r, x);
  }
};

Best best_for_expansion(const Network& net, const Expansion& x, std::size_t xi, const std::vector<Clutter>& exts) {
  ExpandedCuts cuts = expanded_cuts(net, x, net.clutter().members);
  Best best;
  for (std::size_t ri = 0; ri < exts.size(); ++ri) {
    Rational v = breakdown_from(net, exts[ri], cuts).value;
    if (best.improves(v, ri, xi)) best = {v, ri, xi, true};
  }
  return best;
}

CertificateSearch finish(const Network& net, const std::vector<Expansion>& xs, const std::vector<Clutter>& exts,
                         const Best& best) {
  CertificateSearch out;
  out.extension = exts[best.r];
  out.expansion = xs[best.x];
  out.min_value = best.value;
  out.certificate = make_certificate(net, out.expansion, out.extension);
  out.evaluated = xs.size() * exts.size();
  return out;
}

void require_flat_network(const Network& net) {
  if (!is_flat(net.clutter())) throw PreconditionError("certificate search needs a flat network");
}

}  // namespace

CertificateSearch search_certificate_serial(const Network& net, const ExpansionLimits& limits) {
  require_flat_network(net);
  auto exts = enumerate_flat_extensions(net.clutter());
  auto xs = enumerate_expansions(net, limits);
  Best best;
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    Best b = best_for_expansion(net, xs[xi], xi, exts);
    if (best.improves(b.value, b.r, b.x)) best = b;
  }
  return finish(net, xs, exts, best);
}

CertificateSearch search_certificate(const Network& net, const ExpansionLimits& limits) {
  require_flat_network(net);
  auto exts = enumerate_flat_extensions(net.clutter());
  auto xs = enumerate_expansions(net, limits);
  const auto n = static_cast<long long>(xs.size());
  std::vector<Best> per(xs.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      per[static_cast<std::size_t>(i)] = best_for_expansion(net, xs[static_cast<std::size_t>(i)],
                                                            static_cast<std::size_t>(i), exts);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  Best best;
  for (const Best& b : per) {
    if (best.improves(b.value, b.r, b.x)) best = b;
  }
  return finish(net, xs, exts, best);
}

// ---------------------------------------------------------------------------
// Verification

bool VerificationReport::accepted() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const CheckResult& c : checks) {
    if (!c.passed) out.push_back(c.name + ": " + c.detail);
  }
  return out;
}

namespace {

std::string pair_text(const std::array<NodeId, 2>& p) { return "{" + p[0] + "," + p[1] + "}"; }

std::array<NodeId, 2> sorted_pair(std::array<NodeId, 2> p) {
  if (p[1] < p[0]) std::swap(p[0], p[1]);
  return p;
}

}  // namespace

VerificationReport verify_certificate(const Network& net, const Certificate& cert, const Rational& claimed_eta,
                                      const Multiflow* packing) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, ok && detail.empty() ? "ok" : std::move(detail)});
    return ok;
  };
  const Multigraph& g = net.graph();

  add("network-flat", is_flat(net.clutter()), is_flat(net.clutter()) ? "" : "network clutter is not flat");

  // Extension R: pairs of K, named by terminals.
  Clutter r;
  bool r_ok = true;
  {
    std::string why;
    std::set<Member> seen;
    for (const auto& p : cert.extension) {
      auto a = g.find_node(p[0]);
      auto b = g.find_node(p[1]);
      if (!a || !b || !net.is_terminal(*a) || !net.is_terminal(*b) || *a == *b) {
        why = "pair " + pair_text(p) + " is not a pair of distinct terminals";
        break;
      }
      Member m{std::min(*a, *b), std::max(*a, *b)};
      if (!std::binary_search(net.clutter().members.begin(), net.clutter().members.end(), m)) {
        why = "pair " + pair_text(p) + " is not a member of the network clutter";
        break;
      }
      if (!seen.insert(m).second) {
        why = "pair " + pair_text(p) + " is listed twice";
        break;
      }
    }
    r_ok = add("extension", why.empty(), why);
    if (r_ok) r.members.assign(seen.begin(), seen.end());
  }

  // Expansion X: one block per terminal.
  std::optional<Expansion> x;
  {
    std::string why;
    for (int t : net.terminals()) {
      if (!cert.expansion.count(g.name(t))) {
        why = "terminal '" + g.name(t) + "' has no block";
        break;
      }
    }
    if (why.empty()) {
      try {
        x = Expansion::from_blocks(net, cert.expansion);
      } catch (const StructuralError& e) {
        why = e.what();
      }
    }
    add("expansion", why.empty(), why);
  }

  const bool inputs_ok = r_ok && x.has_value();
  std::optional<PhiBreakdown> b;
  if (inputs_ok) {
    try {
      b = phi_breakdown(net, *x, r);
    } catch (const std::exception& e) {
      add("recomputation", false, e.what());
    }
  }
  if (!b) {
    for (const char* name : {"lambda", "beta", "matching-feasible", "matching-maximum", "value", "upper-bound"}) {
      add(name, false, "not recomputable from the certificate");
    }
  } else {
    rep.recomputed = true;
    rep.recomputed_value = b->value;

    {
      std::string why;
      if (cert.lambda_values.size() != static_cast<std::size_t>(net.terminal_count())) {
        why = "expected one value per terminal";
      }
      for (int i = 0; why.empty() && i < net.terminal_count(); ++i) {
        const NodeId& t = g.name(net.terminals()[static_cast<std::size_t>(i)]);
        auto it = cert.lambda_values.find(t);
        const long long want = b->lambda_values[static_cast<std::size_t>(i)];
        if (it == cert.lambda_values.end()) why = "missing value for '" + t + "'";
        else if (it->second != want) {
          why = "lambda of block '" + t + "' is " + std::to_string(want) + ", certificate says " +
                std::to_string(it->second);
        }
      }
      add("lambda", why.empty(), why);
    }

    std::map<std::array<NodeId, 2>, Rational> beta_by_pair;
    for (std::size_t i = 0; i < r.members.size(); ++i) beta_by_pair[pair_names(net, r.members[i])] = b->beta_values[i];
    {
      std::string why;
      if (cert.beta_values.size() != beta_by_pair.size()) why = "expected one value per extension pair";
      for (const auto& [p, want] : beta_by_pair) {
        if (!why.empty()) break;
        auto it = cert.beta_values.find(p);
        if (it == cert.beta_values.end()) why = "missing value for " + pair_text(p);
        else if (it->second != want) {
          why = "beta of " + pair_text(p) + " is " + to_string(want) + ", certificate says " + to_string(it->second);
        }
      }
      add("beta", why.empty(), why);
    }

    long long picked = 0;
    {
      std::string why;
      std::map<std::array<NodeId, 2>, std::size_t> index;
      for (std::size_t i = 0; i < r.members.size(); ++i) index[pair_names(net, r.members[i])] = i;
      std::map<std::pair<std::size_t, std::size_t>, long long> mult;
      for (const MatchingPick& mp : cert.matching) {
        auto a = index.find(sorted_pair(mp.first));
        auto c = index.find(sorted_pair(mp.second));
        if (a == index.end() || c == index.end()) {
          why = "pick " + pair_text(mp.first) + "-" + pair_text(mp.second) + " names a pair outside the extension";
          break;
        }
        if (mp.count <= 0) {
          why = "pick " + pair_text(mp.first) + "-" + pair_text(mp.second) + " has non-positive count";
          break;
        }
        auto key = std::minmax(a->second, c->second);
        if (mult.count(key)) {
          why = "pick " + pair_text(mp.first) + "-" + pair_text(mp.second) + " is listed twice";
          break;
        }
        mult[key] = mp.count;
        picked += mp.count;
      }
      std::vector<long long> multiplicity(b->line_graph.edges.size(), 0);
      if (why.empty()) {
        for (std::size_t k = 0; k < b->line_graph.edges.size(); ++k) {
          auto [u, v] = b->line_graph.edges[k];
          auto it = mult.find({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
          if (it != mult.end()) {
            multiplicity[k] = it->second;
            mult.erase(it);
          }
        }
        if (!mult.empty()) why = "a pick joins two pairs without a common terminal";
        else if (!is_feasible_b_matching(b->line_graph, multiplicity)) why = "picks exceed some beta multiplicity";
      }
      add("matching-feasible", why.empty(), why);
    }
    add("matching-maximum", picked == b->matching.value,
        picked == b->matching.value ? ""
                                    : "picks total " + std::to_string(picked) + ", maximum b-matching is " +
                                          std::to_string(b->matching.value));
    add("value", cert.value == b->value,
        cert.value == b->value ? "" : "phi is " + to_string(b->value) + ", certificate says " + to_string(cert.value));
    add("upper-bound", claimed_eta <= b->value,
        claimed_eta <= b->value ? ""
                                : "claimed " + to_string(claimed_eta) + " exceeds phi " + to_string(b->value));
  }

  if (packing) {
    std::string why;
    try {
      check_multiflow(net, *packing);
    } catch (const PreconditionError& e) {
      why = e.what();
    }
    if (why.empty()) {
      for (const auto& [p, w] : packing->paths()) {
        if (w != 1) {
          why = "path " + to_string(g, p) + " has weight " + to_string(w) + ", packings use weight 1";
          break;
        }
      }
    }
    add("packing", why.empty(), why);
    const Rational s = why.empty() ? count_classes(net, *packing).strong : Rational(-1);
    add("packing-count", why.empty() && s == claimed_eta,
        why.empty() && s == claimed_eta ? ""
                                        : "packing has " + (why.empty() ? to_string(s) : std::string("no valid")) +
                                              " S-paths, claimed " + to_string(claimed_eta));
    const bool eq = rep.recomputed && claimed_eta == rep.recomputed_value;
    add("equality", eq, eq ? "" : "claimed value does not meet phi");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Weak problem duality

Rational weak_dual_value(const Network& net, const Expansion& x) {
  if (!is_simple(net.clutter())) throw PreconditionError("weak dual value needs a simple clutter");
  ExpandedNetwork ex = expand(net, x);
  const Network& h = ex.network;
  long long dsum = 0;
  for (const auto& block : x.blocks()) dsum += cut_degree(net.graph(), block);
  Rational bsum = 0;
  for (const Member& m : h.clutter().members) bsum += beta_or_full(h, m);
  return make_rational(dsum, 2) - bsum / 2;
}

Rational expanded_weak_value(const Network& net, const Expansion& x, const SolverLimits& limits) {
  return solve_weak(expand(net, x).network, Mode::Fractional, limits).objective;
}

MinimalDual minimal_dual_solution(const Network& net, const SolverLimits& limits) {
  if (!is_simple(net.clutter())) throw PreconditionError("minimal dual solution needs a simple clutter");
  const Multigraph& g = net.graph();
  WeakLp cols = weak_lp_columns(net, limits);
  const std::size_t n = cols.columns.size();
  const int m = g.edge_count();

  LpProblem base;
  base.objective.assign(n, Rational(0));
  std::vector<std::vector<int>> users(static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < n; ++c) {
    for (int e : cols.columns[c].edges) users[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
  }
  for (int e = 0; e < m; ++e) {
    if (users[static_cast<std::size_t>(e)].empty()) continue;
    LpRow row;
    row.coeffs.assign(n, Rational(0));
    for (int c : users[static_cast<std::size_t>(e)]) row.coeffs[static_cast<std::size_t>(c)] = 1;
    row.rhs = 1;
    base.rows.push_back(std::move(row));
  }

  MinimalDual out;
  {
    LpProblem lp = base;
    lp.objective = cols.objective;
    out.theta_fr = n == 0 ? Rational(0) : solve_lp(lp).value;
  }
  LpRow optimal;
  optimal.coeffs = cols.objective;
  optimal.sense = Sense::GreaterEq;
  optimal.rhs = out.theta_fr;
  base.rows.push_back(optimal);

  std::vector<char> unsat(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    if (users[static_cast<std::size_t>(e)].empty()) {
      unsat[static_cast<std::size_t>(e)] = 1;
      continue;
    }
    LpProblem lp = base;
    lp.objective.assign(n, Rational(0));
    for (int c : users[static_cast<std::size_t>(e)]) lp.objective[static_cast<std::size_t>(c)] = -1;
    LpSolution s = solve_lp(lp);
    if (s.status != LpStatus::Optimal) throw TheoremViolation("saturation LP has no optimum");
    if (-s.value < 1) unsat[static_cast<std::size_t>(e)] = 1;
  }
  for (int e = 0; e < m; ++e) {
    if (unsat[static_cast<std::size_t>(e)]) out.unsaturated.push_back(e);
  }

  std::vector<int> owner(static_cast<std::size_t>(g.node_count()), -1);
  for (int t : net.terminals()) owner[static_cast<std::size_t>(t)] = net.terminal_position(t);
  std::vector<char> reached_edge(static_cast<std::size_t>(m), 0);
  for (int t : net.terminals()) {
    const int pos = net.terminal_position(t);
    std::deque<int> queue{t};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int e : g.incident(v)) {
        if (!unsat[static_cast<std::size_t>(e)]) continue;
        reached_edge[static_cast<std::size_t>(e)] = 1;
        const int w = g.other_end(e, v);
        int& slot = owner[static_cast<std::size_t>(w)];
        if (slot == pos) continue;
        if (slot != -1) {
          throw TheoremViolation("blocks of '" + g.name(t) + "' and '" +
                                 g.name(net.terminals()[static_cast<std::size_t>(slot)]) + "' meet at '" +
                                 g.name(w) + "'");
        }
        slot = pos;
        queue.push_back(w);
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    if (reached_edge[static_cast<std::size_t>(e)]) out.reachable.push_back(e);
  }
  out.expansion = Expansion::from_owner(net, std::move(owner));
  return out;
}

CriticalityReport check_criticality(const Network& net, const Expansion& x, const SolverLimits& limits) {
  CriticalityReport rep;
  rep.theta_x = expanded_weak_value(net, x, limits);
  const Multigraph& g = net.graph();
  for (int v = 0; v < g.node_count(); ++v) {
    if (x.owner()[static_cast<std::size_t>(v)] != -1) continue;
    for (int p = 0; p < net.terminal_count(); ++p) {
      std::vector<int> owner = x.owner();
      owner[static_cast<std::size_t>(v)] = p;
      Expansion y = Expansion::from_owner(net, std::move(owner));
      if (expanded_weak_value(net, y, limits) <= rep.theta_x) {
        rep.critical = false;
        rep.flat_neighbours.push_back(g.name(v) + " -> " + g.name(net.terminals()[static_cast<std::size_t>(p)]));
      }
    }
  }
  return rep;
}

}  // namespace pathpack

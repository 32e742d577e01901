#include <doctest.h>

#include "oracles.hpp"
#include "pathpack/dual.hpp"
#include "pathpack/io.hpp"
#include "pathpack/solvers.hpp"

using namespace pathpack;

namespace {

// every owner vector, enumerated without the library's expansion code
std::vector<Expansion> all_expansions(const Network& n) {
  std::vector<int> inner;
  std::vector<int> owner(static_cast<std::size_t>(n.graph().node_count()), -1);
  for (int v = 0; v < n.graph().node_count(); ++v) {
    if (n.is_terminal(v)) {
      owner[static_cast<std::size_t>(v)] = n.terminal_position(v);
    } else {
      inner.push_back(v);
    }
  }
  std::vector<Expansion> out;
  const int base = n.terminal_count() + 1;
  long long total = 1;
  for (std::size_t i = 0; i < inner.size(); ++i) total *= base;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int v : inner) {
      owner[static_cast<std::size_t>(v)] = static_cast<int>(c % base) - 1;
      c /= base;
    }
    out.push_back(Expansion::from_owner(n, owner));
  }
  return out;
}

Rational oracle_min_phi(const Network& n) {
  const auto& members = n.clutter().members;
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
    Clutter r;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (mask >> i & 1) r.members.push_back(members[i]);
    }
    for (const auto& x : all_expansions(n)) {
      Rational v = oracle::phi(n, x, r);
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

}  // namespace

TEST_CASE("corpus expectations regenerate from the oracles") {
  for (const char* name : {"parallel3", "path-join", "star4", "triangle"}) {
    CAPTURE(name);
    const std::string file = std::string(PATHPACK_CORPUS_DIR) + "/" + name + ".json";
    Json doc = read_json_file(file);
    REQUIRE(doc.contains("expected"));
    const Json& want = doc["expected"];
    Network n = load_network(file);

    // oracle side
    CHECK(static_cast<long long>(oracle::tpaths(n).size()) == want["paths"].get<long long>());
    CHECK(Rational(static_cast<long>(oracle::eta(n))) == parse_rational(want["eta"].get<std::string>()));
    CHECK(make_rational(oracle::twice_theta(n), 2) == parse_rational(want["theta"].get<std::string>()));
    CHECK(oracle_min_phi(n) == parse_rational(want["min_phi"].get<std::string>()));

    // library side
    CHECK(enumerate_paths(n).size() == want["paths"].get<std::size_t>());
    CHECK(solve_strong(n, Mode::Integer).objective == parse_rational(want["eta"].get<std::string>()));
    CHECK(solve_weak(n, Mode::Integer).objective == parse_rational(want["theta"].get<std::string>()));
    CHECK(solve_weak(n, Mode::Fractional).objective == parse_rational(want["theta_fr"].get<std::string>()));
    CHECK(search_certificate(n).min_value == parse_rational(want["min_phi"].get<std::string>()));
  }
}

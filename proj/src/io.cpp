#include "pathpack/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "pathpack/errors.hpp"

namespace pathpack {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) fail("document", std::string("missing field '") + field + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) fail(at(where, i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

void only_fields(const Json& doc, const std::string& where, std::initializer_list<const char*> allowed) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(where, "unknown field '" + it.key() + "'");
  }
}

Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (!v.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::array<NodeId, 2> pair_field(const Json& v, const std::string& where) {
  auto names = string_list(v, where);
  if (names.size() != 2) fail(where, "expected exactly two terminal ids");
  if (names[1] < names[0]) std::swap(names[0], names[1]);
  return {names[0], names[1]};
}

Json pair_json(const std::array<NodeId, 2>& p) { return Json::array({p[0], p[1]}); }

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << text;
}

// ---------------------------------------------------------------------------
// Networks

RawNetwork parse_network(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  only_fields(doc, "document", {"nodes", "terminals", "edges", "edge_ids", "clutter", "name", "expected"});
  RawNetwork raw;
  raw.nodes = string_list(require(doc, "nodes"), "nodes");
  std::set<NodeId> nodes;
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    if (!nodes.insert(raw.nodes[i]).second) fail(at("nodes", i), "duplicate node id '" + raw.nodes[i] + "'");
  }
  raw.terminals = string_list(require(doc, "terminals"), "terminals");
  std::set<NodeId> terms;
  for (std::size_t i = 0; i < raw.terminals.size(); ++i) {
    if (!nodes.count(raw.terminals[i])) fail(at("terminals", i), "unknown node '" + raw.terminals[i] + "'");
    if (!terms.insert(raw.terminals[i]).second) {
      fail(at("terminals", i), "duplicate terminal '" + raw.terminals[i] + "'");
    }
  }

  const Json& edges = require(doc, "edges");
  if (!edges.is_array()) fail("edges", "expected a list of node pairs");
  std::vector<std::string> ids;
  if (doc.contains("edge_ids")) {
    ids = string_list(doc["edge_ids"], "edge_ids");
    if (ids.size() != edges.size()) fail("edge_ids", "expected one id per edge");
  } else {
    for (std::size_t i = 0; i < edges.size(); ++i) ids.push_back(default_edge_id(i, edges.size()));
  }
  std::set<EdgeId> seen_ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto ends = string_list(edges[i], at("edges", i));
    if (ends.size() != 2) fail(at("edges", i), "expected exactly two node ids");
    for (const auto& n : ends) {
      if (!nodes.count(n)) fail(at("edges", i), "unknown node '" + n + "'");
    }
    if (ends[0] == ends[1]) fail(at("edges", i), "self-loop at '" + ends[0] + "'");
    if (!seen_ids.insert(ids[i]).second) fail(at("edge_ids", i), "duplicate edge id '" + ids[i] + "'");
    raw.edges.push_back({ids[i], ends[0], ends[1]});
  }

  if (doc.contains("clutter")) {
    const Json& k = doc["clutter"];
    if (!k.is_array()) fail("clutter", "expected a list of terminal lists");
    for (std::size_t i = 0; i < k.size(); ++i) {
      auto m = string_list(k[i], at("clutter", i));
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (!terms.count(m[j])) fail(at(at("clutter", i), j), "'" + m[j] + "' is not a terminal");
      }
      raw.clutter.push_back(std::move(m));
    }
  }
  try {
    (void)Network::from_raw(raw);
  } catch (const std::invalid_argument& e) {
    fail("document", e.what());
  }
  return raw;
}

RawNetwork parse_network_text(std::string_view text) { return parse_network(parse_json_text(text)); }

Network load_network(const std::string& path) {
  try {
    return Network::from_raw(parse_network(read_json_file(path)));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + msg);
  }
}

Json network_to_json(const Network& net) {
  const Multigraph& g = net.graph();
  Json doc;
  doc["nodes"] = g.nodes();
  Json terms = Json::array();
  for (int t : net.terminals()) terms.push_back(g.name(t));
  doc["terminals"] = terms;
  Json edges = Json::array();
  Json ids = Json::array();
  bool default_ids = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    edges.push_back(Json::array({g.name(ed.u), g.name(ed.v)}));
    ids.push_back(ed.id);
    default_ids = default_ids && ed.id == default_edge_id(static_cast<std::size_t>(e), static_cast<std::size_t>(g.edge_count()));
  }
  doc["edges"] = edges;
  if (!default_ids) doc["edge_ids"] = ids;
  Json k = Json::array();
  for (const Member& m : net.clutter().members) k.push_back(net.member_names(m));
  doc["clutter"] = k;
  return doc;
}

// ---------------------------------------------------------------------------
// Multiflows

Json multiflow_to_json(const Network& net, const Multiflow& f) {
  const Multigraph& g = net.graph();
  Json paths = Json::array();
  for (const auto& [p, w] : f.paths()) {
    Json entry;
    Json nodes = Json::array();
    for (int v : p.nodes) nodes.push_back(g.name(v));
    Json edges = Json::array();
    for (int e : p.edges) edges.push_back(g.edge(e).id);
    entry["nodes"] = nodes;
    entry["edges"] = edges;
    entry["weight"] = to_string(w);
    paths.push_back(entry);
  }
  Json doc;
  doc["paths"] = paths;
  return doc;
}

Multiflow parse_multiflow(const Network& net, const Json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  const Json& paths = require(doc, "paths");
  if (!paths.is_array()) fail("paths", "expected a list");
  const Multigraph& g = net.graph();
  Multiflow f;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string where = at("paths", i);
    const Json& entry = paths[i];
    if (!entry.is_object()) fail(where, "expected an object");
    only_fields(entry, where, {"nodes", "edges", "weight"});
    if (!entry.contains("nodes")) fail(where, "missing field 'nodes'");
    auto names = string_list(entry["nodes"], where + ".nodes");
    if (names.size() < 2) fail(where + ".nodes", "a path needs at least two nodes");
    std::vector<int> nodes;
    for (const auto& n : names) {
      auto v = g.find_node(n);
      if (!v) fail(where + ".nodes", "unknown node '" + n + "'");
      nodes.push_back(*v);
    }
    TPath p;
    try {
      if (entry.contains("edges")) {
        std::vector<int> edges;
        for (const auto& id : string_list(entry["edges"], where + ".edges")) {
          auto e = g.find_edge(id);
          if (!e) fail(where + ".edges", "unknown edge '" + id + "'");
          edges.push_back(*e);
        }
        p = path_from_edges(g, nodes.front(), edges);
        if (p.nodes != nodes) fail(where, "edges do not follow the node sequence");
      } else {
        p = path_from_nodes(g, nodes);
      }
    } catch (const PreconditionError& e) {
      fail(where, e.what());
    }
    Rational w = entry.contains("weight") ? rational_field(entry["weight"], where + ".weight") : Rational(1);
    if (w <= 0) fail(where + ".weight", "weight must be positive");
    f.add(p, w);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Certificates

Json certificate_to_json(const Certificate& cert) {
  Json doc;
  Json ext = Json::array();
  for (const auto& p : cert.extension) ext.push_back(pair_json(p));
  doc["extension"] = ext;
  Json x = Json::object();
  for (const auto& [t, nodes] : cert.expansion) x[t] = nodes;
  doc["expansion"] = x;
  Json lam = Json::object();
  for (const auto& [t, v] : cert.lambda_values) lam[t] = v;
  doc["lambdaValues"] = lam;
  Json beta = Json::array();
  for (const auto& [p, v] : cert.beta_values) beta.push_back(Json{{"pair", pair_json(p)}, {"value", to_string(v)}});
  doc["betaValues"] = beta;
  Json match = Json::array();
  for (const MatchingPick& m : cert.matching) {
    match.push_back(Json{{"first", pair_json(m.first)}, {"second", pair_json(m.second)}, {"count", m.count}});
  }
  doc["matching"] = match;
  doc["value"] = to_string(cert.value);
  return doc;
}

Certificate parse_certificate(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  only_fields(doc, "document", {"extension", "expansion", "lambdaValues", "betaValues", "matching", "value"});
  Certificate c;
  const Json& ext = require(doc, "extension");
  if (!ext.is_array()) fail("extension", "expected a list of pairs");
  for (std::size_t i = 0; i < ext.size(); ++i) c.extension.push_back(pair_field(ext[i], at("extension", i)));

  const Json& x = require(doc, "expansion");
  if (!x.is_object()) fail("expansion", "expected a mapping from terminal to node list");
  for (auto it = x.begin(); it != x.end(); ++it) c.expansion[it.key()] = string_list(it.value(), "expansion." + it.key());

  const Json& lam = require(doc, "lambdaValues");
  if (!lam.is_object()) fail("lambdaValues", "expected a mapping from terminal to integer");
  for (auto it = lam.begin(); it != lam.end(); ++it) {
    const Rational v = rational_field(it.value(), "lambdaValues." + it.key());
    if (!is_integer(v)) fail("lambdaValues." + it.key(), "expected an integer");
    c.lambda_values[it.key()] = v.get_num().get_si();
  }

  const Json& beta = require(doc, "betaValues");
  if (!beta.is_array()) fail("betaValues", "expected a list of {pair, value}");
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::string where = at("betaValues", i);
    if (!beta[i].is_object() || !beta[i].contains("pair") || !beta[i].contains("value")) {
      fail(where, "expected {\"pair\": [..], \"value\": \"p/q\"}");
    }
    auto p = pair_field(beta[i]["pair"], where + ".pair");
    if (c.beta_values.count(p)) fail(where, "duplicate pair");
    c.beta_values[p] = rational_field(beta[i]["value"], where + ".value");
  }

  const Json& match = require(doc, "matching");
  if (!match.is_array()) fail("matching", "expected a list of picks");
  for (std::size_t i = 0; i < match.size(); ++i) {
    const std::string where = at("matching", i);
    const Json& m = match[i];
    if (!m.is_object() || !m.contains("first") || !m.contains("second") || !m.contains("count")) {
      fail(where, "expected {\"first\", \"second\", \"count\"}");
    }
    if (!m["count"].is_number_integer()) fail(where + ".count", "expected an integer");
    c.matching.push_back({pair_field(m["first"], where + ".first"), pair_field(m["second"], where + ".second"),
                          m["count"].get<long long>()});
  }
  c.value = rational_field(require(doc, "value"), "value");
  return c;
}

}  // namespace pathpack

#pragma once

// JSON documents for networks, multiflows and certificates.

#include <string>
#include <string_view>

#include <json.hpp>

#include "pathpack/dual.hpp"
#include "pathpack/multiflow.hpp"
#include "pathpack/network.hpp"

namespace pathpack {

using Json = nlohmann::ordered_json;

/// Malformed document. The message names the offending field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a network document. Structural problems (unknown endpoint,
/// duplicate id, self-loop) surface as ParseError naming the field.
RawNetwork parse_network(const Json& doc);
RawNetwork parse_network_text(std::string_view text);
Network load_network(const std::string& path);

/// Nodes, terminals and clutter sorted; edges in id order; "edge_ids" only
/// when the ids differ from the default scheme.
Json network_to_json(const Network& net);

Json multiflow_to_json(const Network& net, const Multiflow& f);
/// Paths as node sequences, with optional edge ids and weights ("p/q").
Multiflow parse_multiflow(const Network& net, const Json& doc);

Json certificate_to_json(const Certificate& cert);
Certificate parse_certificate(const Json& doc);

Json parse_json_text(std::string_view text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pathpack

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qwc/mutation.hpp"
#include "qwc/tensor.hpp"

namespace qwc {

inline constexpr int kFormatVersion = 1;

/// Malformed JSON text; the message carries line and column.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// Well-formed JSON that does not follow the document schema; the message
/// names the offending field (e.g. "arrows[2].source").
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A document after syntax and schema checks, before invariant checks.
struct QuiverDocument {
  int format_version = kFormatVersion;
  QuiverDescription description;
  std::map<VertexId, DivisionLabel> labels;
};

QuiverDocument parse_document(std::string_view text);
/// parse_document followed by construction; invariant violations raise
/// InvalidQuiver (disconnectedness is not an error here).
LabeledQuiverWithCycles parse_quiver(std::string_view text);
std::string serialize_quiver(const LabeledQuiverWithCycles& q);

/// Quiver as a DOT digraph; arrows of `cut` (if given) are dashed.
std::string export_dot(const Quiver& q, const Cut* cut = nullptr);
/// One node per cut labelled by its sorted arrow ids. Undirected edges by
/// default, labelled directed edges on request.
std::string export_dot(const MutationGraph& g, const Quiver& q, bool directed = false);
std::string export_json(const MutationGraph& g, const Quiver& q);

std::string format_cut(const Quiver& q, const Cut& c);
/// Comma separated arrow ids, optionally in braces: "d,e" or "{d,e}".
Cut parse_cut(const Quiver& q, std::string_view text);

std::string format_presentation(const TruncatedPresentation& p);
std::string presentation_json(const TruncatedPresentation& p);

/// `TYPE RANK[:orientation]`, e.g. "A3:1<2>3", "F4", "E6:1>2>3<4<5,6>3".
/// Each segment is a chain of vertices joined by '>' (arrow to the right)
/// or '<' (arrow to the left); segments are separated by commas.
LabeledDynkinSpec parse_dynkin_spec(std::string_view text, int split_count = 2);

}  // namespace qwc

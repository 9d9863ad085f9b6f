#include "qwc/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qwc {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

void only_fields(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(where + ": unknown field \"" + key + "\"");
    }
  }
}

const json& required(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string identifier(const json& v, const std::string& where) {
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s.empty()) throw SchemaError(where + ": identifier must not be empty");
    return s;
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw SchemaError(where + ": identifier must be a string or an integer");
}

const json& array_field(const json& obj, const std::string& where, const char* key) {
  const auto& v = required(obj, where, key);
  if (!v.is_array()) throw SchemaError(where + "." + key + ": expected an array");
  return v;
}

DivisionLabel parse_label(const json& v, const std::string& where) {
  only_fields(v, where, {"kind", "split_count"});
  const auto& kind = required(v, where, "kind");
  DivisionLabel label;
  if (kind == "Base") {
    label.kind = DivisionLabel::Kind::Base;
  } else if (kind == "Ext") {
    label.kind = DivisionLabel::Kind::Ext;
  } else {
    throw SchemaError(where + ".kind: expected \"Base\" or \"Ext\"");
  }
  if (auto it = v.find("split_count"); it != v.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) {
      throw SchemaError(where + ".split_count: expected a positive integer");
    }
    label.split_count = it->get<int>();
  }
  return label;
}

ordered_json label_json(const DivisionLabel& l) {
  ordered_json out;
  out["kind"] = to_string(l.kind);
  if (l.kind == DivisionLabel::Kind::Ext || l.split_count != 1) out["split_count"] = l.split_count;
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

QuiverDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann's message carries the line and column; drop its "[json.exception...] " tag
    std::string what = e.what();
    if (auto pos = what.find("] "); pos != std::string::npos) what.erase(0, pos + 2);
    throw SyntaxError(what);
  }
  only_fields(root, "document", {"format_version", "vertices", "arrows", "cycles"});

  QuiverDocument doc;
  const auto& version = required(root, "document", "format_version");
  if (!version.is_number_integer()) throw SchemaError("format_version: expected an integer");
  doc.format_version = version.get<int>();
  if (doc.format_version > kFormatVersion) {
    throw SchemaError("format_version " + std::to_string(doc.format_version) + " is newer than supported version " +
                      std::to_string(kFormatVersion));
  }
  if (doc.format_version < 1) throw SchemaError("format_version must be at least 1");

  std::set<std::string> vertex_ids, arrow_ids;
  const auto& vertices = array_field(root, "document", "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto where = "vertices[" + std::to_string(i) + "]";
    only_fields(vertices[i], where, {"id", "label"});
    const auto id = identifier(required(vertices[i], where, "id"), where + ".id");
    if (!vertex_ids.insert(id).second) throw SchemaError(where + ".id: duplicate vertex id " + id);
    doc.description.vertices.emplace_back(id);
    if (auto it = vertices[i].find("label"); it != vertices[i].end()) {
      doc.labels[VertexId(id)] = parse_label(*it, where + ".label");
    }
  }

  const auto& arrows = array_field(root, "document", "arrows");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto where = "arrows[" + std::to_string(i) + "]";
    only_fields(arrows[i], where, {"id", "source", "target", "label"});
    Arrow a;
    a.id = ArrowId(identifier(required(arrows[i], where, "id"), where + ".id"));
    if (!arrow_ids.insert(a.id.str()).second) throw SchemaError(where + ".id: duplicate arrow id " + a.id.str());
    a.source = VertexId(identifier(required(arrows[i], where, "source"), where + ".source"));
    a.target = VertexId(identifier(required(arrows[i], where, "target"), where + ".target"));
    if (auto it = arrows[i].find("label"); it != arrows[i].end()) {
      if (!it->is_string()) throw SchemaError(where + ".label: expected a string");
      a.label = it->get<std::string>();
    }
    doc.description.arrows.push_back(std::move(a));
  }

  if (root.contains("cycles")) {
    const auto& cycles = array_field(root, "document", "cycles");
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto where = "cycles[" + std::to_string(i) + "]";
      only_fields(cycles[i], where, {"arrows", "sign"});
      CycleSpec c;
      const auto& list = array_field(cycles[i], where, "arrows");
      for (std::size_t k = 0; k < list.size(); ++k) {
        c.arrows.emplace_back(identifier(list[k], where + ".arrows[" + std::to_string(k) + "]"));
      }
      if (auto it = cycles[i].find("sign"); it != cycles[i].end()) {
        if (!it->is_number_integer() || (it->get<long long>() != 1 && it->get<long long>() != -1)) {
          throw SchemaError(where + ".sign: expected 1 or -1");
        }
        c.sign = it->get<int>();
      }
      doc.description.cycles.push_back(std::move(c));
    }
  }
  return doc;
}

LabeledQuiverWithCycles parse_quiver(std::string_view text) {
  const auto doc = parse_document(text);
  LabeledQuiverWithCycles out;
  out.qwc = QuiverWithCycles::from_description(doc.description);
  for (const auto& v : out.qwc.quiver().vertices()) {
    auto it = doc.labels.find(v);
    out.labels.push_back(it == doc.labels.end() ? std::nullopt : std::optional<DivisionLabel>(it->second));
  }
  return out;
}

std::string serialize_quiver(const LabeledQuiverWithCycles& q) {
  const auto& quiver = q.qwc.quiver();
  ordered_json root;
  root["format_version"] = kFormatVersion;
  root["vertices"] = ordered_json::array();
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    ordered_json entry;
    entry["id"] = quiver.vertex(v).str();
    if (v < q.labels.size() && q.labels[v]) entry["label"] = label_json(*q.labels[v]);
    root["vertices"].push_back(std::move(entry));
  }
  root["arrows"] = ordered_json::array();
  for (const auto& a : quiver.arrows()) {
    ordered_json entry;
    entry["id"] = a.id.str();
    entry["source"] = a.source.str();
    entry["target"] = a.target.str();
    if (a.label) entry["label"] = *a.label;
    root["arrows"].push_back(std::move(entry));
  }
  root["cycles"] = ordered_json::array();
  for (const auto& c : q.qwc.cycles()) {
    ordered_json entry;
    entry["arrows"] = ordered_json::array();
    for (auto a : c.arrows) entry["arrows"].push_back(quiver.arrow(a).id.str());
    if (c.sign) entry["sign"] = *c.sign;
    root["cycles"].push_back(std::move(entry));
  }
  return root.dump(2) + "\n";
}

std::string export_dot(const Quiver& q, const Cut* cut) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices()) os << "  " << dot_quote(v.str()) << ";\n";
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    os << "  " << dot_quote(arrow.source.str()) << " -> " << dot_quote(arrow.target.str()) << " [label="
       << dot_quote(arrow.id.str());
    if (cut && cut->contains(a)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_cut(const Quiver& q, const Cut& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += q.arrow(c.arrows()[i]).id.str();
  }
  return out + "}";
}

Cut parse_cut(const Quiver& q, std::string_view text) {
  auto body = trim(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = trim(std::string_view(body).substr(1, body.size() - 2));
  std::vector<ArrowId> ids;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = trim(item);
    if (id.empty()) continue;
    ids.emplace_back(id);
  }
  return cut_from_ids(q, ids);
}

std::string export_dot(const MutationGraph& g, const Quiver& q, bool directed) {
  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " mutations {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=" << dot_quote(format_cut(q, g.nodes[i])) << "];\n";
  }
  if (directed) {
    for (const auto& e : g.edges) {
      os << "  n" << e.from << " -> n" << e.to << " [label="
         << dot_quote(q.vertex(e.vertex).str() + direction_symbol(e.direction)) << "];\n";
    }
  } else {
    for (auto [a, b] : g.undirected_edges()) os << "  n" << a << " -- n" << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const MutationGraph& g, const Quiver& q) {
  ordered_json root;
  root["nodes"] = ordered_json::array();
  for (const auto& c : g.nodes) {
    ordered_json ids = ordered_json::array();
    for (auto a : c.arrows()) ids.push_back(q.arrow(a).id.str());
    root["nodes"].push_back(std::move(ids));
  }
  root["edges"] = ordered_json::array();
  for (auto [a, b] : g.undirected_edges()) root["edges"].push_back({a, b});
  root["mutations"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json m;
    m["from"] = e.from;
    m["to"] = e.to;
    m["vertex"] = q.vertex(e.vertex).str();
    m["direction"] = std::string(1, direction_symbol(e.direction));
    root["mutations"].push_back(std::move(m));
  }
  return root.dump(2) + "\n";
}

std::string format_presentation(const TruncatedPresentation& p) {
  std::ostringstream os;
  const auto& q = p.truncated_quiver;
  os << "truncated quiver: " << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows\n";
  for (const auto& a : q.arrows()) os << "  " << a.id << ": " << a.source << " -> " << a.target << "\n";
  os << "relations:\n";
  for (const auto& [alpha, terms] : p.relations) {
    os << "  d/d" << alpha << ":";
    for (const auto& t : terms) {
      os << " " << (t.sign ? (*t.sign > 0 ? "+" : "-") : "") << "[";
      for (std::size_t i = 0; i < t.path.size(); ++i) os << (i ? "," : "") << t.path[i];
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

std::string presentation_json(const TruncatedPresentation& p) {
  ordered_json root;
  root["vertices"] = ordered_json::array();
  for (const auto& v : p.truncated_quiver.vertices()) root["vertices"].push_back(v.str());
  root["arrows"] = ordered_json::array();
  for (const auto& a : p.truncated_quiver.arrows()) {
    root["arrows"].push_back({{"id", a.id.str()}, {"source", a.source.str()}, {"target", a.target.str()}});
  }
  root["relations"] = ordered_json::array();
  for (const auto& [alpha, terms] : p.relations) {
    ordered_json r;
    r["arrow"] = alpha.str();
    r["terms"] = ordered_json::array();
    for (const auto& t : terms) {
      ordered_json term;
      if (t.sign) term["sign"] = *t.sign;
      term["path"] = ordered_json::array();
      for (const auto& a : t.path) term["path"].push_back(a.str());
      r["terms"].push_back(std::move(term));
    }
    root["relations"].push_back(std::move(r));
  }
  return root.dump(2) + "\n";
}

LabeledDynkinSpec parse_dynkin_spec(std::string_view text, int split_count) {
  const auto s = trim(text);
  const auto colon = s.find(':');
  const auto head = trim(std::string_view(s).substr(0, colon));
  if (head.empty()) throw PreconditionError("empty Dynkin spec");
  DynkinType type;
  switch (std::toupper(static_cast<unsigned char>(head[0]))) {
    case 'A': type = DynkinType::A; break;
    case 'B': type = DynkinType::B; break;
    case 'C': type = DynkinType::C; break;
    case 'D': type = DynkinType::D; break;
    case 'E': type = DynkinType::E; break;
    case 'F': type = DynkinType::F; break;
    case 'G': type = DynkinType::G; break;
    default: throw PreconditionError("unknown Dynkin type in \"" + s + "\"");
  }
  const auto rank_text = trim(std::string_view(head).substr(1));
  if (rank_text.empty() || !std::all_of(rank_text.begin(), rank_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw PreconditionError("missing or malformed rank in Dynkin spec \"" + s + "\"");
  }
  const int rank = std::stoi(rank_text);
  auto spec = default_dynkin(type, rank, split_count);
  if (colon == std::string::npos) return spec;

  spec.orientation.clear();
  const auto body = std::string(std::string_view(s).substr(colon + 1));
  std::stringstream segments(body);
  std::string segment;
  while (std::getline(segments, segment, ',')) {
    std::size_t i = 0;
    auto read_vertex = [&]() {
      while (i < segment.size() && std::isspace(static_cast<unsigned char>(segment[i]))) ++i;
      const auto start = i;
      while (i < segment.size() && std::isdigit(static_cast<unsigned char>(segment[i]))) ++i;
      if (start == i) throw PreconditionError("malformed orientation \"" + segment + "\"");
      const int v = std::stoi(segment.substr(start, i - start));
      while (i < segment.size() && std::isspace(static_cast<unsigned char>(segment[i]))) ++i;
      return v;
    };
    int prev = read_vertex();
    if (i == segment.size()) throw PreconditionError("orientation segment \"" + segment + "\" has no arrow");
    while (i < segment.size()) {
      const char op = segment[i++];
      if (op != '<' && op != '>') throw PreconditionError("expected '<' or '>' in \"" + segment + "\"");
      const int next = read_vertex();
      if (op == '>') {
        spec.orientation.emplace_back(prev, next);
      } else {
        spec.orientation.emplace_back(next, prev);
      }
      prev = next;
    }
  }
  dynkin_quiver(spec);  // rejects wrong or incomplete orientations
  return spec;
}

}  // namespace qwc

#include "trisect/document.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace trisect {

using nlohmann::json;

namespace {

void require_fields(const json& object, const std::string& where, const std::set<std::string>& required,
                    const std::set<std::string>& optional = {}) {
  if (!object.is_object()) throw DocumentError(where + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    if (!required.count(key) && !optional.count(key)) throw DocumentError(where + ": unknown field \"" + key + "\"");
  }
  for (const auto& key : required)
    if (!object.contains(key)) throw DocumentError(where + ": missing field \"" + key + "\"");
}

Integer parse_integer(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    return Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    const bool digits = text.size() > start && text.find_first_not_of("0123456789", start) == std::string::npos;
    if (!digits) throw DocumentError(where + ": \"" + text + "\" is not a decimal integer");
    return Integer(text);
  }
  if (value.is_number_float())
    throw DocumentError(where + ": not an integer (write integers beyond 64 bits as decimal strings)");
  throw DocumentError(where + ": expected an integer");
}

int parse_small(const json& value, const std::string& where) {
  const Integer n = parse_integer(value, where);
  if (n > std::numeric_limits<int>::max() || n < std::numeric_limits<int>::min())
    throw DocumentError(where + ": out of range");
  return static_cast<int>(n);
}

template <int N>
Eigen::Matrix<Integer, N, 1> parse_vector(const json& object, const std::string& key) {
  const json& value = object.at(key);
  if (!value.is_array() || value.size() != N)
    throw DocumentError(key + ": expected an array of " + std::to_string(N) + " integers");
  Eigen::Matrix<Integer, N, 1> out;
  for (int i = 0; i < N; ++i) out(i) = parse_integer(value[i], key + "[" + std::to_string(i) + "]");
  return out;
}

std::string model_of(const json& root) {
  if (!root.is_object()) throw DocumentError("document: expected a JSON object");
  if (!root.contains("model")) throw DocumentError("document: missing field \"model\"");
  const json& model = root.at("model");
  if (!model.is_string()) throw DocumentError("model: expected \"torus\" or \"genus2\"");
  return model.get<std::string>();
}

std::string type_of(const json& monodromy) {
  if (!monodromy.is_object() || !monodromy.contains("type") || !monodromy.at("type").is_string())
    throw DocumentError("monodromy: expected an object with a \"type\"");
  return monodromy.at("type").get<std::string>();
}

TorusDiagram parse_torus(const json& root) {
  require_fields(root, "document", {"model", "monodromy", "a2", "b2", "c2"}, {"sign"});
  TorusDiagram d;
  if (root.contains("sign")) d.sign = parse_small(root.at("sign"), "sign");
  const json& monodromy = root.at("monodromy");
  const std::string type = type_of(monodromy);
  if (type == "identity") {
    require_fields(monodromy, "monodromy", {"type"});
    d.monodromy = MonodromySpec::identity();
  } else if (type == "twist") {
    require_fields(monodromy, "monodromy", {"type", "core", "exponent"});
    d.monodromy = MonodromySpec::twisted(parse_vector<2>(monodromy, "core"),
                                         parse_small(monodromy.at("exponent"), "exponent"));
  } else {
    throw DocumentError("monodromy: unknown type \"" + type + "\"");
  }
  d.a2 = parse_vector<2>(root, "a2");
  d.b2 = parse_vector<2>(root, "b2");
  d.c2 = parse_vector<2>(root, "c2");
  return d;
}

Genus2Diagram parse_genus2(const json& root, std::optional<int>& declared_sign) {
  require_fields(root, "document", {"model", "monodromy", "a1", "b1", "c1", "a2", "b2", "c2"}, {"sign"});
  Genus2Diagram d;
  if (root.contains("sign")) declared_sign = parse_small(root.at("sign"), "sign");
  const json& monodromy = root.at("monodromy");
  const std::string type = type_of(monodromy);
  if (type == "identity") {
    require_fields(monodromy, "monodromy", {"type"});
    d.exponent = 0;
  } else if (type == "twist") {
    require_fields(monodromy, "monodromy", {"type", "exponent"});
    d.exponent = parse_small(monodromy.at("exponent"), "exponent");
    if (d.exponent == 0) throw DocumentError("exponent: a twist needs a nonzero exponent (use type \"identity\")");
  } else {
    throw DocumentError("monodromy: unknown type \"" + type + "\"");
  }
  d.a1 = parse_vector<4>(root, "a1");
  d.b1 = parse_vector<4>(root, "b1");
  d.c1 = parse_vector<4>(root, "c1");
  d.a2 = parse_vector<4>(root, "a2");
  d.b2 = parse_vector<4>(root, "b2");
  d.c2 = parse_vector<4>(root, "c2");
  return d;
}

std::string integer_text(const Integer& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min()) return n.str();
  return "\"" + n.str() + "\"";
}

template <typename Derived>
std::string array_text(const Eigen::MatrixBase<Derived>& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += integer_text(v(i));
  }
  return out + "]";
}

}  // namespace

std::vector<Issue> DiagramDocument::issues() const {
  if (is_torus()) return validate(torus());
  auto out = validate(genus2());
  const int actual = genus2().sign();
  if (declared_sign && actual != 0 && *declared_sign != actual)
    out.push_back({IssueCode::SignMismatch, "declared sign " + std::to_string(*declared_sign) +
                                                " but a1.b1 = " + intersection(genus2().a1, genus2().b1).str()});
  return out;
}

TorusDiagram DiagramDocument::surgered() const { return is_torus() ? torus() : surgery_project(genus2()); }

DiagramDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  const std::string model = model_of(root);
  DiagramDocument doc;
  if (model == "torus") {
    doc.diagram = parse_torus(root);
  } else if (model == "genus2") {
    doc.diagram = parse_genus2(root, doc.declared_sign);
  } else {
    throw DocumentError("model: expected \"torus\" or \"genus2\", got \"" + model + "\"");
  }
  return doc;
}

DiagramDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string serialize(const TorusDiagram& d) {
  std::string out = "{\n  \"model\": \"torus\",\n  \"sign\": " + std::to_string(d.sign) + ",\n";
  if (d.monodromy.twist)
    out += "  \"monodromy\": {\"type\": \"twist\", \"core\": " + array_text(d.monodromy.twist->core) +
           ", \"exponent\": " + std::to_string(d.monodromy.twist->exponent) + "},\n";
  else
    out += "  \"monodromy\": {\"type\": \"identity\"},\n";
  out += "  \"a2\": " + array_text(d.a2) + ",\n";
  out += "  \"b2\": " + array_text(d.b2) + ",\n";
  out += "  \"c2\": " + array_text(d.c2) + "\n}\n";
  return out;
}

std::string serialize(const Genus2Diagram& d, std::optional<int> sign) {
  const int s = sign ? *sign : d.sign();
  std::string out = "{\n  \"model\": \"genus2\",\n  \"sign\": " + std::to_string(s) + ",\n";
  if (d.exponent != 0)
    out += "  \"monodromy\": {\"type\": \"twist\", \"exponent\": " + std::to_string(d.exponent) + "},\n";
  else
    out += "  \"monodromy\": {\"type\": \"identity\"},\n";
  out += "  \"a1\": " + array_text(d.a1) + ",\n";
  out += "  \"b1\": " + array_text(d.b1) + ",\n";
  out += "  \"c1\": " + array_text(d.c1) + ",\n";
  out += "  \"a2\": " + array_text(d.a2) + ",\n";
  out += "  \"b2\": " + array_text(d.b2) + ",\n";
  out += "  \"c2\": " + array_text(d.c2) + "\n}\n";
  return out;
}

std::string serialize(const DiagramDocument& document) {
  if (document.is_torus()) return serialize(document.torus());
  return serialize(document.genus2(), document.declared_sign);
}

}  // namespace trisect

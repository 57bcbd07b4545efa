#include "fibdig/export.hpp"

#include <limits>

namespace fibdig {
namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_dot(std::ostream& out, const Digraph& g, const std::string& name) {
  out << "digraph " << dot_quote(name) << " {\n";
  for (const auto& label : g.labels()) out << "  " << dot_quote(label) << ";\n";
  for (const Arc& a : g.arcs()) {
    for (std::uint64_t i = 0; i < a.multiplicity; ++i)
      out << "  " << dot_quote(g.label(a.tail)) << " -> " << dot_quote(g.label(a.head)) << ";\n";
  }
  out << "}\n";
}

void write_edge_csv(std::ostream& out, const Digraph& g) {
  for (const Arc& a : g.arcs())
    out << csv_field(g.label(a.tail)) << ',' << csv_field(g.label(a.head)) << ',' << a.multiplicity
        << '\n';
}

nlohmann::json metrics_json(const Digraph& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["arc_count"] = g.arc_count();
  const DegreeProfile p = degree_profile(g);
  nlohmann::json out = nlohmann::json::object();
  nlohmann::json in = nlohmann::json::object();
  for (auto [deg, count] : p.out) out[std::to_string(deg)] = count;
  for (auto [deg, count] : p.in) in[std::to_string(deg)] = count;
  j["out_degree_profile"] = out;
  j["in_degree_profile"] = in;
  try {
    j["diameter"] = g.order() == 0 ? nlohmann::json(nullptr) : nlohmann::json(diameter(g));
  } catch (const NotStronglyConnected&) {
    j["diameter"] = nullptr;
  }
  return j;
}

nlohmann::json polynomial_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      arr.push_back(c.convert_to<long long>());
    else
      arr.push_back(c.str());
  }
  return arr;
}

}  // namespace fibdig

#include "indratio/certificate_io.hpp"

#include "indratio/error.hpp"
#include "indratio/structure.hpp"
#include "json.hpp"

namespace indratio {

using nlohmann::json;

std::string certificate_to_json(const Certificate& cert, const Graph& g) {
  json steps = json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"rule", to_string(s.rule)},
                     {"removed", s.removed},
                     {"extension", s.extension},
                     {"N", s.N},
                     {"M", s.M},
                     {"Lambda", s.Lambda},
                     {"A", s.A}});
  json doc = {
      {"format", "indratio-certificate"},
      {"version", 1},
      {"vertex_count", g.vertex_count()},
      {"edge_count", g.edge_count()},
      {"lambda", difficult_components(g).lambda},
      {"constants", {{"a", to_string(cert.constants.a)}, {"b", to_string(cert.constants.b)}}},
      {"guarantee", to_string(cert.guarantee_value)},
      {"guarantee_ceiling", ceil(cert.guarantee_value).str()},
      {"steps", steps},
      {"independent_set", cert.independent_set},
      {"size", cert.independent_set.size()},
  };
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("certificate is not valid JSON", 0);
  try {
    if (doc.at("format").get<std::string>() != "indratio-certificate")
      throw ParseError("not an indratio certificate", 0);
    Certificate cert;
    cert.constants.a = parse_rational(doc.at("constants").at("a").get<std::string>());
    cert.constants.b = parse_rational(doc.at("constants").at("b").get<std::string>());
    cert.guarantee_value = parse_rational(doc.at("guarantee").get<std::string>());
    for (const auto& js : doc.at("steps")) {
      ReductionStep s;
      s.rule = parse_rule(js.at("rule").get<std::string>());
      s.removed = js.at("removed").get<VertexSet>();
      s.extension = js.at("extension").get<VertexSet>();
      s.N = js.at("N").get<std::int64_t>();
      s.M = js.at("M").get<std::int64_t>();
      s.Lambda = js.at("Lambda").get<std::int64_t>();
      s.A = js.at("A").get<std::int64_t>();
      cert.steps.push_back(std::move(s));
    }
    cert.independent_set = doc.at("independent_set").get<VertexSet>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

}  // namespace indratio

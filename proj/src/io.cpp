#include "smp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smp/errors.hpp"

namespace smp {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
    return Rational(Integer(std::to_string(j.get<long long>())));
  }
  throw ParseError("expected a rational (string \"p/q\" or integer) at " + where);
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::string string_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError("expected a string at " + where);
  return j.get<std::string>();
}

std::map<std::string, Rational> rational_map(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object at " + where);
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) out[k] = rational_from_json(v, where + "." + k);
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  InstanceSpec spec;
  for (const auto& f : member(j, "firms")) spec.firms.push_back(string_from_json(f, "firms"));
  for (const auto& w : member(j, "workers")) spec.workers.push_back(string_from_json(w, "workers"));
  for (const auto& e : member(j, "edges")) {
    EdgeSpec es;
    es.id = string_from_json(member(e, "id"), "edges[].id");
    es.firm = string_from_json(member(e, "firm"), "edges[].firm");
    es.worker = string_from_json(member(e, "worker"), "edges[].worker");
    es.capacity = rational_from_json(member(e, "capacity"), "edges[" + es.id + "].capacity");
    spec.edges.push_back(std::move(es));
  }
  spec.quotas = rational_map(member(j, "quotas"), "quotas");
  const json& prefs = member(j, "preferences");
  if (!prefs.is_object()) throw ParseError("preferences must be an object");
  for (const auto& [vid, ties] : prefs.items()) {
    if (!ties.is_array()) throw ParseError("preferences of \"" + vid + "\" must be a list of ties");
    auto& out = spec.preferences[vid];
    for (const auto& tie : ties) {
      if (!tie.is_array()) throw ParseError("each tie of \"" + vid + "\" must be a list of edge ids");
      std::vector<std::string> ids;
      for (const auto& eid : tie) ids.push_back(string_from_json(eid, "preferences." + vid));
      out.push_back(std::move(ids));
    }
  }
  if (j.contains("costs")) spec.costs = rational_map(j.at("costs"), "costs");
  return Instance::build(spec);
}

std::string serialize_instance(const Instance& inst) {
  InstanceSpec spec = inst.to_spec();
  json j;
  j["firms"] = spec.firms;
  j["workers"] = spec.workers;
  j["edges"] = json::array();
  for (const auto& e : spec.edges) {
    if (e.unbounded) throw DomainError("unbounded edges cannot be serialized");
    j["edges"].push_back({{"id", e.id}, {"firm", e.firm}, {"worker", e.worker}, {"capacity", to_string(e.capacity)}});
  }
  j["quotas"] = json::object();
  for (const auto& [k, q] : spec.quotas) j["quotas"][k] = to_string(q);
  j["preferences"] = json::object();
  for (const auto& [k, ties] : spec.preferences) j["preferences"][k] = ties;
  if (!spec.costs.empty()) {
    j["costs"] = json::object();
    for (const auto& [k, c] : spec.costs) j["costs"][k] = to_string(c);
  }
  return j.dump(2);
}

Assignment parse_assignment(const Instance& inst, std::string_view text) {
  json j = parse_json(text);
  auto values = rational_map(member(j, "values"), "values");
  Assignment x(inst.num_edges());
  for (const auto& [id, value] : values) {
    auto e = inst.find_edge(id);
    if (!e) throw DomainError("unknown edge id \"" + id + "\" in assignment");
    x[*e] = value;
  }
  return x;
}

std::string serialize_assignment(const Instance& inst, const Assignment& x) {
  json values = json::object();
  for (int e = 0; e < inst.num_edges(); ++e) values[inst.edge(e).id] = to_string(x[e]);
  return json{{"values", values}}.dump(2);
}

std::vector<Rational> parse_costs(const Instance& inst, std::string_view text) {
  json j = parse_json(text);
  const json& obj = j.is_object() && j.contains("costs") ? j.at("costs") : j;
  auto costs = rational_map(obj, "costs");
  std::vector<Rational> out(inst.num_edges());
  for (const auto& [id, c] : costs) {
    auto e = inst.find_edge(id);
    if (!e) throw DomainError("unknown edge id \"" + id + "\" in costs");
    out[*e] = c;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace smp

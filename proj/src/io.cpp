#include "hangar/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hangar::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(),
                     line_of_offset(text, e.byte));
  }
}

const json& member(const json& obj, const std::string& key,
                   const std::string& path) {
  if (!obj.is_object()) throw ParseError("expected an object", 0, path);
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing required field", 0, path + "." + key);
  }
  return *it;
}

double number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number()) throw ParseError("expected a number", 0, path + "." + key);
  return v.get<double>();
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw ParseError("expected a number", 0, path + "." + key);
  }
  return it->get<double>();
}

std::string text_field(const json& obj, const std::string& key,
                       const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) throw ParseError("expected a string", 0, path + "." + key);
  return v.get<std::string>();
}

bool flag(const json& obj, const std::string& key, const std::string& path,
          std::optional<bool> fallback = std::nullopt) {
  auto it = obj.find(key);
  if (it == obj.end() && fallback) return *fallback;
  const json& v = member(obj, key, path);
  if (!v.is_boolean()) throw ParseError("expected a boolean", 0, path + "." + key);
  return v.get<bool>();
}

ordered_json aircraft_to_json(const AircraftSpec& a) {
  ordered_json j;
  j["id"] = a.id;
  j["kind"] = std::string(to_string(a.kind));
  j["width"] = a.width;
  j["length"] = a.length;
  j["eta"] = a.eta;
  j["etd"] = a.etd;
  j["service"] = a.service;
  if (a.p_rej) j["p_rej"] = *a.p_rej;
  if (a.p_arr) j["p_arr"] = *a.p_arr;
  j["p_dep"] = a.p_dep;
  if (a.x_init) j["x_init"] = *a.x_init;
  if (a.y_init) j["y_init"] = *a.y_init;
  j["vip"] = a.vip;
  return j;
}

AircraftSpec aircraft_from_json(const json& j, const std::string& path) {
  AircraftSpec a;
  a.id = text_field(j, "id", path);
  const std::string kind = text_field(j, "kind", path);
  auto parsed = parse_aircraft_kind(kind);
  if (!parsed) throw ParseError("unknown kind '" + kind + "'", 0, path + ".kind");
  a.kind = *parsed;
  a.width = number(j, "width", path);
  a.length = number(j, "length", path);
  a.eta = number(j, "eta", path);
  a.etd = number(j, "etd", path);
  a.service = number(j, "service", path);
  a.p_rej = optional_number(j, "p_rej", path);
  a.p_arr = optional_number(j, "p_arr", path);
  a.p_dep = number(j, "p_dep", path);
  a.x_init = optional_number(j, "x_init", path);
  a.y_init = optional_number(j, "y_init", path);
  a.vip = flag(j, "vip", path, false);
  return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string instance_to_json(const Instance& instance) {
  const auto& h = instance.hangar;
  ordered_json j;
  j["label"] = instance.label;
  j["hangar"] = ordered_json{{"hw", h.hw},         {"hl", h.hl},
                             {"buffer", h.buffer}, {"eps_t", h.eps_t},
                             {"eps_p", h.eps_p},   {"grid_step", h.grid_step}};
  j["current"] = ordered_json::array();
  for (const auto& a : instance.current) j["current"].push_back(aircraft_to_json(a));
  j["future"] = ordered_json::array();
  for (const auto& a : instance.future) j["future"].push_back(aircraft_to_json(a));
  return dump(j);
}

Instance instance_from_json(std::string_view text) {
  const json doc = parse_document(text);
  Instance instance;
  auto label = doc.is_object() ? doc.find("label") : doc.end();
  if (doc.is_object() && label != doc.end()) {
    if (!label->is_string()) throw ParseError("expected a string", 0, "label");
    instance.label = label->get<std::string>();
  }
  const json& h = member(doc, "hangar", "$");
  instance.hangar.hw = number(h, "hw", "hangar");
  instance.hangar.hl = number(h, "hl", "hangar");
  instance.hangar.buffer = number(h, "buffer", "hangar");
  instance.hangar.eps_t = number(h, "eps_t", "hangar");
  instance.hangar.eps_p = number(h, "eps_p", "hangar");
  instance.hangar.grid_step =
      optional_number(h, "grid_step", "hangar").value_or(HangarConfig{}.grid_step);
  for (const char* set : {"current", "future"}) {
    auto it = doc.find(set);
    if (it == doc.end()) continue;
    if (!it->is_array()) throw ParseError("expected an array", 0, set);
    auto& target = std::string_view(set) == "current" ? instance.current
                                                      : instance.future;
    for (std::size_t i = 0; i < it->size(); ++i) {
      target.push_back(aircraft_from_json(
          (*it)[i], std::string(set) + "[" + std::to_string(i) + "]"));
    }
  }
  validate_instance(instance);
  return instance;
}

std::string solution_to_json(const Solution& solution) {
  ordered_json j;
  j["instance_label"] = solution.instance_label;
  j["provenance"] = std::string(to_string(solution.provenance));
  j["assignments"] = ordered_json::array();
  for (const auto& a : solution.assignments) {
    ordered_json e;
    e["aircraft_id"] = a.aircraft_id;
    e["accept"] = a.accept;
    e["x"] = a.x;
    e["y"] = a.y;
    e["roll_in"] = a.roll_in;
    e["roll_out"] = a.roll_out;
    e["d_arr"] = a.d_arr;
    e["d_dep"] = a.d_dep;
    j["assignments"].push_back(std::move(e));
  }
  return dump(j);
}

Solution solution_from_json(std::string_view text) {
  const json doc = parse_document(text);
  Solution solution;
  solution.instance_label = text_field(doc, "instance_label", "$");
  const std::string provenance = text_field(doc, "provenance", "$");
  auto parsed = parse_provenance(provenance);
  if (!parsed) {
    throw ParseError("unknown provenance '" + provenance + "'", 0, "provenance");
  }
  solution.provenance = *parsed;
  const json& list = member(doc, "assignments", "$");
  if (!list.is_array()) throw ParseError("expected an array", 0, "assignments");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "assignments[" + std::to_string(i) + "]";
    const json& e = list[i];
    Assignment a;
    a.aircraft_id = text_field(e, "aircraft_id", path);
    a.accept = flag(e, "accept", path);
    a.x = number(e, "x", path);
    a.y = number(e, "y", path);
    a.roll_in = number(e, "roll_in", path);
    a.roll_out = number(e, "roll_out", path);
    a.d_arr = number(e, "d_arr", path);
    a.d_dep = number(e, "d_dep", path);
    solution.assignments.push_back(std::move(a));
  }
  return solution;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_file(path, instance_to_json(instance));
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_file(path));
}

void save_solution(const Solution& solution, const std::filesystem::path& path) {
  write_file(path, solution_to_json(solution));
}

Solution load_solution(const std::filesystem::path& path) {
  return solution_from_json(read_file(path));
}

}  // namespace hangar::io

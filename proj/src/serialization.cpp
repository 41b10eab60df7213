#include "fmra/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fmra {

using nlohmann::json;

namespace {

Contraction map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ParseError("map entry needs a 'family' field");
  std::string family = j.at("family").get<std::string>();
  try {
    if (family == "affine")
      return Contraction::affine(j.at("a").get<double>(), j.at("b").get<double>());
    if (family == "quadratic")
      return Contraction::quadratic(j.at("alpha").get<double>(),
                                    j.at("beta").get<double>(),
                                    j.at("gamma").get<double>());
    if (family == "logexp")
      return Contraction::logexp(j.at("s").get<double>(), j.at("base").get<double>(),
                                 j.at("t").get<double>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad map parameters: ") + e.what());
  }
  throw ParseError("unknown map family '" + family + "'");
}

json map_to_json(const Contraction& m) {
  json j;
  switch (m.family()) {
    case MapFamily::Affine:
      j["family"] = "affine";
      j["a"] = m.a;
      j["b"] = m.b;
      break;
    case MapFamily::Quadratic:
      j["family"] = "quadratic";
      j["alpha"] = m.alpha;
      j["beta"] = m.beta;
      j["gamma"] = m.gamma;
      break;
    case MapFamily::LogExp:
      j["family"] = "logexp";
      j["s"] = m.s;
      j["base"] = m.base;
      j["t"] = m.t;
      break;
    case MapFamily::Generic:
      throw ParseError("generic maps have no wire format");
  }
  return j;
}

}  // namespace

IFSystem load_system_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("system spec must be a JSON object");

  std::string name = j.value("name", "");
  try {
    if (j.contains("core_maps")) {
      if (!j.value("auto_fill", false))
        throw ParseError("'core_maps' requires \"auto_fill\": true");
      std::vector<Contraction> core;
      for (const auto& m : j.at("core_maps")) core.push_back(map_from_json(m));
      int subdivisions = j.value("subdivisions", 1);
      return gap_fill(core, subdivisions, name);
    }
    if (!j.contains("maps") || !j.contains("core"))
      throw ParseError("system spec needs 'maps' and 'core' (or 'core_maps')");
    std::vector<Contraction> maps;
    for (const auto& m : j.at("maps")) maps.push_back(map_from_json(m));
    std::vector<int> core = j.at("core").get<std::vector<int>>();
    return IFSystem(std::move(maps), std::move(core), name);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad system spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad system spec: ") + e.what());
  }
}

IFSystem load_system_file(const std::string& path) {
  return load_system_json(read_file(path));
}

std::string system_to_json(const IFSystem& sys) {
  json j;
  j["name"] = sys.name();
  j["maps"] = json::array();
  for (const auto& m : sys.maps()) j["maps"].push_back(map_to_json(m));
  j["core"] = sys.core();
  return j.dump(2);
}

std::string cell_function_to_json(const CellFunction& f, long p) {
  json arr = json::array();
  for (const auto& [cell, coef] : f.terms()) {
    json term;
    term["word"] = cell.word;
    term["shift"] = cell.shift;
    std::complex<double> v = coef.to_complex(p);
    term["re"] = v.real();
    term["im"] = v.imag();
    arr.push_back(term);
  }
  return arr.dump(2);
}

CellFunction cell_function_from_json(const std::string& text, long p) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("cell function must be a JSON list");
  CellFunction f;
  try {
    for (const auto& term : j) {
      Cell cell(term.at("word").get<Word>(), term.at("shift").get<std::int64_t>());
      std::complex<double> v(term.at("re").get<double>(), term.at("im").get<double>());
      f.add_term(cell, Coef(v), p);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad cell function: ") + e.what());
  }
  return f;
}

std::uint64_t content_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fmra

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ctcsa/harness.hpp"
#include "ctcsa/recipe.hpp"

namespace ctcsa {

using nlohmann::json;

namespace {

void add_range(Config& c, const std::string& family, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t n = lo; n <= hi; ++n) c.corpus.push_back({family + ":" + std::to_string(n), ""});
}

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

void apply_env_override(Caps& caps) {
  if (const char* env = std::getenv("CTCSA_ORDER_CAP")) {
    try {
      const auto v = std::stoull(env);
      if (v == 0) config_error("CTCSA_ORDER_CAP must be positive");
      caps.order_cap = v;
    } catch (const std::logic_error&) {
      config_error(std::string("CTCSA_ORDER_CAP is not a number: '") + env + "'");
    }
  }
}

void validate(const Config& c) {
  if (c.caps.order_cap == 0 || c.caps.triple_scan_cap == 0 || c.caps.normal_enum_cap == 0) {
    config_error("caps must be positive");
  }
  if (c.caps.triple_scan_cap > c.caps.order_cap) config_error("triple_scan_cap exceeds order_cap");
  for (const auto& e : c.corpus) {
    try {
      parse_recipe(e.recipe);
    } catch (const Error& err) {
      config_error(std::string("corpus entry: ") + err.what());
    }
  }
  const auto& names = suite_names();
  for (const auto& k : c.known_refutations) {
    if (std::find(names.begin(), names.end(), k.suite) == names.end()) {
      config_error("known_refutations: unknown suite '" + k.suite + "'");
    }
    if (k.subject.empty() || k.check.empty()) config_error("known_refutations: subject and check are required");
  }
}

std::size_t positive(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) config_error(std::string("caps.") + key + " must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

Config default_config() {
  Config c;
  add_range(c, "cyclic", 1, 30);
  add_range(c, "dihedral", 3, 12);
  add_range(c, "symmetric", 3, 5);
  add_range(c, "alternating", 4, 5);
  for (const char* r : {"frobenius:2,3", "frobenius:3,7", "frobenius:5,11", "frobenius:2,7"}) c.corpus.push_back({r, ""});
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    c.corpus.push_back({"psl2:" + std::to_string(q), ""});
    c.corpus.push_back({"sl2:" + std::to_string(q), ""});
  }
  c.corpus.push_back({"psl2:16", "centralizer checks only"});
  c.corpus.push_back({"direct(symmetric:3,symmetric:3)", "S3 x S3"});
  c.corpus.push_back({"direct(alternating:4,cyclic:2)", "A4 x C2"});
  c.corpus.push_back({"semidirect(direct(cyclic:2,cyclic:2),cyclic:3,involution-cycle)", "V4 x| C3"});
  c.caps = Caps{};
  apply_env_override(c.caps);
  c.known_refutations = {{"psl2-ct", "psl2:3", "ct"}, {"psl2-ct", "psl2:5", "ct"}};
  return c;
}

Config parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) config_error("config must be a JSON object");
  static const std::set<std::string> known{"corpus", "caps", "known_refutations"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) config_error("unknown config key '" + key + "'");
  }
  Config c = default_config();
  if (j.contains("corpus")) {
    const json& corpus = j.at("corpus");
    if (!corpus.is_array()) config_error("corpus must be an array");
    c.corpus.clear();
    for (const json& e : corpus) {
      if (e.is_string()) {
        c.corpus.push_back({e.get<std::string>(), ""});
      } else if (e.is_object() && e.contains("recipe") && e.at("recipe").is_string()) {
        std::string nick;
        if (e.contains("nickname")) {
          if (!e.at("nickname").is_string()) config_error("corpus nickname must be a string");
          nick = e.at("nickname").get<std::string>();
        }
        c.corpus.push_back({e.at("recipe").get<std::string>(), nick});
      } else {
        config_error("corpus entries are recipe strings or {recipe, nickname} objects");
      }
    }
  }
  if (j.contains("caps")) {
    const json& caps = j.at("caps");
    if (!caps.is_object()) config_error("caps must be an object");
    const Caps base;
    c.caps.order_cap = positive(caps, "order_cap", base.order_cap);
    c.caps.triple_scan_cap = positive(caps, "triple_scan_cap", base.triple_scan_cap);
    c.caps.normal_enum_cap = positive(caps, "normal_enum_cap", base.normal_enum_cap);
    apply_env_override(c.caps);
  }
  if (j.contains("known_refutations")) {
    const json& refs = j.at("known_refutations");
    if (!refs.is_array()) config_error("known_refutations must be an array");
    c.known_refutations.clear();
    for (const json& r : refs) {
      if (!r.is_object()) config_error("known_refutations entries must be objects");
      auto field = [&](const char* key) {
        if (!r.contains(key) || !r.at(key).is_string()) config_error(std::string("known_refutations.") + key + " must be a string");
        return r.at(key).get<std::string>();
      };
      c.known_refutations.push_back({field("suite"), field("subject"), field("check")});
    }
  }
  validate(c);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const Config& c) {
  json j;
  j["corpus"] = json::array();
  for (const auto& e : c.corpus) j["corpus"].push_back({{"recipe", e.recipe}, {"nickname", e.nickname}});
  j["caps"] = {{"order_cap", c.caps.order_cap},
               {"triple_scan_cap", c.caps.triple_scan_cap},
               {"normal_enum_cap", c.caps.normal_enum_cap}};
  j["known_refutations"] = json::array();
  for (const auto& k : c.known_refutations) {
    j["known_refutations"].push_back({{"suite", k.suite}, {"subject", k.subject}, {"check", k.check}});
  }
  return j.dump(2) + "\n";
}

std::string config_hash(const Config& c) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : config_to_json(c)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace ctcsa

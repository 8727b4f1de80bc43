#include "lindyn/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lindyn {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in{text};
  std::string line;
  std::string section = "common";
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": unterminated section header");
      }
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) {
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": empty section name");
      }
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key");
    }
    cfg.set(section, key, value);
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load_file(const std::string& path) {
  std::ifstream f{path};
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string ExperimentConfig::serialize() const {
  std::string out;
  for (const auto& [name, entries] : sections_) {
    out += "[" + name + "]\n";
    for (const auto& [k, v] : entries) {
      out += k + " = " + v + "\n";
    }
  }
  return out;
}

ExperimentConfig::Entries* ExperimentConfig::find_section(
    const std::string& name) {
  for (auto& [n, e] : sections_) {
    if (n == name) return &e;
  }
  return nullptr;
}

const ExperimentConfig::Entries* ExperimentConfig::find_section(
    const std::string& name) const {
  for (const auto& [n, e] : sections_) {
    if (n == name) return &e;
  }
  return nullptr;
}

void ExperimentConfig::set(const std::string& section, const std::string& key,
                           const std::string& value) {
  Entries* e = find_section(section);
  if (!e) {
    sections_.emplace_back(section, Entries{});
    e = &sections_.back().second;
  }
  for (auto& [k, v] : *e) {
    if (k == key) {
      v = value;
      return;
    }
  }
  e->emplace_back(key, value);
}

std::optional<std::string> ExperimentConfig::get(const std::string& section,
                                                 const std::string& key) const {
  const Entries* e = find_section(section);
  if (!e) return std::nullopt;
  for (const auto& [k, v] : *e) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string ExperimentConfig::require(const std::string& section,
                                      const std::string& key) const {
  auto v = get(section, key);
  if (!v) {
    throw std::invalid_argument("missing config field " + section + "." + key);
  }
  return *v;
}

double ExperimentConfig::get_double(const std::string& section,
                                    const std::string& key,
                                    double fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const double x = std::stod(*v, &used);
    if (trim(v->substr(used)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config field " + section + "." + key +
                              " is not a number: \"" + *v + "\"");
}

double ExperimentConfig::require_double(const std::string& section,
                                        const std::string& key) const {
  (void)require(section, key);
  return get_double(section, key, 0.0);
}

std::int64_t ExperimentConfig::get_int(const std::string& section,
                                       const std::string& key,
                                       std::int64_t fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long long x = std::stoll(*v, &used);
    if (trim(v->substr(used)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config field " + section + "." + key +
                              " is not an integer: \"" + *v + "\"");
}

std::int64_t ExperimentConfig::require_int(const std::string& section,
                                           const std::string& key) const {
  (void)require(section, key);
  return get_int(section, key, 0);
}

}  // namespace lindyn

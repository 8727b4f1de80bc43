// config.hpp — flat sectioned key/value experiment configuration.
//
// Format:
//   # comment
//   [common]
//   weights = constant(2)
//   out = runs/demo
//   [witness]
//   gamma = 1.5
//   m = 5
//
// Sections and keys keep their order, so parse(serialize(cfg)) == cfg.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lindyn {

class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load_file(const std::string& path);
  std::string serialize() const;

  void set(const std::string& section, const std::string& key,
           const std::string& value);
  std::optional<std::string> get(const std::string& section,
                                 const std::string& key) const;

  // Typed getters; errors name the offending field as "section.key".
  std::string require(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  double require_double(const std::string& section,
                        const std::string& key) const;
  std::int64_t get_int(const std::string& section, const std::string& key,
                       std::int64_t fallback) const;
  std::int64_t require_int(const std::string& section,
                           const std::string& key) const;

  bool operator==(const ExperimentConfig& other) const {
    return sections_ == other.sections_;
  }

 private:
  using Entries = std::vector<std::pair<std::string, std::string>>;
  std::vector<std::pair<std::string, Entries>> sections_;

  Entries* find_section(const std::string& name);
  const Entries* find_section(const std::string& name) const;
};

}  // namespace lindyn

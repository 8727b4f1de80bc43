// report.hpp — deterministic report serialization: an insertion-ordered JSON
// tree with floats printed at 17 significant digits, so identical runs emit
// byte-identical files. Non-finite doubles serialize as the strings "inf",
// "-inf", "nan" (JSON has no literals for them).

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lindyn {

class Json {
 public:
  Json() : kind_(Kind::kNull) {}
  static Json boolean(bool b);
  static Json integer(std::int64_t v);
  static Json number(double v);
  static Json str(std::string s);
  static Json array();
  static Json object();

  Json& push(Json v);                       // array append
  Json& set(const std::string& key, Json v);  // object insert (ordered)

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { kNull, kBool, kInt, kDouble, kString, kArray, kObject };
  Kind kind_;
  bool b_ = false;
  std::int64_t i_ = 0;
  double d_ = 0.0;
  std::string s_;
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> fields_;

  void write(std::string& out, int indent, int depth) const;
};

// Writes through a temp file in the same directory, then renames.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace lindyn

#pragma once

#include <map>
#include <string>
#include <vector>

#include "follownav/errors.hpp"

namespace follownav::kv {

// One parsed right-hand side of a `key = value` line.
struct Value {
  enum class Type { Number, Bool, String, NumberList, NumberGrid };
  Type type = Type::Number;
  double number = 0.0;
  bool boolean = false;
  std::string text;
  std::vector<double> list;                // [1, 2, 3]
  std::vector<std::vector<double>> grid;   // [[1, 2], [3, 4]]
  int line = 0;                            // 1-based, for error messages
};

using Document = std::map<std::string, Value>;

// Parses a flat key-value document: `key = value` lines, `#` comments,
// optional `[section]` headers that prefix following keys as "section.key".
// Values are numbers, true/false, quoted strings, numeric lists, or one
// level of nested numeric lists. Duplicate keys are an error.
Document parse(const std::string& text);

// Accessors that raise ParseError with the key name on a type mismatch.
double get_number(const Value& v, const std::string& key);
bool get_bool(const Value& v, const std::string& key);
const std::string& get_string(const Value& v, const std::string& key);
const std::vector<double>& get_list(const Value& v, const std::string& key, size_t size);
std::vector<std::vector<double>> get_grid(const Value& v, const std::string& key, size_t row_size);

// Shortest representation of d that parses back to the same double.
std::string format_double(double d);

}  // namespace follownav::kv

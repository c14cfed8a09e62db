#include "follownav/kv.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace follownav::kv {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

double parse_number(const std::string& tok, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    fail(line, "expected a number, got '" + tok + "'");
  return v;
}

// Splits a bracketed list body on top-level commas.
std::vector<std::string> split_top_level(const std::string& body, int line) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '[') depth++;
    if (c == ']') {
      depth--;
      if (depth < 0) fail(line, "unbalanced ']'");
    }
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) fail(line, "unbalanced '['");
  std::string last = trim(cur);
  if (!last.empty()) parts.push_back(last);
  return parts;
}

Value parse_value(const std::string& raw, int line) {
  Value v;
  v.line = line;
  if (raw.empty()) fail(line, "missing value");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"')
      fail(line, "unterminated string");
    v.type = Value::Type::String;
    std::string body = raw.substr(1, raw.size() - 2);
    std::string out;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '\\' && i + 1 < body.size()) {
        ++i;
        if (body[i] == '"' || body[i] == '\\') out.push_back(body[i]);
        else fail(line, "unsupported escape in string");
      } else if (body[i] == '"') {
        fail(line, "unescaped '\"' in string");
      } else {
        out.push_back(body[i]);
      }
    }
    v.text = out;
    return v;
  }
  if (raw == "true" || raw == "false") {
    v.type = Value::Type::Bool;
    v.boolean = (raw == "true");
    return v;
  }
  if (raw.front() == '[') {
    if (raw.back() != ']') fail(line, "unterminated list");
    std::string body = trim(raw.substr(1, raw.size() - 2));
    std::vector<std::string> parts = split_top_level(body, line);
    bool nested = !parts.empty() && parts.front().front() == '[';
    if (nested) {
      v.type = Value::Type::NumberGrid;
      for (const std::string& p : parts) {
        if (p.front() != '[' || p.back() != ']')
          fail(line, "expected a nested list, got '" + p + "'");
        std::vector<double> row;
        for (const std::string& q : split_top_level(trim(p.substr(1, p.size() - 2)), line))
          row.push_back(parse_number(q, line));
        v.grid.push_back(std::move(row));
      }
    } else {
      v.type = Value::Type::NumberList;
      for (const std::string& p : parts) v.list.push_back(parse_number(p, line));
    }
    return v;
  }
  v.type = Value::Type::Number;
  v.number = parse_number(raw, line);
  return v;
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.')
      return false;
  return true;
}

}  // namespace

Document parse(const std::string& text) {
  Document doc;
  std::string section;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string::npos) {
      section = trim(line.substr(1, line.size() - 2));
      if (!valid_key(section)) fail(line_no, "invalid section name '" + section + "'");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    if (!valid_key(key)) fail(line_no, "invalid key '" + key + "'");
    if (!section.empty()) key = section + "." + key;
    if (doc.count(key)) fail(line_no, "duplicate key '" + key + "'");
    doc.emplace(key, parse_value(trim(line.substr(eq + 1)), line_no));
  }
  return doc;
}

double get_number(const Value& v, const std::string& key) {
  if (v.type != Value::Type::Number)
    throw ParseError("key '" + key + "' must be a number");
  return v.number;
}

bool get_bool(const Value& v, const std::string& key) {
  if (v.type != Value::Type::Bool)
    throw ParseError("key '" + key + "' must be true or false");
  return v.boolean;
}

const std::string& get_string(const Value& v, const std::string& key) {
  if (v.type != Value::Type::String)
    throw ParseError("key '" + key + "' must be a quoted string");
  return v.text;
}

const std::vector<double>& get_list(const Value& v, const std::string& key, size_t size) {
  if (v.type != Value::Type::NumberList || (size != 0 && v.list.size() != size))
    throw ParseError("key '" + key + "' must be a list of " + std::to_string(size) + " numbers");
  return v.list;
}

std::vector<std::vector<double>> get_grid(const Value& v, const std::string& key, size_t row_size) {
  // A single flat list is accepted as a one-row grid.
  if (v.type == Value::Type::NumberList) {
    if (v.list.size() != row_size)
      throw ParseError("key '" + key + "' rows must have " + std::to_string(row_size) + " numbers");
    return {v.list};
  }
  if (v.type != Value::Type::NumberGrid)
    throw ParseError("key '" + key + "' must be a list of number lists");
  for (const auto& row : v.grid)
    if (row.size() != row_size)
      throw ParseError("key '" + key + "' rows must have " + std::to_string(row_size) + " numbers");
  return v.grid;
}

std::string format_double(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

}  // namespace follownav::kv

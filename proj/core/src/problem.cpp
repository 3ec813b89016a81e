#include "modpll/problem.hpp"

#include <fstream>
#include <sstream>

namespace modpll {

namespace {

struct Value {
  enum class Kind { Int, Str, List };
  Kind kind = Kind::Int;
  long long num = 0;
  std::string str;
  std::vector<Value> list;
};

class ValueParser {
 public:
  ValueParser(const std::string& text, const std::string& where) : text_(text), where_(where) {}

  Value parse() {
    skip_space();
    Value v = parse_value();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(where_ + ": trailing characters after value");
    }
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  Value parse_value() {
    if (pos_ >= text_.size()) {
      throw ParseError(where_ + ": empty value");
    }
    char c = text_[pos_];
    if (c == '[') return parse_list();
    if (c == '"') return parse_quoted();
    if (c == '-' || (c >= '0' && c <= '9')) return parse_int();
    return parse_bare();
  }

  Value parse_list() {
    Value v;
    v.kind = Value::Kind::List;
    ++pos_;  // '['
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return v;
    }
    while (true) {
      skip_space();
      v.list.push_back(parse_value());
      skip_space();
      if (pos_ >= text_.size()) {
        throw ParseError(where_ + ": unterminated list");
      }
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == ']') {
        ++pos_;
        return v;
      }
      throw ParseError(where_ + ": expected ',' or ']' in list");
    }
  }

  Value parse_quoted() {
    Value v;
    v.kind = Value::Kind::Str;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      v.str.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) {
      throw ParseError(where_ + ": unterminated string");
    }
    ++pos_;
    return v;
  }

  Value parse_int() {
    size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) {
      throw ParseError(where_ + ": malformed integer");
    }
    Value v;
    v.kind = Value::Kind::Int;
    v.num = std::stoll(text_.substr(start, pos_ - start));
    return v;
  }

  Value parse_bare() {
    Value v;
    v.kind = Value::Kind::Str;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '.' || c == '-' || c == '+' || c == '|';
      if (!word) break;
      v.str.push_back(c);
      ++pos_;
    }
    if (v.str.empty()) {
      throw ParseError(where_ + ": malformed value");
    }
    return v;
  }

  const std::string& text_;
  std::string where_;
  size_t pos_ = 0;
};

long long as_int(const Value& v, const std::string& where) {
  if (v.kind != Value::Kind::Int) {
    throw ParseError(where + ": expected an integer");
  }
  return v.num;
}

std::string as_str(const Value& v, const std::string& where) {
  if (v.kind != Value::Kind::Str) {
    throw ParseError(where + ": expected a name or string");
  }
  return v.str;
}

std::vector<long> as_int_list(const Value& v, const std::string& where) {
  if (v.kind == Value::Kind::Int) return {static_cast<long>(v.num)};
  if (v.kind != Value::Kind::List) {
    throw ParseError(where + ": expected an integer list");
  }
  std::vector<long> out;
  for (const Value& e : v.list) out.push_back(static_cast<long>(as_int(e, where)));
  return out;
}

// digit lists: [1, 1, 0] for residue degree 1, [[1,0],[2,1]] for higher
std::vector<std::vector<long>> as_digit_list(const Value& v, const std::string& where) {
  if (v.kind == Value::Kind::Int) return {{static_cast<long>(v.num)}};
  if (v.kind != Value::Kind::List) {
    throw ParseError(where + ": expected a digit list");
  }
  std::vector<std::vector<long>> out;
  for (const Value& e : v.list) {
    if (e.kind == Value::Kind::Int) {
      out.push_back({static_cast<long>(e.num)});
    } else if (e.kind == Value::Kind::List) {
      std::vector<long> digit;
      for (const Value& c : e.list) digit.push_back(static_cast<long>(as_int(c, where)));
      out.push_back(digit);
    } else {
      throw ParseError(where + ": digits must be integers or coefficient lists");
    }
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& text, const std::string& origin) {
  ProblemFile pf;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  bool saw_support_list = false;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    std::string where = origin + ":" + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(where + ": malformed section header");
      }
      section = line.substr(1, line.size() - 2);
      if (section == "params") {
        pf.has_params = true;
      } else if (section == "rep") {
        pf.has_rep = true;
      } else if (section == "char1") {
        pf.has_char1 = true;
      } else if (section == "char2") {
        pf.has_char2 = true;
      } else if (section == "search" || section == "expect") {
        // flags set by their keys
      } else {
        throw ParseError(where + ": unknown section [" + section + "]");
      }
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(where + ": expected key = value");
    }
    std::string key = line.substr(0, eq);
    key = key.substr(0, key.find_last_not_of(" \t") + 1);
    std::string rhs = line.substr(eq + 1);
    Value v = ValueParser(rhs, where + " (" + key + ")").parse();
    std::string kwhere = where + ": " + section + "." + key;

    if (section == "params") {
      if (key == "p") {
        pf.p = static_cast<long>(as_int(v, kwhere));
      } else if (key == "ell") {
        pf.ell = static_cast<long>(as_int(v, kwhere));
      } else if (key == "f") {
        pf.f = static_cast<int>(as_int(v, kwhere));
      } else if (key == "precision") {
        pf.precision = static_cast<int>(as_int(v, kwhere));
      } else if (key == "backend") {
        pf.backend = as_str(v, kwhere);
      } else if (key == "modulus") {
        pf.modulus = as_int_list(v, kwhere);
      } else {
        throw ParseError(kwhere + ": unknown key");
      }
    } else if (section == "rep") {
      if (key == "shape") {
        pf.shape = as_str(v, kwhere);
      } else if (key == "case") {
        pf.qm1_case = as_str(v, kwhere);
      } else if (key == "sigma_u") {
        pf.sigma_u = as_int_list(v, kwhere);
        pf.has_sigma = true;
      } else if (key == "sigma_t") {
        pf.sigma_t = as_int_list(v, kwhere);
        pf.has_sigma = true;
      } else if (key == "support") {
        if (v.kind != Value::Kind::List || v.list.size() != 2) {
          throw ParseError(kwhere + ": support needs exactly two labels");
        }
        pf.support1 = as_str(v.list[0], kwhere);
        pf.support2 = as_str(v.list[1], kwhere);
        saw_support_list = true;
      } else if (key == "twist_u") {
        pf.twist_u = as_int_list(v, kwhere);
      } else if (key == "twist_t") {
        pf.twist_t = as_int_list(v, kwhere);
      } else {
        throw ParseError(kwhere + ": unknown key");
      }
    } else if (section == "char1" || section == "char2") {
      std::vector<std::vector<long>> digits = as_digit_list(v, kwhere);
      if (key == "u") {
        (section == "char1" ? pf.char1_u : pf.char2_u) = digits;
      } else if (key == "t") {
        (section == "char1" ? pf.char1_t : pf.char2_t) = digits;
      } else {
        throw ParseError(kwhere + ": unknown key (characters take values on u and t)");
      }
    } else if (section == "search") {
      if (key == "mode") {
        pf.mode = as_str(v, kwhere);
        if (pf.mode != "full" && pf.mode != "sampled") {
          throw ParseError(kwhere + ": mode must be full or sampled");
        }
      } else if (key == "max_candidates") {
        pf.max_candidates = static_cast<std::uint64_t>(as_int(v, kwhere));
      } else if (key == "seed") {
        pf.seed = static_cast<std::uint64_t>(as_int(v, kwhere));
      } else if (key == "window") {
        pf.window = static_cast<int>(as_int(v, kwhere));
      } else {
        throw ParseError(kwhere + ": unknown key");
      }
    } else if (section == "expect") {
      if (key == "variant") {
        pf.expect_variant = as_str(v, kwhere);
        pf.has_expect = true;
      } else {
        throw ParseError(kwhere + ": unknown key");
      }
    } else {
      throw ParseError(where + ": key outside any section");
    }
  }
  (void)saw_support_list;
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open input file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path);
}

}  // namespace modpll

// Copyright 2026 The hypermc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypermc/io/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "hypermc/io/formats.hpp"

namespace hypermc::io {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  json run() {
    json root = json::object();
    json* table = &root;
    while (!at_end()) {
      skip_blank();
      if (at_end()) break;
      if (peek() == '\n') {
        advance();
        continue;
      }
      if (peek() == '#') {
        skip_comment();
        continue;
      }
      if (peek() == '[') {
        advance();
        skip_spaces();
        if (peek() == '[') fail("arrays of tables are not supported");
        const auto path = key_path(']');
        expect(']');
        table = &open_table(root, path, true);
        finish_line();
        continue;
      }
      const auto path = key_path('=');
      expect('=');
      skip_spaces();
      json v = value();
      json* target = table;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        target = &open_table(*target, {path[i]}, false);
      }
      if (target->contains(path.back())) fail("duplicate key '" + path.back() + "'");
      (*target)[path.back()] = std::move(v);
      finish_line();
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (peek() == '\n') ++line_;
    ++pos_;
  }
  void skip_spaces() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r') advance();
  }
  void skip_blank() { skip_spaces(); }
  void skip_comment() {
    while (!at_end() && peek() != '\n') advance();
  }
  // Spaces, comments and newlines inside arrays.
  void skip_layout() {
    for (;;) {
      skip_spaces();
      if (peek() == '#') skip_comment();
      if (peek() == '\n') {
        advance();
        continue;
      }
      return;
    }
  }
  void expect(char c) {
    skip_spaces();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  void finish_line() {
    skip_spaces();
    if (peek() == '#') skip_comment();
    if (!at_end() && peek() != '\n') fail("unexpected text after value");
  }

  std::vector<std::string> key_path(char terminator) {
    std::vector<std::string> path;
    for (;;) {
      skip_spaces();
      std::string key;
      if (peek() == '"' || peek() == '\'') {
        key = quoted();
      } else {
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
               peek() == '-') {
          key += peek();
          advance();
        }
        if (key.empty()) fail("expected a key");
      }
      path.push_back(std::move(key));
      skip_spaces();
      if (peek() == '.') {
        advance();
        continue;
      }
      if (peek() != terminator) fail(std::string("expected '") + terminator + "' after key");
      return path;
    }
  }

  json& open_table(json& root, const std::vector<std::string>& path, bool header) {
    json* t = &root;
    for (const auto& k : path) {
      if (!t->contains(k)) (*t)[k] = json::object();
      t = &(*t)[k];
      if (!t->is_object()) fail("'" + k + "' is already a value");
    }
    if (header) {
      std::string joined;
      for (const auto& k : path) joined += (joined.empty() ? "" : ".") + k;
      if (!declared_.insert(joined).second) fail("table [" + joined + "] declared twice");
    }
    return *t;
  }

  // "basic" strings take escapes, 'literal' ones do not.
  std::string quoted() {
    const char quote = peek();
    advance();
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = peek();
      advance();
      if (c == quote) return out;
      if (c == '\\' && quote == '"') {
        char e = peek();
        advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
  }

  json value() {
    const char c = peek();
    if (c == '"' || c == '\'') return quoted();
    if (c == '[') {
      advance();
      json arr = json::array();
      skip_layout();
      if (peek() == ']') {
        advance();
        return arr;
      }
      for (;;) {
        skip_layout();
        arr.push_back(value());
        skip_layout();
        if (peek() == ',') {
          advance();
          skip_layout();
          if (peek() == ']') {
            advance();
            return arr;
          }
          continue;
        }
        if (peek() == ']') {
          advance();
          return arr;
        }
        fail("expected ',' or ']' in array");
      }
    }
    std::string word;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '+' ||
                         peek() == '-' || peek() == '.' || peek() == '_')) {
      word += peek();
      advance();
    }
    if (word.empty()) fail("expected a value");
    if (word == "true") return true;
    if (word == "false") return false;
    std::string digits;
    for (char ch : word) {
      if (ch != '_') digits += ch;
    }
    const char* first = digits.data() + (digits.front() == '+' ? 1 : 0);
    const char* last = digits.data() + digits.size();
    const bool is_float = digits.find_first_of(".eE") != std::string::npos ||
                          digits == "inf" || digits == "nan";
    if (!is_float) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec == std::errc() && ptr == last) return v;
    } else {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec == std::errc() && ptr == last) return v;
    }
    fail("cannot read value '" + word + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::set<std::string> declared_;
};

}  // namespace

json parse_toml_lite(std::string_view text) { return Reader(text).run(); }

}  // namespace hypermc::io

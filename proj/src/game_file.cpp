// Copyright 2026 The qgame Authors
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

#include "qgame/game_file.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace qgame {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty number");
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + buf + "'");
  }
  return v;
}

// "[a, b, c]" -> {"a", "b", "c"}; a bare value is a one-element list.
std::vector<std::string> split_list(std::string_view v, bool& bracketed) {
  v = trim(v);
  bracketed = !v.empty() && v.front() == '[';
  if (bracketed) {
    if (v.back() != ']') throw std::invalid_argument("list is missing its closing ']'");
    v = trim(v.substr(1, v.size() - 2));
  }
  std::vector<std::string> out;
  if (v.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = v.find(',', start);
    const auto item = trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
    if (item.empty()) throw std::invalid_argument("empty list item");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& field,
                       const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                         (field.empty() ? "" : "field '" + field + "': ") + msg),
      line_(line),
      field_(field) {}

double parse_angle(std::string_view text) {
  std::string s;
  for (char ch : trim(text)) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_decimal(s);

  // [sign][coef['*']]pi['/'denom]
  std::string head = s.substr(0, pos);
  const std::string tail = s.substr(pos + 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    if (head.front() == '-') sign = -1.0;
    head.erase(0, 1);
  }
  if (!head.empty() && head.back() == '*') head.pop_back();
  const double coef = head.empty() ? 1.0 : parse_decimal(head);
  double denom = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("unexpected text after 'pi': '" + tail + "'");
    denom = parse_decimal(tail.substr(1));
    if (denom == 0.0) throw std::invalid_argument("division by zero in angle");
  }
  return sign * coef * kPi / denom;
}

GameSpec parse_game_spec(std::string_view text, const std::string& source) {
  GameSpec spec;
  bool have_matrix = false;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(source, line_no, "", "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(source, line_no, "", "missing key before '='");
    if (!seen.insert(key).second) throw ParseError(source, line_no, key, "duplicate key");

    try {
      bool bracketed = false;
      if (key == "name") {
        spec.name = std::string(value);
      } else if (key == "matrix") {
        const auto items = split_list(value, bracketed);
        static const char* kNames[] = {"A00", "A01", "A10", "A11"};
        if (items.size() < 4) {
          throw std::invalid_argument("expected 4 entries (A00, A01, A10, A11), got " +
                                      std::to_string(items.size()) + "; missing " +
                                      kNames[items.size()]);
        }
        if (items.size() > 4) {
          throw std::invalid_argument("expected 4 entries (A00, A01, A10, A11), got " +
                                      std::to_string(items.size()));
        }
        std::array<double, 4> m{};
        for (std::size_t i = 0; i < 4; ++i) m[i] = parse_decimal(items[i]);
        spec.matrix = PayoffMatrix(m);
        have_matrix = true;
      } else if (key == "gamma" || key == "gamma_linspace") {
        if (seen.count("gamma") && seen.count("gamma_linspace")) {
          throw std::invalid_argument("give either gamma or gamma_linspace, not both");
        }
        const auto items = split_list(value, bracketed);
        std::vector<double> gs;
        if (key == "gamma") {
          if (items.empty()) throw std::invalid_argument("empty gamma list");
          for (const auto& it : items) gs.push_back(parse_angle(it));
        } else {
          if (items.size() != 3) throw std::invalid_argument("expected [start, stop, count]");
          const double lo = parse_angle(items[0]);
          const double hi = parse_angle(items[1]);
          const double count = parse_decimal(items[2]);
          if (count < 1.0 || count != std::floor(count)) {
            throw std::invalid_argument("count must be an integer >= 1");
          }
          const int n = static_cast<int>(count);
          for (int k = 0; k < n; ++k) gs.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
          // Pin the end exactly so that "pi" stays on the gamma = pi branch.
          if (n > 1) gs.back() = hi;
        }
        for (double g : gs) {
          if (!(g >= 0.0 && g <= kPi + 1e-12)) {
            throw std::invalid_argument("gamma " + format_number(g) + " outside [0, pi]");
          }
        }
        spec.gammas = std::move(gs);
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(source, line_no, key, e.what());
    }
  }
  if (!have_matrix) throw ParseError(source, line_no, "matrix", "missing required field");
  return spec;
}

GameSpec load_game_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_game_spec(ss.str(), path);
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

}  // namespace qgame

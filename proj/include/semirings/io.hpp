/*
 *   Copyright 2026 The semirings authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Text formats.
//
// .sr (semiring):          .band:                 .rees:
//   order N                  order N                bandI <path>
//   add                      o K                    bandL <path>
//   N rows of N indices      table                  ring <path>
//   mul                      N rows of N indices    P
//   N rows of N indices                             |Lambda| rows of |I| ring indices
//
// '#' starts a comment anywhere on a line.  Canonical serialization uses
// single spaces and a trailing newline, so parse/serialize round-trips are
// byte-exact.

#ifndef SEMIRINGS_IO_HPP_
#define SEMIRINGS_IO_HPP_

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "structures.hpp"

namespace semirings {

namespace detail {

// a token stream over #-commented text, tracking line numbers for errors
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) {
    int         line = 1;
    std::string cur;
    bool        comment = false;
    auto        flush   = [&] {
      if (!cur.empty()) {
        tokens_.emplace_back(cur, line);
        cur.clear();
      }
    };
    for (char ch : text) {
      if (ch == '\n') {
        flush();
        comment = false;
        ++line;
      } else if (comment) {
        // skip
      } else if (ch == '#') {
        flush();
        comment = true;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        cur += ch;
      }
    }
    flush();
  }

  bool done() const { return pos_ == tokens_.size(); }

  std::string expect_word(std::string const& what) {
    if (done()) {
      throw ParseError("unexpected end of input, expected " + what);
    }
    return tokens_[pos_++].first;
  }

  void expect_keyword(std::string const& kw) {
    auto [tok, line] = peek(kw);
    if (tok != kw) {
      throw ParseError("line " + std::to_string(line) + ": expected '" + kw
                       + "', got '" + tok + "'");
    }
    ++pos_;
  }

  int expect_int(std::string const& what) {
    auto [tok, line] = peek(what);
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("line " + std::to_string(line) + ": expected "
                         + what + ", got '" + tok + "'");
      }
    }
    ++pos_;
    return std::stoi(tok);
  }

  void expect_end() {
    if (!done()) {
      auto [tok, line] = peek("end of input");
      throw ParseError("line " + std::to_string(line)
                       + ": trailing input '" + tok + "'");
    }
  }

 private:
  std::pair<std::string, int> peek(std::string const& what) {
    if (done()) {
      throw ParseError("unexpected end of input, expected " + what);
    }
    return tokens_[pos_];
  }

  std::vector<std::pair<std::string, int>> tokens_;
  std::size_t                              pos_ = 0;
};

inline std::vector<int> read_table(TokenStream& ts, int rows, int cols,
                                   std::string const& what) {
  std::vector<int> out;
  out.reserve(rows * cols);
  for (int i = 0; i < rows * cols; ++i) {
    out.push_back(ts.expect_int(what + " entry"));
  }
  return out;
}

}  // namespace detail

//! Syntactic layer of the .sr format; no axiom checking.
struct RawTables {
  int              order;
  std::vector<int> add;
  std::vector<int> mul;
};

inline RawTables parse_semiring_tables(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect_keyword("order");
  int n = ts.expect_int("order");
  if (n <= 0) {
    throw ParseError("order must be positive");
  }
  ts.expect_keyword("add");
  auto add = detail::read_table(ts, n, n, "add");
  ts.expect_keyword("mul");
  auto mul = detail::read_table(ts, n, n, "mul");
  ts.expect_end();
  FiniteSemiring::check_shape(n, add, mul);
  return RawTables{n, std::move(add), std::move(mul)};
}

//! Parses and validates; ParseError for syntax, SemiringError for axioms.
inline FiniteSemiring parse_semiring(std::string_view text) {
  auto raw = parse_semiring_tables(text);
  return FiniteSemiring::validated(raw.order, std::move(raw.add),
                                   std::move(raw.mul));
}

inline std::string serialize_semiring(FiniteSemiring const& s) {
  std::ostringstream os;
  os << "order " << s.order() << "\nadd\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j != 0) {
        os << ' ';
      }
      os << s.add(i, j);
    }
    os << '\n';
  }
  os << "mul\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j != 0) {
        os << ' ';
      }
      os << s.mul(i, j);
    }
    os << '\n';
  }
  return os.str();
}

inline Band parse_band(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect_keyword("order");
  int n = ts.expect_int("order");
  ts.expect_keyword("o");
  int o = ts.expect_int("distinguished element");
  ts.expect_keyword("table");
  auto table = detail::read_table(ts, n, n, "table");
  ts.expect_end();
  return Band::validated(n, std::move(table), o);
}

inline std::string serialize_band(Band const& b) {
  std::ostringstream os;
  os << "order " << b.order << "\no " << b.o << "\ntable\n";
  for (int i = 0; i < b.order; ++i) {
    for (int j = 0; j < b.order; ++j) {
      if (j != 0) {
        os << ' ';
      }
      os << b.table[i * b.order + j];
    }
    os << '\n';
  }
  return os.str();
}

//! Parses a .rees file given a loader resolving the referenced paths to
//! file contents.
inline ReesSpec parse_rees(
    std::string_view text,
    std::function<std::string(std::string const&)> const& load) {
  detail::TokenStream ts(text);
  ts.expect_keyword("bandI");
  std::string pi = ts.expect_word("bandI path");
  ts.expect_keyword("bandL");
  std::string pl = ts.expect_word("bandL path");
  ts.expect_keyword("ring");
  std::string pr = ts.expect_word("ring path");
  Band        bi = parse_band(load(pi));
  Band        bl = parse_band(load(pl));
  FiniteSemiring ring = parse_semiring(load(pr));
  ts.expect_keyword("P");
  auto p = detail::read_table(ts, bl.order, bi.order, "P");
  ts.expect_end();
  return ReesSpec::checked(std::move(bi), std::move(bl), std::move(ring),
                           std::move(p));
}

inline std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

//! Loads a .rees file, resolving referenced paths relative to its directory.
inline ReesSpec load_rees_file(std::filesystem::path const& path) {
  auto dir = path.parent_path();
  return parse_rees(read_file(path), [&](std::string const& rel) {
    return read_file(dir / rel);
  });
}

}  // namespace semirings

#endif  // SEMIRINGS_IO_HPP_

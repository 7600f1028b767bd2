// Copyright 2026 The fvsgold Authors
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

#include "fvs/graph_io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fvs/error.hpp"

namespace fvs {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& what,
                              ErrorCode code = ErrorCode::kParse) {
  fail(code, "line " + std::to_string(line) + ": " + what);
}

std::int64_t number(std::string_view tok, int line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Adds edges while collapsing duplicates.
class Builder {
 public:
  explicit Builder(ParsedGraph& out) : out_(out) {}

  void edge(int a, int b, int line) {
    if (a == b) {
      parse_error(line, "self-loop at vertex " + std::to_string(out_.graph.label(a)),
                  ErrorCode::kSelfLoop);
    }
    if (!seen_.insert(std::minmax(a, b)).second) {
      out_.warnings.push_back("line " + std::to_string(line) + ": duplicate edge " +
                              std::to_string(out_.graph.label(a)) + " " +
                              std::to_string(out_.graph.label(b)) + " ignored");
      return;
    }
    out_.graph.edges.push_back({a, b});
  }

 private:
  ParsedGraph& out_;
  std::set<std::pair<int, int>> seen_;
};

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line;
    f(text.substr(pos, end - pos), line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

ParsedGraph parse_edgelist(std::string_view text) {
  ParsedGraph out;
  Builder builder(out);
  std::unordered_map<std::int64_t, int> index;
  auto vertex = [&](std::int64_t name) {
    auto [it, fresh] = index.emplace(name, out.graph.n);
    if (fresh) {
      out.graph.labels.push_back(name);
      ++out.graph.n;
    }
    return it->second;
  };
  for_each_line(text, [&](std::string_view raw, int line) {
    const std::string_view body = raw.substr(0, raw.find('#'));
    const auto tok = tokens(body);
    if (tok.empty()) return;
    if (tok.size() != 2) parse_error(line, "expected two vertex names");
    const std::int64_t a = number(tok[0], line);
    const std::int64_t b = number(tok[1], line);
    if (a == b) parse_error(line, "self-loop at vertex " + std::to_string(a), ErrorCode::kSelfLoop);
    const int u = vertex(a);
    builder.edge(u, vertex(b), line);
  });
  return out;
}

ParsedGraph parse_dimacs(std::string_view text) {
  ParsedGraph out;
  Builder builder(out);
  bool header = false;
  std::int64_t declared = 0;
  std::int64_t lines_seen = 0;
  int header_line = 0;
  for_each_line(text, [&](std::string_view raw, int line) {
    const auto tok = tokens(raw);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (header) parse_error(line, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        parse_error(line, "expected 'p edge N M'");
      }
      const std::int64_t n = number(tok[2], line);
      if (n > 10'000'000) parse_error(line, "vertex count too large");
      declared = number(tok[3], line);
      out.graph.n = static_cast<int>(n);
      for (std::int64_t i = 1; i <= n; ++i) out.graph.labels.push_back(i);
      header = true;
      header_line = line;
      return;
    }
    if (tok[0] == "e") {
      if (!header) parse_error(line, "edge before the problem line");
      if (tok.size() != 3) parse_error(line, "expected 'e U V'");
      const std::int64_t a = number(tok[1], line);
      const std::int64_t b = number(tok[2], line);
      for (std::int64_t x : {a, b}) {
        if (x < 1 || x > out.graph.n) {
          parse_error(line, "vertex " + std::to_string(x) + " outside 1.." +
                                std::to_string(out.graph.n));
        }
      }
      ++lines_seen;
      builder.edge(static_cast<int>(a - 1), static_cast<int>(b - 1), line);
      return;
    }
    parse_error(line, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (!header) fail(ErrorCode::kParse, "missing 'p edge N M' line");
  if (lines_seen != declared) {
    parse_error(header_line,
                "header declares " + std::to_string(declared) + " edges, file has " +
                    std::to_string(lines_seen),
                ErrorCode::kEdgeCountMismatch);
  }
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgelist;
  if (name == "dimacs") return GraphFormat::kDimacs;
  fail(ErrorCode::kInvalidArgument, "unknown graph format '" + std::string(name) + "'");
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgelist ? parse_edgelist(text) : parse_dimacs(text);
}

std::string write_edgelist(const SimpleGraph& g) {
  std::ostringstream out;
  for (const auto& [a, b] : g.edges) out << g.label(a) << ' ' << g.label(b) << '\n';
  return out.str();
}

}  // namespace fvs

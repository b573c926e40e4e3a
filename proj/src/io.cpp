// Copyright 2026 The paritycut Authors
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

#include "paritycut/io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace paritycut {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void line_error(ErrorCode code, std::size_t line, const std::string& what) {
  fail(code, "line " + std::to_string(line) + ": " + what);
}

std::size_t number(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    line_error(ErrorCode::kSyntaxError, line, "expected a non-negative integer, got '" +
                                                  std::string(token) + "'");
  }
  return value;
}

}  // namespace

SignedGraph parse_signed_edge_list(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<SignedEdge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    last_line = line_no;

    if (!header) {
      if (tokens.size() != 2) line_error(ErrorCode::kSyntaxError, line_no, "header must be 'n m'");
      header.emplace(number(tokens[0], line_no), number(tokens[1], line_no));
      if (header->first == 0) line_error(ErrorCode::kEmptyGraph, line_no, "n must be at least 1");
      continue;
    }

    if (tokens.size() != 3) line_error(ErrorCode::kSyntaxError, line_no, "edge must be 'u v s'");
    if (edges.size() == header->second) {
      line_error(ErrorCode::kCountMismatch, line_no,
                 "more than the " + std::to_string(header->second) + " edges declared");
    }
    const std::size_t n = header->first;
    const std::size_t u = number(tokens[0], line_no);
    const std::size_t v = number(tokens[1], line_no);
    for (auto x : {u, v}) {
      if (x < 1 || x > n) {
        line_error(ErrorCode::kVertexOutOfRange, line_no,
                   "vertex " + std::to_string(x) + " not in 1.." + std::to_string(n));
      }
    }
    if (u == v) line_error(ErrorCode::kSelfLoop, line_no, "loop at vertex " + std::to_string(u));
    Sign sign;
    if (tokens[2] == "+") {
      sign = Sign::kPositive;
    } else if (tokens[2] == "-") {
      sign = Sign::kNegative;
    } else {
      line_error(ErrorCode::kSyntaxError, line_no,
                 "sign must be '+' or '-', got '" + std::string(tokens[2]) + "'");
    }
    const auto a = static_cast<Vertex>(std::min(u, v) - 1);
    const auto b = static_cast<Vertex>(std::max(u, v) - 1);
    if (!seen.emplace(a, b).second) {
      line_error(ErrorCode::kDuplicateEdge, line_no,
                 "edge " + std::to_string(u) + " " + std::to_string(v) + " repeated");
    }
    edges.push_back({a, b, sign});
  }

  if (!header) fail(ErrorCode::kSyntaxError, "missing 'n m' header");
  if (edges.size() != header->second) {
    line_error(ErrorCode::kCountMismatch, last_line,
               "header declares " + std::to_string(header->second) + " edges, found " +
                   std::to_string(edges.size()));
  }
  return build_signed_graph(header->first, edges);
}

std::string serialize_signed_edge_list(const SignedGraph& s) {
  std::ostringstream os;
  os << s.order() << ' ' << s.size() << '\n';
  for (const auto& e : s.signed_edges()) {
    os << e.u + 1 << ' ' << e.v + 1 << ' ' << sign_char(e.sign) << '\n';
  }
  return os.str();
}

std::string export_dot(const SignedGraph& s, const std::optional<ParityLabelling>& labelling) {
  if (labelling && labelling->size() != s.order()) {
    fail(ErrorCode::kLabellingMismatch, "labelling does not match the vertex count");
  }
  auto name = [&](Vertex v) { return labelling ? labelling->label(v) : v + 1; };
  std::ostringstream os;
  os << "graph signed {\n";
  for (Vertex v = 0; v < s.order(); ++v) os << "  " << name(v) << ";\n";
  for (const auto& e : s.signed_edges()) {
    os << "  " << name(e.u) << " -- " << name(e.v)
       << (e.sign == Sign::kPositive ? " [style=solid];\n" : " [style=dashed];\n");
  }
  os << "}\n";
  return os.str();
}

}  // namespace paritycut

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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "paritycut/core.hpp"

namespace paritycut {

// Signed edge-list document:
//
//   # comment (anywhere; runs to end of line)
//   n m
//   u v s      (m records, 1-based vertices, s is '+' or '-')
//
// Tokens are whitespace separated; blank lines are ignored.
// Throws SyntaxError, CountMismatch, EmptyGraph, VertexOutOfRange, SelfLoop or
// DuplicateEdge, with the offending line number in the message.
SignedGraph parse_signed_edge_list(std::string_view text);

// Canonical document: header then edges in sorted order.
std::string serialize_signed_edge_list(const SignedGraph& s);

// Undirected DOT: positive edges solid, negative dashed. Vertices are named
// by their label when a labelling is given, else by 1-based id.
// Throws LabellingMismatch.
std::string export_dot(const SignedGraph& s,
                       const std::optional<ParityLabelling>& labelling = std::nullopt);

}  // namespace paritycut

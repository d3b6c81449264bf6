#pragma once

// Text format for vertex sets:
//
//   clforms-vertexset v1 q=<q> n=<n> l=<l>
//   <n*l entries in [0,q), row-major l x n matrix>   (one vertex per line)
//
// '#' starts a comment; blank lines are ignored; duplicates are rejected.

#include <iosfwd>
#include <string>

#include "clforms/vertex_set.hpp"

namespace clforms::cli {

/// Throws Error(ParseError) with a line number on malformed input.
VertexSet read_vertex_set(std::istream& in, const std::string& source = "<input>");
VertexSet read_vertex_set_file(const std::string& path);

void write_vertex_set(std::ostream& out, const VertexSet& s, const std::string& comment = {});
void write_vertex_set_file(const std::string& path, const VertexSet& s, const std::string& comment = {});

}  // namespace clforms::cli

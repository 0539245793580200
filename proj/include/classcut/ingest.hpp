#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "classcut/model.hpp"

namespace classcut {

struct MatrixLabel {
  std::string name;
  MemberKind kind;

  bool operator==(const MatrixLabel &) const = default;
};

// A raw member-similarity matrix as read from CSV. Fully mirrored and
// validated: symmetric, unit diagonal, values in [0,1].
struct MatrixDocument {
  std::vector<MatrixLabel> labels;
  std::vector<std::vector<double>> values;

  bool operator==(const MatrixDocument &) const = default;
};

// Class description language. Grammar:
//
//   document  := class_decl
//   class_decl:= "class" IDENT "{" member* "}"
//   member    := field_decl | method_decl
//   field_decl:= "field" IDENT ";"
//   method_decl := "method" IDENT uses? callsc? ";"
//   uses      := "uses" IDENT ("," IDENT)*
//   callsc    := "calls" IDENT ("," IDENT)*
//
// '#' starts a line comment. Forward references are allowed; names are
// resolved after the whole body is read.
ClassGraph parse_cdl(std::string_view text);
std::string write_cdl(const ClassGraph &graph);

// JSON document of shape
//   {"class": str, "fields": [str],
//    "methods": [{"name": str, "uses": [str], "calls": [str]}]}
// Unknown keys are rejected.
ClassGraph parse_graph_json(std::string_view text);
std::string write_graph_json(const ClassGraph &graph);

// First row is a header of member labels, each with a ':m' or ':f' kind
// suffix. Data rows may carry a leading row label. Blank cells are mirrored
// from the opposite triangle; a blank diagonal defaults to 1.
MatrixDocument parse_matrix_csv(std::string_view text);
std::string write_matrix_csv(const MatrixDocument &doc);

} // namespace classcut

#include "classcut/ingest.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "classcut/detail/format.hpp"

namespace classcut {

namespace {

// ---- CDL ----

struct Token {
  enum Type { Ident, LBrace, RBrace, Semi, Comma, End } type;
  std::string text;
  int line, col;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size())
      return {Token::End, "", line, col};
    char c = src_[pos_];
    switch (c) {
    case '{': advance(); return {Token::LBrace, "{", line, col};
    case '}': advance(); return {Token::RBrace, "}", line, col};
    case ';': advance(); return {Token::Semi, ";", line, col};
    case ',': advance(); return {Token::Comma, ",", line, col};
    default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        word += src_[pos_];
        advance();
      }
      return {Token::Ident, word, line, col};
    }
    throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class CdlParser {
public:
  explicit CdlParser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  ClassGraph parse() {
    expect_keyword("class");
    std::string class_name = expect_ident("class name");
    expect(Token::LBrace, "'{'");
    std::vector<MemberDecl> members;
    EdgeMap refs, calls;
    while (tok_.type != Token::RBrace) {
      if (tok_.type == Token::End)
        throw SyntaxError(tok_.line, tok_.col, "expected '}' or member declaration");
      std::string kw = expect_ident("'field' or 'method'");
      if (kw == "field") {
        members.push_back({expect_ident("field name"), MemberKind::Field});
        expect(Token::Semi, "';'");
      } else if (kw == "method") {
        std::string name = expect_ident("method name");
        members.push_back({name, MemberKind::Method});
        if (tok_.type == Token::Ident && tok_.text == "uses") {
          tok_ = lex_.next();
          refs[name] = ident_list();
        }
        if (tok_.type == Token::Ident && tok_.text == "calls") {
          tok_ = lex_.next();
          calls[name] = ident_list();
        }
        expect(Token::Semi, "';'");
      } else {
        throw SyntaxError(tok_.line, tok_.col, "expected 'field' or 'method', got '" + kw + "'");
      }
    }
    tok_ = lex_.next();
    if (tok_.type != Token::End)
      throw SyntaxError(tok_.line, tok_.col, "trailing input after class body");
    return ClassGraph::build(std::move(class_name), std::move(members), refs, calls);
  }

private:
  std::vector<std::string> ident_list() {
    std::vector<std::string> names;
    names.push_back(expect_ident("member name"));
    while (tok_.type == Token::Comma) {
      tok_ = lex_.next();
      names.push_back(expect_ident("member name"));
    }
    return names;
  }

  void expect_keyword(const std::string &kw) {
    if (tok_.type != Token::Ident || tok_.text != kw)
      throw SyntaxError(tok_.line, tok_.col, "expected '" + kw + "'");
    tok_ = lex_.next();
  }

  std::string expect_ident(const std::string &what) {
    if (tok_.type != Token::Ident)
      throw SyntaxError(tok_.line, tok_.col, "expected " + what);
    std::string text = tok_.text;
    tok_ = lex_.next();
    return text;
  }

  void expect(Token::Type type, const std::string &what) {
    if (tok_.type != type)
      throw SyntaxError(tok_.line, tok_.col, "expected " + what);
    tok_ = lex_.next();
  }

  Lexer lex_;
  Token tok_;
};

// ---- CSV helpers ----

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ','))
    cells.push_back(cell);
  if (!line.empty() && line.back() == ',')
    cells.push_back("");
  return cells;
}

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

MatrixLabel parse_label(const std::string &raw) {
  auto pos = raw.rfind(':');
  if (pos == std::string::npos || pos + 2 != raw.size() ||
      (raw[pos + 1] != 'm' && raw[pos + 1] != 'f'))
    throw Error(ErrorCode::MalformedDocument,
                "matrix label '" + raw + "' must end in ':m' or ':f'");
  std::string name = raw.substr(0, pos);
  if (name.empty())
    throw Error(ErrorCode::MalformedDocument, "empty member name in matrix label");
  return {name, raw[pos + 1] == 'm' ? MemberKind::Method : MemberKind::Field};
}

} // namespace

ClassGraph parse_cdl(std::string_view text) { return CdlParser(text).parse(); }

std::string write_cdl(const ClassGraph &graph) {
  std::string out = "class " + graph.name() + " {\n";
  for (auto &m : graph.members()) {
    if (m.kind == MemberKind::Field) {
      out += "  field " + m.name + ";\n";
      continue;
    }
    out += "  method " + m.name;
    auto join = [&](const std::set<MemberId> &ids, const char *kw) {
      if (ids.empty())
        return;
      out += std::string(" ") + kw + " ";
      bool first = true;
      for (auto id : ids) {
        if (!first)
          out += ", ";
        out += graph.member(id).name;
        first = false;
      }
    };
    join(graph.uses(m.id), "uses");
    join(graph.calls(m.id), "calls");
    out += ";\n";
  }
  out += "}\n";
  return out;
}

ClassGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error(ErrorCode::MalformedDocument, "not a JSON object");
  for (auto &[key, _] : doc.items())
    if (key != "class" && key != "fields" && key != "methods")
      throw Error(ErrorCode::MalformedDocument, "unknown key '" + key + "'");
  if (!doc.contains("class") || !doc["class"].is_string())
    throw Error(ErrorCode::MalformedDocument, "missing string key 'class'");
  if (!doc.contains("fields") || !doc["fields"].is_array())
    throw Error(ErrorCode::MalformedDocument, "missing array key 'fields'");
  if (!doc.contains("methods") || !doc["methods"].is_array())
    throw Error(ErrorCode::MalformedDocument, "missing array key 'methods'");

  std::vector<MemberDecl> members;
  EdgeMap refs, calls;
  auto str_array = [](const nlohmann::json &arr, const char *what) {
    std::vector<std::string> out;
    for (auto &v : arr) {
      if (!v.is_string())
        throw Error(ErrorCode::MalformedDocument, std::string(what) + " must contain strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  for (auto &m : doc["methods"]) {
    if (!m.is_object() || !m.contains("name") || !m["name"].is_string())
      throw Error(ErrorCode::MalformedDocument, "method entries need a string 'name'");
    for (auto &[key, _] : m.items())
      if (key != "name" && key != "uses" && key != "calls")
        throw Error(ErrorCode::MalformedDocument, "unknown method key '" + key + "'");
    std::string name = m["name"].get<std::string>();
    members.push_back({name, MemberKind::Method});
    if (m.contains("uses"))
      refs[name] = str_array(m["uses"], "'uses'");
    if (m.contains("calls"))
      calls[name] = str_array(m["calls"], "'calls'");
  }
  for (auto &f : str_array(doc["fields"], "'fields'"))
    members.push_back({f, MemberKind::Field});
  return ClassGraph::build(doc["class"].get<std::string>(), std::move(members), refs, calls);
}

std::string write_graph_json(const ClassGraph &graph) {
  nlohmann::json doc;
  doc["class"] = graph.name();
  doc["fields"] = nlohmann::json::array();
  doc["methods"] = nlohmann::json::array();
  for (auto &m : graph.members()) {
    if (m.kind == MemberKind::Field) {
      doc["fields"].push_back(m.name);
      continue;
    }
    nlohmann::json entry;
    entry["name"] = m.name;
    entry["uses"] = nlohmann::json::array();
    entry["calls"] = nlohmann::json::array();
    for (auto id : graph.uses(m.id))
      entry["uses"].push_back(graph.member(id).name);
    for (auto id : graph.calls(m.id))
      entry["calls"].push_back(graph.member(id).name);
    doc["methods"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

MatrixDocument parse_matrix_csv(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, cur))
      if (!trim(cur).empty())
        lines.push_back(cur);
  }
  if (lines.empty())
    throw Error(ErrorCode::MalformedDocument, "empty matrix document");

  auto header = split_csv_line(lines[0]);
  // Tolerate a leading empty corner cell (row-labelled table form).
  std::size_t label_offset = 0;
  if (!header.empty() && trim(header[0]).empty())
    label_offset = 1;
  MatrixDocument doc;
  for (std::size_t i = label_offset; i < header.size(); ++i)
    doc.labels.push_back(parse_label(trim(header[i])));
  std::size_t n = doc.labels.size();
  if (n == 0)
    throw Error(ErrorCode::MalformedDocument, "matrix header has no labels");
  if (lines.size() - 1 != n)
    throw Error(ErrorCode::NonSquare, "matrix has " + std::to_string(n) + " labels but " +
                                          std::to_string(lines.size() - 1) + " data rows");

  constexpr double unset = -1.0;
  std::vector<std::vector<double>> raw(n, std::vector<double>(n, unset));
  for (std::size_t i = 0; i < n; ++i) {
    auto cells = split_csv_line(lines[i + 1]);
    std::size_t offset = 0;
    if (!cells.empty()) {
      std::string first = trim(cells[0]);
      // A non-numeric leading cell is the row label.
      char *end = nullptr;
      std::strtod(first.c_str(), &end);
      if (!first.empty() && end == first.c_str())
        offset = 1;
    }
    if (cells.size() - offset > n)
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i + 1) + " has too many cells");
    for (std::size_t j = 0; j + offset < cells.size(); ++j) {
      std::string cell = trim(cells[j + offset]);
      if (cell.empty())
        continue;
      char *end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0')
        throw Error(ErrorCode::MalformedDocument, "bad numeric cell '" + cell + "'");
      if (v < 0.0 || v > 1.0)
        throw Error(ErrorCode::ValueOutOfRange,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) + ") = " + cell);
      raw[i][j] = v;
    }
  }

  doc.values.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double a = raw[i][j], b = raw[j][i];
      if (i == j) {
        if (a == unset)
          a = 1.0;
        if (a != 1.0)
          throw Error(ErrorCode::ValueOutOfRange, "diagonal entry " + std::to_string(i) +
                                                      " must be 1, got " +
                                                      detail::format_double(a));
        doc.values[i][j] = 1.0;
        continue;
      }
      if (a != unset && b != unset && std::abs(a - b) > 1e-9)
        throw Error(ErrorCode::AsymmetricConflict,
                    "cells (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                        std::to_string(j) + "," + std::to_string(i) + ") disagree");
      double v = a != unset ? a : b;
      if (v == unset)
        v = 0.0; // both triangles blank
      doc.values[i][j] = doc.values[j][i] = v;
    }
  }
  return doc;
}

std::string write_matrix_csv(const MatrixDocument &doc) {
  std::string out;
  for (auto &l : doc.labels) {
    out += ',';
    out += l.name + (l.kind == MemberKind::Method ? ":m" : ":f");
  }
  out += '\n';
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    auto &l = doc.labels[i];
    out += l.name + (l.kind == MemberKind::Method ? ":m" : ":f");
    for (double v : doc.values[i]) {
      out += ',';
      out += detail::format_double(v);
    }
    out += '\n';
  }
  return out;
}

} // namespace classcut

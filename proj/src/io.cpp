#include "nodal/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

#include "nodal/errors.hpp"

namespace nodal {

namespace {

bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == ')';
}

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

// Splits a line into ids and the punctuation ":" and "->".
std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    const char c = line[k];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (id_char(c)) {
      const auto start = k;
      while (k < line.size() && id_char(line[k])) ++k;
      out.push_back({line.substr(start, k - start), start + 1});
    } else if (c == ':') {
      out.push_back({":", k + 1});
      ++k;
    } else if (c == '-' && k + 1 < line.size() && line[k + 1] == '>') {
      out.push_back({"->", k + 1});
      k += 2;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", line_no, k + 1);
    }
  }
  return out;
}

bool is_id(const Token& t) { return !t.text.empty() && id_char(t.text.front()); }

void expect_id(const std::vector<Token>& toks, std::size_t k, std::size_t line_no, std::size_t line_len,
               const char* what) {
  if (k >= toks.size()) throw SyntaxError(std::string("expected ") + what, line_no, line_len + 1);
  if (!is_id(toks[k])) throw SyntaxError(std::string("expected ") + what, line_no, toks[k].column);
}

void expect_end(const std::vector<Token>& toks, std::size_t k, std::size_t line_no) {
  if (k < toks.size()) throw SyntaxError("unexpected '" + toks[k].text + "'", line_no, toks[k].column);
}

void expect_punct(const std::vector<Token>& toks, std::size_t k, const std::string& p, std::size_t line_no,
                  std::size_t line_len) {
  if (k >= toks.size()) throw SyntaxError("expected '" + p + "'", line_no, line_len + 1);
  if (toks[k].text != p) throw SyntaxError("expected '" + p + "'", line_no, toks[k].column);
}

}  // namespace

DatumFile parse_datum_file(const std::string& text) {
  DatumFile out;
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::pair<GluePair, std::size_t>> glues;
  std::vector<std::pair<std::string, std::size_t>> blows;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = tokenize(line, line_no);
    if (toks.empty()) continue;
    const auto& kw = toks.front().text;
    const auto len = line.size();
    if (kw == "vertices") {
      expect_id(toks, 1, line_no, len, "a vertex id");
      for (std::size_t k = 1; k < toks.size(); ++k) {
        expect_id(toks, k, line_no, len, "a vertex id");
        if (out.vertex_lines.count(toks[k].text)) {
          throw SemanticError("vertex '" + toks[k].text + "' declared twice", line_no);
        }
        out.vertex_lines[toks[k].text] = line_no;
        vertices.push_back(toks[k].text);
      }
    } else if (kw == "arrow") {
      expect_id(toks, 1, line_no, len, "an arrow id");
      expect_punct(toks, 2, ":", line_no, len);
      expect_id(toks, 3, line_no, len, "a source vertex");
      expect_punct(toks, 4, "->", line_no, len);
      expect_id(toks, 5, line_no, len, "a target vertex");
      expect_end(toks, 6, line_no);
      const auto& id = toks[1].text;
      if (out.arrow_lines.count(id)) throw SemanticError("arrow '" + id + "' declared twice", line_no);
      out.arrow_lines[id] = line_no;
      arrows.push_back({id, toks[3].text, toks[5].text});
    } else if (kw == "glue") {
      expect_id(toks, 1, line_no, len, "a vertex id");
      expect_id(toks, 2, line_no, len, "a second vertex id");
      expect_end(toks, 3, line_no);
      glues.push_back({{toks[1].text, toks[2].text}, line_no});
    } else if (kw == "blow") {
      expect_id(toks, 1, line_no, len, "a vertex id");
      expect_end(toks, 2, line_no);
      blows.push_back({toks[1].text, line_no});
    } else {
      throw SyntaxError("unknown directive '" + kw + "'", line_no, toks.front().column);
    }
  }

  auto known = [&](const std::string& v, std::size_t at) {
    if (!out.vertex_lines.count(v)) throw SemanticError("unknown vertex '" + v + "'", at);
  };
  for (const auto& a : arrows) {
    known(a.source, out.arrow_lines[a.id]);
    known(a.target, out.arrow_lines[a.id]);
  }
  std::map<std::string, std::size_t> used;
  auto use = [&](const std::string& v, std::size_t at) {
    known(v, at);
    if (used.count(v)) {
      throw SemanticError("vertex '" + v + "' already used by the operation on line " + std::to_string(used[v]),
                          at);
    }
    used[v] = at;
  };
  for (const auto& [pair, at] : glues) {
    if (pair.first == pair.second) throw SemanticError("cannot glue '" + pair.first + "' to itself", at);
    use(pair.first, at);
    use(pair.second, at);
    out.datum.glue_pairs.push_back(pair);
  }
  for (const auto& [v, at] : blows) {
    use(v, at);
    out.datum.blow_vertices.push_back(v);
  }
  out.datum.base = Quiver(vertices, arrows);
  return out;
}

NodalDatum parse_datum(const std::string& text) { return parse_datum_file(text).datum; }

std::string serialize_datum(const NodalDatum& d) {
  std::string out;
  const auto& q = d.base;
  if (q.vertex_count() > 0) {
    out += "vertices";
    for (const auto& v : q.vertices()) out += " " + v;
    out += "\n";
  }
  for (const auto& a : q.arrows()) {
    out += "arrow " + a.id + " : " + q.vertex(a.source) + " -> " + q.vertex(a.target) + "\n";
  }
  for (const auto& p : d.glue_pairs) out += "glue " + p.first + " " + p.second + "\n";
  for (const auto& v : d.blow_vertices) out += "blow " + v + "\n";
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json word_json(const Quiver& q, const Path& p) {
  auto arr = ordered_json::array();
  for (auto a : p.word()) arr.push_back(q.arrow(a).id);
  return arr;
}

std::string text_format(const Presentation& p) {
  const auto& q = p.quiver();
  std::string out = "vertices:";
  for (const auto& v : q.vertices()) out += " " + v;
  out += "\narrows:\n";
  for (const auto& a : q.arrows()) {
    out += "  " + a.id + " : " + q.vertex(a.source) + " -> " + q.vertex(a.target) + "\n";
  }
  out += "relations:\n";
  for (const auto& r : p.relations()) out += "  " + relation_string(q, r) + "\n";
  return out;
}

std::string json_format(const Presentation& p) {
  const auto& q = p.quiver();
  ordered_json j;
  j["vertices"] = q.vertices();
  j["arrows"] = ordered_json::array();
  for (const auto& a : q.arrows()) {
    j["arrows"].push_back({{"id", a.id}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}});
  }
  j["relations"] = ordered_json::array();
  for (const auto& r : p.relations()) {
    if (r.is_zero()) {
      j["relations"].push_back({{"kind", "zero"}, {"path", word_json(q, r.lhs)}});
    } else {
      j["relations"].push_back(
          {{"kind", "commutation"}, {"lhs", word_json(q, r.lhs)}, {"rhs", word_json(q, r.rhs)}});
    }
  }
  return j.dump(2) + "\n";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_format(const Presentation& p, const GluedVertexMap* map) {
  const auto& q = p.quiver();
  std::set<std::string> merged;
  std::vector<std::vector<std::string>> blown;
  if (map) {
    std::map<std::string, int> hits;
    for (const auto& [base, ids] : map->image) {
      if (ids.size() == 2) blown.push_back(ids);
      if (ids.size() == 1) ++hits[ids.front()];
    }
    for (const auto& [id, n] : hits) {
      if (n > 1) merged.insert(id);
    }
  }
  std::string out = "digraph nodal {\n";
  for (const auto& r : p.relations()) out += "  // relation: " + relation_string(q, r) + "\n";
  std::set<std::string> clustered;
  for (std::size_t k = 0; k < blown.size(); ++k) {
    out += "  subgraph cluster_blow" + std::to_string(k) + " {\n    style=dashed;\n";
    for (const auto& v : blown[k]) {
      out += "    " + quoted(v) + " [shape=circle];\n";
      clustered.insert(v);
    }
    out += "  }\n";
  }
  for (const auto& v : q.vertices()) {
    if (clustered.count(v)) continue;
    out += "  " + quoted(v) + (merged.count(v) ? " [shape=box];\n" : " [shape=point, xlabel=" + quoted(v) + "];\n");
  }
  for (const auto& a : q.arrows()) {
    out += "  " + quoted(q.vertex(a.source)) + " -> " + quoted(q.vertex(a.target)) + " [label=" + quoted(a.id) +
           "];\n";
  }
  out += "}\n";
  return out;
}

Path json_path(const Quiver& q, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidPresentation("relation path must be an array of arrow ids");
  std::vector<std::string> ids;
  for (const auto& x : j) ids.push_back(x.get<std::string>());
  return Path::from_ids(q, ids);
}

}  // namespace

std::string emit_presentation(const Presentation& p, OutputFormat format, const GluedVertexMap* vertex_map) {
  const auto canon = p.canonical();
  switch (format) {
    case OutputFormat::Text: return text_format(canon);
    case OutputFormat::Json: return json_format(canon);
    case OutputFormat::Dot: return dot_format(canon, vertex_map);
  }
  return {};
}

Presentation parse_presentation_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<ArrowSpec> arrows;
    for (const auto& a : j.at("arrows")) {
      arrows.push_back({a.at("id").get<std::string>(), a.at("source").get<std::string>(),
                        a.at("target").get<std::string>()});
    }
    Quiver q(vertices, arrows);
    std::vector<Relation> relations;
    for (const auto& r : j.at("relations")) {
      const auto kind = r.at("kind").get<std::string>();
      if (kind == "zero") {
        relations.push_back(Relation::zero(json_path(q, r.at("path"))));
      } else if (kind == "commutation") {
        relations.push_back(Relation::commutation(json_path(q, r.at("lhs")), json_path(q, r.at("rhs"))));
      } else {
        throw InvalidPresentation("unknown relation kind '" + kind + "'");
      }
    }
    return Presentation(std::move(q), std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidPresentation(std::string("malformed presentation JSON: ") + e.what());
  } catch (const InvalidPresentation&) {
    throw;
  } catch (const InputError& e) {
    throw InvalidPresentation(e.what());
  }
}

}  // namespace nodal

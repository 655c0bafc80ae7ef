#include "uqdraw/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace uqdraw {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

using TokenLine = std::vector<Token>;

// Significant lines only: blank lines and '#' comments are dropped.
std::vector<TokenLine> tokenize(std::istream& in) {
  std::vector<TokenLine> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    TokenLine tokens;
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      const size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '#') ++i;
      tokens.push_back({raw.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

void expect_header(const std::vector<TokenLine>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected header '" + kind + " v1'");
  const TokenLine& first = lines.front();
  if (first.size() != 2 || first[0].text != kind || first[1].text != "v1") {
    throw ParseError(first[0].line, first[0].col, "expected header '" + kind + " v1'");
  }
}

int parse_int(const Token& t, const char* what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError(t.line, t.col, std::string(what) + " must be an integer, got '" + t.text + "'");
  }
  if (pos != t.text.size()) {
    throw ParseError(t.line, t.col, std::string(what) + " must be an integer, got '" + t.text + "'");
  }
  return value;
}

Universe parse_universe_line(const TokenLine& tokens) {
  std::vector<std::string> names;
  for (size_t i = 1; i < tokens.size(); ++i) {
    for (size_t j = 1; j < i; ++j) {
      if (tokens[j].text == tokens[i].text) {
        throw ParseError(tokens[i].line, tokens[i].col,
                         "duplicate element '" + tokens[i].text + "'");
      }
    }
    names.push_back(tokens[i].text);
  }
  if (names.size() > static_cast<size_t>(Universe::kMaxElements)) {
    throw ParseError(tokens[0].line, tokens[0].col, "universe exceeds 64 elements");
  }
  return Universe(std::move(names));
}

StateSet parse_state_tokens(const Universe& u, const TokenLine& tokens, size_t first) {
  StateSet s;
  for (size_t i = first; i < tokens.size(); ++i) {
    const int e = u.index(tokens[i].text);
    if (e < 0) {
      throw ParseError(tokens[i].line, tokens[i].col,
                       "unknown element '" + tokens[i].text + "'");
    }
    if (s.contains(e)) {
      throw ParseError(tokens[i].line, tokens[i].col,
                       "repeated element '" + tokens[i].text + "'");
    }
    s = s.with(e);
  }
  return s;
}

}  // namespace

SetFamily read_family(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "family");

  bool have_universe = false;
  Universe universe;
  std::vector<StateSet> states;
  for (size_t li = 1; li < lines.size(); ++li) {
    const TokenLine& tokens = lines[li];
    const Token& head = tokens[0];
    if (head.text == "universe") {
      if (have_universe) throw ParseError(head.line, head.col, "universe already declared");
      universe = parse_universe_line(tokens);
      have_universe = true;
    } else if (head.text == "state") {
      if (!have_universe) {
        throw ParseError(head.line, head.col, "universe must be declared before states");
      }
      const StateSet s = parse_state_tokens(universe, tokens, 1);
      for (StateSet prev : states) {
        if (prev == s) {
          throw ParseError(head.line, head.col,
                           "duplicate state " + to_string(s, universe));
        }
      }
      states.push_back(s);
    } else {
      throw ParseError(head.line, head.col, "unexpected directive '" + head.text + "'");
    }
  }
  if (!have_universe) throw ParseError(1, 1, "missing universe declaration");
  return SetFamily(universe, std::move(states));
}

std::string write_family(const SetFamily& f) {
  std::ostringstream out;
  out << "family v1\n";
  out << "universe";
  for (const std::string& n : f.universe().names()) out << " " << n;
  out << "\n";
  for (StateSet s : f.states()) {
    out << "state";
    for (int e : s.elements()) out << " " << f.universe().name(e);
    out << "\n";
  }
  return out.str();
}

QuadrantArrangement read_arrangement(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "arrangement");

  bool have_universe = false;
  Universe universe;
  std::map<int, Corner> corners;  // element -> corner
  std::vector<int> permutation;
  const Token* permutation_at = nullptr;

  for (size_t li = 1; li < lines.size(); ++li) {
    const TokenLine& tokens = lines[li];
    const Token& head = tokens[0];
    if (head.text == "universe") {
      if (have_universe) throw ParseError(head.line, head.col, "universe already declared");
      universe = parse_universe_line(tokens);
      have_universe = true;
    } else if (head.text == "corner") {
      if (!have_universe) {
        throw ParseError(head.line, head.col, "universe must be declared before corners");
      }
      if (permutation_at != nullptr) {
        throw ParseError(head.line, head.col, "corner lines cannot be mixed with permutation");
      }
      if (tokens.size() != 4) {
        throw ParseError(head.line, head.col, "expected: corner NAME X Y");
      }
      const int e = universe.index(tokens[1].text);
      if (e < 0) {
        throw ParseError(tokens[1].line, tokens[1].col,
                         "unknown element '" + tokens[1].text + "'");
      }
      if (corners.count(e) != 0) {
        throw ParseError(tokens[1].line, tokens[1].col,
                         "duplicate corner for '" + tokens[1].text + "'");
      }
      const Corner c{parse_int(tokens[2], "x coordinate"), parse_int(tokens[3], "y coordinate")};
      for (const auto& [other, oc] : corners) {
        if (oc.x == c.x) {
          throw ParseError(tokens[2].line, tokens[2].col,
                           "x coordinate " + tokens[2].text + " already used by '" +
                               universe.name(other) + "'");
        }
        if (oc.y == c.y) {
          throw ParseError(tokens[3].line, tokens[3].col,
                           "y coordinate " + tokens[3].text + " already used by '" +
                               universe.name(other) + "'");
        }
      }
      corners[e] = c;
    } else if (head.text == "permutation") {
      if (!have_universe) {
        throw ParseError(head.line, head.col, "universe must be declared before the permutation");
      }
      if (!corners.empty()) {
        throw ParseError(head.line, head.col, "permutation cannot be mixed with corner lines");
      }
      if (permutation_at != nullptr) {
        throw ParseError(head.line, head.col, "permutation already declared");
      }
      if (tokens.size() != static_cast<size_t>(universe.size()) + 1) {
        throw ParseError(head.line, head.col,
                         "permutation must list " + std::to_string(universe.size()) +
                             " values");
      }
      std::vector<bool> seen(static_cast<size_t>(universe.size()), false);
      for (size_t i = 1; i < tokens.size(); ++i) {
        const int v = parse_int(tokens[i], "permutation value");
        if (v < 0 || v >= universe.size() || seen[static_cast<size_t>(v)]) {
          throw ParseError(tokens[i].line, tokens[i].col,
                           "permutation values must be a bijection on 0.." +
                               std::to_string(universe.size() - 1));
        }
        seen[static_cast<size_t>(v)] = true;
        permutation.push_back(v);
      }
      permutation_at = &head;
    } else {
      throw ParseError(head.line, head.col, "unexpected directive '" + head.text + "'");
    }
  }
  if (!have_universe) throw ParseError(1, 1, "missing universe declaration");
  if (permutation_at != nullptr) {
    return from_permutation(universe.names(), Permutation(permutation));
  }
  if (static_cast<int>(corners.size()) != universe.size()) {
    throw ParseError(1, 1, "every element needs a corner (or use the permutation form)");
  }
  std::vector<Corner> list(static_cast<size_t>(universe.size()));
  for (const auto& [e, c] : corners) list[static_cast<size_t>(e)] = c;
  return QuadrantArrangement(universe, std::move(list));
}

std::string write_arrangement(const QuadrantArrangement& a) {
  std::ostringstream out;
  out << "arrangement v1\n";
  out << "universe";
  for (const std::string& n : a.universe().names()) out << " " << n;
  out << "\n";
  if (a.is_canonical()) {
    out << "permutation";
    const Permutation pi = arrangement_permutation(a);
    for (int i = 0; i < pi.size(); ++i) out << " " << pi[i];
    out << "\n";
  } else {
    for (int e = 0; e < a.size(); ++e) {
      out << "corner " << a.universe().name(e) << " " << a.corner(e).x << " "
          << a.corner(e).y << "\n";
    }
  }
  return out.str();
}

DrawingFile read_drawing(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "drawing");

  bool have_universe = false;
  Universe universe;
  std::vector<StateSet> states;
  std::vector<GridPoint> points;
  struct EdgeLine {
    int from, to, label;
    Token at;
  };
  std::vector<EdgeLine> edge_lines;

  for (size_t li = 1; li < lines.size(); ++li) {
    const TokenLine& tokens = lines[li];
    const Token& head = tokens[0];
    if (head.text == "universe") {
      if (have_universe) throw ParseError(head.line, head.col, "universe already declared");
      universe = parse_universe_line(tokens);
      have_universe = true;
    } else if (head.text == "vertex") {
      if (!have_universe) {
        throw ParseError(head.line, head.col, "universe must be declared before vertices");
      }
      if (tokens.size() < 3) {
        throw ParseError(head.line, head.col, "expected: vertex X Y ELEMENT...");
      }
      const int x = parse_int(tokens[1], "x coordinate");
      const int y = parse_int(tokens[2], "y coordinate");
      if (x < 0 || y < 0) {
        throw ParseError(tokens[1].line, tokens[1].col, "coordinates must be nonnegative");
      }
      const StateSet s = parse_state_tokens(universe, tokens, 3);
      for (StateSet prev : states) {
        if (prev == s) {
          throw ParseError(head.line, head.col, "duplicate state " + to_string(s, universe));
        }
      }
      states.push_back(s);
      points.push_back({x, y});
    } else if (head.text == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(head.line, head.col, "expected: edge FROM TO ELEMENT");
      }
      const int from = parse_int(tokens[1], "vertex index");
      const int to = parse_int(tokens[2], "vertex index");
      if (from < 0 || from >= static_cast<int>(states.size()) || to < 0 ||
          to >= static_cast<int>(states.size())) {
        throw ParseError(tokens[1].line, tokens[1].col,
                         "edge endpoints must reference earlier vertex lines");
      }
      const int label = universe.index(tokens[3].text);
      if (label < 0) {
        throw ParseError(tokens[3].line, tokens[3].col,
                         "unknown element '" + tokens[3].text + "'");
      }
      edge_lines.push_back({from, to, label, head});
    } else {
      throw ParseError(head.line, head.col, "unexpected directive '" + head.text + "'");
    }
  }
  if (!have_universe) throw ParseError(1, 1, "missing universe declaration");

  SetFamily family(universe, states);
  LearningGraph graph = build_graph(family);  // std::invalid_argument on bad families

  // File vertex order is free; map back to canonical graph order.
  std::vector<GridPoint> coords(static_cast<size_t>(graph.vertex_count()));
  std::vector<int> canonical_of(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    const int v = graph.index_of(states[i]);
    canonical_of[i] = v;
    coords[static_cast<size_t>(v)] = points[i];
  }

  // The edge list is redundant but must match the graph exactly.
  std::vector<bool> seen(static_cast<size_t>(graph.edge_count()), false);
  for (const EdgeLine& el : edge_lines) {
    const StateSet a = states[static_cast<size_t>(el.from)];
    const StateSet b = states[static_cast<size_t>(el.to)];
    bool matched = false;
    for (int eid : graph.out_edges(canonical_of[static_cast<size_t>(el.from)])) {
      const LabeledEdge& ge = graph.edges()[static_cast<size_t>(eid)];
      if (graph.vertex(ge.to) == b && ge.label == el.label) {
        if (seen[static_cast<size_t>(eid)]) {
          throw ParseError(el.at.line, el.at.col, "duplicate edge");
        }
        seen[static_cast<size_t>(eid)] = true;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(el.at.line, el.at.col,
                       "edge " + to_string(a, universe) + " -> " + to_string(b, universe) +
                           " is not a single-element extension with that label");
    }
  }
  for (size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      const LabeledEdge& ge = graph.edges()[i];
      throw ParseError(1, 1, "missing edge " + to_string(graph.vertex(ge.from), universe) +
                                 " -> " + to_string(graph.vertex(ge.to), universe));
    }
  }
  return DrawingFile{std::move(graph), GridDrawing(std::move(coords))};
}

std::string write_drawing(const GridDrawing& d, const LearningGraph& g) {
  std::ostringstream out;
  out << "drawing v1\n";
  out << "universe";
  for (const std::string& n : g.universe().names()) out << " " << n;
  out << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << d.at(v).x << " " << d.at(v).y;
    for (int e : g.vertex(v).elements()) out << " " << g.universe().name(e);
    out << "\n";
  }
  for (const LabeledEdge& e : g.edges()) {
    out << "edge " << e.from << " " << e.to << " " << g.universe().name(e.label) << "\n";
  }
  return out.str();
}

std::string write_graph(const LearningGraph& g) {
  std::ostringstream out;
  out << "graph v1\n";
  out << "universe";
  for (const std::string& n : g.universe().names()) out << " " << n;
  out << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "vertex";
    for (int e : g.vertex(v).elements()) out << " " << g.universe().name(e);
    out << "\n";
  }
  for (const LabeledEdge& e : g.edges()) {
    out << "edge " << e.from << " " << e.to << " " << g.universe().name(e.label) << "\n";
  }
  return out.str();
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return in;
}

template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw e.in_file(path);
  }
}

}  // namespace

SetFamily read_family_file(const std::string& path) {
  auto in = open_input(path);
  return with_file_context(path, [&] { return read_family(in); });
}

QuadrantArrangement read_arrangement_file(const std::string& path) {
  auto in = open_input(path);
  return with_file_context(path, [&] { return read_arrangement(in); });
}

DrawingFile read_drawing_file(const std::string& path) {
  auto in = open_input(path);
  return with_file_context(path, [&] { return read_drawing(in); });
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace uqdraw

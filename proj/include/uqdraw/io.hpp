#ifndef UQDRAW_IO_HPP
#define UQDRAW_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "uqdraw/arrangement.hpp"
#include "uqdraw/drawing.hpp"
#include "uqdraw/learning_graph.hpp"
#include "uqdraw/set_family.hpp"

namespace uqdraw {

/// Malformed input with its 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " +
                           message),
        line_(line),
        col_(col) {}

  /// Same error with the file path prepended.
  ParseError in_file(const std::string& path) const {
    return ParseError(path + ":" + what(), line_, col_);
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ParseError(const std::string& full, int line, int col)
      : std::runtime_error(full), line_(line), col_(col) {}

  int line_;
  int col_;
};

// All formats are line-oriented plain text with a versioned header line,
// '#' comments and blank lines allowed. Writers emit canonical order, so
// equal values produce identical bytes.

/// "family v1": a `universe` line of element names followed by `state`
/// lines listing each state's elements. Unknown elements and duplicate
/// states are rejected with their position.
SetFamily read_family(std::istream& in);
std::string write_family(const SetFamily& f);

/// "arrangement v1": a `universe` line plus either one `corner NAME X Y`
/// line per element or a single compact `permutation ...` line. Duplicate
/// coordinates are rejected with their position.
QuadrantArrangement read_arrangement(std::istream& in);
/// Canonical arrangements are written in compact permutation form,
/// others as corner lines.
std::string write_arrangement(const QuadrantArrangement& a);

/// "drawing v1": `vertex X Y NAME...` lines (the state may be empty) and
/// `edge FROM TO NAME` lines indexing vertices by file order. The edge list
/// must be exactly the learning graph of the states; the family itself must
/// satisfy the learning-space axioms (std::invalid_argument otherwise).
struct DrawingFile {
  LearningGraph graph;
  GridDrawing drawing;
};
DrawingFile read_drawing(std::istream& in);
std::string write_drawing(const GridDrawing& d, const LearningGraph& g);

/// "graph v1": the learning graph as `vertex NAME...` and `edge FROM TO
/// NAME` lines (no coordinates).
std::string write_graph(const LearningGraph& g);

/// File helpers; parse errors are reported as "path:line:col: message".
SetFamily read_family_file(const std::string& path);
QuadrantArrangement read_arrangement_file(const std::string& path);
DrawingFile read_drawing_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace uqdraw

#endif

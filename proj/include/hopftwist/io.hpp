#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopftwist/catalog.hpp"

namespace hopftwist {

// Malformed exchange file; line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text exchange formats. Every document starts with a versioned header line
// ("hopftwist-<kind> v1"); blank lines and lines starting with '#' are
// ignored. Scalars are exact strings in the document's field.
std::string write_group(const FiniteGroup& g);
GroupPtr read_group(const std::string& text);

std::string write_tensor(const TensorElement& t);
TensorElement read_tensor(const std::string& text);

std::string write_action(const GroupAction& act);
GroupAction read_action(const std::string& text);

std::string write_cocycle_data(const Bijective1Cocycle& data);
Bijective1Cocycle read_cocycle_data(const std::string& text);

std::string write_rep(const ProjectiveRep& v);
ProjectiveRep read_rep(const std::string& text);

std::string write_algebra(const StructureConstantAlgebra& a);
StructureConstantAlgebra read_algebra(const std::string& text);

// Header kind of a document ("group", "tensor", ...), or ParseError.
std::string document_kind(const std::string& text);

// Human summary plus a machine-readable section after a "--- json" line.
std::string render_report(const Report& r);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
std::string render_table(const Table& t);

// Field given as "cyclotomic" / "cyclotomic:N" or "fp:P"; a prime field
// supplies every root of unity of order dividing P - 1.
Field parse_field_option(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hopftwist

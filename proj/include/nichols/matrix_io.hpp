#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "nichols/braiding.hpp"

namespace nichols {

enum class InputForm { Matrix, Diagram };

struct MatrixInput {
  BraidingMatrix matrix;
  InputForm form = InputForm::Matrix;
};

// Plain text, '#' starts a comment, indices 1-based.
//
//   matrix            diagram
//   theta 2           theta 2
//   1/2 2/3           v 1 1/2
//   1   1/3           v 2 1/3
//                     e 1 2 2/3
//
// Throws ValidationError with a line number on malformed input.
MatrixInput parse_matrix(std::istream& in);
MatrixInput parse_matrix_string(const std::string& text);
MatrixInput read_matrix_file(const std::filesystem::path& path);

// Writes the full form; parse_matrix(write_matrix(q)) reproduces q.
std::string write_matrix(const BraidingMatrix& q);

}  // namespace nichols

#ifndef ORBEQ_IO_HPP
#define ORBEQ_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "orbeq/feasibility.hpp"

namespace orbeq {

// Matrix file format:
//   mf rank <r+> <r-> shifts <q,...>|<q,...>
//   sharp
//   <r+ lines of r- ';'-separated entries>
//   flat
//   <r- lines of r+ ';'-separated entries>
// Entries are polynomial expressions; '_' is the zero entry and '?' (seed
// files only) marks a fully generic entry.

struct MatrixFile {
    std::vector<Rat> shifts_even, shifts_odd;
    SeedMatrices entries;       // plain matrices parse with no '?' markers
    bool has_free_entries = false;
};

MatrixFile read_matrix_file(const std::string& path, const Ring& ring);
MatrixFile parse_matrix_text(const std::string& text, const Ring& ring);

std::string write_matrix_text(const MatrixFactorization& mf);

// turns a parsed seed with only fixed/zero entries into a factorization
MatrixFactorization to_factorization(const MatrixFile& file, const Ring& ring,
                                     const Polynomial& target);

// Problem file grammar:
//   ring left | ring right     begin a ring block
//     var <name> weight <p/q>
//     potential <expr>
//   ansatz                     optional block
//     shifts_even <q,...>
//     shifts_odd <q,...>
//     grading_matrix <file>    alternative to the shift lists
//   seed <file>                optional
//   limits steps <n> polys <n> seconds <n>
struct ProblemFile {
    Potential left, right;
    TensorRingPair pair;
    std::optional<std::vector<Rat>> shifts_even, shifts_odd;
    std::optional<SeedMatrices> seed;
    Limits limits;
};

ProblemFile read_problem_file(const std::string& path);

// Shift lists from a sharp-block grading matrix, first even shift pinned to
// zero; throws when the matrix is not of the form n_j - n_i + 1.
std::pair<std::vector<Rat>, std::vector<Rat>> shifts_from_grading_matrix(
    const std::vector<std::vector<Rat>>& g);

} // namespace orbeq

#endif

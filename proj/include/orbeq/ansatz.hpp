#ifndef ORBEQ_ANSATZ_HPP
#define ORBEQ_ANSATZ_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbeq/mf.hpp"

namespace orbeq {

// Seed entry for one matrix position:
//  - free span: the complete span of monomials at the required grading
//  - forced zero: entry pinned to 0 even when monomials exist
//  - fixed: a fixed polynomial part, plus one fresh parameter for every
//    monomial of the required grading not in the fixed support
struct SeedEntry {
    enum class Kind { free_span, forced_zero, fixed };
    Kind kind = Kind::free_span;
    Polynomial fixed;   // in the joint ring, used when kind == fixed
};

struct SeedMatrices {
    std::vector<std::vector<SeedEntry>> sharp;   // r+ x r-
    std::vector<std::vector<SeedEntry>> flat;    // r- x r+
};

struct AnsatzSpec {
    TensorRingPair pair;
    std::vector<Rat> shifts_even, shifts_odd;
    std::optional<SeedMatrices> seed;
    std::string param_prefix = "c";
};

// the grading every entry must carry: n_j - n_i + 1
std::vector<std::vector<Rat>> entry_grading_matrix(const std::vector<Rat>& shifts_row,
                                                   const std::vector<Rat>& shifts_col);

struct ParamProvenance {
    enum class Block { sharp, flat };
    Block block;
    std::size_t row = 0, col = 0;
    Monomial mono;   // monomial of the joint ring this parameter multiplies
};

struct GenericMF {
    MatrixFactorization mf;    // ring: joint geometric variables then parameters
    TensorRingPair pair;
    std::vector<std::string> parameters;
    std::vector<ParamProvenance> provenance;
};

GenericMF build_generic(const AnsatzSpec& spec);

// substitute rational parameter values into the generic matrices;
// assignments are indexed by parameter position
MatrixFactorization instantiate(const GenericMF& gmf,
                                const std::vector<std::pair<std::size_t, Rat>>& param_values);

// Bounded diagonal enumeration of rank-(m|m) specs. Shifts live on the grid
// of rationals with denominator dividing the lcm of the weight denominators,
// magnitude at most shift_bound; the first even shift is pinned to 0 and
// shift lists are non-increasing, removing translation and permutation
// redundancy. Order: rank ascending, then lexicographic.
class SpecEnumerator {
public:
    SpecEnumerator(TensorRingPair pair, unsigned max_rank, Rat shift_bound);
    std::optional<AnsatzSpec> next();

private:
    TensorRingPair pair_;
    unsigned max_rank_;
    std::vector<Rat> grid_;   // descending candidate shifts
    unsigned rank_ = 1;
    std::size_t zero_pos_ = 0;
    std::vector<std::size_t> even_idx_, odd_idx_;
    bool exhausted_ = false;
    bool fresh_rank_ = true;
    bool advance();
};

} // namespace orbeq

#endif

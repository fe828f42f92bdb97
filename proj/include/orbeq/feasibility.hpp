#ifndef ORBEQ_FEASIBILITY_HPP
#define ORBEQ_FEASIBILITY_HPP

#include <functional>
#include <optional>
#include <string>

#include "orbeq/equations.hpp"

namespace orbeq {

// defaults per the feasibility contract; 0 disables a guard
struct Limits {
    std::uint64_t max_pair_reductions = 1000000;
    std::size_t max_basis_size = 10000;
    double max_seconds = 120;
};

enum class VerdictKind { consistent, inconsistent, resource_limit };

struct Verdict {
    VerdictKind kind = VerdictKind::resource_limit;
    std::optional<GroebnerBasis> certificate;   // the reduced basis when consistent
    GBStats stats;
};

// weak Nullstellensatz: inconsistent iff the reduced degrevlex basis is {1};
// verdicts are valid over the algebraic closure
Verdict check(const EquationSystem& sys, const Limits& limits = {});

enum class ExportFormat { native, mq_style };

// native: the dump format of module equations. mq_style: counts header and
// dense per-equation coefficient rows over the monomials of degree <= 2 in
// graded-lex column order (1; c1..cN; c1^2, c1c2, ..., cN^2); errors when an
// equation has degree above two.
std::string export_system(const EquationSystem& sys, ExportFormat format);

struct Witness {
    std::vector<std::pair<std::string, Rat>> values;   // every parameter incl. helpers
    bool reverified = false;                           // mf identity + nonzero qdims
};

struct SearchOptions {
    unsigned max_rank = 1;
    Rat shift_bound = Rat(2);
    bool half = true;
    Limits limits;
    std::optional<SeedMatrices> seed;                  // evaluate only the seeded spec
    std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> shifts;  // with seed
    unsigned witness_budget = 256;                     // GB calls; 0 disables
    unsigned jobs = 1;
    bool export_only = false;
    ExportFormat export_format = ExportFormat::native;
};

struct SearchReport {
    std::vector<Rat> shifts_even, shifts_odd;
    SystemStats system_stats;          // after helpers, before elimination
    std::size_t residual_equations = 0, residual_variables = 0;
    Verdict verdict;
    std::optional<Witness> witness;
    std::string exported;          // when export_only
};

// Enumerates ansatz candidates, runs the extract -> helpers -> eliminate ->
// check pipeline on each, and reports in enumeration order. Stops at the
// first consistent verdict. Returns true iff one was found.
bool search(const TensorRingPair& pair, const SearchOptions& opts,
            const std::function<void(const SearchReport&)>& emit);

// best-effort witness extraction for a consistent system: greedy rational
// specialization, then back-substitution through the eliminated map
std::optional<Witness> extract_witness(const EquationSystem& sys, const GenericMF& gmf,
                                       const Limits& limits, unsigned budget);

} // namespace orbeq

#endif

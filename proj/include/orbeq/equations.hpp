#ifndef ORBEQ_EQUATIONS_HPP
#define ORBEQ_EQUATIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "orbeq/ansatz.hpp"

namespace orbeq {

struct EquationProvenance {
    enum class Source { sharp_flat, flat_sharp, helper_left, helper_right };
    Source source;
    std::size_t row = 0, col = 0;
    Monomial mono;      // geometric monomial of the joint ring (coefficient taken)
};

// Polynomial constraints on the ansatz parameters. Equations live in a ring
// of parameter variables only; they are content-normalized (integer
// coefficients, gcd one, positive leading coefficient) and deduplicated up
// to rational scaling within each extraction block.
struct EquationSystem {
    Ring pring;                          // parameter variables, weight 0
    std::vector<Polynomial> equations;
    std::vector<EquationProvenance> provenance;
    // ordered substitutions applied by linear elimination (index into pring)
    std::vector<std::pair<std::size_t, Polynomial>> eliminated;
    bool inconsistent_marker = false;    // set when a quantum dimension vanished identically
};

// coefficient equations of sharp*flat - (f-g)*Id (and flat*sharp - (f-g)*Id
// when half is false; the two blocks are kept apart, matching the paper's
// 470 = 235 + 235 accounting)
EquationSystem extract(const GenericMF& gmf, bool half);

// adds helper variables cl, cr and the constraints cl*q_l - 1, cr*q_r - 1;
// a vanishing quantum dimension marks the system inconsistent outright
EquationSystem append_nonvanishing(const EquationSystem& sys, const GenericMF& gmf);

// repeatedly substitutes v = -r/c from equations c*v + r (c a nonzero
// rational, r free of v), until fixpoint or max_passes substitutions
EquationSystem linear_eliminate(const EquationSystem& sys, std::size_t max_passes = 0);

struct SystemStats {
    std::size_t parameters = 0;
    std::size_t equations = 0;
    std::map<unsigned, std::size_t> degree_histogram;
    double density = 0;   // mean term count per equation
};
SystemStats stats(const EquationSystem& sys);
std::string render_stats_row(const std::string& name, const SystemStats& s);

// `system vars <n> eqs <m>` followed by `v <name>` and `e <poly>` lines
std::string dump_system(const EquationSystem& sys);

// helper: parameters actually used by at least one equation
std::vector<std::size_t> used_parameters(const EquationSystem& sys);

} // namespace orbeq

#endif

#ifndef ORBEQ_GROEBNER_HPP
#define ORBEQ_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "orbeq/order.hpp"
#include "orbeq/ring.hpp"

namespace orbeq {

// 0 means unlimited
struct GBLimits {
    std::uint64_t max_pair_reductions = 0;
    std::size_t max_basis_size = 0;
    double max_seconds = 0;
};

struct GBStats {
    std::uint64_t pair_reductions = 0;
    std::size_t basis_size = 0;
    double seconds = 0;
};

enum class GBOutcome { completed, step_limit, basis_limit, time_limit };

// Reduced Groebner basis: monic generators, no leading monomial divides
// another, tails fully reduced. Basis of the zero ideal is empty.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> generators;
    // row i expresses generators[i] in the original input generators
    std::optional<std::vector<std::vector<Polynomial>>> cofactors;

    bool is_unit() const {
        return generators.size() == 1 && generators[0].term_count() == 1 &&
               generators[0].terms()[0].mono.is_one();
    }
};

struct BuchbergerResult {
    GBOutcome outcome = GBOutcome::completed;
    GroebnerBasis basis;   // meaningful only when completed
    GBStats stats;
};

BuchbergerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            bool track_cofactors = false, const GBLimits& limits = {});

// convenience: unlimited run, throws on (impossible) limit outcomes
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             bool track_cofactors = false);

// remainder of multivariate division by the basis; zero iff member
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// cofactors beta with sum_j beta_j * gens_j = p, re-verified by
// multiplication; nullopt when p is not a member
std::optional<std::vector<Polynomial>> membership_with_cofactors(
    const Polynomial& p, const std::vector<Polynomial>& gens, const MonomialOrder& order);

struct QuotientDimension {
    bool finite = false;
    unsigned dimension = 0;   // number of standard monomials when finite
};
QuotientDimension is_quotient_finite_dimensional(const std::vector<Polynomial>& gens);

// standard monomial basis of the quotient (finite case)
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

struct PurePowerCertificate {
    std::size_t variable = 0;
    unsigned exponent = 0;
    std::vector<Polynomial> cofactors;   // sum_j cofactors_j * gens_j = x_i^exponent
};

// Runs a Groebner basis under lex with x_i last; quasi-homogeneity of the
// generators guarantees the basis element with a pure-power leading monomial
// is a single term. Throws when no pure power of x_i lies in the ideal.
PurePowerCertificate pure_power_certificate(const std::vector<Polynomial>& gens, std::size_t var);

bool is_unit_ideal(const std::vector<Polynomial>& gens);

} // namespace orbeq

#endif

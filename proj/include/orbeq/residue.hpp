#ifndef ORBEQ_RESIDUE_HPP
#define ORBEQ_RESIDUE_HPP

#include <vector>

#include "orbeq/groebner.hpp"
#include "orbeq/ring.hpp"

namespace orbeq {

// res( g dx_1 ^ ... ^ dx_q / f_1, ..., f_q ).
//
// residue_vars lists the variables the residue is taken over, one per
// denominator; the denominators may only use those variables. Other ring
// variables (the opposite side's geometric variables, parameters) pass
// through as coefficients.
struct ResidueProblem {
    Ring ring;
    Polynomial numerator;
    std::vector<Polynomial> denominators;
    std::vector<std::size_t> residue_vars;
};

// canonical form: residue over every geometric variable of the ring
ResidueProblem make_residue_problem(Polynomial numerator, std::vector<Polynomial> denominators);

// Effective computation from the three characterizing facts:
//  (F1) membership in (f_1,...,f_q) kills the residue: the numerator is
//       normal-formed against the denominator ideal first;
//  (F3) a certificate matrix M with M.(f_1..f_q) = (x_1^d1,...,x_q^dq)
//       trades the denominators for pure powers at the cost of det(M);
//  (F2) the residue is then the x_1^{d1-1}...x_q^{dq-1} coefficient.
// The result has the residue variables stripped; it may only involve
// parameter variables (anything else means the input was malformed).
Polynomial residue_symbol(const ResidueProblem& prob);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// det by fraction-free (Bareiss) elimination
Polynomial determinant(const PolyMatrix& m, const Ring& ring);
PolyMatrix adjugate_matrix(const PolyMatrix& m, const Ring& ring);

// quotient of an exact division; throws when the division has a remainder
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

// (F3) as a property-test hook: residues before/after applying M agree
bool check_transformation_rule(const ResidueProblem& prob, const PolyMatrix& m);

} // namespace orbeq

#endif

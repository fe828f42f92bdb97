#ifndef ORBEQ_MF_HPP
#define ORBEQ_MF_HPP

#include <optional>
#include <vector>

#include "orbeq/residue.hpp"
#include "orbeq/ring.hpp"

namespace orbeq {

struct GradedFreeModule {
    std::vector<Rat> shifts;   // one per free summand, in basis order
    std::size_t rank() const { return shifts.size(); }
};

struct SuperModule {
    GradedFreeModule even, odd;
};

// Joint ring of two potentials: left variables first, then right variables,
// weights from the degree-2 normalized rings. Right-side names that clash
// with left-side names get an "_r" suffix.
struct TensorRingPair {
    Potential left, right;
    Ring joint;               // geometric variables only
    Polynomial f_joint;       // left potential in the joint ring
    Polynomial g_joint;       // right potential in the joint ring
    std::size_t left_count = 0, right_count = 0;
};

TensorRingPair make_tensor_pair(const Potential& f, const Potential& g);

// Supergraded free module with odd differential in two blocks.
// sharp: odd -> even (r+ x r-), flat: even -> odd (r- x r+). The entry
// ring may extend the geometric ring with parameter variables; the
// geometric variables must come first, in joint-ring order.
struct MatrixFactorization {
    Ring ring;
    SuperModule module;
    PolyMatrix sharp;
    PolyMatrix flat;
    Polynomial target;   // f, or f - g over a tensor ring

    std::size_t rank_even() const { return module.even.rank(); }
    std::size_t rank_odd() const { return module.odd.rank(); }
};

struct FactorizationCheck {
    bool verified = false;
    PolyMatrix residual_sharp_flat;   // sharp*flat - target*Id
    PolyMatrix residual_flat_sharp;   // flat*sharp - target*Id
};
FactorizationCheck verify_factorization(const MatrixFactorization& mf);

// every nonzero entry quasi-homogeneous of grading n_j - n_i + 1
bool grading_matrix_check(const MatrixFactorization& mf);

// trace of the even-even block minus trace of the odd-odd block
Polynomial supertrace(const PolyMatrix& m, std::size_t rank_even);

enum class Side { left, right };

// str( d_{x1}Q ... d_{xm}Q d_{y1}Q ... d_{yn}Q ) against the side's
// Jacobian generators; the result is a polynomial in parameter variables,
// pinned only up to a global sign.
Polynomial quantum_dimension(const MatrixFactorization& mf, const TensorRingPair& pair, Side side);

// true iff quantum dimensions are unchanged when all shifts move by delta
bool shift_invariance_check(const MatrixFactorization& mf, const TensorRingPair& pair,
                            const Rat& delta);

// p with p*p = d, canonical leading coefficient positive; nullopt when d is
// not a perfect square
std::optional<Polynomial> polynomial_sqrt(const Polynomial& d);

struct AdjugateFlat {
    PolyMatrix flat;
    Polynomial root;   // sharp*flat = root*Id, root^2 = det(sharp)
};
// the "d_flat = sqrt(det) * inverse(d_sharp)" recipe; valid only when
// det(sharp) is a perfect square, errors otherwise
AdjugateFlat flat_from_adjugate(const PolyMatrix& sharp, const Ring& ring);

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b);

} // namespace orbeq

#endif

#include <stdexcept>

#include "orbeq/groebner.hpp"
#include "orbeq/ring.hpp"

namespace orbeq {

namespace {

void require_geometric_only(const Polynomial& p, const char* who) {
    const auto& ring = *p.ring();
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (ring.var(i).kind == VarKind::parameter && p.uses_variable(i))
            throw std::runtime_error(std::string(who) + ": polynomial uses parameter variables");
}

} // namespace

std::vector<Polynomial> jacobian_ideal(const Potential& p) {
    std::vector<Polynomial> out;
    for (auto i : p.ring->geometric_indices()) out.push_back(p.poly.derivative(i));
    return out;
}

Rat central_charge(const Potential& p) { return central_charge_of_weights(*p.ring); }

Potential validate_potential(const Polynomial& p) {
    if (p.is_zero()) throw std::runtime_error("validate_potential: zero polynomial");
    require_geometric_only(p, "validate_potential");
    if (p.ring()->geometric_count() != p.ring()->size())
        throw std::runtime_error("validate_potential: ring must contain geometric variables only");

    GradingResult gr = quasi_homogeneous_degree(p);
    if (!gr.homogeneous)
        throw std::runtime_error("validate_potential: not quasi-homogeneous");
    if (sgn(gr.degree) <= 0)
        throw std::runtime_error("validate_potential: degree must be positive");

    // rescale all weights so the quasi-homogeneous degree is exactly 2
    Rat scale = Rat(2) / gr.degree;
    std::vector<VariableSpec> vars = p.ring()->vars();
    for (auto& v : vars) v.weight *= scale;
    Ring rescaled = GradedRing::make(std::move(vars));
    Polynomial poly(rescaled, p.terms());

    Potential pot{rescaled, poly, Rat(2), 0};
    auto jac = jacobian_ideal(pot);
    bool all_zero = true;
    for (const auto& g : jac)
        if (!g.is_zero()) all_zero = false;
    if (all_zero)
        throw std::runtime_error("validate_potential: Jacobian ideal is zero (infinite-dimensional quotient)");
    auto qd = is_quotient_finite_dimensional(jac);
    if (!qd.finite)
        throw std::runtime_error("validate_potential: infinite-dimensional Jacobian quotient");
    if (qd.dimension == 0)
        throw std::runtime_error("validate_potential: Jacobian quotient is zero");
    pot.jacobian_dimension = qd.dimension;
    return pot;
}

Potential berglund_huebsch_transpose(const Potential& p) {
    const auto& ring = *p.ring;
    std::size_t n = ring.size();
    if (p.poly.term_count() != n)
        throw std::runtime_error("berglund_huebsch_transpose: not invertible-type "
                                 "(monomial count differs from variable count)");
    for (const auto& t : p.poly.terms())
        if (t.coef != 1)
            throw std::runtime_error("berglund_huebsch_transpose: coefficients must all be 1");

    // A[i][j] = exponent of variable j in monomial i
    std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A[i][j] = p.poly.terms()[i].mono[j];

    // transposed monomials: m_i = prod_j x_j^{A[j][i]}
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n);
        for (std::size_t j = 0; j < n; ++j) m[j] = static_cast<std::uint16_t>(A[j][i]);
        terms.push_back({std::move(m), Rat(1)});
    }

    // fresh weights from A^T w = 2: each transposed monomial gets degree 2
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A[j][i]);
        M[i][n] = Rat(2);
    }
    for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && is_zero(M[piv][col])) ++piv;
        if (piv == n)
            throw std::runtime_error("berglund_huebsch_transpose: singular exponent matrix "
                                     "(weights unsolvable)");
        std::swap(M[piv], M[row]);
        Rat d = M[row][col];
        for (auto& x : M[row]) x /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || is_zero(M[r][col])) continue;
            Rat f = M[r][col];
            for (std::size_t c2 = 0; c2 <= n; ++c2) M[r][c2] -= f * M[row][c2];
        }
        ++row;
    }
    std::vector<VariableSpec> vars = ring.vars();
    for (std::size_t i = 0; i < n; ++i) {
        Rat w = M[i][n];
        if (sgn(w) <= 0)
            throw std::runtime_error("berglund_huebsch_transpose: weights unsolvable "
                                     "(non-positive solution)");
        vars[i].weight = w;
    }
    Ring transposed_ring = GradedRing::make(std::move(vars));
    Polynomial q(transposed_ring, std::move(terms));
    return validate_potential(q);
}

} // namespace orbeq

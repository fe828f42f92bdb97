#include "orbeq/residue.hpp"

#include <stdexcept>

namespace orbeq {

ResidueProblem make_residue_problem(Polynomial numerator, std::vector<Polynomial> denominators) {
    ResidueProblem prob;
    prob.ring = numerator.ring();
    prob.residue_vars = prob.ring->geometric_indices();
    if (prob.residue_vars.size() != denominators.size())
        throw std::runtime_error("residue: denominator count differs from geometric variable count");
    prob.numerator = std::move(numerator);
    prob.denominators = std::move(denominators);
    return prob;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::runtime_error("exact_divide: division by zero polynomial");
    Ring ring = p.ring() ? p.ring() : d.ring();
    if (p.is_zero()) return Polynomial(ring);
    Polynomial rem = p;
    std::vector<Term> quot;
    const Term& lead = d.terms().front();   // canonical order
    while (!rem.is_zero()) {
        const Term& rl = rem.terms().front();
        if (!divides(lead.mono, rl.mono))
            throw std::runtime_error("exact_divide: not exactly divisible");
        Monomial q = rl.mono / lead.mono;
        Rat c = rl.coef / lead.coef;
        quot.push_back({q, c});
        rem = rem - d.times_term(q, c);
    }
    return Polynomial(ring, std::move(quot));
}

Polynomial determinant(const PolyMatrix& m, const Ring& ring) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::runtime_error("determinant: matrix not square");
    if (n == 0) return Polynomial::constant(ring, Rat(1));

    // Bareiss fraction-free elimination; every division is exact
    PolyMatrix a = m;
    Polynomial prev = Polynomial::constant(ring, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Polynomial(ring);   // singular
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = exact_divide(num, prev);
            }
            a[i][k] = Polynomial(ring);
        }
        prev = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

PolyMatrix adjugate_matrix(const PolyMatrix& m, const Ring& ring) {
    std::size_t n = m.size();
    PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Polynomial> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Polynomial cof = determinant(minor, ring);
            if ((i + j) % 2) cof = -cof;
            adj[j][i] = std::move(cof);   // adjugate is the transposed cofactor matrix
        }
    }
    return adj;
}

Polynomial residue_symbol(const ResidueProblem& prob) {
    const Ring& ring = prob.ring;
    std::size_t q = prob.denominators.size();
    if (q != prob.residue_vars.size())
        throw std::runtime_error("residue_symbol: denominator count differs from residue variable count");
    for (const auto& f : prob.denominators) {
        for (std::size_t v = 0; v < ring->size(); ++v) {
            if (!f.uses_variable(v)) continue;
            bool listed = false;
            for (auto rv : prob.residue_vars) listed |= (rv == v);
            if (!listed)
                throw std::runtime_error("residue_symbol: denominator uses a non-residue variable");
        }
    }

    // (F1): reduce the numerator modulo the denominator ideal; residues of
    // ideal members vanish, so only the normal form matters
    auto gb = groebner_basis(prob.denominators, MonomialOrder::degrevlex());
    Polynomial g = normal_form(prob.numerator, gb);
    if (g.is_zero()) return Polynomial(ring);

    // certificate matrix M with rows M_i . (f_1..f_q) = x_i^{d_i}
    PolyMatrix m;
    std::vector<unsigned> powers;
    m.reserve(q);
    for (auto var : prob.residue_vars) {
        auto cert = pure_power_certificate(prob.denominators, var);
        powers.push_back(cert.exponent);
        m.push_back(std::move(cert.cofactors));
    }

    // (F3) then (F2)
    Polynomial h = g * determinant(m, ring);
    std::vector<Term> out;
    for (const auto& t : h.terms()) {
        bool hit = true;
        for (std::size_t k = 0; k < q && hit; ++k)
            hit = (t.mono[prob.residue_vars[k]] == powers[k] - 1);
        if (!hit) continue;
        Monomial stripped = t.mono;
        for (auto var : prob.residue_vars) stripped[var] = 0;
        out.push_back({std::move(stripped), t.coef});
    }
    Polynomial res(ring, std::move(out));
    for (std::size_t v = 0; v < ring->size(); ++v)
        if (ring->var(v).kind == VarKind::geometric && res.uses_variable(v))
            throw std::runtime_error("residue_symbol: result kept a geometric variable "
                                     "(numerator not compatible with the grading)");
    return res;
}

bool check_transformation_rule(const ResidueProblem& prob, const PolyMatrix& m) {
    std::size_t q = prob.denominators.size();
    if (m.size() != q)
        throw std::runtime_error("check_transformation_rule: matrix dimension mismatch");
    for (const auto& row : m)
        if (row.size() != q)
            throw std::runtime_error("check_transformation_rule: matrix dimension mismatch");

    Polynomial det = determinant(m, prob.ring);
    ResidueProblem transformed;
    transformed.ring = prob.ring;
    transformed.numerator = prob.numerator * det;
    transformed.residue_vars = prob.residue_vars;
    transformed.denominators.assign(q, Polynomial(prob.ring));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (!m[i][j].is_zero())
                transformed.denominators[i] =
                    transformed.denominators[i] + m[i][j] * prob.denominators[j];

    return residue_symbol(transformed) == residue_symbol(prob);
}

} // namespace orbeq

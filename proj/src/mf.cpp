#include "orbeq/mf.hpp"

#include <stdexcept>

namespace orbeq {

TensorRingPair make_tensor_pair(const Potential& f, const Potential& g) {
    if (f.degree != g.degree)
        throw std::runtime_error("tensor pair: potentials have different degrees");
    TensorRingPair pair;
    pair.left = f;
    pair.right = g;
    pair.left_count = f.ring->size();
    pair.right_count = g.ring->size();

    std::vector<VariableSpec> vars = f.ring->vars();
    for (const auto& v : g.ring->vars()) {
        VariableSpec nv = v;
        if (f.ring->index_of(nv.name) != GradedRing::npos) nv.name += "_r";
        vars.push_back(nv);
    }
    pair.joint = GradedRing::make(std::move(vars));

    auto lift = [&](const Polynomial& p, std::size_t offset) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m(pair.joint->size());
            for (std::size_t i = 0; i < t.mono.size(); ++i) m[offset + i] = t.mono[i];
            terms.push_back({std::move(m), t.coef});
        }
        return Polynomial(pair.joint, std::move(terms));
    };
    pair.f_joint = lift(f.poly, 0);
    pair.g_joint = lift(g.poly, pair.left_count);
    return pair;
}

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m2 = b[0].size();
    for (const auto& row : a)
        if (row.size() != k) throw std::runtime_error("matrix_multiply: dimension mismatch");
    Ring ring;
    for (const auto& row : a)
        for (const auto& e : row)
            if (e.ring()) { ring = e.ring(); break; }
    PolyMatrix out(n, std::vector<Polynomial>(m2, Polynomial(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
            Polynomial acc(ring);
            for (std::size_t t = 0; t < k; ++t)
                if (!a[i][t].is_zero() && !b[t][j].is_zero()) acc = acc + a[i][t] * b[t][j];
            out[i][j] = std::move(acc);
        }
    return out;
}

FactorizationCheck verify_factorization(const MatrixFactorization& mf) {
    std::size_t rp = mf.rank_even(), rm = mf.rank_odd();
    if (mf.sharp.size() != rp || mf.flat.size() != rm)
        throw std::runtime_error("verify_factorization: block row count mismatch");
    for (const auto& row : mf.sharp)
        if (row.size() != rm) throw std::runtime_error("verify_factorization: sharp block shape");
    for (const auto& row : mf.flat)
        if (row.size() != rp) throw std::runtime_error("verify_factorization: flat block shape");

    FactorizationCheck out;
    out.residual_sharp_flat = matrix_multiply(mf.sharp, mf.flat);
    out.residual_flat_sharp = matrix_multiply(mf.flat, mf.sharp);
    for (std::size_t i = 0; i < rp; ++i)
        out.residual_sharp_flat[i][i] = out.residual_sharp_flat[i][i] - mf.target;
    for (std::size_t i = 0; i < rm; ++i)
        out.residual_flat_sharp[i][i] = out.residual_flat_sharp[i][i] - mf.target;
    out.verified = true;
    for (const auto& row : out.residual_sharp_flat)
        for (const auto& e : row)
            if (!e.is_zero()) out.verified = false;
    for (const auto& row : out.residual_flat_sharp)
        for (const auto& e : row)
            if (!e.is_zero()) out.verified = false;
    return out;
}

namespace {

bool entry_has_grading(const Polynomial& e, const Rat& expected) {
    if (e.is_zero()) return true;
    const auto& ring = *e.ring();
    for (const auto& t : e.terms())
        if (grading(ring, t.mono) != expected) return false;
    return true;
}

} // namespace

bool grading_matrix_check(const MatrixFactorization& mf) {
    const auto& ne = mf.module.even.shifts;
    const auto& no = mf.module.odd.shifts;
    for (std::size_t i = 0; i < mf.sharp.size(); ++i)
        for (std::size_t j = 0; j < mf.sharp[i].size(); ++j)
            if (!entry_has_grading(mf.sharp[i][j], no[j] - ne[i] + 1)) return false;
    for (std::size_t i = 0; i < mf.flat.size(); ++i)
        for (std::size_t j = 0; j < mf.flat[i].size(); ++j)
            if (!entry_has_grading(mf.flat[i][j], ne[j] - no[i] + 1)) return false;
    return true;
}

Polynomial supertrace(const PolyMatrix& m, std::size_t rank_even) {
    if (m.empty()) throw std::runtime_error("supertrace: empty matrix");
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::runtime_error("supertrace: matrix not square");
    if (rank_even > n) throw std::runtime_error("supertrace: even rank exceeds size");
    Ring ring;
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.ring()) { ring = e.ring(); break; }
    Polynomial acc(ring);
    for (std::size_t i = 0; i < n; ++i)
        acc = (i < rank_even) ? acc + m[i][i] : acc - m[i][i];
    return acc;
}

namespace {

// lift a joint-ring polynomial into the (possibly parameter-extended) mf ring
Polynomial lift_to(const Ring& ring, const Polynomial& p) {
    if (same_ring(ring, p.ring())) return p;
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(ring->size());
        for (std::size_t i = 0; i < t.mono.size(); ++i) m[i] = t.mono[i];
        terms.push_back({std::move(m), t.coef});
    }
    return Polynomial(ring, std::move(terms));
}

PolyMatrix derivative_matrix(const PolyMatrix& m, std::size_t var, const Ring& ring) {
    PolyMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& e : m[i]) out[i].push_back(e.is_zero() ? Polynomial(ring) : e.derivative(var));
    }
    return out;
}

void reduce_matrix(PolyMatrix& m, const GroebnerBasis& gb) {
    for (auto& row : m)
        for (auto& e : row)
            if (!e.is_zero()) e = normal_form(e, gb);
}

} // namespace

Polynomial quantum_dimension(const MatrixFactorization& mf, const TensorRingPair& pair, Side side) {
    const Ring& ring = mf.ring;
    std::size_t m = pair.left_count, n = pair.right_count;
    std::size_t k = m + n;
    if (ring->size() < k)
        throw std::runtime_error("quantum_dimension: mf ring does not extend the joint ring");

    // derivatives in Def. order: left variables then right variables
    std::vector<PolyMatrix> dS, dF;
    dS.reserve(k);
    dF.reserve(k);
    for (std::size_t v = 0; v < k; ++v) {
        dS.push_back(derivative_matrix(mf.sharp, v, ring));
        dF.push_back(derivative_matrix(mf.flat, v, ring));
    }

    // denominators: the side's Jacobian generators in the mf ring
    const Polynomial& pot = (side == Side::left) ? pair.f_joint : pair.g_joint;
    Polynomial lifted = lift_to(ring, pot);
    std::vector<std::size_t> resvars;
    for (std::size_t v = (side == Side::left ? 0 : m);
         v < (side == Side::left ? m : k); ++v)
        resvars.push_back(v);
    std::vector<Polynomial> denoms;
    for (auto v : resvars) denoms.push_back(lifted.derivative(v));

    // an odd number of odd factors has zero diagonal blocks
    if (k % 2 != 0) return Polynomial(ring);

    // entries of partial products are reduced modulo the denominator ideal
    // after every step; by (F1) this leaves the residue unchanged
    auto gb = groebner_basis(denoms, MonomialOrder::degrevlex());

    auto chain_trace = [&](bool start_sharp) {
        // running product of dS/dF in alternation, last factor folded into
        // the diagonal only
        PolyMatrix cur = start_sharp ? dS[0] : dF[0];
        reduce_matrix(cur, gb);
        for (std::size_t t = 1; t + 1 < k; ++t) {
            bool use_sharp = start_sharp == (t % 2 == 0);
            cur = matrix_multiply(cur, use_sharp ? dS[t] : dF[t]);
            reduce_matrix(cur, gb);
        }
        bool last_sharp = start_sharp == ((k - 1) % 2 == 0);
        const PolyMatrix& last = last_sharp ? dS[k - 1] : dF[k - 1];
        Polynomial tr(ring);
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = 0; j < cur[i].size(); ++j)
                if (!cur[i][j].is_zero() && !last[j][i].is_zero())
                    tr = tr + cur[i][j] * last[j][i];
        return normal_form(tr, gb);
    };

    Polynomial str = chain_trace(true) - chain_trace(false);

    ResidueProblem prob;
    prob.ring = ring;
    prob.numerator = std::move(str);
    prob.denominators = std::move(denoms);
    prob.residue_vars = std::move(resvars);
    return residue_symbol(prob);
}

bool shift_invariance_check(const MatrixFactorization& mf, const TensorRingPair& pair,
                            const Rat& delta) {
    MatrixFactorization shifted = mf;
    for (auto& s : shifted.module.even.shifts) s += delta;
    for (auto& s : shifted.module.odd.shifts) s += delta;
    return quantum_dimension(shifted, pair, Side::left) == quantum_dimension(mf, pair, Side::left) &&
           quantum_dimension(shifted, pair, Side::right) == quantum_dimension(mf, pair, Side::right);
}

std::optional<Polynomial> polynomial_sqrt(const Polynomial& d) {
    Ring ring = d.ring();
    if (d.is_zero()) return Polynomial(ring);
    const Term& lt = d.terms().front();
    if (sgn(lt.coef) < 0) return std::nullopt;

    // square root of the leading term
    Monomial mroot(lt.mono.size());
    for (std::size_t i = 0; i < lt.mono.size(); ++i) {
        if (lt.mono[i] % 2) return std::nullopt;
        mroot[i] = static_cast<std::uint16_t>(lt.mono[i] / 2);
    }
    Int num = lt.coef.get_num(), den = lt.coef.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
    Rat croot(rnum, rden);
    croot.canonicalize();

    Polynomial p = Polynomial::monomial(ring, mroot, croot);
    Polynomial lead2 = Polynomial::monomial(ring, mroot, croot * 2);
    Polynomial r = d - p * p;
    std::size_t guard = 0;
    while (!r.is_zero()) {
        if (++guard > 100000) return std::nullopt;
        const Term& rt = r.terms().front();
        if (!divides(mroot, rt.mono)) return std::nullopt;
        Monomial q = rt.mono / mroot;
        Polynomial t = Polynomial::monomial(ring, q, rt.coef / (croot * 2));
        Polynomial next = p + t;
        Polynomial nr = d - next * next;
        // the leading term must strictly drop or we are not converging
        if (!nr.is_zero() && cmp_canonical(nr.terms().front().mono, rt.mono) >= 0)
            return std::nullopt;
        p = std::move(next);
        r = std::move(nr);
    }
    return p;
}

AdjugateFlat flat_from_adjugate(const PolyMatrix& sharp, const Ring& ring) {
    Polynomial det = determinant(sharp, ring);
    auto root = polynomial_sqrt(det);
    if (!root || root->is_zero())
        throw std::runtime_error("flat_from_adjugate: det(sharp) is not the square of a polynomial");
    PolyMatrix adj = adjugate_matrix(sharp, ring);
    AdjugateFlat out;
    out.root = *root;
    out.flat.resize(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (auto& e : adj[i]) out.flat[i].push_back(exact_divide(e, out.root));
    return out;
}

} // namespace orbeq

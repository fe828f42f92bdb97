#include "orbeq/ansatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbeq {

std::vector<std::vector<Rat>> entry_grading_matrix(const std::vector<Rat>& shifts_row,
                                                   const std::vector<Rat>& shifts_col) {
    std::vector<std::vector<Rat>> g(shifts_row.size(), std::vector<Rat>(shifts_col.size()));
    for (std::size_t i = 0; i < shifts_row.size(); ++i)
        for (std::size_t j = 0; j < shifts_col.size(); ++j)
            g[i][j] = shifts_col[j] - shifts_row[i] + 1;
    return g;
}

GenericMF build_generic(const AnsatzSpec& spec) {
    const Ring& joint = spec.pair.joint;
    std::size_t rp = spec.shifts_even.size(), rm = spec.shifts_odd.size();
    if (rp == 0 || rm == 0) throw std::runtime_error("build_generic: empty shift list");
    auto gs = entry_grading_matrix(spec.shifts_even, spec.shifts_odd);
    auto gf = entry_grading_matrix(spec.shifts_odd, spec.shifts_even);

    if (spec.seed) {
        if (spec.seed->sharp.size() != rp || spec.seed->flat.size() != rm)
            throw std::runtime_error("build_generic: seed shape differs from shift lists");
        for (const auto& row : spec.seed->sharp)
            if (row.size() != rm) throw std::runtime_error("build_generic: seed sharp shape");
        for (const auto& row : spec.seed->flat)
            if (row.size() != rp) throw std::runtime_error("build_generic: seed flat shape");
    }

    auto seed_entry = [&](ParamProvenance::Block block, std::size_t i, std::size_t j) {
        static const SeedEntry free_entry{};
        if (!spec.seed) return free_entry;
        return block == ParamProvenance::Block::sharp ? spec.seed->sharp[i][j]
                                                      : spec.seed->flat[i][j];
    };

    // first pass: plan one parameter per (entry, missing monomial)
    std::vector<ParamProvenance> plan;
    auto plan_block = [&](ParamProvenance::Block block, std::size_t rows, std::size_t cols,
                          const std::vector<std::vector<Rat>>& grade) {
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                SeedEntry se = seed_entry(block, i, j);
                if (se.kind == SeedEntry::Kind::forced_zero) continue;
                auto monos = monomials_of_grading(joint, grade[i][j]);
                if (se.kind == SeedEntry::Kind::fixed) {
                    if (!se.fixed.is_zero()) {
                        for (const auto& t : se.fixed.terms())
                            if (grading(*joint, t.mono) != grade[i][j])
                                throw std::runtime_error("build_generic: seeded entry grading mismatch");
                    }
                    for (const auto& m : monos)
                        if (is_zero(se.fixed.coefficient(m)))
                            plan.push_back({block, i, j, m});
                } else {
                    for (const auto& m : monos) plan.push_back({block, i, j, m});
                }
            }
        }
    };
    plan_block(ParamProvenance::Block::sharp, rp, rm, gs);
    plan_block(ParamProvenance::Block::flat, rm, rp, gf);

    // extended ring: joint variables then parameters
    GenericMF out;
    out.pair = spec.pair;
    std::vector<VariableSpec> vars = joint->vars();
    for (std::size_t k = 0; k < plan.size(); ++k) {
        std::string name = spec.param_prefix + std::to_string(k + 1);
        out.parameters.push_back(name);
        vars.push_back({name, Rat(0), VarKind::parameter});
    }
    Ring ring = GradedRing::make(std::move(vars));

    auto lift = [&](const Polynomial& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m(ring->size());
            for (std::size_t i = 0; i < t.mono.size(); ++i) m[i] = t.mono[i];
            terms.push_back({std::move(m), t.coef});
        }
        return Polynomial(ring, std::move(terms));
    };

    MatrixFactorization mf;
    mf.ring = ring;
    mf.module = SuperModule{GradedFreeModule{spec.shifts_even}, GradedFreeModule{spec.shifts_odd}};
    mf.target = lift(spec.pair.f_joint - spec.pair.g_joint);
    mf.sharp.assign(rp, std::vector<Polynomial>(rm, Polynomial(ring)));
    mf.flat.assign(rm, std::vector<Polynomial>(rp, Polynomial(ring)));
    for (std::size_t i = 0; i < rp; ++i)
        for (std::size_t j = 0; j < rm; ++j) {
            SeedEntry se = seed_entry(ParamProvenance::Block::sharp, i, j);
            if (se.kind == SeedEntry::Kind::fixed) mf.sharp[i][j] = lift(se.fixed);
        }
    for (std::size_t i = 0; i < rm; ++i)
        for (std::size_t j = 0; j < rp; ++j) {
            SeedEntry se = seed_entry(ParamProvenance::Block::flat, i, j);
            if (se.kind == SeedEntry::Kind::fixed) mf.flat[i][j] = lift(se.fixed);
        }
    for (std::size_t k = 0; k < plan.size(); ++k) {
        const auto& pp = plan[k];
        Monomial m(ring->size());
        for (std::size_t i = 0; i < pp.mono.size(); ++i) m[i] = pp.mono[i];
        m[joint->size() + k] = 1;
        Polynomial term = Polynomial::monomial(ring, std::move(m), Rat(1));
        if (pp.block == ParamProvenance::Block::sharp)
            mf.sharp[pp.row][pp.col] = mf.sharp[pp.row][pp.col] + term;
        else
            mf.flat[pp.row][pp.col] = mf.flat[pp.row][pp.col] + term;
    }
    out.provenance = std::move(plan);
    out.mf = std::move(mf);
    return out;
}

MatrixFactorization instantiate(const GenericMF& gmf,
                                const std::vector<std::pair<std::size_t, Rat>>& param_values) {
    std::size_t base = gmf.pair.joint->size();
    std::vector<std::pair<std::size_t, Rat>> assign;
    assign.reserve(param_values.size());
    for (const auto& [k, v] : param_values) assign.push_back({base + k, v});
    MatrixFactorization out = gmf.mf;
    for (auto& row : out.sharp)
        for (auto& e : row) e = e.evaluated(assign);
    for (auto& row : out.flat)
        for (auto& e : row) e = e.evaluated(assign);
    return out;
}

SpecEnumerator::SpecEnumerator(TensorRingPair pair, unsigned max_rank, Rat shift_bound)
    : pair_(std::move(pair)), max_rank_(max_rank) {
    if (max_rank_ == 0) { exhausted_ = true; return; }
    if (sgn(shift_bound) < 0) throw std::runtime_error("enumerate_specs: negative shift bound");
    // descending grid of candidate shifts, step = 1 / lcm(weight denominators)
    Int den = 1;
    for (const auto& v : pair_.joint->vars())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.weight.get_den().get_mpz_t());
    Rat step(Int(1), den);
    step.canonicalize();
    Rat ratio = shift_bound / step;
    long kmax = static_cast<long>(mpz_class(ratio.get_num() / ratio.get_den()).get_si());
    for (long k = kmax; k >= -kmax; --k) {
        Rat r = step * k;
        r.canonicalize();
        grid_.push_back(r);
        if (k == 0) zero_pos_ = grid_.size() - 1;
    }
    even_idx_.assign(1, zero_pos_);
    odd_idx_.assign(1, 0);
    fresh_rank_ = false;   // first next() emits the initial state
}

bool SpecEnumerator::advance() {
    // odometer over non-decreasing index tuples (grid is descending, so the
    // emitted shift lists are non-increasing); even_idx_[0] is pinned to 0
    auto bump = [&](std::vector<std::size_t>& idx, bool first_fixed) {
        for (std::size_t pos = idx.size(); pos-- > (first_fixed ? 1u : 0u);) {
            if (idx[pos] + 1 < grid_.size()) {
                ++idx[pos];
                for (std::size_t t = pos + 1; t < idx.size(); ++t) idx[t] = idx[pos];
                return true;
            }
        }
        return false;
    };
    if (bump(odd_idx_, false)) return true;
    odd_idx_.assign(odd_idx_.size(), 0);
    if (bump(even_idx_, true)) return true;
    ++rank_;
    if (rank_ > max_rank_) return false;
    even_idx_.assign(rank_, zero_pos_);
    odd_idx_.assign(rank_, 0);
    return true;
}

std::optional<AnsatzSpec> SpecEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (fresh_rank_ && !advance()) {
        exhausted_ = true;
        return std::nullopt;
    }
    fresh_rank_ = true;
    AnsatzSpec spec;
    spec.pair = pair_;
    for (auto i : even_idx_) spec.shifts_even.push_back(grid_[i]);
    for (auto i : odd_idx_) spec.shifts_odd.push_back(grid_[i]);
    return spec;
}

} // namespace orbeq

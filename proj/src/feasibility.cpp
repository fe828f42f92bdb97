#include "orbeq/feasibility.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

namespace orbeq {

Verdict check(const EquationSystem& sys, const Limits& limits) {
    Verdict v;
    if (sys.inconsistent_marker) {
        v.kind = VerdictKind::inconsistent;
        return v;
    }
    if (sys.equations.empty()) {
        v.kind = VerdictKind::consistent;
        v.certificate = GroebnerBasis{MonomialOrder::degrevlex(), {}, std::nullopt};
        return v;
    }
    GBLimits gl{limits.max_pair_reductions, limits.max_basis_size, limits.max_seconds};
    auto res = buchberger(sys.equations, MonomialOrder::degrevlex(), false, gl);
    v.stats = res.stats;
    if (res.outcome != GBOutcome::completed) {
        v.kind = VerdictKind::resource_limit;
        return v;
    }
    if (res.basis.is_unit()) {
        v.kind = VerdictKind::inconsistent;
    } else {
        v.kind = VerdictKind::consistent;
        v.certificate = std::move(res.basis);
    }
    return v;
}

std::string export_system(const EquationSystem& sys, ExportFormat format) {
    if (format == ExportFormat::native) return dump_system(sys);

    std::size_t n = sys.pring->size();
    for (const auto& e : sys.equations)
        if (e.total_degree() > 2)
            throw std::runtime_error("mq_style export requires a quadratic system "
                                     "(strip helper equations first)");
    std::ostringstream os;
    os << "Number of variables (n) : " << n << "\n";
    os << "Number of equations (m) : " << sys.equations.size() << "\n";
    // columns in graded-lex order: 1; c1..cn; then ci*cj for i <= j
    for (const auto& e : sys.equations) {
        std::vector<std::string> row;
        Monomial m(n);
        row.push_back(rat_to_string(e.coefficient(m)));
        for (std::size_t i = 0; i < n; ++i) {
            Monomial mi(n);
            mi[i] = 1;
            row.push_back(rat_to_string(e.coefficient(mi)));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Monomial mij(n);
                mij[i] = static_cast<std::uint16_t>(mij[i] + 1);
                mij[j] = static_cast<std::uint16_t>(mij[j] + 1);
                row.push_back(rat_to_string(e.coefficient(mij)));
            }
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
        os << " ;\n";
    }
    return os.str();
}

namespace {

EquationSystem substitute_value(const EquationSystem& sys, std::size_t var, const Rat& value) {
    EquationSystem out;
    out.pring = sys.pring;
    out.inconsistent_marker = sys.inconsistent_marker;
    Polynomial val = Polynomial::constant(sys.pring, value);
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        Polynomial e = sys.equations[i];
        if (e.uses_variable(var)) e = e.evaluated({{var, value}});
        if (e.is_zero()) continue;
        out.equations.push_back(std::move(e));
        out.provenance.push_back(sys.provenance[i]);
    }
    for (auto [v, p] : sys.eliminated) {
        if (p.uses_variable(var)) p = p.evaluated({{var, value}});
        out.eliminated.push_back({v, std::move(p)});
    }
    out.eliminated.push_back({var, val});
    return out;
}

} // namespace

std::optional<Witness> extract_witness(const EquationSystem& sys, const GenericMF& gmf,
                                       const Limits& limits, unsigned budget) {
    if (budget == 0) return std::nullopt;
    static const long cand_num[] = {1, -1, 0, 2, -2, 1, -1, 3, -3};
    static const long cand_den[] = {1, 1, 1, 1, 1, 2, 2, 1, 1};

    EquationSystem cur = sys;
    std::vector<std::pair<std::size_t, Rat>> fixed;
    unsigned calls = 0;
    while (true) {
        auto used = used_parameters(cur);
        if (used.empty()) {
            if (!cur.equations.empty()) return std::nullopt;   // leftover constants
            break;
        }
        std::size_t v = used.front();
        bool done = false;
        for (std::size_t k = 0; k < sizeof(cand_num) / sizeof(cand_num[0]); ++k) {
            if (++calls > budget) return std::nullopt;
            Rat value = rat(cand_num[k], cand_den[k]);
            EquationSystem attempt = linear_eliminate(substitute_value(cur, v, value));
            Verdict verdict = check(attempt, limits);
            if (verdict.kind == VerdictKind::consistent) {
                cur = std::move(attempt);
                fixed.push_back({v, value});
                done = true;
                break;
            }
            if (verdict.kind == VerdictKind::resource_limit) return std::nullopt;
        }
        if (!done) return std::nullopt;
    }

    // all remaining values come from the eliminated map, which by now only
    // involves fixed variables
    std::vector<std::optional<Rat>> values(cur.pring->size());
    for (const auto& [v, value] : fixed) values[v] = value;
    for (const auto& [v, expr] : cur.eliminated) {
        std::vector<std::pair<std::size_t, Rat>> assign;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] && expr.uses_variable(i)) assign.push_back({i, *values[i]});
        Polynomial c = expr.evaluated(assign);
        if (c.total_degree() != 0) return std::nullopt;   // still parameter-dependent
        values[v] = c.is_zero() ? Rat(0) : c.terms().front().coef;
    }
    for (auto& v : values)
        if (!v) v = Rat(0);   // unconstrained parameters

    Witness w;
    for (std::size_t i = 0; i < values.size(); ++i)
        w.values.push_back({cur.pring->var(i).name, *values[i]});

    // re-verify: numeric factorization identity and nonzero quantum dimensions
    std::vector<std::pair<std::size_t, Rat>> param_values;
    for (std::size_t i = 0; i < gmf.parameters.size(); ++i) param_values.push_back({i, *values[i]});
    MatrixFactorization concrete = instantiate(gmf, param_values);
    if (!verify_factorization(concrete).verified) return std::nullopt;
    Polynomial ql = quantum_dimension(concrete, gmf.pair, Side::left);
    Polynomial qr = quantum_dimension(concrete, gmf.pair, Side::right);
    if (ql.is_zero() || qr.is_zero()) return std::nullopt;
    w.reverified = true;
    return w;
}

namespace {

SearchReport evaluate_candidate(const AnsatzSpec& spec, const SearchOptions& opts) {
    SearchReport rep;
    rep.shifts_even = spec.shifts_even;
    rep.shifts_odd = spec.shifts_odd;
    GenericMF gmf = build_generic(spec);
    EquationSystem sys = append_nonvanishing(extract(gmf, opts.half), gmf);
    rep.system_stats = stats(sys);
    EquationSystem reduced = linear_eliminate(sys);
    rep.residual_equations = reduced.equations.size();
    rep.residual_variables = used_parameters(reduced).size();
    if (opts.export_only) {
        if (opts.export_format == ExportFormat::mq_style) {
            // helper equations exceed degree two by construction; export the
            // pre-helper extraction instead
            rep.exported = export_system(extract(gmf, opts.half), opts.export_format);
        } else {
            rep.exported = export_system(reduced, opts.export_format);
        }
        rep.verdict.kind = VerdictKind::resource_limit;   // not checked
        return rep;
    }
    rep.verdict = check(reduced, opts.limits);
    if (rep.verdict.kind == VerdictKind::consistent && opts.witness_budget > 0)
        rep.witness = extract_witness(reduced, gmf, opts.limits, opts.witness_budget);
    return rep;
}

} // namespace

bool search(const TensorRingPair& pair, const SearchOptions& opts,
            const std::function<void(const SearchReport&)>& emit) {
    std::vector<AnsatzSpec> queue;
    if (opts.seed) {
        if (!opts.shifts)
            throw std::runtime_error("search: a seed needs explicit shift lists");
        AnsatzSpec spec;
        spec.pair = pair;
        spec.shifts_even = opts.shifts->first;
        spec.shifts_odd = opts.shifts->second;
        spec.seed = opts.seed;
        queue.push_back(std::move(spec));
    } else {
        SpecEnumerator en(pair, opts.max_rank, opts.shift_bound);
        while (auto s = en.next()) {
            if (opts.shifts) { s->shifts_even = opts.shifts->first; s->shifts_odd = opts.shifts->second; }
            queue.push_back(std::move(*s));
        }
        if (opts.shifts && !queue.empty()) queue.resize(1);
    }

    unsigned jobs = std::max(1u, opts.jobs);
    for (std::size_t base = 0; base < queue.size(); base += jobs) {
        std::size_t batch = std::min<std::size_t>(jobs, queue.size() - base);
        std::vector<std::future<SearchReport>> futs;
        if (batch > 1) {
            for (std::size_t k = 0; k < batch; ++k)
                futs.push_back(std::async(std::launch::async, evaluate_candidate,
                                          std::cref(queue[base + k]), std::cref(opts)));
        }
        for (std::size_t k = 0; k < batch; ++k) {
            SearchReport rep = batch > 1 ? futs[k].get() : evaluate_candidate(queue[base + k], opts);
            bool hit = !opts.export_only && rep.verdict.kind == VerdictKind::consistent;
            emit(rep);
            if (hit) return true;
        }
    }
    return false;
}

} // namespace orbeq

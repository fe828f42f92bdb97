#include "orbeq/equations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbeq {
namespace {

// integer coefficients with gcd one, leading (canonical) coefficient positive
Polynomial content_normalized(const Polynomial& p) {
    if (p.is_zero()) return p;
    Int num = 0, den = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    Rat content(num, den);
    content.canonicalize();
    if (sgn(p.terms().front().coef) < 0) content = -content;
    return p.scaled(Rat(1) / content);
}

Ring parameter_ring(const std::vector<std::string>& names) {
    std::vector<VariableSpec> vars;
    vars.reserve(names.size());
    for (const auto& n : names) vars.push_back({n, Rat(0), VarKind::parameter});
    return GradedRing::make(std::move(vars));
}

// project a (joint + parameters) polynomial onto the parameter ring,
// dropping the geometric block which must be zero
Polynomial project_params(const Polynomial& p, std::size_t n_joint, const Ring& pring) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(pring->size());
        for (std::size_t k = 0; k < n_joint; ++k)
            if (t.mono[k])
                throw std::runtime_error("project_params: geometric variable left over");
        for (std::size_t k = n_joint; k < t.mono.size(); ++k)
            m[k - n_joint] = t.mono[k];
        terms.push_back({std::move(m), t.coef});
    }
    return Polynomial(pring, std::move(terms));
}

} // namespace

EquationSystem extract(const GenericMF& gmf, bool half) {
    EquationSystem sys;
    sys.pring = parameter_ring(gmf.parameters);
    std::size_t n_joint = gmf.pair.joint->size();

    auto take_block = [&](const PolyMatrix& a, const PolyMatrix& b,
                          EquationProvenance::Source source) {
        PolyMatrix prod = matrix_multiply(a, b);
        std::set<std::vector<Term>> seen;
        for (std::size_t i = 0; i < prod.size(); ++i) {
            for (std::size_t j = 0; j < prod[i].size(); ++j) {
                Polynomial e = prod[i][j];
                if (i == j) e = e - gmf.mf.target;
                if (e.is_zero()) continue;
                // split by geometric monomial; each coefficient is one equation
                struct GeoCmp {
                    bool operator()(const Monomial& x, const Monomial& y) const {
                        return cmp_canonical(x, y) > 0;
                    }
                };
                std::map<Monomial, std::vector<Term>, GeoCmp> groups;
                for (const auto& t : e.terms()) {
                    Monomial geo(n_joint), par(sys.pring->size());
                    for (std::size_t k = 0; k < n_joint; ++k) geo[k] = t.mono[k];
                    for (std::size_t k = n_joint; k < t.mono.size(); ++k)
                        par[k - n_joint] = t.mono[k];
                    groups[geo].push_back({std::move(par), t.coef});
                }
                for (auto& [geo, terms] : groups) {
                    Polynomial eq = content_normalized(Polynomial(sys.pring, std::move(terms)));
                    if (eq.is_zero()) continue;
                    if (!seen.insert(eq.terms()).second) continue;   // dedup up to scaling
                    sys.equations.push_back(std::move(eq));
                    sys.provenance.push_back({source, i, j, geo});
                }
            }
        }
    };

    take_block(gmf.mf.sharp, gmf.mf.flat, EquationProvenance::Source::sharp_flat);
    if (!half) take_block(gmf.mf.flat, gmf.mf.sharp, EquationProvenance::Source::flat_sharp);
    return sys;
}

EquationSystem append_nonvanishing(const EquationSystem& sys, const GenericMF& gmf) {
    Polynomial ql = quantum_dimension(gmf.mf, gmf.pair, Side::left);
    Polynomial qr = quantum_dimension(gmf.mf, gmf.pair, Side::right);

    EquationSystem out;
    std::vector<std::string> names;
    for (const auto& v : sys.pring->vars()) names.push_back(v.name);
    names.push_back("cl");
    names.push_back("cr");
    out.pring = parameter_ring(names);
    out.inconsistent_marker = sys.inconsistent_marker;

    auto rehome = [&](const Polynomial& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m(out.pring->size());
            for (std::size_t k = 0; k < t.mono.size(); ++k) m[k] = t.mono[k];
            terms.push_back({std::move(m), t.coef});
        }
        return Polynomial(out.pring, std::move(terms));
    };
    for (const auto& e : sys.equations) out.equations.push_back(rehome(e));
    out.provenance = sys.provenance;
    for (const auto& [v, p] : sys.eliminated) out.eliminated.push_back({v, rehome(p)});

    std::size_t n_joint = gmf.pair.joint->size();
    std::size_t cl = out.pring->size() - 2, cr = out.pring->size() - 1;
    Polynomial one = Polynomial::constant(out.pring, Rat(1));
    auto helper = [&](const Polynomial& q, std::size_t var, EquationProvenance::Source src) {
        Polynomial qp = rehome(project_params(q, n_joint, sys.pring));
        if (qp.is_zero()) out.inconsistent_marker = true;
        Polynomial eq = Polynomial::variable(out.pring, var) * qp - one;
        out.equations.push_back(content_normalized(eq));
        out.provenance.push_back({src, 0, 0, Monomial(n_joint)});
    };
    helper(ql, cl, EquationProvenance::Source::helper_left);
    helper(qr, cr, EquationProvenance::Source::helper_right);
    return out;
}

EquationSystem linear_eliminate(const EquationSystem& sys, std::size_t max_passes) {
    EquationSystem out = sys;
    std::size_t n = out.pring->size();
    std::size_t steps = 0;

    while (max_passes == 0 || steps < max_passes) {
        // occurrence counts per variable
        std::vector<std::size_t> occ(n, 0);
        for (const auto& e : out.equations) {
            for (std::size_t v = 0; v < n; ++v)
                if (e.uses_variable(v)) ++occ[v];
        }
        // eligible pivots: equation of the form c*v + r, r free of v
        struct Pivot {
            std::size_t occ, var, terms, eq;
        };
        std::optional<Pivot> best;
        for (std::size_t idx = 0; idx < out.equations.size(); ++idx) {
            const Polynomial& e = out.equations[idx];
            if (e.is_zero()) continue;
            for (std::size_t v = 0; v < n; ++v) {
                bool unit_seen = false, other_use = false;
                for (const auto& t : e.terms()) {
                    if (t.mono[v] == 0) continue;
                    if (t.mono[v] == 1 && t.mono.total_degree() == 1) unit_seen = true;
                    else other_use = true;
                }
                if (!unit_seen || other_use) continue;
                Pivot cand{occ[v], v, e.term_count(), idx};
                if (!best || std::tie(cand.occ, cand.var, cand.terms, cand.eq) <
                                 std::tie(best->occ, best->var, best->terms, best->eq))
                    best = cand;
            }
        }
        if (!best) break;
        ++steps;

        const Polynomial& e = out.equations[best->eq];
        std::size_t v = best->var;
        Monomial unit(n);
        unit[v] = 1;
        Rat c = e.coefficient(unit);
        Polynomial r = e - Polynomial::monomial(out.pring, unit, c);
        Polynomial sub = r.scaled(Rat(-1) / c);

        std::vector<Polynomial> next;
        std::vector<EquationProvenance> next_prov;
        std::set<std::vector<Term>> seen;
        for (std::size_t idx = 0; idx < out.equations.size(); ++idx) {
            if (idx == best->eq) continue;
            Polynomial ne = out.equations[idx];
            if (ne.uses_variable(v)) ne = ne.substituted(v, sub);
            ne = content_normalized(ne);
            if (ne.is_zero()) continue;
            if (!seen.insert(ne.terms()).second) continue;
            next.push_back(std::move(ne));
            next_prov.push_back(out.provenance[idx]);
        }
        for (auto& [ev, val] : out.eliminated)
            if (val.uses_variable(v)) val = val.substituted(v, sub);
        out.eliminated.push_back({v, sub});
        out.equations = std::move(next);
        out.provenance = std::move(next_prov);
    }
    return out;
}

SystemStats stats(const EquationSystem& sys) {
    SystemStats s;
    s.parameters = sys.pring->size();
    s.equations = sys.equations.size();
    std::size_t terms = 0;
    for (const auto& e : sys.equations) {
        ++s.degree_histogram[e.total_degree()];
        terms += e.term_count();
    }
    if (!sys.equations.empty())
        s.density = static_cast<double>(terms) / static_cast<double>(sys.equations.size());
    return s;
}

std::string render_stats_row(const std::string& name, const SystemStats& s) {
    std::ostringstream os;
    os << name << " | " << s.parameters << " | " << s.equations;
    return os.str();
}

std::string dump_system(const EquationSystem& sys) {
    std::ostringstream os;
    os << "system vars " << sys.pring->size() << " eqs " << sys.equations.size() << "\n";
    for (const auto& v : sys.pring->vars()) os << "v " << v.name << "\n";
    for (const auto& e : sys.equations) os << "e " << e.to_string() << "\n";
    return os.str();
}

std::vector<std::size_t> used_parameters(const EquationSystem& sys) {
    std::vector<std::size_t> used;
    for (std::size_t v = 0; v < sys.pring->size(); ++v) {
        bool hit = false;
        for (const auto& e : sys.equations)
            if (e.uses_variable(v)) { hit = true; break; }
        if (hit) used.push_back(v);
    }
    return used;
}

} // namespace orbeq

#include "orbeq/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace orbeq {

GradedRing::GradedRing(std::vector<VariableSpec> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (v.name.empty()) throw std::runtime_error("variable with empty name");
        if (v.kind == VarKind::geometric) {
            if (sgn(v.weight) <= 0)
                throw std::runtime_error("geometric variable " + v.name + " needs weight > 0");
            ++n_geometric_;
        } else if (!is_zero(v.weight)) {
            throw std::runtime_error("parameter variable " + v.name + " must have weight 0");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[j].name == v.name)
                throw std::runtime_error("duplicate variable name " + v.name);
    }
}

Ring GradedRing::make(std::vector<VariableSpec> vars) {
    return Ring(new GradedRing(std::move(vars)));
}

std::size_t GradedRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return npos;
}

std::vector<std::size_t> GradedRing::geometric_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].kind == VarKind::geometric) out.push_back(i);
    return out;
}

bool GradedRing::same_as(const GradedRing& other) const {
    if (vars_.size() != other.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto &a = vars_[i], &b = other.vars_[i];
        if (a.name != b.name || a.weight != b.weight || a.kind != b.kind) return false;
    }
    return true;
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (auto e : e_) if (e) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > b.e_[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Rat grading(const GradedRing& ring, const Monomial& m) {
    Rat g = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] && ring.var(i).kind == VarKind::geometric)
            g += Rat(static_cast<long>(m[i])) * ring.var(i).weight;
    return g;
}

int cmp_canonical(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // degrevlex: the monomial with the smaller exponent at the last
    // differing position is the larger one
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return cmp_canonical(x.mono, y.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && orbeq::is_zero(out.back().coef)) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(const Ring& ring, const Rat& c) {
    Polynomial p(ring);
    if (!orbeq::is_zero(c)) p.terms_.push_back({Monomial(ring->size()), c});
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t idx, unsigned exp) {
    Monomial m(ring->size());
    m[idx] = static_cast<std::uint16_t>(exp);
    return monomial(ring, m, Rat(1));
}

Polynomial Polynomial::monomial(const Ring& ring, Monomial m, const Rat& c) {
    Polynomial p(ring);
    if (!orbeq::is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(ring_ ? ring_ : o.ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_canonical(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].coef + o.terms_[j].coef;
            if (!orbeq::is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rat& c) const {
    if (orbeq::is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rat& c) const {
    if (orbeq::is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    // multiplying by a fixed monomial preserves the order of terms
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const Polynomial* a = this;
    const Polynomial* b = &o;
    if (a->terms_.size() > b->terms_.size()) std::swap(a, b);
    Polynomial acc(ring_ ? ring_ : o.ring_);
    std::vector<Term> all;
    all.reserve(a->terms_.size() * b->terms_.size());
    for (const auto& ta : a->terms_)
        for (const auto& tb : b->terms_)
            all.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
    return Polynomial(acc.ring(), std::move(all));
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) continue;
        Monomial m = t.mono;
        Rat c = t.coef * Rat(static_cast<long>(m[var]));
        m[var] = static_cast<std::uint16_t>(m[var] - 1);
        r.terms_.push_back({std::move(m), std::move(c)});
    }
    // term order is stable under uniform exponent decrement within one variable
    // except for degree ties; re-normalize to be safe
    return Polynomial(ring_, std::move(r.terms_));
}

Rat Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coef;
    return Rat(0);
}

Polynomial Polynomial::substituted(std::size_t var, const Polynomial& value) const {
    Polynomial out(ring_);
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) {
            out = out + Polynomial::monomial(ring_, t.mono, t.coef);
            continue;
        }
        Monomial m = t.mono;
        unsigned e = m[var];
        m[var] = 0;
        Polynomial piece = Polynomial::monomial(ring_, m, t.coef);
        for (unsigned k = 0; k < e; ++k) piece = piece * value;
        out = out + piece;
    }
    return out;
}

Polynomial Polynomial::evaluated(const std::vector<std::pair<std::size_t, Rat>>& assignments) const {
    Polynomial out(ring_);
    std::vector<Term> acc;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        Rat c = t.coef;
        for (const auto& [v, val] : assignments) {
            unsigned e = m[v];
            if (!e) continue;
            m[v] = 0;
            for (unsigned k = 0; k < e; ++k) c *= val;
        }
        if (!orbeq::is_zero(c)) acc.push_back({std::move(m), std::move(c)});
    }
    return Polynomial(ring_, std::move(acc));
}

bool Polynomial::uses_variable(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono[var]) return true;
    return false;
}

unsigned Polynomial::degree_in(const std::vector<std::size_t>& vars) const {
    unsigned best = 0;
    for (const auto& t : terms_) {
        unsigned d = 0;
        for (auto v : vars) d += t.mono[v];
        best = std::max(best, d);
    }
    return best;
}

unsigned Polynomial::total_degree() const {
    unsigned best = 0;
    for (const auto& t : terms_) best = std::max(best, t.mono.total_degree());
    return best;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coef;
        if (first) {
            if (sgn(c) < 0) { os << "-"; c = -c; }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool coef_one = (c == 1);
        bool printed = false;
        if (!coef_one || t.mono.is_one()) {
            os << rat_to_string(c);
            printed = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (!t.mono[i]) continue;
            if (printed) os << "*";
            os << ring_->var(i).name;
            if (t.mono[i] > 1) os << "^" << t.mono[i];
            printed = true;
        }
    }
    return os.str();
}

// ---- parser ----
// grammar: terms joined by '+'/'-'; term = optional rational coefficient and
// '*'-separated powers var or var^nat; whitespace insignificant.
namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    explicit Lexer(const std::string& src) : s(src) {}
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char take() { skip_ws(); return s[i++]; }
};

std::string take_number(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.i;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
    if (lx.i < lx.s.size() && lx.s[lx.i] == '/') {
        ++lx.i;
        std::size_t dstart = lx.i;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
        if (lx.i == dstart) throw std::runtime_error("malformed rational in polynomial");
    }
    return lx.s.substr(start, lx.i - start);
}

std::string take_name(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.i;
    while (lx.i < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_')) ++lx.i;
    if (lx.i == start) throw std::runtime_error("expected variable name in polynomial");
    return lx.s.substr(start, lx.i - start);
}

} // namespace

Polynomial parse_polynomial(const std::string& src, const Ring& ring) {
    Lexer lx(src);
    std::vector<Term> terms;
    bool negate = false;
    bool expect_term = true;
    // leading sign
    while (!lx.done()) {
        char c = lx.peek();
        if (expect_term && (c == '+' || c == '-')) {
            lx.take();
            if (c == '-') negate = !negate;
            continue;
        }
        if (!expect_term) {
            if (c == '+' || c == '-') {
                lx.take();
                negate = (c == '-');
                expect_term = true;
                continue;
            }
            throw std::runtime_error(std::string("unexpected character '") + c + "' in polynomial");
        }
        // one term
        Rat coef(1);
        Monomial mono(ring->size());
        bool saw_factor = false;
        bool want_factor = true;
        while (want_factor) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                coef *= rat_from_string(take_number(lx));
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = take_name(lx);
                std::size_t idx = ring->index_of(name);
                if (idx == GradedRing::npos)
                    throw std::runtime_error("unknown variable name: " + name);
                unsigned exp = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    std::string n = take_number(lx);
                    if (n.empty() || n.find('/') != std::string::npos)
                        throw std::runtime_error("exponent must be a natural number");
                    exp = static_cast<unsigned>(std::stoul(n));
                }
                mono[idx] = static_cast<std::uint16_t>(mono[idx] + exp);
            } else {
                throw std::runtime_error("expected coefficient or variable in polynomial term");
            }
            saw_factor = true;
            if (lx.peek() == '*') { lx.take(); continue; }
            want_factor = false;
        }
        if (!saw_factor) throw std::runtime_error("empty term in polynomial");
        if (negate) coef = -coef;
        terms.push_back({std::move(mono), std::move(coef)});
        negate = false;
        expect_term = false;
    }
    if (expect_term && !terms.empty())
        throw std::runtime_error("dangling sign in polynomial");
    return Polynomial(ring, std::move(terms));
}

GradingResult quasi_homogeneous_degree(const Polynomial& p) {
    if (p.is_zero())
        throw std::runtime_error("quasi_homogeneous_degree: degree of the zero polynomial is undefined");
    GradingResult res;
    const auto& ring = *p.ring();
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat g = grading(ring, t.mono);
        if (first) { res.degree = g; first = false; }
        else if (g != res.degree) return res;
    }
    res.homogeneous = true;
    // independent verification via the Euler identity
    // sum_i (|x_i|/d) x_i d_i p = p  (degree-zero polynomials are exempt)
    if (sgn(res.degree) > 0) {
        Polynomial acc(p.ring());
        for (std::size_t i = 0; i < ring.size(); ++i) {
            if (ring.var(i).kind != VarKind::geometric) continue;
            Polynomial term = p.derivative(i) * Polynomial::variable(p.ring(), i);
            acc = acc + term.scaled(ring.var(i).weight / res.degree);
        }
        if (!(acc == p))
            throw std::runtime_error("quasi_homogeneous_degree: Euler identity check failed");
    }
    return res;
}

Rat central_charge_of_weights(const GradedRing& ring) {
    Rat c = 0;
    for (const auto& v : ring.vars())
        if (v.kind == VarKind::geometric) c += Rat(1) - v.weight;
    return c;
}

std::vector<Monomial> monomials_of_grading(const Ring& ring, const Rat& q) {
    std::vector<Monomial> out;
    if (sgn(q) < 0) return out;
    auto geo = ring->geometric_indices();
    Monomial cur(ring->size());
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t pos, Rat rem) {
        if (pos == geo.size()) {
            if (is_zero(rem)) out.push_back(cur);
            return;
        }
        std::size_t vi = geo[pos];
        const Rat& w = ring->var(vi).weight;
        Rat ratio = rem / w;
        // floor of a canonical nonneg rational
        unsigned emax = static_cast<unsigned>(mpz_class(ratio.get_num() / ratio.get_den()).get_ui());
        for (unsigned e = 0; e <= emax; ++e) {
            cur[vi] = static_cast<std::uint16_t>(e);
            rec(pos + 1, rem - w * static_cast<long>(e));
        }
        cur[vi] = 0;
    };
    rec(0, q);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return cmp_canonical(a, b) > 0;
    });
    return out;
}

} // namespace orbeq

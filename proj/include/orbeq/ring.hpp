#ifndef ORBEQ_RING_HPP
#define ORBEQ_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orbeq/rational.hpp"

namespace orbeq {

enum class VarKind { geometric, parameter };

struct VariableSpec {
    std::string name;
    Rat weight;       // grading |x_i|; > 0 for geometric, exactly 0 for parameter
    VarKind kind = VarKind::geometric;
};

class GradedRing;
using Ring = std::shared_ptr<const GradedRing>;

// Polynomial ring over Q with a fixed, totally ordered variable list.
// Two rings are interchangeable iff their ordered variable lists agree.
class GradedRing {
public:
    static Ring make(std::vector<VariableSpec> vars);

    std::size_t size() const { return vars_.size(); }
    const VariableSpec& var(std::size_t i) const { return vars_[i]; }
    const std::vector<VariableSpec>& vars() const { return vars_; }

    // index of a variable name, or npos
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<std::size_t> geometric_indices() const;
    std::size_t geometric_count() const { return n_geometric_; }

    bool same_as(const GradedRing& other) const;

private:
    explicit GradedRing(std::vector<VariableSpec> vars);
    std::vector<VariableSpec> vars_;
    std::size_t n_geometric_ = 0;
};

bool same_ring(const Ring& a, const Ring& b);

// Dense exponent vector, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : e_(n, 0) {}
    explicit Monomial(std::vector<std::uint16_t> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    std::uint16_t operator[](std::size_t i) const { return e_[i]; }
    std::uint16_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint16_t>& exponents() const { return e_; }

    unsigned total_degree() const;
    bool is_one() const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    Monomial operator*(const Monomial& o) const;
    // componentwise quotient; caller must ensure divisibility
    Monomial operator/(const Monomial& o) const;

    friend bool divides(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint16_t> e_;
};

// grading of a monomial: sum of e_i * |x_i| over geometric variables
Rat grading(const GradedRing& ring, const Monomial& m);

struct Term {
    Monomial mono;
    Rat coef;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coef == b.coef;
}
inline bool operator<(const Term& a, const Term& b) {
    if (!(a.mono == b.mono)) return a.mono.exponents() < b.mono.exponents();
    return a.coef < b.coef;
}

// Sparse polynomial in canonical form: terms sorted descending under the
// ring's ambient order (degrevlex in the declared variable order), no zero
// coefficients. Equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, std::vector<Term> terms);  // normalizes

    static Polynomial constant(const Ring& ring, const Rat& c);
    static Polynomial variable(const Ring& ring, std::size_t idx, unsigned exp = 1);
    static Polynomial monomial(const Ring& ring, Monomial m, const Rat& c);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    // this * (c * m)
    Polynomial times_term(const Monomial& m, const Rat& c) const;

    Polynomial derivative(std::size_t var) const;

    // coefficient of an exact monomial (zero Rat if absent)
    Rat coefficient(const Monomial& m) const;

    // substitute variable -> polynomial (same ring)
    Polynomial substituted(std::size_t var, const Polynomial& value) const;

    // exact evaluation of selected variables at rational values;
    // assignments: (var index, value)
    Polynomial evaluated(const std::vector<std::pair<std::size_t, Rat>>& assignments) const;

    // true if some term uses the variable
    bool uses_variable(std::size_t var) const;
    // largest total degree over the given variable subset
    unsigned degree_in(const std::vector<std::size_t>& vars) const;
    unsigned total_degree() const;

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
    void normalize();
};

// ambient canonical order (degrevlex over the declared variable order);
// returns <0, 0, >0
int cmp_canonical(const Monomial& a, const Monomial& b);

Polynomial parse_polynomial(const std::string& src, const Ring& ring);

// ---- grading utilities ----

// grading shared by all terms, or nullopt marker via `ok=false`
struct GradingResult {
    bool homogeneous = false;
    Rat degree;
};
GradingResult quasi_homogeneous_degree(const Polynomial& p);

Rat central_charge_of_weights(const GradedRing& ring);

// all monomials in geometric variables of grading exactly q, canonical
// order (descending). Empty for unreachable gradings.
std::vector<Monomial> monomials_of_grading(const Ring& ring, const Rat& q);

// ---- potentials ----

// Quasi-homogeneous polynomial with 0 < dim Jac f < infinity, weights
// rescaled so the degree is exactly 2.
struct Potential {
    Ring ring;          // rescaled ring
    Polynomial poly;    // re-homed to `ring`
    Rat degree;         // always 2
    unsigned jacobian_dimension = 0;
};

Potential validate_potential(const Polynomial& p);
std::vector<Polynomial> jacobian_ideal(const Potential& p);
Rat central_charge(const Potential& p);
Potential berglund_huebsch_transpose(const Potential& p);

} // namespace orbeq

#endif

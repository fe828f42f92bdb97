#ifndef ORBEQ_ORDER_HPP
#define ORBEQ_ORDER_HPP

#include <memory>
#include <vector>

#include "orbeq/ring.hpp"

namespace orbeq {

// Total multiplicative well-order on monomials. The permutation lists
// variable indices by precedence, most significant first; empty means the
// ring's declared order.
class MonomialOrder {
public:
    MonomialOrder() = default;   // degrevlex in the declared variable order
    static MonomialOrder degrevlex(std::vector<std::size_t> perm = {});
    static MonomialOrder lex(std::vector<std::size_t> perm = {});
    static MonomialOrder weighted(std::vector<Rat> weights, MonomialOrder tiebreak);
    // compares the block variables first under `outer`, ties decided by
    // `inner` on the remaining variables
    static MonomialOrder elimination(std::vector<std::size_t> block,
                                     MonomialOrder outer, MonomialOrder inner);

    // lex order in the declared variable order with variable i moved last
    // (i.e. smaller than all others); the order used by the pure-power lemma
    static MonomialOrder lex_with_var_last(std::size_t n_vars, std::size_t i);

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;

private:
    enum class Kind { degrevlex, lex, weighted, elimination };
    Kind kind_ = Kind::degrevlex;
    std::vector<std::size_t> perm_;      // lex/degrevlex
    std::vector<Rat> weights_;           // weighted
    std::vector<std::size_t> block_;     // elimination
    std::shared_ptr<MonomialOrder> sub1_, sub2_;
};

} // namespace orbeq

#endif

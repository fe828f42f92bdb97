#include "orbeq/order.hpp"

#include <sstream>
#include <stdexcept>

namespace orbeq {

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> perm) {
    MonomialOrder o;
    o.kind_ = Kind::degrevlex;
    o.perm_ = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> perm) {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    o.perm_ = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<Rat> weights, MonomialOrder tiebreak) {
    MonomialOrder o;
    o.kind_ = Kind::weighted;
    o.weights_ = std::move(weights);
    o.sub1_ = std::make_shared<MonomialOrder>(std::move(tiebreak));
    return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> block,
                                         MonomialOrder outer, MonomialOrder inner) {
    MonomialOrder o;
    o.kind_ = Kind::elimination;
    o.block_ = std::move(block);
    o.sub1_ = std::make_shared<MonomialOrder>(std::move(outer));
    o.sub2_ = std::make_shared<MonomialOrder>(std::move(inner));
    return o;
}

MonomialOrder MonomialOrder::lex_with_var_last(std::size_t n_vars, std::size_t i) {
    std::vector<std::size_t> perm;
    perm.reserve(n_vars);
    for (std::size_t k = 0; k < n_vars; ++k)
        if (k != i) perm.push_back(k);
    perm.push_back(i);
    return lex(std::move(perm));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::lex: {
        if (perm_.empty()) {
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
            return 0;
        }
        for (std::size_t k : perm_)
            if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
        return 0;
    }
    case Kind::degrevlex: {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        if (perm_.empty()) {
            for (std::size_t k = a.size(); k-- > 0;)
                if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
            return 0;
        }
        for (std::size_t t = perm_.size(); t-- > 0;) {
            std::size_t k = perm_[t];
            if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
        }
        return 0;
    }
    case Kind::weighted: {
        Rat wa = 0, wb = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k]) wa += weights_[k] * static_cast<long>(a[k]);
            if (b[k]) wb += weights_[k] * static_cast<long>(b[k]);
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        return sub1_->compare(a, b);
    }
    case Kind::elimination: {
        // compare the block components, then everything under inner
        Monomial ba(a.size()), bb(a.size());
        for (std::size_t k : block_) { ba[k] = a[k]; bb[k] = b[k]; }
        int c = sub1_->compare(ba, bb);
        if (c != 0) return c;
        Monomial ra = a, rb = b;
        for (std::size_t k : block_) { ra[k] = 0; rb[k] = 0; }
        return sub2_->compare(ra, rb);
    }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::degrevlex: os << "degrevlex"; break;
    case Kind::lex: os << "lex"; break;
    case Kind::weighted: os << "weighted"; break;
    case Kind::elimination: os << "elimination"; break;
    }
    if (!perm_.empty()) {
        os << "(";
        for (std::size_t i = 0; i < perm_.size(); ++i) os << (i ? "," : "") << perm_[i];
        os << ")";
    }
    return os.str();
}

} // namespace orbeq

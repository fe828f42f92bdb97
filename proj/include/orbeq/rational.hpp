#ifndef ORBEQ_RATIONAL_HPP
#define ORBEQ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace orbeq {

// Exact rational coefficients. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every operation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Throws on malformed input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::runtime_error("malformed rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::runtime_error("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, "p" when integral.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace orbeq

#endif

#pragma once

#include <gmpxx.h>

#include <string>

namespace fanocone {

// Exact arithmetic used throughout: integers never overflow silently and
// rationals are always kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign_of(const Rat& q) { return sgn(q); }

/// Renders "p" for integers and "p/q" otherwise, e.g. "-1/2".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string int_str(const Int& n) { return n.get_str(); }

}  // namespace fanocone

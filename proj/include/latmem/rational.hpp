#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latmem/errors.hpp"

namespace latmem {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// mpq_class arithmetic keeps values canonical; only the (num, den) constructor
// does not, so every construction from a pair goes through here.
Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

inline Rat to_rat(const Int& z) { return Rat(z); }

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
// Nearest integer, ties toward +infinity.
Int round_rat(const Rat& q);
bool is_integer(const Rat& q);

// size(p/q) = max(|p|, q) for canonical p/q; size of an integer is max(|z|, 1).
Int size_of(const Rat& q);
Int size_of(const Int& z);
std::size_t bit_length(const Int& z);  // bits of |z|, 0 for z = 0

Int isqrt_floor(const Int& n);  // requires n >= 0
Int isqrt_ceil(const Int& n);
Int iroot_floor(const Int& n, unsigned long p);  // requires n >= 0
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

// lo <= sqrt(r) <= hi with hi - lo <= 1/2^extra_bits * (1/den-ish granularity);
// exact rational endpoints. Requires r >= 0.
struct SqrtBracket {
    Rat lo;
    Rat hi;
};
SqrtBracket sqrt_bracket(const Rat& r, unsigned long extra_bits);

// Exact floor(c + sign*sqrt(r)); sign is +1 or -1. Throws NegativeRadicand.
Int floor_add_sqrt(const Rat& c, const Rat& r, int sign);
// Exact ceil(c + sign*sqrt(r)).
Int ceil_add_sqrt(const Rat& c, const Rat& r, int sign);

// Exact predicate x <= sqrt(r), r >= 0.
bool leq_sqrt(const Rat& x, const Rat& r);
// Exact predicate sqrt(r) <= x.
bool sqrt_leq(const Rat& x, const Rat& r);

}  // namespace latmem

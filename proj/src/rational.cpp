#include "latmem/rational.hpp"

namespace latmem {

Rat make_rat(const Int& num, const Int& den) {
    check(den != 0, "make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int round_rat(const Rat& q) { return floor_rat(q + make_rat(1, 2)); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int size_of(const Rat& q) {
    Int n = abs(q.get_num());
    return n > q.get_den() ? n : Int(q.get_den());
}

Int size_of(const Int& z) {
    Int n = abs(z);
    return n > 1 ? n : Int(1);
}

std::size_t bit_length(const Int& z) {
    if (z == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

Int isqrt_floor(const Int& n) {
    check(n >= 0, "isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int isqrt_ceil(const Int& n) {
    Int r = isqrt_floor(n);
    if (r * r < n) r += 1;
    return r;
}

Int iroot_floor(const Int& n, unsigned long p) {
    check(n >= 0 && p >= 1, "iroot_floor: bad arguments");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), p);
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
    return make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

SqrtBracket sqrt_bracket(const Rat& r, unsigned long extra_bits) {
    if (r < 0) throw NegativeRadicand();
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^k to gain k fractional bits.
    Int p = r.get_num(), q = r.get_den();
    Int scale = pow_int(2, extra_bits);
    Int g = p * q * scale * scale;
    Int lo = isqrt_floor(g);
    Int den = q * scale;
    SqrtBracket b;
    b.lo = make_rat(lo, den);
    b.hi = (lo * lo == g) ? b.lo : make_rat(lo + 1, den);
    return b;
}

bool leq_sqrt(const Rat& x, const Rat& r) {
    if (r < 0) throw NegativeRadicand();
    if (x <= 0) return true;
    return x * x <= r;
}

bool sqrt_leq(const Rat& x, const Rat& r) {
    if (r < 0) throw NegativeRadicand();
    if (x < 0) return false;
    return r <= x * x;
}

Int floor_add_sqrt(const Rat& c, const Rat& r, int sign) {
    if (r < 0) throw NegativeRadicand();
    check(sign == 1 || sign == -1, "floor_add_sqrt: sign must be +-1");
    // Bracket the irrational part, then fix up with the exact predicate
    // k <= c + sign*sqrt(r)  <=>  (k - c) <= sign*sqrt(r).
    SqrtBracket b = sqrt_bracket(r, 4);
    Int k = (sign == 1) ? floor_rat(c + b.lo) : floor_rat(c - b.hi);
    auto ok = [&](const Int& v) {
        Rat x = Rat(v) - c;
        return sign == 1 ? leq_sqrt(x, r) : (x <= 0 && sqrt_leq(-x, r));
    };
    while (ok(k + 1)) k += 1;
    while (!ok(k)) k -= 1;
    return k;
}

Int ceil_add_sqrt(const Rat& c, const Rat& r, int sign) {
    return -floor_add_sqrt(-c, r, -sign);
}

}  // namespace latmem

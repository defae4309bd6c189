#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mcf {

// All exact scalar arithmetic runs on GMP rationals, kept canonical
// (reduced, positive denominator) at every step.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_int(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Canonical "p" or "p/q" form; parse lives in parse.hpp.
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

using RatVec = std::vector<Rat>;

}  // namespace mcf

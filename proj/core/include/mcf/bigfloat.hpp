#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mcf/rational.hpp"

namespace mcf {

// Thin RAII wrapper over MPFR, only the handful of operations the
// log-exponent guess and the floating test oracles need. Approximations
// computed with it never decide anything on their own.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 400) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const Rat& q, mpfr_prec_t prec = 400) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat log_abs(const BigFloat& x) {
        BigFloat r(mpfr_get_prec(x.v_));
        mpfr_abs(r.v_, x.v_, MPFR_RNDN);
        mpfr_log(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator+(const BigFloat& o) const { return bin(o, mpfr_add); }
    BigFloat operator-(const BigFloat& o) const { return bin(o, mpfr_sub); }
    BigFloat operator*(const BigFloat& o) const { return bin(o, mpfr_mul); }
    BigFloat operator/(const BigFloat& o) const { return bin(o, mpfr_div); }

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long round_to_long() const {
        return mpfr_get_si(v_, MPFR_RNDN);
    }
    BigFloat abs() const {
        BigFloat r(mpfr_get_prec(v_));
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    int sign() const { return mpfr_sgn(v_); }

  private:
    using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    BigFloat bin(const BigFloat& o, Fn fn) const {
        BigFloat r(mpfr_get_prec(v_));
        fn(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

}  // namespace mcf

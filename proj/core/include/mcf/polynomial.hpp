#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcf/rational.hpp"

namespace mcf {

// Univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient list (degree -1 by convention).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rat& a);
    // x^k
    static Polynomial monomial(const Rat& a, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const RatVec& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    // quotient and remainder; divisor must be nonzero
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const;
    Polynomial derivative() const;
    Rat eval(const Rat& x) const;
    // interval extension of Horner evaluation: value bounds over [lo, hi]
    std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const;
    // p(x) -> p(s*x) and p(x) -> p(x + t), used by root machinery
    Polynomial scale_arg(const Rat& s) const;

    Polynomial monic() const;
    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    RatVec c_;
};

Polynomial poly_gcd(Polynomial a, Polynomial b);
bool is_squarefree(const Polynomial& f);

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct ExtGcd {
    Polynomial g, u, v;
};
ExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b);

// Sturm sequence of a squarefree polynomial; count conventions follow the
// half-open (a, b] convention of Sturm's theorem.
class SturmSequence {
  public:
    explicit SturmSequence(const Polynomial& f);
    // number of real roots in (a, b]; requires f(a) != 0 and f(b) != 0
    int count_roots(const Rat& a, const Rat& b) const;
    int count_real_roots() const;

  private:
    int sign_changes_at(const Rat& x) const;
    int sign_changes_at_inf(int dir) const;
    std::vector<Polynomial> seq_;
};

// Open isolating interval (lo, hi) with f(lo) != 0, f(hi) != 0 and exactly
// one real root inside; roots returned in increasing order.
struct RootInterval {
    Rat lo, hi;
};
std::vector<RootInterval> isolate_real_roots(const Polynomial& f);

// Exact rational-root detection (any degree): first rational root if one exists.
std::optional<Rat> find_rational_root(const Polynomial& f);

// Kept-reduced modular arithmetic in Q[x]/(f). Inversion reports a zero
// divisor through the nontrivial gcd instead of throwing.
Polynomial poly_mod(const Polynomial& a, const Polynomial& f);
Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& f);
// returns nullopt when gcd(a, f) is nonconstant (f reducible or a == 0 mod f)
std::optional<Polynomial> poly_invmod(const Polynomial& a, const Polynomial& f);

}  // namespace mcf

#include "mcf/field_element.hpp"

#include <sstream>

#include "mcf/errors.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

FieldElement::FieldElement(FieldPtr field, RatVec coords) : field_(std::move(field)) {
    std::size_t n = static_cast<std::size_t>(field_->degree());
    if (coords.size() > n) {
        Polynomial reduced = poly_mod(Polynomial(std::move(coords)), field_->minpoly());
        coords = reduced.coeffs();
    }
    coords.resize(n, Rat(0));
    for (auto& c : coords) c.canonicalize();
    coords_ = std::move(coords);
}

FieldElement FieldElement::zero(const FieldPtr& field) { return FieldElement(field, RatVec{}); }

FieldElement FieldElement::one(const FieldPtr& field) { return rational(field, Rat(1)); }

FieldElement FieldElement::rational(const FieldPtr& field, const Rat& q) {
    return FieldElement(field, RatVec{q});
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    return FieldElement(field, RatVec{Rat(0), Rat(1)});
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat FieldElement::rational_value() const {
    if (!is_rational()) throw error(errc::invalid_argument, "element is not rational");
    return coords_.empty() ? Rat(0) : coords_[0];
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!field_ || !o.field_ || !field_->same_field(*o.field_))
        throw error(errc::field_mismatch, "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    RatVec c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    RatVec c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    RatVec c = coords_;
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    Polynomial p = poly_mulmod(as_polynomial(), o.as_polynomial(), field_->minpoly());
    return FieldElement(field_, p.coeffs());
}

FieldElement FieldElement::operator*(const Rat& s) const {
    RatVec c = coords_;
    for (auto& x : c) x *= s;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    auto inv = poly_invmod(as_polynomial(), field_->minpoly());
    if (!inv) {
        // a zero divisor certifies a reducible modulus on degree >= 4 input
        throw error(errc::reducible, "zero divisor found; minimal polynomial is reducible");
    }
    return FieldElement(field_, inv->coeffs());
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(o);
    if (o.is_zero()) throw error(errc::division_by_zero, "division by zero element");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long k) const {
    FieldElement base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    FieldElement r = one(field_);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_field(*o.field_) && coords_ == o.coords_;
}

int FieldElement::sign() const { return sign_at(field_->root()); }

int FieldElement::sign_at(const RealRoot& root) const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coords_[0]);
    Polynomial p = as_polynomial();
    RealRoot r = root;
    int rounds = 0;
    while (true) {
        auto [lo, hi] = p.eval_interval(r.lo, r.hi);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        r.refine();
        // If the modulus is reducible the element can be a hidden zero and
        // bisection would never decide; certify after a while.
        if (++rounds == 64) {
            if (!field_->irreducibility_verified() &&
                poly_gcd(p, field_->minpoly()).degree() > 0)
                throw error(errc::reducible,
                            "nonzero coordinates evaluate to zero; minimal polynomial is reducible");
            rounds = -(1 << 30);  // certified nonzero at the root, keep refining
        }
    }
}

Rat FieldElement::norm() const { return det(mult_matrix()); }

ExactMatrix FieldElement::mult_matrix() const {
    std::size_t n = coords_.size();
    ExactMatrix m(n);
    Polynomial p = as_polynomial();
    Polynomial cur = p;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) cur = poly_mulmod(cur, Polynomial::monomial(Rat(1), 1), field_->minpoly());
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cur.coeff(i);
    }
    return m;
}

Polynomial FieldElement::char_poly() const { return mcf::char_poly(mult_matrix()); }

Polynomial FieldElement::min_poly() const {
    // smallest monic dependency among 1, a, a^2, ...
    std::size_t n = coords_.size();
    std::vector<FieldElement> powers;
    powers.push_back(one(field_));
    for (std::size_t d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * (*this));
        // solve sum_{i<d} x_i a^i = -a^d if possible: consistency of an
        // overdetermined n x d system
        // build n x d matrix of coords of a^0..a^{d-1}
        std::vector<std::vector<Rat>> cols(d);
        for (std::size_t i = 0; i < d; ++i) cols[i] = powers[i].coords();
        const RatVec& rhs = powers[d].coords();
        // Gaussian elimination on the n x (d+1) augmented system
        std::vector<RatVec> a(n, RatVec(d + 1));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t ccol = 0; ccol < d; ++ccol) a[r][ccol] = cols[ccol][r];
            a[r][d] = -rhs[r];
        }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < d && rank < n; ++col) {
            std::size_t piv = rank;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) continue;
            std::swap(a[rank], a[piv]);
            Rat inv = Rat(1) / a[rank][col];
            for (auto& x : a[rank]) x *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == rank || a[r][col] == 0) continue;
                Rat f = a[r][col];
                for (std::size_t ccol2 = col; ccol2 <= d; ++ccol2) a[r][ccol2] -= f * a[rank][ccol2];
            }
            ++rank;
        }
        bool consistent = true;
        for (std::size_t r = rank; r < n; ++r)
            if (a[r][d] != 0) consistent = false;
        if (!consistent || rank < d) continue;
        // back-substitute: columns were eliminated in order, so row i of the
        // reduced system carries coefficient x_i
        RatVec coef(d + 1, Rat(0));
        coef[d] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t lead = 0;
            while (lead < d && a[r][lead] == 0) ++lead;
            if (lead < d) coef[lead] = a[r][d];
        }
        return Polynomial(std::move(coef));
    }
    // full degree n
    return field_->minpoly();
}

std::string FieldElement::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    return as_polynomial().to_string(var);
}

Int floor_ratio(const FieldElement& a, const FieldElement& b) {
    if (b.sign() <= 0) throw error(errc::nonpositive_denominator, "floor_ratio needs b > 0");
    if (a.sign() < 0) throw error(errc::invalid_argument, "floor_ratio needs a >= 0");
    FieldElement c = a / b;
    Int k;
    if (c.is_rational()) {
        k = floor_int(c.rational_value());
    } else {
        // bracket the value of c by refining the root interval until the
        // enclosure contains no integer
        Polynomial p = c.as_polynomial();
        RealRoot r = c.field()->root();
        int rounds = 0;
        while (true) {
            auto [lo, hi] = p.eval_interval(r.lo, r.hi);
            if (floor_int(lo) == floor_int(hi)) {
                k = floor_int(lo);
                break;
            }
            r.refine();
            // an irrational-coordinate element with an exactly integer value
            // is only possible over a reducible modulus
            if (++rounds == 64) {
                if (a.field()->irreducibility_verified()) {
                    rounds = -(1 << 30);  // value is irrational, must terminate
                } else {
                    Polynomial diff = (c - FieldElement::rational(c.field(), Rat(floor_int(hi))))
                                          .as_polynomial();
                    if (poly_gcd(diff, a.field()->minpoly()).degree() > 0)
                        throw error(errc::reducible,
                                    "ratio hits an integer with irrational coordinates");
                    rounds = 0;  // candidate may shift, keep re-checking
                }
            }
        }
    }
    // confirm exactly: k*b <= a < (k+1)*b
    FieldElement kb = b * Rat(k);
    if ((a - kb).sign() < 0 || (a - kb - b).sign() >= 0)
        throw error(errc::invalid_argument, "floor bracket confirmation failed");
    return k;
}

int embed_sign(const FieldElement& a, const Embedding& e) {
    if (e.root.poly != a.field()->minpoly())
        throw error(errc::invalid_argument, "embedding belongs to a different field");
    return a.sign_at(e.root);
}

}  // namespace mcf

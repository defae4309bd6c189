#include "mcf/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "mcf/errors.hpp"

namespace mcf {

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rat& a) {
    if (a == 0) return Polynomial();
    return Polynomial(RatVec{a});
}

Polynomial Polynomial::monomial(const Rat& a, std::size_t k) {
    if (a == 0) return Polynomial();
    RatVec c(k + 1, Rat(0));
    c[k] = a;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    RatVec c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    RatVec c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    RatVec c = c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    RatVec c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rat& s) const {
    RatVec c = c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& d) const {
    if (d.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    RatVec rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    RatVec quo(c_.size() - d.c_.size() + 1, Rat(0));
    Rat lead_inv = Rat(1) / d.leading();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rat q = rem[k] * lead_inv;
        quo[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.c_[j];
        rem[k] = 0;
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    RatVec c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(c));
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<Rat, Rat> Polynomial::eval_interval(const Rat& lo, const Rat& hi) const {
    Rat a(0), b(0);  // running [a, b] enclosure
    for (std::size_t i = c_.size(); i-- > 0;) {
        // [a,b] * [lo,hi]
        Rat p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
        Rat mn = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat mx = std::max(std::max(p1, p2), std::max(p3, p4));
        a = mn + c_[i];
        b = mx + c_[i];
    }
    return {a, b};
}

Polynomial Polynomial::scale_arg(const Rat& s) const {
    RatVec c = c_;
    Rat f(1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        f *= s;
        c[i] *= f;
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = rat_abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) os << mag.get_str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const Polynomial& f) {
    if (f.degree() <= 1) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

ExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::constant(Rat(1)), u1;
    Polynomial v0, v1 = Polynomial::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat s = Rat(1) / r0.leading();
    return {r0 * s, u0 * s, v0 * s};
}

namespace {

int rat_sign(const Rat& x) { return sgn(x); }

}  // namespace

SturmSequence::SturmSequence(const Polynomial& f) {
    seq_.push_back(f);
    if (f.degree() >= 1) {
        seq_.push_back(f.derivative());
        while (seq_.back().degree() >= 1) {
            Polynomial r = seq_[seq_.size() - 2].divrem(seq_.back()).second;
            if (r.is_zero()) break;
            seq_.push_back(-r);
        }
    }
}

int SturmSequence::sign_changes_at(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = rat_sign(p.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int SturmSequence::sign_changes_at_inf(int dir) const {
    int changes = 0, prev = 0;
    for (const auto& p : seq_) {
        if (p.is_zero()) continue;
        int s = rat_sign(p.leading());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmSequence::count_roots(const Rat& a, const Rat& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmSequence::count_real_roots() const {
    return sign_changes_at_inf(-1) - sign_changes_at_inf(+1);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& f) {
    if (f.degree() < 1) return {};
    if (!is_squarefree(f))
        throw error(errc::not_squarefree, "root isolation requires a squarefree polynomial");
    SturmSequence sturm(f);
    int total = sturm.count_real_roots();
    if (total == 0) return {};

    // Cauchy bound: every real root lies in (-B, B)
    Rat B(1);
    for (int i = 0; i < f.degree(); ++i) {
        Rat q = rat_abs(f.coeff(i) / f.leading());
        if (q > B) B = q;
    }
    B += 1;
    while (f.eval(-B) == 0 || f.eval(B) == 0) B += 1;

    std::vector<RootInterval> out;
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> stack{{-B, B, sturm.count_roots(-B, B)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        // never split at a root; shift the cut point if we hit one
        Rat step = (s.hi - s.lo) / 16;
        while (f.eval(mid) == 0) mid += step / 2;
        int left = sturm.count_roots(s.lo, mid);
        stack.push_back({mid, s.hi, s.count - left});
        stack.push_back({s.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

std::optional<Rat> find_rational_root(const Polynomial& f) {
    if (f.degree() < 1) return std::nullopt;
    if (f.coeff(0) == 0) return Rat(0);
    // Substitute x = z/c with c killing all coefficient denominators of the
    // monic form, so rational roots of f become integer roots of a monic
    // integer polynomial; each isolated root is then checked exactly.
    Polynomial m = f.monic();
    Int c(1);
    for (const auto& a : m.coeffs()) {
        Int l;
        mpz_lcm(l.get_mpz_t(), c.get_mpz_t(), a.get_den_mpz_t());
        c = l;
    }
    Polynomial g = m.scale_arg(Rat(1) / Rat(c));  // g(z) = m(z/c) up to leading scale
    g = g * rat_pow(Rat(c), static_cast<unsigned long>(m.degree()));
    Polynomial h = g;
    if (!is_squarefree(h)) {
        h = h.divrem(poly_gcd(h, h.derivative())).first;
    }
    for (auto iv : isolate_real_roots(h)) {
        // shrink to width <= 1 so at most two integers need testing
        while (iv.hi - iv.lo > 1) {
            Rat mid = (iv.lo + iv.hi) / 2;
            if (h.eval(mid) == 0) return Rat(mid) / Rat(c);
            if (rat_sign(h.eval(iv.lo)) * rat_sign(h.eval(mid)) < 0)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
        Int zlo = ceil_int(iv.lo), zhi = floor_int(iv.hi);
        for (Int z = zlo; z <= zhi; ++z) {
            if (g.eval(Rat(z)) == 0) return Rat(z) / Rat(c);
        }
    }
    return std::nullopt;
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& f) {
    return a.divrem(f).second;
}

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& f) {
    return (a * b).divrem(f).second;
}

std::optional<Polynomial> poly_invmod(const Polynomial& a, const Polynomial& f) {
    ExtGcd eg = poly_ext_gcd(poly_mod(a, f), f);
    if (eg.g.degree() != 0) return std::nullopt;
    return poly_mod(eg.u, f);
}

}  // namespace mcf

#include "mcf/matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mcf/errors.hpp"

namespace mcf {

ExactMatrix::ExactMatrix(std::size_t n, std::vector<Rat> entries) : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n)
        throw error(errc::dimension_mismatch, "entry count does not match dimension");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t n = rows.size();
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw error(errc::dimension_mismatch, "row length does not match dimension");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::transvection(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw error(errc::index_out_of_range, "transvection index outside 1..n");
    if (i == j) throw error(errc::equal_indices, "transvection needs i != j");
    ExactMatrix m = identity(n);
    m.at(i - 1, j - 1) = 1;
    return m;
}

ExactMatrix ExactMatrix::permutation(const std::vector<std::size_t>& perm) {
    ExactMatrix m(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m.at(i, perm[i]) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (n_ != o.n_) throw error(errc::dimension_mismatch, "matrix product dimensions differ");
    ExactMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (n_ != o.n_) throw error(errc::dimension_mismatch, "matrix sum dimensions differ");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (n_ != o.n_) throw error(errc::dimension_mismatch, "matrix difference dimensions differ");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const Rat& s) const {
    ExactMatrix r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

std::vector<Rat> ExactMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != n_) throw error(errc::dimension_mismatch, "vector length does not match");
    std::vector<Rat> r(n_, Rat(0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Rat> ExactMatrix::column(std::size_t j) const {
    std::vector<Rat> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Rat> ExactMatrix::row(std::size_t i) const {
    std::vector<Rat> r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = at(i, j);
    return r;
}

bool ExactMatrix::is_integer() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return mcf::is_integer(x); });
}

bool ExactMatrix::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x >= 0; });
}

bool ExactMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string ExactMatrix::to_text() const {
    std::vector<std::string> cells(e_.size());
    std::vector<std::size_t> width(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            cells[i * n_ + j] = at(i, j).get_str();
            width[j] = std::max(width[j], cells[i * n_ + j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i == 0 ? "[ " : "  ");
        for (std::size_t j = 0; j < n_; ++j) {
            const std::string& s = cells[i * n_ + j];
            os << std::string(width[j] - s.size(), ' ') << s;
            if (j + 1 < n_) os << "  ";
        }
        os << (i + 1 == n_ ? " ]" : "\n");
    }
    return os.str();
}

std::size_t ExactMatrix::hash() const {
    std::size_t h = n_;
    std::hash<std::string> hs;
    for (const auto& x : e_) h = h * 1000003 + hs(x.get_str());
    return h;
}

Rat det(const ExactMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return Rat(1);
    // scale each row to integers so Bareiss runs fraction-free
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < n; ++j) {
            Int d;
            mpz_lcm(d.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
            l = d;
        }
        scale /= Rat(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rat x = m.at(i, j) * Rat(l);
            a[i][j] = x.get_num();
        }
    }
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rat(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat d = Rat(a[n - 1][n - 1]) * scale;
    if (sign < 0) d = -d;
    d.canonicalize();
    return d;
}

namespace {

Rat cofactor_det(const ExactMatrix& m, std::size_t skip_row, std::size_t skip_col) {
    std::size_t n = m.dim();
    ExactMatrix minor(n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == skip_col) continue;
            minor.at(r, c) = m.at(i, j);
            ++c;
        }
        ++r;
    }
    return det(minor);
}

}  // namespace

ExactMatrix inverse(const ExactMatrix& m) {
    std::size_t n = m.dim();
    Rat d = det(m);
    if (d == 0) throw error(errc::singular_matrix, "matrix is singular");
    if (n == 1) {
        ExactMatrix r(1);
        r.at(0, 0) = Rat(1) / d;
        return r;
    }
    ExactMatrix adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat c = cofactor_det(m, i, j);
            if ((i + j) % 2 == 1) c = -c;
            adj.at(j, i) = c / d;
        }
    return adj;
}

ExactMatrix mat_pow(const ExactMatrix& m, long k) {
    ExactMatrix base = m;
    if (k < 0) {
        base = inverse(m);
        k = -k;
    }
    ExactMatrix r = ExactMatrix::identity(m.dim());
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool is_primitive(const ExactMatrix& m) {
    std::size_t n = m.dim();
    std::vector<bool> pos(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = m.at(i, j);
            if (x < 0) throw error(errc::negative_entry, "primitivity needs nonnegative entries");
            if (!mcf::is_integer(x))
                throw error(errc::non_integer_entry, "primitivity needs integer entries");
            pos[i * n + j] = x > 0;
        }
    // boolean powers up to the Wielandt bound n^2 - 2n + 2
    std::size_t bound = n * n - 2 * n + 2;
    std::vector<bool> acc = pos;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (std::all_of(acc.begin(), acc.end(), [](bool b) { return b; })) return true;
        std::vector<bool> next(n * n, false);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (acc[i * n + l])
                    for (std::size_t j = 0; j < n; ++j)
                        if (pos[l * n + j]) next[i * n + j] = true;
        acc.swap(next);
    }
    return false;
}

Polynomial char_poly(const ExactMatrix& m) {
    // Faddeev-LeVerrier recurrence, exact over Q
    std::size_t n = m.dim();
    RatVec c(n + 1, Rat(0));
    c[n] = 1;
    ExactMatrix acc = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            ExactMatrix shifted = acc;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            acc = m * shifted;
        }
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += acc.at(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

std::vector<Rat> solve(const ExactMatrix& m, const std::vector<Rat>& rhs) {
    std::size_t n = m.dim();
    if (rhs.size() != n) throw error(errc::dimension_mismatch, "rhs length does not match");
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw error(errc::singular_matrix, "linear system is singular");
        std::swap(a[k], a[piv]);
        Rat inv = Rat(1) / a[k][k];
        for (std::size_t j = k; j <= n; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

}  // namespace mcf

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcf/polynomial.hpp"
#include "mcf/rational.hpp"

namespace mcf {

// Dense square matrix of exact rationals. Design envelope n <= 8; the
// typical dimension is n in {2, 3}.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), e_(n * n, Rat(0)) {}
    ExactMatrix(std::size_t n, std::vector<Rat> entries);
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    // identity plus a single 1 at (i, j), 1-based, i != j; determinant 1
    static ExactMatrix transvection(std::size_t n, std::size_t i, std::size_t j);
    // row i of the result is row perm[i] of the identity (P x)_i = x_{perm[i]}
    static ExactMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t dim() const { return n_; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const std::vector<Rat>& entries() const { return e_; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const Rat& s) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    ExactMatrix transpose() const;
    std::vector<Rat> column(std::size_t j) const;
    std::vector<Rat> row(std::size_t i) const;

    bool is_integer() const;
    bool is_nonnegative() const;
    bool is_identity() const;

    std::string to_text() const;  // aligned plain text for reports

    std::size_t hash() const;

  private:
    std::size_t n_ = 0;
    std::vector<Rat> e_;
};

// exact determinant via fraction-free (Bareiss) elimination
Rat det(const ExactMatrix& m);
// exact inverse (adjugate over determinant); throws SingularMatrix
ExactMatrix inverse(const ExactMatrix& m);
// exact k-th power, k < 0 through the inverse
ExactMatrix mat_pow(const ExactMatrix& m, long k);
// true iff some power up to the Wielandt bound n^2 - 2n + 2 is positive;
// requires nonnegative integer entries
bool is_primitive(const ExactMatrix& m);
// monic characteristic polynomial det(x I - M)
Polynomial char_poly(const ExactMatrix& m);
// solve M x = rhs exactly; throws SingularMatrix
std::vector<Rat> solve(const ExactMatrix& m, const std::vector<Rat>& rhs);

}  // namespace mcf

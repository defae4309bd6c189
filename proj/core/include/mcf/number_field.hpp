#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcf/polynomial.hpp"

namespace mcf {

// One real root of a polynomial, identified by an isolating interval with
// rational endpoints where the polynomial does not vanish. Values are
// immutable; refine() narrows a local copy.
struct RealRoot {
    Polynomial poly;
    Rat lo, hi;
    // halves the interval once, keeping the root inside
    void refine();
    // narrows until hi - lo <= width
    void refine_below(const Rat& width);
    double approx() const;
};

// Root picked either by index into the increasing list of real roots or by
// an interval that must isolate exactly one of them.
using RootSelector = std::variant<int, RootInterval>;

struct Embedding {
    RealRoot root;
    int index = 0;        // position among real roots, increasing order
    bool chosen = false;  // the field's own embedding
};

// Real algebraic number field Q(y): monic minimal polynomial plus a chosen
// real root. Signature (r1, r2) counts real roots and complex-conjugate
// pairs. Irreducibility is certified by the rational-root test only up to
// degree 3; higher degrees record the caller's assertion.
class NumberField {
  public:
    static std::shared_ptr<const NumberField> make(const Polynomial& minpoly,
                                                   const RootSelector& selector);

    const Polynomial& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    int root_index() const { return root_index_; }
    const RealRoot& root() const { return root_; }
    bool irreducibility_verified() const { return irreducible_verified_; }

    std::vector<Embedding> real_embeddings() const;

    bool same_field(const NumberField& o) const {
        return this == &o || (minpoly_ == o.minpoly_ && root_index_ == o.root_index_);
    }

  private:
    NumberField() = default;
    Polynomial minpoly_;
    RealRoot root_;
    std::vector<RootInterval> all_real_roots_;
    int root_index_ = 0;
    int r1_ = 0, r2_ = 0;
    bool irreducible_verified_ = false;
};

using FieldPtr = std::shared_ptr<const NumberField>;

}  // namespace mcf

#pragma once

#include <random>
#include <vector>

#include "mcf/errors.hpp"
#include "mcf/field_element.hpp"
#include "mcf/matrix.hpp"
#include "mcf/number_field.hpp"
#include "mcf/parse.hpp"

namespace mcf::test {

// fixed seed everywhere: reruns are byte-for-byte reproducible
inline std::mt19937_64 make_rng(unsigned salt = 0) { return std::mt19937_64(0x5eed1234u + salt); }

inline Rat random_rat(std::mt19937_64& rng, long num_range = 20, long den_range = 6) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline FieldPtr field_from(const std::string& minpoly, int root_index = 0) {
    return NumberField::make(parse_polynomial(minpoly), RootSelector{root_index});
}

// random irreducible monic polynomial of the given degree with at least one
// real root, retried until valid
inline FieldPtr random_field(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    while (true) {
        RatVec c(static_cast<std::size_t>(degree) + 1);
        for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = Rat(coeff(rng));
        c[static_cast<std::size_t>(degree)] = 1;
        Polynomial p(c);
        try {
            return NumberField::make(p, RootSelector{0});
        } catch (const error&) {
            continue;  // reducible, not squarefree, or no real root
        }
    }
}

inline FieldElement random_element(std::mt19937_64& rng, const FieldPtr& field) {
    RatVec c(static_cast<std::size_t>(field->degree()));
    for (auto& x : c) x = random_rat(rng, 8, 4);
    return FieldElement(field, c);
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const FieldPtr& field) {
    while (true) {
        FieldElement e = random_element(rng, field);
        if (!e.is_zero()) return e;
    }
}

inline ExactMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, long range = 4) {
    std::uniform_int_distribution<long> entry(-range, range);
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(entry(rng));
    return m;
}

// random product of transvections: unimodular and integer by construction
inline ExactMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int factors = 6) {
    std::uniform_int_distribution<std::size_t> pick(1, n);
    ExactMatrix m = ExactMatrix::identity(n);
    for (int f = 0; f < factors; ++f) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        m = m * ExactMatrix::transvection(n, i, j);
    }
    return m;
}

}  // namespace mcf::test

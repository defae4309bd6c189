#include "mcf/multiplication.hpp"

#include <cassert>

#include "mcf/errors.hpp"

namespace mcf {

namespace {

std::vector<FieldElement> apply_to_elements(const ExactMatrix& m,
                                            const std::vector<FieldElement>& v) {
    std::size_t n = v.size();
    if (m.dim() != n) throw error(errc::dimension_mismatch, "matrix/vector dimensions differ");
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement acc = FieldElement::zero(v[0].field());
        for (std::size_t j = 0; j < n; ++j) acc = acc + v[j] * m.at(i, j);
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

FieldBasis::FieldBasis(FieldPtr field, std::vector<FieldElement> elements)
    : field_(std::move(field)), elements_(std::move(elements)) {
    std::size_t n = static_cast<std::size_t>(field_->degree());
    if (elements_.size() != n)
        throw error(errc::not_a_basis, "basis needs exactly n = degree elements");
    for (const auto& e : elements_)
        if (!e.field()->same_field(*field_))
            throw error(errc::field_mismatch, "basis element from another field");
    b_ = ExactMatrix(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b_.at(i, j) = elements_[j].coords()[i];
    if (det(b_) == 0) throw error(errc::not_a_basis, "elements are linearly dependent");
    binv_ = inverse(b_);
}

ExactMatrix t_matrix(const FieldBasis& basis, const FieldElement& lambda) {
    if (!lambda.field()->same_field(*basis.field()))
        throw error(errc::basis_mismatch, "element does not live in the basis field");
    ExactMatrix t_power = lambda.mult_matrix();
    ExactMatrix m = (basis.change_of_basis_inv() * t_power * basis.change_of_basis()).transpose();
    // M v = lambda v must hold exactly
    auto mv = apply_to_elements(m, basis.elements());
    for (std::size_t i = 0; i < basis.dim(); ++i)
        if (mv[i] != basis.elements()[i] * lambda)
            throw error(errc::basis_mismatch, "eigen identity failed, basis data inconsistent");
    return m;
}

FieldElement eigen_element(const ExactMatrix& m, const FieldBasis& basis) {
    std::size_t n = basis.dim();
    if (m.dim() != n) throw error(errc::basis_mismatch, "matrix dimension differs from basis");
    auto mv = apply_to_elements(m, basis.elements());
    const FieldElement& last = basis.elements()[n - 1];
    FieldElement lambda = mv[n - 1] / last;
    for (std::size_t i = 0; i < n; ++i)
        if (mv[i] != basis.elements()[i] * lambda)
            throw error(errc::not_a_multiplication_matrix,
                        "no eigenvalue fixes the basis vector");
    return lambda;
}

QTuple q_from_powers(const ExactMatrix& m, std::size_t pivot) {
    std::size_t n = m.dim();
    if (pivot < 1 || pivot > n) throw error(errc::index_out_of_range, "pivot outside 1..n");
    std::vector<ExactMatrix> powers;
    powers.reserve(n);
    ExactMatrix acc = m;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) acc = acc * m;
        powers.push_back(acc);
    }
    // K collects the pivot columns of M, M^2, ..., M^n
    ExactMatrix k_mat(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) k_mat.at(r, c) = powers[c].at(r, pivot - 1);
    if (det(k_mat) == 0)
        throw error(errc::degenerate_eigenvalue,
                    "pivot columns of the first n powers are dependent (degree < n)");
    ExactMatrix k_inv = inverse(k_mat);
    QTuple q;
    q.pivot = pivot;
    q.mats.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ExactMatrix v_i(n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) v_i.at(r, c) = powers[c].at(r, i);
        q.mats.push_back(v_i * k_inv);
    }
    return q;
}

QTuple q_closed_form_poly_basis(const NumberField& field) {
    return q_closed_form_poly_basis(field.minpoly());
}

QTuple q_closed_form_poly_basis(const Polynomial& minpoly) {
    int n = minpoly.degree();
    if (n < 2 || !minpoly.is_monic())
        throw error(errc::invalid_argument, "need a monic polynomial of degree >= 2");
    auto alpha = [&](int idx) { return minpoly.coeff(static_cast<std::size_t>(idx)); };
    QTuple q;
    q.pivot = 1;
    for (int i = 1; i <= n; ++i) {
        ExactMatrix mat(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Rat value(0);
                if (i <= j && k == j - i + 1) {
                    value = 1;
                } else if (2 <= i && i <= j && k >= j - i + 2 && k <= j) {
                    value = alpha(n - i + 1 + j - k);
                } else if (j < i && k >= j + 1 && k <= n + j - i + 1) {
                    value = -alpha(n - i + 1 + j - k);
                }
                mat.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = value;
            }
        q.mats.push_back(std::move(mat));
    }
    return q;
}

QTuple permute_qtuple(const QTuple& q, const ExactMatrix& p) {
    std::size_t n = q.mats.size();
    if (p.dim() != n) throw error(errc::dimension_mismatch, "permutation dimension differs");
    // pi(i) = the row of the 1 in column i
    std::vector<std::size_t> pi(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t r = 0; r < n; ++r)
            if (p.at(r, i) == 1) {
                pi[i] = r;
                found = true;
                break;
            }
        if (!found) throw error(errc::invalid_argument, "not a permutation matrix");
    }
    ExactMatrix pt = p.transpose();
    QTuple out;
    out.pivot = pi[q.pivot - 1] + 1;
    out.mats.assign(n, ExactMatrix(n));
    for (std::size_t i = 0; i < n; ++i) out.mats[pi[i]] = p * q.mats[i] * pt;
    return out;
}

ExactMatrix apply_q(const QTuple& q, const std::vector<Rat>& column) {
    std::size_t n = q.mats.size();
    if (column.size() != n) throw error(errc::dimension_mismatch, "column length differs");
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto col = q.mats[i].apply(column);
        for (std::size_t r = 0; r < n; ++r) m.at(r, i) = col[r];
    }
    return m;
}

namespace {

// closed entry forms of the pivot-1 cubic tuple
QTuple cubic_q1_from_entries(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& g0,
                             const Rat& g1, const Rat& g2) {
    Rat b1 = g2 * g0 + g1 * a2 * g2 - g1 * g1 - a1 * g2 * g2;
    Rat b2 = a2 * g2 - 2 * g1;
    Rat b3 = g2;
    Rat c1 = g0 * a2 * g2 - g0 * g1 - a0 * g2 * g2;
    Rat c2 = -g0;
    Rat c3 = a2 * g2 - g1;
    Rat c4 = g0 * a1 * g2 - g0 * g0 - a0 * g2 * g1;
    Rat c5 = -a0 * g2;
    Rat c6 = a1 * g2 - 2 * g0;
    QTuple q;
    q.pivot = 1;
    q.mats.push_back(ExactMatrix::identity(3));
    q.mats.push_back(ExactMatrix::from_rows({{Rat(0), b1, c1}, {Rat(1), b2, c2}, {Rat(0), b3, c3}}));
    q.mats.push_back(ExactMatrix::from_rows({{Rat(0), c1, c4}, {Rat(0), c2, c5}, {Rat(1), c3, c6}}));
    return q;
}

// multiplication-by-g matrix in the power basis of Q[t]/(f)
ExactMatrix quotient_mult_matrix(const Polynomial& g, const Polynomial& f) {
    std::size_t n = static_cast<std::size_t>(f.degree());
    ExactMatrix m(n);
    Polynomial cur = poly_mod(g, f);
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) cur = poly_mulmod(cur, Polynomial::monomial(Rat(1), 1), f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cur.coeff(i);
    }
    return m;
}

// coordinates of target in the basis (1, gen, gen^2) of Q[t]/(f)
std::array<Rat, 3> quotient_coords(const Polynomial& target, const Polynomial& gen,
                                   const Polynomial& f) {
    Polynomial gen2 = poly_mulmod(gen, gen, f);
    ExactMatrix w(3);
    Polynomial one = Polynomial::constant(Rat(1));
    const Polynomial* cols[3] = {&one, &gen, &gen2};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) w.at(i, j) = cols[j]->coeff(i);
    if (det(w) == 0)
        throw error(errc::singular_pivot, "renormalized generator does not span the field");
    RatVec rhs(3);
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = target.coeff(i);
    auto sol = solve(w, rhs);
    return {sol[0], sol[1], sol[2]};
}

}  // namespace

std::array<QTuple, 3> q_cubic(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& g0,
                              const Rat& g1, const Rat& g2) {
    if (g2 == 0) throw error(errc::degenerate_gamma, "gamma_2 = 0: x does not complete a basis");
    QTuple q1 = cubic_q1_from_entries(a0, a1, a2, g0, g1, g2);

    Polynomial f(RatVec{a0, a1, a2, Rat(1)});
    Polynomial y = Polynomial::monomial(Rat(1), 1);
    Polynomial x(RatVec{g0, g1, g2});

    // pivot 2 through the renormalized generator 1/x: v ~ (1, y/x, 1/x)
    auto x_inv = poly_invmod(x, f);
    if (!x_inv) throw error(errc::singular_pivot, "x is a zero divisor modulo the cubic");
    Polynomial y_t = *x_inv;                    // new generator
    Polynomial x_t = poly_mulmod(y, *x_inv, f);  // new x
    Polynomial chi_t = char_poly(quotient_mult_matrix(y_t, f));
    auto gt = quotient_coords(x_t, y_t, f);
    if (gt[2] == 0) throw error(errc::singular_pivot, "renormalized x is quadratic in 1/x");
    QTuple base2 = cubic_q1_from_entries(chi_t.coeff(0), chi_t.coeff(1), chi_t.coeff(2), gt[0],
                                         gt[1], gt[2]);
    ExactMatrix p2 = ExactMatrix::from_rows(
        {{Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
    QTuple q2 = permute_qtuple(base2, p2);

    // pivot 3 through the renormalized generator x/y: v ~ (x/y, 1, 1/y)
    auto y_inv = poly_invmod(y, f);
    if (!y_inv) throw error(errc::singular_pivot, "y is a zero divisor modulo the cubic");
    Polynomial y_h = poly_mulmod(x, *y_inv, f);
    Polynomial x_h = *y_inv;
    Polynomial chi_h = char_poly(quotient_mult_matrix(y_h, f));
    auto gh = quotient_coords(x_h, y_h, f);
    if (gh[2] == 0) throw error(errc::singular_pivot, "renormalized x is quadratic in x/y");
    QTuple base3 = cubic_q1_from_entries(chi_h.coeff(0), chi_h.coeff(1), chi_h.coeff(2), gh[0],
                                         gh[1], gh[2]);
    ExactMatrix p3 = ExactMatrix::from_rows(
        {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(0)}});
    QTuple q3 = permute_qtuple(base3, p3);

    return {std::move(q1), std::move(q2), std::move(q3)};
}

CubicEntries cubic_entries(const QTuple& q) {
    if (q.mats.size() != 3) throw error(errc::wrong_dimension, "cubic entry system needs n = 3");
    const auto& m = q.mats;
    CubicEntries e;
    switch (q.pivot) {
        case 1:
            // (Id, [0 b1 c1; 1 b2 c2; 0 b3 c3], [0 c1 c4; 0 c2 c5; 1 c3 c6])
            e.b1 = m[1].at(0, 1);
            e.b2 = m[1].at(1, 1);
            e.b3 = m[1].at(2, 1);
            e.c1 = m[1].at(0, 2);
            e.c2 = m[1].at(1, 2);
            e.c3 = m[1].at(2, 2);
            e.c4 = m[2].at(0, 2);
            e.c5 = m[2].at(1, 2);
            e.c6 = m[2].at(2, 2);
            break;
        case 2:
            // ([c6 1 c3; c4 0 c1; c5 0 c2], Id, [c3 0 b3; c1 0 b1; c2 1 b2])
            e.c6 = m[0].at(0, 0);
            e.c4 = m[0].at(1, 0);
            e.c5 = m[0].at(2, 0);
            e.c3 = m[2].at(0, 0);
            e.c1 = m[2].at(1, 0);
            e.c2 = m[2].at(2, 0);
            e.b3 = m[2].at(0, 2);
            e.b1 = m[2].at(1, 2);
            e.b2 = m[2].at(2, 2);
            break;
        case 3:
            // ([b2 c2 1; b3 c3 0; b1 c1 0], [c2 c5 0; c3 c6 1; c1 c4 0], Id)
            e.b2 = m[0].at(0, 0);
            e.b3 = m[0].at(1, 0);
            e.b1 = m[0].at(2, 0);
            e.c2 = m[0].at(0, 1);
            e.c3 = m[0].at(1, 1);
            e.c1 = m[0].at(2, 1);
            e.c5 = m[1].at(0, 1);
            e.c6 = m[1].at(1, 1);
            e.c4 = m[1].at(2, 1);
            break;
        default:
            throw error(errc::index_out_of_range, "pivot outside 1..3");
    }
    if (!q.mats[q.pivot - 1].is_identity())
        throw error(errc::invalid_argument, "tuple is not in cubic template shape");
    return e;
}

namespace {

bool entry_predicate(const QTuple& q) {
    CubicEntries e = cubic_entries(q);
    if (e.b3 == 0) throw error(errc::zero_b3, "pivot entry b3 vanishes");
    Rat v = e.b3 * (e.b3 + 2 * e.c3 - e.b2 - e.c5 + e.c6 - 2 * e.c2);
    return v > 0;
}

}  // namespace

CubicPredicates cubic_predicates(const QTuple& q1, const QTuple& q2, const QTuple& q3) {
    CubicPredicates p;
    p.y_lt_1 = entry_predicate(q1);
    p.x_gt_1 = entry_predicate(q2);
    p.x_lt_y = entry_predicate(q3);
    return p;
}

std::array<Rat, 3> cubic_norm_ratios(const QTuple& q1, const QTuple& q2, const QTuple& q3) {
    std::array<Rat, 3> out;
    const QTuple* qs[3] = {&q1, &q2, &q3};
    for (int i = 0; i < 3; ++i) {
        CubicEntries e = cubic_entries(*qs[i]);
        if (e.b3 == 0) throw error(errc::zero_b3, "pivot entry b3 vanishes");
        out[static_cast<std::size_t>(i)] = rat_abs(e.c5 / e.b3);
    }
    return out;
}

}  // namespace mcf

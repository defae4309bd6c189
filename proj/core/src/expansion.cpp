#include "mcf/expansion.hpp"

#include <sstream>
#include <unordered_map>

#include "mcf/errors.hpp"

namespace mcf {

std::string verdict_to_string(Verdict v) {
    switch (v) {
        case Verdict::terminated: return "TERMINATED";
        case Verdict::eventually_periodic: return "EVENTUALLY_PERIODIC";
        case Verdict::budget_exhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

namespace {

// exact key of a normalized state for recurrence lookup
std::string state_key(const State& v) {
    std::string key;
    for (const auto& e : v) {
        for (const auto& c : e.coords()) {
            key += c.get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

State normalize(const State& v) {
    const FieldElement& last = v.back();
    FieldElement inv = last.inverse();
    State z;
    z.reserve(v.size());
    for (const auto& e : v) z.push_back(e * inv);
    return z;
}

State apply_inverse(const ExactMatrix& a, const State& v) {
    // step matrices are unimodular, so the adjugate inverse stays integer
    ExactMatrix ainv = inverse(a);
    State out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        FieldElement acc = FieldElement::zero(v[0].field());
        for (std::size_t j = 0; j < v.size(); ++j) acc = acc + v[j] * ainv.at(i, j);
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

Expansion expand(const FieldPtr& field, const std::vector<FieldElement>& v, Algorithm algorithm,
                 std::size_t budget) {
    if (budget < 1) throw error(errc::invalid_argument, "budget must be >= 1");
    if (v.empty()) throw error(errc::nonpositive_input, "empty input vector");
    for (const auto& e : v) {
        if (!e.field()->same_field(*field))
            throw error(errc::field_mismatch, "vector component from another field");
        if (e.sign() <= 0)
            throw error(errc::nonpositive_input, "input vector must be strictly positive");
    }

    Expansion out;
    out.field = field;
    out.algorithm = algorithm;
    out.input = v;
    out.budget = budget;

    State state = normalize(v);
    std::unordered_map<std::string, std::size_t> seen;
    seen.emplace(state_key(state), 0);
    out.states.push_back(state);

    for (std::size_t i = 0; i < budget; ++i) {
        auto step = classify(algorithm, state);
        if (!step) {
            out.verdict = Verdict::terminated;
            return out;
        }
        State next = apply_inverse(step->matrix, state);
        out.steps.push_back(std::move(*step));
        bool positive = true;
        for (const auto& e : next)
            if (e.sign() <= 0) positive = false;
        if (!positive) {
            // rational dependence surfaced: the step is recorded, the
            // successor leaves the open cone
            out.verdict = Verdict::terminated;
            return out;
        }
        state = normalize(next);
        auto key = state_key(state);
        auto it = seen.find(key);
        if (it != seen.end()) {
            // states are checked at every step, so the first hit gives the
            // minimal preperiod and period
            out.verdict = Verdict::eventually_periodic;
            out.preperiod = it->second;
            out.period = out.steps.size() - it->second;
            return out;
        }
        seen.emplace(std::move(key), out.states.size());
        out.states.push_back(state);
    }
    out.verdict = Verdict::budget_exhausted;
    return out;
}

RepetendMatrices repetend_matrix(const Expansion& e) {
    if (e.verdict != Verdict::eventually_periodic)
        throw error(errc::not_periodic, "expansion verdict is " + verdict_to_string(e.verdict));
    std::size_t n = e.input.size();
    ExactMatrix r = ExactMatrix::identity(n);
    for (std::size_t i = 0; i < e.preperiod; ++i) r = r * e.steps[i].matrix;
    ExactMatrix rep = ExactMatrix::identity(n);
    for (std::size_t i = e.preperiod; i < e.preperiod + e.period; ++i)
        rep = rep * e.steps[i].matrix;
    ExactMatrix m = r * rep * inverse(r);
    return {std::move(r), std::move(rep), std::move(m)};
}

UnitCertificate recover_unit(const Expansion& e) {
    RepetendMatrices rm = repetend_matrix(e);
    FieldBasis basis(e.field, e.input);  // throws NotABasis when dependent
    UnitCertificate cert;
    cert.unit = eigen_element(rm.matrix, basis);
    cert.char_poly = cert.unit.char_poly();
    cert.min_poly = cert.unit.min_poly();
    cert.degree = cert.min_poly.degree();
    bool integral = true;
    for (const auto& c : cert.char_poly.coeffs())
        if (!is_integer(c)) integral = false;
    cert.norm_is_unit = integral && rat_abs(cert.char_poly.coeff(0)) == 1;
    return cert;
}

PureExclusionReport pure_exclusion(const FieldPtr& field, const std::vector<FieldElement>& v) {
    FieldBasis basis(field, v);  // basis requirement, throws NotABasis
    PureExclusionReport report;

    for (const auto& emb : field->real_embeddings()) {
        if (emb.chosen) continue;
        bool all_positive = true;
        for (const auto& comp : v)
            if (embed_sign(comp, emb) <= 0) {
                all_positive = false;
                break;
            }
        if (all_positive && !report.totally_positive_conjugate)
            report.totally_positive_conjugate = emb.index;
    }

    // norm test applies to the polynomial vector (y^{n-1}, ..., y, 1) only
    std::size_t n = v.size();
    bool poly_vec = true;
    for (std::size_t i = 0; i < n && poly_vec; ++i) {
        FieldElement expected = FieldElement::generator(field).pow(static_cast<long>(n - 1 - i));
        if (v[i] != expected) poly_vec = false;
    }
    report.is_polynomial_vector = poly_vec;
    report.generator_norm = FieldElement::generator(field).norm();
    if (poly_vec) {
        int want = (n % 2 == 0) ? -1 : 1;  // (-1)^{n-1}
        report.norm_sign_violation = sgn(report.generator_norm) != want;
    }
    return report;
}

}  // namespace mcf

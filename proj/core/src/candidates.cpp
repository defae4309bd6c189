#include "mcf/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "mcf/bigfloat.hpp"
#include "mcf/errors.hpp"

namespace mcf {

UnitSystem verify_units(const FieldPtr& field, const std::vector<FieldElement>& units) {
    UnitSystem out;
    out.field = field;
    out.rank = field->r1() + field->r2() - 1;
    for (const auto& u : units) {
        if (u.is_zero()) throw error(errc::not_a_unit, "zero is not a unit");
        if (!u.field()->same_field(*field))
            throw error(errc::field_mismatch, "unit from another field");
        Polynomial chi = u.char_poly();
        for (const auto& c : chi.coeffs())
            if (!is_integer(c))
                throw error(errc::not_a_unit,
                            u.to_string() + " is not an algebraic integer (char poly " +
                                chi.to_string() + ")");
        if (rat_abs(chi.coeff(0)) != 1)
            throw error(errc::not_a_unit, u.to_string() + " has norm of absolute value != 1");
        out.units.push_back(u);
    }
    if (static_cast<int>(units.size()) != out.rank)
        throw error(errc::wrong_unit_count,
                    "field has unit rank " + std::to_string(out.rank) + ", got " +
                        std::to_string(units.size()) + " units");
    out.verified = true;
    return out;
}

std::array<Rat, 3> first_column_from_unit(const Rat& g0, const Rat& g1, const Rat& g2,
                                          const Rat& a0, const Rat& a1, const Rat& a2,
                                          const Rat& b1, const Rat& b2, const Rat& b3) {
    (void)a0;
    if (g2 == 0) throw error(errc::degenerate_gamma, "gamma_2 = 0");
    Rat x1 = b1 + b2 * (g1 / g2 - a2) +
             b3 * (g1 * g1 / g2 - 2 * g1 * a2 + a2 * a2 * g2 + 2 * g0 - a1 * g2);
    Rat y1 = b2 / g2 + b3 * (g1 / g2 - a2);
    Rat z1 = b3;
    return {x1, y1, z1};
}

namespace {

std::vector<ExactMatrix> unit_t_matrices(const FieldBasis& basis, const UnitSystem& units) {
    if (!units.verified) throw error(errc::not_a_unit, "unit system not verified");
    std::vector<ExactMatrix> ts;
    ts.reserve(units.units.size());
    for (const auto& u : units.units) ts.push_back(t_matrix(basis, u));
    return ts;
}

// powers[i][bound + e] = T_i^e for e in [-bound, bound]
std::vector<std::vector<ExactMatrix>> power_tables(const std::vector<ExactMatrix>& ts,
                                                   long bound) {
    std::vector<std::vector<ExactMatrix>> tables;
    for (const auto& t : ts) {
        std::vector<ExactMatrix> row(static_cast<std::size_t>(2 * bound + 1),
                                     ExactMatrix::identity(t.dim()));
        ExactMatrix inv = inverse(t);
        for (long e = 1; e <= bound; ++e) {
            row[static_cast<std::size_t>(bound + e)] =
                row[static_cast<std::size_t>(bound + e - 1)] * t;
            row[static_cast<std::size_t>(bound - e)] =
                row[static_cast<std::size_t>(bound - e + 1)] * inv;
        }
        tables.push_back(std::move(row));
    }
    return tables;
}

// 0 = pass, otherwise the index of the rejecting filter
int filter_verdict(const ExactMatrix& m, const CandidateFilters& f) {
    if (f.integer_entries && !m.is_integer()) return 1;
    if (f.det_plus_one && det(m) != 1) return 2;
    if (f.primitive) {
        if (!m.is_integer() || !m.is_nonnegative()) return 3;
        if (!is_primitive(m)) return 3;
    }
    return 0;
}

// log|eps| under one real embedding, from a sharply refined isolating
// interval; precision ~400 bits
BigFloat embedding_log_abs(const FieldElement& eps, const RealRoot& root) {
    RealRoot r = root;
    r.refine_below(rat_pow(Rat(1, 2), 420));
    Rat mid = (r.lo + r.hi) / 2;
    Rat value = eps.as_polynomial().eval(mid);
    return BigFloat::log_abs(BigFloat(value));
}

}  // namespace

CandidateEnumeration enumerate_candidates(const FieldBasis& basis, const UnitSystem& units,
                                          long bound, const CandidateFilters& filters) {
    if (bound < 0) throw error(errc::invalid_argument, "bound must be >= 0");
    if (basis.field()->degree() % 2 == 0)
        throw error(errc::even_degree_unsupported,
                    "the +-1 candidate form is justified for odd degree only");
    auto ts = unit_t_matrices(basis, units);
    auto tables = power_tables(ts, bound);
    std::size_t r = ts.size();
    long side = 2 * bound + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(side);

    auto exponents_at = [&](std::size_t flat) {
        std::vector<long> m(r);
        for (std::size_t i = r; i-- > 0;) {
            m[i] = static_cast<long>(flat % static_cast<std::size_t>(side)) - bound;
            flat /= static_cast<std::size_t>(side);
        }
        return m;
    };

    struct Part {
        std::vector<Candidate> found;
        std::size_t rejected[4] = {0, 0, 0, 0};
    };
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        Part part;
        for (std::size_t flat = begin; flat < end; ++flat) {
            std::vector<long> m = exponents_at(flat);
            if (std::all_of(m.begin(), m.end(), [](long e) { return e == 0; })) continue;
            ExactMatrix prod = tables[0][static_cast<std::size_t>(bound + m[0])];
            for (std::size_t i = 1; i < r; ++i)
                prod = prod * tables[i][static_cast<std::size_t>(bound + m[i])];
            for (int sign : {+1, -1}) {
                ExactMatrix cand = sign == 1 ? prod : -prod;
                int verdict = filter_verdict(cand, filters);
                if (verdict == 0)
                    part.found.push_back({sign, m, std::move(cand)});
                else
                    ++part.rejected[verdict];
            }
        }
        return part;
    };

    CandidateEnumeration out;
    out.raw_exponent_count = total - 1;
    auto absorb = [&](Part&& part) {
        out.candidates.insert(out.candidates.end(),
                              std::make_move_iterator(part.found.begin()),
                              std::make_move_iterator(part.found.end()));
        out.rejected_non_integer += part.rejected[1];
        out.rejected_det += part.rejected[2];
        out.rejected_non_primitive += part.rejected[3];
    };
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (total < 64 || workers < 2) {
        absorb(eval_range(0, total));
        return out;
    }
    // grid points are independent; chunks merge back in index order
    std::vector<std::future<Part>> futures;
    std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t begin = 0; begin < total; begin += chunk)
        futures.push_back(std::async(std::launch::async, eval_range, begin,
                                     std::min(begin + chunk, total)));
    for (auto& f : futures) absorb(f.get());
    return out;
}

std::optional<Candidate> match_repetend(const ExactMatrix& m, const FieldBasis& basis,
                                        const UnitSystem& units, long bound) {
    if (!m.is_integer()) throw error(errc::non_integer_entry, "repetend matrices are integer");
    if (rat_abs(det(m)) != 1)
        throw error(errc::invalid_argument, "repetend matrices are unimodular");
    if (basis.field()->degree() % 2 == 0)
        throw error(errc::even_degree_unsupported,
                    "the +-1 candidate form is justified for odd degree only");
    if (m.is_identity()) return std::nullopt;

    auto ts = unit_t_matrices(basis, units);
    std::size_t r = ts.size();

    auto verify = [&](const std::vector<long>& expo) -> std::optional<Candidate> {
        ExactMatrix prod = ExactMatrix::identity(m.dim());
        for (std::size_t i = 0; i < r; ++i) prod = prod * mat_pow(ts[i], expo[i]);
        if (prod == m) return Candidate{+1, expo, prod};
        if (-prod == m) return Candidate{-1, expo, -prod};
        return std::nullopt;
    };

    // logarithmic guess: solve log|eps| = sum m_i log|eps_i| over enough
    // real embeddings, round, then verify exactly
    std::optional<FieldElement> eigen;
    try {
        eigen = eigen_element(m, basis);
    } catch (const error&) {
        eigen.reset();
    }
    if (eigen) {
        auto embeddings = basis.field()->real_embeddings();
        std::vector<std::vector<BigFloat>> unit_logs;  // [embedding][unit]
        std::vector<BigFloat> target_logs;
        for (const auto& emb : embeddings) {
            std::vector<BigFloat> row;
            for (const auto& u : units.units) row.push_back(embedding_log_abs(u, emb.root));
            unit_logs.push_back(std::move(row));
            target_logs.push_back(embedding_log_abs(*eigen, emb.root));
        }
        std::vector<double> guess(r, 0.0);
        bool solved = false;
        if (r == 1) {
            // use the embedding with the largest |log|eps_1||
            std::size_t best = 0;
            for (std::size_t i = 1; i < embeddings.size(); ++i)
                if (unit_logs[i][0].abs() > unit_logs[best][0].abs()) best = i;
            double denom = unit_logs[best][0].to_double();
            if (denom != 0.0) {
                guess[0] = target_logs[best].to_double() / denom;
                solved = true;
            }
        } else if (r == 2 && embeddings.size() >= 2) {
            // pick the embedding pair with the best-conditioned 2x2 system
            std::size_t bi = 0, bj = 1;
            double best_det = 0;
            for (std::size_t i = 0; i < embeddings.size(); ++i)
                for (std::size_t j = i + 1; j < embeddings.size(); ++j) {
                    double d = unit_logs[i][0].to_double() * unit_logs[j][1].to_double() -
                               unit_logs[i][1].to_double() * unit_logs[j][0].to_double();
                    if (std::abs(d) > std::abs(best_det)) {
                        best_det = d;
                        bi = i;
                        bj = j;
                    }
                }
            if (best_det != 0) {
                double a = unit_logs[bi][0].to_double(), b = unit_logs[bi][1].to_double();
                double c = unit_logs[bj][0].to_double(), d = unit_logs[bj][1].to_double();
                double e = target_logs[bi].to_double(), f = target_logs[bj].to_double();
                guess[0] = (e * d - b * f) / best_det;
                guess[1] = (a * f - e * c) / best_det;
                solved = true;
            }
        }
        if (solved) {
            std::vector<long> expo(r);
            for (std::size_t i = 0; i < r; ++i) expo[i] = std::lround(guess[i]);
            // tolerate one rounding slip per coordinate: probe {-1,0,1}^r
            std::size_t combos = 1;
            for (std::size_t i = 0; i < r; ++i) combos *= 3;
            for (std::size_t code = 0; code < combos; ++code) {
                std::vector<long> probe = expo;
                std::size_t rest = code;
                for (std::size_t i = 0; i < r; ++i) {
                    probe[i] += static_cast<long>(rest % 3) - 1;
                    rest /= 3;
                }
                if (auto hit = verify(probe)) return hit;
            }
        }
    }

    // exhaustive fallback within the bound
    long side = 2 * bound + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(side);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<long> expo(r);
        std::size_t rest = flat;
        for (std::size_t i = r; i-- > 0;) {
            expo[i] = static_cast<long>(rest % static_cast<std::size_t>(side)) - bound;
            rest /= static_cast<std::size_t>(side);
        }
        if (auto hit = verify(expo)) return hit;
    }
    return std::nullopt;
}

namespace {

StepLabel ajpa_label(long i, long j, long k) {
    return StepLabel{Algorithm::ajpa, {i, j, k}};
}

}  // namespace

FamilyPrediction ajpa_family(long s, long t, long f, long r) {
    if (s < 1 || t < 1)
        throw error(errc::constraint_violated, "s and t must be positive integers");
    if (!(t > s)) throw error(errc::constraint_violated, "t > s fails");
    if (!(4 * t > s * s)) throw error(errc::constraint_violated, "t > s^2/4 fails");
    if (f < 0 || r < 0) throw error(errc::constraint_violated, "f and r must be nonnegative");

    // y^3 + s y^2 + t y - 1, complex cubic by the discriminant argument
    Polynomial minpoly(RatVec{Rat(-1), Rat(t), Rat(s), Rat(1)});
    Rat disc = Rat(-18) * s * t + Rat(4) * s * s * s + Rat(s) * s * t * t - Rat(4) * t * t * t -
               Rat(27);
    if (!(disc < 0))
        throw error(errc::constraint_violated, "discriminant is not negative");
    FieldPtr field = NumberField::make(minpoly, RootSelector{0});
    if (field->r1() != 1)
        throw error(errc::constraint_violated, "field is not complex cubic");

    FieldElement y = FieldElement::generator(field);
    FieldElement one = FieldElement::one(field);
    FieldElement w = y * y + y * Rat(f);  // y^2 + f y
    if (!((one - w).sign() > 0))
        throw error(errc::constraint_violated, "y^2 + f*y < 1 fails");
    // y^2 + f y < y * sqrt(|N(y^2 + f y)|), squared since both sides positive
    Rat norm_w = rat_abs(w.norm());
    if (!((y * y * norm_w - w * w).sign() > 0))
        throw error(errc::constraint_violated,
                    "y^2 + f*y < y*sqrt(|N(y^2 + f*y)|) fails");

    FamilyPrediction out;
    out.field = field;
    out.vector = {w + FieldElement::rational(field, Rat(r)), y, one};
    if (r > 0) out.preperiod_labels.push_back(ajpa_label(3, r, 0));
    out.preperiod_labels.push_back(ajpa_label(2, f, t));
    out.repetend_labels = {ajpa_label(1, t, s), ajpa_label(3, t, s), ajpa_label(2, s, t)};
    return out;
}

FamilyPrediction tamura_vector(long m) {
    if (m < 1) throw error(errc::invalid_m, "m must be a positive integer");
    if (m >= 2) return ajpa_family(3 * m, 3 * m * m, 2 * m, m * m);

    // m = 1 sits outside the family constraints (t = s = 3); the expansion
    // is purely periodic with period 6
    Polynomial minpoly(RatVec{Rat(-1), Rat(3), Rat(3), Rat(1)});
    FieldPtr field = NumberField::make(minpoly, RootSelector{0});
    FieldElement y = FieldElement::generator(field);
    FamilyPrediction out;
    out.field = field;
    out.vector = {y * y + y * Rat(2), y, FieldElement::one(field)};
    out.repetend_labels = {ajpa_label(1, 0, 1), ajpa_label(2, 2, 1), ajpa_label(3, 0, 1),
                           ajpa_label(1, 1, 2), ajpa_label(2, 1, 0), ajpa_label(3, 1, 2)};
    return out;
}

std::vector<FieldElement> search_units_box(const FieldPtr& field, long bound) {
    std::size_t n = static_cast<std::size_t>(field->degree());
    std::vector<FieldElement> found;
    std::vector<long> c(n, -bound);
    while (true) {
        RatVec coords(n);
        for (std::size_t i = 0; i < n; ++i) coords[i] = Rat(c[i]);
        FieldElement e(field, coords);
        if (!e.is_zero() && !(e.is_rational() && rat_abs(e.rational_value()) == 1)) {
            if (rat_abs(e.norm()) == 1) {
                Polynomial chi = e.char_poly();
                bool integral = true;
                for (const auto& q : chi.coeffs())
                    if (!is_integer(q)) integral = false;
                if (integral) found.push_back(std::move(e));
            }
        }
        std::size_t i = 0;
        while (i < n && ++c[i] > bound) {
            c[i] = -bound;
            ++i;
        }
        if (i == n) break;
    }
    return found;
}

}  // namespace mcf

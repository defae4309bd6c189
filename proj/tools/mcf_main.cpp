// Command line frontend: exact MCF expansions, repetend-matrix candidates,
// Q-tuple machinery, and the parametric AJPA families.

#include <CLI11.hpp>
#include <future>
#include <iostream>
#include <nlohmann/json.hpp>

#include "mcf/candidates.hpp"
#include "mcf/errors.hpp"
#include "mcf/expansion.hpp"
#include "mcf/json_io.hpp"
#include "mcf/parse.hpp"

namespace {

using namespace mcf;

struct FieldSpec {
    std::string minpoly;
    int root_index = 0;
    std::string root_interval;  // "lo,hi" overrides the index when set
};

FieldPtr build_field(const FieldSpec& spec) {
    Polynomial p = parse_polynomial(spec.minpoly);
    if (!spec.root_interval.empty()) {
        auto comma = spec.root_interval.find(',');
        if (comma == std::string::npos)
            throw error(errc::invalid_argument, "--root-interval expects \"lo,hi\"");
        RootInterval iv{parse_rational(spec.root_interval.substr(0, comma)),
                        parse_rational(spec.root_interval.substr(comma + 1))};
        return NumberField::make(p, RootSelector{iv});
    }
    return NumberField::make(p, RootSelector{spec.root_index});
}

void add_field_options(CLI::App* cmd, FieldSpec& spec) {
    cmd->add_option("--field", spec.minpoly, "monic minimal polynomial in x, e.g. \"x^3 - 2\"")
        ->required();
    cmd->add_option("--root-index", spec.root_index,
                    "which real root, 0-based in increasing order (default 0)");
    cmd->add_option("--root-interval", spec.root_interval,
                    "rational interval \"lo,hi\" isolating the chosen root");
}

void emit(const Json& report, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << dump_deterministic(report);
    else
        std::cout << text << "\n";
}

// prediction vs. driver result, compared as infinite label sequences
bool verify_family(const FamilyPrediction& p, std::size_t expected_period, Expansion* out) {
    Expansion e = expand(p.field, p.vector, Algorithm::ajpa, 500);
    bool ok = e.verdict == Verdict::eventually_periodic && e.period == expected_period;
    if (ok) {
        auto predicted_at = [&](std::size_t i) -> const StepLabel& {
            if (i < p.preperiod_labels.size()) return p.preperiod_labels[i];
            return p.repetend_labels[(i - p.preperiod_labels.size()) % p.repetend_labels.size()];
        };
        auto computed_at = [&](std::size_t i) -> const StepLabel& {
            if (i < e.preperiod) return e.steps[i].label;
            return e.steps[e.preperiod + (i - e.preperiod) % e.period].label;
        };
        std::size_t horizon = p.preperiod_labels.size() + 3 * p.repetend_labels.size();
        for (std::size_t i = 0; i < horizon && ok; ++i) ok = predicted_at(i) == computed_at(i);
    }
    if (out) *out = std::move(e);
    return ok;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact multidimensional continued fraction expansions"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command line flags win");

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- expand ----
    auto* cmd_expand = app.add_subcommand("expand", "run one MCF expansion");
    FieldSpec exp_field;
    std::string exp_vector, exp_algorithm;
    std::size_t exp_budget = kDefaultBudget;
    add_field_options(cmd_expand, exp_field);
    cmd_expand->add_option("--vector", exp_vector, "comma-separated components, e.g. \"1, y, y^2\"")
        ->required();
    cmd_expand
        ->add_option("--algorithm", exp_algorithm,
                     "one of rcf-add, rcf-mult, jpa, brun, selmer, ajpa")
        ->required();
    cmd_expand->add_option("--budget", exp_budget, "maximum number of steps");

    // ---- candidates ----
    auto* cmd_cand = app.add_subcommand("candidates",
                                        "enumerate repetend-matrix candidates, optionally match");
    FieldSpec cand_field;
    std::string cand_vector, cand_units, cand_match_matrix, cand_match_run;
    long cand_bound = 10;
    bool cand_primitive = false, cand_keep_noninteger = false, cand_keep_negdet = false;
    add_field_options(cmd_cand, cand_field);
    cmd_cand->add_option("--vector", cand_vector, "basis vector components")->required();
    cmd_cand->add_option("--units", cand_units, "fundamental units, ';'-separated expressions in y")
        ->required();
    cmd_cand->add_option("--bound", cand_bound, "exponent bound B (default 10)");
    cmd_cand->add_flag("--filter-primitive", cand_primitive, "keep primitive candidates only");
    cmd_cand->add_flag("--keep-noninteger", cand_keep_noninteger,
                       "do not filter non-integer candidates");
    cmd_cand->add_flag("--keep-det-minus-one", cand_keep_negdet,
                       "do not filter determinant -1 candidates");
    cmd_cand->add_option("--match-matrix", cand_match_matrix,
                         "match this matrix, e.g. \"[[2,3,1],[1,3,1],[1,2,1]]\"");
    cmd_cand->add_option("--match-run", cand_match_run,
                         "expand with this algorithm and match the repetend matrix");

    // ---- check-pure ----
    auto* cmd_pure = app.add_subcommand("check-pure",
                                        "necessary conditions against pure periodicity");
    FieldSpec pure_field;
    std::string pure_vector;
    add_field_options(cmd_pure, pure_field);
    cmd_pure->add_option("--vector", pure_vector, "basis vector components")->required();

    // ---- qmap ----
    auto* cmd_qmap = app.add_subcommand("qmap", "column-reconstruction tuples Q");
    FieldSpec qmap_field;
    std::string qmap_x;
    add_field_options(cmd_qmap, qmap_field);
    cmd_qmap->add_option("--x", qmap_x,
                         "first basis component as an expression in y (basis (x, y, 1)); "
                         "cubic fields only. Without it, the polynomial-basis closed form.");

    // ---- tmatrix ----
    auto* cmd_tm = app.add_subcommand("tmatrix", "transposed multiplication matrix");
    FieldSpec tm_field;
    std::string tm_basis, tm_lambda;
    add_field_options(cmd_tm, tm_field);
    cmd_tm->add_option("--basis", tm_basis, "basis components, e.g. \"y^2, y, 1\"")->required();
    cmd_tm->add_option("--lambda", tm_lambda, "element whose multiplication matrix is wanted")
        ->required();

    // ---- family ----
    auto* cmd_family = app.add_subcommand("family", "parametric AJPA families");
    cmd_family->require_subcommand(1);
    auto* fam_ajpa = cmd_family->add_subcommand("ajpa", "family x^3 + s x^2 + t x - 1");
    long fam_s = 1, fam_t = 2, fam_f = 0, fam_r = 0, fam_scan_max = 0;
    bool fam_verify = false;
    fam_ajpa->add_option("--s", fam_s, "coefficient s");
    fam_ajpa->add_option("--t", fam_t, "coefficient t");
    fam_ajpa->add_option("--f", fam_f, "vector parameter f");
    fam_ajpa->add_option("--r", fam_r, "vector parameter r");
    fam_ajpa->add_flag("--verify", fam_verify, "run the expansion and compare");
    fam_ajpa->add_option("--scan", fam_scan_max,
                         "verify the whole grid s < t <= N, f = 0, r in {0,1,2} in parallel");
    auto* fam_tamura = cmd_family->add_subcommand("tamura", "cube-root family");
    long tam_m = 1;
    bool tam_verify = false;
    fam_tamura->add_option("--m", tam_m, "parameter m >= 1")->required();
    fam_tamura->add_flag("--verify", tam_verify, "run the expansion and compare");

    // let --format and --config appear after the subcommand too
    for (auto* sub : {cmd_expand, cmd_cand, cmd_pure, cmd_qmap, cmd_tm, cmd_family, fam_ajpa,
                      fam_tamura})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags and configs are validation errors
    }

    if (*cmd_expand) {
        FieldPtr field = build_field(exp_field);
        auto v = parse_vector(field, exp_vector);
        Expansion e = expand(field, v, algorithm_from_string(exp_algorithm), exp_budget);
        emit(expansion_report(e), format, expansion_text(e));
        return 0;
    }

    if (*cmd_cand) {
        FieldPtr field = build_field(cand_field);
        FieldBasis basis(field, parse_vector(field, cand_vector));
        UnitSystem units = verify_units(field, parse_vector(field, cand_units));
        CandidateFilters filters;
        filters.primitive = cand_primitive;
        filters.integer_entries = !cand_keep_noninteger;
        filters.det_plus_one = !cand_keep_negdet;
        CandidateEnumeration en = enumerate_candidates(basis, units, cand_bound, filters);
        Json report = candidates_report(en, units);
        std::string text = "candidates: " + std::to_string(en.candidates.size()) + " of " +
                           std::to_string(2 * en.raw_exponent_count) + " signed grid points";
        if (!cand_match_matrix.empty() || !cand_match_run.empty()) {
            ExactMatrix target(0);
            if (!cand_match_matrix.empty()) {
                target = parse_matrix(cand_match_matrix);
            } else {
                Expansion e = expand(field, basis.elements(),
                                     algorithm_from_string(cand_match_run), kDefaultBudget);
                target = repetend_matrix(e).matrix;
            }
            auto hit = match_repetend(target, basis, units, cand_bound);
            report["match"] = match_report(hit);
            if (hit) {
                text += "\nmatch: sign " + std::to_string(hit->sign) + ", exponents (";
                for (std::size_t i = 0; i < hit->exponents.size(); ++i)
                    text += (i ? ", " : "") + std::to_string(hit->exponents[i]);
                text += ")";
            } else {
                text += "\nmatch: no match within bound";
            }
        }
        emit(report, format, text);
        return 0;
    }

    if (*cmd_pure) {
        FieldPtr field = build_field(pure_field);
        auto v = parse_vector(field, pure_vector);
        PureExclusionReport rep = pure_exclusion(field, v);
        std::string text =
            rep.excluded() ? "pure periodicity EXCLUDED" : "no exclusion detected";
        if (rep.totally_positive_conjugate)
            text += "\n  totally positive conjugate vector at embedding index " +
                    std::to_string(*rep.totally_positive_conjugate);
        if (rep.is_polynomial_vector)
            text += std::string("\n  polynomial vector, N(y) = ") + rep.generator_norm.get_str() +
                    (rep.norm_sign_violation ? " violates" : " satisfies") +
                    " the sign condition";
        emit(pure_exclusion_report(rep, *field), format, text);
        return 0;
    }

    if (*cmd_qmap) {
        FieldPtr field = build_field(qmap_field);
        Json report;
        std::string text;
        if (qmap_x.empty()) {
            QTuple q = q_closed_form_poly_basis(*field);
            report["closed_form_poly_basis"] = qtuple_to_json(q);
            text = "polynomial-basis tuple, pivot 1:";
            for (const auto& m : q.mats) text += "\n" + m.to_text();
        } else {
            if (field->degree() != 3)
                throw error(errc::wrong_dimension, "--x needs a cubic field");
            FieldElement x = parse_element(field, qmap_x);
            const RatVec& g = x.coords();
            const Polynomial& mp = field->minpoly();
            auto qs = q_cubic(mp.coeff(0), mp.coeff(1), mp.coeff(2), g[0], g[1], g[2]);
            report["q1"] = qtuple_to_json(qs[0]);
            report["q2"] = qtuple_to_json(qs[1]);
            report["q3"] = qtuple_to_json(qs[2]);
            auto ratios = cubic_norm_ratios(qs[0], qs[1], qs[2]);
            report["norm_ratios"] = Json::array(
                {ratios[0].get_str(), ratios[1].get_str(), ratios[2].get_str()});
            text = "|N(y)/N(1)| = " + ratios[0].get_str() + ", |N(1)/N(x)| = " +
                   ratios[1].get_str() + ", |N(x)/N(y)| = " + ratios[2].get_str();
            if (field->r2() == 1) {
                auto pred = cubic_predicates(qs[0], qs[1], qs[2]);
                Json pj;
                pj["y_lt_1"] = pred.y_lt_1;
                pj["x_gt_1"] = pred.x_gt_1;
                pj["x_lt_y"] = pred.x_lt_y;
                report["predicates"] = std::move(pj);
                text += std::string("\npredicates: y<1 ") + (pred.y_lt_1 ? "yes" : "no") +
                        ", x>1 " + (pred.x_gt_1 ? "yes" : "no") + ", x<y " +
                        (pred.x_lt_y ? "yes" : "no");
            } else {
                report["predicates"] = nullptr;
                text += "\npredicates skipped: field is not complex cubic (r2 != 1)";
            }
        }
        emit(report, format, text);
        return 0;
    }

    if (*cmd_tm) {
        FieldPtr field = build_field(tm_field);
        FieldBasis basis(field, parse_vector(field, tm_basis));
        FieldElement lambda = parse_element(field, tm_lambda);
        ExactMatrix m = t_matrix(basis, lambda);
        FieldElement back = eigen_element(m, basis);
        Json report;
        report["matrix"] = matrix_to_json(m);
        report["eigen_element"] = element_to_json(back);
        report["verified"] = (back == lambda);
        emit(report, format,
             m.to_text() + "\neigen element: " + back.to_string() +
                 (back == lambda ? " (verified)" : " (MISMATCH)"));
        return 0;
    }

    if (*cmd_family) {
        if (*fam_ajpa && fam_scan_max > 0) {
            // fan out the grid; results merge in deterministic (s,t,f,r) order
            struct Cell {
                long s, t, f, r;
                std::future<std::pair<bool, std::string>> result;
            };
            std::vector<Cell> cells;
            for (long s = 1; s <= fam_scan_max; ++s)
                for (long t = s + 1; t <= fam_scan_max; ++t) {
                    if (4 * t <= s * s) continue;
                    for (long r : {0L, 1L, 2L}) {
                        auto task = [s, t, r]() {
                            FamilyPrediction p = ajpa_family(s, t, 0, r);
                            Expansion e;
                            bool ok = verify_family(p, 3, &e);
                            return std::make_pair(ok, verdict_to_string(e.verdict));
                        };
                        cells.push_back({s, t, 0, r, std::async(std::launch::async, task)});
                    }
                }
            bool all_ok = true;
            Json rows = Json::array();
            std::string text;
            for (auto& c : cells) {
                auto [ok, verdict] = c.result.get();
                all_ok = all_ok && ok;
                Json row;
                row["s"] = c.s;
                row["t"] = c.t;
                row["f"] = c.f;
                row["r"] = c.r;
                row["pass"] = ok;
                rows.push_back(std::move(row));
                text += "(s=" + std::to_string(c.s) + ", t=" + std::to_string(c.t) +
                        ", f=0, r=" + std::to_string(c.r) + ") " + (ok ? "PASS" : "FAIL") + "\n";
            }
            Json report;
            report["scan"] = std::move(rows);
            report["all_pass"] = all_ok;
            emit(report, format, text + (all_ok ? "scan: PASS" : "scan: FAIL"));
            return all_ok ? 0 : 1;
        }

        FamilyPrediction p = *fam_ajpa ? ajpa_family(fam_s, fam_t, fam_f, fam_r)
                                       : tamura_vector(tam_m);
        bool want_verify = *fam_ajpa ? fam_verify : tam_verify;
        std::size_t expected_period = p.repetend_labels.size();
        Json report = family_report(p);
        std::string text = "field " + p.field->minpoly().to_string() + "\nvector (";
        for (std::size_t i = 0; i < p.vector.size(); ++i)
            text += (i ? ", " : "") + p.vector[i].to_string();
        text += ")\npredicted: ";
        for (const auto& l : p.preperiod_labels) text += l.to_string() + " ";
        text += "overline( ";
        for (const auto& l : p.repetend_labels) text += l.to_string() + " ";
        text += ")";
        if (want_verify) {
            Expansion e;
            bool ok = verify_family(p, expected_period, &e);
            report["verification"] = Json::object();
            report["verification"]["pass"] = ok;
            report["verification"]["expansion"] = expansion_report(e);
            text += std::string("\nverification: ") + (ok ? "PASS" : "FAIL") +
                    " (period " + std::to_string(e.period) + ")";
            emit(report, format, text);
            return ok ? 0 : 1;
        }
        emit(report, format, text);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const mcf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

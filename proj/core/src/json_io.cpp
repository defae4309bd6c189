#include "mcf/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "mcf/errors.hpp"
#include "mcf/parse.hpp"

namespace mcf {

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) {
        std::vector<Rat> r;
        for (const auto& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
        rows.push_back(std::move(r));
    }
    return ExactMatrix::from_rows(rows);
}

Json field_to_json(const NumberField& f) {
    Json j;
    j["minpoly"] = f.minpoly().to_string("x");
    j["root_interval"] = Json::array({f.root().lo.get_str(), f.root().hi.get_str()});
    j["root_index"] = f.root_index();
    j["signature"] = Json::array({f.r1(), f.r2()});
    j["irreducibility_verified"] = f.irreducibility_verified();
    return j;
}

Json element_to_json(const FieldElement& e) {
    Json j;
    j["expr"] = e.to_string("y");
    Json coords = Json::array();
    for (const auto& c : e.coords()) coords.push_back(c.get_str());
    j["coords"] = std::move(coords);
    return j;
}

Json label_to_json(const StepLabel& l) {
    Json j;
    j["algorithm"] = algorithm_to_string(l.algorithm);
    j["indices"] = l.indices;
    j["text"] = l.to_string();
    return j;
}

Json qtuple_to_json(const QTuple& q) {
    Json j;
    j["pivot"] = q.pivot;
    Json mats = Json::array();
    for (const auto& m : q.mats) mats.push_back(matrix_to_json(m));
    j["matrices"] = std::move(mats);
    return j;
}

Json expansion_report(const Expansion& e) {
    Json j;
    j["algorithm"] = algorithm_to_string(e.algorithm);
    j["field"] = field_to_json(*e.field);
    Json vec = Json::array();
    for (const auto& comp : e.input) vec.push_back(element_to_json(comp));
    j["vector"] = std::move(vec);
    j["verdict"] = verdict_to_string(e.verdict);
    j["budget"] = e.budget;
    j["step_count"] = e.steps.size();
    if (e.verdict == Verdict::eventually_periodic) {
        j["preperiod"] = e.preperiod;
        j["period"] = e.period;
    } else {
        j["preperiod"] = nullptr;
        j["period"] = nullptr;
    }
    Json steps = Json::array();
    // periodic runs record preperiod + repetend steps; others all of them
    std::size_t upto = e.verdict == Verdict::eventually_periodic ? e.preperiod + e.period
                                                                 : e.steps.size();
    for (std::size_t i = 0; i < upto; ++i) {
        Json s;
        s["label"] = label_to_json(e.steps[i].label);
        s["matrix"] = matrix_to_json(e.steps[i].matrix);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);

    if (e.verdict == Verdict::eventually_periodic) {
        RepetendMatrices rm = repetend_matrix(e);
        j["repetend_matrix"] = matrix_to_json(rm.matrix);
        Json checks;
        checks["repetend_det"] = det(rm.matrix).get_str();
        bool nonneg_int = rm.matrix.is_integer() && rm.matrix.is_nonnegative();
        checks["repetend_primitive"] =
            nonneg_int ? Json(is_primitive(rm.matrix)) : Json(nullptr);
        try {
            UnitCertificate cert = recover_unit(e);
            j["unit"] = unit_certificate_to_json(cert);
            checks["unit_norm_pm1"] = cert.norm_is_unit;
        } catch (const error& err) {
            j["unit"] = nullptr;
            checks["unit_norm_pm1"] = nullptr;
            checks["unit_error"] = err.what();
        }
        j["checks"] = std::move(checks);
    } else {
        j["repetend_matrix"] = nullptr;
        j["unit"] = nullptr;
        j["checks"] = Json::object();
    }
    return j;
}

Json unit_certificate_to_json(const UnitCertificate& c) {
    Json j;
    j["element"] = element_to_json(c.unit);
    j["charpoly"] = c.char_poly.to_string("x");
    j["minpoly"] = c.min_poly.to_string("x");
    j["degree"] = c.degree;
    j["norm_pm1"] = c.norm_is_unit;
    return j;
}

Json candidates_report(const CandidateEnumeration& en, const UnitSystem& units) {
    Json j;
    j["rank"] = units.rank;
    Json us = Json::array();
    for (const auto& u : units.units) us.push_back(element_to_json(u));
    j["units"] = std::move(us);
    j["raw_exponent_count"] = en.raw_exponent_count;
    Json rejected;
    rejected["non_integer"] = en.rejected_non_integer;
    rejected["det_not_plus_one"] = en.rejected_det;
    rejected["non_primitive"] = en.rejected_non_primitive;
    j["rejected"] = std::move(rejected);
    Json cands = Json::array();
    for (const auto& c : en.candidates) {
        Json cj;
        cj["sign"] = c.sign;
        cj["exponents"] = c.exponents;
        cj["matrix"] = matrix_to_json(c.matrix);
        cj["det"] = det(c.matrix).get_str();
        cj["integer"] = c.matrix.is_integer();
        cands.push_back(std::move(cj));
    }
    j["candidates"] = std::move(cands);
    return j;
}

Json match_report(const std::optional<Candidate>& match) {
    if (!match) return Json(nullptr);
    Json j;
    j["sign"] = match->sign;
    j["exponents"] = match->exponents;
    j["matrix"] = matrix_to_json(match->matrix);
    return j;
}

Json pure_exclusion_report(const PureExclusionReport& r, const NumberField& field) {
    Json j;
    j["excluded"] = r.excluded();
    j["totally_positive_conjugate"] =
        r.totally_positive_conjugate ? Json(*r.totally_positive_conjugate) : Json(nullptr);
    j["is_polynomial_vector"] = r.is_polynomial_vector;
    j["norm_sign_violation"] = r.norm_sign_violation;
    j["generator_norm"] = r.generator_norm.get_str();
    j["signature"] = Json::array({field.r1(), field.r2()});
    return j;
}

Json family_report(const FamilyPrediction& p) {
    Json j;
    j["field"] = field_to_json(*p.field);
    Json vec = Json::array();
    for (const auto& comp : p.vector) vec.push_back(element_to_json(comp));
    j["vector"] = std::move(vec);
    Json pre = Json::array();
    for (const auto& l : p.preperiod_labels) pre.push_back(label_to_json(l));
    j["predicted_preperiod"] = std::move(pre);
    Json rep = Json::array();
    for (const auto& l : p.repetend_labels) rep.push_back(label_to_json(l));
    j["predicted_repetend"] = std::move(rep);
    return j;
}

std::string expansion_text(const Expansion& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.input.size(); ++i)
        os << (i ? ", " : "") << e.input[i].to_string("y");
    os << ") = ";
    if (e.verdict == Verdict::eventually_periodic) {
        for (std::size_t i = 0; i < e.preperiod; ++i) os << e.steps[i].label.to_string() << " ";
        os << "overline( ";
        for (std::size_t i = e.preperiod; i < e.preperiod + e.period; ++i)
            os << e.steps[i].label.to_string() << " ";
        os << ")";
        os << "   [N = " << e.preperiod << ", p = " << e.period << "]";
    } else {
        for (const auto& s : e.steps) os << s.label.to_string() << " ";
        os << "   [" << verdict_to_string(e.verdict) << " after " << e.steps.size()
           << " steps]";
    }
    return os.str();
}

std::string dump_deterministic(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mcf

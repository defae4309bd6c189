#include "mcf/algorithms.hpp"

#include <algorithm>
#include <sstream>

#include "mcf/errors.hpp"

namespace mcf {

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "rcf-add") return Algorithm::rcf_add;
    if (name == "rcf-mult") return Algorithm::rcf_mult;
    if (name == "jpa") return Algorithm::jpa;
    if (name == "brun") return Algorithm::brun;
    if (name == "selmer") return Algorithm::selmer;
    if (name == "ajpa") return Algorithm::ajpa;
    throw error(errc::invalid_argument, "unknown algorithm \"" + name + "\"");
}

std::string algorithm_to_string(Algorithm a) {
    switch (a) {
        case Algorithm::rcf_add: return "rcf-add";
        case Algorithm::rcf_mult: return "rcf-mult";
        case Algorithm::jpa: return "jpa";
        case Algorithm::brun: return "brun";
        case Algorithm::selmer: return "selmer";
        case Algorithm::ajpa: return "ajpa";
    }
    return "?";
}

std::string StepLabel::to_string() const {
    std::ostringstream os;
    switch (algorithm) {
        case Algorithm::rcf_add:
            os << "C" << indices[0];
            break;
        case Algorithm::rcf_mult:
            os << "C" << indices[0];
            if (indices[1] != 1) os << "^" << indices[1];
            break;
        case Algorithm::jpa: {
            os << "A_JP(";
            for (std::size_t i = 0; i < indices.size(); ++i)
                os << (i ? "," : "") << indices[i];
            os << ")";
            break;
        }
        case Algorithm::brun:
        case Algorithm::selmer: {
            std::size_t n = indices.size();
            long a = indices[n - 1];
            long b = algorithm == Algorithm::brun ? indices[n - 2] : indices[0];
            os << "T" << a << b;
            break;
        }
        case Algorithm::ajpa:
            os << "A(" << indices[0] << "," << indices[1] << "," << indices[2] << ")";
            break;
    }
    return os.str();
}

namespace {

long to_long(const Int& k) {
    if (!k.fits_slong_p())
        throw error(errc::invalid_argument, "floor value exceeds the label range");
    return k.get_si();
}

// strictly increasing order of the components as 1-based positions;
// nullopt on any tie
std::optional<std::vector<std::size_t>> sorting_permutation(const State& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return (v[a] - v[b]).sign() < 0; });
    // equal components end up adjacent, so ties show between neighbours
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if ((v[idx[i + 1]] - v[idx[i]]).sign() == 0) return std::nullopt;
    return idx;
}

}  // namespace

std::optional<Step> classify_rcf(const State& v, bool multiplicative) {
    if (v.size() != 2) throw error(errc::wrong_dimension, "regular CF works on pairs");
    const FieldElement& v1 = v[0];
    const FieldElement& v0 = v[1];
    int cmp = (v1 - v0).sign();
    if (!multiplicative) {
        // I_1 : v1 >= v0 > 0, I_2 : 0 < v1 < v0
        long branch = cmp >= 0 ? 1 : 2;
        ExactMatrix c = ExactMatrix::transvection(2, branch == 1 ? 1 : 2, branch == 1 ? 2 : 1);
        return Step{StepLabel{Algorithm::rcf_add, {branch}}, std::move(c)};
    }
    long branch;
    Int k;
    if (cmp >= 0) {
        branch = 1;
        k = floor_ratio(v1, v0);
    } else {
        branch = 2;
        k = floor_ratio(v0, v1);
        // exact multiple: v0 = k v1 lands on the tie state after k-1
        // subtractions, and the tie belongs to branch 1
        if (k >= 2 && (v0 - v1 * Rat(k)).is_zero()) k -= 1;
    }
    ExactMatrix c = mat_pow(ExactMatrix::transvection(2, branch == 1 ? 1 : 2, branch == 1 ? 2 : 1),
                            to_long(k));
    return Step{StepLabel{Algorithm::rcf_mult, {branch, to_long(k)}}, std::move(c)};
}

std::optional<Step> classify_jpa(const State& v) {
    std::size_t n = v.size();
    if (n < 2) throw error(errc::wrong_dimension, "JPA needs n >= 2");
    // domain: v_n strictly largest
    for (std::size_t l = 0; l + 1 < n; ++l)
        if ((v[n - 1] - v[l]).sign() <= 0) return std::nullopt;
    std::vector<long> js;
    js.reserve(n - 1);
    for (std::size_t l = 1; l < n; ++l) js.push_back(to_long(floor_ratio(v[l], v[0])));
    if (js.back() < 1) return std::nullopt;
    // A = T_{21}^{j2} ... T_{n1}^{jn} P with P cycling the first column last
    ExactMatrix a = ExactMatrix::identity(n);
    for (std::size_t l = 1; l < n; ++l) a.at(l, 0) = js[l - 1];
    std::vector<std::size_t> perm(n);
    perm[0] = n - 1;
    for (std::size_t i = 1; i < n; ++i) perm[i] = i - 1;
    a = a * ExactMatrix::permutation(perm);
    return Step{StepLabel{Algorithm::jpa, std::move(js)}, std::move(a)};
}

std::optional<Step> classify_brun(const State& v) {
    auto sigma = sorting_permutation(v);
    if (!sigma) return std::nullopt;
    std::size_t n = v.size();
    std::vector<long> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<long>((*sigma)[i] + 1);
    ExactMatrix t = ExactMatrix::transvection(n, (*sigma)[n - 1] + 1, (*sigma)[n - 2] + 1);
    return Step{StepLabel{Algorithm::brun, std::move(idx)}, std::move(t)};
}

std::optional<Step> classify_selmer(const State& v) {
    auto sigma = sorting_permutation(v);
    if (!sigma) return std::nullopt;
    std::size_t n = v.size();
    std::vector<long> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<long>((*sigma)[i] + 1);
    ExactMatrix t = ExactMatrix::transvection(n, (*sigma)[n - 1] + 1, (*sigma)[0] + 1);
    return Step{StepLabel{Algorithm::selmer, std::move(idx)}, std::move(t)};
}

std::optional<Step> classify_ajpa(const State& v) {
    if (v.size() != 3) throw error(errc::wrong_dimension, "AJPA is implemented for n = 3");
    // membership in I_{i,j,k}: the other two components have a strict
    // maximum p exceeding the pivot, and the pivot beats the remaining
    // component q in the norm-weighted comparison
    //   v_piv / sqrt|N(v_piv)| > v_q / sqrt|N(v_q)|.
    std::array<Rat, 3> norm_abs;
    for (std::size_t i = 0; i < 3; ++i) norm_abs[i] = rat_abs(v[i].norm());
    std::optional<Step> hit;
    for (std::size_t piv = 0; piv < 3; ++piv) {
        std::size_t a = piv == 0 ? 1 : 0;
        std::size_t b = piv == 2 ? 1 : 2;
        int s = (v[a] - v[b]).sign();
        if (s == 0) continue;
        std::size_t p = s > 0 ? a : b;
        std::size_t q = s > 0 ? b : a;
        if ((v[p] - v[piv]).sign() <= 0) continue;
        // squared, all quantities positive
        FieldElement lhs = v[piv] * v[piv] * norm_abs[q];
        FieldElement rhs = v[q] * v[q] * norm_abs[piv];
        if ((lhs - rhs).sign() <= 0) continue;
        long j = to_long(floor_ratio(v[a], v[piv]));
        long k = to_long(floor_ratio(v[b], v[piv]));
        // A_{1,j,k} = T21^j T31^k, A_{2,j,k} = T12^j T32^k, A_{3,j,k} = T13^j T23^k
        ExactMatrix m = ExactMatrix::identity(3);
        m.at(a, piv) = j;
        m.at(b, piv) = k;
        Step step{StepLabel{Algorithm::ajpa, {static_cast<long>(piv + 1), j, k}}, std::move(m)};
        if (hit)
            throw error(errc::invalid_argument, "AJPA sets overlap; membership not unique");
        hit = std::move(step);
    }
    return hit;
}

std::optional<Step> classify(Algorithm alg, const State& v) {
    switch (alg) {
        case Algorithm::rcf_add: return classify_rcf(v, false);
        case Algorithm::rcf_mult: return classify_rcf(v, true);
        case Algorithm::jpa: return classify_jpa(v);
        case Algorithm::brun: return classify_brun(v);
        case Algorithm::selmer: return classify_selmer(v);
        case Algorithm::ajpa: return classify_ajpa(v);
    }
    return std::nullopt;
}

}  // namespace mcf

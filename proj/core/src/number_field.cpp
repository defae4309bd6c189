#include "mcf/number_field.hpp"

#include <cassert>

#include "mcf/errors.hpp"

namespace mcf {

void RealRoot::refine() {
    Rat mid = (lo + hi) / 2;
    Rat v = poly.eval(mid);
    if (v == 0) {
        // a simple rational root can only appear on degree >= 4 input that
        // was accepted on the caller's irreducibility assertion
        throw error(errc::reducible, "minimal polynomial has rational root " + mid.get_str());
    }
    if (sgn(v) * sgn(poly.eval(lo)) < 0)
        hi = mid;
    else
        lo = mid;
}

void RealRoot::refine_below(const Rat& width) {
    while (hi - lo > width) refine();
}

double RealRoot::approx() const {
    RealRoot r = *this;
    r.refine_below(Rat(1, 1 << 30));
    return Rat((r.lo + r.hi) / 2).get_d();
}

std::shared_ptr<const NumberField> NumberField::make(const Polynomial& minpoly,
                                                     const RootSelector& selector) {
    if (minpoly.degree() < 2)
        throw error(errc::invalid_argument, "minimal polynomial must have degree >= 2");
    if (!minpoly.is_monic())
        throw error(errc::invalid_argument, "minimal polynomial must be monic");
    if (!is_squarefree(minpoly))
        throw error(errc::not_squarefree, minpoly.to_string());

    auto field = std::shared_ptr<NumberField>(new NumberField());
    field->minpoly_ = minpoly;

    if (minpoly.degree() <= 3) {
        if (auto root = find_rational_root(minpoly))
            throw error(errc::reducible,
                        minpoly.to_string() + " has rational root " + root->get_str());
        field->irreducible_verified_ = true;
    }

    field->all_real_roots_ = isolate_real_roots(minpoly);
    field->r1_ = static_cast<int>(field->all_real_roots_.size());
    field->r2_ = (minpoly.degree() - field->r1_) / 2;
    assert(field->r1_ + 2 * field->r2_ == minpoly.degree());

    if (std::holds_alternative<int>(selector)) {
        int idx = std::get<int>(selector);
        if (idx < 0 || idx >= field->r1_)
            throw error(errc::no_real_root_in_interval,
                        "root index " + std::to_string(idx) + " out of range (r1 = " +
                            std::to_string(field->r1_) + ")");
        field->root_index_ = idx;
        const auto& iv = field->all_real_roots_[static_cast<std::size_t>(idx)];
        field->root_ = RealRoot{minpoly, iv.lo, iv.hi};
    } else {
        const auto& sel = std::get<RootInterval>(selector);
        if (sel.lo >= sel.hi)
            throw error(errc::invalid_argument, "empty root interval");
        SturmSequence sturm(minpoly);
        Rat lo = sel.lo, hi = sel.hi;
        // a rational endpoint that is itself a root certifies reducibility
        if (minpoly.eval(lo) == 0 || minpoly.eval(hi) == 0)
            throw error(errc::reducible, "interval endpoint is a rational root of the minimal polynomial");
        int count = sturm.count_roots(lo, hi);
        if (count == 0) throw error(errc::no_real_root_in_interval, "no real root in interval");
        if (count > 1) throw error(errc::ambiguous_interval, "interval contains several roots");
        int idx = -1;
        for (std::size_t i = 0; i < field->all_real_roots_.size(); ++i) {
            // the isolated root list is disjoint; the selected root is the one
            // whose isolating interval meets (lo, hi) in a root
            Rat a = std::max(lo, field->all_real_roots_[i].lo);
            Rat b = std::min(hi, field->all_real_roots_[i].hi);
            if (a < b && sturm.count_roots(a, b) == 1) {
                idx = static_cast<int>(i);
                break;
            }
        }
        assert(idx >= 0);
        field->root_index_ = idx;
        const auto& iv = field->all_real_roots_[static_cast<std::size_t>(idx)];
        field->root_ = RealRoot{minpoly, std::max(lo, iv.lo), std::min(hi, iv.hi)};
    }
    return field;
}

std::vector<Embedding> NumberField::real_embeddings() const {
    std::vector<Embedding> out;
    out.reserve(all_real_roots_.size());
    for (std::size_t i = 0; i < all_real_roots_.size(); ++i) {
        Embedding e;
        e.root = RealRoot{minpoly_, all_real_roots_[i].lo, all_real_roots_[i].hi};
        e.index = static_cast<int>(i);
        e.chosen = (static_cast<int>(i) == root_index_);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mcf

#include "mcf/parse.hpp"

#include <cctype>

#include "mcf/errors.hpp"

namespace mcf {

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw error(errc::parse_error,
                    msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Int(s_.substr(start, pos_ - start));
    }
    Rat unsigned_rational() {
        Int num = integer();
        if (accept('/')) {
            Int den = integer();
            if (den == 0) fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }
    bool word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) == 0) {
            // must not continue as an identifier
            std::size_t end = pos_ + w.size();
            if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
                return false;
            pos_ = end;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// one monomial: optional coefficient, optional variable with power
Polynomial parse_monomial(Scanner& sc, const std::string& var, int sign) {
    Rat coeff(sign);
    bool have_coeff = false;
    if (sc.accept('(')) {
        int inner = 1;
        while (sc.accept('+')) {
        }
        while (sc.accept('-')) inner = -inner;
        Rat r = sc.unsigned_rational();
        if (!sc.accept(')')) sc.fail("expected ')'");
        coeff *= r * inner;
        have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coeff *= sc.unsigned_rational();
        have_coeff = true;
    }
    bool have_star = sc.accept('*');
    if (have_star && !have_coeff) sc.fail("'*' without coefficient");
    if (sc.word(var)) {
        std::size_t power = 1;
        if (sc.accept('^')) {
            Int e = sc.integer();
            if (e < 0 || e > 64) sc.fail("exponent out of range");
            power = e.get_ui();
        }
        return Polynomial::monomial(coeff, power);
    }
    if (have_star) sc.fail("expected variable after '*'");
    if (!have_coeff) sc.fail("expected coefficient or variable");
    return Polynomial::constant(coeff);
}

Polynomial parse_poly_text(const std::string& text, const std::string& var) {
    Scanner sc(text);
    if (sc.done()) sc.fail("empty polynomial");
    Polynomial acc;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('+')) {
            // explicit plus
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        // allow chains like "- -1"
        while (true) {
            if (sc.accept('-'))
                sign = -sign;
            else if (sc.accept('+')) {
            } else
                break;
        }
        acc = acc + parse_monomial(sc, var, sign);
        first = false;
    }
    return acc;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    Scanner sc(text);
    int sign = 1;
    while (true) {
        if (sc.accept('-'))
            sign = -sign;
        else if (sc.accept('+')) {
        } else
            break;
    }
    Rat r = sc.unsigned_rational();
    if (!sc.done()) sc.fail("trailing characters after rational");
    return r * sign;
}

Polynomial parse_polynomial(const std::string& text, const std::string& var) {
    return parse_poly_text(text, var);
}

FieldElement parse_element(const FieldPtr& field, const std::string& text,
                           const std::string& var) {
    Polynomial p = parse_poly_text(text, var);
    if (p.degree() >= field->degree()) {
        p = poly_mod(p, field->minpoly());
    }
    return FieldElement(field, p.coeffs());
}

std::vector<FieldElement> parse_vector(const FieldPtr& field, const std::string& text,
                                       const std::string& var) {
    std::vector<FieldElement> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.find_first_not_of(" \t") == std::string::npos)
            throw error(errc::parse_error, "empty component in vector \"" + text + "\"");
        out.push_back(parse_element(field, cur, var));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

ExactMatrix parse_matrix(const std::string& text) {
    // minimal bracket format: [[a, b], [c, d]] with rational entries
    std::vector<std::vector<Rat>> rows;
    std::size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw error(errc::parse_error, std::string("expected '") + c + "' at position " +
                                               std::to_string(i) + " in matrix");
        ++i;
    };
    expect('[');
    while (true) {
        expect('[');
        std::vector<Rat> row;
        while (true) {
            skip();
            std::size_t start = i;
            while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
            std::string cell = text.substr(start, i - start);
            // strip quotes so JSON-style string entries pass through
            std::erase(cell, '"');
            std::erase(cell, '\'');
            row.push_back(parse_rational(cell));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect(']');
    return ExactMatrix::from_rows(rows);
}

}  // namespace mcf

#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "socle/monomial.hpp"
#include "socle/rational.hpp"

namespace socle {

struct Term {
    Rational coeff;
    ExponentVector mono;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

/// Canonical sparse multivariate polynomial over Q. Terms are kept strictly
/// descending in the active monomial order with no zero coefficients, so two
/// polynomials are equal exactly when their representations are identical.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t arity, MonomialOrder order) : arity_(arity), order_(order) {}

    static Polynomial zero(std::size_t arity, MonomialOrder order) {
        return Polynomial(arity, order);
    }

    static Polynomial constant(std::size_t arity, MonomialOrder order, Rational c) {
        Polynomial p(arity, order);
        if (c != 0) p.terms_.push_back({std::move(c), ExponentVector(arity)});
        return p;
    }

    static Polynomial monomial(ExponentVector mono, MonomialOrder order, Rational c = 1) {
        Polynomial p(mono.arity(), order);
        if (c != 0) p.terms_.push_back({std::move(c), std::move(mono)});
        return p;
    }

    static Polynomial variable(std::size_t arity, std::size_t index, MonomialOrder order) {
        ExponentVector e(arity);
        e.set(index, 1);
        return monomial(std::move(e), order);
    }

    static Polynomial from_terms(std::size_t arity, MonomialOrder order, std::vector<Term> terms) {
        Polynomial p(arity, order);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    std::size_t arity() const { return arity_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw Error("polynomial: leading term of zero");
        return terms_.front();
    }
    const ExponentVector& leading_monomial() const { return leading_term().mono; }

    bool is_monomial() const { return terms_.size() == 1; }

    /// Everything after the leading term.
    Polynomial tail() const {
        if (terms_.empty()) return *this;
        Polynomial p(arity_, order_);
        p.terms_.assign(terms_.begin() + 1, terms_.end());
        return p;
    }

    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    Polynomial with_order(MonomialOrder order) const {
        Polynomial p(arity_, order);
        p.terms_ = terms_;
        p.canonicalize();
        return p;
    }

    Polynomial negate() const {
        Polynomial p(*this);
        for (Term& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    Polynomial scale(const Rational& c) const {
        if (c == 0) return zero(arity_, order_);
        Polynomial p(*this);
        for (Term& t : p.terms_) t.coeff *= c;
        return p;
    }

    /// Multiplies by a single term; preserves ordering without re-sort.
    Polynomial term_multiple(const Rational& c, const ExponentVector& mono) const {
        if (c == 0) return zero(arity_, order_);
        Polynomial p(arity_, order_);
        p.terms_.reserve(terms_.size());
        for (const Term& t : terms_) p.terms_.push_back({t.coeff * c, t.mono.plus(mono)});
        return p;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(Rational(1) / leading_term().coeff);
    }

    friend Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
        f.require_compatible(g);
        Polynomial r(f.arity_, f.order_);
        r.terms_.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms_.size() && j < g.terms_.size()) {
            auto cmp = compare(f.terms_[i].mono, g.terms_[j].mono, f.order_);
            if (cmp == std::strong_ordering::greater) {
                r.terms_.push_back(f.terms_[i++]);
            } else if (cmp == std::strong_ordering::less) {
                r.terms_.push_back(g.terms_[j++]);
            } else {
                Rational c = f.terms_[i].coeff + g.terms_[j].coeff;
                if (c != 0) r.terms_.push_back({std::move(c), f.terms_[i].mono});
                ++i, ++j;
            }
        }
        for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
        for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
        return r;
    }

    friend Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
        return poly_add(f, g.negate());
    }

    friend Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
        f.require_compatible(g);
        Polynomial r(f.arity_, f.order_);
        r.terms_.reserve(f.terms_.size() * g.terms_.size());
        for (const Term& a : f.terms_)
            for (const Term& b : g.terms_) r.terms_.push_back({a.coeff * b.coeff, a.mono.plus(b.mono)});
        r.canonicalize();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const Polynomial& other) const {
        if (arity_ != other.arity_) throw Error("polynomial: arity mismatch");
        if (order_ != other.order_) throw Error("polynomial: order mismatch");
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
            return compare(a.mono, b.mono, order_) == std::strong_ordering::greater;
        });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (Term& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff += t.coeff;
                if (merged.back().coeff == 0) merged.pop_back();
            } else if (t.coeff != 0) {
                merged.push_back(std::move(t));
            }
        }
        terms_ = std::move(merged);
    }

    std::size_t arity_ = 0;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Textual grammar shared by every module: terms joined by `+`/`-`, a term is
// an optional rational coefficient `*`-joined with powers `var^exp`.
// Examples: `s^4*t`, `y1 - x`, `3/2*x^2*y`. Whitespace-insensitive.
// ---------------------------------------------------------------------------

inline std::string monomial_to_string(const ExponentVector& mono,
                                      const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < mono.arity(); ++i) {
        if (mono[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
    }
    return out;
}

inline std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string body = monomial_to_string(t.mono, vars);
        if (body.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += body;
        } else {
            out += to_string(c) + "*" + body;
        }
        first = false;
    }
    return out;
}

namespace detail {

inline std::size_t var_index(const std::string& name, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw ParseError("polynomial: unknown variable '" + name + "'");
}

inline Term parse_term(const std::string& text, const std::vector<std::string>& vars) {
    Term term{Rational(1), ExponentVector(vars.size())};
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : text) {
        if (ch == '*') {
            factors.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    factors.push_back(cur);
    for (const std::string& f : factors) {
        if (f.empty()) throw ParseError("polynomial: empty factor in '" + text + "'");
        if (std::isdigit(static_cast<unsigned char>(f[0]))) {
            term.coeff *= rational_from_string(f);
            continue;
        }
        std::size_t caret = f.find('^');
        std::string name = f.substr(0, caret == std::string::npos ? f.size() : caret);
        long exp = 1;
        if (caret != std::string::npos) {
            std::string etext = f.substr(caret + 1);
            if (etext.empty() || !std::all_of(etext.begin(), etext.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw ParseError("polynomial: bad exponent in '" + f + "'");
            exp = std::stol(etext);
        }
        std::size_t idx = var_index(name, vars);
        ExponentVector power(vars.size());
        power.set(idx, Exponent(exp));
        term.mono = term.mono.plus(power);
    }
    return term;
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                                   MonomialOrder order = MonomialOrder::grevlex()) {
    std::string squeezed;
    squeezed.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) squeezed += ch;
    if (squeezed.empty()) throw ParseError("polynomial: empty input");

    std::vector<Term> terms;
    std::size_t pos = 0;
    bool negative = false;
    if (squeezed[0] == '+' || squeezed[0] == '-') {
        negative = squeezed[0] == '-';
        pos = 1;
    }
    std::string cur;
    auto flush = [&](bool next_negative) {
        if (cur.empty()) throw ParseError("polynomial: dangling sign in '" + text + "'");
        Term t = detail::parse_term(cur, vars);
        if (negative) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        cur.clear();
        negative = next_negative;
    };
    for (; pos < squeezed.size(); ++pos) {
        char ch = squeezed[pos];
        if (ch == '+' || ch == '-') {
            flush(ch == '-');
        } else {
            cur += ch;
        }
    }
    flush(false);

    // "0" parses to the zero polynomial.
    return Polynomial::from_terms(vars.size(), order, std::move(terms));
}

}  // namespace socle

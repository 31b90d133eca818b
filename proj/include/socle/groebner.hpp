#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// Reduced Groebner basis: auto-reduced, monic leading coefficients,
/// elements sorted ascending by leading monomial for determinism.
struct GroebnerBasis {
    MonomialOrder order;
    std::size_t arity = 0;
    std::vector<Polynomial> elements;

    bool is_zero_ideal() const { return elements.empty(); }

    bool contains_unit() const {
        return elements.size() == 1 && elements.front().leading_monomial().is_one();
    }
};

/// Fully reduces f against G: no term of the result is divisible by any
/// leading monomial of G. The result is the canonical representative of f
/// modulo the ideal of G.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (f.arity() != G.arity) throw Error("normal_form: arity mismatch");
    if (f.order() != G.order) throw Error("normal_form: order mismatch");

    Polynomial rest = f;
    std::vector<Term> kept;
    while (!rest.is_zero()) {
        bool reduced = false;
        const Term& lead = rest.leading_term();
        for (const Polynomial& g : G.elements) {
            if (g.leading_monomial().divides(lead.mono)) {
                Rational factor = lead.coeff / g.leading_term().coeff;
                ExponentVector shift = lead.mono.minus(g.leading_monomial());
                rest = poly_sub(rest, g.term_multiple(factor, shift));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // Leading term is irreducible: move it to the result.
            kept.push_back(lead);
            rest = rest.tail();
        }
    }
    return Polynomial::from_terms(f.arity(), f.order(), std::move(kept));
}

inline bool ideal_membership(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G).is_zero();
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    ExponentVector l = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial a = f.term_multiple(Rational(1) / f.leading_term().coeff,
                                   l.minus(f.leading_monomial()));
    Polynomial b = g.term_multiple(Rational(1) / g.leading_term().coeff,
                                   l.minus(g.leading_monomial()));
    return poly_sub(a, b);
}

/// Canonical input ordering so runs are reproducible regardless of the
/// caller's generator arrangement.
inline void sort_canonically(std::vector<Polynomial>& polys, const MonomialOrder& ord) {
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        auto cmp = compare(a.leading_monomial(), b.leading_monomial(), ord);
        if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
        const auto& ta = a.terms();
        const auto& tb = b.terms();
        for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
            auto mc = compare(ta[i].mono, tb[i].mono, ord);
            if (mc != std::strong_ordering::equal) return mc == std::strong_ordering::less;
            if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
        }
        return ta.size() < tb.size();
    });
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (minimal lcm
/// degree first) and the coprimality and chain criteria for pair pruning.
/// Returns the reduced Groebner basis of the generated ideal.
inline GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                std::size_t arity_hint = 0) {
    std::size_t arity = arity_hint;
    for (const Polynomial& g : gens) {
        if (arity == 0) arity = g.arity();
        if (g.arity() != arity) throw Error("buchberger: arity mismatch");
    }

    std::vector<Polynomial> basis;
    for (Polynomial& g : gens) {
        Polynomial h = g.order() == ord ? std::move(g) : g.with_order(ord);
        if (!h.is_zero()) basis.push_back(h.monic());
    }
    GroebnerBasis result{ord, arity, {}};
    if (basis.empty()) return result;
    detail::sort_canonically(basis, ord);

    using PairKey = std::tuple<std::int64_t, std::size_t, std::size_t>;  // (lcm degree, i, j)
    std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> pairs;
    std::set<std::pair<std::size_t, std::size_t>> handled;

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            ExponentVector l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
            pairs.emplace(l.total_degree(), i, j);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        auto [deg, i, j] = pairs.top();
        pairs.pop();
        handled.insert({i, j});

        const ExponentVector& li = basis[i].leading_monomial();
        const ExponentVector& lj = basis[j].leading_monomial();
        ExponentVector l = li.lcm(lj);

        // First criterion: coprime leading monomials.
        if (l.total_degree() == li.total_degree() + lj.total_degree()) continue;

        // Chain criterion: some k with LT(k) | lcm and both (i,k), (j,k) done.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(i, k)) && handled.count(key(j, k))) chained = true;
        }
        if (chained) continue;

        GroebnerBasis current{ord, arity, basis};
        Polynomial s = normal_form(detail::s_polynomial(basis[i], basis[j]), current);
        if (!s.is_zero()) {
            basis.push_back(s.monic());
            push_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const ExponentVector& lj = basis[j].leading_monomial();
            if (!lj.divides(basis[i].leading_monomial())) continue;
            // Leading-monomial ties are broken toward the earlier element.
            if (lj == basis[i].leading_monomial() && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails for the reduced basis.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis others{ord, arity, {}};
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.elements.push_back(minimal[j]);
        reduced[i] = normal_form(minimal[i], others).monic();
    }

    detail::sort_canonically(reduced, ord);
    result.elements = std::move(reduced);
    return result;
}

}  // namespace socle

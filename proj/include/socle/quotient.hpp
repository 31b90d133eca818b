#pragma once

#include <map>
#include <optional>
#include <vector>

#include "socle/ideal_ops.hpp"
#include "socle/ring.hpp"

namespace socle {

/// Echelonized set of polynomials over Q, keyed by leading monomial. Used
/// wherever a quotient is examined as a plain vector space.
class LinearSpan {
public:
    explicit LinearSpan(MonomialOrder order) : order_(order), rows_(Descending{order}) {}

    /// Eliminates every monomial of p that matches a row's leading monomial.
    Polynomial reduce(Polynomial p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Term& t : p.terms()) {
                auto it = rows_.find(t.mono);
                if (it != rows_.end()) {
                    p = poly_sub(p, it->second.term_multiple(t.coeff, ExponentVector(p.arity())));
                    changed = true;
                    break;
                }
            }
        }
        return p;
    }

    /// Inserts p if independent of the current span; returns the monic
    /// reduced row actually stored, or nullopt when dependent.
    std::optional<Polynomial> insert_reduced(const Polynomial& p) {
        Polynomial r = reduce(p);
        if (r.is_zero()) return std::nullopt;
        r = r.monic();
        rows_.emplace(r.leading_monomial(), r);
        return r;
    }

    /// Returns true when p was independent of the current span.
    bool insert(const Polynomial& p) { return insert_reduced(p).has_value(); }

    std::size_t dimension() const { return rows_.size(); }

    std::vector<Polynomial> basis() const {
        std::vector<Polynomial> out;
        out.reserve(rows_.size());
        for (const auto& [lm, row] : rows_) out.push_back(row);
        return out;
    }

private:
    struct Descending {
        MonomialOrder order;
        bool operator()(const ExponentVector& a, const ExponentVector& b) const {
            return compare(a, b, order) == std::strong_ordering::greater;
        }
    };

    MonomialOrder order_;
    std::map<ExponentVector, Polynomial, Descending> rows_;
};

/// Monomial basis of a finite-length quotient.
struct FiniteQuotientBasis {
    std::vector<ExponentVector> standard_monomials;
    std::size_t length = 0;
};

inline std::size_t krull_dimension(const RingPtr& R) { return R->krull_dimension(); }

/// Standard monomials of the quotient by I (defining ideal included), or
/// nullopt when the quotient has infinite length. Finiteness is detected as
/// a pure power of every variable among the leading terms.
inline std::optional<FiniteQuotientBasis> finite_quotient_basis(const Ideal& I,
                                                                std::size_t cell_ceiling =
                                                                    10'000'000) {
    auto gb = I.basis();
    const std::size_t n = I.ring()->arity();
    if (gb->contains_unit()) return FiniteQuotientBasis{{}, 0};

    std::vector<Exponent> caps(n, -1);
    for (const Polynomial& g : gb->elements) {
        const ExponentVector& lm = g.leading_monomial();
        int support_var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm[i] == 0) continue;
            if (support_var >= 0) {
                pure = false;
                break;
            }
            support_var = int(i);
        }
        if (pure && support_var >= 0) {
            Exponent e = lm[std::size_t(support_var)];
            if (caps[std::size_t(support_var)] < 0 || e < caps[std::size_t(support_var)])
                caps[std::size_t(support_var)] = e;
        }
    }
    for (Exponent c : caps)
        if (c < 0) return std::nullopt;

    std::size_t cells = 1;
    for (Exponent c : caps) {
        cells *= std::size_t(c);
        if (cells > cell_ceiling)
            throw CeilingError("finite_quotient_basis: standard-monomial grid too large");
    }

    std::vector<ExponentVector> lts;
    for (const Polynomial& g : gb->elements) lts.push_back(g.leading_monomial());

    FiniteQuotientBasis out;
    std::vector<Exponent> cur(n, 0);
    while (true) {
        ExponentVector mono{std::vector<Exponent>(cur)};
        bool standard = true;
        for (const ExponentVector& lt : lts)
            if (lt.divides(mono)) {
                standard = false;
                break;
            }
        if (standard) out.standard_monomials.push_back(std::move(mono));
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++cur[i] < caps[i]) break;
            cur[i] = 0;
        }
        if (i == n) break;
    }
    out.length = out.standard_monomials.size();
    return out;
}

inline std::size_t quotient_length(const Ideal& I) {
    auto basis = finite_quotient_basis(I);
    if (!basis) throw Error("length: quotient does not have finite length");
    return basis->length;
}

/// Parameter ideal: generated by dim-many elements with finite-length
/// quotient. The supplied generator list is what is counted.
inline bool is_parameter_ideal(const Ideal& q) {
    if (q.generators().size() != q.ring()->krull_dimension()) return false;
    return finite_quotient_basis(q).has_value();
}

/// k-basis of (I : m)/I, each element in normal form modulo I. Because the
/// colon quotient is killed by m, the residues of the colon's generators
/// already span it; they are echelonized to a basis.
inline std::vector<Polynomial> socle_basis(const Ideal& I) {
    if (!finite_quotient_basis(I))
        throw Error("socle_basis: quotient does not have finite length");
    Ideal colon = colon_ideal(I, irrelevant_ideal(I.ring()));
    auto gb = I.basis();
    LinearSpan span(I.ring()->active_order());
    for (const Polynomial& g : colon.generators()) span.insert(normal_form(g, *gb));
    return span.basis();
}

inline std::size_t index_of_reducibility(const Ideal& q) {
    if (!is_parameter_ideal(q)) throw Error("index_of_reducibility: not a parameter ideal");
    return socle_basis(q).size();
}

inline bool is_irreducible(const Ideal& q) { return index_of_reducibility(q) == 1; }

/// dim_k (J/I) by linear-span closure: seed with normal forms of J's
/// generators modulo I, multiply by the variables until the span is closed.
/// Exceeding the ceiling signals non-finite length, never a truncation.
inline std::size_t finite_length_submodule_dim(const Ideal& I, const Ideal& J,
                                               std::size_t closure_ceiling = 10'000) {
    detail::require_same_ring(I, J, "finite_length_submodule_dim");
    for (const Polynomial& g : I.generators())
        if (!J.contains(g)) throw Error("finite_length_submodule_dim: I is not contained in J");

    auto gb = I.basis();
    const std::size_t n = I.ring()->arity();
    LinearSpan span(I.ring()->active_order());
    std::vector<Polynomial> work;
    for (const Polynomial& g : J.generators()) {
        if (auto row = span.insert_reduced(normal_form(g, *gb))) work.push_back(*row);
    }
    while (!work.empty()) {
        Polynomial p = std::move(work.back());
        work.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            Polynomial candidate = normal_form(
                poly_mul(Polynomial::variable(n, v, p.order()), p), *gb);
            if (auto row = span.insert_reduced(candidate)) {
                if (span.dimension() > closure_ceiling)
                    throw CeilingError("finite_length_submodule_dim: closure ceiling exceeded");
                work.push_back(*row);
            }
        }
    }
    return span.dimension();
}

}  // namespace socle

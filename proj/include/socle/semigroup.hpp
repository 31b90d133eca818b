#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "socle/quotient.hpp"
#include "socle/ring.hpp"

namespace socle {

namespace detail {

/// Dense dynamic-programming table for affine semigroup membership, with a
/// parent pointer per cell so decompositions can be read back. Grown on
/// demand; regrowth recomputes the grid.
class SemigroupTable {
public:
    SemigroupTable(std::vector<ExponentVector> gens, std::size_t arity)
        : gens_(std::move(gens)), arity_(arity), extents_(arity, 0) {}

    bool contains(const ExponentVector& p) {
        ensure(p);
        return in_[index(p)] != 0;
    }

    std::optional<std::vector<std::size_t>> decomposition(const ExponentVector& p) {
        if (!contains(p)) return std::nullopt;
        std::vector<std::size_t> gens_used;
        ExponentVector cur = p;
        while (!cur.is_one()) {
            std::int32_t g = parent_[index(cur)];
            gens_used.push_back(std::size_t(g));
            cur = cur.minus(gens_[std::size_t(g)]);
        }
        std::sort(gens_used.begin(), gens_used.end());
        return gens_used;
    }

private:
    std::size_t index(const ExponentVector& p) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < arity_; ++i) idx = idx * std::size_t(extents_[i]) + std::size_t(p[i]);
        return idx;
    }

    void ensure(const ExponentVector& p) {
        bool ok = true;
        for (std::size_t i = 0; i < arity_; ++i)
            if (p[i] >= extents_[i]) ok = false;
        if (ok) return;

        std::vector<Exponent> next(arity_);
        std::size_t cells = 1;
        for (std::size_t i = 0; i < arity_; ++i) {
            next[i] = std::max(extents_[i], Exponent(p[i] + 1));
            cells *= std::size_t(next[i]);
            if (cells > 200'000'000)
                throw CeilingError("semigroup table: grid ceiling exceeded");
        }
        extents_ = next;
        in_.assign(cells, 0);
        parent_.assign(cells, -1);

        // Row-major sweep: every q - g precedes q.
        std::vector<Exponent> cur(arity_, 0);
        while (true) {
            ExponentVector q{std::vector<Exponent>(cur)};
            if (q.is_one()) {
                in_[index(q)] = 1;
            } else {
                for (std::size_t g = 0; g < gens_.size(); ++g) {
                    if (!gens_[g].divides(q)) continue;
                    if (in_[index(q.minus(gens_[g]))]) {
                        in_[index(q)] = 1;
                        parent_[index(q)] = std::int32_t(g);
                        break;
                    }
                }
            }
            std::size_t i = arity_;
            while (i-- > 0) {
                if (++cur[i] < extents_[i]) break;
                cur[i] = 0;
                if (i == 0) return;
            }
        }
    }

    std::vector<ExponentVector> gens_;
    std::size_t arity_;
    std::vector<Exponent> extents_;
    std::vector<std::uint8_t> in_;
    std::vector<std::int32_t> parent_;
};

}  // namespace detail

/// Decomposition of a lattice point over the subalgebra generators; absent
/// when the point is not in the semigroup.
struct SemigroupMembershipWitness {
    ExponentVector target;
    std::optional<std::vector<std::size_t>> decomposition;

    bool in_semigroup() const { return decomposition.has_value(); }
};

/// A monomial subalgebra of a polynomial ring: the affine semigroup ring
/// generated by finitely many monomials. The lattice fast path and the Cech
/// computation require ambient arity 2; the Groebner path through the toric
/// presentation has no such limit.
class MonomialSubalgebra {
public:
    MonomialSubalgebra(std::vector<std::string> ambient_variables,
                       std::vector<ExponentVector> generators, std::string name = "A")
        : ambient_(std::move(ambient_variables)),
          gens_(std::move(generators)),
          name_(std::move(name)) {
        for (const ExponentVector& g : gens_) {
            if (g.arity() != ambient_.size())
                throw Error("subalgebra: generator arity mismatch");
            if (g.is_one()) throw Error("subalgebra: the unit is not a generator");
        }
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t j = i + 1; j < gens_.size(); ++j)
                if (gens_[i] == gens_[j]) throw Error("subalgebra: duplicate generator");
        table_ = std::make_shared<Locked>(gens_, ambient_.size());
    }

    const std::vector<std::string>& ambient_variables() const { return ambient_; }
    std::size_t ambient_arity() const { return ambient_.size(); }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    const std::string& name() const { return name_; }

    Exponent max_generator_degree() const {
        std::int64_t d = 0;
        for (const ExponentVector& g : gens_) d = std::max(d, g.total_degree());
        return Exponent(d);
    }

    bool lattice_contains(const ExponentVector& p) const {
        std::lock_guard<std::mutex> lock(table_->mu);
        return table_->table.contains(p);
    }

    SemigroupMembershipWitness membership(const ExponentVector& p) const {
        std::lock_guard<std::mutex> lock(table_->mu);
        return {p, table_->table.decomposition(p)};
    }

    /// Index of a pure power of the variable `var`, if a generator is one.
    std::optional<std::size_t> pure_power_generator(std::size_t var) const {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            bool pure = gens_[i][var] > 0;
            for (std::size_t j = 0; j < ambient_arity() && pure; ++j)
                if (j != var && gens_[i][j] != 0) pure = false;
            if (pure) return i;
        }
        return std::nullopt;
    }

    void require_fastpath_shape(const char* op) const {
        if (ambient_arity() != 2)
            throw Error(std::string(op) + ": lattice fast path requires ambient arity 2");
    }

    /// Names for the presentation variables: <name>0, <name>1, ...
    std::vector<std::string> presentation_variables() const {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < gens_.size(); ++i) vars.push_back(name_ + std::to_string(i));
        return vars;
    }

    /// Toric presentation: one variable per generator modulo the kernel of
    /// the monomial map, computed by eliminating the ambient variables.
    /// Lazily built and shared.
    RingPtr toric_presentation() const {
        std::lock_guard<std::mutex> lock(presentation_->mu);
        if (presentation_->ring) return presentation_->ring;

        const std::size_t m = ambient_arity();
        const std::size_t g = gens_.size();
        MonomialOrder elim = MonomialOrder::elimination(m);
        std::vector<Polynomial> relations;
        for (std::size_t i = 0; i < g; ++i) {
            std::vector<Exponent> pres(m + g, 0);
            pres[m + i] = 1;
            std::vector<Exponent> mono(m + g, 0);
            for (std::size_t j = 0; j < m; ++j) mono[j] = gens_[i][j];
            relations.push_back(poly_sub(
                Polynomial::monomial(ExponentVector(std::move(pres)), elim),
                Polynomial::monomial(ExponentVector(std::move(mono)), elim)));
        }
        std::vector<Polynomial> kernel =
            detail::eliminate_block(relations, m + g, m, MonomialOrder::grevlex());
        for (const Polynomial& f : kernel) {
            const auto& terms = f.terms();
            bool binomial = terms.size() == 2 && (terms[0].coeff == 1 || terms[0].coeff == -1) &&
                            (terms[1].coeff == 1 || terms[1].coeff == -1);
            if (!binomial)
                throw Error("toric presentation: kernel generator is not a signed binomial");
        }
        presentation_->ring = make_ring(presentation_variables(), kernel);
        return presentation_->ring;
    }

    /// Image of an ambient monomial in the presentation ring, via one
    /// membership witness.
    Polynomial transport_monomial(const ExponentVector& mono) const {
        SemigroupMembershipWitness w = membership(mono);
        if (!w.in_semigroup())
            throw Error("transport: monomial is not in the subalgebra");
        std::vector<Exponent> exps(gens_.size(), 0);
        for (std::size_t g : *w.decomposition) exps[g] += 1;
        RingPtr pres = toric_presentation();
        return Polynomial::monomial(ExponentVector(std::move(exps)), pres->active_order());
    }

private:
    struct Locked {
        Locked(const std::vector<ExponentVector>& gens, std::size_t arity) : table(gens, arity) {}
        std::mutex mu;
        detail::SemigroupTable table;
    };
    struct Presentation {
        std::mutex mu;
        RingPtr ring;
    };

    std::vector<std::string> ambient_;
    std::vector<ExponentVector> gens_;
    std::string name_;
    std::shared_ptr<Locked> table_;
    std::shared_ptr<Presentation> presentation_ = std::make_shared<Presentation>();
};

inline SemigroupMembershipWitness membership(const MonomialSubalgebra& A,
                                             const ExponentVector& p) {
    return A.membership(p);
}

inline RingPtr toric_presentation(const MonomialSubalgebra& A) { return A.toric_presentation(); }

/// Ideal of the presentation ring generated by the transported monomials
/// (the toric relations ride along as the defining ideal).
inline Ideal transport_ideal(const MonomialSubalgebra& A,
                             const std::vector<ExponentVector>& monomials) {
    RingPtr pres = A.toric_presentation();
    std::vector<Polynomial> gens;
    for (const ExponentVector& m : monomials) gens.push_back(A.transport_monomial(m));
    return Ideal(pres, std::move(gens));
}

/// Is the ambient monomial p inside the monomial ideal of A generated by
/// `ideal_gens`? Purely lattice-side.
inline bool monomial_ideal_contains(const MonomialSubalgebra& A,
                                    const std::vector<ExponentVector>& ideal_gens,
                                    const ExponentVector& p) {
    for (const ExponentVector& g : ideal_gens)
        if (g.divides(p) && A.lattice_contains(p.minus(g))) return true;
    return false;
}

/// Semigroup divisibility: u divides v when v - u is in the semigroup.
/// Prunes the list down to the minimal monomial generators.
inline std::vector<ExponentVector> minimal_monomial_generators(
    const MonomialSubalgebra& A, std::vector<ExponentVector> points) {
    std::sort(points.begin(), points.end(), [](const ExponentVector& a, const ExponentVector& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return b < a;  // within a degree: first variable descending
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<ExponentVector> minimal;
    for (const ExponentVector& p : points) {
        bool divisible = false;
        for (const ExponentVector& q : minimal) {
            if (q.divides(p) && A.lattice_contains(p.minus(q))) {
                divisible = true;
                break;
            }
        }
        if (!divisible) minimal.push_back(p);
    }
    return minimal;
}

struct FastpathColonResult {
    std::vector<ExponentVector> generators;  // minimal, sorted by degree then entries
    Exponent window = 0;
};

namespace detail {

inline std::vector<ExponentVector> colon_points_in_window(
    const MonomialSubalgebra& A, const std::vector<ExponentVector>& ideal_gens,
    const std::vector<ExponentVector>& divisor_gens, Exponent window) {
    std::vector<ExponentVector> points;
    for (Exponent x = 0; x <= window; ++x) {
        for (Exponent y = 0; y <= window; ++y) {
            ExponentVector u{std::vector<Exponent>{x, y}};
            if (!A.lattice_contains(u)) continue;
            bool ok = true;
            for (const ExponentVector& j : divisor_gens) {
                if (!monomial_ideal_contains(A, ideal_gens, u.plus(j))) {
                    ok = false;
                    break;
                }
            }
            if (ok) points.push_back(std::move(u));
        }
    }
    return points;
}

}  // namespace detail

/// (I : J) inside a two-variable monomial subalgebra by pure lattice-point
/// reasoning. The scan window doubles until two consecutive windows produce
/// the same minimal generator list.
inline FastpathColonResult colon_monomial_fastpath(const MonomialSubalgebra& A,
                                                   const std::vector<ExponentVector>& ideal_gens,
                                                   const std::vector<ExponentVector>& divisor_gens,
                                                   Exponent window_ceiling = 4096) {
    A.require_fastpath_shape("colon_monomial_fastpath");
    if (divisor_gens.empty()) throw Error("colon_monomial_fastpath: empty divisor");
    for (const ExponentVector& g : ideal_gens)
        if (!A.lattice_contains(g)) throw Error("colon_monomial_fastpath: ideal generator not in subalgebra");
    for (const ExponentVector& g : divisor_gens)
        if (!A.lattice_contains(g)) throw Error("colon_monomial_fastpath: divisor generator not in subalgebra");

    std::int64_t maxdeg = A.max_generator_degree();
    for (const ExponentVector& g : ideal_gens) maxdeg = std::max(maxdeg, g.total_degree());
    for (const ExponentVector& g : divisor_gens) maxdeg = std::max(maxdeg, g.total_degree());

    Exponent window = Exponent(4 * maxdeg);
    std::vector<ExponentVector> previous = minimal_monomial_generators(
        A, detail::colon_points_in_window(A, ideal_gens, divisor_gens, window));
    while (true) {
        Exponent next_window = window * 2;
        if (next_window > window_ceiling)
            throw CeilingError("colon_monomial_fastpath: window ceiling exceeded");
        std::vector<ExponentVector> current = minimal_monomial_generators(
            A, detail::colon_points_in_window(A, ideal_gens, divisor_gens, next_window));
        if (current == previous) return {std::move(current), next_window};
        previous = std::move(current);
        window = next_window;
    }
}

/// Socle monomials of A/I: minimal generators of (I : m) that are not in I,
/// where m is the ideal of all subalgebra generators.
inline std::vector<ExponentVector> socle_monomials_fastpath(
    const MonomialSubalgebra& A, const std::vector<ExponentVector>& ideal_gens,
    Exponent window_ceiling = 4096) {
    FastpathColonResult colon =
        colon_monomial_fastpath(A, ideal_gens, A.generators(), window_ceiling);
    std::vector<ExponentVector> socle;
    for (const ExponentVector& p : colon.generators)
        if (!monomial_ideal_contains(A, ideal_gens, p)) socle.push_back(p);
    return socle;
}

}  // namespace socle

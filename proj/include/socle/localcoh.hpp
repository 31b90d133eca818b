#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "socle/quotient.hpp"
#include "socle/semigroup.hpp"

namespace socle {

// ---------------------------------------------------------------------------
// H^0 via saturation
// ---------------------------------------------------------------------------

struct H0Result {
    std::size_t socdim = 0;
    unsigned stabilization_exponent = 0;  // exponent at which (0 : m^e) stabilized
};

/// Socle dimension of H^0 = (0 : m^infinity). Because Soc(M) is contained in
/// H^0, it equals dim (0 : m), computed by linear-span closure.
inline H0Result h0_socdim(const RingPtr& R, std::size_t closure_ceiling = 10'000) {
    Ideal zero = zero_ideal(R);
    Ideal m = irrelevant_ideal(R);
    auto [sat, exponent] = saturate(zero, m);
    Ideal socle = colon_ideal(zero, m);
    std::size_t dim = finite_length_submodule_dim(zero, socle, closure_ceiling);
    (void)sat;
    return {dim, exponent};
}

// ---------------------------------------------------------------------------
// Unmixed components and H^r (0 < r < d)
// ---------------------------------------------------------------------------

/// Unmixed component of N computed as the colon by one more parameter, with
/// the saturation route run alongside as a hypothesis detector: the two must
/// agree or the ideal was not generated by part of a standard s.o.p.
inline Ideal unmixed_component(const Ideal& N, const Polynomial& witness) {
    Ideal by_colon = colon_element(N, witness);
    auto [by_saturation, exponent] = saturate(N, irrelevant_ideal(N.ring()));
    (void)exponent;
    if (!ideal_equal(by_colon, by_saturation))
        throw Error("unmixed_component: colon and saturation disagree (standardness hypothesis violated)");
    return by_colon;
}

/// Checks that the prefix is a regular sequence by colon tests:
/// ((x1..x(i-1)) : xi) = (x1..x(i-1)) for every i.
inline bool is_regular_sequence(const RingPtr& R, const std::vector<Polynomial>& prefix) {
    std::vector<Polynomial> sofar;
    for (const Polynomial& x : prefix) {
        Ideal partial(R, sofar);
        if (!ideal_equal(colon_element(partial, x), partial)) return false;
        sofar.push_back(x);
    }
    return true;
}

/// socdim H^r as dim ((x1..xr) : m)/(x1..xr). Preconditions are enforced by
/// the direct regular-sequence colon checks on the supplied prefix; the
/// caller is responsible for placing the prefix inside a verified standard
/// ideal.
inline std::size_t hr_socdim_via_unmixed(const RingPtr& R, const std::vector<Polynomial>& prefix,
                                         std::size_t closure_ceiling = 10'000) {
    if (prefix.empty()) throw Error("hr_socdim: empty parameter prefix");
    if (!is_regular_sequence(R, prefix))
        throw Error("hr_socdim: prefix is not a regular sequence");
    Ideal I(R, prefix);
    Ideal colon = colon_ideal(I, irrelevant_ideal(R));
    return finite_length_submodule_dim(I, colon, closure_ceiling);
}

// ---------------------------------------------------------------------------
// H^d via the graded Cech lattice (two-variable subalgebras)
// ---------------------------------------------------------------------------

enum class CechChart { InvertU, InvertV, InvertUV };

/// A monomial of a localized chart of the Cech complex; exponents may be
/// negative. Only produced by hd_socdim_cech.
struct LaurentClass {
    std::array<std::int64_t, 2> exponents{0, 0};
    CechChart chart = CechChart::InvertUV;

    friend bool operator==(const LaurentClass&, const LaurentClass&) = default;
    friend auto operator<=>(const LaurentClass&, const LaurentClass&) = default;
};

struct CechSocleResult {
    std::vector<LaurentClass> socle;  // sorted, all in the uv-chart
    Exponent window = 0;

    std::size_t socdim() const { return socle.size(); }
};

namespace detail {

/// Membership of a (possibly negative) lattice point in the localized
/// log-set log A[1/x^dir]: shift by `shift` multiples of dir and test the
/// semigroup. Monotone in the shift, so one test at the window size decides
/// presence; absence is provisional until two windows agree.
inline bool in_localized_log(const MonomialSubalgebra& A, std::array<std::int64_t, 2> p,
                             const ExponentVector& dir, Exponent shift) {
    std::int64_t x = p[0] + std::int64_t(shift) * dir[0];
    std::int64_t y = p[1] + std::int64_t(shift) * dir[1];
    if (x < 0 || y < 0) return false;
    return A.lattice_contains(ExponentVector{std::vector<Exponent>{Exponent(x), Exponent(y)}});
}

inline std::vector<LaurentClass> cech_socle_window(const MonomialSubalgebra& A,
                                                   const ExponentVector& u,
                                                   const ExponentVector& v, Exponent window) {
    ExponentVector uv = u.plus(v);
    std::vector<LaurentClass> socle;
    for (std::int64_t x = -window; x <= window; ++x) {
        for (std::int64_t y = -window; y <= window; ++y) {
            std::array<std::int64_t, 2> p{x, y};
            if (!in_localized_log(A, p, uv, window)) continue;
            if (in_localized_log(A, p, u, window) || in_localized_log(A, p, v, window)) continue;
            bool killed_by_all = true;
            for (const ExponentVector& g : A.generators()) {
                std::array<std::int64_t, 2> q{x + g[0], y + g[1]};
                bool killed = in_localized_log(A, q, u, window) ||
                              in_localized_log(A, q, v, window) ||
                              !in_localized_log(A, q, uv, window);
                if (!killed) {
                    killed_by_all = false;
                    break;
                }
            }
            if (killed_by_all) socle.push_back({p, CechChart::InvertUV});
        }
    }
    std::sort(socle.begin(), socle.end());
    return socle;
}

}  // namespace detail

/// Socle of H^d = A[1/uv]/(A[1/u] + A[1/v]) for the pure-power generators
/// u = s^a, v = t^b. The signed search window doubles until two consecutive
/// rounds return the same socle set.
inline CechSocleResult hd_socdim_cech(const MonomialSubalgebra& A, Exponent window_ceiling = 1024,
                                      Exponent initial_window = 0) {
    A.require_fastpath_shape("hd_socdim_cech");
    auto ui = A.pure_power_generator(0);
    auto vi = A.pure_power_generator(1);
    if (!ui || !vi)
        throw Error("hd_socdim_cech: pure-power generators in each variable are required");
    const ExponentVector& u = A.generators()[*ui];
    const ExponentVector& v = A.generators()[*vi];

    Exponent window = initial_window > 0 ? initial_window : Exponent(4 * A.max_generator_degree());
    std::vector<LaurentClass> previous = detail::cech_socle_window(A, u, v, window);
    while (true) {
        Exponent next_window = window * 2;
        if (next_window > window_ceiling)
            throw CeilingError("hd_socdim_cech: window ceiling exceeded");
        std::vector<LaurentClass> current = detail::cech_socle_window(A, u, v, next_window);
        if (current == previous) return {std::move(current), next_window};
        previous = std::move(current);
        window = next_window;
    }
}

// ---------------------------------------------------------------------------
// The eventual-index bound and the stabilization experiment
// ---------------------------------------------------------------------------

inline std::uint64_t binomial_coefficient(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < std::min(k, n - k); ++i)
        result = result * (n - i) / (i + 1);
    return result;
}

/// Sum over i of C(d, i) * socdim H^i. Every entry 0..d must be present.
inline std::size_t goto_suzuki_bound(std::size_t dimension,
                                     const std::vector<std::optional<std::size_t>>& socdims) {
    if (socdims.size() != dimension + 1)
        throw Error("goto_suzuki_bound: expected one socle dimension per index 0..d");
    std::size_t total = 0;
    for (std::size_t i = 0; i <= dimension; ++i) {
        if (!socdims[i]) throw Error("goto_suzuki_bound: missing socle dimension at index " +
                                     std::to_string(i));
        total += std::size_t(binomial_coefficient(dimension, i)) * *socdims[i];
    }
    return total;
}

enum class CohomologyMethod { Saturation, UnmixedQuotient, CechLattice, NotComputed };

inline std::string to_string(CohomologyMethod m) {
    switch (m) {
        case CohomologyMethod::Saturation: return "saturation";
        case CohomologyMethod::UnmixedQuotient: return "unmixed-quotient";
        case CohomologyMethod::CechLattice: return "cech-lattice";
        case CohomologyMethod::NotComputed: return "not-computed";
    }
    return "?";
}

struct CohomologyEntry {
    std::size_t index = 0;
    std::optional<std::size_t> socdim;  // empty = explicitly not computed
    CohomologyMethod method = CohomologyMethod::NotComputed;
    Exponent search_bound = 0;          // Cech window, when applicable
    unsigned stabilization_exponent = 0;
};

struct CohomologyReport {
    std::string ring_label;
    std::size_t dimension = 0;
    std::vector<CohomologyEntry> entries;  // one per index 0..d
    std::optional<std::size_t> goto_suzuki;
};

/// Assembles the per-index socle dimensions: H^0 by saturation, H^r for
/// 0 < r < d through the unmixed-quotient identity on prefixes of `sop`,
/// H^d by the Cech lattice when a two-variable subalgebra is supplied.
inline CohomologyReport cohomology_report(const RingPtr& R, const std::vector<Polynomial>& sop,
                                          const MonomialSubalgebra* cech_subalgebra = nullptr,
                                          std::string ring_label = "",
                                          std::size_t closure_ceiling = 10'000,
                                          Exponent window_ceiling = 1024) {
    CohomologyReport report;
    report.ring_label = std::move(ring_label);
    report.dimension = R->krull_dimension();
    const std::size_t d = report.dimension;

    H0Result h0 = h0_socdim(R, closure_ceiling);
    report.entries.push_back(
        {0, h0.socdim, CohomologyMethod::Saturation, 0, h0.stabilization_exponent});

    for (std::size_t r = 1; r < d; ++r) {
        CohomologyEntry entry{r, std::nullopt, CohomologyMethod::NotComputed, 0, 0};
        if (sop.size() >= r) {
            std::vector<Polynomial> prefix(sop.begin(), sop.begin() + std::ptrdiff_t(r));
            entry.socdim = hr_socdim_via_unmixed(R, prefix, closure_ceiling);
            entry.method = CohomologyMethod::UnmixedQuotient;
        }
        report.entries.push_back(std::move(entry));
    }

    if (d >= 1) {
        CohomologyEntry top{d, std::nullopt, CohomologyMethod::NotComputed, 0, 0};
        if (cech_subalgebra && d == 2) {
            CechSocleResult cech = hd_socdim_cech(*cech_subalgebra, window_ceiling);
            top.socdim = cech.socdim();
            top.method = CohomologyMethod::CechLattice;
            top.search_bound = cech.window;
        }
        report.entries.push_back(std::move(top));
    }

    std::vector<std::optional<std::size_t>> socdims;
    for (const CohomologyEntry& e : report.entries) socdims.push_back(e.socdim);
    bool complete = socdims.size() == d + 1;
    for (const auto& s : socdims) complete = complete && s.has_value();
    if (complete) report.goto_suzuki = goto_suzuki_bound(d, socdims);
    return report;
}

struct StabilizationRow {
    std::string label;
    std::size_t index = 0;
};

struct StabilizationTable {
    std::vector<StabilizationRow> rows;
    bool stabilized = false;                 // last three indices agree
    std::optional<std::size_t> stable_value;
    std::optional<std::size_t> bound;        // supplied eventual-index bound
    bool matches_bound = false;
};

/// Index of reducibility along a family of parameter ideals, with a
/// stabilization flag once the last three values agree. Only observed
/// stabilization is reported.
inline StabilizationTable stabilization_experiment(
    const std::vector<std::pair<std::string, Ideal>>& family,
    std::optional<std::size_t> bound = std::nullopt) {
    StabilizationTable table;
    table.bound = bound;
    for (const auto& [label, q] : family) {
        if (!is_parameter_ideal(q))
            throw Error("stabilization_experiment: '" + label + "' is not a parameter ideal");
        table.rows.push_back({label, index_of_reducibility(q)});
    }
    const std::size_t n = table.rows.size();
    if (n >= 3 && table.rows[n - 1].index == table.rows[n - 2].index &&
        table.rows[n - 2].index == table.rows[n - 3].index) {
        table.stabilized = true;
        table.stable_value = table.rows[n - 1].index;
        table.matches_bound = bound && *bound == *table.stable_value;
    }
    return table;
}

}  // namespace socle

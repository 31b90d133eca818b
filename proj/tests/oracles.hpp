#pragma once

// Independent brute-force oracles. Everything here recomputes answers from
// first principles (plain lattice sweeps, dense rational linear algebra) and
// stays off the library's Groebner and window-doubling code paths, so the
// two sides of every dual-route assertion remain independent.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "socle/quotient.hpp"
#include "socle/ring.hpp"

namespace socle::oracle {

/// Plain double-loop reachability sweep for two-variable semigroups.
/// Independent of socle::detail::SemigroupTable.
class LatticeSweep {
public:
    LatticeSweep(std::vector<std::pair<int, int>> gens, int bound)
        : gens_(std::move(gens)), bound_(bound), in_((bound + 1) * (bound + 1), false) {
        in_[0] = true;
        for (int x = 0; x <= bound_; ++x)
            for (int y = 0; y <= bound_; ++y) {
                if (x == 0 && y == 0) continue;
                for (const auto& [gx, gy] : gens_) {
                    if (gx <= x && gy <= y && in_[idx(x - gx, y - gy)]) {
                        in_[idx(x, y)] = true;
                        break;
                    }
                }
            }
    }

    bool contains(int x, int y) const {
        if (x < 0 || y < 0) return false;
        if (x > bound_ || y > bound_) throw Error("lattice sweep: point outside oracle bound");
        return in_[idx(x, y)];
    }

    bool in_monomial_ideal(const std::vector<std::pair<int, int>>& ideal_gens, int x,
                           int y) const {
        for (const auto& [gx, gy] : ideal_gens)
            if (gx <= x && gy <= y && contains(x - gx, y - gy)) return true;
        return false;
    }

    int bound() const { return bound_; }

private:
    std::size_t idx(int x, int y) const {
        return std::size_t(x) * std::size_t(bound_ + 1) + std::size_t(y);
    }

    std::vector<std::pair<int, int>> gens_;
    int bound_;
    std::vector<bool> in_;
};

/// Socle points of A/I inside the sweep bound: semigroup points outside I
/// that every algebra generator pushes into I. The bound must be generous
/// enough that no socle point sits near the boundary; callers pick it per
/// instance.
inline std::vector<std::pair<int, int>> socle_points(
    const LatticeSweep& sweep, const std::vector<std::pair<int, int>>& algebra_gens,
    const std::vector<std::pair<int, int>>& ideal_gens, int scan_bound) {
    std::vector<std::pair<int, int>> socle;
    for (int x = 0; x <= scan_bound; ++x)
        for (int y = 0; y <= scan_bound; ++y) {
            if (!sweep.contains(x, y)) continue;
            if (sweep.in_monomial_ideal(ideal_gens, x, y)) continue;
            bool killed = true;
            for (const auto& [gx, gy] : algebra_gens) {
                if (!sweep.in_monomial_ideal(ideal_gens, x + gx, y + gy)) {
                    killed = false;
                    break;
                }
            }
            if (killed) socle.emplace_back(x, y);
        }
    return socle;
}

/// Counts lattice points of the monomial ideal J that are outside the
/// monomial ideal I, scanning total degree <= degree_bound. This is the
/// graded-piece enumeration for dim(J/I) of monomial modules.
inline std::size_t graded_quotient_count(const LatticeSweep& sweep,
                                         const std::vector<std::pair<int, int>>& j_gens,
                                         const std::vector<std::pair<int, int>>& i_gens,
                                         int degree_bound) {
    std::size_t count = 0;
    for (int x = 0; x <= degree_bound; ++x)
        for (int y = 0; x + y <= degree_bound; ++y) {
            if (!sweep.in_monomial_ideal(j_gens, x, y)) continue;
            if (sweep.in_monomial_ideal(i_gens, x, y)) continue;
            ++count;
        }
    return count;
}

/// All binomial relations among the generator monomials up to the given
/// total degree in the presentation variables: pairs (u, v) of distinct
/// exponent vectors with equal monomial image.
inline std::vector<std::pair<ExponentVector, ExponentVector>> lattice_relations(
    const std::vector<ExponentVector>& gens, Exponent max_degree) {
    const std::size_t g = gens.size();
    const std::size_t ambient = gens.empty() ? 0 : gens.front().arity();

    std::vector<std::vector<Exponent>> exponents;
    std::vector<Exponent> cur(g, 0);
    // Enumerate all presentation monomials of total degree <= max_degree.
    while (true) {
        Exponent total = 0;
        for (Exponent e : cur) total += e;
        if (total <= max_degree) exponents.push_back(cur);
        std::size_t i = 0;
        for (; i < g; ++i) {
            if (++cur[i] <= max_degree) break;
            cur[i] = 0;
        }
        if (i == g) break;
    }

    std::map<std::vector<Exponent>, std::vector<ExponentVector>> by_image;
    for (const auto& e : exponents) {
        std::vector<Exponent> image(ambient, 0);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < ambient; ++j) image[j] += e[i] * gens[i][j];
        by_image[image].push_back(ExponentVector{std::vector<Exponent>(e)});
    }

    std::vector<std::pair<ExponentVector, ExponentVector>> relations;
    for (const auto& [image, fibers] : by_image)
        for (std::size_t a = 0; a < fibers.size(); ++a)
            for (std::size_t b = a + 1; b < fibers.size(); ++b)
                relations.emplace_back(fibers[a], fibers[b]);
    return relations;
}

/// Socle dimension of a finite-length quotient by dense rational linear
/// algebra: kernel of the stacked multiplication-by-variable matrices on the
/// standard-monomial basis. Independent of the colon-ideal route.
inline std::size_t socdim_by_linear_algebra(const Ideal& q) {
    auto basis = finite_quotient_basis(q);
    if (!basis) throw Error("socdim oracle: quotient is not finite length");
    const auto& monos = basis->standard_monomials;
    const std::size_t N = monos.size();
    if (N == 0) return 0;
    const std::size_t n = q.ring()->arity();
    auto gb = q.basis();

    std::map<ExponentVector, std::size_t> position;
    for (std::size_t i = 0; i < N; ++i) position[monos[i]] = i;

    // Stacked matrix, one block row per variable.
    const MonomialOrder ord = q.ring()->active_order();
    std::vector<std::vector<Rational>> rows(n * N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t v = 0; v < n; ++v) {
        Polynomial xv = Polynomial::variable(n, v, ord);
        for (std::size_t j = 0; j < N; ++j) {
            Polynomial image = normal_form(poly_mul(Polynomial::monomial(monos[j], ord), xv), *gb);
            for (const Term& t : image.terms()) {
                auto it = position.find(t.mono);
                if (it == position.end())
                    throw Error("socdim oracle: image escaped the standard basis");
                rows[v * N + it->second][j] += t.coeff;
            }
        }
    }

    // Rational Gaussian elimination for the rank.
    std::size_t rank = 0;
    std::size_t row_count = rows.size();
    for (std::size_t col = 0; col < N && rank < row_count; ++col) {
        std::size_t pivot = rank;
        while (pivot < row_count && rows[pivot][col] == 0) ++pivot;
        if (pivot == row_count) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t j = col; j < N; ++j) rows[rank][j] *= inv;
        for (std::size_t r = 0; r < row_count; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational factor = rows[r][col];
            for (std::size_t j = col; j < N; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return N - rank;
}

}  // namespace socle::oracle

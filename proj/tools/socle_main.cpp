// Temporary scratch driver; replaced by the real CLI once the kernel is up.
#include <iostream>

#include "socle/localcoh.hpp"
#include "socle/ringfile.hpp"
#include "socle/theorems.hpp"

using namespace socle;

static ExponentVector ev2(Exponent a, Exponent b) {
    return ExponentVector{std::vector<Exponent>{a, b}};
}

static void show(const char* label, const std::vector<ExponentVector>& gens) {
    std::cout << label << " = ";
    for (const auto& g : gens) std::cout << monomial_to_string(g, {"s", "t"}) << "  ";
    std::cout << "\n";
}

int main() {
    MonomialSubalgebra A({"s", "t"}, {ev2(5, 0), ev2(4, 1), ev2(1, 4), ev2(0, 5)}, "A");
    RingPtr P = A.toric_presentation();

    show("(q1 : m)", colon_monomial_fastpath(A, {ev2(5, 0), ev2(0, 5)}, A.generators()).generators);
    show("(q2 : m)", colon_monomial_fastpath(A, {ev2(10, 0), ev2(0, 10)}, A.generators()).generators);
    show("(q3 : m)", colon_monomial_fastpath(A, {ev2(15, 0), ev2(0, 15)}, A.generators()).generators);
    show("(x : m) ", colon_monomial_fastpath(A, {ev2(10, 0)}, A.generators()).generators);

    for (int k = 4; k <= 5; ++k) {
        Ideal q = transport_ideal(A, {ev2(Exponent(5 * k), 0), ev2(0, Exponent(5 * k))});
        std::cout << "index k=" << k << " -> " << index_of_reducibility(q)
                  << " (fastpath socle " <<
            socle_monomials_fastpath(A, {ev2(Exponent(5 * k), 0), ev2(0, Exponent(5 * k))}).size()
                  << ")\n";
    }

    // Saturation U(xA) with exponent
    Ideal x10 = transport_ideal(A, {ev2(10, 0)});
    auto [U, expnt] = saturate(x10, irrelevant_ideal(P));
    Ideal U_min = minimalize(U);
    std::cout << "U(xA) stabilization exponent = " << expnt << ", gens:";
    for (const auto& g : U_min.generators()) std::cout << " " << P->print(g);
    std::cout << "\n";

    // unmixed_component agreement, H0
    Ideal Ux = unmixed_component(x10, A.transport_monomial(ev2(0, 10)));
    std::cout << "U(xA) via colon agrees; h0 = " << h0_socdim(P).socdim << "\n";

    // length of H^1 module U/x
    std::cout << "dim U(xA)/xA = " << finite_length_submodule_dim(x10, Ux) << "\n";

    // standard sop check on (s^10, t^10)
    Polynomial X = A.transport_monomial(ev2(10, 0));
    Polynomial Y = A.transport_monomial(ev2(0, 10));
    SopWitness w41 = make_sop_witness(P, {X, Y}, Ideal(P, {X, Y}));
    Verdict v = check_standard_sop(w41);
    std::cout << "ex41 standard-sop: " << to_string(v.status) << " (" << v.detail << ")\n";

    std::cout << "unmixed-equals-colon r=2: "
              << to_string(check_unmixed_equals_colon(w41, 2).status) << "\n";
    std::cout << "colon-to-unmixeds n=(1,1): "
              << to_string(check_colon_to_unmixeds(w41, 2, {1, 1}).status) << "\n";
    std::cout << "colon-to-unmixeds n=(2,1): "
              << to_string(check_colon_to_unmixeds(w41, 2, {2, 1}).status) << "\n";
    std::cout << "unmixed-intersect r=1 n=0: "
              << to_string(check_unmixed_intersect(w41, 1, 0).status) << "\n";
    std::cout << "unmixed-intersect r=1 n=1: "
              << to_string(check_unmixed_intersect(w41, 1, 1).status) << "\n";
    std::cout << "sum-direct r=1: " << to_string(check_sum_direct(w41, 1).status) << "\n";
    Verdict bust41 = check_bust_up_unmixed(w41, 1);
    std::cout << "bust-up r=1 (expect skipped): " << to_string(bust41.status) << " — "
              << bust41.detail << "\n";

    // cohomology report for ex41
    CohomologyReport rep = cohomology_report(P, {X, Y}, &A, "ex41");
    std::cout << "report: d=" << rep.dimension;
    for (const auto& e : rep.entries)
        std::cout << "  H^" << e.index << "="
                  << (e.socdim ? std::to_string(*e.socdim) : std::string("-")) << "("
                  << to_string(e.method) << ")";
    std::cout << "  bound=" << (rep.goto_suzuki ? std::to_string(*rep.goto_suzuki) : "-") << "\n";

    // stabilization experiment
    std::vector<std::pair<std::string, Ideal>> family;
    for (int k = 1; k <= 5; ++k)
        family.emplace_back("k=" + std::to_string(k),
                            transport_ideal(A, {ev2(Exponent(5 * k), 0), ev2(0, Exponent(5 * k))}));
    Verdict mt = check_main_theorem(family, rep.goto_suzuki);
    std::cout << "main-theorem: " << to_string(mt.status) << " — " << mt.detail << "\n";

    // ---------- 4.2 world (n = 2) ----------
    {
        auto file = parse_ring_file(
            "quotient R = Q[x,y1,y2] / (x*y1, x*y2);\n"
            "ideal p = y1, y2;\n"
            "ideal q = y1 - x, y2;\n"
            "ideal q2 = y1^2 - x^2, y2^2;\n");
        RingPtr R = file.make_quotient_ring();
        auto gens_of = [&](const char* name) {
            std::vector<Polynomial> gens;
            for (const auto& g : file.find_ideal(name)->generators)
                gens.push_back(g.with_order(R->active_order()));
            return gens;
        };
        std::cout << "ex42 n=2: dim = " << R->krull_dimension() << ", h0 = "
                  << h0_socdim(R).socdim << "\n";
        Ideal q(R, gens_of("q"));
        Ideal q2(R, gens_of("q2"));
        std::cout << "  index(q) = " << index_of_reducibility(q)
                  << ", index(q2) = " << index_of_reducibility(q2) << "\n";
        Ideal xi(R, {R->parse("x")});
        Ideal p(R, gens_of("p"));
        Ideal meet = intersect(xi, p);
        std::cout << "  xA meet p = 0? " << ideal_equal(meet, zero_ideal(R)) << "\n";
        // standard sop failure witness
        SopWitness w42 = make_sop_witness(R, q.generators(), Ideal(R, q.generators()));
        Verdict f = check_standard_sop(w42);
        std::cout << "  standard-sop (expect fail): " << to_string(f.status) << " — " << f.detail
                  << (f.witness ? "  witness " + R->print(*f.witness) : "") << "\n";
    }

    // ---------- Northcott on k[t^3,t^4,t^5] ----------
    {
        MonomialSubalgebra C({"t"}, {ExponentVector{std::vector<Exponent>{3}},
                                     ExponentVector{std::vector<Exponent>{4}},
                                     ExponentVector{std::vector<Exponent>{5}}},
                             "C");
        RingPtr PC = C.toric_presentation();
        std::cout << "cm345: dim = " << PC->krull_dimension() << ", toric:";
        for (const auto& f : PC->defining_generators()) std::cout << " " << PC->print(f);
        std::cout << "\n  indices:";
        for (int k = 1; k <= 3; ++k) {
            Ideal q = transport_ideal(C, {ExponentVector{std::vector<Exponent>{Exponent(3 * k)}}});
            std::cout << " " << index_of_reducibility(q);
        }
        std::cout << "\n";
    }

    // ---------- Segre cone (3-dim CM) ----------
    {
        RingPtr S = make_ring({"a", "b", "c", "d"},
                              {parse_polynomial("a*d - b*c", {"a", "b", "c", "d"})});
        std::cout << "segre: dim = " << S->krull_dimension() << "\n";
        std::vector<Polynomial> sop = {S->parse("a"), S->parse("d"), S->parse("b + c")};
        SopWitness ws = make_sop_witness(S, sop, Ideal(S, sop));
        std::cout << "  standard-sop: " << to_string(check_standard_sop(ws).status) << "\n";
        std::cout << "  bust-up r=2: " << to_string(check_bust_up_unmixed(ws, 2).status) << "\n";
        std::cout << "  sum-direct r=2: " << to_string(check_sum_direct(ws, 2).status) << "\n";
    }

    // ---------- positive depth reduction ----------
    {
        RingPtr R = make_ring({"x", "y"}, {parse_polynomial("x^2", {"x", "y"}),
                                           parse_polynomial("x*y", {"x", "y"})});
        Ideal q(R, {R->parse("y^3")});
        Verdict v2 = check_positive_depth_reduction(R, q, 3);
        std::cout << "positive-depth k[x,y]/(x^2,xy), q=(y^3): " << to_string(v2.status) << " — "
                  << v2.detail << "\n";
        std::cout << "  h0 socdim = " << h0_socdim(R).socdim << "\n";
    }

    // ---------- k[s^2, st, t^2] ----------
    {
        MonomialSubalgebra G({"s", "t"}, {ev2(2, 0), ev2(1, 1), ev2(0, 2)}, "G");
        RingPtr PG = G.toric_presentation();
        std::cout << "k[s2,st,t2]: toric:";
        for (const auto& f : PG->defining_generators()) std::cout << " " << PG->print(f);
        auto cech = hd_socdim_cech(G);
        std::cout << "; H^2 socdim = " << cech.socdim();
        Ideal qg = transport_ideal(G, {ev2(2, 0), ev2(0, 2)});
        std::cout << "; index(s^2,t^2) = " << index_of_reducibility(qg) << "\n";
        Polynomial xg = G.transport_monomial(ev2(2, 0));
        Polynomial yg = G.transport_monomial(ev2(0, 2));
        SopWitness wg = make_sop_witness(PG, {xg, yg}, Ideal(PG, {xg, yg}));
        std::cout << "  bust-up r=1 (expect pass): "
                  << to_string(check_bust_up_unmixed(wg, 1).status) << "\n";
        std::cout << "  unmixed-equals-colon r=2: "
                  << to_string(check_unmixed_equals_colon(wg, 2).status) << "\n";
    }

    return 0;
}

#include "doctest.h"
#include "nichols/cartanweyl.hpp"

using namespace nichols;

namespace {

Bicharacter upper(int N, std::vector<std::vector<int>> e) { return Bicharacter(N, std::move(e)); }

void check_all(const RootSystem& rs) {
    CHECK(check_reflection_involution(rs) == "");
    CHECK(check_cartan_scheme(rs) == "");
    CHECK(check_cartan_from_roots(rs) == "");
    CHECK(check_reflection_recursion(rs) == "");
    CHECK(check_root_axioms(rs) == "");
    CHECK(check_root_additivity(rs) == "");
}

}  // namespace

TEST_CASE("bicharacter values") {
    Bicharacter chi = upper(5, {{1, 4}, {0, 1}});
    CHECK(chi.chi_exp({1, 0}, {0, 1}) == 4);
    CHECK(chi.chi_exp({1, 1}, {1, 1}) == (1 + 4 + 0 + 1) % 5);
    CHECK(chi.chi_exp({0, 0}, {3, 2}) == 0);
    CHECK(chi.chi({1, 0}, {0, 1}) == CycNum::root(5, 4));
    CHECK_THROWS(Bicharacter(5, {{1, 2}}));
}

TEST_CASE("Cartan matrices") {
    // q_ij q_ji = 1
    auto cd = cartan_matrix(upper(7, {{3, 2}, {5, 1}}));
    CHECK(cd.a[0][1] == 0);
    CHECK(cd.a[1][0] == 0);
    // q_ij q_ji = q_ii^{-1}
    cd = cartan_matrix(upper(5, {{1, 4}, {0, 1}}));
    CHECK(cd.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(cd.cartan_vertex == std::vector<bool>{true, true});
    // q_ii = -1 with nontrivial q_ij q_ji
    cd = cartan_matrix(upper(6, {{3, 1}, {0, 2}}));
    CHECK(cd.a[0][1] == -1);
    CHECK(!cd.cartan_vertex[0]);
    cd = cartan_matrix(upper(2, {{1}}));
    CHECK(cd.a == std::vector<std::vector<int>>{{2}});
    CHECK(cd.cartan_vertex[0]);
    // q_ii = 1 with q_ij q_ji != 1 never terminates
    CHECK_THROWS_AS(cartan_matrix(upper(5, {{0, 1}, {0, 1}})), NotFiniteError);
}

TEST_CASE("reflections") {
    Bicharacter a2 = upper(5, {{1, 4}, {0, 1}});
    CHECK(reflect(a2, 0).key() == a2.key());
    CHECK(reflect(reflect(a2, 1), 1).key() == a2.key());
    // super type: q11 = -1, q22 = q, q12 q21 = q^{-1} with q = zeta_10^2
    Bicharacter sup = upper(10, {{5, 8}, {0, 2}});
    Bicharacter r = reflect(sup, 0);
    CHECK(r.key() == std::vector<int>{5, 5, 2});
    CHECK(reflect(r, 0).key() == sup.key());
}

TEST_CASE("root systems of Cartan type") {
    auto a2 = root_system(upper(5, {{1, 4}, {0, 1}}));
    CHECK(a2.positive() == std::set<Degree>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(a2.orbit() == a2.positive());
    check_all(a2);

    auto b2 = root_system(upper(8, {{1, 6}, {0, 2}}));
    CHECK(b2.positive() == std::set<Degree>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
    check_all(b2);

    auto g2 = root_system(upper(13, {{1, 10}, {0, 3}}));
    CHECK(g2.positive().size() == 6);
    CHECK(g2.positive().count({3, 2}));
    check_all(g2);

    auto a3 = root_system(upper(5, {{1, 4, 0}, {0, 1, 4}, {0, 0, 1}}));
    CHECK(a3.positive().size() == 6);
    check_all(a3);

    auto r1 = root_system(upper(7, {{3}}));
    CHECK(r1.positive() == std::set<Degree>{{1}});
}

TEST_CASE("super type and orbits") {
    Bicharacter minus = upper(2, {{1, 1}, {0, 1}});
    auto rs = root_system(minus);
    CHECK(rs.positive() == std::set<Degree>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(rs.orbit().empty());
    check_all(rs);

    auto sc = root_scalars(rs, minus);
    REQUIRE(sc.size() == 3);
    CHECK(sc[2].beta == Degree{1, 1});
    CHECK(sc[2].q.is_minus_one());
    CHECK(sc[2].N_beta == 2);

    Bicharacter a2 = upper(5, {{1, 4}, {0, 1}});
    auto s2 = root_scalars(root_system(a2), a2);
    CHECK(s2[2].q.exponent == 1);
    CHECK(s2[0].q == a2.q(0, 0));
}

TEST_CASE("rank two examples with many roots") {
    // 8 and 12 positive roots respectively
    auto r8 = root_system(upper(10, {{1, 6}, {0, 5}}));
    CHECK(r8.positive().size() == 8);
    check_all(r8);
    auto r12 = root_system(upper(14, {{1, 11}, {0, 7}}));
    CHECK(r12.positive().size() == 12);
    CHECK(r12.positive().count({5, 4}));
    check_all(r12);
}

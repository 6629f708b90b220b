#include "doctest.h"
#include "nichols/relations.hpp"

#include <algorithm>
#include <set>

using namespace nichols;

namespace {

struct Setup {
    Bicharacter chi;
    RootSystem rs;
    Nichols B;
    std::vector<Relation> rels;

    Setup(int N, std::vector<std::vector<int>> e, int max_degree = 60)
        : chi(N, std::move(e)), rs(root_system(chi)), B(chi, engine(max_degree)), rels(emit_relations(chi, rs, B)) {}

    static EngineOptions engine(int d) {
        EngineOptions o;
        o.max_degree = d;
        o.max_dim = 100000;
        return o;
    }
    std::multiset<std::string> tags() const {
        std::multiset<std::string> s;
        for (const auto& r : rels) s.insert(family_tag(r.family));
        return s;
    }
    bool fires(Family f) const {
        return std::any_of(rels.begin(), rels.end(), [&](const Relation& r) { return r.family == f; });
    }
};

TensorElem x(int i, int N) { return TensorElem::letter(i, N); }

}  // namespace

TEST_CASE("Cartan A2 emits two Serre relations and three root powers") {
    for (int N : {4, 5, 7}) {
        Setup s(N, {{1, N - 1}, {0, 1}});
        CHECK(s.rels.size() == 5);
        CHECK(s.tags().count("QSerre") == 2);
        CHECK(s.tags().count("PowerRootVector") == 3);
        for (const auto& r : s.rels) {
            CHECK(r.diagnostic.empty());
            if (r.family == Family::PowerRootVector) CHECK(r.exponent == N);
            CHECK(verify_relation(r, s.B, s.rs).status == Status::Verified);
        }
    }
}

TEST_CASE("the -1 plane") {
    Setup s(2, {{1, 1}, {0, 1}});
    REQUIRE(s.rels.size() == 3);
    const int N = 2;
    TensorElem a = bracket(x(0, N), x(1, N), s.chi);
    std::vector<TensorElem> want = {x(0, N) * x(0, N), x(1, N) * x(1, N), a * a};
    for (const auto& w : want)
        CHECK(std::count_if(s.rels.begin(), s.rels.end(), [&](const Relation& r) { return r.element == w; }) == 1);
    CHECK(s.tags().count("SimplePower") == 2);
    CHECK(s.tags().count("MinusOneSquare") == 1);
    for (const auto& r : s.rels) CHECK(s.B.in_radical(r.element));

    int total_dim = 0;
    for (const auto& d : degrees_upto(2, 6)) total_dim += s.B.dim(d);
    CHECK(total_dim == 8);
    auto rows = completeness(s.rels, s.B, 4);
    CHECK(rows.size() == 15);
    for (const auto& row : rows) CHECK(row.match);
}

TEST_CASE("Serre relation with m = 0") {
    Setup s(5, {{1, 0}, {0, 2}});
    int found = 0;
    for (const auto& r : s.rels)
        if (r.family == Family::QSerre) {
            CHECK(total(r.degree) == 2);
            int i = r.indices[0], j = r.indices[1];
            CHECK(r.element == bracket(x(i, 5), x(j, 5), s.chi));
            ++found;
        }
    CHECK(found == 2);
}

TEST_CASE("only Serre relations and root powers on Cartan types") {
    // A2, B2, G2 at several orders
    std::vector<std::pair<int, std::vector<std::vector<int>>>> cases = {
        {5, {{1, 4}, {0, 1}}}, {7, {{2, 5}, {0, 2}}}, {5, {{1, 3}, {0, 2}}}, {7, {{1, 5}, {0, 2}}},
        {5, {{1, 2}, {0, 3}}}, {7, {{1, 4}, {0, 3}}},
    };
    for (const auto& [N, e] : cases) {
        Setup s(N, e);
        for (const auto& r : s.rels) {
            INFO(family_tag(r.family));
            CHECK((r.family == Family::QSerre || r.family == Family::PowerRootVector));
        }
    }
}

TEST_CASE("each family fires on its example and lies in the radical") {
    struct Case {
        int N;
        std::vector<std::vector<int>> e;
        Family f;
    };
    std::vector<Case> cases = {
        {2, {{1, 1}, {0, 1}}, Family::MinusOneSquare},
        {2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, Family::VertexMinusOne},
        {2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, Family::SuperG3},
        {6, {{2, 5}, {0, 3}}, Family::StandardB2},
        {6, {{2, 5}, {0, 3}}, Family::Case2},
        {6, {{2, 2, 0}, {0, 3, 4}, {0, 0, 3}}, Family::StandardB3},
        {6, {{1, 5, 5}, {0, 3, 2}, {0, 0, 4}}, Family::Triangle},
        {6, {{3, 2, 0}, {0, 2, 5}, {0, 0, 3}}, Family::SuperC3},
        {6, {{3, 2, 0}, {0, 2, 5}, {0, 0, 3}}, Family::LikeSuperC3},
        {6, {{3, 2, 0}, {0, 2, 5}, {0, 0, 3}}, Family::TwoByTwo},
        {6, {{2, 4, 0}, {0, 4, 2}, {0, 0, 3}}, Family::C3Order3},
        {4, {{1, 3, 0}, {0, 3, 1}, {0, 0, 2}}, Family::G3Order4},
        {4, {{2, 2, 0}, {0, 1, 3}, {0, 0, 2}}, Family::LikeSuperC3},
        {12, {{8, 3}, {0, 4}}, Family::RankTwoCoeff},
        {12, {{4, 5}, {0, 6}}, Family::TwoAlphaCase2},
        {10, {{2, 4}, {0, 5}}, Family::Case3},
        {10, {{1, 6}, {0, 5}}, Family::HighRootCoeff},
        {10, {{1, 6}, {0, 5}}, Family::TwoAlphaCase1},
        {4, {{1, 3, 0, 0}, {0, 1, 3, 0}, {0, 0, 2, 2}, {0, 0, 0, 2}}, Family::SuperC4},
    };
    for (const auto& c : cases) {
        Setup s(c.N, c.e);
        INFO(family_tag(c.f), " N=", c.N);
        CHECK(s.fires(c.f));
        for (const auto& r : s.rels) {
            if (r.family == Family::PowerRootVector || r.family == Family::SimplePower) continue;
            INFO(r.formula);
            CHECK(r.diagnostic.empty());
            CHECK(s.B.in_radical(r.element));
        }
    }
}

TEST_CASE("relations are homogeneous of the stated degree") {
    Setup s(6, {{3, 2, 0}, {0, 2, 5}, {0, 0, 3}});
    for (const auto& r : s.rels) {
        if (!r.expanded) continue;
        auto d = r.element.homogeneous_degree(3);
        REQUIRE(d);
        CHECK(*d == r.degree);
    }
}

TEST_CASE("the highest-power family relates two root vectors to a square") {
    // [x_(2a1+a2), x_(4a1+3a2)]_c is a multiple of x_(3a1+2a2)^2 in B(V)
    Setup s(14, {{1, 11}, {0, 7}}, 12);
    CHECK(s.fires(Family::HighPower));
    TensorElem lhs = bracket(root_vector_ij(0, 1, 1, s.chi), root_vector_ij(0, 1, 3, s.chi), s.chi);
    TensorElem x32 = root_vector_ij(0, 1, 2, s.chi);
    Degree g{6, 4};
    Echelon e(s.B.dim(g), 14, true);
    CHECK(e.insert(s.B.project(x32 * x32, g)) == 0);
    SparseVec combo;
    CHECK(e.insert(s.B.project(lhs, g), &combo) == -1);
    REQUIRE(combo.size() == 1);
    CHECK(combo[0].second == CycNum::root(14, 4) + CycNum::root(14, 5));
}

TEST_CASE("recursive root vectors match hyperletters up to a scalar") {
    std::vector<std::pair<int, std::vector<std::vector<int>>>> cases = {
        {5, {{1, 2}, {0, 3}}}, {10, {{1, 6}, {0, 5}}}, {10, {{2, 4}, {0, 5}}}, {6, {{2, 5}, {0, 3}}}};
    int checked = 0;
    for (const auto& [N, e] : cases) {
        Setup s(N, e);
        for (int m = 1; m < 6; ++m) {
            Degree d{m + 1, m};
            if (!s.rs.contains(d)) continue;
            TensorElem rv = root_vector_ij(0, 1, m, s.chi);
            TensorElem hl = hyperletter(root_word(d, s.B), s.chi);
            auto a = s.B.project(rv, d), b = s.B.project(hl, d);
            REQUIRE(!b.empty());
            Echelon ech(s.B.dim(d), N);
            ech.insert(b);
            CHECK(ech.in_span(a));
            CHECK(!a.empty());
            ++checked;
        }
    }
    CHECK(checked >= 6);
}

TEST_CASE("leading word of a recursive root vector has coefficient one") {
    Bicharacter chi(10, {{1, 6}, {0, 5}});
    for (int m = 1; m <= 3; ++m) {
        TensorElem v = root_vector_ij(0, 1, m, chi);
        // the lexicographically smallest word is x1 x1 x2 (x1 x2)^(m-1)
        Word lead = {0, 0, 1};
        for (int k = 1; k < m; ++k) lead = concat(lead, {0, 1});
        CHECK(v.terms().begin()->first == lead);
        CHECK(v.coeff(lead).is_one());
    }
}

TEST_CASE("predicted dimensions") {
    Bicharacter chi(3, {{1, 2}, {0, 1}});
    RootSystem rs = root_system(chi);
    auto p = predicted_dims(rs, chi, {4, 4});
    uint64_t sum = 0;
    for (const auto& [d, n] : p) sum += n;
    CHECK(sum == 27);
    CHECK(p.at({4, 4}) == 1);
    CHECK(p.at({1, 1}) == 2);
}

TEST_CASE("verification budget") {
    Setup s(14, {{1, 11}, {0, 7}}, 200);
    VerifyOptions vo;
    vo.max_dim = 50;
    bool skipped = false;
    for (const auto& r : s.rels)
        if (r.family == Family::PowerRootVector && total(r.degree) > 40) {
            CHECK(!r.expanded);
            auto v = verify_relation(r, s.B, s.rs, vo);
            CHECK(v.status == Status::Skipped);
            skipped = true;
        }
    CHECK(skipped);
}

TEST_CASE("ideal of relations") {
    // commutative polynomials: codimension one in every degree
    TensorElem c = x(0, 1) * x(1, 1) - x(1, 1) * x(0, 1);
    RelationIdeal J(2, 1, {c});
    for (const auto& d : degrees_upto(2, 5)) {
        if (total(d) == 0) continue;
        CHECK(word_count(d) - J.rank(d) == 1);
    }
    CHECK(J.normal_form({0, 1}) == J.normal_form({1, 0}));
}

TEST_CASE("primitivity modulo lower relations") {
    Setup s(2, {{1, 1}, {0, 1}});
    for (const auto& r : s.rels) CHECK(check_primitive(r, s.rels, s.chi).empty());

    Setup b(6, {{2, 5}, {0, 3}});
    for (const auto& r : b.rels)
        if (r.family != Family::PowerRootVector) CHECK(check_primitive(r, b.rels, b.chi).empty());

    // x1 x2 is not primitive, with or without the other relations
    Relation bad;
    bad.family = Family::QSerre;
    bad.element = x(0, 2) * x(1, 2);
    bad.degree = {1, 1};
    CHECK(!check_primitive(bad, s.rels, s.chi).empty());
}

TEST_CASE("symmetrization and the twist cocycle") {
    Bicharacter sym(6, {{1, 2}, {2, 3}});
    Bicharacter h = symmetrize(sym);
    Bicharacter sg = twist_cocycle(sym);
    CHECK(h.N() == 12);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(h.q(i, j).value() == sym.q(i, j).value());
            CHECK(sg.q(i, j).is_one());
        }

    // q12 = q^2, q21 = 1 with q = zeta_5
    Bicharacter chi(5, {{1, 2}, {0, 3}});
    Bicharacter h2 = symmetrize(chi), s2 = twist_cocycle(chi);
    CycNum q = CycNum::root(10, 2);
    CHECK(h2.q(0, 1).value() == q);
    CHECK(h2.q(1, 0).value() == q);
    CHECK(s2.q(0, 1).value() == q.inverse());
    CHECK(s2.q(1, 0).is_one());
    for (int i = 0; i < 2; ++i) CHECK(h2.q(i, i).value() == chi.q(i, i).value());
    // q^_ij q^_ji = q_ij q_ji
    CHECK(h2.q(0, 1).value() * h2.q(1, 0).value() == chi.q(0, 1).value() * chi.q(1, 0).value());
}

TEST_CASE("descending to a subfield") {
    CHECK(*descend(CycNum::root(10, 2), 5) == CycNum::root(5, 1));
    CHECK(!descend(CycNum::root(12, 1), 6));
    // N odd: zeta_10 = -zeta_5^3
    CHECK(*descend(CycNum::root(10, 1), 5) == -CycNum::root(5, 3));
    CHECK(descend(CycNum::zero(8), 4)->is_zero());
}

TEST_CASE("general presentation agrees with the PBW expansion") {
    std::vector<std::pair<int, std::vector<std::vector<int>>>> cases = {
        {5, {{1, 4}, {0, 1}}}, {4, {{1, 3}, {0, 1}}}, {5, {{1, 3}, {0, 2}}}, {7, {{1, 5}, {0, 2}}},
        {5, {{1, 2}, {0, 3}}}, {5, {{1, 1}, {1, 3}}},
    };
    bool nontrivial = false;
    for (const auto& [N, e] : cases) {
        Setup s(N, e);
        auto roots = pbw_roots(s.rs, s.chi, s.B);
        for (size_t k = 1; k < roots.size(); ++k) CHECK(roots[k - 1].word < roots[k].word);
        auto pairs = general_pairs(roots);
        CHECK(!pairs.empty());
        for (auto [i, j] : pairs) {
            GeneralRelation g = general_relation(i, j, roots, s.chi);
            INFO(g.relation.formula);
            CHECK(s.B.in_radical(g.relation.element));
            CHECK(g.coeffs == general_coeffs_by_projection(i, j, roots, s.B));
            if (!g.coeffs.empty()) nontrivial = true;
        }
    }
    CHECK(nontrivial);
}

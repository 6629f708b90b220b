#include "nichols/relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nichols {

std::string family_tag(Family f) {
    switch (f) {
        case Family::PowerRootVector: return "PowerRootVector";
        case Family::QSerre: return "QSerre";
        case Family::SimplePower: return "SimplePower";
        case Family::MinusOneSquare: return "MinusOneSquare";
        case Family::VertexMinusOne: return "VertexMinusOne";
        case Family::StandardB2: return "StandardB2";
        case Family::StandardB3: return "StandardB3";
        case Family::Triangle: return "Triangle";
        case Family::SuperC3: return "SuperC3";
        case Family::SuperG3: return "SuperG3";
        case Family::SuperC4: return "SuperC4";
        case Family::C3Order3: return "C3Order3";
        case Family::G3Order4: return "G3Order4";
        case Family::LikeSuperC3: return "LikeSuperC3";
        case Family::TwoByTwo: return "TwoByTwo";
        case Family::RankTwoCoeff: return "RankTwoCoeff";
        case Family::HighRootCoeff: return "HighRootCoeff";
        case Family::Case2: return "Case2";
        case Family::TwoAlphaCase2: return "TwoAlphaCase2";
        case Family::Case3: return "Case3";
        case Family::TwoAlphaCase1: return "TwoAlphaCase1";
        case Family::HighPower: return "HighPower";
        case Family::GeneralPBW: return "GeneralPBW";
    }
    return "?";
}

std::string family_pattern(Family f) {
    switch (f) {
        case Family::PowerRootVector: return "x_b^N_b, b in O(chi)";
        case Family::QSerre: return "(ad x_i)^(m_ij+1) x_j";
        case Family::SimplePower: return "x_i^N_i";
        case Family::MinusOneSquare: return "((ad x_i) x_j)^2";
        case Family::VertexMinusOne: return "[(ad x_i)(ad x_j) x_k, x_j]_c";
        case Family::StandardB2: return "[(ad x_i)^2 x_j, (ad x_i) x_j]_c";
        case Family::StandardB3: return "[(ad x_i)^2 (ad x_j) x_k, (ad x_i) x_j]_c";
        case Family::Triangle:
            return "[x_i, (ad x_j) x_k]_c - (1-q_jk q_kj)/(q_kj (1-q_ik q_ki)) [(ad x_i) x_k, x_j]_c - q_ij (1-q_kj q_jk) "
                   "x_j (ad x_i) x_k";
        case Family::SuperC3: return "[[(ad x_i) x_j, (ad x_i)(ad x_j) x_k]_c, x_j]_c";
        case Family::SuperG3: return "[[(ad x_i) x_j, [(ad x_i) x_j, (ad x_i)(ad x_j) x_k]_c]_c, x_j]_c";
        case Family::SuperC4: return "[[[(ad x_i)(ad x_j)(ad x_k) x_l, x_k]_c, x_j]_c, x_k]_c";
        case Family::C3Order3: return "[[(ad x_i)(ad x_j) x_k, x_j]_c, x_j]_c";
        case Family::G3Order4: return "[[[(ad x_i)(ad x_j) x_k, x_j]_c, x_j]_c, x_j]_c";
        case Family::LikeSuperC3: return "[(ad x_i) x_j, (ad x_i)(ad x_j) x_k]_c";
        case Family::TwoByTwo: return "[(ad x_i)^2 x_j, (ad x_i)^2 x_k]_c";
        case Family::RankTwoCoeff:
            return "(1-q_ij q_ji) q_jj q_ji [x_i, [(ad x_i) x_j, x_j]_c]_c - (1+q_jj)(1-q_jj q_ji q_ij) ((ad x_i) x_j)^2";
        case Family::HighRootCoeff:
            return "[x_i, [(ad x_i)^2 x_j, (ad x_i) x_j]_c]_c - (1-q_ii q_ji q_ij-q_ii^2 q_ji^2 q_ij^2 q_jj)/((1-q_ii q_ij "
                   "q_ji) q_ji) ((ad x_i)^2 x_j)^2";
        case Family::Case2: return "[x_(3a_i+2a_j), (ad x_i) x_j]_c";
        case Family::TwoAlphaCase2: return "[(ad x_i)^2 x_j, x_(3a_i+2a_j)]_c";
        case Family::Case3: return "[x_(4a_i+3a_j), (ad x_i) x_j]_c";
        case Family::TwoAlphaCase1: return "[[(ad x_i)^3 x_j, (ad x_i)^2 x_j]_c, (ad x_i)^2 x_j]_c";
        case Family::HighPower:
            return "[x_(2a_i+a_j), x_(4a_i+3a_j)]_c - (b-(1+q_ii)(1-q_ii z)(1+z+q_ii z^2) q_ii^6 z^4)/(a q_ii^3 q_ij^2 "
                   "q_ji^3) x_(3a_i+2a_j)^2";
        case Family::GeneralPBW: return "[x_b_i, x_b_j]_c - sum_u c^u u";
    }
    return "?";
}

std::string status_str(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Failed: return "FAILED";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

namespace {

int gcd_order(int e, int N) { return N / std::gcd(N, ((e % N) + N) % N); }

/// Elements together with a readable form.
struct Expr {
    TensorElem v;
    std::string s;
};

struct Builder {
    const Bicharacter& chi;
    int N;

    Expr x(int i) const { return {TensorElem::letter(i, N), "x" + std::to_string(i + 1)}; }
    Expr ad(int i, const Expr& e, int m = 1) const {
        std::string p = "(ad x" + std::to_string(i + 1) + ")";
        if (m > 1) p += "^" + std::to_string(m);
        return {ad_c_power(i, m, e.v, chi), p + " " + e.s};
    }
    Expr br(const Expr& a, const Expr& b) const { return {bracket(a.v, b.v, chi), "[" + a.s + ", " + b.s + "]_c"}; }
    Expr sq(const Expr& a) const { return {a.v * a.v, "(" + a.s + ")^2"}; }
    Expr rv(int i, int j, int m) const {
        std::string name = "x_(" + std::to_string(m + 1) + "a" + std::to_string(i + 1) + "+" +
                           (m > 1 ? std::to_string(m) : std::string()) + "a" + std::to_string(j + 1) + ")";
        return {root_vector_ij(i, j, m, chi), name};
    }
    /// a - c b
    Expr minus(const Expr& a, const CycNum& c, const Expr& b) const {
        return {a.v - c * b.v, a.s + " - (" + c.str() + ") " + b.s};
    }
    Expr scaled(const CycNum& c, const Expr& a) const { return {c * a.v, "(" + c.str() + ") " + a.s}; }
};

Degree deg_of_elem(const TensorElem& v, int theta) {
    auto d = v.homogeneous_degree(theta);
    if (!d) throw std::logic_error("relation is not homogeneous");
    return *d;
}

}  // namespace

TensorElem root_vector_ij(int i, int j, int m, const Bicharacter& chi) {
    const int N = chi.N();
    TensorElem xj = TensorElem::letter(j, N);
    if (m < 1) throw std::invalid_argument("root_vector_ij needs m >= 1");
    TensorElem v = ad_c_power(i, 2, xj, chi);
    TensorElem aij = ad_c_power(i, 1, xj, chi);
    for (int k = 2; k <= m; ++k) v = bracket(v, aij, chi);
    return v;
}

Word root_word(const Degree& beta, Nichols& B) {
    std::vector<Word> found;
    for (const auto& w : B.good_words(beta))
        if (is_lyndon(w)) found.push_back(w);
    if (found.size() != 1)
        throw std::runtime_error("degree " + degree_str(beta) + " has " + std::to_string(found.size()) +
                                 " good Lyndon words");
    return found[0];
}

std::vector<Relation> emit_relations(const Bicharacter& chi, const RootSystem& rs, Nichols& B, const EmitOptions& opt) {
    const int t = chi.theta();
    const int N = chi.N();
    const CartanData& cd = rs.objects[0].cartan;
    Builder bld{chi, N};

    auto md = [&](int e) { return ((e % N) + N) % N; };
    auto q = [&](int i, int j) { return chi.e(i, j); };
    auto P = [&](int i, int j) { return chi.p_exp(i, j); };
    auto one = [&](int e) { return md(e) == 0; };
    auto neg = [&](int e) { return N % 2 == 0 && md(e) == N / 2; };
    auto G = [&](int e, int n) { return gcd_order(e, N) == n; };
    auto m = [&](int i, int j) { return cd.m(i, j); };
    auto Q = [&](int i, int j) { return CycNum::root(N, chi.e(i, j)); };
    auto PQ = [&](int i, int j) { return CycNum::root(N, P(i, j)); };
    auto rv2 = [&](int i, int j, int a, int b) {
        Degree d(t, 0);
        d[i] += a;
        d[j] += b;
        return rs.contains(d);
    };
    const CycNum one_c = CycNum::one(N);

    std::vector<Relation> out;
    auto push = [&](Family f, std::vector<int> idx, const Expr& e) {
        Relation r;
        r.family = f;
        r.indices = std::move(idx);
        r.element = e.v;
        r.degree = deg_of_elem(e.v, t);
        r.formula = e.s;
        out.push_back(std::move(r));
    };
    auto push_diag = [&](Family f, std::vector<int> idx, Degree d, std::string why) {
        Relation r;
        r.family = f;
        r.indices = std::move(idx);
        r.degree = std::move(d);
        r.expanded = false;
        r.diagnostic = std::move(why);
        r.formula = family_pattern(f);
        out.push_back(std::move(r));
    };
    auto push_power = [&](Family f, std::vector<int> idx, Degree root, const Expr& base, int n) {
        Relation r;
        r.family = f;
        r.indices = std::move(idx);
        r.root = std::move(root);
        r.base_degree = deg_of_elem(base.v, t);
        r.degree = n * r.base_degree;
        r.exponent = n;
        r.base = base.v;
        r.formula = "(" + base.s + ")^" + std::to_string(n);
        if (word_count(r.degree) <= opt.expand_words) {
            r.element = base.v.pow(n, N);
        } else {
            r.expanded = false;
        }
        out.push_back(std::move(r));
    };

    // powers of root vectors in the orbit of the Cartan vertices
    for (const auto& beta : rs.orbit()) {
        int nb = chi.chi_root(beta, beta).multiplicative_order();
        if (nb <= 1) continue;
        Word l = root_word(beta, B);
        Expr base{hyperletter(l, chi), "[" + word_str(l) + "]_c"};
        if (l.size() == 1) base.s = "x" + std::to_string(l[0] + 1);
        push_power(Family::PowerRootVector, {}, beta, base, nb);
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j || one((m(i, j) + 1) * q(i, i))) continue;
            push(Family::QSerre, {i, j}, bld.ad(i, bld.x(j), m(i, j) + 1));
        }
    for (int i = 0; i < t; ++i) {
        if (cd.cartan_vertex[i]) continue;
        int ni = gcd_order(q(i, i), N);
        if (ni <= 1) continue;
        push_power(Family::SimplePower, {i}, unit_degree(t, i), bld.x(i), ni);
    }
    // two vertices
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (neg(q(i, i)) && neg(P(i, j)) && neg(q(j, j)))
                push_power(Family::MinusOneSquare, {i, j}, {}, bld.ad(i, bld.x(j)), 2);
    // three vertices
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                if (neg(q(j, j)) && one(P(i, k)) && one(P(i, j) + P(j, k)))
                    push(Family::VertexMinusOne, {i, j, k}, bld.br(bld.ad(i, bld.ad(j, bld.x(k))), bld.x(j)));
            }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (neg(q(j, j)) && G(q(i, i) + P(i, j), 6) && (G(q(i, i), 3) || m(i, j) >= 3))
                push(Family::StandardB2, {i, j}, bld.br(bld.ad(i, bld.x(j), 2), bld.ad(i, bld.x(j))));
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                bool pm = md(q(i, i)) == P(i, j) || (N % 2 == 0 && md(q(i, i)) == md(P(i, j) + N / 2));
                if (!(pm && G(q(i, i), 3) && one(P(i, k)))) continue;
                bool alt1 = neg(q(j, j)) && one(P(i, j) + P(j, k));
                bool alt2 = md(-q(j, j)) == P(i, j) && P(i, j) == P(j, k) && !neg(P(i, j));
                if (alt1 || alt2)
                    push(Family::StandardB3, {i, j, k},
                         bld.br(bld.ad(i, bld.ad(j, bld.x(k)), 2), bld.ad(i, bld.x(j))));
            }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                if (one(P(i, k)) || one(P(i, j)) || one(P(j, k))) continue;
                CycNum den = Q(k, j) * (one_c - PQ(i, k));
                Expr first = bld.br(bld.x(i), bld.ad(j, bld.x(k)));
                Expr second = bld.br(bld.ad(i, bld.x(k)), bld.x(j));
                Expr third{bld.x(j).v * bld.ad(i, bld.x(k)).v, "x" + std::to_string(j + 1) + " " + bld.ad(i, bld.x(k)).s};
                if (den.is_zero()) {
                    push_diag(Family::Triangle, {i, j, k}, deg_of_elem(first.v, t), "zero denominator");
                    continue;
                }
                CycNum c1 = (one_c - PQ(j, k)) / den;
                CycNum c2 = Q(i, j) * (one_c - PQ(j, k));
                push(Family::Triangle, {i, j, k}, bld.minus(bld.minus(first, c1, second), c2, third));
            }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k || !one(P(i, k))) continue;
                bool s = false;
                if (neg(q(i, i)) && neg(q(j, j)) && one(2 * P(i, j) + P(j, k))) s = true;
                if (N % 2 == 0) {
                    const int h = N / 2;
                    if (neg(q(j, j)) && neg(q(k, k)) && neg(P(j, k)) && md(q(i, i)) == md(P(i, j) + h) && G(q(i, i), 3))
                        s = true;
                    if (neg(q(i, i)) && neg(q(j, j)) && neg(q(k, k)) && P(i, j) == P(j, k) && G(P(i, j), 3)) s = true;
                    if (neg(q(i, i)) && neg(q(k, k)) && md(q(j, j)) == md(P(j, k) + h) &&
                        (md(q(j, j)) == P(i, j) || md(q(j, j)) == md(-P(i, j))) && G(q(j, j), 3))
                        s = true;
                }
                if (s)
                    push(Family::SuperC3, {i, j, k},
                         bld.br(bld.br(bld.ad(i, bld.x(j)), bld.ad(i, bld.ad(j, bld.x(k)))), bld.x(j)));
            }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                if (neg(q(i, i)) && neg(q(j, j)) && one(3 * P(i, j) + P(j, k)) && one(P(i, k))) {
                    Expr aij = bld.ad(i, bld.x(j));
                    push(Family::SuperG3, {i, j, k},
                         bld.br(bld.br(aij, bld.br(aij, bld.ad(i, bld.ad(j, bld.x(k))))), bld.x(j)));
                }
            }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k)
                for (int l = 0; l < t; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    if (one(q(j, j) + P(i, j)) && one(q(j, j) + P(j, k)) && md(2 * P(j, k)) == md(-P(k, l)) &&
                        md(-P(k, l)) == md(q(l, l)) && neg(q(k, k)) && one(P(i, k)) && one(P(i, l)) && one(P(j, l))) {
                        Expr core = bld.ad(i, bld.ad(j, bld.ad(k, bld.x(l))));
                        push(Family::SuperC4, {i, j, k, l},
                             bld.br(bld.br(bld.br(core, bld.x(k)), bld.x(j)), bld.x(k)));
                    }
                }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                bool base = md(q(j, j)) == md(-P(i, j)) && md(-P(i, j)) == P(j, k);
                if (!base) continue;
                Expr core = bld.br(bld.ad(i, bld.ad(j, bld.x(k))), bld.x(j));
                if (G(q(j, j), 3)) push(Family::C3Order3, {i, j, k}, bld.br(core, bld.x(j)));
                if (G(q(j, j), 4)) push(Family::G3Order4, {i, j, k}, bld.br(bld.br(core, bld.x(j)), bld.x(j)));
            }
    if (N % 2 == 0) {
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                for (int k = 0; k < t; ++k) {
                    if (i == j || j == k || i == k) continue;
                    if (!neg(q(i, i)) || !one(P(i, k))) continue;
                    int lhs = md(-q(j, j));
                    if (lhs == md(N / 2 + P(i, j) + P(j, k)) && !neg(lhs) && lhs != P(i, j))
                        push(Family::LikeSuperC3, {i, j, k}, bld.br(bld.ad(i, bld.x(j)), bld.ad(i, bld.ad(j, bld.x(k)))));
                }
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                if (one(P(j, k)) && G(q(i, i), 3) && P(i, j) != md(-q(i, i)) && P(i, k) != md(-q(i, i)))
                    push(Family::TwoByTwo, {i, j, k}, bld.br(bld.ad(i, bld.x(j), 2), bld.ad(i, bld.x(k), 2)));
            }
    // two vertices with coefficients and the rank-two root vectors
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (!neg(q(i, i)) && !neg(q(j, j)) && !one(q(i, i) + P(i, j)) && !one(q(j, j) + P(i, j))) {
                CycNum c1 = (one_c - PQ(i, j)) * Q(j, j) * Q(j, i);
                CycNum c2 = (one_c + Q(j, j)) * (one_c - Q(j, j) * PQ(i, j));
                Expr a = bld.scaled(c1, bld.br(bld.x(i), bld.br(bld.ad(i, bld.x(j)), bld.x(j))));
                push(Family::RankTwoCoeff, {i, j}, bld.minus(a, c2, bld.sq(bld.ad(i, bld.x(j)))));
            }
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (neg(q(j, j)) && !G(q(i, i) + P(i, j), 6) && (m(i, j) == 4 || m(i, j) == 5 || (m(i, j) == 3 && G(q(i, i), 4)))) {
                Expr a2 = bld.ad(i, bld.x(j), 2);
                Expr first = bld.br(bld.x(i), bld.br(a2, bld.ad(i, bld.x(j))));
                CycNum qi = Q(i, i), p = PQ(i, j);
                CycNum den = (one_c - qi * p) * Q(j, i);
                if (den.is_zero()) {
                    push_diag(Family::HighRootCoeff, {i, j}, deg_of_elem(first.v, t), "zero denominator");
                    continue;
                }
                CycNum c = (one_c - qi * p - qi * qi * p * p * Q(j, j)) / den;
                push(Family::HighRootCoeff, {i, j}, bld.minus(first, c, bld.sq(a2)));
            }
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (!rv2(i, j, 4, 3) && (neg(q(j, j)) || m(j, i) >= 2) && (m(i, j) >= 3 || (m(i, j) == 2 && G(q(i, i), 3))))
                push(Family::Case2, {i, j}, bld.br(bld.rv(i, j, 2), bld.ad(i, bld.x(j))));
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (rv2(i, j, 3, 2) && !rv2(i, j, 5, 3) && !one(3 * q(i, i) + P(i, j)) && !one(4 * q(i, i) + P(i, j)))
                push(Family::TwoAlphaCase2, {i, j}, bld.br(bld.ad(i, bld.x(j), 2), bld.rv(i, j, 2)));
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (rv2(i, j, 4, 3) && !rv2(i, j, 5, 4)) push(Family::Case3, {i, j}, bld.br(bld.rv(i, j, 3), bld.ad(i, bld.x(j))));
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (rv2(i, j, 5, 2) && !rv2(i, j, 7, 3)) {
                Expr a2 = bld.ad(i, bld.x(j), 2);
                push(Family::TwoAlphaCase1, {i, j}, bld.br(bld.br(bld.ad(i, bld.x(j), 3), a2), a2));
            }
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (!(neg(q(j, j)) && rv2(i, j, 5, 4))) continue;
            Expr first = bld.br(bld.rv(i, j, 1), bld.rv(i, j, 3));
            CycNum qi = Q(i, i), z = PQ(i, j);
            CycNum a = (one_c - z) * (one_c - qi.pow(4) * z.pow(3)) - (one_c - qi * z) * (one_c + qi) * qi * z;
            if (a.is_zero()) {
                push_diag(Family::HighPower, {i, j}, deg_of_elem(first.v, t), "a = 0");
                continue;
            }
            CycNum b = (one_c - z) * (one_c - qi.pow(6) * z.pow(5)) - a * qi * z;
            CycNum num = b - (one_c + qi) * (one_c - qi * z) * (one_c + z + qi * z * z) * qi.pow(6) * z.pow(4);
            CycNum den = a * qi.pow(3) * Q(i, j).pow(2) * Q(j, i).pow(3);
            push(Family::HighPower, {i, j}, bld.minus(first, num / den, bld.sq(bld.rv(i, j, 2))));
        }
    return out;
}

std::map<Degree, uint64_t> predicted_dims(const RootSystem& rs, const Bicharacter& chi, const Degree& gamma) {
    const int t = chi.theta();
    std::vector<size_t> stride(t);
    size_t size = 1;
    for (int i = 0; i < t; ++i) {
        stride[i] = size;
        size *= static_cast<size_t>(gamma[i] + 1);
    }
    auto index_of = [&](const Degree& d) {
        size_t k = 0;
        for (int i = 0; i < t; ++i) k += stride[i] * d[i];
        return k;
    };
    std::vector<Degree> all(size);
    for (size_t k = 0; k < size; ++k) {
        Degree d(t);
        size_t r = k;
        for (int i = 0; i < t; ++i) {
            d[i] = static_cast<int>(r % (gamma[i] + 1));
            r /= gamma[i] + 1;
        }
        all[k] = d;
    }
    auto sat = [](uint64_t a, uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
    std::vector<uint64_t> f(size, 0);
    f[0] = 1;
    for (const auto& beta : rs.positive()) {
        int nb = chi.chi_root(beta, beta).multiplicative_order();
        // multiply by 1 + t^b + ... + t^((nb-1) b); nb = 1 means no truncation
        std::vector<uint64_t> g(size, 0);
        for (size_t k = 0; k < size; ++k) {
            if (!f[k]) continue;
            Degree d = all[k];
            for (int e = 0; nb <= 1 || e < nb; ++e) {
                Degree s = d + e * beta;
                bool inside = true;
                for (int i = 0; i < t; ++i)
                    if (s[i] > gamma[i]) inside = false;
                if (!inside) break;
                size_t ks = index_of(s);
                g[ks] = sat(g[ks], f[k]);
            }
        }
        f = std::move(g);
    }
    std::map<Degree, uint64_t> out;
    for (size_t k = 0; k < size; ++k) out[all[k]] = f[k];
    return out;
}

Verdict verify_relation(const Relation& r, Nichols& B, const RootSystem& rs, const VerifyOptions& opt) {
    if (!r.diagnostic.empty()) return {Status::Skipped, "no element: " + r.diagnostic};
    uint64_t need = 0;
    for (const auto& [d, n] : predicted_dims(rs, B.chi(), r.degree)) need = std::max(need, n);
    if (need > opt.max_dim)
        return {Status::Skipped, "needs components of predicted dimension " + std::to_string(need) + " > " +
                                     std::to_string(opt.max_dim)};
    try {
        bool zero;
        if (r.base) {
            SparseVec z = B.project(*r.base, r.base_degree);
            Degree delta = r.base_degree;
            for (int k = 1; k < r.exponent && !z.empty(); ++k) {
                z = B.left_multiply(*r.base, z, delta);
                delta = delta + r.base_degree;
            }
            zero = z.empty();
        } else {
            zero = B.in_radical(r.element);
        }
        if (zero) return {Status::Verified, ""};
        return {Status::Failed, "class in B(V) is nonzero"};
    } catch (const CapExceeded& e) {
        return {Status::Skipped, e.what()};
    }
}

RelationIdeal::RelationIdeal(int theta, int order, std::vector<TensorElem> generators)
    : theta_(theta), order_(order), gens_(std::move(generators)) {}

RelationIdeal::Part& RelationIdeal::part(const Degree& gamma) {
    auto it = parts_.find(gamma);
    if (it != parts_.end()) return *it->second;
    auto p = std::make_unique<Part>();
    p->words = words_of_degree(gamma);
    for (size_t k = 0; k < p->words.size(); ++k) p->index[p->words[k]] = static_cast<int>(k);
    p->ech = std::make_unique<Echelon>(static_cast<int>(p->words.size()), order_);
    auto add = [&](const TensorElem& e) {
        SparseVec v;
        for (const auto& [w, c] : e.terms()) v.emplace_back(p->index.at(w), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        p->ech->insert(v);
    };
    for (const auto& g : gens_) {
        auto d = g.homogeneous_degree(theta_);
        if (d && *d == gamma) add(g);
    }
    for (int i = 0; i < theta_; ++i) {
        if (gamma[i] == 0) continue;
        Degree lower = gamma - unit_degree(theta_, i);
        if (total(lower) == 0) continue;
        Part& lo = part(lower);
        // a spanning set of the lower part: reduce each word, the rows are the differences
        for (size_t k = 0; k < lo.words.size(); ++k) {
            SparseVec nf = lo.ech->residual({{static_cast<int>(k), CycNum::one(order_)}});
            // w - nf(w) lies in the ideal
            TensorElem diff = TensorElem::word(lo.words[k], CycNum::one(order_));
            for (const auto& [c, x] : nf) diff.add_term(lo.words[c], -x);
            if (diff.is_zero()) continue;
            TensorElem xi = TensorElem::letter(i, order_);
            add(xi * diff);
            add(diff * xi);
        }
    }
    auto& ref = *p;
    parts_.emplace(gamma, std::move(p));
    return ref;
}

int RelationIdeal::rank(const Degree& gamma) { return part(gamma).ech->rank(); }

const std::vector<Word>& RelationIdeal::words(const Degree& gamma) { return part(gamma).words; }

SparseVec RelationIdeal::normal_form(const Word& w) {
    Part& p = part(degree_of(w, theta_));
    return p.ech->residual({{p.index.at(w), CycNum::one(order_)}});
}

namespace {

TensorElem full_element(const Relation& r) {
    if (r.expanded) return r.element;
    if (r.base) return r.base->pow(r.exponent, r.base->terms().begin()->second.order());
    throw std::runtime_error("relation has no element");
}

bool leq(const Degree& a, const Degree& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::vector<CompletenessRow> completeness(const std::vector<Relation>& rels, Nichols& B, int max_total,
                                          uint64_t max_words) {
    const int t = B.chi().theta();
    std::vector<TensorElem> gens;
    for (const auto& r : rels) {
        if (!r.diagnostic.empty() || total(r.degree) > max_total) continue;
        if (word_count(r.degree) > max_words) continue;
        gens.push_back(full_element(r));
    }
    RelationIdeal J(t, B.chi().N(), gens);
    std::vector<CompletenessRow> out;
    for (const auto& d : degrees_upto(t, max_total)) {
        uint64_t n = word_count(d);
        if (n > max_words) continue;
        CompletenessRow row;
        row.degree = d;
        row.words = n;
        row.ideal_rank = total(d) == 0 ? 0 : J.rank(d);
        row.nichols_dim = B.dim(d);
        row.match = n - static_cast<uint64_t>(row.ideal_rank) == static_cast<uint64_t>(row.nichols_dim);
        out.push_back(row);
    }
    return out;
}

std::string check_primitive(const Relation& r, const std::vector<Relation>& rels, const Bicharacter& chi) {
    if (!r.diagnostic.empty()) return "no element: " + r.diagnostic;
    const int t = chi.theta();
    const int N = chi.N();
    std::vector<TensorElem> lower;
    for (const auto& s : rels) {
        if (!s.diagnostic.empty() || total(s.degree) >= total(r.degree) || !leq(s.degree, r.degree)) continue;
        lower.push_back(full_element(s));
    }
    RelationIdeal J(t, N, lower);
    TensorSquare d = coproduct(full_element(r), chi);
    std::map<std::pair<Degree, std::pair<int, int>>, CycNum> acc;
    for (const auto& [uv, c] : d) {
        const auto& [u, v] = uv;
        if (u.empty() || v.empty()) continue;
        SparseVec a = J.normal_form(u), b = J.normal_form(v);
        Degree du = degree_of(u, t);
        for (const auto& [ca, xa] : a)
            for (const auto& [cb, xb] : b) {
                auto key = std::make_pair(du, std::make_pair(ca, cb));
                auto [it, fresh] = acc.emplace(key, c * xa * xb);
                if (!fresh) it->second += c * xa * xb;
            }
    }
    for (const auto& [key, c] : acc)
        if (!c.is_zero()) return "nonzero component in bidegree " + degree_str(key.first) + " (x) " +
                                  degree_str(r.degree - key.first);
    return "";
}

Bicharacter symmetrize(const Bicharacter& chi) {
    const int t = chi.theta();
    std::vector<std::vector<int>> e(t, std::vector<int>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) e[i][j] = i == j ? 2 * chi.e(i, i) : chi.e(i, j) + chi.e(j, i);
    return Bicharacter(2 * chi.N(), e);
}

Bicharacter twist_cocycle(const Bicharacter& chi) {
    const int t = chi.theta();
    std::vector<std::vector<int>> e(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) e[i][j] = chi.e(j, i) - chi.e(i, j);
    return Bicharacter(2 * chi.N(), e);
}

std::vector<PBWRoot> pbw_roots(const RootSystem& rs, const Bicharacter& chi, Nichols& B) {
    std::vector<PBWRoot> out;
    for (const auto& beta : rs.positive()) {
        int h = chi.chi_root(beta, beta).multiplicative_order();
        out.push_back({root_word(beta, B), beta, h <= 1 ? 0 : h});
    }
    std::sort(out.begin(), out.end(), [](const PBWRoot& a, const PBWRoot& b) { return a.word < b.word; });
    return out;
}

TensorElem pbw_monomial(const std::vector<PBWRoot>& roots, const PBWMonomial& n, const Bicharacter& chi) {
    TensorElem out = TensorElem::unit(chi.N());
    for (int k = static_cast<int>(roots.size()) - 1; k >= 0; --k) {
        if (!n[k]) continue;
        out = out * hyperletter(roots[k].word, chi).pow(n[k], chi.N());
    }
    return out;
}

std::vector<PBWMonomial> pbw_monomials(const std::vector<PBWRoot>& roots, const Degree& gamma, int first, int last) {
    const int M = static_cast<int>(roots.size());
    if (last < 0) last = M - 1;
    std::vector<PBWMonomial> out;
    PBWMonomial cur(M, 0);
    std::function<void(int, const Degree&)> rec = [&](int k, const Degree& rest) {
        if (k < first) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) out.push_back(cur);
            return;
        }
        Degree r = rest;
        for (int e = 0;; ++e) {
            if (roots[k].height && e >= roots[k].height) break;
            cur[k] = e;
            rec(k - 1, r);
            r = r - roots[k].degree;
            if (!nonnegative(r)) break;
        }
        cur[k] = 0;
    };
    rec(last, gamma);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> general_pairs(const std::vector<PBWRoot>& roots) {
    std::vector<std::pair<int, int>> out;
    const int M = static_cast<int>(roots.size());
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            Word w = concat(roots[i].word, roots[j].word);
            ShirshovSplit sh = shirshov_split(w);
            if (sh.left != roots[i].word || sh.right != roots[j].word) continue;
            if (std::any_of(roots.begin(), roots.end(), [&](const PBWRoot& r) { return r.word == w; })) continue;
            out.emplace_back(i, j);
        }
    return out;
}

std::optional<CycNum> descend(const CycNum& x, int n) {
    const int M = std::lcm(x.order(), n);
    CycNum y = x.order() == M ? x : x.embed(M);
    if (y.is_zero()) return CycNum::zero(n);
    const int phiM = euler_phi(M), phin = euler_phi(n);
    auto coords = [&](const CycNum& z) {
        SparseVec v;
        const auto& c = z.canonical();
        for (int k = 0; k < phiM; ++k)
            if (!(c[k] == Rational(0))) v.emplace_back(k, CycNum::rational(1, c[k]));
        return v;
    };
    Echelon ech(phiM, 1, true);
    for (int k = 0; k < phin; ++k) ech.insert(coords(CycNum::root(n, k).embed(M)));
    SparseVec combo;
    if (ech.insert(coords(y), &combo) >= 0) return std::nullopt;
    CycNum out = CycNum::zero(n);
    for (const auto& [k, c] : combo) out += CycNum::root(n, k).times(c.canonical()[0]);
    return out;
}

namespace {

std::string monomial_str(const std::vector<PBWRoot>& roots, const PBWMonomial& n) {
    std::string s;
    for (int k = static_cast<int>(roots.size()) - 1; k >= 0; --k) {
        if (!n[k]) continue;
        if (!s.empty()) s += ' ';
        s += "x[" + word_str(roots[k].word) + "]";
        if (n[k] > 1) s += "^" + std::to_string(n[k]);
    }
    return s;
}

PBWMonomial pair_monomial(int M, int i, int j) {
    PBWMonomial n(M, 0);
    n[i] = n[j] = 1;
    return n;
}

}  // namespace

GeneralRelation general_relation(int i, int j, const std::vector<PBWRoot>& roots, const Bicharacter& chi) {
    const int N = chi.N();
    const int M2 = 2 * N;
    const int M = static_cast<int>(roots.size());
    const int t = chi.theta();
    Bicharacter hat = symmetrize(chi);
    Bicharacter sig = twist_cocycle(chi);
    auto s = [&](const Degree& a, const Degree& b) { return sig.chi_exp(a, b); };

    std::map<Word, int> tcache;
    std::function<int(const Word&)> texp = [&](const Word& w) -> int {
        if (w.size() <= 1) return 0;
        auto it = tcache.find(w);
        if (it != tcache.end()) return it->second;
        ShirshovSplit sh = shirshov_split(w);
        int v = (s(degree_of(sh.left, t), degree_of(sh.right, t)) + texp(sh.left) + texp(sh.right)) % M2;
        tcache[w] = v;
        return v;
    };

    std::vector<TensorElem> xhat(M);
    std::vector<CycNum> norm(M);
    for (int k = 0; k < M; ++k) {
        xhat[k] = hyperletter(roots[k].word, hat);
        norm[k] = pairing(xhat[k], xhat[k], hat);
    }
    const Degree gamma = roots[i].degree + roots[j].degree;
    const TensorElem lhs = xhat[i] * xhat[j];
    const PBWMonomial skip = pair_monomial(M, i, j);
    const int denom_exp = s(roots[i].degree, roots[j].degree) + texp(roots[i].word) + texp(roots[j].word);

    GeneralRelation g;
    g.i = i;
    g.j = j;
    Expr rel{bracket(hyperletter(roots[i].word, chi), hyperletter(roots[j].word, chi), chi),
             "[x[" + word_str(roots[i].word) + "], x[" + word_str(roots[j].word) + "]]_c"};
    for (const auto& n : pbw_monomials(roots, gamma, i, j)) {
        if (n == skip) continue;
        TensorElem uhat = TensorElem::unit(M2);
        CycNum cu = CycNum::one(M2);
        int64_t f = 0;
        for (int a = M - 1; a >= 0; --a) {
            if (!n[a]) continue;
            uhat = uhat * xhat[a].pow(n[a], M2);
            cu = cu * q_factorial(n[a], chi.chi(roots[a].degree, roots[a].degree)) * norm[a].pow(n[a]);
            f += static_cast<int64_t>(s(roots[a].degree, roots[a].degree)) * n[a] * (n[a] - 1) / 2 +
                 static_cast<int64_t>(texp(roots[a].word)) * n[a];
            for (int b = a + 1; b < M; ++b) f += static_cast<int64_t>(s(roots[b].degree, roots[a].degree)) * n[a] * n[b];
        }
        if (cu.is_zero()) throw std::logic_error("PBW monomial of norm zero");
        CycNum c = CycNum::root(M2, f - denom_exp) * pairing(lhs, uhat, hat) / cu;
        if (c.is_zero()) continue;
        auto cn = descend(c, N);
        if (!cn) throw std::runtime_error("coefficient " + c.str() + " does not lie in Q(zeta_" + std::to_string(N) + ")");
        g.coeffs[n] = *cn;
        rel.v -= *cn * pbw_monomial(roots, n, chi);
        rel.s += " - (" + cn->str() + ") " + monomial_str(roots, n);
    }
    Relation& r = g.relation;
    r.family = Family::GeneralPBW;
    r.indices = {i, j};
    r.degree = gamma;
    r.element = rel.v;
    r.formula = rel.s;
    return g;
}

std::map<PBWMonomial, CycNum> general_coeffs_by_projection(int i, int j, const std::vector<PBWRoot>& roots,
                                                           Nichols& B) {
    const Bicharacter& chi = B.chi();
    const Degree gamma = roots[i].degree + roots[j].degree;
    const int dim = B.dim(gamma);
    auto mons = pbw_monomials(roots, gamma);
    if (static_cast<int>(mons.size()) != dim)
        throw std::runtime_error("PBW monomials of degree " + degree_str(gamma) + " do not match dim B(V)");
    Echelon ech(dim, chi.N(), true);
    for (const auto& n : mons)
        if (ech.insert(B.project(pbw_monomial(roots, n, chi), gamma)) < 0)
            throw std::runtime_error("PBW monomials of degree " + degree_str(gamma) + " are dependent in B(V)");
    TensorElem br = bracket(hyperletter(roots[i].word, chi), hyperletter(roots[j].word, chi), chi);
    SparseVec combo;
    std::map<PBWMonomial, CycNum> out;
    if (ech.insert(B.project(br, gamma), &combo) >= 0) throw std::logic_error("PBW monomials do not span");
    for (const auto& [l, c] : combo)
        if (!c.is_zero()) out[mons[l]] = c;
    return out;
}

}  // namespace nichols

#include "nichols/cartanweyl.hpp"

#include <algorithm>
#include <deque>

namespace nichols {

namespace {

int mod(int64_t a, int n) {
    int64_t r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

int order_of(int e, int N) { return RootOfUnity(N, e).multiplicative_order(); }

Degree simple(int theta, int i) { return unit_degree(theta, i); }

std::string show(const Degree& d) { return degree_str(d); }

}  // namespace

Bicharacter::Bicharacter(int N, std::vector<std::vector<int>> exps) : N_(N), exps_(std::move(exps)) {
    if (N_ < 1) throw std::invalid_argument("N must be positive");
    if (exps_.empty()) throw std::invalid_argument("theta must be positive");
    for (auto& row : exps_) {
        if (row.size() != exps_.size()) throw std::invalid_argument("exponent matrix is not square");
        for (int& x : row) x = mod(x, N_);
    }
}

int Bicharacter::chi_exp(const Degree& a, const Degree& b) const {
    int64_t s = 0;
    const int t = theta();
    for (int i = 0; i < t; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < t; ++j)
            if (b[j] != 0) s += static_cast<int64_t>(a[i]) * b[j] * exps_[i][j];
    }
    return mod(s, N_);
}

std::vector<int> Bicharacter::key() const {
    std::vector<int> k;
    for (int i = 0; i < theta(); ++i) k.push_back(exps_[i][i]);
    for (int i = 0; i < theta(); ++i)
        for (int j = i + 1; j < theta(); ++j) k.push_back(p_exp(i, j));
    return k;
}

bool Bicharacter::symmetric() const {
    for (int i = 0; i < theta(); ++i)
        for (int j = 0; j < i; ++j)
            if (exps_[i][j] != exps_[j][i]) return false;
    return true;
}

CartanData cartan_matrix(const Bicharacter& chi, int bound) {
    const int t = chi.theta(), N = chi.N();
    CartanData cd;
    cd.a.assign(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) {
        cd.a[i][i] = 2;
        const int qi = chi.e(i, i);
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            const int p = chi.p_exp(i, j);
            int found = -1;
            for (int n = 0; n <= bound && found < 0; ++n) {
                bool qnum_zero = qi != 0 && mod(static_cast<int64_t>(n + 1) * qi, N) == 0;
                bool factor_zero = mod(static_cast<int64_t>(n) * qi + p, N) == 0;
                if (qnum_zero || factor_zero) found = n;
            }
            if (found < 0)
                throw NotFiniteError("root system not finite at vertex " + std::to_string(i + 1) + ": m_" +
                                     std::to_string(i + 1) + std::to_string(j + 1) + " exceeds " + std::to_string(bound));
            cd.a[i][j] = -found;
        }
    }
    cd.cartan_vertex.assign(t, true);
    for (int p = 0; p < t; ++p) {
        int ord = order_of(chi.e(p, p), N);
        for (int j = 0; j < t; ++j)
            if (j != p && ord == cd.m(p, j) + 1) cd.cartan_vertex[p] = false;
    }
    return cd;
}

Degree reflect_degree(const CartanData& cd, int p, const Degree& b) {
    Degree r(b);
    int c = 0;
    for (size_t j = 0; j < b.size(); ++j) c += cd.a[p][j] * b[j];
    r[p] -= c;
    return r;
}

Bicharacter reflect(const Bicharacter& chi, int p, const CartanData& cd) {
    const int t = chi.theta();
    std::vector<Degree> images;
    for (int r = 0; r < t; ++r) images.push_back(reflect_degree(cd, p, simple(t, r)));
    std::vector<std::vector<int>> e(t, std::vector<int>(t));
    for (int r = 0; r < t; ++r)
        for (int s = 0; s < t; ++s) e[r][s] = chi.chi_exp(images[r], images[s]);
    return Bicharacter(chi.N(), e);
}

Bicharacter reflect(const Bicharacter& chi, int p) { return reflect(chi, p, cartan_matrix(chi)); }

std::vector<Degree> RootSystem::sorted_roots() const {
    std::vector<Degree> v(positive().begin(), positive().end());
    std::stable_sort(v.begin(), v.end(), [](const Degree& a, const Degree& b) { return total(a) < total(b); });
    return v;
}

RootSystem root_system(const Bicharacter& chi, const Caps& caps) {
    const int t = chi.theta();
    RootSystem rs;
    std::map<std::vector<int>, int> index;
    rs.objects.push_back({chi, cartan_matrix(chi, caps.cartan_bound), {}, {}, {}});
    index[chi.key()] = 0;
    for (size_t k = 0; k < rs.objects.size(); ++k) {
        for (int p = 0; p < t; ++p) {
            Bicharacter f = reflect(rs.objects[k].chi, p, rs.objects[k].cartan);
            auto [it, fresh] = index.emplace(f.key(), static_cast<int>(rs.objects.size()));
            if (fresh) {
                if (static_cast<int>(rs.objects.size()) >= caps.max_objects)
                    throw NotFiniteError("Weyl groupoid exceeds " + std::to_string(caps.max_objects) + " objects");
                CartanData cd = cartan_matrix(f, caps.cartan_bound);
                rs.objects.push_back({std::move(f), std::move(cd), {}, {}, {}});
            }
            rs.objects[k].neighbor.push_back(it->second);
        }
    }
    for (auto& obj : rs.objects)
        for (int p = 0; p < t; ++p) {
            obj.roots.insert(simple(t, p));
            if (obj.cartan.cartan_vertex[p]) obj.orbit.insert(simple(t, p));
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& obj : rs.objects) {
            for (int p = 0; p < t; ++p) {
                auto& target = rs.objects[obj.neighbor[p]];
                const Degree ap = simple(t, p);
                for (const auto& b : obj.roots) {
                    if (b == ap) continue;
                    Degree nb = reflect_degree(obj.cartan, p, b);
                    if (!nonnegative(nb)) throw NotFiniteError("reflection produced a non-positive root " + show(nb));
                    if (total(nb) > caps.max_root_height)
                        throw NotFiniteError("root height exceeds " + std::to_string(caps.max_root_height));
                    if (target.roots.insert(nb).second) changed = true;
                }
                for (const auto& b : obj.orbit) {
                    Degree nb = b == ap ? ap : reflect_degree(obj.cartan, p, b);
                    if (target.orbit.insert(nb).second) changed = true;
                }
            }
        }
    }
    return rs;
}

std::vector<RootScalar> root_scalars(const RootSystem& rs, const Bicharacter& chi) {
    std::vector<RootScalar> out;
    for (const auto& b : rs.sorted_roots()) {
        RootOfUnity q = chi.chi_root(b, b);
        out.push_back({b, q, q.multiplicative_order(), rs.orbit().count(b) > 0});
    }
    return out;
}

std::string check_reflection_involution(const RootSystem& rs) {
    const int t = rs.objects[0].chi.theta();
    for (size_t k = 0; k < rs.objects.size(); ++k)
        for (int p = 0; p < t; ++p) {
            const auto& obj = rs.objects[k];
            Bicharacter twice = reflect(reflect(obj.chi, p, obj.cartan), p);
            if (twice.key() != obj.chi.key()) return "reflect twice changes object " + std::to_string(k) + " at vertex " + std::to_string(p + 1);
            if (rs.objects[obj.neighbor[p]].neighbor[p] != static_cast<int>(k)) return "r_p r_p differs from identity";
        }
    return {};
}

std::string check_cartan_scheme(const RootSystem& rs) {
    const int t = rs.objects[0].chi.theta();
    for (const auto& obj : rs.objects)
        for (int p = 0; p < t; ++p)
            for (int j = 0; j < t; ++j)
                if (rs.objects[obj.neighbor[p]].cartan.a[p][j] != obj.cartan.a[p][j])
                    return "a_pj changes under r_p for p=" + std::to_string(p + 1) + ", j=" + std::to_string(j + 1);
    return {};
}

std::string check_cartan_from_roots(const RootSystem& rs) {
    const int t = rs.objects[0].chi.theta();
    for (const auto& obj : rs.objects)
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                if (i == j) continue;
                int k = 0;
                while (obj.roots.count(simple(t, j) + (k + 1) * simple(t, i))) ++k;
                if (-k != obj.cartan.a[i][j]) return "a_ij disagrees with root strings at i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1);
            }
    return {};
}

std::string check_reflection_recursion(const RootSystem& rs) {
    const int t = rs.objects[0].chi.theta();
    for (const auto& obj : rs.objects)
        for (int p = 0; p < t; ++p) {
            std::set<Degree> img{simple(t, p)};
            for (const auto& b : obj.roots)
                if (b != simple(t, p)) img.insert(reflect_degree(obj.cartan, p, b));
            if (img != rs.objects[obj.neighbor[p]].roots) return "s_p(roots minus alpha_p) differs at vertex " + std::to_string(p + 1);
        }
    return {};
}

std::string check_root_axioms(const RootSystem& rs) {
    const int t = rs.objects[0].chi.theta();
    for (const auto& obj : rs.objects) {
        for (int i = 0; i < t; ++i) {
            if (!obj.roots.count(simple(t, i))) return "missing simple root";
            for (int k = 2; k <= 30; ++k)
                if (obj.roots.count(k * simple(t, i))) return "multiple of a simple root is a root";
        }
        for (const auto& b : obj.roots)
            if (!nonnegative(b) || total(b) == 0) return "non-positive root " + show(b);
    }
    return {};
}

std::string check_root_additivity(const RootSystem& rs) {
    for (const auto& obj : rs.objects)
        for (const auto& b : obj.roots) {
            if (total(b) < 2) continue;
            bool split = false;
            for (const auto& g : obj.roots) {
                Degree d = b - g;
                if (nonnegative(d) && total(d) > 0 && obj.roots.count(d)) {
                    split = true;
                    break;
                }
            }
            if (!split) return "root " + show(b) + " is not a sum of two roots";
        }
    return {};
}

}  // namespace nichols

#pragma once

// Bicharacters with root-of-unity values, generalized Cartan matrices,
// reflections and the Weyl-groupoid root system.

#include "nichols/cyclotomic.hpp"
#include "nichols/words.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace nichols {

/// Raised when a Cartan entry, the object set or a root height leaves its cap.
struct NotFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    int max_degree = 8;
    int max_objects = 1024;
    int max_root_height = 30;
    int cartan_bound = 8;
};

/// chi(alpha_i, alpha_j) = q_ij = zeta_N^{exps[i][j]}.
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(int N, std::vector<std::vector<int>> exps);

    int theta() const { return static_cast<int>(exps_.size()); }
    int N() const { return N_; }
    const std::vector<std::vector<int>>& exps() const { return exps_; }
    int e(int i, int j) const { return exps_[i][j]; }

    RootOfUnity q(int i, int j) const { return {N_, exps_[i][j]}; }
    /// Exponent of chi(a, b), reduced mod N.
    int chi_exp(const Degree& a, const Degree& b) const;
    RootOfUnity chi_root(const Degree& a, const Degree& b) const { return {N_, chi_exp(a, b)}; }
    CycNum chi(const Degree& a, const Degree& b) const { return CycNum::root(N_, chi_exp(a, b)); }
    /// Exponent of q_ij q_ji.
    int p_exp(int i, int j) const { return (exps_[i][j] + exps_[j][i]) % N_; }

    /// (q_ii)_i followed by (q_ij q_ji)_{i<j}: the twist-invariant data.
    std::vector<int> key() const;
    bool symmetric() const;

private:
    int N_ = 1;
    std::vector<std::vector<int>> exps_;
};

struct CartanData {
    std::vector<std::vector<int>> a;
    std::vector<bool> cartan_vertex;
    int m(int i, int j) const { return -a[i][j]; }
};

/// Throws NotFiniteError when some m_ij exceeds the bound.
CartanData cartan_matrix(const Bicharacter& chi, int bound = 8);
/// s_p^* chi, with s_p(alpha_j) = alpha_j - a_pj alpha_p.
Bicharacter reflect(const Bicharacter& chi, int p, const CartanData& cd);
Bicharacter reflect(const Bicharacter& chi, int p);
Degree reflect_degree(const CartanData& cd, int p, const Degree& b);

struct WeylObject {
    Bicharacter chi;
    CartanData cartan;
    std::vector<int> neighbor;  // index of r_p(X)
    std::set<Degree> roots;
    std::set<Degree> orbit;
};

struct RootSystem {
    std::vector<WeylObject> objects;  // objects[0] is the input braiding
    const std::set<Degree>& positive() const { return objects[0].roots; }
    const std::set<Degree>& orbit() const { return objects[0].orbit; }
    bool contains(const Degree& d) const { return objects[0].roots.count(d) > 0; }
    /// Roots sorted by height, then lexicographically.
    std::vector<Degree> sorted_roots() const;
};

RootSystem root_system(const Bicharacter& chi, const Caps& caps = {});

struct RootScalar {
    Degree beta;
    RootOfUnity q;
    int N_beta = 1;
    bool in_orbit = false;
};
std::vector<RootScalar> root_scalars(const RootSystem& rs, const Bicharacter& chi);

/// Checks on a computed root system; each returns an empty string on success.
std::string check_reflection_involution(const RootSystem& rs);
std::string check_cartan_scheme(const RootSystem& rs);
std::string check_cartan_from_roots(const RootSystem& rs);
std::string check_reflection_recursion(const RootSystem& rs);
std::string check_root_axioms(const RootSystem& rs);
std::string check_root_additivity(const RootSystem& rs);

}  // namespace nichols

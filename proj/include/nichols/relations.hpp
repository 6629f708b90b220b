#pragma once

// Defining relations of B(V) for a finite root system: the minimal families,
// the general presentation by PBW generators, and checks of both against the
// Nichols-algebra engine.

#include "nichols/braided.hpp"
#include "nichols/cartanweyl.hpp"
#include "nichols/nichols.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

enum class Family {
    PowerRootVector,
    QSerre,
    SimplePower,
    MinusOneSquare,
    VertexMinusOne,
    StandardB2,
    StandardB3,
    Triangle,
    SuperC3,
    SuperG3,
    SuperC4,
    C3Order3,
    G3Order4,
    LikeSuperC3,
    TwoByTwo,
    RankTwoCoeff,
    HighRootCoeff,
    Case2,
    TwoAlphaCase2,
    Case3,
    TwoAlphaCase1,
    HighPower,
    GeneralPBW,
};

std::string family_tag(Family f);
/// Shape of the relation, e.g. "[(ad x_i)^2 x_j, (ad x_i) x_j]_c".
std::string family_pattern(Family f);

struct Relation {
    Family family;
    std::vector<int> indices;  // vertices (0-based), in the order i, j, k, l
    Degree root;               // the root beta for powers of root vectors
    Degree degree;
    std::string formula;       // with the actual indices, 1-based
    /// The relation itself; empty when it was too large to expand.
    TensorElem element;
    bool expanded = true;
    /// Power relations: element = base^exponent.
    std::optional<TensorElem> base;
    Degree base_degree;
    int exponent = 1;
    /// Set when a coefficient is undefined; there is no element then.
    std::string diagnostic;
};

/// x_{(m+1) alpha_i + m alpha_j}, m >= 1.
TensorElem root_vector_ij(int i, int j, int m, const Bicharacter& chi);
/// Hyperletter of the good Lyndon word of degree beta.
Word root_word(const Degree& beta, Nichols& B);

struct EmitOptions {
    /// Powers whose degree has more words than this are kept as base^exponent only.
    uint64_t expand_words = 50000;
};

/// Every instance of every family whose hypotheses hold, in a fixed order.
/// Throws NotFiniteError when the root system is not finite.
std::vector<Relation> emit_relations(const Bicharacter& chi, const RootSystem& rs, Nichols& B,
                                     const EmitOptions& opt = {});

enum class Status { Verified, Failed, Skipped };
std::string status_str(Status s);

struct Verdict {
    Status status = Status::Skipped;
    std::string detail;
};

struct VerifyOptions {
    /// Largest PBW-predicted dimension of a component the check may need.
    uint64_t max_dim = 500;
};

/// Dimension of B(V)_delta predicted by the root system, for every delta <= gamma.
std::map<Degree, uint64_t> predicted_dims(const RootSystem& rs, const Bicharacter& chi, const Degree& gamma);

/// Decides whether the relation lies in I(V); skipped when it needs components
/// whose predicted dimension exceeds the budget.
Verdict verify_relation(const Relation& r, Nichols& B, const RootSystem& rs, const VerifyOptions& opt = {});

/// The ideal generated by a list of relations, degree by degree inside T(V).
class RelationIdeal {
public:
    RelationIdeal(int theta, int order, std::vector<TensorElem> generators);

    /// Rank of the ideal in degree gamma.
    int rank(const Degree& gamma);
    /// Normal form of a word modulo the ideal (coordinates on words of gamma).
    SparseVec normal_form(const Word& w);
    /// Words of degree gamma, lexicographic.
    const std::vector<Word>& words(const Degree& gamma);

private:
    struct Part {
        std::vector<Word> words;
        std::map<Word, int> index;
        std::unique_ptr<Echelon> ech;
    };
    Part& part(const Degree& gamma);

    int theta_;
    int order_;
    std::vector<TensorElem> gens_;
    std::map<Degree, std::unique_ptr<Part>> parts_;
};

struct CompletenessRow {
    Degree degree;
    uint64_t words = 0;
    int ideal_rank = 0;
    int nichols_dim = 0;
    bool match = false;
};

/// Codimension of the ideal of the relations against dim B(V), for all degrees
/// of total degree <= max_total with at most max_words words.
std::vector<CompletenessRow> completeness(const std::vector<Relation>& rels, Nichols& B, int max_total,
                                          uint64_t max_words = 3000);

/// Primitivity of each non-power relation modulo the ideal of the emitted
/// relations of smaller degree: Delta(x) - x (x) 1 - 1 (x) x must vanish in
/// (T/J) (x) (T/J). Empty when it does; otherwise a description.
std::string check_primitive(const Relation& r, const std::vector<Relation>& rels, const Bicharacter& chi);

// General presentation.

/// Symmetric braiding with q^_ij = zeta_{2N}^{e_ij + e_ji} and the same diagonal.
Bicharacter symmetrize(const Bicharacter& chi);
/// The cocycle sigma(alpha_i, alpha_j) = q^_ij / q_ij for i <= j, 1 otherwise, as exponents of zeta_{2N}.
Bicharacter twist_cocycle(const Bicharacter& chi);

struct PBWRoot {
    Word word;  // good Lyndon word
    Degree degree;
    int height = 0;  // 0 for unbounded
};
/// Roots with their Lyndon words, increasing lexicographically.
std::vector<PBWRoot> pbw_roots(const RootSystem& rs, const Bicharacter& chi, Nichols& B);

/// Exponents (n_1, ..., n_M) of x_{beta_M}^{n_M} ... x_{beta_1}^{n_1}.
using PBWMonomial = std::vector<int>;
TensorElem pbw_monomial(const std::vector<PBWRoot>& roots, const PBWMonomial& n, const Bicharacter& chi);
/// PBW monomials of degree gamma using generators first..last, respecting heights.
std::vector<PBWMonomial> pbw_monomials(const std::vector<PBWRoot>& roots, const Degree& gamma, int first = 0,
                                       int last = -1);

struct GeneralRelation {
    int i = 0, j = 0;  // positions in pbw_roots, i < j
    std::map<PBWMonomial, CycNum> coeffs;  // u -> c^u (nonzero only)
    Relation relation;
};

/// Pairs i < j with Sh(l_i l_j) = (l_i, l_j) and l_i l_j not a root word.
std::vector<std::pair<int, int>> general_pairs(const std::vector<PBWRoot>& roots);
/// Coefficients c^u from the symmetrized pairing and the cocycle.
GeneralRelation general_relation(int i, int j, const std::vector<PBWRoot>& roots, const Bicharacter& chi);
/// The same coefficients read off from the class of [x_i, x_j]_c in the PBW basis of B(V).
std::map<PBWMonomial, CycNum> general_coeffs_by_projection(int i, int j, const std::vector<PBWRoot>& roots,
                                                           Nichols& B);

/// Writes x in Q(zeta_M) as an element of Q(zeta_n), n | M, when it lies there.
std::optional<CycNum> descend(const CycNum& x, int n);

}  // namespace nichols

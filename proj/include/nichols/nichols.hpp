#pragma once

// The Nichols algebra B(V) = T(V)/I(V), with I(V) the radical of the canonical form.
//
// Both engines rest on the map
//   s_gamma : T(V)_gamma -> (+)_i B(V)_{gamma - alpha_i},  x -> (d_i^K x mod I)_i,
// whose kernel is I(V)_gamma, and on feeding words to an echelon form from the
// lexicographically largest down: a word is good exactly when its image is
// independent of the images of larger words.
//
// WordEngine enumerates every word of a degree. Nichols only looks at the
// words x_i g with g good one degree lower (good words are closed under
// suffixes), and keeps B(V)_gamma as explicit matrices: left multiplication
// L_i : B_{gamma-alpha_i} -> B_gamma and derivations D_j : B_gamma -> B_{gamma-alpha_j},
// linked by d_j(x_i y) = delta_ij chi(alpha_i, deg y) y + x_i d_j(y).

#include "nichols/braided.hpp"
#include "nichols/cartanweyl.hpp"
#include "nichols/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace nichols {

/// A degree component needs more words than the configured budget.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineOptions {
    int max_degree = 8;
    uint64_t max_words = 400000;
    int max_dim = 20000;
    /// Primes tried by the modular solver before exact elimination takes over.
    int max_primes = 4;
    int jobs = 1;
};

/// Position of w among the words of its degree in lexicographic order.
uint64_t word_rank(const Word& w, const Degree& gamma);
/// All degrees of total degree n (or at most n).
std::vector<Degree> degrees_of_total(int theta, int n);
std::vector<Degree> degrees_upto(int theta, int n);

class WordEngine {
public:
    struct Component {
        Degree gamma;
        uint64_t nwords = 0;
        int dim = 0;
        std::vector<uint64_t> good;      // word ranks, in the order they were accepted
        std::vector<int> offset;         // column offset of block i, -1 if gamma_i = 0
        std::vector<int> coordinate;     // column -> coordinate on B(V)_gamma, or -1
        std::vector<SparseVec> proj;     // per word rank: coordinates of its class
    };

    WordEngine(Bicharacter chi, EngineOptions opt = {});

    const Bicharacter& chi() const { return chi_; }
    const EngineOptions& options() const { return opt_; }

    const Component& component(const Degree& gamma);
    int dim(const Degree& gamma) { return component(gamma).dim; }
    /// Computes every component of total degree <= n, using opt.jobs threads per level.
    void precompute(int n);

    /// s_gamma(x) for homogeneous x of degree gamma (only lower components are needed).
    SparseVec signature(const TensorElem& x, const Degree& gamma);
    /// x in I(V); x must be homogeneous (zero is accepted).
    bool in_radical(const TensorElem& x);
    /// Coordinates of the class of homogeneous x in B(V)_gamma.
    SparseVec project(const TensorElem& x, const Degree& gamma);

    /// Good words of degree gamma in lexicographic order.
    std::vector<Word> good_words(const Degree& gamma);
    bool is_good(const Word& w);

private:
    struct Lower {
        std::vector<const Component*> comp;
        std::vector<int> offset;
        int ncols = 0;
    };
    Lower lower(const Degree& gamma);
    std::unique_ptr<Component> build(const Degree& gamma);
    void word_signature(const Word& w, const Degree& gamma, const Lower& lo, const CycNum& scale,
                        std::map<int, CycNum>& acc) const;

    Bicharacter chi_;
    EngineOptions opt_;
    std::mutex mu_;
    std::map<Degree, std::unique_ptr<Component>> components_;
};

class Nichols {
public:
    struct Component {
        Degree gamma;
        int dim = 0;
        std::vector<Word> basis;               // good words, in the order they were accepted
        std::vector<std::vector<SparseVec>> D;  // D[j][k]: d_j(basis k) in B_{gamma-alpha_j}
        std::vector<std::vector<SparseVec>> L;  // L[i][g]: x_i (basis g of gamma-alpha_i) in B_gamma
    };

    Nichols(Bicharacter chi, EngineOptions opt = {});

    const Bicharacter& chi() const { return chi_; }
    const EngineOptions& options() const { return opt_; }

    const Component& component(const Degree& gamma);
    int dim(const Degree& gamma) { return component(gamma).dim; }
    void precompute(int n);

    /// Class of a homogeneous element of degree gamma in B(V)_gamma.
    SparseVec project(const TensorElem& x, const Degree& gamma);
    /// Class of y z, for y homogeneous and z a class of degree delta.
    SparseVec left_multiply(const TensorElem& y, const SparseVec& z, const Degree& delta);
    bool in_radical(const TensorElem& x);

    std::vector<Word> good_words(const Degree& gamma);
    bool is_good(const Word& w);

private:
    std::unique_ptr<Component> build(const Degree& gamma);
    SparseVec apply_letter(int i, const SparseVec& z, const Degree& delta);

    Bicharacter chi_;
    EngineOptions opt_;
    std::mutex mu_;
    std::map<Degree, std::unique_ptr<Component>> components_;
};

struct PBWGenerator {
    Word word;
    Degree degree;
    RootOfUnity q;       // q_{u,u}
    int ord_q = 1;
    int height = 0;      // 0 when u^t stays good for every t within the cap
};

struct PBWData {
    int max_degree = 0;
    std::vector<PBWGenerator> generators;  // by total degree, then word
    std::map<Degree, uint64_t> predicted;  // dimensions from the PBW basis, total degree <= max_degree
};

PBWData pbw_generators(Nichols& B, int max_degree);

struct HilbertRow {
    Degree degree;
    uint64_t gram_dim = 0;
    uint64_t pbw_dim = 0;
};
std::vector<HilbertRow> hilbert_series(Nichols& B, const PBWData& pbw);

/// Explicit Gram matrix of the canonical form on the words of one degree.
struct GramComponent {
    Degree gamma;
    std::vector<Word> words;                 // lexicographic order
    std::vector<std::vector<CycNum>> gram;   // gram[u][v] = (u | v)
    int rank = 0;
    std::vector<bool> good;                  // row not in the span of rows of larger words
};
GramComponent gram(const Degree& gamma, const Bicharacter& chi, int max_degree = 8);

}  // namespace nichols

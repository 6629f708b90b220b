#include "nichols/nichols.hpp"

#include "nichols/linalg.hpp"
#include "nichols/modular.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace nichols {

uint64_t word_rank(const Word& w, const Degree& gamma) {
    Degree left = gamma;
    uint64_t idx = 0;
    for (int a : w) {
        for (int b = 0; b < a; ++b) {
            if (left[b] == 0) continue;
            --left[b];
            idx += word_count(left);
            ++left[b];
        }
        --left[a];
    }
    return idx;
}

namespace {

Word word_unrank(uint64_t idx, const Degree& gamma) {
    Degree left = gamma;
    Word w;
    int n = total(gamma);
    for (int pos = 0; pos < n; ++pos) {
        for (int b = 0; b < static_cast<int>(left.size()); ++b) {
            if (left[b] == 0) continue;
            --left[b];
            uint64_t c = word_count(left);
            if (idx < c) {
                w.push_back(b);
                break;
            }
            idx -= c;
            ++left[b];
        }
    }
    return w;
}

void add_into(std::map<int, CycNum>& acc, int col, const CycNum& v) {
    auto [it, fresh] = acc.emplace(col, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SparseVec from_map(std::map<int, CycNum>&& m) {
    SparseVec s;
    s.reserve(m.size());
    for (auto& [c, v] : m)
        if (!v.is_zero()) s.emplace_back(c, std::move(v));
    return s;
}

// Dense scratch vector that remembers which columns were touched.
class DenseAccumulator {
public:
    DenseAccumulator(int ncols, int order) : zero_(CycNum::zero(order)), v_(ncols, zero_), used_(ncols, false) {}

    void add(int c, const CycNum& x) {
        touch(c);
        v_[c] += x;
    }
    void add_mul(int c, const CycNum& a, const CycNum& b) {
        touch(c);
        v_[c].add_mul(a, b);
    }
    SparseVec take() {
        std::sort(touched_.begin(), touched_.end());
        SparseVec out;
        for (int c : touched_) {
            if (!v_[c].is_zero()) out.emplace_back(c, std::move(v_[c]));
            v_[c] = zero_;
            used_[c] = false;
        }
        touched_.clear();
        return out;
    }

private:
    void touch(int c) {
        if (!used_[c]) {
            used_[c] = true;
            touched_.push_back(c);
        }
    }
    CycNum zero_;
    std::vector<CycNum> v_;
    std::vector<bool> used_;
    std::vector<int> touched_;
};


// Which candidates are independent of the earlier ones, and how the others decompose.
struct Solution {
    std::vector<int> label;        // basis label, or -1 when dependent
    std::vector<SparseVec> combo;  // for dependent candidates, over basis labels
};

std::optional<Solution> solve_exact(const std::vector<SparseVec>& sigs, const std::vector<int>& prefer, int ncols,
                                    int N) {
    Solution sol;
    sol.label.resize(sigs.size());
    sol.combo.resize(sigs.size());
    Echelon ech(ncols, N, true);
    for (size_t k = 0; k < sigs.size(); ++k) sol.label[k] = ech.insert(sigs[k], &sol.combo[k], prefer[k]);
    return sol;
}

// Exact check of sig[k] = sum_l combo[l] sig[accepted l] for every dependent k.
bool certify(const std::vector<SparseVec>& sigs, const Solution& sol, int ncols, int N) {
    std::vector<size_t> accepted;
    DenseAccumulator acc(ncols, N);
    for (size_t k = 0; k < sigs.size(); ++k) {
        if (sol.label[k] >= 0) {
            accepted.push_back(k);
            continue;
        }
        for (const auto& [l, c] : sol.combo[k])
            for (const auto& [col, v] : sigs[accepted[l]]) acc.add_mul(col, c, v);
        if (acc.take() != sigs[k]) return false;
    }
    return true;
}

// Solves the system modulo primes p = 1 (mod N), lifts the coefficients by
// CRT and rational reconstruction, and keeps the result only once certified.
// Independence mod p implies independence over Q(zeta_N).
std::optional<Solution> solve_modular(const std::vector<SparseVec>& sigs, const std::vector<int>& prefer, int ncols,
                                      int N, int max_primes) {
    const size_t n = sigs.size();
    PrimeSequence primes(N);
    std::vector<int> best_label;
    int best_rank = -1;
    std::vector<uint64_t> used;
    // residues[k][prime][l * phi + t]: power-basis coefficient t of combo label l
    std::vector<std::vector<std::vector<uint64_t>>> residues(n);
    int phi = 0;
    for (int attempt = 0; attempt < max_primes; ++attempt) {
        const uint64_t p = primes.next();
        ModField F(N, p);
        phi = F.lanes();
        std::vector<int> label(n);
        std::vector<std::vector<uint64_t>> res(n);
        int rank = 0;
        try {
            ModEchelon E(F, ncols);
            std::vector<uint64_t> x(static_cast<size_t>(ncols) * phi);
            std::vector<uint64_t> combo;
            for (size_t k = 0; k < n; ++k) {
                std::fill(x.begin(), x.end(), 0);
                for (const auto& [c, v] : sigs[k]) F.image(v, &x[static_cast<size_t>(c) * phi]);
                label[k] = E.insert(x, &combo, prefer[k]);
                if (label[k] >= 0) continue;
                const size_t nl = combo.size() / phi;
                res[k].resize(nl * phi);
                for (size_t l = 0; l < nl; ++l) {
                    auto a = F.coefficients(&combo[l * phi]);
                    std::copy(a.begin(), a.end(), res[k].begin() + static_cast<long>(l * phi));
                }
            }
            rank = E.rank();
        } catch (const UnluckyPrime&) {
            continue;
        }
        if (rank > best_rank) {
            best_rank = rank;
            best_label = label;
            used.clear();
            for (auto& r : residues) r.clear();
        } else if (rank < best_rank || label != best_label) {
            continue;
        }
        used.push_back(p);
        for (size_t k = 0; k < n; ++k)
            if (label[k] < 0) residues[k].push_back(std::move(res[k]));

        // lift
        mpz_class M = 1;
        std::vector<mpz_class> pz;
        for (uint64_t q : used) {
            mpz_class z;
            mpz_import(z.get_mpz_t(), 1, 1, sizeof(q), 0, 0, &q);
            pz.push_back(z);
            M *= z;
        }
        Solution sol;
        sol.label = best_label;
        sol.combo.resize(n);
        bool ok = true;
        for (size_t k = 0; k < n && ok; ++k) {
            if (best_label[k] >= 0) continue;
            const size_t len = residues[k][0].size();
            for (size_t l = 0; l * phi < len && ok; ++l) {
                std::vector<Rational> coeffs(phi);
                bool nonzero = false;
                for (int tt = 0; tt < phi && ok; ++tt) {
                    const size_t idx = l * phi + tt;
                    bool all_zero = true;
                    for (const auto& r : residues[k]) all_zero &= r[idx] == 0;
                    if (all_zero) continue;
                    mpz_class acc = 0, mod = 1;
                    for (size_t u = 0; u < used.size(); ++u) {
                        // acc + mod * s = r (mod p_u)
                        mpz_class r;
                        uint64_t rv = residues[k][u][idx];
                        mpz_import(r.get_mpz_t(), 1, 1, sizeof(rv), 0, 0, &rv);
                        mpz_class diff = (r - acc) % pz[u];
                        if (diff < 0) diff += pz[u];
                        mpz_class inv;
                        mpz_class mm = mod % pz[u];
                        mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz[u].get_mpz_t());
                        acc += mod * ((diff * inv) % pz[u]);
                        mod *= pz[u];
                    }
                    auto q = rational_reconstruct(acc, M);
                    if (!q) {
                        ok = false;
                        break;
                    }
                    coeffs[tt] = *q;
                    nonzero = true;
                }
                if (ok && nonzero) sol.combo[k].emplace_back(static_cast<int>(l), CycNum::from_coeffs(N, coeffs));
            }
        }
        if (ok && certify(sigs, sol, ncols, N)) return sol;
    }
    return std::nullopt;
}
}  // namespace

std::vector<Degree> degrees_of_total(int theta, int n) {
    std::vector<Degree> out;
    Degree d(theta, 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == theta - 1) {
            d[i] = rest;
            out.push_back(d);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            d[i] = k;
            rec(i + 1, rest - k);
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Degree> degrees_upto(int theta, int n) {
    std::vector<Degree> out;
    for (int k = 0; k <= n; ++k)
        for (auto& d : degrees_of_total(theta, k)) out.push_back(d);
    return out;
}

namespace {

// Calls fn on every degree of total <= n, level by level, with up to jobs threads per level.
void run_levels(int theta, int n, int jobs, const std::function<void(const Degree&)>& fn) {
    jobs = std::max(1, jobs);
    for (int level = 0; level <= n; ++level) {
        auto degs = degrees_of_total(theta, level);
        if (jobs == 1) {
            for (const auto& d : degs) fn(d);
            continue;
        }
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex err_mu;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t k; (k = next++) < degs.size();) {
                    try {
                        fn(degs[k]);
                    } catch (...) {
                        std::lock_guard lock(err_mu);
                        if (!err) err = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace

WordEngine::WordEngine(Bicharacter chi, EngineOptions opt) : chi_(std::move(chi)), opt_(opt) {}

const WordEngine::Component& WordEngine::component(const Degree& gamma) {
    {
        std::lock_guard lock(mu_);
        auto it = components_.find(gamma);
        if (it != components_.end()) return *it->second;
    }
    auto c = build(gamma);
    std::lock_guard lock(mu_);
    auto [it, fresh] = components_.emplace(gamma, std::move(c));
    return *it->second;
}

void WordEngine::precompute(int n) {
    run_levels(chi_.theta(), n, opt_.jobs, [this](const Degree& d) { component(d); });
}

std::unique_ptr<WordEngine::Component> WordEngine::build(const Degree& gamma) {
    const int N = chi_.N();
    auto comp = std::make_unique<Component>();
    comp->gamma = gamma;
    comp->nwords = word_count(gamma);
    if (total(gamma) == 0) {
        comp->dim = 1;
        comp->good = {0};
        comp->proj = {SparseVec{{0, CycNum::one(N)}}};
        return comp;
    }
    if (comp->nwords > opt_.max_words)
        throw CapExceeded("degree " + degree_str(gamma) + " has " + std::to_string(comp->nwords) +
                          " words, above the budget of " + std::to_string(opt_.max_words));
    Lower lo = lower(gamma);
    const int ncols = lo.ncols;
    comp->offset = lo.offset;
    Echelon ech(ncols, N);
    auto words = words_of_degree(gamma);
    std::vector<SparseVec> sigs(words.size());
    const CycNum one = CycNum::one(N);
    for (size_t k = words.size(); k-- > 0;) {
        std::map<int, CycNum> acc;
        word_signature(words[k], gamma, lo, one, acc);
        sigs[k] = from_map(std::move(acc));
        if (ech.insert(sigs[k]) >= 0) comp->good.push_back(k);
    }
    comp->dim = ech.rank();
    comp->coordinate.assign(ncols, -1);
    auto piv = ech.pivots();
    for (size_t l = 0; l < piv.size(); ++l) comp->coordinate[piv[l]] = static_cast<int>(l);
    comp->proj.resize(words.size());
    for (size_t k = 0; k < words.size(); ++k) {
        SparseVec p;
        for (auto& [c, v] : sigs[k])
            if (comp->coordinate[c] >= 0) p.emplace_back(comp->coordinate[c], std::move(v));
        std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        comp->proj[k] = std::move(p);
    }
    return comp;
}

WordEngine::Lower WordEngine::lower(const Degree& gamma) {
    const int t = chi_.theta();
    Lower lo;
    lo.comp.assign(t, nullptr);
    lo.offset.assign(t, -1);
    int ncols = 0;
    for (int i = 0; i < t; ++i) {
        if (gamma[i] == 0) continue;
        lo.comp[i] = &component(gamma - unit_degree(t, i));
        lo.offset[i] = ncols;
        ncols += lo.comp[i]->dim;
    }
    lo.ncols = ncols;
    return lo;
}

void WordEngine::word_signature(const Word& w, const Degree& gamma, const Lower& lo, const CycNum& scale,
                             std::map<int, CycNum>& acc) const {
    const int t = chi_.theta();
    Degree suffix(t, 0);
    Degree ai(t, 0);
    for (size_t k = w.size(); k-- > 0;) {
        const int i = w[k];
        Word rest(w);
        rest.erase(rest.begin() + k);
        ai[i] = 1;
        CycNum coef = scale.times_root(chi_.chi_exp(ai, suffix));
        ai[i] = 0;
        for (const auto& [c, v] : lo.comp[i]->proj[word_rank(rest, gamma - unit_degree(t, i))])
            add_into(acc, lo.offset[i] + c, coef * v);
        ++suffix[i];
    }
}

SparseVec WordEngine::signature(const TensorElem& x, const Degree& gamma) {
    Lower lo = lower(gamma);
    std::map<int, CycNum> acc;
    for (const auto& [w, c] : x.terms()) {
        if (degree_of(w, chi_.theta()) != gamma) throw std::invalid_argument("signature: element not of the given degree");
        word_signature(w, gamma, lo, c, acc);
    }
    return from_map(std::move(acc));
}

bool WordEngine::in_radical(const TensorElem& x) {
    if (x.is_zero()) return true;
    auto d = x.homogeneous_degree(chi_.theta());
    if (!d) throw std::invalid_argument("in_radical needs a homogeneous element");
    if (total(*d) == 0) return false;
    if (total(*d) > opt_.max_degree) throw CapExceeded("degree " + degree_str(*d) + " exceeds the degree cap");
    return signature(x, *d).empty();
}

SparseVec WordEngine::project(const TensorElem& x, const Degree& gamma) {
    const Component& comp = component(gamma);
    std::map<int, CycNum> acc;
    for (const auto& [w, c] : x.terms()) {
        if (degree_of(w, chi_.theta()) != gamma) throw std::invalid_argument("project: element not of the given degree");
        for (const auto& [col, v] : comp.proj[word_rank(w, gamma)]) add_into(acc, col, c * v);
    }
    return from_map(std::move(acc));
}

std::vector<Word> WordEngine::good_words(const Degree& gamma) {
    const Component& comp = component(gamma);
    std::vector<uint64_t> g = comp.good;
    std::sort(g.begin(), g.end());
    std::vector<Word> out;
    for (auto r : g) out.push_back(word_unrank(r, gamma));
    return out;
}

bool WordEngine::is_good(const Word& w) {
    Degree d = degree_of(w, chi_.theta());
    const Component& comp = component(d);
    uint64_t r = word_rank(w, d);
    return std::find(comp.good.begin(), comp.good.end(), r) != comp.good.end();
}

Nichols::Nichols(Bicharacter chi, EngineOptions opt) : chi_(std::move(chi)), opt_(opt) {}

const Nichols::Component& Nichols::component(const Degree& gamma) {
    {
        std::lock_guard lock(mu_);
        auto it = components_.find(gamma);
        if (it != components_.end()) return *it->second;
    }
    auto c = build(gamma);
    std::lock_guard lock(mu_);
    auto [it, fresh] = components_.emplace(gamma, std::move(c));
    return *it->second;
}

void Nichols::precompute(int n) {
    run_levels(chi_.theta(), n, opt_.jobs, [this](const Degree& d) { component(d); });
}

std::unique_ptr<Nichols::Component> Nichols::build(const Degree& gamma) {
    const int t = chi_.theta();
    const int N = chi_.N();
    auto comp = std::make_unique<Component>();
    comp->gamma = gamma;
    if (!nonnegative(gamma)) return comp;
    if (total(gamma) == 0) {
        comp->dim = 1;
        comp->basis = {Word{}};
        return comp;
    }
    std::vector<const Component*> low(t, nullptr);
    std::vector<int> off(t, -1);
    int ncols = 0;
    for (int i = 0; i < t; ++i) {
        if (gamma[i] == 0) continue;
        low[i] = &component(gamma - unit_degree(t, i));
        off[i] = ncols;
        ncols += low[i]->dim;
    }
    struct Candidate {
        Word word;
        int i;
        int g;
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < t; ++i)
        if (low[i])
            for (int g = 0; g < low[i]->dim; ++g) cands.push_back({concat(Word{i}, low[i]->basis[g]), i, g});
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.word > b.word; });

    std::vector<SparseVec> sigs(cands.size());
    std::vector<int> prefer(cands.size());
    DenseAccumulator acc(ncols, N);
    for (size_t k = 0; k < cands.size(); ++k) {
        const int i = cands[k].i;
        const int g = cands[k].g;
        const Degree rest = gamma - unit_degree(t, i);
        acc.add(off[i] + g, CycNum::root(N, chi_.chi_exp(unit_degree(t, i), rest)));
        for (int j = 0; j < t; ++j) {
            if (rest[j] == 0) continue;
            for (const auto& [c, v] : low[i]->D[j][g])
                for (const auto& [r, w] : low[j]->L[i][c]) acc.add_mul(off[j] + r, v, w);
        }
        sigs[k] = acc.take();
        prefer[k] = off[i] + g;
    }
    auto sol = solve_modular(sigs, prefer, ncols, N, opt_.max_primes);
    if (!sol) sol = solve_exact(sigs, prefer, ncols, N);

    comp->L.assign(t, {});
    for (int i = 0; i < t; ++i)
        if (low[i]) comp->L[i].resize(low[i]->dim);
    std::vector<const SparseVec*> basis_sigs;
    for (size_t k = 0; k < cands.size(); ++k) {
        const auto& cand = cands[k];
        if (sol->label[k] >= 0) {
            comp->basis.push_back(cand.word);
            comp->L[cand.i][cand.g] = {{sol->label[k], CycNum::one(N)}};
            basis_sigs.push_back(&sigs[k]);
        } else {
            comp->L[cand.i][cand.g] = std::move(sol->combo[k]);
        }
    }
    comp->dim = static_cast<int>(basis_sigs.size());
    if (comp->dim > opt_.max_dim)
        throw CapExceeded("B(V) in degree " + degree_str(gamma) + " has dimension " + std::to_string(comp->dim) +
                          ", above the budget of " + std::to_string(opt_.max_dim));
    comp->D.assign(t, {});
    for (int j = 0; j < t; ++j) {
        if (!low[j]) continue;
        comp->D[j].resize(comp->dim);
        for (int k = 0; k < comp->dim; ++k)
            for (const auto& [c, v] : *basis_sigs[k])
                if (c >= off[j] && c < off[j] + low[j]->dim) comp->D[j][k].emplace_back(c - off[j], v);
    }
    return comp;
}

SparseVec Nichols::apply_letter(int i, const SparseVec& z, const Degree& delta) {
    const Component& up = component(delta + unit_degree(chi_.theta(), i));
    std::map<int, CycNum> acc;
    for (const auto& [c, v] : z)
        for (const auto& [r, w] : up.L[i][c]) add_into(acc, r, v * w);
    return from_map(std::move(acc));
}

SparseVec Nichols::left_multiply(const TensorElem& y, const SparseVec& z, const Degree& delta) {
    const int t = chi_.theta();
    // L_w z for every suffix w of a word of y, shared across words
    std::map<Word, SparseVec> memo;
    std::function<const SparseVec&(const Word&)> apply = [&](const Word& w) -> const SparseVec& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        SparseVec r;
        if (w.empty()) {
            r = z;
        } else {
            Word tail(w.begin() + 1, w.end());
            const SparseVec& inner = apply(tail);
            r = apply_letter(w[0], inner, delta + degree_of(tail, t));
        }
        return memo.emplace(w, std::move(r)).first->second;
    };
    std::map<int, CycNum> acc;
    for (const auto& [w, c] : y.terms())
        for (const auto& [r, v] : apply(w)) add_into(acc, r, c * v);
    return from_map(std::move(acc));
}

SparseVec Nichols::project(const TensorElem& x, const Degree& gamma) {
    const int t = chi_.theta();
    for (const auto& [w, c] : x.terms())
        if (degree_of(w, t) != gamma) throw std::invalid_argument("project: element not of the given degree");
    return left_multiply(x, SparseVec{{0, CycNum::one(chi_.N())}}, Degree(t, 0));
}

bool Nichols::in_radical(const TensorElem& x) {
    if (x.is_zero()) return true;
    auto d = x.homogeneous_degree(chi_.theta());
    if (!d) throw std::invalid_argument("in_radical needs a homogeneous element");
    return project(x, *d).empty();
}

std::vector<Word> Nichols::good_words(const Degree& gamma) {
    std::vector<Word> out = component(gamma).basis;
    std::sort(out.begin(), out.end());
    return out;
}

bool Nichols::is_good(const Word& w) {
    const auto& b = component(degree_of(w, chi_.theta())).basis;
    return std::find(b.begin(), b.end(), w) != b.end();
}

PBWData pbw_generators(Nichols& B, int max_degree) {
    const int t = B.chi().theta();
    PBWData out;
    out.max_degree = max_degree;
    B.precompute(max_degree);
    for (const auto& d : degrees_upto(t, max_degree)) {
        if (total(d) == 0) continue;
        for (const auto& w : B.good_words(d)) {
            if (!is_lyndon(w)) continue;
            PBWGenerator g;
            g.word = w;
            g.degree = d;
            g.q = B.chi().chi_root(d, d);
            g.ord_q = g.q.multiplicative_order();
            for (int p = 2; p * total(d) <= max_degree; ++p)
                if (!B.is_good(power(w, p))) {
                    g.height = p;
                    break;
                }
            out.generators.push_back(g);
        }
    }
    std::map<Degree, uint64_t> series{{Degree(t, 0), 1}};
    for (const auto& g : out.generators) {
        std::map<Degree, uint64_t> next;
        for (const auto& [d, c] : series)
            for (int k = 0; g.height == 0 || k < g.height; ++k) {
                Degree e = d + k * g.degree;
                if (total(e) > max_degree) break;
                next[e] += c;
            }
        series = std::move(next);
    }
    out.predicted = std::move(series);
    return out;
}

std::vector<HilbertRow> hilbert_series(Nichols& B, const PBWData& pbw) {
    std::vector<HilbertRow> rows;
    for (const auto& d : degrees_upto(B.chi().theta(), pbw.max_degree)) {
        HilbertRow r;
        r.degree = d;
        r.gram_dim = static_cast<uint64_t>(B.dim(d));
        auto it = pbw.predicted.find(d);
        r.pbw_dim = it == pbw.predicted.end() ? 0 : it->second;
        rows.push_back(r);
    }
    return rows;
}

namespace {

CycNum pair_words(const Word& u, const Word& v, const Bicharacter& chi, std::map<std::pair<Word, Word>, CycNum>& memo) {
    if (v.empty()) return CycNum::integer(chi.N(), u.empty() ? 1 : 0);
    auto key = std::make_pair(u, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int t = chi.theta();
    const int i = v.back();
    Word head(v.begin(), v.end() - 1);
    CycNum sum = CycNum::zero(chi.N());
    Degree suffix(t, 0);
    for (size_t k = u.size(); k-- > 0;) {
        if (u[k] == i) {
            Word rest(u);
            rest.erase(rest.begin() + k);
            CycNum p = pair_words(rest, head, chi, memo);
            if (!p.is_zero()) sum += p.times_root(chi.chi_exp(unit_degree(t, i), suffix));
        }
        ++suffix[u[k]];
    }
    memo.emplace(key, sum);
    return sum;
}

}  // namespace

GramComponent gram(const Degree& gamma, const Bicharacter& chi, int max_degree) {
    GramComponent g;
    g.gamma = gamma;
    g.words = words_of_degree(gamma, max_degree);
    std::map<std::pair<Word, Word>, CycNum> memo;
    const size_t n = g.words.size();
    g.gram.assign(n, std::vector<CycNum>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) g.gram[a][b] = pair_words(g.words[a], g.words[b], chi, memo);
    Echelon ech(static_cast<int>(n), chi.N());
    g.good.assign(n, false);
    for (size_t a = n; a-- > 0;) g.good[a] = ech.insert(to_sparse(g.gram[a])) >= 0;
    g.rank = ech.rank();
    return g;
}

}  // namespace nichols

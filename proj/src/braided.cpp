#include "nichols/braided.hpp"

#include <stdexcept>

namespace nichols {

TensorElem TensorElem::word(const Word& w, const CycNum& c) {
    TensorElem t;
    t.add_term(w, c);
    return t;
}

CycNum TensorElem::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CycNum() : it->second;
}

void TensorElem::add_term(const Word& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<Degree> TensorElem::homogeneous_degree(int theta) const {
    if (terms_.empty()) return std::nullopt;
    Degree d = degree_of(terms_.begin()->first, theta);
    for (const auto& [w, c] : terms_)
        if (degree_of(w, theta) != d) return std::nullopt;
    return d;
}

int TensorElem::length() const {
    if (terms_.empty()) return -1;
    size_t l = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != l) return -1;
    return static_cast<int>(l);
}

TensorElem TensorElem::operator-() const {
    TensorElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    TensorElem r;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) r.add_term(concat(u, v), cu * cv);
    return r;
}

TensorElem operator*(const CycNum& c, const TensorElem& a) {
    TensorElem r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : a.terms_) r.add_term(w, c * x);
    return r;
}

TensorElem TensorElem::pow(int n, int order) const {
    TensorElem r = unit(order);
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

std::string TensorElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int a : w) mono += "x" + std::to_string(a + 1);
        if (mono.empty()) mono = "1";
        if (c.is_one())
            s += mono;
        else
            s += "(" + c.str() + ")*" + mono;
    }
    return s;
}

CycNum braiding_scalar(const Degree& a, const Degree& b, const Bicharacter& chi) { return chi.chi(a, b); }

TensorElem bracket(const TensorElem& x, const TensorElem& y, const Bicharacter& chi) {
    if (x.is_zero() || y.is_zero()) return {};
    auto dx = x.homogeneous_degree(chi.theta());
    auto dy = y.homogeneous_degree(chi.theta());
    if (!dx || !dy) throw std::invalid_argument("braided bracket needs homogeneous arguments");
    return x * y - chi.chi(*dx, *dy) * (y * x);
}

namespace {

const TensorElem& hyperletter_memo(const Word& u, const Bicharacter& chi, std::map<Word, TensorElem>& memo) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    TensorElem value;
    if (u.size() == 1) {
        value = TensorElem::letter(u[0], chi.N());
    } else {
        auto sp = shirshov_split(u);
        TensorElem l = hyperletter_memo(sp.left, chi, memo);
        TensorElem r = hyperletter_memo(sp.right, chi, memo);
        value = bracket(l, r, chi);
    }
    return memo.emplace(u, std::move(value)).first->second;
}

}  // namespace

TensorElem hyperletter(const Word& u, const Bicharacter& chi) {
    if (u.empty() || !is_lyndon(u)) throw std::invalid_argument("hyperletter of a non-Lyndon word");
    std::map<Word, TensorElem> memo;
    return hyperletter_memo(u, chi, memo);
}

TensorElem ad_c_power(int i, int m, const TensorElem& y, const Bicharacter& chi) {
    TensorElem r = y;
    TensorElem xi = TensorElem::letter(i, chi.N());
    for (int k = 0; k < m; ++k) r = bracket(xi, r, chi);
    return r;
}

TensorSquare multiply(const TensorSquare& a, const TensorSquare& b, const Bicharacter& chi) {
    const int t = chi.theta();
    TensorSquare r;
    for (const auto& [ab, ca] : a) {
        Degree db = degree_of(ab.second, t);
        for (const auto& [cd, cb] : b) {
            CycNum c = ca * cb * chi.chi(db, degree_of(cd.first, t));
            auto key = std::make_pair(concat(ab.first, cd.first), concat(ab.second, cd.second));
            auto [it, fresh] = r.emplace(key, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

TensorSquare coproduct(const TensorElem& x, const Bicharacter& chi) {
    TensorSquare out;
    for (const auto& [w, c] : x.terms()) {
        TensorSquare d{{{Word{}, Word{}}, CycNum::one(chi.N())}};
        for (int a : w) {
            TensorSquare prim{{{Word{a}, Word{}}, CycNum::one(chi.N())}, {{Word{}, Word{a}}, CycNum::one(chi.N())}};
            d = multiply(d, prim, chi);
        }
        for (auto& [k, v] : d) {
            auto [it, fresh] = out.emplace(k, c * v);
            if (!fresh) {
                it->second += c * v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

TensorElem skew_derivation_K(int i, const TensorElem& x, const Bicharacter& chi) {
    const int t = chi.theta();
    const Degree ai = unit_degree(t, i);
    TensorElem r;
    for (const auto& [w, c] : x.terms()) {
        Degree suffix(t, 0);
        for (size_t k = w.size(); k-- > 0;) {
            if (w[k] == i) {
                Word rest(w);
                rest.erase(rest.begin() + k);
                r.add_term(rest, c.times_root(chi.chi_exp(ai, suffix)));
            }
            ++suffix[w[k]];
        }
    }
    return r;
}

TensorElem skew_derivation_L(int i, const TensorElem& x, const Bicharacter& chi) {
    const int t = chi.theta();
    const Degree ai = unit_degree(t, i);
    TensorElem r;
    for (const auto& [w, c] : x.terms()) {
        Degree prefix(t, 0);
        for (size_t k = 0; k < w.size(); ++k) {
            if (w[k] == i) {
                Word rest(w);
                rest.erase(rest.begin() + k);
                r.add_term(rest, c.times_root(chi.chi_exp(prefix, ai)));
            }
            ++prefix[w[k]];
        }
    }
    return r;
}

namespace {

CycNum pair_word(const TensorElem& x, const Word& w, const Bicharacter& chi) {
    if (x.is_zero()) return CycNum();
    if (w.empty()) return x.coeff({});
    Word head(w.begin(), w.end() - 1);
    return pair_word(skew_derivation_K(w.back(), x, chi), head, chi);
}

TensorElem restrict_to(const TensorElem& x, const Degree& d, int theta) {
    TensorElem r;
    for (const auto& [w, c] : x.terms())
        if (degree_of(w, theta) == d) r.add_term(w, c);
    return r;
}

CycNum pair_words_coproduct(const Word& a, const Word& b, const Bicharacter& chi,
                            std::map<std::pair<Word, Word>, CycNum>& memo) {
    const int t = chi.theta();
    if (degree_of(a, t) != degree_of(b, t)) return CycNum();
    if (b.size() <= 1) return CycNum::one(chi.N());
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    size_t mid = b.size() / 2;
    Word b1(b.begin(), b.begin() + mid), b2(b.begin() + mid, b.end());
    Degree d1 = degree_of(b1, t);
    CycNum sum = CycNum::zero(chi.N());
    for (const auto& [ab, c] : coproduct(TensorElem::word(a, CycNum::one(chi.N())), chi)) {
        if (degree_of(ab.first, t) != d1) continue;
        CycNum left = pair_words_coproduct(ab.first, b1, chi, memo);
        if (left.is_zero()) continue;
        sum += c * left * pair_words_coproduct(ab.second, b2, chi, memo);
    }
    memo.emplace(key, sum);
    return sum;
}

}  // namespace

CycNum pairing(const TensorElem& x, const TensorElem& y, const Bicharacter& chi) {
    CycNum sum = CycNum::zero(chi.N());
    for (const auto& [w, c] : y.terms()) {
        TensorElem xr = restrict_to(x, degree_of(w, chi.theta()), chi.theta());
        if (xr.is_zero()) continue;
        sum += c * pair_word(xr, w, chi);
    }
    return sum;
}

CycNum pairing_via_coproduct(const TensorElem& x, const TensorElem& y, const Bicharacter& chi) {
    std::map<std::pair<Word, Word>, CycNum> memo;
    CycNum sum = CycNum::zero(chi.N());
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms()) {
            CycNum p = pair_words_coproduct(u, v, chi, memo);
            if (!p.is_zero()) sum += cu * cv * p;
        }
    return sum;
}

std::vector<HyperwordTerm> hyperword_expansion(const TensorElem& x, const Bicharacter& chi) {
    std::map<Word, TensorElem> memo;
    std::vector<HyperwordTerm> out;
    TensorElem rem = x;
    while (!rem.is_zero()) {
        auto [w, c] = *rem.terms().begin();
        if (w.empty()) {
            out.push_back({{}, c});
            rem.add_term(w, -c);
            continue;
        }
        auto factors = lyndon_decomposition(w);
        TensorElem h = TensorElem::unit(chi.N());
        for (const auto& f : factors) h = h * hyperletter_memo(f, chi, memo);
        out.push_back({factors, c});
        rem -= c * h;
    }
    return out;
}

}  // namespace nichols

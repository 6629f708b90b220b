#pragma once

// The braided tensor algebra T(V) of a diagonal braiding: elements, braided
// brackets, hyperletters, coproduct, skew derivations and the canonical form.

#include "nichols/cartanweyl.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

class TensorElem {
public:
    TensorElem() = default;
    static TensorElem word(const Word& w, const CycNum& c);
    static TensorElem unit(int order) { return word({}, CycNum::one(order)); }
    static TensorElem letter(int i, int order) { return word({i}, CycNum::one(order)); }

    const std::map<Word, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    CycNum coeff(const Word& w) const;
    void add_term(const Word& w, const CycNum& c);

    /// Degree shared by all terms; nullopt when zero or mixed.
    std::optional<Degree> homogeneous_degree(int theta) const;
    /// Total length shared by all terms, or -1.
    int length() const;

    TensorElem operator-() const;
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    /// Concatenation product of T(V).
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
    friend TensorElem operator*(const CycNum& c, const TensorElem& a);
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.terms_ == b.terms_; }
    TensorElem pow(int n, int order) const;

    std::string str() const;

private:
    std::map<Word, CycNum> terms_;
};

/// Elements of T(V) (x) T(V), keyed by (left word, right word).
using TensorSquare = std::map<std::pair<Word, Word>, CycNum>;

CycNum braiding_scalar(const Degree& a, const Degree& b, const Bicharacter& chi);

/// x y - chi(deg x, deg y) y x; throws std::invalid_argument on inhomogeneous input.
TensorElem bracket(const TensorElem& x, const TensorElem& y, const Bicharacter& chi);
/// [u]_c via the Shirshov decomposition; throws for non-Lyndon u.
TensorElem hyperletter(const Word& u, const Bicharacter& chi);
/// (ad_c x_i)^m y.
TensorElem ad_c_power(int i, int m, const TensorElem& y, const Bicharacter& chi);

/// Braided coproduct, built as an algebra map with
/// (a (x) b)(c (x) d) = chi(deg b, deg c) ac (x) bd.
TensorSquare coproduct(const TensorElem& x, const Bicharacter& chi);
TensorSquare multiply(const TensorSquare& a, const TensorSquare& b, const Bicharacter& chi);

TensorElem skew_derivation_K(int i, const TensorElem& x, const Bicharacter& chi);
TensorElem skew_derivation_L(int i, const TensorElem& x, const Bicharacter& chi);

/// Canonical form, by stripping the last letter of the right argument:
/// (x | y x_i) = (d_i^K x | y).
CycNum pairing(const TensorElem& x, const TensorElem& y, const Bicharacter& chi);
/// The same form through (x | y y') = (x_(1) | y)(x_(2) | y') and the full coproduct.
CycNum pairing_via_coproduct(const TensorElem& x, const TensorElem& y, const Bicharacter& chi);

/// A product [l_1]_c ... [l_r]_c of hyperletters with its coefficient.
struct HyperwordTerm {
    std::vector<Word> factors;
    CycNum coeff;
};
/// Expansion in the basis of hyperwords l_1 >= ... >= l_r (Lyndon decomposition order).
std::vector<HyperwordTerm> hyperword_expansion(const TensorElem& x, const Bicharacter& chi);

}  // namespace nichols

#include "nichols/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nichols {

Degree degree_of(const Word& w, int theta) {
    Degree d(theta, 0);
    for (int a : w) {
        if (a < 0 || a >= theta) throw std::out_of_range("letter outside alphabet");
        ++d[a];
    }
    return d;
}

int total(const Degree& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

Degree unit_degree(int theta, int i) {
    Degree d(theta, 0);
    d.at(i) = 1;
    return d;
}

Degree operator+(const Degree& a, const Degree& b) {
    Degree r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

Degree operator-(const Degree& a, const Degree& b) {
    Degree r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

Degree operator*(int k, const Degree& a) {
    Degree r(a);
    for (int& x : r) x *= k;
    return r;
}

bool nonnegative(const Degree& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(const Word& w, int n) {
    Word r;
    r.reserve(w.size() * std::max(n, 0));
    for (int k = 0; k < n; ++k) r.insert(r.end(), w.begin(), w.end());
    return r;
}

bool is_lyndon(const Word& u) {
    if (u.empty()) throw std::invalid_argument("is_lyndon: empty word");
    for (size_t k = 1; k < u.size(); ++k)
        if (!std::lexicographical_compare(u.begin(), u.end(), u.begin() + k, u.end())) return false;
    return true;
}

std::vector<Word> lyndon_decomposition(const Word& u) {
    if (u.empty()) throw std::invalid_argument("lyndon_decomposition: empty word");
    // Duval
    std::vector<Word> out;
    size_t n = u.size(), i = 0;
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && u[k] <= u[j]) {
            k = u[k] < u[j] ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(u.begin() + i, u.begin() + i + (j - k));
            i += j - k;
        }
    }
    return out;
}

ShirshovSplit shirshov_split(const Word& u) {
    if (u.size() < 2 || !is_lyndon(u)) throw std::invalid_argument("shirshov_split: needs a Lyndon word of length >= 2");
    size_t best = 1;
    for (size_t k = 2; k < u.size(); ++k)
        if (std::lexicographical_compare(u.begin() + k, u.end(), u.begin() + best, u.end())) best = k;
    return {Word(u.begin(), u.begin() + best), Word(u.begin() + best, u.end())};
}

int deglex_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size() ? 1 : -1;
    if (u == v) return 0;
    return u > v ? 1 : -1;
}

uint64_t word_count(const Degree& gamma) {
    // multinomial built up one letter class at a time: C(n, k) products
    unsigned __int128 r = 1;
    int n = 0;
    for (int k : gamma) {
        for (int t = 1; t <= k; ++t) {
            ++n;
            r = r * n / t;
            if (r > UINT64_MAX) return UINT64_MAX;
        }
    }
    return static_cast<uint64_t>(r);
}

std::vector<Word> words_of_degree(const Degree& gamma, int max_total) {
    if (!nonnegative(gamma)) return {};
    if (max_total >= 0 && total(gamma) > max_total) throw std::length_error("degree exceeds the configured cap");
    Word w;
    for (size_t i = 0; i < gamma.size(); ++i) w.insert(w.end(), gamma[i], static_cast<int>(i));
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Word> lyndon_words_of_degree(const Degree& gamma) {
    std::vector<Word> out;
    if (total(gamma) == 0) return out;
    for (auto& w : words_of_degree(gamma))
        if (is_lyndon(w)) out.push_back(std::move(w));
    return out;
}

std::string word_str(const Word& w) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(w[k] + 1);
    }
    return s;
}

std::string degree_str(const Degree& d) {
    std::string s = "(";
    for (size_t k = 0; k < d.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(d[k]);
    }
    return s + ")";
}

Word parse_word(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    Word w;
    int a;
    while (in >> a) {
        if (a < 1) throw std::invalid_argument("letters are 1-based");
        w.push_back(a - 1);
    }
    if (!in.eof()) throw std::invalid_argument("bad word: " + s);
    return w;
}

}  // namespace nichols

#pragma once

// Words over the alphabet {0, ..., theta-1} (printed 1-based), Z^theta degrees,
// Lyndon words and the deg-lex order used for PBW bases.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

using Word = std::vector<int>;
using Degree = std::vector<int>;

Degree degree_of(const Word& w, int theta);
int total(const Degree& d);
Degree unit_degree(int theta, int i);
Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree operator*(int k, const Degree& a);
bool nonnegative(const Degree& d);

Word concat(const Word& a, const Word& b);
Word power(const Word& w, int n);

bool is_lyndon(const Word& u);
std::vector<Word> lyndon_decomposition(const Word& u);

struct ShirshovSplit {
    Word left;
    Word right;
};
/// u = left * right with right the lexicographically smallest proper suffix.
ShirshovSplit shirshov_split(const Word& u);

/// Positive when u is greater than v in deg-lex (shorter words are greater).
int deglex_compare(const Word& u, const Word& v);

/// All words of degree gamma, in lexicographic order. Throws when the
/// total degree exceeds max_total (a negative bound disables the check).
std::vector<Word> words_of_degree(const Degree& gamma, int max_total = -1);
std::vector<Word> lyndon_words_of_degree(const Degree& gamma);
/// Number of words of degree gamma, saturating at UINT64_MAX.
uint64_t word_count(const Degree& gamma);

std::string word_str(const Word& w);
std::string degree_str(const Degree& d);
/// Parses 1-based letters separated by spaces or commas.
Word parse_word(const std::string& s);

}  // namespace nichols

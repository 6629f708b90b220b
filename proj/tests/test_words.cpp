#include "doctest.h"
#include "nichols/words.hpp"

#include <functional>
#include <random>

using namespace nichols;

namespace {

// every way of cutting w into non-increasing Lyndon factors
int count_lyndon_factorizations(const Word& w) {
    int count = 0;
    std::vector<Word> parts;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == w.size()) {
            ++count;
            return;
        }
        for (size_t end = pos + 1; end <= w.size(); ++end) {
            Word f(w.begin() + pos, w.begin() + end);
            if (!is_lyndon(f)) continue;
            if (!parts.empty() && parts.back() < f) continue;
            parts.push_back(f);
            rec(end);
            parts.pop_back();
        }
    };
    rec(0);
    return count;
}

std::vector<Word> all_words(int theta, int len) {
    std::vector<Word> out{{}};
    for (int l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (auto& w : out)
            for (int a = 0; a < theta; ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(x);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("Lyndon recognition") {
    CHECK(is_lyndon(parse_word("1 1 2")));
    CHECK(!is_lyndon(parse_word("1 2 1")));
    CHECK(is_lyndon(parse_word("1")));
    CHECK(!is_lyndon(parse_word("1 1")));
    CHECK_THROWS(is_lyndon(Word{}));
}

TEST_CASE("Lyndon decomposition") {
    auto f = lyndon_decomposition(parse_word("2 1 1 2"));
    REQUIRE(f.size() == 2);
    CHECK(word_str(f[0]) == "2");
    CHECK(word_str(f[1]) == "1 1 2");
    CHECK(lyndon_decomposition(parse_word("1 2")).size() == 1);
    auto g = lyndon_decomposition(parse_word("2 1"));
    CHECK(word_str(g[0]) == "2");
    CHECK(word_str(g[1]) == "1");
}

TEST_CASE("Lyndon factorization is unique and agrees with the scan") {
    std::mt19937 rng(5);
    for (int theta = 1; theta <= 3; ++theta)
        for (int t = 0; t < 200; ++t) {
            int len = 1 + rng() % 10;
            Word w;
            for (int k = 0; k < len; ++k) w.push_back(rng() % theta);
            CHECK(count_lyndon_factorizations(w) == 1);
            auto f = lyndon_decomposition(w);
            Word back;
            for (size_t k = 0; k < f.size(); ++k) {
                CHECK(is_lyndon(f[k]));
                if (k) CHECK(!(f[k - 1] < f[k]));
                back = concat(back, f[k]);
            }
            CHECK(back == w);
        }
}

TEST_CASE("Shirshov split") {
    auto s = shirshov_split(parse_word("1 1 2"));
    CHECK(word_str(s.left) == "1");
    CHECK(word_str(s.right) == "1 2");
    s = shirshov_split(parse_word("1 2"));
    CHECK(word_str(s.left) == "1");
    CHECK(word_str(s.right) == "2");
    s = shirshov_split(parse_word("1 1 2 2"));
    CHECK(word_str(s.left) == "1");
    CHECK(word_str(s.right) == "1 2 2");
    CHECK_THROWS(shirshov_split(parse_word("2 1")));
    CHECK_THROWS(shirshov_split(parse_word("1")));
    for (int len = 2; len <= 7; ++len)
        for (auto& w : all_words(3, len)) {
            if (!is_lyndon(w)) continue;
            auto sp = shirshov_split(w);
            CHECK(is_lyndon(sp.left));
            CHECK(is_lyndon(sp.right));
            CHECK(sp.left < sp.right);
            CHECK(concat(sp.left, sp.right) == w);
        }
}

TEST_CASE("product of increasing Lyndon words is Lyndon") {
    std::vector<Word> lyn;
    for (int len = 1; len <= 5; ++len)
        for (auto& w : all_words(2, len))
            if (is_lyndon(w)) lyn.push_back(w);
    for (auto& a : lyn)
        for (auto& b : lyn)
            if (a < b) CHECK(is_lyndon(concat(a, b)));
}

TEST_CASE("deg-lex order") {
    CHECK(deglex_compare(parse_word("1 2"), parse_word("1 1 1")) > 0);
    CHECK(deglex_compare(parse_word("2 1"), parse_word("1 2")) > 0);
    CHECK(deglex_compare(parse_word("1 2"), parse_word("1 2")) == 0);
    std::vector<Word> ws;
    for (int len = 0; len <= 3; ++len)
        for (auto& w : all_words(2, len)) ws.push_back(w);
    for (auto& u : ws)
        for (auto& v : ws) {
            int c = deglex_compare(u, v);
            CHECK(c == -deglex_compare(v, u));
            for (auto& w : ws) {
                if (w.size() > 2) continue;
                CHECK(deglex_compare(concat(w, u), concat(w, v)) == c);
                CHECK(deglex_compare(concat(u, w), concat(v, w)) == c);
            }
        }
}

TEST_CASE("words of a degree") {
    auto w = words_of_degree({1, 1});
    REQUIRE(w.size() == 2);
    CHECK(word_str(w[0]) == "1 2");
    CHECK(word_str(w[1]) == "2 1");
    CHECK(words_of_degree({2, 0}).size() == 1);
    CHECK(words_of_degree({2, 1}).size() == 3);
    CHECK(word_count({2, 1}) == 3);
    CHECK(word_count({3, 3, 2}) == 560);
    CHECK_THROWS(words_of_degree({5, 5}, 8));
}

#include <doctest.h>

#include <random>

#include "klr/symgroup.hpp"

using klr::Perm;

namespace {

// Independent oracle: enumerate every reduced word by branching over all
// left descents, return the lexicographically least one.
void reduced_words(const Perm& w, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    const int n = w.size();
    bool descent = false;
    const Perm inv = w.inverse();
    for (int j = 1; j < n; ++j) {
        if (inv(j) > inv(j + 1)) {
            descent = true;
            prefix.push_back(j);
            reduced_words(Perm::transposition(n, j) * w, prefix, out);
            prefix.pop_back();
        }
    }
    if (!descent)
        out.push_back(prefix);
}

std::vector<int> lex_least_reduced_word(const Perm& w)
{
    std::vector<int> prefix;
    std::vector<std::vector<int>> all;
    reduced_words(w, prefix, all);
    return *std::min_element(all.begin(), all.end());
}

} // namespace

TEST_CASE("length counts inversions")
{
    CHECK(Perm::identity(3).length() == 0);
    CHECK(Perm::transposition(2, 1).length() == 1);
    CHECK(Perm::longest(3).length() == 3);
    CHECK(Perm::longest(4).length() == 6);
}

TEST_CASE("longest element reverses")
{
    CHECK(Perm::longest(1) == Perm::identity(1));
    CHECK(Perm::longest(2).one_line() == std::vector<int>{2, 1});
    CHECK(Perm::longest(4).one_line() == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("canonical word fixed cases")
{
    CHECK(Perm::identity(4).canonical_word().empty());
    CHECK(Perm::longest(3).canonical_word() == std::vector<int>{1, 2, 1});
    // the transposition swapping 1 and 3
    CHECK(Perm::from_one_line({3, 2, 1}).canonical_word() == std::vector<int>{1, 2, 1});
}

TEST_CASE("canonical word is the lex-least reduced word (exhaustive n <= 5)")
{
    for (int n = 1; n <= 5; ++n) {
        for (const Perm& w : klr::all_perms(n)) {
            const auto word = w.canonical_word();
            CHECK(static_cast<int>(word.size()) == w.length());
            CHECK(Perm::from_word(n, word) == w);
            CHECK(word == lex_least_reduced_word(w));
        }
    }
}

TEST_CASE("sequence action")
{
    using Seq = std::vector<int>;
    CHECK(Perm::identity(2).act(Seq{1, 2}) == Seq{1, 2});
    CHECK(Perm::transposition(2, 1).act(Seq{1, 2}) == Seq{2, 1});
    CHECK(Perm::longest(3).act(Seq{7, 8, 9}) == Seq{9, 8, 7});
    CHECK_THROWS_AS((void)Perm::identity(3).act(Seq{1, 2}), klr::error);
}

TEST_CASE("action is a left action for the fixed composition order")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        auto rand_perm = [&]() {
            std::vector<int> ol(static_cast<std::size_t>(n));
            std::iota(ol.begin(), ol.end(), 1);
            std::shuffle(ol.begin(), ol.end(), rng);
            return Perm::from_one_line(ol);
        };
        const Perm u = rand_perm();
        const Perm v = rand_perm();
        std::vector<int> s(static_cast<std::size_t>(n));
        for (int& x : s)
            x = static_cast<int>(rng() % 10);
        CHECK((u * v).act(s) == u.act(v.act(s)));
    }
}

TEST_CASE("one-line validation")
{
    CHECK_THROWS_AS(Perm::from_one_line({1, 1}), klr::error);
    CHECK_THROWS_AS(Perm::from_one_line({0, 1}), klr::error);
    CHECK_THROWS_AS(Perm::transposition(3, 3), klr::error);
}

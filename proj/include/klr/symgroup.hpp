#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "klr/error.hpp"

namespace klr {

/*
  Permutations of {1..n} in one-line notation.

  Conventions fixed once for the whole engine:
    - composition: (u*v)(k) = u(v(k));
    - the action on sequences is the left action moving position p to
      position w(p):  act(w,s)[w(p)] = s[p], i.e. act(w,s)[k] = s[w^{-1}(k)].
      With this choice act(u*v, s) = act(u, act(v, s)) holds on the nose.

  The canonical reduced word of w is the lexicographically least one.  It is
  produced greedily: the first letter is the smallest left descent j of w
  (w^{-1}(j) > w^{-1}(j+1)), then recurse on s_j * w.  Every reduced word
  starts with a left descent, so the greedy choice is attainable and minimal.
*/
class Perm {
public:
    Perm() = default;

    static Perm identity(int n);
    // s_j, swapping j and j+1 (1 <= j <= n-1).
    static Perm transposition(int n, int j);
    // Order-reversing permutation w_0.
    static Perm longest(int n);
    // Product s_{w[0]} * s_{w[1]} * ... of adjacent transpositions.
    static Perm from_word(int n, const std::vector<int>& word);
    // Validates one-line data (1-based images).
    static Perm from_one_line(const std::vector<int>& images);

    int size() const { return static_cast<int>(img_.size()); }
    // w(k), 1-based.
    int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    // (u*v)(k) = u(v(k)).
    friend Perm operator*(const Perm& u, const Perm& v);

    // Number of inversions = length of any reduced word.
    int length() const;
    // Lexicographically least reduced word.
    std::vector<int> canonical_word() const;

    // act(w,s)[k] = s[w^{-1}(k)]; requires |s| = n.
    template <typename T>
    std::vector<T> act(const std::vector<T>& s) const
    {
        if (static_cast<int>(s.size()) != size())
            throw error(errc::length_mismatch, "sequence length does not match strand count");
        std::vector<T> out(s.size());
        for (int p = 0; p < size(); ++p)
            out[static_cast<std::size_t>(img_[static_cast<std::size_t>(p)] - 1)] =
                s[static_cast<std::size_t>(p)];
        return out;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_; // img_[k-1] = w(k)
};

// All n! permutations in a deterministic order (lexicographic one-line).
std::vector<Perm> all_perms(int n);

} // namespace klr

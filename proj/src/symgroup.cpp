#include "klr/symgroup.hpp"

#include <algorithm>
#include <numeric>

namespace klr {

Perm Perm::identity(int n)
{
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int j)
{
    if (j < 1 || j >= n)
        throw error(errc::index_out_of_range,
                    "transposition s_" + std::to_string(j) + " needs 1 <= j <= n-1, n = "
                        + std::to_string(n));
    Perm p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(j - 1)], p.img_[static_cast<std::size_t>(j)]);
    return p;
}

Perm Perm::longest(int n)
{
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        img[static_cast<std::size_t>(k - 1)] = n + 1 - k;
    return Perm(std::move(img));
}

Perm Perm::from_word(int n, const std::vector<int>& word)
{
    Perm p = identity(n);
    for (int j : word)
        p = p * transposition(n, j);
    return p;
}

Perm Perm::from_one_line(const std::vector<int>& images)
{
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw error(errc::index_out_of_range, "not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Perm(images);
}

bool Perm::is_identity() const
{
    for (int k = 1; k <= size(); ++k)
        if ((*this)(k) != k)
            return false;
    return true;
}

Perm Perm::inverse() const
{
    std::vector<int> img(img_.size());
    for (int k = 1; k <= size(); ++k)
        img[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Perm(std::move(img));
}

Perm operator*(const Perm& u, const Perm& v)
{
    if (u.size() != v.size())
        throw error(errc::length_mismatch, "composing permutations of different sizes");
    std::vector<int> img(u.img_.size());
    for (int k = 1; k <= u.size(); ++k)
        img[static_cast<std::size_t>(k - 1)] = u(v(k));
    return Perm(std::move(img));
}

int Perm::length() const
{
    int inv = 0;
    for (int p = 1; p <= size(); ++p)
        for (int q = p + 1; q <= size(); ++q)
            if ((*this)(p) > (*this)(q))
                ++inv;
    return inv;
}

std::vector<int> Perm::canonical_word() const
{
    // Greedy smallest left descent; a left descent of w at j is a descent of
    // the one-line notation of w^{-1} at position j.
    std::vector<int> inv = inverse().img_;
    std::vector<int> word;
    const int n = size();
    for (;;) {
        int j = 0;
        for (int k = 1; k < n; ++k) {
            if (inv[static_cast<std::size_t>(k - 1)] > inv[static_cast<std::size_t>(k)]) {
                j = k;
                break;
            }
        }
        if (j == 0)
            break;
        word.push_back(j);
        std::swap(inv[static_cast<std::size_t>(j - 1)], inv[static_cast<std::size_t>(j)]);
    }
    return word;
}

std::vector<Perm> all_perms(int n)
{
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace klr

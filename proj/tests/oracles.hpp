#pragma once
// Test-side oracles, deliberately naive and independent of the library algorithms.

#include "r3pls/permcore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using r3pls::Perm;
using r3pls::PermGroup;
using r3pls::Point;

// naive block test: the images of B under the group form a partition
inline bool naive_is_block(const std::vector<Perm>& gens, const std::vector<Point>& B)
{
    std::set<std::vector<Point>> imgs{B};
    std::vector<std::vector<Point>> todo{B};
    while (!todo.empty()) {
        auto X = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            std::vector<Point> Y;
            for (auto x : X) Y.push_back(g[x]);
            std::sort(Y.begin(), Y.end());
            if (imgs.insert(Y).second) todo.push_back(Y);
        }
    }
    std::map<Point, int> cover;
    for (const auto& X : imgs)
        for (auto x : X)
            if (++cover[x] > 1) return false;
    return true;
}

// every union of suborbits of H_beta containing beta that is a block, on the orbit of beta
inline std::set<std::vector<Point>> exhaustive_blocks(const PermGroup& H, Point beta)
{
    const auto O = orbit(H, beta);
    const PermGroup Hb = stabilizer(H, beta);
    std::vector<std::vector<Point>> sub;
    for (const auto& o : orbits(Hb)) {
        if (std::find(O.begin(), O.end(), o[0]) == O.end() || o[0] == beta) continue;
        sub.push_back(o);
    }
    if (sub.size() > 20) throw std::length_error("too many suborbits");
    std::set<std::vector<Point>> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << sub.size()); ++mask) {
        std::vector<Point> B{beta};
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (mask >> i & 1) B.insert(B.end(), sub[i].begin(), sub[i].end());
        std::sort(B.begin(), B.end());
        if (naive_is_block(H.gens(), B)) out.insert(B);
    }
    return out;
}

// all elements of G, by closure
inline std::vector<Perm> elements(const PermGroup& G, std::size_t cap = 200000)
{
    std::set<std::vector<Point>> seen{Perm(G.degree()).images()};
    std::vector<Perm> all{Perm(G.degree())};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& g : G.gens()) {
            Perm y = all[i] * g;
            if (seen.insert(y.images()).second) {
                all.push_back(y);
                if (all.size() > cap) throw std::length_error("group too large to list");
            }
        }
    return all;
}

// flag-transitivity by listing every element of G that fixes L
inline bool flag_transitive_by_listing(const std::vector<Perm>& elts, const std::vector<Point>& L)
{
    std::set<Point> reach;
    for (const auto& g : elts) {
        std::vector<Point> im;
        for (auto x : L) im.push_back(g[x]);
        std::sort(im.begin(), im.end());
        if (im == L) reach.insert(g[L[0]]);
    }
    return reach.size() == L.size();
}

} // namespace oracle

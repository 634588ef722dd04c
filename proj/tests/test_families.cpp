#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3pls/families.hpp"
#include "r3pls/matsemi.hpp"

#include <algorithm>
#include <set>

using namespace r3pls;

namespace {

void check_counts(const IncidenceStructure& D, std::size_t pts, std::size_t lines, std::size_t size)
{
    CHECK(D.num_points() == pts);
    CHECK(D.num_lines() == lines);
    CHECK(D.line_size() == size);
}

void check_invariant(const FamilyParams& fp, const IncidenceStructure& D)
{
    const auto S = family_space(fp);
    std::vector<Perm> gens;
    for (const auto& g : gens_group(family_group(fp))) gens.push_back(induce_perm(S, g));
    CHECK(preserved_by(D, gens));
}

} // namespace

TEST_CASE("lsub parameters")
{
    auto a = lsub_params(16, 4, 5);
    CHECK(a.k == 1);
    CHECK(a.t == 1);
    auto b = lsub_params(9, 3, 2);
    CHECK(b.k == 2);
    CHECK(b.t == 4);
    auto c = lsub_params(25, 5, 3);
    CHECK(c.k == 2);
    CHECK(c.t == 2);
    // t is least with <w^t> cap <w^r> = <w^{kr}>: scan by hand over the cyclic group of order q-1
    for (auto [q, q0, r] : {std::tuple{16u, 4u, 5u}, {9u, 3u, 2u}, {25u, 5u, 3u}, {81u, 9u, 5u}, {16u, 2u, 5u},
                            {64u, 4u, 3u}, {49u, 7u, 2u}}) {
        const auto lp = lsub_params(q, q0, r);
        const std::uint32_t kr = lp.k * r;
        std::uint32_t t = 1;
        for (;; ++t) {
            // subgroup orders: |<w^t>| = (q-1)/gcd(t,q-1); intersection has order (q-1)/lcm(gcd(t,q-1), r)
            std::uint32_t g = static_cast<std::uint32_t>(gcd_u(t, q - 1));
            std::uint32_t l = g / static_cast<std::uint32_t>(gcd_u(g, r)) * r;
            if (l == kr) break;
        }
        CAPTURE(q);
        CHECK(lp.t == t);
    }
    CHECK_THROWS(lsub_params(16, 3, 5));
}

TEST_CASE("AG* and Delta")
{
    const auto a = ag_star(2, 4);
    check_counts(a, 15, 15, 4);
    check_counts(ag_star(2, 3), 8, 8, 3);
    check_counts(ag_star(3, 4), 63, 315, 4);
    check_counts(delta(2, 4), 15, 30, 3);
    check_counts(delta(2, 3), 8, 8, 3);
    check_counts(delta(3, 3), 26, 104, 3);
    CHECK(ag_star(2, 3) == delta(2, 3));
    CHECK(ag_star(3, 3) == delta(3, 3));
    // q even, q0 = 2, r = q - 1
    CHECK(lsub(3, 4, 2, 3) == delta(3, 4));
    CHECK(lsub(2, 8, 2, 7) == delta(2, 8));
    CHECK_THROWS_AS(ag_star(2, 2), std::invalid_argument);
}

TEST_CASE("stabilizer of an AG* line is 2-transitive on it")
{
    const FamilyParams fp{Family::AGstar, 2, 4, 0, 3, 0};
    const auto S = family_space(fp);
    const auto G = induce_action(S, gens_group(family_group(fp)));
    const auto D = ag_star(2, 4);
    const std::vector<Point> L(D.line(0).begin(), D.line(0).end());
    const auto St = setwise_stabilizer(G, L);
    std::set<std::pair<Point, Point>> pairs{{L[0], L[1]}};
    std::vector<std::pair<Point, Point>> todo{{L[0], L[1]}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        for (const auto& g : St.gens())
            if (pairs.insert({g[x], g[y]}).second) todo.push_back({g[x], g[y]});
    }
    CHECK(pairs.size() == L.size() * (L.size() - 1));
}

TEST_CASE("LSub")
{
    const auto a = lsub(2, 16, 4, 5);
    check_counts(a, 85, 340, 5);
    CHECK(multiplicity_bruteforce(a) == 1);
    const auto b = lsub(2, 25, 5, 3);
    check_counts(b, 78, 195, 6);
    CHECK(validate_pls(b).is_pls);
    CHECK(validate_pls(lsub(3, 25, 5, 3)).multiplicity == 2);
    check_invariant({Family::LSub, 2, 16, 4, 5, 0}, a);
    check_invariant({Family::LSub, 2, 25, 5, 3, 0}, b);
}

TEST_CASE("LSub multiplicity for k = 1, 2, 3")
{
    struct Case {
        unsigned n;
        std::uint32_t q, q0, r;
        unsigned m;
    };
    // n = 2: k / (2, k); n >= 3: k
    for (const auto& c : {Case{2, 16, 4, 5, 1}, Case{3, 16, 4, 5, 1}, Case{2, 25, 5, 3, 1}, Case{3, 25, 5, 3, 2},
                          Case{2, 9, 3, 2, 1}, Case{3, 9, 3, 2, 2}, Case{2, 16, 2, 5, 3}, Case{3, 16, 2, 5, 3}}) {
        const auto D = lsub(c.n, c.q, c.q0, c.r);
        CAPTURE(c.q);
        CAPTURE(c.n);
        const auto rep = validate_pls(D);
        CHECK(rep.multiplicity == c.m);
        if (D.num_points() <= 500) CHECK(multiplicity_bruteforce(D) == c.m);
        CHECK(D.num_lines() == expected_counts({Family::LSub, c.n, c.q, c.q0, c.r, 0}).lines);
    }
}

TEST_CASE("DLSub")
{
    const auto d = dlsub(9, 3, 2, 1);
    check_counts(d, 20, 30, 4);
    CHECK(validate_pls(d).is_pls);
    CHECK(is_proper(d));
    CHECK(is_connected(d));
    CHECK(d.params.at("shared_lines") == 0);
    // L and wL are disjoint
    const auto L = lsub(2, 9, 3, 2);
    const FamilyParams fp{Family::DLSub, 2, 9, 3, 2, 1};
    const auto S = family_space(fp);
    const auto wL = relabel(L, induce_perm(S, sl_linear(mat_diag({S.field().w(1), 1}))));
    std::size_t shared = 0;
    line_union(L, wL, &shared);
    CHECK(shared == 0);
    CHECK_FALSE(validate_pls(dlsub(9, 3, 2, 2)).is_pls);
    CHECK(fingerprint(dlsub(9, 3, 2, 3)) == fingerprint(d));
    CHECK_THROWS(dlsub(9, 3, 2, 4));
}

TEST_CASE("USub")
{
    const auto u = usub(4, 2, 3);
    check_counts(u, 195, 6240, 3);
    CHECK(validate_pls(u).is_pls);
    check_invariant({Family::USub, 3, 4, 2, 3, 0}, u);
    // representatives on a line are pairwise independent: no two points share a cell
    const auto S = family_space({Family::USub, 3, 4, 2, 3, 0});
    bool indep = true;
    for (std::size_t i = 0; i < u.num_lines(); ++i) {
        std::set<std::uint32_t> cells;
        for (auto x : u.line(i)) cells.insert(S.cell_of(x));
        indep = indep && cells.size() == u.line_size();
    }
    CHECK(indep);
}

TEST_CASE("USub(16,4,5) in count-only mode")
{
    const auto res = build_family({Family::USub, 3, 16, 4, 5, 0}, BuildOptions{1'000'000, 2000, 3});
    CHECK(res.count_only);
    CHECK(res.sample_ok);
    CHECK(res.space.size() == 20485);
    const auto ec = expected_counts(res.params);
    CHECK(ec.lines == 20976640);
    // 16^3 (16^3 + 1) (16 - 1)^2 / (4 (4^2 - 1)(4 - 1))
    CHECK(ec.lines == 4096ull * 4097 * 225 / (4 * 15 * 3));
}

TEST_CASE("AGU*")
{
    const auto a = agu_star(4);
    check_counts(a, 195, 3120, 4);
    CHECK(validate_pls(a).is_pls);
    check_invariant({Family::AGUstar, 3, 4, 0, 3, 0}, a);
    CHECK_THROWS(agu_star(5));
}

TEST_CASE("all desk-scale instances are proper connected PLS with the expected counts")
{
    const std::vector<FamilyParams> fps = {
        {Family::AGstar, 2, 4, 0, 3, 0},  {Family::AGstar, 3, 4, 0, 3, 0},  {Family::AGstar, 2, 5, 0, 4, 0},
        {Family::Delta, 2, 4, 0, 3, 0},   {Family::Delta, 3, 3, 0, 2, 0},   {Family::Delta, 2, 7, 0, 6, 0},
        {Family::LSub, 2, 16, 4, 5, 0},   {Family::LSub, 2, 25, 5, 3, 0},   {Family::LSub, 2, 81, 9, 5, 0},
        {Family::DLSub, 2, 9, 3, 2, 1},   {Family::USub, 3, 4, 2, 3, 0},    {Family::AGUstar, 3, 4, 0, 3, 0},
    };
    for (const auto& fp : fps) {
        CAPTURE(fp.name());
        const auto D = build_family(fp).structure;
        const auto ec = expected_counts(fp);
        CHECK(D.num_points() == ec.points);
        CHECK(D.num_lines() == ec.lines);
        CHECK(D.line_size() == ec.line_size);
        CHECK(validate_pls(D).is_pls);
        CHECK(is_proper(D));
        CHECK(is_connected(D));
        CHECK(params_from_json(params_to_json(fp)).name() == fp.name());
    }
}

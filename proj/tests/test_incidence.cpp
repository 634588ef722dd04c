#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3pls/catalogue.hpp"
#include "r3pls/families.hpp"
#include "r3pls/incidence.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using namespace r3pls;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(img);
}

IncidenceStructure fano()
{
    return IncidenceStructure(7, 3, {0, 1, 2, 0, 3, 4, 0, 5, 6, 1, 3, 5, 1, 4, 6, 2, 3, 6, 2, 4, 5});
}

} // namespace

TEST_CASE("ingestion")
{
    IncidenceStructure D(5, 3, {4, 2, 0});
    CHECK(D.num_lines() == 1);
    CHECK(std::vector<Point>(D.line(0).begin(), D.line(0).end()) == std::vector<Point>{0, 2, 4});
    CHECK(validate_pls(D).is_pls);
    CHECK(validate_pls(D).multiplicity == 1);
    CHECK_THROWS_AS(IncidenceStructure(5, 2, {0, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(IncidenceStructure(5, 2, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(IncidenceStructure(5, 2, {0, 5}), std::invalid_argument);
    CHECK(D.has_line(std::vector<Point>{0, 2, 4}));
    CHECK(D.find(std::vector<Point>{0, 1, 2}) == -1);
}

TEST_CASE("partial linear space checks")
{
    const auto d = delta(2, 4);
    const auto rep = validate_pls(d);
    CHECK(rep.is_pls);
    CHECK(d.line_size() == 3);
    CHECK(rep.point_degree_constant);
    CHECK(rep.min_degree == 6);
    const auto l = lsub(3, 25, 5, 3);
    CHECK(validate_pls(l).multiplicity == 2);
    CHECK_FALSE(validate_pls(l).is_pls);
}

TEST_CASE("multiplicity by two routes")
{
    std::vector<IncidenceStructure> all = {ag_star(2, 4), delta(2, 4),          delta(3, 3),       lsub(2, 16, 4, 5),
                                           lsub(2, 25, 5, 3), dlsub(9, 3, 2, 1), dlsub(9, 3, 2, 2), usub(4, 2, 3),
                                           agu_star(4),      fano()};
    for (const auto& D : all)
        if (D.num_points() <= 500) CHECK(validate_pls(D).multiplicity == multiplicity_bruteforce(D));
}

TEST_CASE("properness")
{
    std::vector<Point> k7;
    for (Point a = 0; a < 7; ++a)
        for (Point b = a + 1; b < 7; ++b) k7.insert(k7.end(), {a, b});
    CHECK_FALSE(is_proper(IncidenceStructure(7, 2, k7)));
    CHECK(is_proper(ag_star(2, 4)));
    // PG(2,2) is a linear space
    CHECK_FALSE(is_proper(fano()));
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(IncidenceStructure(4, 4, {0, 1, 2, 3})));
    CHECK(is_connected(ag_star(2, 4)));
    IncidenceStructure two(6, 3, {0, 1, 2, 3, 4, 5});
    CHECK_FALSE(is_connected(two));
    CHECK(components(two).size() == 2);
}

TEST_CASE("fingerprints")
{
    std::mt19937_64 rng(4);
    for (const auto& D : {delta(2, 4), ag_star(2, 4), dlsub(9, 3, 2, 1), usub(4, 2, 3)}) {
        const auto fp = fingerprint(D);
        for (int k = 0; k < 20; ++k) CHECK(fingerprint(relabel(D, random_perm(D.num_points(), rng))) == fp);
    }
    CHECK_FALSE(fingerprint(ag_star(2, 4)) == fingerprint(delta(2, 4)));
    CHECK(fingerprint(dlsub(9, 3, 2, 1)) == fingerprint(dlsub(9, 3, 2, 3)));
}

TEST_CASE("isomorphism search")
{
    std::mt19937_64 rng(8);
    const auto d = delta(2, 4);
    const Perm g = random_perm(d.num_points(), rng);
    auto iso = find_isomorphism(d, relabel(d, g), false);
    REQUIRE(iso);
    CHECK(relabel(d, *iso) == relabel(d, g));
    CHECK_FALSE(find_isomorphism(ag_star(2, 4), d, false));
    // the twists j and t - j give isomorphic structures
    CHECK(find_isomorphism(dlsub(9, 3, 2, 1), dlsub(9, 3, 2, 3), false));
    // the Fano plane is point-transitive, so fixing 0 is allowed
    const auto f = fano();
    auto g2 = relabel(f, random_perm(7, rng));
    CHECK(find_isomorphism(f, g2, true));
}

TEST_CASE("invariance under groups")
{
    const auto d = delta(2, 4);
    CHECK(preserved_by(d, {Perm(15)}));
    const auto G = builtin_group("GammaU3_4").group;
    CHECK(preserved_by(usub(4, 2, 3), G.gens()));
    CHECK(preserved_by(agu_star(4), G.gens()));
    std::mt19937_64 rng(12);
    const auto a = agu_star(4);
    const Point x = static_cast<Point>(rng() % a.num_points());
    Point y = static_cast<Point>(rng() % a.num_points());
    if (y == x) y = (x + 1) % a.num_points();
    CHECK_FALSE(preserved_by(a, {Perm::from_cycles(a.num_points(), {{x, y}})}));
}

TEST_CASE("unions")
{
    IncidenceStructure A(6, 3, {0, 1, 2, 3, 4, 5});
    IncidenceStructure B(6, 3, {0, 1, 2, 0, 3, 5});
    std::size_t shared = 0;
    const auto U = line_union(A, B, &shared);
    CHECK(U.num_lines() == 3);
    CHECK(shared == 1);
}

TEST_CASE("serialization")
{
    auto d = delta(2, 4);
    const auto j = to_json(d);
    const auto e = incidence_from_json(nlohmann::json::parse(j.dump()));
    CHECK(e == d);
    CHECK(e.params == d.params);
    std::ostringstream csv;
    write_csv(csv, d);
    const std::string text = csv.str();
    CHECK(std::count(text.begin(), text.end(), '\n') >= 30);
    std::ostringstream dot;
    write_dot(dot, d);
    CHECK(dot.str().find("graph") != std::string::npos);
    std::ostringstream big;
    CHECK_THROWS(write_dot(big, lsub(2, 81, 9, 5)));
}

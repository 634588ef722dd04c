#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3pls/catalogue.hpp"

#include <fstream>
#include <map>

using namespace r3pls;

namespace {

// same subgroup of Sym(n): equal orders and mutual containment of generators
bool same_group(const PermGroup& A, const PermGroup& B)
{
    if (A.degree() != B.degree() || A.order() != B.order()) return false;
    for (const auto& g : A.gens())
        if (!B.contains(g)) return false;
    for (const auto& g : B.gens())
        if (!A.contains(g)) return false;
    return true;
}

} // namespace

TEST_CASE("sporadic orders and degrees")
{
    const std::map<std::string, std::pair<std::size_t, std::uint64_t>> want = {
        {"PSL3_2_14", {14, 168}},          {"C2xPSL3_2_14", {14, 336}},     {"M11_22", {22, 7920}},
        {"C2xM11_22", {22, 15840}},        {"PGL3_4_126", {126, 60480}},    {"PGammaL3_4_126", {126, 120960}},
        {"PSL3_5_155", {155, 372000}},     {"PSL5_2_248", {248, 9999360}},  {"PSL3_3_39", {39, 5616}},
        {"3S6_18", {18, 2160}},            {"2M12_24", {24, 190080}},       {"PGammaL3_8_2044", {2044, 49448448}},
    };
    for (const auto& [nm, dv] : want) {
        CAPTURE(nm);
        const auto B = builtin_group(nm);
        CHECK(B.group.degree() == dv.first);
        // recomputed without the catalogued order hint
        CHECK(PermGroup(B.group.degree(), B.group.gens()).order() == dv.second);
        CHECK(rank(B.group) == 3);
    }
}

TEST_CASE("bundled group files equal their constructions")
{
    const auto f1 = read_group_file(data_dir() + "/groups/3S6_18.txt");
    CHECK(same_group(f1, three_s6_18()));
    const auto f2 = read_group_file(data_dir() + "/groups/2M12_24.txt");
    CHECK(same_group(f2, two_m12_24()));
}

TEST_CASE("matrix entries carry their specs")
{
    for (const auto& nm : builtin_names()) {
        if (nm == "GammaU3_16" || nm == "GammaL3_16") continue;
        const auto B = builtin_group(nm);
        if (!B.spec) continue;
        CAPTURE(nm);
        CHECK(B.group.order() == induced_order(*B.spec));
        CHECK(B.r == B.spec->r);
    }
}

TEST_CASE("spec strings and references")
{
    const auto s = parse_spec("linear:GammaL:2:4:3");
    CHECK(s.kind == GroupKind::GammaL);
    CHECK(s.n == 2);
    CHECK(s.q == 4);
    CHECK(s.r == 3);
    const auto u = parse_spec("unitary:GammaU3:4:3");
    CHECK(u.unitary);
    CHECK(parse_spec("linear:ZSLphi:2:81:5:1").param == 1);
    CHECK(group_kind_name(parse_group_kind("YSLdiagphi")) == "YSLdiagphi");
    CHECK_THROWS_AS(parse_spec("linear:Nope:2:4:3"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_group("NoSuchGroup"), std::invalid_argument);
    CHECK(builtin_group("linear:GammaL:2:4:3").group.order() == 360);
    CHECK_THROWS_AS(resolve_group("bogus:x"), std::invalid_argument);
    const auto tmp = std::string("/tmp/r3pls_test_group.txt");
    {
        std::ofstream out(tmp);
        write_group(out, builtin_group("PSL3_2_14").group);
    }
    CHECK(resolve_group("file:" + tmp).group.order() == 168);
}

TEST_CASE("helpers")
{
    const PermGroup S3(3, {Perm::from_cycles(3, {{0, 1, 2}}), Perm::from_cycles(3, {{0, 1}})});
    const auto D = direct_product_c2(S3);
    CHECK(D.degree() == 5);
    CHECK(D.order() == 12);
    const auto R = restrict_to(D, {3, 4});
    CHECK(R.order() == 2);
    CHECK_THROWS(restrict_to(D, {0, 3}));
}

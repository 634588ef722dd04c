// OpenMP line orbit against the serial reference, plus the isomorphism search.
#include "r3pls/catalogue.hpp"
#include "r3pls/families.hpp"

#include <benchmark/benchmark.h>

using namespace r3pls;

namespace {

const PermGroup& group(const std::string& nm)
{
    static std::map<std::string, PermGroup> cache;
    auto it = cache.find(nm);
    if (it == cache.end()) it = cache.emplace(nm, builtin_group(nm).group).first;
    return it->second;
}

// line 0: a far block through 0 of size 3 on PSL_3(5)@155; line 1: USub(4,2,3) base line
std::pair<std::string, std::vector<Point>> line_case(int i)
{
    if (i == 0) return {"PSL3_5_155", {0, 1, 7}};
    const auto D = usub(4, 2, 3);
    return {"GammaU3_4", {D.line(0).begin(), D.line(0).end()}};
}

void BM_line_orbit(benchmark::State& st)
{
    const auto [nm, L] = line_case(static_cast<int>(st.range(0)));
    const auto& G = group(nm);
    for (auto _ : st) benchmark::DoNotOptimize(line_orbit(G.gens(), L, st.range(1) != 0).flat.size());
}

void BM_line_orbit_serial(benchmark::State& st)
{
    const auto [nm, L] = line_case(static_cast<int>(st.range(0)));
    const auto& G = group(nm);
    for (auto _ : st) benchmark::DoNotOptimize(line_orbit_serial(G.gens(), L, st.range(1) != 0).flat.size());
}

void BM_isomorphism(benchmark::State& st)
{
    const auto D = usub(4, 2, 3);
    std::vector<Point> img(D.num_points());
    for (Point x = 0; x < img.size(); ++x) img[x] = static_cast<Point>((x * 7 + 3) % img.size());
    const auto E = relabel(D, Perm(img));
    for (auto _ : st) benchmark::DoNotOptimize(find_isomorphism(D, E, true).has_value());
}

} // namespace

BENCHMARK(BM_line_orbit)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_line_orbit_serial)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isomorphism)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

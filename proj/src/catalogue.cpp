#include "r3pls/catalogue.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#ifndef R3PLS_DATA_DIR
#define R3PLS_DATA_DIR "data"
#endif

namespace r3pls {

std::string data_dir() { return R3PLS_DATA_DIR; }

namespace {

const std::map<std::string, GroupKind>& kind_table()
{
    static const std::map<std::string, GroupKind> t = {
        {"YSL", GroupKind::YSL},         {"ZSL", GroupKind::ZSL},
        {"GL", GroupKind::GL},           {"GammaL", GroupKind::GammaL},
        {"SLphi", GroupKind::SLphi},     {"SLdiagphi", GroupKind::SLdiagphi},
        {"YSLdiagphi", GroupKind::YSLdiagphi}, {"ZSLphi", GroupKind::ZSLphi},
        {"SLdet", GroupKind::SLdet},     {"GLphi", GroupKind::GLphi},
        {"SU3", GroupKind::SU3},         {"ZSU3", GroupKind::ZSU3},
        {"GU3", GroupKind::GU3},         {"GammaU3", GroupKind::GammaU3},
        {"ZSU3phi", GroupKind::ZSU3phi},
    };
    return t;
}

struct MatrixEntry {
    const char* name;
    GroupSpec spec;
    const char* type; // catalogued type, "" when it depends on the parameters only
    const char* description;
};

const std::vector<MatrixEntry>& matrix_entries()
{
    using K = GroupKind;
    static const std::vector<MatrixEntry> e = {
        {"GammaL2_4", {K::GammaL, false, 2, 4, 3, 0}, "", "GammaL_2(4)/Y on 15 points"},
        {"SLdiagphi2_4", {K::SLdiagphi, false, 2, 4, 3, 0}, "", "<SL_2(4), diag(1,w)phi> on 15 points"},
        {"SLphi2_4", {K::SLphi, false, 2, 4, 3, 0}, "", "SL_2(4):<phi> on 15 points (rank 4)"},
        {"GammaL3_4", {K::GammaL, false, 3, 4, 3, 0}, "", "GammaL_3(4)/Y on 63 points"},
        {"SLdiagphi3_4", {K::SLdiagphi, false, 3, 4, 3, 0}, "", "<SL_3(4), diag(1,1,w)phi> on 63 points"},
        {"SLphi3_4", {K::SLphi, false, 3, 4, 3, 0}, "", "SL_3(4):<phi> on 63 points"},
        {"SL3_3", {K::YSL, false, 3, 3, 2, 0}, "", "SL_3(3) on 26 points"},
        {"GL3_3", {K::GL, false, 3, 3, 2, 0}, "", "GL_3(3)/Y on 26 points"},
        {"SL4_3", {K::YSL, false, 4, 3, 2, 0}, "", "Y.SL_4(3)/Y on 80 points"},
        {"GammaL2_16", {K::GammaL, false, 2, 16, 5, 0}, "", "GammaL_2(16)/Y on 85 points"},
        {"YSL2_16", {K::YSL, false, 2, 16, 5, 0}, "", "Y.SL_2(16)/Y on 85 points"},
        {"GammaL3_16", {K::GammaL, false, 3, 16, 5, 0}, "", "GammaL_3(16)/Y on 1365 points"},
        {"ZSL2_81phi", {K::ZSLphi, false, 2, 81, 5, 1}, "it", "(Z.SL_2(81):<phi>)/Y on 410 points"},
        {"ZSL2_25phi", {K::ZSLphi, false, 2, 25, 3, 1}, "it", "(Z.SL_2(25):<phi>)/Y on 78 points"},
        {"YSL2_9diagphi", {K::YSLdiagphi, false, 2, 9, 2, 0}, "qp", "<Y.SL_2(9), phi.diag(1,w)>/Y on 20 points"},
        {"GammaL2_5", {K::GammaL, false, 2, 5, 2, 0}, "", "GammaL_2(5)/Y on 12 points"},
        {"GammaU3_4", {K::GammaU3, true, 3, 4, 3, 0}, "it", "GammaU_3(4)/Y on 195 points"},
        {"ZSU3_4", {K::ZSU3, true, 3, 4, 3, 0}, "it", "Z.SU_3(4)/Y on 195 points (rank 4)"},
        {"GammaU3_16", {K::GammaU3, true, 3, 16, 5, 0}, "it", "GammaU_3(16)/Y on 20485 points"},
    };
    return e;
}

struct SporadicEntry {
    const char* name;
    const char* type;
    std::uint32_t r;
    const char* description;
};

const std::vector<SporadicEntry>& sporadic_entries()
{
    static const std::vector<SporadicEntry> e = {
        {"PSL3_2_14", "qp", 2, "PSL_3(2) of degree 14"},
        {"C2xPSL3_2_14", "it", 2, "C2 x PSL_3(2) of degree 14"},
        {"M11_22", "qp", 2, "M11 of degree 22"},
        {"C2xM11_22", "it", 2, "C2 x M11 of degree 22"},
        {"PGL3_4_126", "qp", 6, "PGL_3(4) of degree 126"},
        {"PGammaL3_4_126", "qp", 6, "PGammaL_3(4) of degree 126"},
        {"PSL3_5_155", "qp", 5, "PSL_3(5) of degree 155"},
        {"PSL5_2_248", "qp", 8, "PSL_5(2) of degree 248"},
        {"PGammaL3_8_2044", "qp", 28, "PGammaL_3(8) of degree 2044"},
        {"PSL3_3_39", "qp", 3, "PSL_3(3) of degree 39"},
        {"3S6_18", "sp", 3, "3.Sym(6) of degree 18 (bundled file)"},
        {"2M12_24", "sp", 2, "2.M12 of degree 24 (bundled file)"},
    };
    return e;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// projective action of <SL_n(q), extra> on the points of PG(n-1,q)
PermGroup projective_group(unsigned n, unsigned p, unsigned a, const std::vector<SemilinearElem>& extra)
{
    const FieldPtr F = Field::make(p, a);
    auto gens = gens_sl(n, *F);
    gens.insert(gens.end(), extra.begin(), extra.end());
    std::vector<Elem> e1(n, 0);
    e1[0] = 1;
    return projective_image(*F, n, gens, e1);
}

PermGroup m11_on_11()
{
    return PermGroup(11, {Perm::from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                          Perm::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
}

PermGroup sporadic_source(const std::string& name)
{
    if (name == "PSL3_2_14" || name == "C2xPSL3_2_14") {
        auto G = projective_group(3, 2, 1, {});
        return name == "PSL3_2_14" ? G : direct_product_c2(G);
    }
    if (name == "M11_22") return m11_on_11();
    if (name == "C2xM11_22") return direct_product_c2(m11_on_11());
    if (name == "PGL3_4_126" || name == "PGammaL3_4_126") {
        const FieldPtr F = Field::make(2, 2);
        std::vector<SemilinearElem> extra{sl_linear(mat_diag({F->omega(), 1, 1}))};
        if (name == "PGammaL3_4_126") extra.push_back(sl_frobenius(3, 1));
        return projective_group(3, 2, 2, extra);
    }
    if (name == "PSL3_5_155") return projective_group(3, 5, 1, {});
    if (name == "PSL5_2_248") return projective_group(5, 2, 1, {});
    if (name == "PGammaL3_8_2044") return projective_group(3, 2, 3, {sl_frobenius(3, 1)});
    if (name == "PSL3_3_39") return projective_group(3, 3, 1, {});
    throw std::invalid_argument("unknown sporadic source " + name);
}

} // namespace

GroupKind parse_group_kind(const std::string& s)
{
    auto it = kind_table().find(s);
    if (it == kind_table().end()) throw std::invalid_argument("unknown group kind " + s);
    return it->second;
}

std::string group_kind_name(GroupKind k)
{
    for (const auto& [name, kind] : kind_table())
        if (kind == k) return name;
    return "?";
}

GroupSpec parse_spec(const std::string& s)
{
    const auto parts = split(s, ':');
    auto num = [](const std::string& x) { return static_cast<std::uint32_t>(std::stoul(x)); };
    if (parts.size() >= 5 && parts[0] == "linear") {
        GroupSpec g{parse_group_kind(parts[1]), false, num(parts[2]), num(parts[3]), num(parts[4]), 0};
        if (parts.size() > 5) g.param = num(parts[5]);
        if (g.unitary) throw std::invalid_argument("unitary kind in a linear spec");
        return g;
    }
    if (parts.size() >= 4 && parts[0] == "unitary") {
        GroupSpec g{parse_group_kind(parts[1]), true, 3, num(parts[2]), num(parts[3]), 0};
        if (parts.size() > 4) g.param = num(parts[4]);
        return g;
    }
    throw std::invalid_argument("bad spec " + s + " (linear:<Kind>:n:q:r[:j] or unitary:<Kind>:q:r[:j])");
}

std::vector<std::string> builtin_names()
{
    std::vector<std::string> out;
    for (const auto& e : matrix_entries()) out.push_back(e.name);
    for (const auto& e : sporadic_entries()) out.push_back(e.name);
    return out;
}

PermGroup direct_product_c2(const PermGroup& M)
{
    const std::size_t d = M.degree();
    std::vector<Perm> gens;
    for (const auto& g : M.gens()) {
        std::vector<Point> img(g.images());
        img.push_back(static_cast<Point>(d));
        img.push_back(static_cast<Point>(d + 1));
        gens.emplace_back(std::move(img));
    }
    gens.push_back(Perm::from_cycles(d + 2, {{static_cast<Point>(d), static_cast<Point>(d + 1)}}));
    return PermGroup(d + 2, std::move(gens), M.order() * 2);
}

PermGroup restrict_to(const PermGroup& G, const std::vector<Point>& S)
{
    std::vector<std::int64_t> pos(G.degree(), -1);
    for (std::size_t i = 0; i < S.size(); ++i) pos[S[i]] = static_cast<std::int64_t>(i);
    std::vector<Perm> gens;
    for (const auto& g : G.gens()) {
        std::vector<Point> img(S.size());
        for (std::size_t i = 0; i < S.size(); ++i) {
            const auto j = pos[g[S[i]]];
            if (j < 0) throw std::invalid_argument("set is not invariant");
            img[i] = static_cast<Point>(j);
        }
        gens.emplace_back(std::move(img));
    }
    return PermGroup(S.size(), std::move(gens));
}

PermGroup rank3_coset_action(const PermGroup& M, std::uint64_t r, std::uint64_t seed)
{
    const std::uint64_t order = M.order();
    const PermGroup H = stabilizer(M, 0);
    auto good = [&](const PermGroup& R) {
        PermGroup A = coset_action(M, R);
        return A.order() == order && rank(A) == 3;
    };
    try {
        PermGroup R = normal_subgroup_of_index(H, r, seed);
        if (good(R)) return coset_action(M, R);
    } catch (const std::runtime_error&) {
    }
    auto R = subgroup_of_index(H, r, good, seed);
    if (!R) throw std::runtime_error("no index-" + std::to_string(r) + " subgroup giving a faithful rank-3 action");
    PermGroup A = coset_action(M, *R);
    return PermGroup(A.degree(), A.gens(), order);
}

PermGroup three_s6_18()
{
    const FieldPtr Fp = Field::make(2, 2);
    const Field& F = *Fp;
    auto gens = gens_sl(3, F);
    gens.push_back(sl_frobenius(3, 1));
    // all 63 nonzero vectors, coded base 4
    auto code = [](const std::vector<Elem>& v) { return static_cast<Point>(v[0] * 16 + v[1] * 4 + v[2] - 1); };
    std::vector<Perm> perms;
    for (const auto& g : gens) {
        std::vector<Point> img(63);
        for (Point c = 1; c < 64; ++c) img[c - 1] = code(sl_apply(F, g, {c / 16, (c / 4) % 4, c % 4}));
        perms.emplace_back(std::move(img));
    }
    PermGroup SigmaL(63, std::move(perms), 2 * order_sl(3, 4));
    // hyperoval: conic {(1,t,t^2)} with (0,0,1) and its nucleus (0,1,0)
    std::vector<Point> S;
    std::vector<std::vector<Elem>> reps{{0, 0, 1}, {0, 1, 0}};
    for (Elem t = 0; t < 4; ++t) reps.push_back({1, t, F.mul(t, t)});
    for (const auto& v : reps)
        for (Elem s = 1; s < 4; ++s) S.push_back(code({F.mul(s, v[0]), F.mul(s, v[1]), F.mul(s, v[2])}));
    std::sort(S.begin(), S.end());
    PermGroup stab = setwise_stabilizer(SigmaL, S);
    PermGroup out = restrict_to(stab, S);
    if (out.order() != 2160) throw std::logic_error("hyperoval stabilizer has unexpected order");
    return out;
}

PermGroup two_m12_24(std::uint64_t seed)
{
    // extended ternary Golay code, generator [I_6 | A]
    static const int A[6][6] = {{0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
                                {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0}};
    using Word = std::array<int, 12>;
    std::array<Word, 6> rows{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            rows[i][j] = i == j;
            rows[i][6 + j] = A[i][j];
        }
    // c in C iff c.[-A^T | I] = 0
    auto in_code = [&](const Word& c) {
        for (int j = 0; j < 6; ++j) {
            int s = c[6 + j];
            for (int i = 0; i < 6; ++i) s += 2 * A[i][j] * c[i];
            if (s % 3) return false;
        }
        return true;
    };
    std::vector<char> hexad(1 << 12, 0);
    std::size_t weight6 = 0;
    for (int m = 0; m < 729; ++m) {
        Word c{};
        int t = m;
        for (int i = 0; i < 6; ++i, t /= 3)
            for (int j = 0; j < 12; ++j) c[j] = (c[j] + (t % 3) * rows[i][j]) % 3;
        int mask = 0, w = 0;
        for (int j = 0; j < 12; ++j)
            if (c[j]) mask |= 1 << j, ++w;
        if (w > 0 && w < 6) throw std::logic_error("Golay code has a word of weight below 6");
        if (w == 6) hexad[mask] = 1, ++weight6;
    }
    if (weight6 != 264) throw std::logic_error("Golay code: wrong number of weight-6 words");

    std::mt19937_64 rng(seed);
    auto find_perm = [&](std::array<int, 12>& pi) {
        // random images of 0..4, then backtrack keeping hexads fully inside the assigned points
        std::array<int, 12> pts{};
        for (int i = 0; i < 12; ++i) pts[i] = i;
        std::shuffle(pts.begin(), pts.end(), rng);
        for (int i = 0; i < 5; ++i) pi[i] = pts[i];
        std::array<bool, 12> used{};
        for (int i = 0; i < 5; ++i) used[pi[i]] = true;
        auto consistent = [&](int upto) {
            const int dom = (1 << (upto + 1)) - 1;
            for (int m = dom; m; m = (m - 1) & dom) {
                if (!(m >> upto & 1) || __builtin_popcount(m) != 6 || !hexad[m]) continue;
                int img = 0;
                for (int j = 0; j <= upto; ++j)
                    if (m >> j & 1) img |= 1 << pi[j];
                if (!hexad[img]) return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int k) -> bool {
            if (k == 12) return true;
            for (int x = 0; x < 12; ++x) {
                if (used[x]) continue;
                pi[k] = x;
                used[x] = true;
                if (consistent(k) && self(self, k + 1)) return true;
                used[x] = false;
            }
            return false;
        };
        return rec(rec, 5);
    };
    auto find_signs = [&](const std::array<int, 12>& pi, std::array<int, 12>& sgn) {
        for (int s = 0; s < 4096; ++s) {
            for (int i = 0; i < 12; ++i) sgn[i] = (s >> i & 1) ? 2 : 1;
            bool ok = true;
            for (int i = 0; i < 6 && ok; ++i) {
                Word c{};
                for (int j = 0; j < 12; ++j) c[pi[j]] = rows[i][j] * sgn[j] % 3;
                ok = in_code(c);
            }
            if (ok) return true;
        }
        return false;
    };

    std::vector<Perm> gens;
    std::vector<Point> neg(24);
    for (Point i = 0; i < 24; ++i) neg[i] = (i + 12) % 24;
    gens.emplace_back(neg);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::array<int, 12> pi{}, sgn{};
        if (!find_perm(pi) || !find_signs(pi, sgn)) throw std::logic_error("hexad-preserving permutation not monomial");
        // (i, e) -> (pi(i), e * s_i); sign + is point i, sign - is point i + 12
        std::vector<Point> img(24);
        for (int i = 0; i < 12; ++i) {
            const bool flip = sgn[i] == 2;
            img[i] = static_cast<Point>(pi[i] + (flip ? 12 : 0));
            img[i + 12] = static_cast<Point>(pi[i] + (flip ? 0 : 12));
        }
        gens.emplace_back(std::move(img));
        if (gens.size() >= 3 && PermGroup(24, gens).order() == 190080) return PermGroup(24, gens, 190080);
    }
    throw std::logic_error("2.M12 generation did not reach order 190080");
}

BuiltinGroup builtin_group(const std::string& name, std::uint64_t seed)
{
    if (!seed) seed = global_seed();
    for (const auto& e : matrix_entries()) {
        if (name != e.name) continue;
        auto IG = induced_group(e.spec);
        return {e.name, e.description, std::move(IG.group), e.spec, e.type, e.spec.r};
    }
    for (const auto& e : sporadic_entries()) {
        if (name != e.name) continue;
        BuiltinGroup b{e.name, e.description, {}, std::nullopt, e.type, e.r};
        if (name == "3S6_18" || name == "2M12_24") {
            const PermGroup G = read_group_file(data_dir() + "/groups/" + name + ".txt");
            b.group = PermGroup(G.degree(), G.gens(), name == "3S6_18" ? 2160 : 190080);
        } else {
            b.group = rank3_coset_action(sporadic_source(name), e.r, seed);
        }
        return b;
    }
    if (name.rfind("linear:", 0) == 0 || name.rfind("unitary:", 0) == 0) {
        const GroupSpec s = parse_spec(name);
        auto IG = induced_group(s);
        return {name, s.name(), std::move(IG.group), s, "", s.r};
    }
    throw std::invalid_argument("unknown builtin group " + name);
}

BuiltinGroup resolve_group(const std::string& ref, std::uint64_t seed)
{
    if (ref.rfind("builtin:", 0) == 0) return builtin_group(ref.substr(8), seed);
    if (ref.rfind("file:", 0) == 0) {
        BuiltinGroup b;
        b.name = ref;
        b.description = "group file " + ref.substr(5);
        b.group = read_group_file(ref.substr(5));
        return b;
    }
    throw std::invalid_argument("group reference must be builtin:<name> or file:<path>");
}

} // namespace r3pls

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3pls/matsemi.hpp"
#include "r3pls/omega.hpp"

#include <random>

using namespace r3pls;

namespace {

Mat random_mat(const Field& F, unsigned n, std::mt19937_64& rng)
{
    Mat A(n);
    for (auto& x : A.e) x = static_cast<Elem>(rng() % F.q());
    return A;
}

std::vector<Elem> random_vec(const Field& F, unsigned n, std::mt19937_64& rng)
{
    std::vector<Elem> v(n);
    for (auto& x : v) x = static_cast<Elem>(rng() % F.q());
    return v;
}

// v -> v^{phi^k} A, written out coordinatewise
std::vector<Elem> apply_by_hand(const Field& F, int k, const Mat& A, std::vector<Elem> v)
{
    for (auto& x : v) x = F.frob(x, k);
    std::vector<Elem> w(A.n, 0);
    for (unsigned j = 0; j < A.n; ++j)
        for (unsigned i = 0; i < A.n; ++i) w[j] = F.add(w[j], F.mul(v[i], A(i, j)));
    return w;
}

std::uint64_t gl_order(unsigned n, std::uint64_t q)
{
    std::uint64_t o = 1, qn = ipow(q, n);
    for (unsigned i = 0; i < n; ++i) o *= qn - ipow(q, i);
    return o;
}

} // namespace

TEST_CASE("matrix arithmetic")
{
    std::mt19937_64 rng(5);
    for (auto [p, a] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 1u}, {2u, 4u}}) {
        auto F = Field::make(p, a);
        for (int t = 0; t < 50; ++t) {
            Mat A = random_mat(*F, 3, rng), B = random_mat(*F, 3, rng);
            CHECK(mat_det(*F, mat_mul(*F, A, B)) == F->mul(mat_det(*F, A), mat_det(*F, B)));
            CHECK(mat_mul(*F, mat_mul(*F, A, B), A) == mat_mul(*F, A, mat_mul(*F, B, A)));
            if (mat_det(*F, A) != 0) {
                CHECK(mat_mul(*F, A, mat_inverse(*F, A)) == mat_identity(3));
            } else {
                CHECK_THROWS(mat_inverse(*F, A));
            }
            CHECK(mat_transpose(mat_transpose(A)) == A);
        }
    }
    auto F4 = Field::make(2, 2);
    CHECK(mat_det(*F4, mat_diag({2, 3, 1})) == F4->mul(2, 3));
}

TEST_CASE("semilinear composition matches composition of maps")
{
    std::mt19937_64 rng(9);
    for (auto [p, a] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 4u}, {3u, 4u}, {5u, 2u}, {2u, 8u}}) {
        auto F = Field::make(p, a);
        for (int t = 0; t < 200; ++t) {
            SemilinearElem x{static_cast<int>(rng() % a), random_mat(*F, 3, rng)};
            SemilinearElem y{static_cast<int>(rng() % a), random_mat(*F, 3, rng)};
            const auto v = random_vec(*F, 3, rng);
            CHECK(sl_apply(*F, x, v) == apply_by_hand(*F, x.frob, x.mat, v));
            CHECK(sl_apply(*F, sl_compose(*F, x, y), v) == sl_apply(*F, y, sl_apply(*F, x, v)));
            if (mat_det(*F, x.mat) != 0) CHECK(sl_apply(*F, sl_inverse(*F, x), sl_apply(*F, x, v)) == v);
        }
        SemilinearElem phi = sl_frobenius(2, 1);
        CHECK(sl_power(*F, phi, a) == sl_linear(mat_identity(2)));
    }
}

TEST_CASE("hermitian form and unitary matrices")
{
    auto F = Field::make(2, 4); // GF(16) = GF(4^2)
    const auto P = unitary_form(4);
    CHECK(is_unitary(*F, mat_identity(3), P));
    CHECK(is_unitary(*F, mat_antidiag({1, 1, 1}), P));
    CHECK_FALSE(is_unitary(*F, mat_diag({F->w(1), 1, 1}), P));
    // (e, f) = 1 and (x, x) = 1
    CHECK(herm(*F, P, {1, 0, 0}, {0, 0, 1}) == 1);
    CHECK(herm(*F, P, {0, 1, 0}, {0, 1, 0}) == 1);
    CHECK(herm(*F, P, {1, 0, 0}, {1, 0, 0}) == 0);
}

TEST_CASE("unitary generators are semisimilarities")
{
    std::mt19937_64 rng(2);
    for (auto kind : {GroupKind::SU3, GroupKind::ZSU3, GroupKind::GU3, GroupKind::GammaU3})
        for (std::uint32_t q : {3u, 4u, 5u, 8u}) {
            GroupSpec s{kind, true, 3, q, 1, 0};
            auto F = spec_field(s);
            const auto P = unitary_form(q);
            for (const auto& g : gens_group(s)) {
                const Elem lambda = semisimilarity_factor(*F, g, P);
                REQUIRE(lambda != 0);
                for (int t = 0; t < 20; ++t) {
                    const auto u = random_vec(*F, 3, rng), v = random_vec(*F, 3, rng);
                    const Elem lhs = herm(*F, P, sl_apply(*F, g, u), sl_apply(*F, g, v));
                    CHECK(lhs == F->mul(lambda, F->frob(herm(*F, P, u, v), g.frob)));
                }
                if (kind == GroupKind::SU3) {
                    CHECK(g.frob == 0);
                    CHECK(mat_det(*F, g.mat) == 1);
                    CHECK(is_unitary(*F, g.mat, P));
                }
            }
        }
}

TEST_CASE("classical group orders")
{
    CHECK(order_sl(2, 4) == 60);
    CHECK(order_sl(3, 3) == 5616);
    CHECK(order_su3(4) == 62400);
    CHECK(order_su3(3) == 6048);
    auto F3 = Field::make(3, 1);
    // PSL_3(3) on the 13 projective points
    CHECK(projective_image(*F3, 3, gens_sl(3, *F3), {1, 0, 0}).order() == 5616);
    auto F9 = Field::make(3, 2);
    // PSU_3(3) on the 28 isotropic points
    const auto U = projective_image(*F9, 3, gens_su3(*F9), {1, 0, 0});
    CHECK(U.degree() == 28);
    CHECK(U.order() == 6048);
}

TEST_CASE("bookkept orders match the induced action")
{
    // |GammaL_n(q)| from the product formula, divided by the scalars <w^r> it contains
    struct Case {
        GroupSpec s;
        std::uint64_t hand;
    };
    const std::vector<Case> cases = {
        {{GroupKind::GammaL, false, 2, 4, 3, 0}, gl_order(2, 4) * 2},
        {{GroupKind::GammaL, false, 2, 16, 5, 0}, gl_order(2, 16) * 4 / 3},
        {{GroupKind::GammaL, false, 3, 4, 3, 0}, gl_order(3, 4) * 2},
        {{GroupKind::YSL, false, 3, 3, 2, 0}, gl_order(3, 3) / 2},
        {{GroupKind::GL, false, 3, 3, 2, 0}, gl_order(3, 3)},
        {{GroupKind::YSL, false, 4, 3, 2, 0}, gl_order(4, 3) / 2},
        {{GroupKind::ZSLphi, false, 2, 25, 3, 1}, (gl_order(2, 25) / 24) * 12 / 8 * 2},
        {{GroupKind::GammaU3, true, 3, 4, 3, 0}, order_su3(4) * 15 * 4 / 5},
    };
    for (const auto& c : cases) {
        CAPTURE(c.s.name());
        CHECK(induced_order(c.s) == c.hand);
        const auto S = build_omega(c.s.unitary ? OmegaKind::Unitary : OmegaKind::Linear, c.s.n, c.s.q, c.s.r);
        CHECK(induce_action(S, gens_group(c.s)).order() == c.hand);
    }
}

TEST_CASE("scalars and the kernel")
{
    CHECK(contains_center({GroupKind::GammaL, false, 2, 4, 3, 0}));
    CHECK_FALSE(contains_center({GroupKind::YSL, false, 2, 16, 5, 0}));
    CHECK(frob_index({GroupKind::GammaL, false, 2, 16, 5, 0}) == 4);
    CHECK(frob_index({GroupKind::ZSLphi, false, 2, 81, 5, 2}) == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3pls/gfield.hpp"

using namespace r3pls;

namespace {

// multiplicative order by repeated multiplication
std::uint32_t order_by_walk(const Field& F, Elem x)
{
    Elem y = x;
    std::uint32_t k = 1;
    while (y != 1) {
        y = F.mul(y, x);
        ++k;
    }
    return k;
}

const std::vector<std::pair<unsigned, unsigned>> kFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4},
                                                             {3, 2}, {5, 2}, {3, 4}, {2, 6}, {2, 8}, {7, 2}};

} // namespace

TEST_CASE("small fields and primitive elements")
{
    auto F2 = Field::make(2, 1);
    CHECK(F2->q() == 2);
    CHECK(F2->omega() == 1);
    auto F16 = Field::make(2, 4);
    CHECK(order_by_walk(*F16, F16->omega()) == 15);
    auto F81 = Field::make(3, 4);
    Elem y = 1;
    for (int i = 0; i < 40; ++i) y = F81->mul(y, F81->omega());
    CHECK(y != 1);
    for (int i = 0; i < 40; ++i) y = F81->mul(y, F81->omega());
    CHECK(y == 1);
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
}

TEST_CASE("field axioms on every element")
{
    for (auto [p, a] : kFields) {
        auto F = Field::make(p, a);
        CAPTURE(F->q());
        CHECK(is_irreducible(F->modulus(), p));
        CHECK(order_by_walk(*F, F->omega()) == F->q() - 1);
        for (Elem x = 0; x < F->q(); ++x) {
            CHECK(F->add(x, F->neg(x)) == 0);
            if (x) {
                CHECK(F->mul(x, F->inv(x)) == 1);
                CHECK(F->pow(x, F->q() - 1) == 1);
                CHECK(F->w(F->log(x)) == x);
            }
            // a-fold Frobenius is the identity
            Elem z = x;
            for (unsigned k = 0; k < a; ++k) z = F->frob(z, 1);
            CHECK(z == x);
            CHECK(F->pow(x, F->q()) == x);
        }
        // distributivity on a sample
        for (Elem x = 0; x < F->q(); x += 1 + F->q() / 17)
            for (Elem y = 0; y < F->q(); y += 1 + F->q() / 13)
                for (Elem z = 0; z < F->q(); z += 1 + F->q() / 11)
                    CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
    }
}

TEST_CASE("construction is deterministic")
{
    auto A = Field::make(5, 2);
    auto B = Field::make(5, 2);
    CHECK(A->modulus() == B->modulus());
    CHECK(A->omega() == B->omega());
}

TEST_CASE("subfields")
{
    auto F = Field::make(3, 4);
    for (std::uint32_t q0 : {3u, 9u, 81u}) {
        auto S = F->subfield(q0);
        CHECK(S.size() == q0);
        for (Elem x : S) CHECK(F->pow(x, q0) == x);
    }
    CHECK_FALSE(F->has_subfield(27));
    std::size_t fixed = 0;
    for (Elem x = 0; x < F->q(); ++x) fixed += F->pow(x, 9) == x;
    CHECK(fixed == 9);
}

TEST_CASE("trace to the half field")
{
    for (auto [p, a, q] : {std::tuple{2u, 4u, 4u}, {3u, 2u, 3u}, {2u, 8u, 16u}, {5u, 2u, 5u}}) {
        auto F = Field::make(p, a);
        std::vector<std::uint32_t> fiber(F->q(), 0);
        for (Elem x = 0; x < F->q(); ++x) {
            Elem t = trace_to_subfield(*F, q, x);
            CHECK(t == F->add(x, F->pow(x, q)));
            CHECK(F->in_subfield(t, q));
            ++fiber[t];
        }
        // surjective with fibres of size q
        for (Elem x : F->subfield(q)) CHECK(fiber[x] == q);
        // linearity over the subfield
        for (Elem l : F->subfield(q))
            for (Elem x = 0; x < F->q(); x += 3)
                for (Elem y = 0; y < F->q(); y += 5)
                    CHECK(trace_to_subfield(*F, q, F->add(F->mul(l, x), y)) ==
                          F->add(F->mul(l, trace_to_subfield(*F, q, x)), trace_to_subfield(*F, q, y)));
    }
    auto F16 = Field::make(2, 4);
    CHECK_THROWS(trace_to_subfield(*F16, 2, 1));
    CHECK(trace_to_subfield(*F16, 4, 0) == 0);
}

TEST_CASE("primitive prime divisors")
{
    CHECK(is_primitive_prime_divisor(5, 2, 4));
    CHECK_FALSE(is_primitive_prime_divisor(3, 7, 2));
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) CHECK(is_primitive_prime_divisor(2, p, 1));
    for (std::uint64_t r = 2; r < 100; ++r) {
        if (!is_prime(r)) continue;
        for (std::uint64_t p = 2; p < 50; ++p) {
            if (!is_prime(p)) continue;
            unsigned m = 0;
            if (p % r) {
                std::uint64_t x = p % r;
                m = 1;
                while (x != 1) {
                    x = x * p % r;
                    ++m;
                }
            }
            CAPTURE(r);
            CAPTURE(p);
            CHECK(is_primitive_prime_divisor(r, p, static_cast<unsigned>(r - 1)) == (m == r - 1));
            CHECK(mult_order_mod(p, r) == m);
        }
    }
}

TEST_CASE("coset index")
{
    auto F16 = Field::make(2, 4);
    CHECK(coset_index(*F16, 5, 1) == 0);
    CHECK(coset_index(*F16, 5, F16->w(7)) == 2);
    auto F9 = Field::make(3, 2);
    CHECK(coset_index(*F9, 2, F9->w(3)) == 1);
    for (std::uint32_t r : {3u, 5u, 15u}) {
        for (Elem x = 1; x < 16; ++x) {
            // constant on cosets of <w^r>
            CHECK(coset_index(*F16, r, F16->mul(x, F16->w(r))) == coset_index(*F16, r, x));
            for (Elem y = 1; y < 16; ++y)
                if (coset_index(*F16, r, x) == coset_index(*F16, r, y)) CHECK((F16->log(y) + 15 - F16->log(x)) % r == 0);
        }
    }
}

TEST_CASE("integer helpers")
{
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(gcd_u(84, 36) == 12);
    CHECK(ipow(3, 4) == 81);
    CHECK(is_irreducible({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible({1, 0, 1}, 2));
}

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace r3pls {

// Field elements are encoded as integers: the coefficient vector of the
// residue polynomial read in base p (constant term least significant).
using Elem = std::uint32_t;

class Field {
public:
    // Cached, deterministic construction. Throws std::invalid_argument.
    static std::shared_ptr<const Field> make(unsigned p, unsigned a);

    unsigned p() const { return p_; }
    unsigned a() const { return a_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order_mult() const { return q_ - 1; }
    Elem omega() const { return omega_; }
    // ascending coefficients, length a+1, monic
    const std::vector<unsigned>& modulus() const { return modulus_; }
    bool modulus_from_table() const { return from_table_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const
    {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::int64_t e) const;
    // x^(p^k)
    Elem frob(Elem x, int k) const;

    // omega^e, e taken mod q-1 (negative allowed)
    Elem w(std::int64_t e) const;
    // discrete log base omega; x != 0
    std::uint32_t log(Elem x) const;

    // image of an integer in the prime field
    Elem from_int(std::int64_t v) const;

    // subfield of order q0 (q0^f = q): membership and element list
    bool in_subfield(Elem x, std::uint32_t q0) const;
    std::vector<Elem> subfield(std::uint32_t q0) const;
    bool has_subfield(std::uint32_t q0) const;

private:
    Field(unsigned p, unsigned a, std::vector<unsigned> modulus, bool from_table);

    unsigned p_, a_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    bool from_table_;
    Elem omega_ = 0;
    std::vector<Elem> exp_;            // length 2(q-1), exp_[i] = omega^i
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<Elem> add_table_;      // q*q when small
    std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b);
std::uint64_t ipow(std::uint64_t b, unsigned e);
// multiplicative order of p mod r (r prime not dividing p); 0 if r | p
unsigned mult_order_mod(std::uint64_t p, std::uint64_t r);

// Irreducibility of a monic polynomial over GF(p) (ascending coefficients),
// by gcd(f, x^{p^i} - x) = 1 for i <= deg/2.
bool is_irreducible(const std::vector<unsigned>& f, unsigned p);

// o_r(p) == m
bool is_primitive_prime_divisor(std::uint64_t r, std::uint64_t p, unsigned m);

// Tr(x) = x + x^q for F = GF(q^2); throws if q^2 != |F|
Elem trace_to_subfield(const Field& F, std::uint32_t q, Elem x);

// unique i in [0,r) with x * omega^{-i} in <omega^r>
unsigned coset_index(const Field& F, std::uint32_t r, Elem x);

} // namespace r3pls

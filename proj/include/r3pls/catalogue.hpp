#pragma once

#include "r3pls/matsemi.hpp"
#include "r3pls/omega.hpp"
#include "r3pls/permcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace r3pls {

struct BuiltinGroup {
    std::string name;
    std::string description;
    PermGroup group;
    std::optional<GroupSpec> spec; // matrix series entries only
    std::string type;              // "qp", "it", "sp" as catalogued; empty if not catalogued
    std::uint32_t r = 0;           // size of the cells of the block system
};

std::vector<std::string> builtin_names();
// matrix entries are also reachable as linear:<Kind>:n:q:r[:param] and unitary:<Kind>:q:r[:param]
BuiltinGroup builtin_group(const std::string& name, std::uint64_t seed = 0);
// builtin:<name> or file:<path>
BuiltinGroup resolve_group(const std::string& ref, std::uint64_t seed = 0);

GroupKind parse_group_kind(const std::string& s);
std::string group_kind_name(GroupKind k);
GroupSpec parse_spec(const std::string& s); // linear:... / unitary:...

// Faithful rank-3 action of M of degree r*|M:H|, H the stabilizer of point 0 of M,
// on the cosets of an index-r subgroup of H. Normal subgroups are tried first.
PermGroup rank3_coset_action(const PermGroup& M, std::uint64_t r, std::uint64_t seed);

// C2 x M acting on degree(M) + 2 points
PermGroup direct_product_c2(const PermGroup& M);

// restriction of G to an invariant set S (point i of the result is S[i])
PermGroup restrict_to(const PermGroup& G, const std::vector<Point>& S);

// stabilizer of the 18 vectors over a hyperoval in SigmaL_3(4), acting on them
PermGroup three_s6_18();
// monomial automorphisms of the extended ternary Golay code on 24 signed coordinates
PermGroup two_m12_24(std::uint64_t seed = 1);

std::string data_dir();

} // namespace r3pls

#pragma once

#include "r3pls/incidence.hpp"
#include "r3pls/omega.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace r3pls {

enum class Family { AGstar, Delta, LSub, DLSub, USub, AGUstar };

struct FamilyParams {
    Family family = Family::AGstar;
    unsigned n = 2;
    std::uint32_t q = 0, q0 = 0, r = 0;
    unsigned j = 0; // DLSub twist
    std::string name() const;
};

// k = (q-1)/(r(q0-1)) and the least t with <w^t> cap <w^r> = <w^{kr}>.
struct LsubParams {
    std::uint32_t k = 0, t = 0;
    std::uint32_t r_pi = 0; // largest divisor of r whose primes all divide k
};
LsubParams lsub_params(std::uint32_t q, std::uint32_t q0, std::uint32_t r);
// scan form of t, kept apart from the closed form
std::uint32_t lsub_t_scan(std::uint32_t q, std::uint32_t r, std::uint32_t k);

struct ExpectedCounts {
    std::uint64_t points = 0, lines = 0, line_size = 0;
    bool pls = true;
    unsigned multiplicity = 1; // 0 when not fixed by the formulas
};
ExpectedCounts expected_counts(const FamilyParams& fp);

// throws std::invalid_argument when the parameters are outside the family's range
void check_family(const FamilyParams& fp);

// Group whose orbit on the base line gives the line set.
GroupSpec family_group(const FamilyParams& fp);
OmegaSpace family_space(const FamilyParams& fp);
std::vector<Point> family_base_line(const OmegaSpace& S, const FamilyParams& fp);

struct FamilyResult {
    FamilyParams params;
    OmegaSpace space;
    IncidenceStructure structure; // empty in count-only mode
    bool count_only = false;
    std::uint64_t sampled = 0;    // lines checked in count-only mode
    bool sample_ok = true;        // sampled lines pairwise meet in at most one point
};

struct BuildOptions {
    // above this many expected lines only sample (0 = never)
    std::uint64_t enumerate_limit = 10'000'000;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0;
};

FamilyResult build_family(const FamilyParams& fp, const BuildOptions& opt = {});

IncidenceStructure ag_star(unsigned n, std::uint32_t q);
IncidenceStructure delta(unsigned n, std::uint32_t q);
IncidenceStructure lsub(unsigned n, std::uint32_t q, std::uint32_t q0, std::uint32_t r);
IncidenceStructure dlsub(std::uint32_t q, std::uint32_t q0, std::uint32_t r, unsigned j);
IncidenceStructure usub(std::uint32_t q, std::uint32_t q0, std::uint32_t r);
IncidenceStructure agu_star(std::uint32_t q);

nlohmann::json params_to_json(const FamilyParams& fp);
// inverse of params_to_json (extra keys ignored)
FamilyParams params_from_json(const nlohmann::json& j);
// agstar, delta, lsub, dlsub, usub, agustar (any case)
Family parse_family(const std::string& s);

} // namespace r3pls

#pragma once

#include "r3pls/gfield.hpp"
#include "r3pls/matsemi.hpp"
#include "r3pls/permcore.hpp"

#include <json.hpp>

#include <string>
#include <unordered_map>
#include <vector>

namespace r3pls {

enum class OmegaKind { Linear, Unitary };

// Points are <w^r>-cosets of nonzero (isotropic) vectors, stored by a canonical
// representative whose first nonzero coordinate is w^i with 0 <= i < r.
// Index order: pivot position, then lex on log codes (0 -> 0, w^k -> k+1).
class OmegaSpace {
public:
    OmegaKind kind() const { return kind_; }
    unsigned n() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t r() const { return r_; }
    const Field& field() const { return *F_; }
    FieldPtr field_ptr() const { return F_; }

    std::size_t size() const { return coords_.size() / n_; }
    std::vector<Elem> vec(Point i) const;
    const Elem* data(Point i) const { return coords_.data() + std::size_t(i) * n_; }

    std::vector<Elem> canonical(std::vector<Elem> v) const;
    // throws std::out_of_range if v is not (a multiple of) a point
    Point point_of(const std::vector<Elem>& v) const;
    bool contains(const std::vector<Elem>& v) const;

    const std::vector<std::vector<Point>>& sigma() const { return sigma_; }
    std::uint32_t cell_of(Point i) const { return cell_of_[i]; }

    friend OmegaSpace build_omega(OmegaKind kind, unsigned n, std::uint32_t q, std::uint32_t r, bool allow_small);

private:
    std::uint64_t code(const Elem* v) const;
    std::int64_t lookup(std::uint64_t c) const;

    OmegaKind kind_ = OmegaKind::Linear;
    unsigned n_ = 0;
    std::uint32_t q_ = 0, r_ = 1;
    FieldPtr F_;
    std::vector<Elem> coords_;
    std::vector<std::int32_t> table_; // dense code -> index, when small
    std::unordered_map<std::uint64_t, Point> map_;
    std::vector<std::vector<Point>> sigma_;
    std::vector<std::uint32_t> cell_of_;
};

// allow_small admits (n,q) = (2,3), needed by the AG*/Delta families only
OmegaSpace build_omega(OmegaKind kind, unsigned n, std::uint32_t q, std::uint32_t r, bool allow_small = false);

Perm induce_perm(const OmegaSpace& S, const SemilinearElem& g);
PermGroup induce_action(const OmegaSpace& S, const std::vector<SemilinearElem>& gens, std::uint64_t known_order = 0);

// Space and induced group for a catalogued spec (order taken from the bookkeeping).
struct InducedGroup {
    GroupSpec spec;
    OmegaSpace space;
    std::vector<SemilinearElem> matrix_gens;
    PermGroup group;
};
InducedGroup induced_group(const GroupSpec& spec);

struct ActionFlags {
    bool semiprimitive = true;
    bool innately_transitive = false;
    bool quasiprimitive = false;
    bool rank3 = false;     // arithmetic prediction
    unsigned rank = 0;      // computed
    std::string type() const; // "qp", "it" or "sp"
};

// Arithmetic flags cross-checked against the computed rank; throws std::logic_error on disagreement.
ActionFlags classify_action(const OmegaSpace& S, const PermGroup& G, const GroupSpec& spec);

nlohmann::json omega_to_json(const OmegaSpace& S);

} // namespace r3pls

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace r3pls {

using Point = std::uint32_t;

// Right action: x^(g*h) = (x^g)^h.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree);
    explicit Perm(std::vector<Point> images); // throws if not a bijection

    std::size_t degree() const { return img_.size(); }
    Point operator[](Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }

    Perm operator*(const Perm& h) const;
    Perm inverse() const;
    bool is_identity() const;
    std::uint64_t order() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }

    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

private:
    std::vector<Point> img_;
};

struct BsgsOptions {
    std::vector<Point> base_prefix;
    // When nonzero and reached, construction stops; it is never trusted blindly:
    // the random phase only ever produces elements of the group.
    std::uint64_t known_order = 0;
    bool verify = true; // deterministic Schreier-generator check if known_order not reached
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

class Bsgs {
public:
    struct Level {
        Point base;
        std::vector<std::uint32_t> gens; // indices into sgs
        std::vector<Point> orbit;
        std::vector<std::int32_t> sv; // -1: not in orbit, -2: base point, else sgs index
    };

    Bsgs(std::size_t degree, const std::vector<Perm>& gens, const BsgsOptions& opt);

    std::size_t degree() const { return degree_; }
    std::uint64_t order() const;
    const std::vector<Level>& levels() const { return levels_; }
    std::vector<Point> base() const;
    const std::vector<Perm>& strong_gens() const { return sgs_; }
    // strong generators of the stabilizer of base[0..i-1]
    std::vector<Perm> level_gens(std::size_t i) const;
    std::uint64_t level_order(std::size_t i) const;

    // returns residue and the level where sifting stopped (levels().size() if it went through)
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t start = 0) const;
    bool contains(const Perm& g) const;
    // u with base[i]^u = x (x in orbit i)
    Perm transversal(std::size_t i, Point x) const;

private:
    void add_strong(Perm h, std::size_t upto_level);
    void rebuild_level(std::size_t i);
    bool verify_once();

    std::size_t degree_;
    std::size_t input_gens_ = 0; // sgs_[0..input_gens_) generate the group
    std::vector<Perm> sgs_, sgs_inv_;
    std::vector<Level> levels_;
};

class PermGroup {
public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Perm> gens, std::uint64_t known_order = 0);

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& gens() const { return gens_; }
    std::uint64_t known_order() const { return known_order_; }

    const Bsgs& bsgs() const;
    Bsgs bsgs_with_base(const std::vector<Point>& prefix) const;
    std::uint64_t order() const { return bsgs().order(); }
    bool contains(const Perm& g) const { return bsgs().contains(g); }

private:
    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::uint64_t known_order_ = 0;
    mutable std::shared_ptr<Bsgs> bsgs_;
};

// Global seed for all randomized internals (set from the CLI --seed).
void set_global_seed(std::uint64_t seed);
std::uint64_t global_seed();

// Product-replacement random elements.
class RandomElements {
public:
    RandomElements(const std::vector<Perm>& gens, std::size_t degree, std::uint64_t seed);
    Perm next();

private:
    std::vector<Perm> state_;
    Perm acc_;
    std::mt19937_64 rng_;
};

std::vector<Point> orbit(const std::vector<Perm>& gens, std::size_t degree, Point x);
std::vector<Point> orbit(const PermGroup& G, Point x);
std::vector<std::vector<Point>> orbits(const std::vector<Perm>& gens, std::size_t degree);
std::vector<std::vector<Point>> orbits(const PermGroup& G);
bool is_transitive(const PermGroup& G);

PermGroup stabilizer(const PermGroup& G, Point x);
PermGroup pointwise_stabilizer(const PermGroup& G, const std::vector<Point>& pts);
// subgroup generated by gens (same degree), order verified
PermGroup subgroup(const PermGroup& G, std::vector<Perm> gens);

// Smallest block containing beta and gamma for the group generated by gens
// (which must be transitive on the orbit of beta). Sorted.
std::vector<Point> minimal_block(const std::vector<Perm>& gens, std::size_t degree,
                                 const std::vector<Point>& seed_set);
std::vector<Point> minimal_block(const PermGroup& G, Point beta, Point gamma);
// every generator maps every image of block to an image or a disjoint set
bool is_block(const std::vector<Perm>& gens, std::size_t degree, const std::vector<Point>& block);

// All nontrivial blocks containing beta of G acting on orbit(G,beta).
// Join-closure of the minimal blocks; throws std::runtime_error if cap is exceeded.
std::vector<std::vector<Point>> all_blocks_through(const PermGroup& G, Point beta, std::size_t cap = 10000);
// Independent route: blocks are beta^K for the overgroups K >= G_beta; enumerated by
// closing the stabilizer under adjoining transversal elements.
std::vector<std::vector<Point>> blocks_by_overgroups(const PermGroup& G, Point beta, std::size_t cap = 10000);

// Action of G on the right cosets of R (R <= G); point 0 is the coset R.
PermGroup coset_action(const PermGroup& G, const PermGroup& R);

PermGroup normal_subgroup_of_index(const PermGroup& H, std::uint64_t r, std::uint64_t seed);
PermGroup normal_closure(const PermGroup& H, const std::vector<Perm>& gens);
bool is_normal(const PermGroup& H, const PermGroup& N);
// randomized search for a subgroup of index r satisfying accept
std::optional<PermGroup> subgroup_of_index(const PermGroup& H, std::uint64_t r,
                                           const std::function<bool(const PermGroup&)>& accept,
                                           std::uint64_t seed, unsigned restarts = 400);

unsigned rank(const PermGroup& G);

// Backtrack over the stabilizer chain: setwise stabilizer of S.
PermGroup setwise_stabilizer(const PermGroup& G, const std::vector<Point>& S);

// Orbit of a set ("line") under G. Lines are stored sorted, concatenated.
struct LineOrbit {
    std::size_t line_size = 0;
    std::vector<Point> flat;
    // flag components: flag (i,p) -> comp id, only when tracked
    bool flag_transitive = false;
    std::size_t num_lines() const { return line_size ? flat.size() / line_size : 0; }
};
LineOrbit line_orbit(const std::vector<Perm>& gens, const std::vector<Point>& L, bool track_flags,
                     std::size_t max_lines = 0);
LineOrbit line_orbit_serial(const std::vector<Perm>& gens, const std::vector<Point>& L, bool track_flags,
                            std::size_t max_lines = 0);
bool flag_transitive_on_line(const PermGroup& G, const std::vector<Point>& L);

// Group file: first line degree N, then one generator per line (N 0-based images).
PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::string& path);
void write_group(std::ostream& out, const PermGroup& G);

} // namespace r3pls

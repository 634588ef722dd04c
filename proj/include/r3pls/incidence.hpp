#pragma once

#include "r3pls/permcore.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace r3pls {

// Points 0..N-1; lines of one common size, each strictly sorted, kept in lexicographic order.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    // flat: concatenated lines; sorted here, duplicates rejected (std::invalid_argument)
    IncidenceStructure(std::size_t num_points, std::size_t line_size, std::vector<Point> flat);
    static IncidenceStructure from_lines(std::size_t num_points, const std::vector<std::vector<Point>>& lines);

    std::size_t num_points() const { return n_; }
    std::size_t line_size() const { return k_; }
    std::size_t num_lines() const { return k_ ? flat_.size() / k_ : 0; }
    std::span<const Point> line(std::size_t i) const { return {flat_.data() + i * k_, k_}; }
    const std::vector<Point>& flat() const { return flat_; }

    // index of a sorted line, or -1
    std::int64_t find(std::span<const Point> sorted_line) const;
    bool has_line(std::span<const Point> sorted_line) const { return find(sorted_line) >= 0; }

    bool operator==(const IncidenceStructure& o) const { return n_ == o.n_ && k_ == o.k_ && flat_ == o.flat_; }

    nlohmann::json params = nlohmann::json::object();

private:
    std::size_t n_ = 0, k_ = 0;
    std::vector<Point> flat_;
};

struct PlsReport {
    bool is_pls = false;
    unsigned multiplicity = 0; // max number of lines through a pair of points
    bool line_size_constant = true;
    bool point_degree_constant = false;
    std::size_t collinear_pairs = 0;
    std::size_t min_degree = 0, max_degree = 0;
};

PlsReport validate_pls(const IncidenceStructure& D);
// independent check: per point pair, intersect incidence lists
unsigned multiplicity_bruteforce(const IncidenceStructure& D);
bool is_proper(const IncidenceStructure& D);
bool is_connected(const IncidenceStructure& D);
std::vector<std::vector<Point>> components(const IncidenceStructure& D);

struct Fingerprint {
    std::size_t points = 0, lines = 0, line_size = 0;
    std::vector<std::size_t> degrees;                  // sorted
    std::vector<std::map<unsigned, std::size_t>> concurrence; // per point: #lines shared -> #points; sorted
    std::vector<std::size_t> component_sizes;          // sorted
    bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const IncidenceStructure& D);

bool preserved_by(const IncidenceStructure& D, const std::vector<Perm>& gens);
IncidenceStructure relabel(const IncidenceStructure& D, const Perm& g);
// line set of D mapped by g (same as relabel)
IncidenceStructure image(const IncidenceStructure& D, const Perm& g);
// union of line sets; number of shared lines reported through *shared
IncidenceStructure line_union(const IncidenceStructure& A, const IncidenceStructure& B, std::size_t* shared = nullptr);

// Backtracking search for a point bijection carrying the lines of A onto those of B (both
// partial linear spaces). With point_transitive, B is assumed to have a point-transitive
// automorphism group and point 0 is sent to 0. Gives up after budget assignments and sets
// *exhausted; the returned map is verified.
std::optional<Perm> find_isomorphism(const IncidenceStructure& A, const IncidenceStructure& B,
                                     bool point_transitive, std::size_t budget = 5'000'000,
                                     bool* exhausted = nullptr);

nlohmann::json to_json(const IncidenceStructure& D);
IncidenceStructure incidence_from_json(const nlohmann::json& j);
void write_csv(std::ostream& out, const IncidenceStructure& D);
// collinearity graph; throws for more than 200 points
void write_dot(std::ostream& out, const IncidenceStructure& D);

} // namespace r3pls

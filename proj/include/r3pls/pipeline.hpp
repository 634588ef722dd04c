#pragma once

#include "r3pls/catalogue.hpp"
#include "r3pls/families.hpp"
#include "r3pls/incidence.hpp"
#include "r3pls/omega.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace r3pls {

// The unique nontrivial block system of a transitive rank-3 group; throws if absent or not unique.
std::vector<std::vector<Point>> unique_block_system(const PermGroup& G);

// "qp", "it" or "sp" from the kernel K on the cells and the perfect residuum T:
// qp iff K = 1 and T is transitive; it iff T is transitive and T meets K trivially.
std::string permutation_type(const PermGroup& G, const std::vector<std::vector<Point>>& cells);

struct PipelineOptions {
    bool near_orbit = true; // blocks inside sigma minus alpha
    bool far_orbit = true;  // blocks inside Omega minus sigma
    std::optional<Point> beta_far, beta_near;
    bool keep_structures = true;
    bool iso_classes = true; // needs the structures while running
    std::size_t iso_budget = 5'000'000;
    std::size_t block_cap = 10000;
};

struct BlockOutcome {
    std::string orbit; // "far" or "near"
    std::vector<Point> block;
    bool passes_filter = true;
    bool flag_transitive = false;
    bool emitted = false;
    std::size_t num_lines = 0, line_size = 0;
    bool pls = false, proper = false, connected = false;
    std::size_t components = 0;
    // emitted structures that are isomorphic share a class (searched within one orbit)
    std::size_t iso_class = 0;
    bool iso_undecided = false;
    std::optional<IncidenceStructure> structure;
};

struct PipelineResult {
    std::string group;
    std::size_t degree = 0;
    unsigned rank = 0;
    std::vector<std::vector<Point>> sigma;
    Point alpha = 0, beta_far = 0, beta_near = 0;
    std::vector<BlockOutcome> results;

    std::vector<const BlockOutcome*> emitted(const std::string& orbit = "") const;
    // one emitted outcome per isomorphism class
    std::vector<const BlockOutcome*> classes(const std::string& orbit = "") const;
};

PipelineResult devillers_enumerate(const PermGroup& G, const PipelineOptions& opt = {}, const std::string& name = "");
// flag-transitive blocks of the sigma orbit, each with its structure
PipelineResult sigma_blocks(const PermGroup& G, const std::string& name = "");

nlohmann::json report_json(const PipelineResult& R, bool with_lines = false);

struct NamedBlock {
    std::string name;
    std::vector<Point> points;
};

// Blocks through beta (e2 / f) predicted by the block classification for this spec, built from vectors.
std::vector<NamedBlock> expected_blocks(const OmegaSpace& S, const GroupSpec& spec);
// Names of the blocks whose lines are flag-transitive for this spec.
std::vector<std::string> expected_flag_transitive(const GroupSpec& spec);
// beta = <w^r>e2 (linear) or <w^r>f (unitary)
Point standard_beta(const OmegaSpace& S);

struct BlockComparison {
    std::string group;
    std::vector<NamedBlock> expected;
    std::vector<std::vector<Point>> computed;
    std::vector<std::string> missing;    // expected names not computed
    std::size_t unexpected = 0;          // computed blocks not predicted
    bool match = false;
    nlohmann::json to_json() const;
};
BlockComparison classify_blocks(const InducedGroup& IG);

struct TableRow {
    std::string label;
    std::string expected, observed;
    bool pass = false;
    double seconds = 0;
};
struct TableReport {
    int id = 0;
    std::vector<TableRow> rows;
    bool pass() const;
    nlohmann::json to_json() const;
};

struct TableOptions {
    bool slow = false;
    std::size_t max_degree = 300;
};
TableReport reproduce_table(int id, const TableOptions& opt = {});

} // namespace r3pls

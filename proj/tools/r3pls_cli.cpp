#include "r3pls/catalogue.hpp"
#include "r3pls/families.hpp"
#include "r3pls/incidence.hpp"
#include "r3pls/omega.hpp"
#include "r3pls/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace r3pls;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    if (!path.empty()) write_text(path, j.dump(1) + "\n");
}

std::string format_of(const std::string& path, const std::string& fmt)
{
    if (!fmt.empty()) return fmt;
    for (const char* ext : {"csv", "dot"})
        if (path.size() > 4 && path.substr(path.size() - 4) == std::string(".") + ext) return ext;
    return "json";
}

void print_structure(const IncidenceStructure& D, const std::string& label)
{
    const auto rep = validate_pls(D);
    std::cout << label << ": " << D.num_points() << " points, " << D.num_lines() << " lines of size " << D.line_size()
              << ", multiplicity " << rep.multiplicity << (rep.is_pls ? ", partial linear space" : ", not a PLS")
              << (is_proper(D) ? ", proper" : ", not proper") << ", " << components(D).size() << " component(s)\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partial linear spaces from imprimitive rank 3 groups"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();

    // family build
    auto* family = app.add_subcommand("family", "build one of the six families");
    family->require_subcommand(1);
    auto* fbuild = family->add_subcommand("build", "construct a family member and check its counts");
    std::string kind, out, format;
    unsigned n = 2, j = 0;
    std::uint32_t q = 0, q0 = 0, r = 0;
    std::uint64_t samples = 10000, enumerate_limit = 10000000;
    fbuild->add_option("--kind", kind, "agstar|delta|lsub|dlsub|usub|agustar")->required();
    fbuild->add_option("--n", n);
    fbuild->add_option("--q", q)->required();
    fbuild->add_option("--q0", q0);
    fbuild->add_option("--r", r);
    fbuild->add_option("--j", j);
    fbuild->add_option("--out", out, "json, csv or dot by extension");
    fbuild->add_option("--format", format, "json|csv|dot");
    fbuild->add_option("--samples", samples, "lines sampled in count-only mode");
    fbuild->add_option("--enumerate-limit", enumerate_limit, "expected line count above which only sampling is done");

    // omega
    auto* omega = app.add_subcommand("omega", "list the points of Omega");
    std::string okind = "linear";
    omega->add_option("--kind", okind, "linear|unitary");
    omega->add_option("--n", n);
    omega->add_option("--q", q)->required();
    omega->add_option("--r", r)->required();
    omega->add_option("--out", out);

    // group
    auto* group = app.add_subcommand("group", "inspect groups");
    group->require_subcommand(1);
    auto* glist = group->add_subcommand("list", "builtin group names");
    auto* ginfo = group->add_subcommand("info", "degree, order, rank and type");
    auto* gwrite = group->add_subcommand("write", "write generators in the group file format");
    std::string gref;
    for (auto* s : {ginfo, gwrite}) s->add_option("--group", gref, "builtin:<name> or file:<path>")->required();
    gwrite->add_option("--out", out)->required();

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "flag-transitive structures from block stabilizers");
    pipeline->require_subcommand(1);
    auto* prun = pipeline->add_subcommand("run", "run on one group");
    std::string report;
    bool with_lines = false, far_only = false, near_only = false;
    prun->add_option("--group", gref, "builtin:<name> or file:<path>")->required();
    prun->add_option("--report", report, "JSON report");
    prun->add_flag("--with-lines", with_lines, "include line sets in the report");
    prun->add_flag("--far-only", far_only);
    prun->add_flag("--near-only", near_only);

    // tables
    auto* tables = app.add_subcommand("tables", "reproduce tables");
    tables->require_subcommand(1);
    auto* treproduce = tables->add_subcommand("reproduce", "row-by-row comparison");
    std::vector<int> ids;
    bool slow = false;
    std::size_t max_degree = 300;
    treproduce->add_option("--id", ids, "table ids 2..6 (default all)");
    treproduce->add_option("--max-degree", max_degree)->capture_default_str();
    treproduce->add_flag("--slow", slow, "include the large cases");
    treproduce->add_option("--report", report);

    // verify
    auto* verify = app.add_subcommand("verify", "check a structure file");
    std::string in;
    verify->add_option("--in", in, "structure JSON")->required();
    verify->add_option("--group", gref, "group that must preserve the lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    set_global_seed(seed);

    try {
        if (fbuild->parsed()) {
            FamilyParams fp;
            fp.family = parse_family(kind);
            fp.n = n;
            fp.q = q;
            fp.q0 = q0;
            fp.r = r;
            fp.j = j;
            const auto res = build_family(fp, BuildOptions{enumerate_limit, samples, seed});
            const auto ec = expected_counts(res.params);
            bool ok = true;
            if (res.count_only) {
                std::cout << res.params.name() << ": " << ec.lines << " lines expected, " << res.sampled
                          << " sampled lines " << (res.sample_ok ? "consistent" : "INCONSISTENT") << "\n";
                ok = res.sample_ok;
            } else {
                const auto& D = res.structure;
                print_structure(D, res.params.name());
                const auto rep = validate_pls(D);
                ok = D.num_points() == ec.points && D.num_lines() == ec.lines && D.line_size() == ec.line_size &&
                     rep.is_pls == ec.pls && (ec.multiplicity == 0 || rep.multiplicity == ec.multiplicity);
                if (!ok)
                    std::cout << "expected " << ec.points << " points, " << ec.lines << " lines of size " << ec.line_size
                              << "\n";
            }
            if (!out.empty()) {
                const auto fmt = format_of(out, format);
                std::ostringstream os;
                if (fmt == "csv")
                    write_csv(os, res.structure);
                else if (fmt == "dot")
                    write_dot(os, res.structure);
                else if (fmt == "json")
                    os << to_json(res.structure).dump(1) << "\n";
                else
                    throw UsageError("unknown format " + fmt);
                write_text(out, os.str());
            }
            return ok ? 0 : 1;
        }
        if (omega->parsed()) {
            OmegaKind k = okind == "unitary" ? OmegaKind::Unitary : OmegaKind::Linear;
            if (okind != "unitary" && okind != "linear") throw UsageError("kind must be linear or unitary");
            const auto S = build_omega(k, k == OmegaKind::Unitary ? 3 : n, q, r);
            std::cout << "Omega: " << S.size() << " points in " << S.size() / r << " cells of size " << r << "\n";
            write_json(out, omega_to_json(S));
            return 0;
        }
        if (glist->parsed()) {
            for (const auto& nm : builtin_names()) std::cout << nm << "\n";
            return 0;
        }
        if (ginfo->parsed() || gwrite->parsed()) {
            const auto B = resolve_group(gref, seed);
            if (gwrite->parsed()) {
                std::ostringstream os;
                write_group(os, B.group);
                write_text(out, os.str());
                return 0;
            }
            nlohmann::json j;
            j["name"] = B.name;
            j["degree"] = B.group.degree();
            j["order"] = std::to_string(B.group.order());
            j["transitive"] = is_transitive(B.group);
            const unsigned rk = rank(B.group);
            j["rank"] = rk;
            if (rk == 3) {
                const auto cells = unique_block_system(B.group);
                j["cells"] = cells.size();
                j["cell_size"] = cells[0].size();
                j["type"] = permutation_type(B.group, cells);
            }
            if (!B.type.empty()) j["catalogued_type"] = B.type;
            std::cout << j.dump(1) << "\n";
            return 0;
        }
        if (prun->parsed()) {
            if (far_only && near_only) throw UsageError("--far-only and --near-only exclude each other");
            const auto B = resolve_group(gref, seed);
            PipelineOptions po;
            po.far_orbit = !near_only;
            po.near_orbit = !far_only;
            const auto R = devillers_enumerate(B.group, po, B.name);
            std::cout << B.name << ": degree " << R.degree << ", " << R.sigma.size() << " cells of size "
                      << R.sigma[0].size() << "\n";
            for (const auto& b : R.results) {
                std::cout << "  " << b.orbit << " block of size " << b.block.size();
                if (!b.passes_filter)
                    std::cout << ": meets a cell twice\n";
                else if (!b.flag_transitive)
                    std::cout << ": not flag-transitive\n";
                else
                    std::cout << ": " << b.num_lines << " lines of size " << b.line_size << (b.pls ? ", PLS" : ", not a PLS")
                              << (b.proper ? ", proper" : "") << ", " << b.components << " component(s), class "
                              << b.iso_class << "\n";
            }
            write_json(report, report_json(R, with_lines));
            return 0;
        }
        if (treproduce->parsed()) {
            if (ids.empty()) ids = {2, 3, 4, 5, 6};
            TableOptions to;
            to.slow = slow;
            to.max_degree = max_degree;
            bool all = true;
            nlohmann::json rep = nlohmann::json::array();
            for (int id : ids) {
                const auto T = reproduce_table(id, to);
                for (const auto& row : T.rows)
                    std::cout << "table " << id << " " << (row.pass ? "PASS" : "FAIL") << " " << row.label
                              << ": expected " << row.expected << ", observed " << row.observed << "\n";
                all = all && T.pass();
                rep.push_back(T.to_json());
            }
            write_json(report, rep);
            return all ? 0 : 1;
        }
        if (verify->parsed()) {
            std::ifstream f(in);
            if (!f) throw UsageError("cannot read " + in);
            const auto j = nlohmann::json::parse(f);
            const auto D = incidence_from_json(j);
            print_structure(D, in);
            const auto rep = validate_pls(D);
            bool ok = true;
            const auto& params = D.params;
            if (params.contains("family")) {
                const auto fp = params_from_json(params);
                const auto ec = expected_counts(fp);
                const bool match = D.num_points() == ec.points && D.num_lines() == ec.lines &&
                                   D.line_size() == ec.line_size && rep.is_pls == ec.pls;
                std::cout << fp.name() << " counts " << (match ? "match" : "DO NOT match") << "\n";
                ok = ok && match;
            } else {
                ok = ok && rep.is_pls;
            }
            if (!gref.empty()) {
                const auto B = resolve_group(gref, seed);
                const bool pres = B.group.degree() == D.num_points() && preserved_by(D, B.group.gens());
                std::cout << B.name << (pres ? " preserves" : " does NOT preserve") << " the lines\n";
                ok = ok && pres;
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include "r3pls/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace r3pls {

namespace {

bool line_less(const Point* a, const Point* b, std::size_t k)
{
    return std::lexicographical_compare(a, a + k, b, b + k);
}

struct Dsu {
    std::vector<std::uint32_t> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
    std::uint32_t find(std::uint32_t x)
    {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { p[find(a)] = find(b); }
};

std::vector<std::uint64_t> pair_keys(const IncidenceStructure& D)
{
    const std::size_t k = D.line_size();
    std::vector<std::uint64_t> keys;
    keys.reserve(D.num_lines() * k * (k - 1) / 2);
    for (std::size_t i = 0; i < D.num_lines(); ++i) {
        auto L = D.line(i);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) keys.push_back((std::uint64_t(L[a]) << 32) | L[b]);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

} // namespace

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::size_t line_size, std::vector<Point> flat)
    : n_(num_points), k_(line_size), flat_(std::move(flat))
{
    if (k_ < 2 && !flat_.empty()) throw std::invalid_argument("lines need at least 2 points");
    if (k_ && flat_.size() % k_) throw std::invalid_argument("flat line data not a multiple of the line size");
    const std::size_t m = num_lines();
    for (std::size_t i = 0; i < m; ++i) {
        auto* L = flat_.data() + i * k_;
        std::sort(L, L + k_);
        for (std::size_t j = 0; j < k_; ++j) {
            if (L[j] >= n_) throw std::invalid_argument("line point out of range");
            if (j && L[j] == L[j - 1]) throw std::invalid_argument("repeated point in a line");
        }
    }
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return line_less(flat_.data() + a * k_, flat_.data() + b * k_, k_);
    });
    std::vector<Point> sorted(flat_.size());
    for (std::size_t i = 0; i < m; ++i)
        std::copy_n(flat_.data() + order[i] * k_, k_, sorted.data() + i * k_);
    for (std::size_t i = 1; i < m; ++i)
        if (std::equal(sorted.data() + (i - 1) * k_, sorted.data() + i * k_, sorted.data() + i * k_))
            throw std::invalid_argument("duplicate line");
    flat_ = std::move(sorted);
}

IncidenceStructure IncidenceStructure::from_lines(std::size_t num_points, const std::vector<std::vector<Point>>& lines)
{
    if (lines.empty()) return IncidenceStructure(num_points, 0, {});
    const std::size_t k = lines.front().size();
    std::vector<Point> flat;
    for (const auto& L : lines) {
        if (L.size() != k) throw std::invalid_argument("lines of different sizes");
        flat.insert(flat.end(), L.begin(), L.end());
    }
    return IncidenceStructure(num_points, k, std::move(flat));
}

std::int64_t IncidenceStructure::find(std::span<const Point> L) const
{
    if (L.size() != k_) return -1;
    std::size_t lo = 0, hi = num_lines();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (line_less(flat_.data() + mid * k_, L.data(), k_))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_lines() && std::equal(L.begin(), L.end(), flat_.data() + lo * k_)) return std::int64_t(lo);
    return -1;
}

PlsReport validate_pls(const IncidenceStructure& D)
{
    PlsReport rep;
    const auto keys = pair_keys(D);
    unsigned mult = 0;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        mult = std::max<unsigned>(mult, static_cast<unsigned>(j - i));
        ++rep.collinear_pairs;
        i = j;
    }
    rep.multiplicity = mult;
    rep.is_pls = mult <= 1;
    std::vector<std::size_t> deg(D.num_points(), 0);
    for (auto x : D.flat()) ++deg[x];
    if (!deg.empty()) {
        auto [mn, mx] = std::minmax_element(deg.begin(), deg.end());
        rep.min_degree = *mn;
        rep.max_degree = *mx;
        rep.point_degree_constant = *mn == *mx;
    }
    return rep;
}

unsigned multiplicity_bruteforce(const IncidenceStructure& D)
{
    const std::size_t N = D.num_points();
    std::vector<std::vector<std::uint32_t>> on(N);
    for (std::size_t i = 0; i < D.num_lines(); ++i)
        for (auto x : D.line(i)) on[x].push_back(static_cast<std::uint32_t>(i));
    unsigned best = 0;
    std::vector<std::uint32_t> tmp;
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = x + 1; y < N; ++y) {
            tmp.clear();
            std::set_intersection(on[x].begin(), on[x].end(), on[y].begin(), on[y].end(), std::back_inserter(tmp));
            best = std::max<unsigned>(best, static_cast<unsigned>(tmp.size()));
        }
    return best;
}

bool is_proper(const IncidenceStructure& D)
{
    if (D.line_size() < 3) return false;
    const std::size_t N = D.num_points();
    return validate_pls(D).collinear_pairs < N * (N - 1) / 2;
}

std::vector<std::vector<Point>> components(const IncidenceStructure& D)
{
    Dsu dsu(D.num_points());
    for (std::size_t i = 0; i < D.num_lines(); ++i) {
        auto L = D.line(i);
        for (std::size_t j = 1; j < L.size(); ++j) dsu.unite(L[0], L[j]);
    }
    std::map<std::uint32_t, std::vector<Point>> comp;
    for (Point x = 0; x < D.num_points(); ++x) comp[dsu.find(x)].push_back(x);
    std::vector<std::vector<Point>> out;
    for (auto& [root, pts] : comp) out.push_back(std::move(pts));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const IncidenceStructure& D) { return components(D).size() <= 1; }

Fingerprint fingerprint(const IncidenceStructure& D)
{
    Fingerprint fp;
    fp.points = D.num_points();
    fp.lines = D.num_lines();
    fp.line_size = D.line_size();
    fp.degrees.assign(D.num_points(), 0);
    for (auto x : D.flat()) ++fp.degrees[x];
    std::sort(fp.degrees.begin(), fp.degrees.end());

    std::vector<std::map<unsigned, std::size_t>> conc(D.num_points());
    const auto keys = pair_keys(D);
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        const unsigned c = static_cast<unsigned>(j - i);
        ++conc[keys[i] >> 32][c];
        ++conc[keys[i] & 0xffffffffu][c];
        i = j;
    }
    std::sort(conc.begin(), conc.end());
    fp.concurrence = std::move(conc);
    for (const auto& c : components(D)) fp.component_sizes.push_back(c.size());
    std::sort(fp.component_sizes.begin(), fp.component_sizes.end());
    return fp;
}

bool preserved_by(const IncidenceStructure& D, const std::vector<Perm>& gens)
{
    std::vector<Point> img(D.line_size());
    for (const auto& g : gens) {
        if (g.degree() != D.num_points()) throw std::invalid_argument("degree mismatch");
        for (std::size_t i = 0; i < D.num_lines(); ++i) {
            auto L = D.line(i);
            for (std::size_t j = 0; j < L.size(); ++j) img[j] = g[L[j]];
            std::sort(img.begin(), img.end());
            if (!D.has_line(img)) return false;
        }
    }
    return true;
}

IncidenceStructure relabel(const IncidenceStructure& D, const Perm& g)
{
    if (g.degree() != D.num_points()) throw std::invalid_argument("degree mismatch");
    std::vector<Point> flat(D.flat().size());
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = g[D.flat()[i]];
    IncidenceStructure out(D.num_points(), D.line_size(), std::move(flat));
    out.params = D.params;
    return out;
}

IncidenceStructure image(const IncidenceStructure& D, const Perm& g) { return relabel(D, g); }

IncidenceStructure line_union(const IncidenceStructure& A, const IncidenceStructure& B, std::size_t* shared)
{
    if (A.num_points() != B.num_points() || (A.num_lines() && B.num_lines() && A.line_size() != B.line_size()))
        throw std::invalid_argument("incompatible structures");
    std::vector<Point> flat = A.flat();
    std::size_t common = 0;
    for (std::size_t i = 0; i < B.num_lines(); ++i) {
        auto L = B.line(i);
        if (A.has_line(L))
            ++common;
        else
            flat.insert(flat.end(), L.begin(), L.end());
    }
    if (shared) *shared = common;
    return IncidenceStructure(A.num_points(), A.num_lines() ? A.line_size() : B.line_size(), std::move(flat));
}

nlohmann::json to_json(const IncidenceStructure& D)
{
    nlohmann::json j;
    j["points"] = D.num_points();
    j["line_size"] = D.line_size();
    auto& lines = j["lines"] = nlohmann::json::array();
    for (std::size_t i = 0; i < D.num_lines(); ++i) {
        auto L = D.line(i);
        lines.push_back(std::vector<Point>(L.begin(), L.end()));
    }
    j["params"] = D.params;
    return j;
}

IncidenceStructure incidence_from_json(const nlohmann::json& j)
{
    const std::size_t n = j.at("points").get<std::size_t>();
    const std::size_t k = j.at("line_size").get<std::size_t>();
    std::vector<Point> flat;
    for (const auto& L : j.at("lines")) {
        if (L.size() != k) throw std::invalid_argument("line of wrong size in JSON");
        for (const auto& x : L) flat.push_back(x.get<Point>());
    }
    IncidenceStructure D(n, k, std::move(flat));
    if (j.contains("params")) D.params = j["params"];
    return D;
}

void write_csv(std::ostream& out, const IncidenceStructure& D)
{
    for (std::size_t i = 0; i < D.num_lines(); ++i) {
        auto L = D.line(i);
        for (std::size_t j = 0; j < L.size(); ++j) out << (j ? "," : "") << L[j];
        out << '\n';
    }
}

void write_dot(std::ostream& out, const IncidenceStructure& D)
{
    if (D.num_points() > 200) throw std::invalid_argument("DOT export is limited to 200 points");
    out << "graph collinearity {\n";
    for (Point x = 0; x < D.num_points(); ++x) out << "  " << x << ";\n";
    const auto keys = pair_keys(D);
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (i == 0 || keys[i] != keys[i - 1]) out << "  " << (keys[i] >> 32) << " -- " << (keys[i] & 0xffffffffu) << ";\n";
    out << "}\n";
}

namespace {

struct IsoSearch {
    const IncidenceStructure &A, &B;
    std::size_t N, budget, steps = 0;
    bool out_of_budget = false;
    std::vector<std::int32_t> ta, tb;     // line through a pair, -1 if none
    std::vector<std::int64_t> f, g;       // A -> B and back
    std::vector<std::int64_t> lmap, linv; // line images once two points are placed
    std::vector<Point> mapped;
    std::vector<std::uint32_t> line_trail, determined;

    static std::vector<std::int32_t> pair_table(const IncidenceStructure& D)
    {
        const std::size_t N = D.num_points();
        std::vector<std::int32_t> t(N * N, -1);
        for (std::size_t i = 0; i < D.num_lines(); ++i) {
            auto l = D.line(i);
            for (auto a : l)
                for (auto b : l)
                    if (a != b) t[a * N + b] = static_cast<std::int32_t>(i);
        }
        return t;
    }

    IsoSearch(const IncidenceStructure& a, const IncidenceStructure& b, std::size_t bud)
        : A(a), B(b), N(a.num_points()), budget(bud), ta(pair_table(a)), tb(pair_table(b)), f(N, -1), g(N, -1),
          lmap(a.num_lines(), -1), linv(b.num_lines(), -1)
    {
    }

    bool assign(Point x, Point y)
    {
        if (++steps > budget) {
            out_of_budget = true;
            return false;
        }
        for (auto m : mapped) {
            const auto la = ta[x * N + m], lb = tb[y * N + f[m]];
            if ((la < 0) != (lb < 0)) return false;
            if (la < 0) continue;
            if (lmap[la] >= 0 ? lmap[la] != lb : linv[lb] >= 0) return false;
        }
        for (auto m : mapped) {
            const auto la = ta[x * N + m];
            if (la < 0 || lmap[la] >= 0) continue;
            const auto lb = tb[y * N + f[m]];
            lmap[la] = lb;
            linv[lb] = la;
            line_trail.push_back(static_cast<std::uint32_t>(la));
            determined.push_back(static_cast<std::uint32_t>(la));
        }
        f[x] = y;
        g[y] = x;
        mapped.push_back(x);
        return true;
    }

    void undo(std::size_t mapped_mark, std::size_t trail_mark, std::size_t det_mark)
    {
        while (mapped.size() > mapped_mark) {
            const Point x = mapped.back();
            mapped.pop_back();
            g[f[x]] = -1;
            f[x] = -1;
        }
        while (line_trail.size() > trail_mark) {
            const auto la = line_trail.back();
            line_trail.pop_back();
            linv[lmap[la]] = -1;
            lmap[la] = -1;
        }
        determined.resize(det_mark);
    }

    bool search(std::size_t scan)
    {
        if (mapped.size() == N) return true;
        Point x = 0;
        std::vector<Point> cands;
        // prefer a point on a line whose image is already fixed
        for (; scan < determined.size(); ++scan) {
            const auto la = determined[scan];
            auto l = A.line(la);
            auto it = std::find_if(l.begin(), l.end(), [&](Point p) { return f[p] < 0; });
            if (it == l.end()) continue;
            x = *it;
            for (auto y : B.line(static_cast<std::size_t>(lmap[la])))
                if (g[y] < 0) cands.push_back(y);
            break;
        }
        if (scan == determined.size()) {
            std::int64_t anchor = -1;
            for (Point p = 0; p < N && anchor < 0; ++p) {
                if (f[p] >= 0) continue;
                for (auto m : mapped)
                    if (ta[p * N + m] >= 0) {
                        x = p;
                        anchor = m;
                        break;
                    }
            }
            if (anchor < 0) x = static_cast<Point>(std::find(f.begin(), f.end(), -1) - f.begin());
            for (Point y = 0; y < N; ++y)
                if (g[y] < 0 && (anchor < 0 || tb[y * N + f[anchor]] >= 0)) cands.push_back(y);
        }
        const auto mm = mapped.size(), tm = line_trail.size(), dm = determined.size();
        for (auto y : cands) {
            if (assign(x, y) && search(scan)) return true;
            undo(mm, tm, dm);
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

std::optional<Perm> find_isomorphism(const IncidenceStructure& A, const IncidenceStructure& B,
                                     bool point_transitive, std::size_t budget, bool* exhausted)
{
    if (exhausted) *exhausted = false;
    if (A.num_points() != B.num_points() || A.line_size() != B.line_size() || A.num_lines() != B.num_lines())
        return std::nullopt;
    if (!validate_pls(A).is_pls || !validate_pls(B).is_pls)
        throw std::invalid_argument("isomorphism search needs partial linear spaces");
    if (!(fingerprint(A) == fingerprint(B))) return std::nullopt;
    const std::size_t N = A.num_points();
    if (N == 0) return Perm(0);
    IsoSearch S(A, B, budget);
    bool found = false;
    if (point_transitive) {
        found = S.assign(0, 0) && S.search(0);
    } else {
        found = S.search(0);
    }
    if (exhausted) *exhausted = S.out_of_budget;
    if (!found) return std::nullopt;
    std::vector<Point> img(N);
    for (Point p = 0; p < N; ++p) img[p] = static_cast<Point>(S.f[p]);
    Perm pi(std::move(img));
    if (!(relabel(A, pi) == B)) throw std::logic_error("isomorphism search produced a non-isomorphism");
    return pi;
}

} // namespace r3pls

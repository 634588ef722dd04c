#include "r3pls/permcore.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace r3pls {

namespace {
std::uint64_t g_seed = 0x5eedULL;

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct UnionFind {
    std::vector<std::uint32_t> parent, size;
    explicit UnionFind(std::size_t n = 0) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0u); }
    void grow(std::size_t n)
    {
        const std::size_t old = parent.size();
        parent.resize(n);
        size.resize(n, 1);
        for (std::size_t i = old; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
    }
    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};
} // namespace

void set_global_seed(std::uint64_t seed) { g_seed = seed; }
std::uint64_t global_seed() { return g_seed; }

// ---------------------------------------------------------------- Perm

Perm::Perm(std::size_t degree) : img_(degree)
{
    std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images))
{
    std::vector<char> seen(img_.size(), 0);
    for (Point x : img_) {
        if (x >= img_.size() || seen[x]) throw std::invalid_argument("image list is not a permutation");
        seen[x] = 1;
    }
}

Perm Perm::operator*(const Perm& h) const
{
    Perm out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = h.img_[img_[i]];
    return out;
}

Perm Perm::inverse() const
{
    Perm out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<Point>(i);
    return out;
}

bool Perm::is_identity() const
{
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::uint64_t Perm::order() const
{
    std::vector<char> seen(img_.size(), 0);
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        l = l / std::gcd(l, len) * len;
    }
    return l;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles)
{
    std::vector<Point> v(degree);
    std::iota(v.begin(), v.end(), Point{0});
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) v[c[i]] = c[(i + 1) % c.size()];
    return Perm(std::move(v));
}

// ---------------------------------------------------------------- random elements

RandomElements::RandomElements(const std::vector<Perm>& gens, std::size_t degree, std::uint64_t seed)
    : acc_(degree), rng_(seed)
{
    if (gens.empty()) return;
    const std::size_t n = std::max<std::size_t>(10, gens.size() + 1);
    for (std::size_t i = 0; i < n; ++i) state_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 60; ++i) next();
}

Perm RandomElements::next()
{
    if (state_.empty()) return acc_;
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    if (rng_() & 1)
        state_[i] = state_[i] * state_[j];
    else
        state_[i] = state_[j] * state_[i];
    acc_ = acc_ * state_[i];
    return acc_;
}

// ---------------------------------------------------------------- BSGS

Bsgs::Bsgs(std::size_t degree, const std::vector<Perm>& gens, const BsgsOptions& opt) : degree_(degree)
{
    for (const auto& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity() && std::find(sgs_.begin(), sgs_.end(), g) == sgs_.end()) {
            sgs_.push_back(g);
            sgs_inv_.push_back(g.inverse());
        }
    }
    input_gens_ = sgs_.size();
    std::vector<Point> base;
    for (Point b : opt.base_prefix) {
        if (b >= degree) throw std::invalid_argument("base point out of range");
        if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
    }
    for (const auto& s : sgs_) {
        bool moves = false;
        for (Point b : base) moves = moves || s[b] != b;
        if (!moves) {
            for (Point x = 0; x < degree; ++x)
                if (s[x] != x) {
                    base.push_back(x);
                    break;
                }
        }
    }
    for (Point b : base) {
        Level L;
        L.base = b;
        levels_.push_back(std::move(L));
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        for (std::uint32_t s = 0; s < sgs_.size(); ++s) {
            bool fixes = true;
            for (std::size_t j = 0; j < i && fixes; ++j) fixes = sgs_[s][levels_[j].base] == levels_[j].base;
            if (fixes) levels_[i].gens.push_back(s);
        }
        rebuild_level(i);
    }

    const std::vector<Perm> gens_copy = sgs_;
    RandomElements rnd(gens_copy, degree, opt.seed);
    auto reached = [&] { return opt.known_order != 0 && order() >= opt.known_order; };
    auto random_phase = [&] {
        int consecutive = 0;
        while (consecutive < 32 && !reached()) {
            auto [h, j] = sift(rnd.next());
            if (!h.is_identity()) {
                add_strong(std::move(h), j);
                consecutive = 0;
            } else {
                ++consecutive;
            }
        }
    };
    random_phase();
    if (opt.known_order != 0 && order() > opt.known_order)
        throw std::logic_error("group larger than the stated order");
    if (reached()) return;
    if (!opt.verify) return;
    while (!verify_once()) {
        random_phase();
        if (reached()) return;
    }
}

void Bsgs::rebuild_level(std::size_t i)
{
    Level& L = levels_[i];
    L.sv.assign(degree_, -1);
    L.orbit.clear();
    L.orbit.push_back(L.base);
    L.sv[L.base] = -2;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
        const Point x = L.orbit[k];
        for (std::uint32_t s : L.gens) {
            const Point y = sgs_[s][x];
            if (L.sv[y] == -1) {
                L.sv[y] = static_cast<std::int32_t>(s);
                L.orbit.push_back(y);
            }
        }
    }
}

void Bsgs::add_strong(Perm h, std::size_t upto)
{
    if (upto == levels_.size()) {
        Level L;
        L.base = degree_;
        for (Point x = 0; x < degree_; ++x)
            if (h[x] != x) {
                L.base = x;
                break;
            }
        levels_.push_back(std::move(L));
    }
    const auto idx = static_cast<std::uint32_t>(sgs_.size());
    sgs_inv_.push_back(h.inverse());
    sgs_.push_back(std::move(h));
    for (std::size_t i = 0; i <= upto; ++i) {
        levels_[i].gens.push_back(idx);
        rebuild_level(i);
    }
}

std::pair<Perm, std::size_t> Bsgs::sift(Perm g, std::size_t start) const
{
    std::vector<Point> img = g.images();
    for (std::size_t i = start; i < levels_.size(); ++i) {
        const Level& L = levels_[i];
        Point beta = img[L.base];
        if (L.sv[beta] == -1) return {Perm(std::move(img)), i};
        while (L.sv[beta] != -2) {
            const Perm& si = sgs_inv_[static_cast<std::size_t>(L.sv[beta])];
            for (auto& v : img) v = si[v];
            beta = si[beta];
        }
    }
    return {Perm(std::move(img)), levels_.size()};
}

bool Bsgs::contains(const Perm& g) const
{
    if (g.degree() != degree_) return false;
    auto [h, j] = sift(g);
    return j == levels_.size() && h.is_identity();
}

Perm Bsgs::transversal(std::size_t i, Point x) const
{
    const Level& L = levels_[i];
    if (L.sv[x] == -1) throw std::invalid_argument("point not in fundamental orbit");
    std::vector<Point> w(degree_);
    std::iota(w.begin(), w.end(), Point{0});
    Point beta = x;
    while (L.sv[beta] != -2) {
        const Perm& si = sgs_inv_[static_cast<std::size_t>(L.sv[beta])];
        for (auto& v : w) v = si[v];
        beta = si[beta];
    }
    return Perm(std::move(w)).inverse();
}

// Schreier generators level by level from the bottom. At level 0 the input
// generators suffice; transversals are built along a walk of the Schreier tree.
bool Bsgs::verify_once()
{
    for (std::size_t i = levels_.size(); i-- > 0;) {
        const Level& L = levels_[i];
        std::vector<std::uint32_t> gens = L.gens;
        if (i == 0) {
            gens.clear();
            for (std::uint32_t s = 0; s < input_gens_; ++s) gens.push_back(s);
        }
        std::vector<std::vector<Point>> kids(degree_);
        for (Point x : L.orbit)
            if (L.sv[x] >= 0) kids[sgs_inv_[static_cast<std::size_t>(L.sv[x])][x]].push_back(x);
        const std::vector<std::int32_t> sv = L.sv;
        struct Frame {
            Point x;
            std::size_t next = 0;
        };
        std::vector<Frame> st{{L.base}};
        std::vector<Perm> us{Perm(degree_)};
        auto check = [&](const Perm& u) {
            for (std::uint32_t s : gens) {
                auto [h, j] = sift(u * sgs_[s], i);
                if (!h.is_identity()) {
                    add_strong(std::move(h), j);
                    return false;
                }
            }
            return true;
        };
        if (!check(us.back())) return false;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < kids[f.x].size()) {
                const Point c = kids[f.x][f.next++];
                us.push_back(us.back() * sgs_[static_cast<std::size_t>(sv[c])]);
                st.push_back({c});
                if (!check(us.back())) return false;
            } else {
                st.pop_back();
                us.pop_back();
            }
        }
    }
    return true;
}

std::uint64_t Bsgs::order() const { return level_order(0); }

std::uint64_t Bsgs::level_order(std::size_t i) const
{
    unsigned __int128 o = 1;
    for (std::size_t k = i; k < levels_.size(); ++k) {
        o *= levels_[k].orbit.size();
        if (o >> 64) throw std::overflow_error("group order exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(o);
}

std::vector<Point> Bsgs::base() const
{
    std::vector<Point> b;
    for (const auto& L : levels_) b.push_back(L.base);
    return b;
}

std::vector<Perm> Bsgs::level_gens(std::size_t i) const
{
    std::vector<Perm> out;
    if (i >= levels_.size()) return out;
    for (auto s : levels_[i].gens) out.push_back(sgs_[s]);
    return out;
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens, std::uint64_t known_order)
    : degree_(degree), known_order_(known_order)
{
    for (auto& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        gens_.push_back(std::move(g));
    }
}

const Bsgs& PermGroup::bsgs() const
{
    if (!bsgs_) {
        BsgsOptions opt;
        opt.known_order = known_order_;
        opt.seed = mix64(global_seed());
        bsgs_ = std::make_shared<Bsgs>(degree_, gens_, opt);
    }
    return *bsgs_;
}

Bsgs PermGroup::bsgs_with_base(const std::vector<Point>& prefix) const
{
    BsgsOptions opt;
    opt.base_prefix = prefix;
    opt.known_order = known_order_ ? known_order_ : order();
    opt.seed = mix64(global_seed() + prefix.size());
    return Bsgs(degree_, gens_, opt);
}

// ---------------------------------------------------------------- orbits

std::vector<Point> orbit(const std::vector<Perm>& gens, std::size_t degree, Point x)
{
    std::vector<char> seen(degree, 0);
    std::vector<Point> orb{x};
    seen[x] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
        for (const auto& g : gens) {
            const Point y = g[orb[k]];
            if (!seen[y]) {
                seen[y] = 1;
                orb.push_back(y);
            }
        }
    return orb;
}

std::vector<Point> orbit(const PermGroup& G, Point x) { return orbit(G.gens(), G.degree(), x); }

std::vector<std::vector<Point>> orbits(const std::vector<Perm>& gens, std::size_t degree)
{
    std::vector<char> seen(degree, 0);
    std::vector<std::vector<Point>> out;
    for (Point x = 0; x < degree; ++x) {
        if (seen[x]) continue;
        auto o = orbit(gens, degree, x);
        for (Point y : o) seen[y] = 1;
        std::sort(o.begin(), o.end());
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& G) { return orbits(G.gens(), G.degree()); }

bool is_transitive(const PermGroup& G)
{
    return G.degree() == 0 || orbit(G, 0).size() == G.degree();
}

PermGroup stabilizer(const PermGroup& G, Point x)
{
    const Bsgs& B = G.bsgs();
    if (!B.levels().empty() && B.levels()[0].base == x)
        return PermGroup(G.degree(), B.level_gens(1), B.level_order(1));
    Bsgs C = G.bsgs_with_base({x});
    return PermGroup(G.degree(), C.level_gens(1), C.level_order(1));
}

PermGroup pointwise_stabilizer(const PermGroup& G, const std::vector<Point>& pts)
{
    Bsgs C = G.bsgs_with_base(pts);
    std::set<Point> distinct(pts.begin(), pts.end());
    return PermGroup(G.degree(), C.level_gens(distinct.size()), C.level_order(distinct.size()));
}

PermGroup subgroup(const PermGroup& G, std::vector<Perm> gens)
{
    for (const auto& g : gens)
        if (!G.contains(g)) throw std::invalid_argument("element not in group");
    PermGroup H(G.degree(), std::move(gens));
    H.order();
    return H;
}

// ---------------------------------------------------------------- blocks

std::vector<Point> minimal_block(const std::vector<Perm>& gens, std::size_t degree,
                                 const std::vector<Point>& seed_set)
{
    if (seed_set.empty()) throw std::invalid_argument("empty seed set");
    UnionFind uf(degree);
    std::vector<std::pair<Point, Point>> queue;
    for (std::size_t k = 1; k < seed_set.size(); ++k)
        if (uf.unite(seed_set[0], seed_set[k])) queue.emplace_back(seed_set[0], seed_set[k]);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const auto [a, b] = queue[k];
        for (const auto& g : gens) {
            const Point x = uf.find(g[a]), y = uf.find(g[b]);
            if (x != y) {
                uf.unite(x, y);
                queue.emplace_back(x, y);
            }
        }
    }
    std::vector<Point> block;
    const auto root = uf.find(seed_set[0]);
    for (Point x = 0; x < degree; ++x)
        if (uf.find(x) == root) block.push_back(x);
    return block;
}

std::vector<Point> minimal_block(const PermGroup& G, Point beta, Point gamma)
{
    if (beta == gamma) throw std::invalid_argument("minimal_block needs two distinct points");
    return minimal_block(G.gens(), G.degree(), {beta, gamma});
}

bool is_block(const std::vector<Perm>& gens, std::size_t degree, const std::vector<Point>& block)
{
    if (block.empty()) return false;
    LineOrbit lo = line_orbit(gens, block, false);
    std::vector<char> seen(degree, 0);
    for (Point x : lo.flat) {
        if (seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

namespace {
using Block = std::vector<Point>;

void sort_blocks(std::vector<Block>& v)
{
    std::sort(v.begin(), v.end(), [](const Block& a, const Block& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}
} // namespace

std::vector<std::vector<Point>> all_blocks_through(const PermGroup& G, Point beta, std::size_t cap)
{
    const auto O = orbit(G, beta);
    if (O.size() <= 2) return {};
    const PermGroup Gb = stabilizer(G, beta);
    std::vector<char> in_orbit(G.degree(), 0);
    for (Point x : O) in_orbit[x] = 1;

    std::set<Block> found;
    std::vector<char> seen(G.degree(), 0);
    seen[beta] = 1;
    for (Point g : O) {
        if (seen[g]) continue;
        for (Point y : orbit(Gb, g)) seen[y] = 1;
        Block B = minimal_block(G.gens(), G.degree(), {beta, g});
        if (B.size() < O.size()) found.insert(std::move(B));
        if (found.size() > cap) throw std::runtime_error("block lattice cap exceeded");
    }
    std::vector<Block> list(found.begin(), found.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Block seed;
            std::set_union(list[i].begin(), list[i].end(), list[j].begin(), list[j].end(),
                           std::back_inserter(seed));
            if (seed.size() == list[i].size() || seed.size() == list[j].size()) continue; // nested
            Block J = minimal_block(G.gens(), G.degree(), seed);
            if (J.size() < O.size() && found.insert(J).second) {
                list.push_back(std::move(J));
                if (list.size() > cap) throw std::runtime_error("block lattice cap exceeded");
            }
        }
    }
    sort_blocks(list);
    return list;
}

std::vector<std::vector<Point>> blocks_by_overgroups(const PermGroup& G, Point beta, std::size_t cap)
{
    const auto O = orbit(G, beta);
    Bsgs C = G.bsgs_with_base({beta});
    const std::vector<Perm> stab = C.level_gens(1);
    std::map<Block, std::vector<Perm>> found;
    std::vector<Block> work{Block{beta}};
    found[Block{beta}] = stab;
    for (std::size_t w = 0; w < work.size(); ++w) {
        const Block cur = work[w];
        std::vector<char> inB(G.degree(), 0);
        for (Point x : cur) inB[x] = 1;
        for (Point g : O) {
            if (inB[g]) continue;
            std::vector<Perm> gens = found[cur];
            gens.push_back(C.transversal(0, g));
            Block B = orbit(gens, G.degree(), beta);
            std::sort(B.begin(), B.end());
            if (!found.count(B)) {
                found[B] = gens;
                work.push_back(B);
                if (work.size() > cap) throw std::runtime_error("block lattice cap exceeded");
            }
        }
    }
    std::vector<Block> out;
    for (auto& [B, gens] : found)
        if (B.size() > 1 && B.size() < O.size()) out.push_back(B);
    sort_blocks(out);
    return out;
}

// ---------------------------------------------------------------- coset action

PermGroup coset_action(const PermGroup& G, const PermGroup& R)
{
    for (const auto& g : R.gens())
        if (!G.contains(g)) throw std::invalid_argument("R is not a subgroup of G");
    const std::uint64_t gord = G.order(), rord = R.order();
    if (gord % rord != 0) throw std::logic_error("subgroup order does not divide group order");
    const std::uint64_t m = gord / rord;

    // the set O^x for an R-orbit O only depends on the coset Rx
    auto Rorbs = orbits(R);
    std::size_t best = 0;
    for (std::size_t i = 1; i < Rorbs.size(); ++i)
        if (Rorbs[i].size() < Rorbs[best].size()) best = i;
    const std::vector<Point> sig = Rorbs[best];
    auto key_of = [&](const Perm& x) {
        std::vector<Point> k;
        k.reserve(sig.size());
        for (Point s : sig) k.push_back(x[s]);
        std::sort(k.begin(), k.end());
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Point v : k) h = mix64(h ^ v);
        return h;
    };

    std::vector<Perm> reps{Perm(G.degree())}, reps_inv{Perm(G.degree())};
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    buckets[key_of(reps[0])].push_back(0);
    const std::size_t ng = G.gens().size();
    std::vector<std::vector<Point>> images(ng);
    const Bsgs& RB = R.bsgs();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t gi = 0; gi < ng; ++gi) {
            Perm y = reps[i] * G.gens()[gi];
            const auto key = key_of(y);
            auto& bucket = buckets[key];
            std::int64_t hit = -1;
            for (auto j : bucket)
                if (RB.contains(y * reps_inv[j])) {
                    hit = j;
                    break;
                }
            if (hit < 0) {
                if (reps.size() >= m) throw std::logic_error("coset enumeration overflow");
                hit = static_cast<std::int64_t>(reps.size());
                bucket.push_back(static_cast<std::uint32_t>(hit));
                reps_inv.push_back(y.inverse());
                reps.push_back(std::move(y));
            }
            images[gi].push_back(static_cast<Point>(hit));
        }
    }
    if (reps.size() != m) throw std::logic_error("coset count mismatch");
    std::vector<Perm> gens;
    for (auto& im : images) gens.emplace_back(std::move(im));
    PermGroup A(m, std::move(gens));
    return A;
}

// ---------------------------------------------------------------- normal subgroups

bool is_normal(const PermGroup& H, const PermGroup& N)
{
    for (const auto& h : H.gens()) {
        const Perm hi = h.inverse();
        for (const auto& x : N.gens())
            if (!N.contains(hi * x * h)) return false;
    }
    return true;
}

PermGroup normal_closure(const PermGroup& H, const std::vector<Perm>& gens)
{
    std::vector<Perm> ng;
    for (const auto& g : gens)
        if (!g.is_identity()) ng.push_back(g);
    // unverified chains while closing: a successful sift is still a proof of membership
    BsgsOptions opt;
    opt.verify = false;
    opt.seed = mix64(global_seed());
    auto N = std::make_unique<Bsgs>(H.degree(), ng, opt);
    for (std::size_t k = 0; k < ng.size(); ++k) {
        for (const auto& h : H.gens()) {
            Perm c = h.inverse() * ng[k] * h;
            if (!N->contains(c)) {
                ng.push_back(std::move(c));
                N = std::make_unique<Bsgs>(H.degree(), ng, opt);
            }
        }
    }
    return PermGroup(H.degree(), ng);
}

PermGroup normal_subgroup_of_index(const PermGroup& H, std::uint64_t r, std::uint64_t seed)
{
    // H' H^r: the commutators of the generators and their r-th powers generate it
    // as a normal subgroup, since in an abelian quotient the powers of generators suffice.
    (void)seed;
    std::vector<Perm> X;
    const auto& g = H.gens();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) X.push_back(g[i].inverse() * g[j].inverse() * g[i] * g[j]);
        Perm p(H.degree());
        for (std::uint64_t k = 0; k < r; ++k) p = p * g[i];
        X.push_back(std::move(p));
    }
    PermGroup N = normal_closure(H, X);
    if (H.order() != N.order() * r) throw std::runtime_error("no normal subgroup of the requested index found");
    if (!is_normal(H, N)) throw std::logic_error("normal closure is not normal");
    return N;
}

std::optional<PermGroup> subgroup_of_index(const PermGroup& H, std::uint64_t r,
                                           const std::function<bool(const PermGroup&)>& accept,
                                           std::uint64_t seed, unsigned restarts)
{
    const std::uint64_t hord = H.order();
    if (hord % r != 0) return std::nullopt;
    const std::uint64_t target = hord / r;
    RandomElements rnd(H.gens(), H.degree(), seed);
    for (unsigned attempt = 0; attempt < restarts; ++attempt) {
        std::vector<Perm> K{rnd.next()};
        std::uint64_t ko = PermGroup(H.degree(), K).order();
        if (target % ko != 0) continue;
        unsigned fails = 0;
        while (ko < target && fails < 80) {
            K.push_back(rnd.next());
            const std::uint64_t o = PermGroup(H.degree(), K).order();
            if (o > ko && target % o == 0) {
                ko = o;
                fails = 0;
            } else {
                K.pop_back();
                ++fails;
            }
        }
        if (ko != target) continue;
        PermGroup cand(H.degree(), K, target);
        if (accept(cand)) return cand;
    }
    return std::nullopt;
}

unsigned rank(const PermGroup& G)
{
    if (!is_transitive(G)) throw std::invalid_argument("rank of an intransitive group");
    return static_cast<unsigned>(orbits(stabilizer(G, 0)).size());
}

// ---------------------------------------------------------------- setwise stabilizer

PermGroup setwise_stabilizer(const PermGroup& G, const std::vector<Point>& S_in)
{
    std::vector<Point> S = S_in;
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    const std::size_t n = G.degree();
    if (S.empty() || S.size() == n) return G;
    Bsgs C = G.bsgs_with_base(S);
    const std::size_t k = S.size();
    std::vector<char> inS(n, 0);
    for (Point x : S) inS[x] = 1;

    std::vector<Perm> gens = C.level_gens(k);
    const std::uint64_t point_stab = C.level_order(k);
    std::uint64_t leaves = 0;
    std::unique_ptr<PermGroup> found = std::make_unique<PermGroup>(n, gens, point_stab);

    // element = u_{i} ... u_0 ; w is the accumulated product of chosen transversals
    std::function<void(std::size_t, const Perm&)> dfs = [&](std::size_t i, const Perm& w) {
        if (i == k) {
            ++leaves;
            if (!found->contains(w)) {
                gens.push_back(w);
                found = std::make_unique<PermGroup>(n, gens);
            }
            return;
        }
        const auto& L = C.levels()[i];
        for (Point g : L.orbit) {
            if (!inS[w[g]]) continue;
            dfs(i + 1, C.transversal(i, g) * w);
        }
    };
    dfs(0, Perm(n));
    return PermGroup(n, gens, leaves * point_stab);
}

// ---------------------------------------------------------------- line orbits

namespace {

struct LineTable {
    std::size_t k;
    std::vector<Point>* flat;
    std::vector<std::uint32_t> slots; // index+1
    std::size_t count = 0;

    LineTable(std::size_t k_, std::vector<Point>* f) : k(k_), flat(f), slots(1024, 0) {}

    std::uint64_t hash(const Point* l) const
    {
        std::uint64_t h = 0x84222325cbf29ce4ULL;
        for (std::size_t i = 0; i < k; ++i) h = mix64(h ^ l[i]);
        return h;
    }
    bool equal(std::uint32_t idx, const Point* l) const
    {
        return std::equal(l, l + k, flat->data() + std::size_t(idx) * k);
    }
    void grow()
    {
        std::vector<std::uint32_t> old(slots.size() * 2, 0);
        old.swap(slots);
        const std::size_t mask = slots.size() - 1;
        for (auto s : old) {
            if (!s) continue;
            std::size_t pos = hash(flat->data() + std::size_t(s - 1) * k) & mask;
            while (slots[pos]) pos = (pos + 1) & mask;
            slots[pos] = s;
        }
    }
    // returns (index, inserted)
    std::pair<std::uint32_t, bool> find_or_insert(const Point* l)
    {
        if (2 * (count + 1) > slots.size()) grow();
        const std::size_t mask = slots.size() - 1;
        std::size_t pos = hash(l) & mask;
        while (slots[pos]) {
            if (equal(slots[pos] - 1, l)) return {slots[pos] - 1, false};
            pos = (pos + 1) & mask;
        }
        const auto idx = static_cast<std::uint32_t>(count++);
        flat->insert(flat->end(), l, l + k);
        slots[pos] = idx + 1;
        return {idx, true};
    }
};

// image of line under g, sorted, plus position map: out_pos[p] = index in image of g(line[p])
void image_line(const Perm& g, const Point* line, std::size_t k, Point* out, std::uint8_t* out_pos)
{
    std::pair<Point, std::uint8_t> tmp[256];
    for (std::size_t p = 0; p < k; ++p) tmp[p] = {g[line[p]], static_cast<std::uint8_t>(p)};
    std::sort(tmp, tmp + k);
    for (std::size_t p = 0; p < k; ++p) {
        out[p] = tmp[p].first;
        out_pos[tmp[p].second] = static_cast<std::uint8_t>(p);
    }
}

LineOrbit line_orbit_impl(const std::vector<Perm>& gens, const std::vector<Point>& L_in, bool track,
                          std::size_t max_lines, bool parallel)
{
    std::vector<Point> L = L_in;
    std::sort(L.begin(), L.end());
    if (L.empty() || L.size() > 255) throw std::invalid_argument("line size out of range");
    if (std::adjacent_find(L.begin(), L.end()) != L.end()) throw std::invalid_argument("repeated point in line");
    const std::size_t k = L.size();
    LineOrbit out;
    out.line_size = k;
    LineTable table(k, &out.flat);
    table.find_or_insert(L.data());
    UnionFind uf;
    if (track) uf.grow(k);
    const std::size_t ng = gens.size();

    std::size_t lo = 0;
    std::vector<Point> buf;
    std::vector<std::uint8_t> pos;
    while (lo < table.count) {
        const std::size_t hi = table.count;
        const std::size_t cnt = hi - lo;
        buf.resize(cnt * ng * k);
        pos.resize(cnt * ng * k);
        const Point* base = out.flat.data();
        if (parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(cnt * ng); ++t) {
                const std::size_t i = lo + std::size_t(t) / ng, gi = std::size_t(t) % ng;
                image_line(gens[gi], base + i * k, k, buf.data() + std::size_t(t) * k, pos.data() + std::size_t(t) * k);
            }
        } else {
            for (std::size_t t = 0; t < cnt * ng; ++t) {
                const std::size_t i = lo + t / ng, gi = t % ng;
                image_line(gens[gi], base + i * k, k, buf.data() + t * k, pos.data() + t * k);
            }
        }
        for (std::size_t t = 0; t < cnt * ng; ++t) {
            const std::size_t i = lo + t / ng;
            auto [j, inserted] = table.find_or_insert(buf.data() + t * k);
            if (max_lines && table.count > max_lines) throw std::runtime_error("line orbit exceeds limit");
            if (track) {
                if (inserted) uf.grow(table.count * k);
                for (std::size_t p = 0; p < k; ++p)
                    uf.unite(static_cast<std::uint32_t>(i * k + p), static_cast<std::uint32_t>(j * k + pos[t * k + p]));
            }
        }
        lo = hi;
    }
    if (track) {
        bool all = true;
        for (std::size_t p = 1; p < k; ++p) all = all && uf.find(0) == uf.find(static_cast<std::uint32_t>(p));
        out.flag_transitive = all;
    }
    return out;
}

} // namespace

LineOrbit line_orbit(const std::vector<Perm>& gens, const std::vector<Point>& L, bool track_flags,
                     std::size_t max_lines)
{
    return line_orbit_impl(gens, L, track_flags, max_lines, true);
}

LineOrbit line_orbit_serial(const std::vector<Perm>& gens, const std::vector<Point>& L, bool track_flags,
                            std::size_t max_lines)
{
    return line_orbit_impl(gens, L, track_flags, max_lines, false);
}

bool flag_transitive_on_line(const PermGroup& G, const std::vector<Point>& L)
{
    if (L.empty()) throw std::invalid_argument("empty line");
    return line_orbit(G.gens(), L, true).flag_transitive;
}

// ---------------------------------------------------------------- group files

PermGroup read_group(std::istream& in)
{
    std::size_t n = 0;
    if (!(in >> n) || n == 0) throw std::runtime_error("group file: bad degree");
    std::string line;
    std::getline(in, line);
    std::vector<Perm> gens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Point> im;
        long long v;
        while (ls >> v) {
            if (v < 0) throw std::runtime_error("group file: negative image");
            im.push_back(static_cast<Point>(v));
        }
        if (im.empty()) continue;
        if (im.size() != n) throw std::runtime_error("group file: generator of wrong length");
        gens.emplace_back(std::move(im));
    }
    return PermGroup(n, std::move(gens));
}

PermGroup read_group_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file " + path);
    return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& G)
{
    out << G.degree() << '\n';
    for (const auto& g : G.gens()) {
        for (std::size_t i = 0; i < g.degree(); ++i) out << (i ? " " : "") << g[static_cast<Point>(i)];
        out << '\n';
    }
}

} // namespace r3pls

#include "r3pls/omega.hpp"

#include <stdexcept>

namespace r3pls {

std::vector<Elem> OmegaSpace::vec(Point i) const
{
    const Elem* p = data(i);
    return {p, p + n_};
}

std::uint64_t OmegaSpace::code(const Elem* v) const
{
    std::uint64_t c = 0;
    for (unsigned i = 0; i < n_; ++i) c = c * F_->q() + v[i];
    return c;
}

std::int64_t OmegaSpace::lookup(std::uint64_t c) const
{
    if (!table_.empty()) return table_[c];
    auto it = map_.find(c);
    return it == map_.end() ? -1 : std::int64_t(it->second);
}

std::vector<Elem> OmegaSpace::canonical(std::vector<Elem> v) const
{
    unsigned i = 0;
    while (i < n_ && v[i] == 0) ++i;
    if (i == n_) throw std::out_of_range("zero vector");
    const std::uint32_t L = F_->log(v[i]);
    const Elem s = F_->w(-std::int64_t(L - L % r_));
    for (auto& x : v) x = F_->mul(x, s);
    return v;
}

Point OmegaSpace::point_of(const std::vector<Elem>& v) const
{
    auto c = canonical(v);
    const auto idx = lookup(code(c.data()));
    if (idx < 0) throw std::out_of_range("vector is not a point of Omega");
    return static_cast<Point>(idx);
}

bool OmegaSpace::contains(const std::vector<Elem>& v) const
{
    for (auto x : v)
        if (x) return lookup(code(canonical(v).data())) >= 0;
    return false;
}

OmegaSpace build_omega(OmegaKind kind, unsigned n, std::uint32_t q, std::uint32_t r, bool allow_small)
{
    unsigned p = 0, a = 0;
    for (unsigned d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0 || !is_prime(p)) throw std::invalid_argument("q must be a prime power");
    for (std::uint32_t t = q; t > 1; t /= p) {
        if (t % p) throw std::invalid_argument("q must be a prime power");
        ++a;
    }
    if (q < 3) throw std::invalid_argument("q must be at least 3");
    OmegaSpace S;
    S.kind_ = kind;
    S.n_ = n;
    S.q_ = q;
    S.r_ = r;
    if (kind == OmegaKind::Linear) {
        if (n < 2 || (n == 2 && q == 3 && !allow_small)) throw std::invalid_argument("need n >= 2 and (n,q) != (2,3)");
        if (r < 2 || (q - 1) % r) throw std::invalid_argument("need 1 < r | q-1");
        S.F_ = Field::make(p, a);
    } else {
        if (n != 3) throw std::invalid_argument("unitary spaces are 3-dimensional");
        if (r < 2 || (std::uint64_t(q) * q - 1) % r) throw std::invalid_argument("need 1 < r | q^2-1");
        S.F_ = Field::make(p, 2 * a);
    }
    const Field& F = *S.F_;
    const std::uint32_t Q = F.q();
    std::uint64_t space = 1;
    for (unsigned i = 0; i < n; ++i) space *= Q;
    if (space <= (std::uint64_t(1) << 26)) S.table_.assign(space, -1);

    auto from_code = [&](std::uint32_t c) -> Elem { return c == 0 ? 0 : F.w(c - 1); };
    auto isotropic = [&](const std::vector<Elem>& v) {
        // (v,v) = v0 v2^q + v1^{q+1} + v2 v0^q for Gram antidiag(1,1,1)
        Elem s = F.mul(v[0], F.pow(v[2], q));
        s = F.add(s, F.pow(v[1], q + 1));
        return F.add(s, F.mul(v[2], F.pow(v[0], q))) == 0;
    };

    std::vector<Elem> v(n);
    for (unsigned piv = 0; piv < n; ++piv) {
        const unsigned rest = n - 1 - piv;
        std::uint64_t combos = 1;
        for (unsigned i = 0; i < rest; ++i) combos *= Q;
        for (std::uint32_t i = 0; i < r; ++i) {
            for (std::uint64_t c = 0; c < combos; ++c) {
                std::fill(v.begin(), v.end(), 0);
                v[piv] = F.w(i);
                std::uint64_t t = c;
                for (unsigned k = n; k-- > piv + 1;) {
                    v[k] = from_code(static_cast<std::uint32_t>(t % Q));
                    t /= Q;
                }
                if (kind == OmegaKind::Unitary && !isotropic(v)) continue;
                const auto idx = static_cast<Point>(S.size());
                const std::uint64_t cd = S.code(v.data());
                if (S.table_.empty())
                    S.map_.emplace(cd, idx);
                else
                    S.table_[cd] = static_cast<std::int32_t>(idx);
                S.coords_.insert(S.coords_.end(), v.begin(), v.end());
            }
        }
    }

    // sigma cells: one per 1-space, cells ordered by first member
    const std::size_t N = S.size();
    S.cell_of_.assign(N, UINT32_MAX);
    for (Point i = 0; i < N; ++i) {
        if (S.cell_of_[i] != UINT32_MAX) continue;
        std::vector<Point> cell;
        auto u = S.vec(i);
        for (std::uint32_t k = 0; k < r; ++k) {
            std::vector<Elem> w(n);
            for (unsigned j = 0; j < n; ++j) w[j] = F.mul(u[j], F.w(k));
            cell.push_back(S.point_of(w));
        }
        std::sort(cell.begin(), cell.end());
        for (auto x : cell) S.cell_of_[x] = static_cast<std::uint32_t>(S.sigma_.size());
        S.sigma_.push_back(std::move(cell));
    }
    return S;
}

Perm induce_perm(const OmegaSpace& S, const SemilinearElem& g)
{
    const std::size_t N = S.size();
    std::vector<Point> img(N);
    bool bad = false;
#pragma omp parallel for schedule(static) if (N > 4096)
    for (std::int64_t i = 0; i < std::int64_t(N); ++i) {
        try {
            img[i] = S.point_of(sl_apply(S.field(), g, S.vec(static_cast<Point>(i))));
        } catch (const std::out_of_range&) {
#pragma omp atomic write
            bad = true;
        }
    }
    if (bad) throw std::invalid_argument("generator does not permute Omega");
    return Perm(std::move(img));
}

PermGroup induce_action(const OmegaSpace& S, const std::vector<SemilinearElem>& gens, std::uint64_t known_order)
{
    std::vector<Perm> perms;
    perms.reserve(gens.size());
    for (const auto& g : gens) perms.push_back(induce_perm(S, g));
    return PermGroup(S.size(), std::move(perms), known_order);
}

InducedGroup induced_group(const GroupSpec& spec)
{
    InducedGroup out{spec, build_omega(spec.unitary ? OmegaKind::Unitary : OmegaKind::Linear, spec.n, spec.q, spec.r),
                     gens_group(spec), {}};
    const std::uint64_t ord = induced_order(spec);
    out.group = induce_action(out.space, out.matrix_gens, ord);
    if (out.group.order() != ord) throw std::logic_error("induced order differs from bookkeeping for " + spec.name());
    return out;
}

std::string ActionFlags::type() const
{
    if (quasiprimitive) return "qp";
    if (innately_transitive) return "it";
    return "sp";
}

ActionFlags classify_action(const OmegaSpace& S, const PermGroup& G, const GroupSpec& spec)
{
    const Field& F = S.field();
    const unsigned n = S.n();
    const std::uint64_t q = S.q(), r = S.r(), p = F.p();
    const unsigned a = S.kind() == OmegaKind::Linear ? F.a() : F.a() / 2;
    ActionFlags fl;
    fl.semiprimitive = true;

    bool centre_meets = false; // G cap Z/Y != 1
    for (std::uint64_t i = 1; i < r && !centre_meets; ++i) {
        std::vector<Elem> d(n, F.w(static_cast<std::int64_t>(i)));
        centre_meets = G.contains(induce_perm(S, sl_linear(mat_diag(d))));
    }

    const std::uint64_t f = frob_index(spec);
    if (S.kind() == OmegaKind::Linear) {
        fl.innately_transitive = ((q - 1) / gcd_u(n, q - 1)) % r == 0;
        fl.quasiprimitive = fl.innately_transitive && !centre_meets;
        if (n == 2 && r == 2) {
            // rank 3 iff G is not inside Y.SigmaL_2(q)
            const std::uint64_t d = gcd_u(r * n, q - 1);
            bool outside = false;
            for (const auto& g : gens_group(spec))
                if (F.log(mat_det(F, g.mat)) % d) outside = true;
            fl.rank3 = outside;
        } else {
            fl.rank3 = is_prime(r) && is_primitive_prime_divisor(r, p, static_cast<unsigned>(r - 1)) &&
                       gcd_u(r - 1, a / f) == 1 && (n >= 3 || (fl.innately_transitive && !fl.quasiprimitive));
        }
    } else {
        fl.innately_transitive = ((q * q - 1) / gcd_u(3, q + 1)) % r == 0;
        fl.quasiprimitive = fl.innately_transitive && !centre_meets;
        fl.rank3 = contains_center(spec) && (q - 1) % r == 0 && r % 2 == 1 && is_prime(r) &&
                   is_primitive_prime_divisor(r, p, static_cast<unsigned>(r - 1)) && gcd_u(r - 1, 2 * a / f) == 1;
    }
    fl.rank = rank(G);
    if (fl.rank3 != (fl.rank == 3))
        throw std::logic_error("rank-3 prediction disagrees with computed rank " + std::to_string(fl.rank) + " for " +
                               spec.name());
    return fl;
}

nlohmann::json omega_to_json(const OmegaSpace& S)
{
    nlohmann::json j;
    j["kind"] = S.kind() == OmegaKind::Linear ? "linear" : "unitary";
    j["n"] = S.n();
    j["q"] = S.q();
    j["r"] = S.r();
    auto& pts = j["points"] = nlohmann::json::array();
    for (Point i = 0; i < S.size(); ++i) pts.push_back(S.vec(i));
    j["sigma"] = S.sigma();
    return j;
}

} // namespace r3pls

#include "r3pls/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace r3pls {

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e)
{
    std::uint64_t x = 1;
    while (e--) x *= b;
    return x;
}

// q = q0^f with f >= 1; returns f or 0
unsigned subfield_degree(std::uint32_t q, std::uint32_t q0)
{
    if (q0 < 2) return 0;
    unsigned f = 0;
    std::uint64_t x = 1;
    while (x < q) {
        x *= q0;
        ++f;
    }
    return x == q ? f : 0;
}

const char* family_tag(Family f)
{
    switch (f) {
    case Family::AGstar: return "AGstar";
    case Family::Delta: return "Delta";
    case Family::LSub: return "LSub";
    case Family::DLSub: return "DLSub";
    case Family::USub: return "USub";
    case Family::AGUstar: return "AGUstar";
    }
    return "?";
}

std::vector<Elem> vec_of(unsigned n, std::initializer_list<std::pair<unsigned, Elem>> entries)
{
    std::vector<Elem> v(n, 0);
    for (auto [i, x] : entries) v[i] = x;
    return v;
}

} // namespace

std::string FamilyParams::name() const
{
    std::string s = family_tag(family);
    auto num = [](std::uint64_t x) { return std::to_string(x); };
    switch (family) {
    case Family::AGstar:
    case Family::Delta: return s + "(" + num(n) + "," + num(q) + ")";
    case Family::LSub: return s + "(" + num(n) + "," + num(q) + "," + num(q0) + "," + num(r) + ")";
    case Family::DLSub: return s + "(" + num(q) + "," + num(q0) + "," + num(r) + "," + num(j) + ")";
    case Family::USub: return s + "(" + num(q) + "," + num(q0) + "," + num(r) + ")";
    case Family::AGUstar: return s + "(" + num(q) + ")";
    }
    return s;
}

std::uint32_t lsub_t_scan(std::uint32_t q, std::uint32_t r, std::uint32_t k)
{
    // <w^a> cap <w^b> = <w^lcm(a,b)> for divisors a, b of q-1
    const std::uint64_t target = std::uint64_t(k) * r;
    for (std::uint64_t t = 1; t <= target; ++t) {
        const std::uint64_t g = gcd_u(t, q - 1);
        if (g / gcd_u(g, r) * r == target) return static_cast<std::uint32_t>(t);
    }
    throw std::logic_error("no t found in scan");
}

LsubParams lsub_params(std::uint32_t q, std::uint32_t q0, std::uint32_t r)
{
    if (!subfield_degree(q, q0)) throw std::invalid_argument("q is not a power of q0");
    if (r < 1 || (q - 1) % r) throw std::invalid_argument("r does not divide q-1");
    if ((q - 1) % (std::uint64_t(r) * (q0 - 1))) throw std::invalid_argument("r(q0-1) does not divide q-1");
    LsubParams lp;
    lp.k = (q - 1) / (r * (q0 - 1));
    std::uint32_t rpi = 1;
    for (auto p : prime_factors(lp.k)) {
        std::uint32_t x = r;
        while (x % p == 0) {
            x /= static_cast<std::uint32_t>(p);
            rpi *= static_cast<std::uint32_t>(p);
        }
    }
    lp.r_pi = rpi;
    lp.t = lp.k * rpi;
    if (lsub_t_scan(q, r, lp.k) != lp.t) throw std::logic_error("t: scan and closed form disagree");
    return lp;
}

void check_family(const FamilyParams& fp)
{
    const std::uint32_t q = fp.q;
    if (q < 3) throw std::invalid_argument("q must be at least 3");
    switch (fp.family) {
    case Family::AGstar:
    case Family::Delta:
        if (fp.n < 2) throw std::invalid_argument("n must be at least 2");
        break;
    case Family::LSub: {
        if (fp.n < 2) throw std::invalid_argument("n must be at least 2");
        if (fp.r < 2) throw std::invalid_argument("r must exceed 1");
        lsub_params(q, fp.q0, fp.r);
        break;
    }
    case Family::DLSub: {
        if (fp.n != 2) throw std::invalid_argument("DLSub is 2-dimensional");
        if (fp.r < 2) throw std::invalid_argument("r must exceed 1");
        const auto lp = lsub_params(q, fp.q0, fp.r);
        if (fp.j == 0 || fp.j >= lp.t) throw std::invalid_argument("need 0 < j < t");
        break;
    }
    case Family::USub: {
        if (fp.n != 3) throw std::invalid_argument("USub is 3-dimensional");
        if (subfield_degree(q, fp.q0) < 2) throw std::invalid_argument("need q = q0^b with b > 1");
        if (fp.r != (q - 1) / (fp.q0 - 1) || fp.r % 2 == 0)
            throw std::invalid_argument("need r = (q-1)/(q0-1) odd");
        break;
    }
    case Family::AGUstar:
        if (fp.n != 3) throw std::invalid_argument("AGUstar is 3-dimensional");
        if (q % 2 || q <= 2) throw std::invalid_argument("need q even and q > 2");
        if (fp.r != q - 1) throw std::invalid_argument("need r = q-1");
        break;
    }
}

ExpectedCounts expected_counts(const FamilyParams& fp)
{
    ExpectedCounts ec;
    const std::uint64_t q = fp.q, q0 = fp.q0, r = fp.r, n = fp.n;
    const std::uint64_t qn = upow(q, fp.n), qn1 = upow(q, fp.n - 1);
    switch (fp.family) {
    case Family::AGstar:
        ec = {qn - 1, (qn - 1) * (qn1 - 1) / (q - 1), q, true, 1};
        break;
    case Family::Delta:
        ec = {qn - 1, (qn - 1) * (qn - q) / 6, 3, true, 1};
        break;
    case Family::LSub:
    case Family::DLSub: {
        const auto lp = lsub_params(fp.q, fp.q0, fp.r);
        std::uint64_t lines = r * q * (qn - 1) * (qn1 - 1) / (q0 * (q0 * q0 - 1) * (q - 1));
        if (n == 2) lines /= gcd_u(2 * r, lp.t);
        ec.points = r * (qn - 1) / (q - 1);
        ec.line_size = q0 + 1;
        if (fp.family == Family::LSub) {
            ec.lines = lines;
            ec.multiplicity = n == 2 ? lp.k / gcd_u(2, lp.k) : lp.k;
            ec.pls = ec.multiplicity == 1;
        } else {
            std::uint32_t r2 = 1;
            while (fp.r % (r2 * 2) == 0) r2 *= 2;
            ec.pls = lp.k == 2 && r % 2 == 0 && fp.j != r2;
            ec.multiplicity = ec.pls ? 1 : 0;
            ec.lines = ec.pls ? 2 * lines : 0; // disjoint union only in the PLS case
        }
        break;
    }
    case Family::USub:
        ec.points = r * (q * q * q + 1);
        ec.lines = q * q * q * (q * q * q + 1) * (q - 1) * (q - 1) / (q0 * (q0 * q0 - 1) * (q0 - 1));
        ec.line_size = q0 + 1;
        break;
    case Family::AGUstar:
        ec.points = r * (q * q * q + 1);
        ec.lines = q * q * (q * q * q + 1) * (q - 1);
        ec.line_size = q;
        break;
    }
    return ec;
}

GroupSpec family_group(const FamilyParams& fp)
{
    switch (fp.family) {
    case Family::AGstar:
    case Family::Delta: return {GroupKind::GL, false, fp.n, fp.q, fp.q - 1, 0};
    case Family::LSub:
    case Family::DLSub: return {GroupKind::SLdet, false, fp.n, fp.q, fp.r, lsub_params(fp.q, fp.q0, fp.r).t};
    case Family::USub:
    case Family::AGUstar: return {GroupKind::ZSU3, true, 3, fp.q, fp.r, 0};
    }
    throw std::logic_error("bad family");
}

OmegaSpace family_space(const FamilyParams& fp)
{
    switch (fp.family) {
    case Family::AGstar:
    case Family::Delta: return build_omega(OmegaKind::Linear, fp.n, fp.q, fp.q - 1, true);
    case Family::LSub:
    case Family::DLSub: return build_omega(OmegaKind::Linear, fp.n, fp.q, fp.r);
    case Family::USub:
    case Family::AGUstar: return build_omega(OmegaKind::Unitary, 3, fp.q, fp.r);
    }
    throw std::logic_error("bad family");
}

std::vector<Point> family_base_line(const OmegaSpace& S, const FamilyParams& fp)
{
    const Field& F = S.field();
    const unsigned n = S.n();
    std::vector<Point> L;
    auto add = [&](const std::vector<Elem>& v) { L.push_back(S.point_of(v)); };
    switch (fp.family) {
    case Family::AGstar:
        for (Elem lam = 0; lam < F.q(); ++lam) add(vec_of(n, {{0, lam}, {1, F.sub(1, lam)}}));
        break;
    case Family::Delta:
        add(vec_of(n, {{0, 1}}));
        add(vec_of(n, {{1, 1}}));
        add(vec_of(n, {{0, F.neg(1)}, {1, F.neg(1)}}));
        break;
    case Family::LSub:
    case Family::DLSub:
        add(vec_of(n, {{0, 1}}));
        for (Elem lam : F.subfield(fp.q0)) add(vec_of(n, {{0, lam}, {1, 1}}));
        break;
    case Family::USub: {
        // basis {e, x, f}; W = w^{r(q+1)/(q+1,2)} F_q0
        const std::uint64_t q = fp.q;
        const Elem c = F.w(static_cast<std::int64_t>(fp.r * (q + 1) / gcd_u(q + 1, 2)));
        add(vec_of(3, {{0, 1}}));
        for (Elem lam : F.subfield(fp.q0)) add(vec_of(3, {{0, F.mul(c, lam)}, {2, 1}}));
        break;
    }
    case Family::AGUstar:
        for (Elem lam : F.subfield(fp.q)) add(vec_of(3, {{0, lam}, {2, F.sub(1, lam)}}));
        break;
    }
    std::sort(L.begin(), L.end());
    if (std::adjacent_find(L.begin(), L.end()) != L.end()) throw std::logic_error("base line has repeated points");
    return L;
}

nlohmann::json params_to_json(const FamilyParams& fp)
{
    nlohmann::json j;
    j["family"] = family_tag(fp.family);
    j["name"] = fp.name();
    j["n"] = fp.n;
    j["q"] = fp.q;
    if (fp.q0) j["q0"] = fp.q0;
    j["r"] = fp.r;
    if (fp.family == Family::DLSub) j["j"] = fp.j;
    if (fp.family == Family::LSub || fp.family == Family::DLSub) {
        const auto lp = lsub_params(fp.q, fp.q0, fp.r);
        j["k"] = lp.k;
        j["t"] = lp.t;
        j["r_pi"] = lp.r_pi;
    }
    return j;
}

FamilyParams params_from_json(const nlohmann::json& j)
{
    FamilyParams fp;
    fp.family = parse_family(j.at("family").get<std::string>());
    fp.n = j.value("n", 2u);
    fp.q = j.at("q").get<std::uint32_t>();
    fp.q0 = j.value("q0", 0u);
    fp.r = j.value("r", 0u);
    fp.j = j.value("j", 0u);
    return fp;
}

Family parse_family(const std::string& s)
{
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (Family f : {Family::AGstar, Family::Delta, Family::LSub, Family::DLSub, Family::USub, Family::AGUstar}) {
        std::string tag = family_tag(f);
        std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::tolower(c); });
        if (tag == t) return f;
    }
    throw std::invalid_argument("unknown family: " + s);
}

namespace {

std::vector<Perm> family_perms(const OmegaSpace& S, const FamilyParams& fp)
{
    std::vector<Perm> perms;
    for (const auto& g : gens_group(family_group(fp))) perms.push_back(induce_perm(S, g));
    return perms;
}

IncidenceStructure orbit_structure(const OmegaSpace& S, const std::vector<Perm>& perms, const std::vector<Point>& base)
{
    auto lo = line_orbit(perms, base, false);
    return IncidenceStructure(S.size(), lo.line_size, std::move(lo.flat));
}

} // namespace

FamilyResult build_family(const FamilyParams& fp_in, const BuildOptions& opt)
{
    FamilyParams fp = fp_in;
    if (fp.family == Family::DLSub) fp.n = 2;
    if (fp.family == Family::USub || fp.family == Family::AGUstar) fp.n = 3;
    if (fp.family == Family::AGstar || fp.family == Family::Delta) fp.r = fp.q - 1;
    if (fp.family == Family::AGUstar) fp.r = fp.q - 1;
    check_family(fp);

    FamilyResult res{fp, family_space(fp), {}, false, 0, true};
    const OmegaSpace& S = res.space;
    const auto ec = expected_counts(fp);
    const auto perms = family_perms(S, fp);
    const auto base = family_base_line(S, fp);

    if (opt.enumerate_limit && ec.lines > opt.enumerate_limit) {
        res.count_only = true;
        RandomElements rnd(perms, S.size(), opt.seed ? opt.seed : global_seed());
        std::unordered_map<std::uint64_t, std::vector<Point>> pair_line;
        std::vector<Point> img(base.size());
        for (std::uint64_t s = 0; s < opt.samples; ++s) {
            const Perm g = rnd.next();
            for (std::size_t i = 0; i < base.size(); ++i) img[i] = g[base[i]];
            std::sort(img.begin(), img.end());
            for (std::size_t a = 0; a < img.size(); ++a)
                for (std::size_t b = a + 1; b < img.size(); ++b) {
                    const std::uint64_t key = (std::uint64_t(img[a]) << 32) | img[b];
                    auto [it, fresh] = pair_line.emplace(key, img);
                    if (!fresh && it->second != img) res.sample_ok = false;
                }
            ++res.sampled;
        }
        res.structure = IncidenceStructure(S.size(), base.size(), {});
    } else if (fp.family == Family::DLSub) {
        const IncidenceStructure L = orbit_structure(S, perms, base);
        std::vector<Elem> d(2, 1);
        d[0] = S.field().w(fp.j);
        const IncidenceStructure wL = relabel(L, induce_perm(S, sl_linear(mat_diag(d))));
        std::size_t shared = 0;
        res.structure = line_union(L, wL, &shared);
        res.structure.params["shared_lines"] = shared;
    } else {
        res.structure = orbit_structure(S, perms, base);
    }
    auto pj = params_to_json(fp);
    for (auto& [key, val] : pj.items()) res.structure.params[key] = val;
    if (res.count_only) {
        res.structure.params["count_only"] = true;
        res.structure.params["expected_lines"] = ec.lines;
        res.structure.params["sampled"] = res.sampled;
        res.structure.params["sample_ok"] = res.sample_ok;
    }
    return res;
}

namespace {
IncidenceStructure build_full(FamilyParams fp)
{
    return build_family(fp, BuildOptions{0, 0, 0}).structure;
}
} // namespace

IncidenceStructure ag_star(unsigned n, std::uint32_t q) { return build_full({Family::AGstar, n, q, 0, q - 1, 0}); }
IncidenceStructure delta(unsigned n, std::uint32_t q) { return build_full({Family::Delta, n, q, 0, q - 1, 0}); }
IncidenceStructure lsub(unsigned n, std::uint32_t q, std::uint32_t q0, std::uint32_t r)
{
    return build_full({Family::LSub, n, q, q0, r, 0});
}
IncidenceStructure dlsub(std::uint32_t q, std::uint32_t q0, std::uint32_t r, unsigned j)
{
    return build_full({Family::DLSub, 2, q, q0, r, j});
}
IncidenceStructure usub(std::uint32_t q, std::uint32_t q0, std::uint32_t r)
{
    return build_full({Family::USub, 3, q, q0, r, 0});
}
IncidenceStructure agu_star(std::uint32_t q) { return build_full({Family::AGUstar, 3, q, 0, q - 1, 0}); }

} // namespace r3pls

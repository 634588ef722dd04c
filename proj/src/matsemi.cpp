#include "r3pls/matsemi.hpp"

#include "r3pls/permcore.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace r3pls {

Mat mat_identity(unsigned n)
{
    Mat m(n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat mat_diag(const std::vector<Elem>& d)
{
    Mat m(static_cast<unsigned>(d.size()));
    for (unsigned i = 0; i < m.n; ++i) m(i, i) = d[i];
    return m;
}

Mat mat_antidiag(const std::vector<Elem>& d)
{
    Mat m(static_cast<unsigned>(d.size()));
    for (unsigned i = 0; i < m.n; ++i) m(i, m.n - 1 - i) = d[i];
    return m;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B)
{
    if (A.n != B.n) throw std::invalid_argument("dimension mismatch");
    Mat C(A.n);
    for (unsigned i = 0; i < A.n; ++i)
        for (unsigned k = 0; k < A.n; ++k) {
            const Elem a = A(i, k);
            if (!a) continue;
            for (unsigned j = 0; j < A.n; ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
        }
    return C;
}

Mat mat_frob(const Field& F, const Mat& A, int k)
{
    Mat B = A;
    for (auto& x : B.e) x = F.frob(x, k);
    return B;
}

Mat mat_transpose(const Mat& A)
{
    Mat B(A.n);
    for (unsigned i = 0; i < A.n; ++i)
        for (unsigned j = 0; j < A.n; ++j) B(j, i) = A(i, j);
    return B;
}

Mat mat_inverse(const Field& F, const Mat& A)
{
    const unsigned n = A.n;
    Mat M = A, R = mat_identity(n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && M(piv, c) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != c)
            for (unsigned j = 0; j < n; ++j) {
                std::swap(M(c, j), M(piv, j));
                std::swap(R(c, j), R(piv, j));
            }
        const Elem inv = F.inv(M(c, c));
        for (unsigned j = 0; j < n; ++j) {
            M(c, j) = F.mul(M(c, j), inv);
            R(c, j) = F.mul(R(c, j), inv);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == c || M(i, c) == 0) continue;
            const Elem f = F.neg(M(i, c));
            for (unsigned j = 0; j < n; ++j) {
                M(i, j) = F.add(M(i, j), F.mul(f, M(c, j)));
                R(i, j) = F.add(R(i, j), F.mul(f, R(c, j)));
            }
        }
    }
    return R;
}

Elem mat_det(const Field& F, const Mat& A)
{
    const unsigned n = A.n;
    Mat M = A;
    Elem det = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && M(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) std::swap(M(c, j), M(piv, j));
            det = F.neg(det);
        }
        det = F.mul(det, M(c, c));
        const Elem inv = F.inv(M(c, c));
        for (unsigned i = c + 1; i < n; ++i) {
            if (M(i, c) == 0) continue;
            const Elem f = F.neg(F.mul(M(i, c), inv));
            for (unsigned j = c; j < n; ++j) M(i, j) = F.add(M(i, j), F.mul(f, M(c, j)));
        }
    }
    return det;
}

std::vector<Elem> vec_mat(const Field& F, const std::vector<Elem>& v, const Mat& A)
{
    std::vector<Elem> out(A.n, 0);
    for (unsigned i = 0; i < A.n; ++i) {
        if (!v[i]) continue;
        for (unsigned j = 0; j < A.n; ++j) out[j] = F.add(out[j], F.mul(v[i], A(i, j)));
    }
    return out;
}

namespace {
int norm_frob(const Field& F, int k)
{
    const int e = static_cast<int>(F.a());
    k %= e;
    return k < 0 ? k + e : k;
}
} // namespace

SemilinearElem sl_compose(const Field& F, const SemilinearElem& x, const SemilinearElem& y)
{
    return {norm_frob(F, x.frob + y.frob), mat_mul(F, mat_frob(F, x.mat, y.frob), y.mat)};
}

SemilinearElem sl_inverse(const Field& F, const SemilinearElem& x)
{
    const int k = norm_frob(F, -x.frob);
    return {k, mat_inverse(F, mat_frob(F, x.mat, k))};
}

SemilinearElem sl_power(const Field& F, const SemilinearElem& x, std::uint64_t e)
{
    SemilinearElem r{0, mat_identity(x.mat.n)}, b = x;
    while (e) {
        if (e & 1) r = sl_compose(F, r, b);
        b = sl_compose(F, b, b);
        e >>= 1;
    }
    return r;
}

std::vector<Elem> sl_apply(const Field& F, const SemilinearElem& g, const std::vector<Elem>& v)
{
    std::vector<Elem> w = v;
    if (g.frob)
        for (auto& x : w) x = F.frob(x, g.frob);
    return vec_mat(F, w, g.mat);
}

SemilinearElem sl_linear(Mat m) { return {0, std::move(m)}; }
SemilinearElem sl_frobenius(unsigned n, int k) { return {k, mat_identity(n)}; }

UnitaryForm unitary_form(std::uint32_t q) { return {q, mat_antidiag({1, 1, 1})}; }

Elem herm(const Field& F, const UnitaryForm& P, const std::vector<Elem>& u, const std::vector<Elem>& v)
{
    // u P conj(v)^T
    Elem s = 0;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            const Elem g = P.gram(i, j);
            if (!g || !u[i] || !v[j]) continue;
            s = F.add(s, F.mul(F.mul(u[i], g), F.pow(v[j], P.q)));
        }
    return s;
}

bool is_unitary(const Field& F, const Mat& A, const UnitaryForm& P)
{
    if (A.n != 3 || P.gram.n != 3) throw std::invalid_argument("unitary check needs 3x3 matrices");
    if (std::uint64_t(P.q) * P.q != F.q()) throw std::invalid_argument("field is not GF(q^2)");
    Mat conjT(3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) conjT(j, i) = F.pow(A(i, j), P.q);
    return mat_mul(F, mat_mul(F, A, P.gram), conjT) == P.gram;
}

Elem semisimilarity_factor(const Field& F, const SemilinearElem& g, const UnitaryForm& P)
{
    // (u g, v g) = lambda (u, v)^{phi^k}: test on basis pairs
    Elem lambda = 0;
    std::vector<std::vector<Elem>> basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& u : basis)
        for (const auto& v : basis) {
            const Elem lhs = herm(F, P, sl_apply(F, g, u), sl_apply(F, g, v));
            const Elem base = F.frob(herm(F, P, u, v), g.frob);
            if (base == 0) {
                if (lhs != 0) return 0;
                continue;
            }
            const Elem l = F.div(lhs, base);
            if (lambda == 0) lambda = l;
            if (l != lambda) return 0;
        }
    return lambda;
}

std::uint64_t order_sl(unsigned n, std::uint64_t q)
{
    unsigned __int128 o = 1;
    for (unsigned i = 0; i < n * (n - 1) / 2; ++i) o *= q;
    for (unsigned i = 2; i <= n; ++i) o *= (ipow(q, i) - 1);
    if (o >> 64) throw std::overflow_error("order overflow");
    return static_cast<std::uint64_t>(o);
}

std::uint64_t order_su3(std::uint64_t q) { return q * q * q * (q * q * q + 1) * (q * q - 1); }

namespace {

// permutation action on projective points <v> (or isotropic ones) reached from start
Mat transvection(unsigned n, unsigned i, unsigned j, Elem x)
{
    Mat m = mat_identity(n);
    m(i, j) = x;
    return m;
}

} // namespace

PermGroup projective_image(const Field& F, unsigned n, const std::vector<SemilinearElem>& gens,
                           const std::vector<Elem>& start)
{
    auto normalize = [&](std::vector<Elem> v) {
        unsigned i = 0;
        while (v[i] == 0) ++i;
        const Elem inv = F.inv(v[i]);
        for (auto& x : v) x = F.mul(x, inv);
        return v;
    };
    auto code = [&](const std::vector<Elem>& v) {
        std::uint64_t c = 0;
        for (auto x : v) c = c * F.q() + x;
        return c;
    };
    std::vector<std::vector<Elem>> pts{normalize(start)};
    std::unordered_map<std::uint64_t, Point> idx{{code(pts[0]), 0}};
    std::vector<std::vector<Point>> img(gens.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            auto w = normalize(sl_apply(F, gens[g], pts[i]));
            auto [it, ins] = idx.emplace(code(w), static_cast<Point>(pts.size()));
            if (ins) pts.push_back(std::move(w));
            img[g].push_back(it->second);
        }
    }
    (void)n;
    std::vector<Perm> perms;
    for (auto& v : img) perms.emplace_back(std::move(v));
    return PermGroup(pts.size(), std::move(perms));
}

std::vector<SemilinearElem> gens_sl(unsigned n, const Field& F)
{
    if (n < 2) throw std::invalid_argument("SL needs n >= 2");
    std::vector<SemilinearElem> gens;
    for (unsigned i = 0; i + 1 < n; ++i) {
        gens.push_back(sl_linear(transvection(n, i, i + 1, 1)));
        gens.push_back(sl_linear(transvection(n, i + 1, i, 1)));
    }
    if (F.q() > 3) {
        std::vector<Elem> d(n, 1);
        d[0] = F.omega();
        d[1] = F.inv(F.omega());
        gens.push_back(sl_linear(mat_diag(d)));
    }
    const std::uint64_t psl = order_sl(n, F.q()) / gcd_u(n, F.q() - 1);
    std::vector<Elem> e1(n, 0);
    e1[0] = 1;
    auto check = [&] { return projective_image(F, n, gens, e1).order() == psl; };
    // extend with transvections over an additive basis if the short list falls short
    for (unsigned k = 1; !check(); ++k) {
        if (k >= F.a()) throw std::logic_error("SL generator self-check failed");
        for (unsigned i = 0; i + 1 < n; ++i) {
            gens.push_back(sl_linear(transvection(n, i, i + 1, F.w(k))));
            gens.push_back(sl_linear(transvection(n, i + 1, i, F.w(k))));
        }
    }
    return gens;
}

std::vector<SemilinearElem> gens_su3(const Field& F2)
{
    if (F2.a() % 2) throw std::invalid_argument("unitary groups need GF(q^2)");
    std::uint32_t q = 1;
    for (unsigned i = 0; i < F2.a() / 2; ++i) q *= F2.p();
    if (q < 3) throw std::invalid_argument("SU_3(q) needs q >= 3");
    const UnitaryForm P = unitary_form(q);
    const Elem w = F2.omega();

    auto unipotent = [&](Elem c) {
        // Tr(b) + c^{q+1} = 0
        const Elem target = F2.neg(F2.pow(c, q + 1));
        for (Elem b = 0; b < F2.q(); ++b) {
            if (trace_to_subfield(F2, q, b) != target) continue;
            if (c == 0 && b == 0) continue;
            Mat m = mat_identity(3);
            m(1, 0) = F2.neg(F2.pow(c, q));
            m(2, 0) = b;
            m(2, 1) = c;
            return m;
        }
        throw std::logic_error("no unipotent element found");
    };
    std::vector<SemilinearElem> gens;
    gens.push_back(sl_linear(unipotent(1)));
    gens.push_back(sl_linear(unipotent(w)));
    gens.push_back(sl_linear(mat_diag({w, F2.pow(w, q - 1), F2.inv(F2.pow(w, q))})));
    const Elem m1 = F2.neg(1);
    gens.push_back(sl_linear(mat_antidiag({m1, m1, m1})));
    for (const auto& g : gens)
        if (!is_unitary(F2, g.mat, P) || mat_det(F2, g.mat) != 1) throw std::logic_error("SU generator not in SU");

    const std::uint64_t psu = order_su3(q) / gcd_u(3, q + 1);
    auto check = [&] { return projective_image(F2, 3, gens, {1, 0, 0}).order() == psu; };
    for (unsigned k = 2; !check(); ++k) {
        if (k > 2 * F2.a() + 2) throw std::logic_error("SU generator self-check failed");
        gens.push_back(sl_linear(unipotent(F2.w(k))));
    }
    return gens;
}

std::string GroupSpec::name() const
{
    const std::string nq = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    const std::string rr = " r=" + std::to_string(r);
    switch (kind) {
    case GroupKind::YSL: return "Y.SL" + nq + rr;
    case GroupKind::ZSL: return "Z.SL" + nq + rr;
    case GroupKind::GL: return "GL" + nq + rr;
    case GroupKind::GammaL: return "GammaL" + nq + rr;
    case GroupKind::SLphi: return "SL" + nq + ":<phi>" + rr;
    case GroupKind::SLdiagphi: return "<SL" + nq + ",diag(1,..,w)phi>" + rr;
    case GroupKind::YSLdiagphi: return "<Y.SL" + nq + ",phi.diag(1,..,w)>" + rr;
    case GroupKind::ZSLphi: return "Z.SL" + nq + ":<phi^" + std::to_string(param ? param : 1) + ">" + rr;
    case GroupKind::SLdet: return "<SL" + nq + ",diag(w^" + std::to_string(param) + ",1..)>" + rr;
    case GroupKind::GLphi: return "GL" + nq + ":<phi^" + std::to_string(param ? param : 1) + ">" + rr;
    case GroupKind::SU3: return "SU3(" + std::to_string(q) + ")" + rr;
    case GroupKind::ZSU3: return "Z.SU3(" + std::to_string(q) + ")" + rr;
    case GroupKind::GU3: return "GU3(" + std::to_string(q) + ")" + rr;
    case GroupKind::GammaU3: return "GammaU3(" + std::to_string(q) + ")" + rr;
    case GroupKind::ZSU3phi: return "Z.SU3(" + std::to_string(q) + "):<phi^" + std::to_string(param ? param : 1) + ">" + rr;
    }
    return "?";
}

namespace {
std::pair<unsigned, unsigned> prime_power(std::uint32_t q)
{
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p) continue;
        unsigned a = 0;
        std::uint32_t t = q;
        while (t % p == 0) {
            t /= p;
            ++a;
        }
        if (t != 1 || !is_prime(p)) throw std::invalid_argument("q is not a prime power");
        return {p, a};
    }
    throw std::invalid_argument("q is not a prime power");
}

bool is_unitary_kind(GroupKind k)
{
    return k == GroupKind::SU3 || k == GroupKind::ZSU3 || k == GroupKind::GU3 || k == GroupKind::GammaU3 ||
           k == GroupKind::ZSU3phi;
}

void check_spec(const GroupSpec& s)
{
    if (s.unitary != is_unitary_kind(s.kind)) throw std::invalid_argument("spec kind/unitary mismatch");
    if (s.unitary && s.n != 3) throw std::invalid_argument("unitary specs are 3-dimensional");
    if (!s.unitary && s.n < 2) throw std::invalid_argument("n must be at least 2");
    const std::uint64_t Q = s.unitary ? std::uint64_t(s.q) * s.q : s.q;
    if (s.r < 1 || (Q - 1) % s.r) throw std::invalid_argument("r does not divide the multiplicative order");
}

// linear: H cap GL = {g : det g in <w^d>}; returns d
std::uint64_t det_index(const GroupSpec& s)
{
    const std::uint64_t q1 = s.q - 1;
    const auto [p, a] = prime_power(s.q);
    switch (s.kind) {
    case GroupKind::YSL: return gcd_u(std::uint64_t(s.r) * s.n, q1);
    case GroupKind::ZSL: return gcd_u(s.n, q1);
    case GroupKind::GL:
    case GroupKind::GammaL:
    case GroupKind::GLphi: return 1;
    case GroupKind::SLphi: return q1;
    case GroupKind::SLdiagphi: return q1 / (p - 1);
    case GroupKind::YSLdiagphi: return gcd_u(gcd_u(std::uint64_t(s.r) * s.n, q1 / (p - 1)), q1);
    case GroupKind::ZSLphi: return gcd_u(s.n, q1);
    case GroupKind::SLdet: return gcd_u(s.param, q1);
    default: throw std::logic_error("not a linear spec");
    }
}
} // namespace

FieldPtr spec_field(const GroupSpec& s)
{
    const auto [p, a] = prime_power(s.q);
    return Field::make(p, s.unitary ? 2 * a : a);
}

std::uint64_t frob_index(const GroupSpec& s)
{
    const auto [p, a] = prime_power(s.q);
    const unsigned e = s.unitary ? 2 * a : a;
    const unsigned j = s.param ? s.param : 1;
    switch (s.kind) {
    case GroupKind::GammaL:
    case GroupKind::SLphi:
    case GroupKind::SLdiagphi:
    case GroupKind::YSLdiagphi:
    case GroupKind::GammaU3: return e;
    case GroupKind::ZSLphi:
    case GroupKind::GLphi:
    case GroupKind::ZSU3phi: return e / gcd_u(e, j);
    default: return 1;
    }
}

bool contains_center(const GroupSpec& s)
{
    switch (s.kind) {
    case GroupKind::ZSL:
    case GroupKind::GL:
    case GroupKind::GammaL:
    case GroupKind::ZSLphi:
    case GroupKind::GLphi:
    case GroupKind::ZSU3:
    case GroupKind::GammaU3:
    case GroupKind::ZSU3phi: return true;
    case GroupKind::SU3:
    case GroupKind::GU3: return false;
    default: {
        // w^n must be a determinant of H cap GL
        return s.n % det_index(s) == 0;
    }
    }
}

std::uint64_t matrix_group_order(const GroupSpec& s)
{
    check_spec(s);
    const std::uint64_t f = frob_index(s);
    if (!s.unitary) return f * order_sl(s.n, s.q) * ((s.q - 1) / det_index(s));
    const std::uint64_t su = order_su3(s.q), q = s.q;
    const std::uint64_t g3 = gcd_u(3, q + 1);
    switch (s.kind) {
    case GroupKind::SU3: return su;
    case GroupKind::GU3: return su * (q + 1);
    case GroupKind::ZSU3: return su * (q * q - 1) / g3;
    case GroupKind::ZSU3phi: return f * su * (q * q - 1) / g3;
    case GroupKind::GammaU3: return f * su * (q * q - 1);
    default: throw std::logic_error("bad spec");
    }
}

std::uint64_t induced_order(const GroupSpec& s)
{
    check_spec(s);
    const std::uint64_t Q = s.unitary ? std::uint64_t(s.q) * s.q : s.q;
    const std::uint64_t m = (Q - 1) / s.r; // |Y|
    std::uint64_t in_h = 0;                // |H cap Y|
    for (std::uint64_t k = 0; k < m; ++k) {
        const std::uint64_t e = (k * s.r) % (Q - 1); // lambda = w^e
        bool member;
        if (!s.unitary) {
            member = (e * s.n) % (Q - 1) % det_index(s) == 0;
        } else {
            const bool in_gu = (e * (s.q + 1)) % (Q - 1) == 0;
            const bool in_su = in_gu && (3 * e) % (Q - 1) == 0;
            switch (s.kind) {
            case GroupKind::SU3: member = in_su; break;
            case GroupKind::GU3: member = in_gu; break;
            default: member = true;
            }
        }
        if (member) ++in_h;
    }
    return matrix_group_order(s) / in_h;
}

std::vector<SemilinearElem> gens_group(const GroupSpec& s)
{
    check_spec(s);
    const FieldPtr Fp = spec_field(s);
    const Field& F = *Fp;
    const unsigned n = s.n;
    auto scalar = [&](Elem x) { return sl_linear(mat_diag(std::vector<Elem>(n, x))); };
    auto diag_first = [&](Elem x) {
        std::vector<Elem> d(n, 1);
        d[0] = x;
        return mat_diag(d);
    };
    auto diag_last = [&](Elem x) {
        std::vector<Elem> d(n, 1);
        d[n - 1] = x;
        return mat_diag(d);
    };
    const SemilinearElem phi = sl_frobenius(n, 1);
    const int j = s.param ? static_cast<int>(s.param) : 1;

    std::vector<SemilinearElem> g = s.unitary ? gens_su3(F) : gens_sl(n, F);
    switch (s.kind) {
    case GroupKind::YSL: g.push_back(scalar(F.w(s.r))); break;
    case GroupKind::ZSL: g.push_back(scalar(F.omega())); break;
    case GroupKind::GL: g.push_back(sl_linear(diag_first(F.omega()))); break;
    case GroupKind::GammaL:
        g.push_back(sl_linear(diag_first(F.omega())));
        g.push_back(phi);
        break;
    case GroupKind::GLphi:
        g.push_back(sl_linear(diag_first(F.omega())));
        g.push_back(sl_frobenius(n, j));
        break;
    case GroupKind::SLphi: g.push_back(phi); break;
    case GroupKind::SLdiagphi:
        // diag(1,..,1,w) followed by phi
        g.push_back(sl_compose(F, sl_linear(diag_last(F.omega())), phi));
        break;
    case GroupKind::YSLdiagphi:
        g.push_back(scalar(F.w(s.r)));
        // phi followed by diag(1,..,1,w)
        g.push_back(sl_compose(F, phi, sl_linear(diag_last(F.omega()))));
        break;
    case GroupKind::ZSLphi:
        g.push_back(scalar(F.omega()));
        g.push_back(sl_frobenius(n, j));
        break;
    case GroupKind::SLdet: g.push_back(sl_linear(diag_first(F.w(s.param)))); break;
    case GroupKind::SU3: break;
    case GroupKind::ZSU3: g.push_back(scalar(F.omega())); break;
    case GroupKind::GU3: g.push_back(sl_linear(mat_diag({1, F.w(s.q - 1), 1}))); break;
    case GroupKind::GammaU3:
        g.push_back(scalar(F.omega()));
        g.push_back(sl_linear(mat_diag({1, F.w(s.q - 1), 1})));
        g.push_back(phi);
        break;
    case GroupKind::ZSU3phi:
        g.push_back(scalar(F.omega()));
        g.push_back(sl_frobenius(n, j));
        break;
    }
    return g;
}

} // namespace r3pls

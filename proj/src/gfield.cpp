#include "r3pls/gfield.hpp"

#include <map>
#include <mutex>
#include <string>

namespace r3pls {

namespace {

using Poly = std::vector<unsigned>; // ascending coefficients

// Conway polynomials for the fields this library is exercised on.
struct ConwayEntry {
    unsigned p, a;
    Poly f;
};

const std::vector<ConwayEntry>& conway_table()
{
    static const std::vector<ConwayEntry> t = {
        {2, 1, {1, 1}},
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {3, 1, {1, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 2, 1, 0, 2, 0, 1}},
        {5, 1, {3, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {5, 4, {2, 4, 4, 0, 1}},
        {7, 1, {4, 1}},
        {7, 2, {3, 6, 1}},
        {7, 3, {4, 0, 6, 1}},
        {11, 1, {9, 1}},
        {11, 2, {2, 7, 1}},
        {13, 1, {11, 1}},
        {13, 2, {2, 12, 1}},
    };
    return t;
}

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned x, unsigned p)
{
    std::uint64_t r = 1, b = x % p;
    unsigned e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

// f mod g, g nonzero
Poly poly_mod(Poly f, const Poly& g, unsigned p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    const unsigned lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned c = static_cast<unsigned>(std::uint64_t(f.back()) * lead_inv % p);
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = static_cast<unsigned>((f[shift + i] + std::uint64_t(p - c) * g[i]) % p);
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& g, unsigned p)
{
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + std::uint64_t(x[i]) * y[j]) % p);
    return poly_mod(std::move(r), g, p);
}

Poly poly_powmod(Poly b, std::uint64_t e, const Poly& g, unsigned p)
{
    Poly r{1};
    b = poly_mod(b, g, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, g, p);
        b = poly_mulmod(b, b, g, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly t = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

bool x_is_primitive(const Poly& f, unsigned p, std::uint64_t q)
{
    const Poly x{0, 1};
    if (poly_powmod(x, q - 1, f, p) != Poly{1}) return false;
    for (auto l : prime_factors(q - 1))
        if (poly_powmod(x, (q - 1) / l, f, p) == Poly{1}) return false;
    return true;
}

Poly least_primitive(unsigned p, unsigned a, std::uint64_t q)
{
    // monic degree-a polynomials ordered by the integer formed from c_{a-1}..c_0
    for (std::uint64_t code = 0; code < q; ++code) {
        Poly f(a + 1, 0);
        f[a] = 1;
        std::uint64_t c = code;
        for (unsigned i = 0; i < a; ++i) {
            f[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        if (f[0] == 0) continue;
        if (is_irreducible(f, p) && x_is_primitive(f, p, q)) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

} // namespace

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b)
{
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

unsigned mult_order_mod(std::uint64_t p, std::uint64_t r)
{
    if (r < 2 || p % r == 0) return 0;
    std::uint64_t x = p % r;
    unsigned k = 1;
    while (x != 1) {
        x = x * (p % r) % r;
        ++k;
    }
    return k;
}

bool is_irreducible(const std::vector<unsigned>& f_in, unsigned p)
{
    Poly f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    const Poly x{0, 1};
    Poly xp = x;
    for (std::size_t i = 1; i <= d / 2; ++i) {
        xp = poly_powmod(xp, p, f, p);
        Poly t = xp;
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (t.empty()) return false;
        Poly g = poly_gcd(f, t, p);
        if (g.size() > 1) return false;
    }
    return true;
}

bool is_primitive_prime_divisor(std::uint64_t r, std::uint64_t p, unsigned m)
{
    if (!is_prime(r)) return false;
    return mult_order_mod(p, r) == m;
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned a)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime");
    if (a < 1) throw std::invalid_argument("field degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) {
        q *= p;
        if (q > (1u << 20)) throw std::invalid_argument("field order exceeds 2^20");
    }

    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, a});
    if (it != cache.end()) return it->second;

    Poly f;
    bool from_table = false;
    for (const auto& e : conway_table()) {
        if (e.p == p && e.a == a) {
            f = e.f;
            from_table = true;
        }
    }
    if (from_table) {
        if (!is_irreducible(f, p) || !x_is_primitive(f, p, q))
            throw std::logic_error("embedded modulus failed verification");
    } else {
        f = least_primitive(p, a, q);
    }
    std::shared_ptr<const Field> F(new Field(p, a, f, from_table));
    cache.emplace(std::make_pair(p, a), F);
    return F;
}

Field::Field(unsigned p, unsigned a, std::vector<unsigned> modulus, bool from_table)
    : p_(p), a_(a), q_(static_cast<std::uint32_t>(ipow(p, a))), modulus_(std::move(modulus)),
      from_table_(from_table)
{
    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * std::size_t(n) + 1, 0);
    log_.assign(q_, 0);
    neg_.assign(q_, 0);

    // digits of the current power of the root of the modulus
    std::vector<unsigned> cur(a_, 0);
    cur[0] = 1;
    auto encode = [&](const std::vector<unsigned>& c) {
        Elem v = 0;
        for (unsigned i = a_; i-- > 0;) v = v * p_ + c[i];
        return v;
    };
    if (a_ == 1) {
        // prime field: omega is the root of x - g, i.e. g = -c0
        const unsigned g = (p_ - modulus_[0]) % p_;
        std::uint64_t x = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i] = static_cast<Elem>(x);
            x = x * g % p_;
        }
    } else {
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i] = encode(cur);
            // multiply by x modulo the modulus
            const unsigned top = cur[a_ - 1];
            for (unsigned k = a_ - 1; k > 0; --k) cur[k] = cur[k - 1];
            cur[0] = 0;
            for (unsigned k = 0; k < a_; ++k)
                cur[k] = static_cast<unsigned>((cur[k] + std::uint64_t(p_ - modulus_[k] % p_) * top) % p_);
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i > 0 && exp_[i] == 1) throw std::logic_error("generator has small order");
        exp_[i + n] = exp_[i];
        log_[exp_[i]] = i;
    }
    omega_ = exp_[n > 1 ? 1 : 0];

    for (Elem x = 0; x < q_; ++x) {
        Elem v = 0, m = 1, t = x;
        for (unsigned i = 0; i < a_; ++i) {
            const unsigned d = t % p_;
            t /= p_;
            v += ((p_ - d) % p_) * m;
            m *= p_;
        }
        neg_[x] = v;
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.assign(std::size_t(q_) * q_, 0);
        for (Elem x = 0; x < q_; ++x) {
            for (Elem y = 0; y < q_; ++y) {
                Elem v = 0, m = 1, s = x, t = y;
                for (unsigned i = 0; i < a_; ++i) {
                    v += ((s % p_ + t % p_) % p_) * m;
                    s /= p_;
                    t /= p_;
                    m *= p_;
                }
                add_table_[std::size_t(x) * q_ + y] = v;
            }
        }
    }
}

Elem Field::add(Elem x, Elem y) const
{
    if (p_ == 2) return x ^ y;
    if (!add_table_.empty()) return add_table_[std::size_t(x) * q_ + y];
    Elem v = 0, m = 1;
    for (unsigned i = 0; i < a_; ++i) {
        v += ((x % p_ + y % p_) % p_) * m;
        x /= p_;
        y /= p_;
        m *= p_;
    }
    return v;
}

Elem Field::neg(Elem x) const { return neg_[x]; }

Elem Field::inv(Elem x) const
{
    if (x == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t n = q_ - 1;
    return exp_[(n - log_[x]) % n];
}

Elem Field::pow(Elem x, std::int64_t e) const
{
    if (x == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    const std::int64_t n = q_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_[x]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[k];
}

Elem Field::frob(Elem x, int k) const
{
    if (x == 0) return 0;
    k %= static_cast<int>(a_);
    if (k < 0) k += a_;
    return pow(x, static_cast<std::int64_t>(ipow(p_, k)));
}

Elem Field::w(std::int64_t e) const
{
    const std::int64_t n = q_ - 1;
    e %= n;
    if (e < 0) e += n;
    return exp_[e];
}

std::uint32_t Field::log(Elem x) const
{
    if (x == 0) throw std::domain_error("log of zero");
    return log_[x];
}

Elem Field::from_int(std::int64_t v) const
{
    v %= static_cast<std::int64_t>(p_);
    if (v < 0) v += p_;
    return static_cast<Elem>(v);
}

bool Field::has_subfield(std::uint32_t q0) const
{
    if (q0 < p_) return false;
    std::uint64_t t = p_;
    unsigned b = 1;
    while (t < q0) {
        t *= p_;
        ++b;
    }
    return t == q0 && a_ % b == 0;
}

bool Field::in_subfield(Elem x, std::uint32_t q0) const
{
    if (!has_subfield(q0)) throw std::invalid_argument("not a subfield order");
    if (x == 0) return true;
    return log_[x] % ((q_ - 1) / (q0 - 1)) == 0;
}

std::vector<Elem> Field::subfield(std::uint32_t q0) const
{
    if (!has_subfield(q0)) throw std::invalid_argument("not a subfield order");
    std::vector<Elem> out{0};
    const std::uint32_t step = (q_ - 1) / (q0 - 1);
    for (std::uint32_t i = 0; i < q0 - 1; ++i) out.push_back(exp_[i * step]);
    return out;
}

Elem trace_to_subfield(const Field& F, std::uint32_t q, Elem x)
{
    if (std::uint64_t(q) * q != F.q()) throw std::invalid_argument("field is not a quadratic extension of GF(q)");
    return F.add(x, F.pow(x, q));
}

unsigned coset_index(const Field& F, std::uint32_t r, Elem x)
{
    if (x == 0) throw std::domain_error("coset index of zero");
    if (r == 0 || (F.q() - 1) % r != 0) throw std::invalid_argument("r does not divide q-1");
    return F.log(x) % r;
}

} // namespace r3pls

#pragma once

#include "r3pls/gfield.hpp"
#include "r3pls/permcore.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace r3pls {

// n x n matrix over a fixed field, row-major.
struct Mat {
    unsigned n = 0;
    std::vector<Elem> e;

    Mat() = default;
    explicit Mat(unsigned dim) : n(dim), e(std::size_t(dim) * dim, 0) {}
    Elem& operator()(unsigned i, unsigned j) { return e[std::size_t(i) * n + j]; }
    Elem operator()(unsigned i, unsigned j) const { return e[std::size_t(i) * n + j]; }
    bool operator==(const Mat&) const = default;
};

Mat mat_identity(unsigned n);
Mat mat_diag(const std::vector<Elem>& d);
Mat mat_antidiag(const std::vector<Elem>& d);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_frob(const Field& F, const Mat& A, int k);  // entrywise x -> x^{p^k}
Mat mat_inverse(const Field& F, const Mat& A);      // throws if singular
Mat mat_transpose(const Mat& A);
Elem mat_det(const Field& F, const Mat& A);
std::vector<Elem> vec_mat(const Field& F, const std::vector<Elem>& v, const Mat& A);

// g = phi^frob * mat : v -> (v^{phi^frob}) mat, phi the p-power map
struct SemilinearElem {
    int frob = 0;
    Mat mat;
    bool operator==(const SemilinearElem&) const = default;
};

SemilinearElem sl_compose(const Field& F, const SemilinearElem& x, const SemilinearElem& y);
SemilinearElem sl_inverse(const Field& F, const SemilinearElem& x);
SemilinearElem sl_power(const Field& F, const SemilinearElem& x, std::uint64_t e);
std::vector<Elem> sl_apply(const Field& F, const SemilinearElem& g, const std::vector<Elem>& v);
SemilinearElem sl_linear(Mat m);
SemilinearElem sl_frobenius(unsigned n, int k = 1);

// Hermitian form in the basis {e, x, f}: Gram matrix antidiag(1,1,1).
// F must be GF(q^2); conjugation is x -> x^q.
struct UnitaryForm {
    std::uint32_t q;
    Mat gram;
};
UnitaryForm unitary_form(std::uint32_t q);
Elem herm(const Field& F, const UnitaryForm& P, const std::vector<Elem>& u, const std::vector<Elem>& v);
bool is_unitary(const Field& F, const Mat& A, const UnitaryForm& P);
// (ug, vg) = lambda (u,v)^{sigma} for the semilinear g; returns lambda or 0 if g is not a semisimilarity
Elem semisimilarity_factor(const Field& F, const SemilinearElem& g, const UnitaryForm& P);

std::uint64_t order_sl(unsigned n, std::uint64_t q);
std::uint64_t order_su3(std::uint64_t q);

// action on the projective points reached from start
PermGroup projective_image(const Field& F, unsigned n, const std::vector<SemilinearElem>& gens,
                           const std::vector<Elem>& start);

// Generators; each set is checked against the group order on projective points.
std::vector<SemilinearElem> gens_sl(unsigned n, const Field& F);
std::vector<SemilinearElem> gens_su3(const Field& F2); // F2 = GF(q^2)

enum class GroupKind {
    YSL,          // Y.SL_n(q)
    ZSL,          // Z.SL_n(q)
    GL,           // GL_n(q)
    GammaL,       // GammaL_n(q)
    SLphi,        // SL_n(q) : <phi>
    SLdiagphi,    // <SL_n(q), diag(1,..,1,w) phi>
    YSLdiagphi,   // <Y.SL_n(q), phi diag(1,..,1,w)>
    ZSLphi,       // Z.SL_n(q) : <phi^j> (j = param, default 1)
    SLdet,        // <SL_n(q), diag(w^t,1,..,1)>  (t = param)
    GLphi,        // GL_n(q) : <phi^j> (j = param)
    SU3,          // SU_3(q)
    ZSU3,         // Z.SU_3(q)
    GU3,          // GU_3(q)
    GammaU3,      // GammaU_3(q)
    ZSU3phi,      // Z.SU_3(q) : <phi^j> (j = param)
};

struct GroupSpec {
    GroupKind kind;
    bool unitary = false;
    unsigned n = 2;
    std::uint32_t q = 0; // base field order; unitary matrices live over GF(q^2)
    std::uint32_t r = 1;
    unsigned param = 0;
    std::string name() const;
};

// Field the matrices of the spec live in.
FieldPtr spec_field(const GroupSpec& s);
std::vector<SemilinearElem> gens_group(const GroupSpec& s);
// |H : H cap GL|
std::uint64_t frob_index(const GroupSpec& s);
// |H| for the semilinear group H (before quotienting by Y)
std::uint64_t matrix_group_order(const GroupSpec& s);
// |H Y / Y|, the order of the permutation group induced on Omega(n,q,r)
std::uint64_t induced_order(const GroupSpec& s);
// whether H contains the scalars Z = <w I>
bool contains_center(const GroupSpec& s);

} // namespace r3pls

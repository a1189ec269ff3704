#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccg {

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ambient space (F_p)^d. p is checked for primality at construction;
/// composite moduli are rejected.
struct FieldSpec {
    int p = 2;
    int d = 0;

    FieldSpec(int p_, int d_);

    long long order() const;  // p^d

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(int n);

// A vector is a coordinate list with entries in [0, p). Lexicographic order
// on coordinates coincides with base-p vertex-index order (coordinate 1 most
// significant).
using Vec = std::vector<int>;

Vec zero_vector(const FieldSpec& f);
Vec unit_vector(const FieldSpec& f, int axis);  // e_1 is axis 0
Vec add(const FieldSpec& f, const Vec& a, const Vec& b);
Vec sub(const FieldSpec& f, const Vec& a, const Vec& b);
Vec negate(const FieldSpec& f, const Vec& a);
Vec scale(const FieldSpec& f, int s, const Vec& a);
bool is_zero(const Vec& a);

long long vec_index(const FieldSpec& f, const Vec& v);
Vec vec_at(const FieldSpec& f, long long index);

int mod_inverse(int a, int p);

/// Canonical subspace: basis rows in reduced row echelon form with strictly
/// increasing pivot columns. Equal subspaces have identical basis sequences,
/// so operator== decides subspace equality.
struct Subspace {
    FieldSpec field;
    std::vector<Vec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    std::vector<int> pivot_columns() const;

    bool operator==(const Subspace&) const = default;
};

Subspace zero_subspace(const FieldSpec& f);
Subspace full_space(const FieldSpec& f);

Subspace span(const FieldSpec& f, std::span<const Vec> vectors);
Subspace span(const FieldSpec& f, std::initializer_list<Vec> vectors);

bool subspace_contains(const Subspace& s, const Vec& v);

/// True iff V ∩ W = {0} and dim V + dim W = d.
bool is_direct_sum(const Subspace& v, const Subspace& w);

/// Span of the union of the two subspaces.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Span of the standard basis vectors at B's non-pivot columns. Always a
/// direct-sum complement of B; this is the canonical section choice used
/// everywhere in this project.
Subspace standard_complement(const Subspace& b);

/// All p^dim elements, sorted lexicographically.
std::vector<Vec> subspace_elements(const Subspace& s);

/// Every k-dimensional subspace exactly once, in lexicographic order of the
/// RREF basis matrices read row-major. Throws resource_limit_error when p^d
/// exceeds the cap.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int k,
                                          long long cap = 4096);

long long gaussian_binomial(int d, int k, int p);

struct LinearMap {
    FieldSpec field;
    std::vector<Vec> rows;  // d x d, row-major
};

LinearMap identity_map(const FieldSpec& f);
Vec apply(const LinearMap& t, const Vec& v);
bool is_invertible(const LinearMap& t);

/// Image set {T(c) : c in C}. Throws when invertibility is required but T is
/// singular.
std::vector<Vec> apply_map(const LinearMap& t, const std::vector<Vec>& c,
                           bool require_invertible = false);
Subspace apply_map(const LinearMap& t, const Subspace& s);

}  // namespace ccg

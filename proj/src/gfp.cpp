#include "ccg/gfp.hpp"

#include <algorithm>
#include <numeric>

namespace ccg {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

FieldSpec::FieldSpec(int p_, int d_) : p(p_), d(d_) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " is not prime");
    if (d < 0)
        throw std::invalid_argument("dimension must be non-negative");
}

long long FieldSpec::order() const {
    long long n = 1;
    for (int t = 0; t < d; ++t) n *= p;
    return n;
}

static void check_dim(const FieldSpec& f, const Vec& v) {
    if (static_cast<int>(v.size()) != f.d)
        throw std::invalid_argument("vector length " +
                                    std::to_string(v.size()) +
                                    " does not match dimension " +
                                    std::to_string(f.d));
}

Vec zero_vector(const FieldSpec& f) { return Vec(f.d, 0); }

Vec unit_vector(const FieldSpec& f, int axis) {
    if (axis < 0 || axis >= f.d)
        throw std::invalid_argument("basis axis out of range");
    Vec v(f.d, 0);
    v[axis] = 1;
    return v;
}

Vec add(const FieldSpec& f, const Vec& a, const Vec& b) {
    check_dim(f, a);
    check_dim(f, b);
    Vec r(f.d);
    for (int t = 0; t < f.d; ++t) r[t] = (a[t] + b[t]) % f.p;
    return r;
}

Vec sub(const FieldSpec& f, const Vec& a, const Vec& b) {
    check_dim(f, a);
    check_dim(f, b);
    Vec r(f.d);
    for (int t = 0; t < f.d; ++t) r[t] = (a[t] - b[t] + f.p) % f.p;
    return r;
}

Vec negate(const FieldSpec& f, const Vec& a) {
    check_dim(f, a);
    Vec r(f.d);
    for (int t = 0; t < f.d; ++t) r[t] = (f.p - a[t]) % f.p;
    return r;
}

Vec scale(const FieldSpec& f, int s, const Vec& a) {
    check_dim(f, a);
    s = ((s % f.p) + f.p) % f.p;
    Vec r(f.d);
    for (int t = 0; t < f.d; ++t) r[t] = (s * a[t]) % f.p;
    return r;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

long long vec_index(const FieldSpec& f, const Vec& v) {
    check_dim(f, v);
    long long idx = 0;
    for (int t = 0; t < f.d; ++t) idx = idx * f.p + v[t];
    return idx;
}

Vec vec_at(const FieldSpec& f, long long index) {
    Vec v(f.d, 0);
    for (int t = f.d - 1; t >= 0; --t) {
        v[t] = static_cast<int>(index % f.p);
        index /= f.p;
    }
    return v;
}

int mod_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    // Fermat; p is prime and tiny.
    int r = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::vector<int> Subspace::pivot_columns() const {
    std::vector<int> piv;
    for (const Vec& row : basis) {
        for (int c = 0; c < field.d; ++c) {
            if (row[c] != 0) {
                piv.push_back(c);
                break;
            }
        }
    }
    return piv;
}

Subspace zero_subspace(const FieldSpec& f) { return Subspace{f, {}}; }

Subspace full_space(const FieldSpec& f) {
    Subspace s{f, {}};
    for (int t = 0; t < f.d; ++t) s.basis.push_back(unit_vector(f, t));
    return s;
}

// Row-reduce in place to RREF with strictly increasing pivots.
static std::vector<Vec> rref(const FieldSpec& f, std::vector<Vec> rows) {
    const int p = f.p;
    int rank = 0;
    for (int col = 0; col < f.d && rank < static_cast<int>(rows.size());
         ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = mod_inverse(rows[rank][col], p);
        for (int c = col; c < f.d; ++c) rows[rank][c] = rows[rank][c] * inv % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int factor = rows[r][col];
            for (int c = col; c < f.d; ++c)
                rows[r][c] = (rows[r][c] - factor * rows[rank][c] % p + p) % p;
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

Subspace span(const FieldSpec& f, std::span<const Vec> vectors) {
    std::vector<Vec> rows;
    rows.reserve(vectors.size());
    for (const Vec& v : vectors) {
        check_dim(f, v);
        rows.push_back(v);
    }
    return Subspace{f, rref(f, std::move(rows))};
}

Subspace span(const FieldSpec& f, std::initializer_list<Vec> vectors) {
    return span(f, std::span<const Vec>(vectors.begin(), vectors.size()));
}

bool subspace_contains(const Subspace& s, const Vec& v) {
    check_dim(s.field, v);
    const int p = s.field.p;
    Vec w = v;
    for (const Vec& row : s.basis) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        if (w[pc] != 0) {
            int factor = w[pc];  // pivot entry is 1
            for (int c = pc; c < s.field.d; ++c)
                w[c] = (w[c] - factor * row[c] % p + p) % p;
        }
    }
    return is_zero(w);
}

bool is_direct_sum(const Subspace& v, const Subspace& w) {
    if (v.field != w.field)
        throw std::invalid_argument("subspaces live in different spaces");
    if (v.dim() + w.dim() != v.field.d) return false;
    return subspace_sum(v, w).dim() == v.field.d;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.field != b.field)
        throw std::invalid_argument("subspaces live in different spaces");
    std::vector<Vec> rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return Subspace{a.field, rref(a.field, std::move(rows))};
}

Subspace standard_complement(const Subspace& b) {
    std::vector<int> piv = b.pivot_columns();
    Subspace s{b.field, {}};
    for (int c = 0; c < b.field.d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
            s.basis.push_back(unit_vector(b.field, c));
    return s;
}

std::vector<Vec> subspace_elements(const Subspace& s) {
    const FieldSpec& f = s.field;
    std::vector<Vec> out;
    long long count = 1;
    for (int t = 0; t < s.dim(); ++t) count *= f.p;
    out.reserve(count);
    std::vector<int> coeff(s.dim(), 0);
    for (long long n = 0; n < count; ++n) {
        Vec v = zero_vector(f);
        long long rem = n;
        for (int t = s.dim() - 1; t >= 0; --t) {
            int c = static_cast<int>(rem % f.p);
            rem /= f.p;
            if (c != 0) v = add(f, v, scale(f, c, s.basis[t]));
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int k,
                                          long long cap) {
    if (k < 0 || k > f.d)
        throw std::invalid_argument("subspace dimension out of range");
    if (f.order() > cap)
        throw resource_limit_error("enumeration cap " + std::to_string(cap) +
                                   " exceeded: p^d = " +
                                   std::to_string(f.order()));
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(zero_subspace(f));
        return out;
    }

    // Choose pivot columns, then sweep all values of the free entries.
    std::vector<int> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
        std::vector<bool> is_piv(f.d, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<std::pair<int, int>> free_slots;  // (row, col)
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < f.d; ++c)
                if (!is_piv[c]) free_slots.emplace_back(r, c);

        std::vector<int> vals(free_slots.size(), 0);
        while (true) {
            Subspace s{f, std::vector<Vec>(k, Vec(f.d, 0))};
            for (int r = 0; r < k; ++r) s.basis[r][piv[r]] = 1;
            for (size_t t = 0; t < free_slots.size(); ++t)
                s.basis[free_slots[t].first][free_slots[t].second] = vals[t];
            out.push_back(std::move(s));

            int pos = static_cast<int>(vals.size()) - 1;
            while (pos >= 0 && vals[pos] == f.p - 1) vals[pos--] = 0;
            if (pos < 0) break;
            ++vals[pos];
        }

        // Next pivot-column combination.
        int r = k - 1;
        while (r >= 0 && piv[r] == f.d - k + r) --r;
        if (r < 0) break;
        ++piv[r];
        for (int t = r + 1; t < k; ++t) piv[t] = piv[t - 1] + 1;
    }

    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) {
                  return a.basis < b.basis;
              });
    return out;
}

long long gaussian_binomial(int d, int k, int p) {
    if (k < 0 || k > d) return 0;
    auto pw = [&](int e) {
        long long r = 1;
        for (int t = 0; t < e; ++t) r *= p;
        return r;
    };
    // Product of (p^(d-t) - 1) over product of (p^(t+1) - 1); the full
    // quotient is integral. Fine in 64 bits at desk scale (d <= ~8, p <= 7).
    long long num = 1, den = 1;
    for (int t = 0; t < k; ++t) {
        num *= pw(d - t) - 1;
        den *= pw(t + 1) - 1;
    }
    return num / den;
}

LinearMap identity_map(const FieldSpec& f) {
    LinearMap t{f, std::vector<Vec>(f.d, Vec(f.d, 0))};
    for (int r = 0; r < f.d; ++r) t.rows[r][r] = 1;
    return t;
}

Vec apply(const LinearMap& t, const Vec& v) {
    check_dim(t.field, v);
    Vec r(t.field.d, 0);
    for (int i = 0; i < t.field.d; ++i) {
        int acc = 0;
        for (int j = 0; j < t.field.d; ++j)
            acc = (acc + t.rows[i][j] * v[j]) % t.field.p;
        r[i] = acc;
    }
    return r;
}

bool is_invertible(const LinearMap& t) {
    return static_cast<int>(rref(t.field, t.rows).size()) == t.field.d;
}

std::vector<Vec> apply_map(const LinearMap& t, const std::vector<Vec>& c,
                           bool require_invertible) {
    if (require_invertible && !is_invertible(t))
        throw std::invalid_argument("linear map is singular");
    std::vector<Vec> out;
    out.reserve(c.size());
    for (const Vec& v : c) out.push_back(apply(t, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Subspace apply_map(const LinearMap& t, const Subspace& s) {
    std::vector<Vec> imgs;
    imgs.reserve(s.basis.size());
    for (const Vec& v : s.basis) imgs.push_back(apply(t, v));
    return span(t.field, std::span<const Vec>(imgs));
}

}  // namespace ccg

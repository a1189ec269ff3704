#include "ccg/cca.hpp"

#include <algorithm>

namespace ccg {

int kappa(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("kappa requires a prime argument, got " +
                                    std::to_string(p));
    if (p == 2) return 5;
    if (p == 3) return 12;
    return 2;
}

std::string CcaResult::reason() const {
    if (ok) return "ok";
    std::string v;
    for (size_t t = 0; t < offending.size(); ++t)
        v += (t ? "," : "") + std::to_string(offending[t]);
    switch (failed_clause) {
        case 'a':
            return offending.empty()
                       ? "(a) V + W is not a direct sum of the whole space"
                       : "(a) V and W intersect nontrivially at (" + v + ")";
        case 'b':
            return "(b) nonzero vector (" + v + ") of V is outside C";
        case 'c':
            return "(c) vector (" + v + ") of W lies in C";
    }
    return "unknown";
}

CcaResult cca_check(const ConnectionSet& c, const CCAWitness& w) {
    if (w.V.field != c.field || w.W.field != c.field)
        throw std::invalid_argument("witness and connection set disagree on (p, d)");

    if (!is_direct_sum(w.V, w.W)) {
        CcaResult r{false, 'a', {}};
        // Least nonzero common vector, when the failure is a real overlap.
        for (const Vec& x : subspace_elements(w.V)) {
            if (!is_zero(x) && subspace_contains(w.W, x)) {
                r.offending = x;
                break;
            }
        }
        return r;
    }
    for (const Vec& x : subspace_elements(w.V))
        if (!is_zero(x) && !c.contains(x)) return CcaResult{false, 'b', x};
    for (const Vec& x : subspace_elements(w.W))
        if (c.contains(x)) return CcaResult{false, 'c', x};
    return CcaResult{true, 0, {}};
}

// Quick pass for clause (b) without enumerating elements of V twice.
static bool v_inside_c(const ConnectionSet& c, const Subspace& v) {
    long long sz = 1;
    for (int t = 0; t < v.dim(); ++t) sz *= v.field.p;
    if (sz - 1 > c.size()) return false;
    for (const Vec& x : subspace_elements(v))
        if (!is_zero(x) && !c.contains(x)) return false;
    return true;
}

static bool w_avoids_c(const ConnectionSet& c, const Subspace& w) {
    for (const Vec& x : c.elems)
        if (subspace_contains(w, x)) return false;
    return true;
}

static WitnessSearchResult search(const ConnectionSet& c, const FieldSpec& f,
                                  long long cap, bool stop_at_first,
                                  std::vector<CCAWitness>* collect) {
    WitnessSearchResult result;
    for (int vdim = f.d; vdim >= 0; --vdim) {
        std::vector<Subspace> complements;  // filled on first qualifying V
        for (const Subspace& v : enumerate_subspaces(f, vdim, cap)) {
            if (!v_inside_c(c, v)) continue;
            ++result.v_candidates;
            if (complements.empty())
                complements = enumerate_subspaces(f, f.d - vdim, cap);
            for (const Subspace& w : complements) {
                ++result.pairs_checked;
                if (!w_avoids_c(c, w)) continue;
                if (!is_direct_sum(v, w)) continue;
                if (!result.witness) result.witness = CCAWitness{v, w};
                if (collect) collect->push_back(CCAWitness{v, w});
                if (stop_at_first) return result;
            }
        }
    }
    return result;
}

WitnessSearchResult find_witness(const ConnectionSet& c, long long cap) {
    return search(c, c.field, cap, true, nullptr);
}

std::vector<CCAWitness> all_witnesses(const ConnectionSet& c, long long cap) {
    std::vector<CCAWitness> out;
    search(c, c.field, cap, false, &out);
    return out;
}

// Coefficients of x in the RREF basis of b; x must lie in b.
static Vec coords_in(const Subspace& b, const Vec& x) {
    const FieldSpec& f = b.field;
    Vec w = x;
    Vec coeff(b.dim(), 0);
    for (int r = 0; r < b.dim(); ++r) {
        int pc = 0;
        while (b.basis[r][pc] == 0) ++pc;
        coeff[r] = w[pc];
        if (w[pc] != 0) {
            int factor = w[pc];
            for (int col = pc; col < f.d; ++col)
                w[col] = (w[col] - factor * b.basis[r][col] % f.p + f.p) % f.p;
        }
    }
    if (!is_zero(w))
        throw std::invalid_argument("vector lies outside the given subspace");
    return coeff;
}

static Subspace push_forward(const Subspace& inner, const Subspace& b) {
    const FieldSpec& f = b.field;
    std::vector<Vec> rows;
    for (const Vec& coeff : inner.basis) {
        Vec v = zero_vector(f);
        for (int r = 0; r < b.dim(); ++r)
            if (coeff[r] != 0) v = add(f, v, scale(f, coeff[r], b.basis[r]));
        rows.push_back(std::move(v));
    }
    return span(f, std::span<const Vec>(rows));
}

WitnessSearchResult find_witness_within(const ConnectionSet& c,
                                        const Subspace& b, long long cap) {
    FieldSpec inner_field(c.field.p, b.dim());
    std::vector<Vec> pulled;
    for (const Vec& x : c.elems) pulled.push_back(coords_in(b, x));
    std::sort(pulled.begin(), pulled.end());
    ConnectionSet inner_c{inner_field, std::move(pulled)};

    WitnessSearchResult inner = search(inner_c, inner_field, cap, true, nullptr);
    WitnessSearchResult out;
    out.v_candidates = inner.v_candidates;
    out.pairs_checked = inner.pairs_checked;
    if (inner.witness)
        out.witness = CCAWitness{push_forward(inner.witness->V, b),
                                 push_forward(inner.witness->W, b)};
    return out;
}

CCAWitness dual_witness(const ConnectionSet& c, const CCAWitness& w) {
    CcaResult check = cca_check(c, w);
    if (!check.ok)
        throw std::invalid_argument("invalid witness: " + check.reason());
    return CCAWitness{w.W, w.V};
}

CCAWitness lift_witness(const ConnectionSet& c, const CCAWitness& inner) {
    const FieldSpec& f = c.field;
    Subspace b = span(f, std::span<const Vec>(c.elems));
    for (const Vec& row : inner.V.basis)
        if (!subspace_contains(b, row))
            throw std::invalid_argument("inner V is not contained in span(C)");
    for (const Vec& row : inner.W.basis)
        if (!subspace_contains(b, row))
            throw std::invalid_argument("inner W is not contained in span(C)");
    if (inner.V.dim() + inner.W.dim() != b.dim() ||
        subspace_sum(inner.V, inner.W) != b)
        throw std::invalid_argument(
            "inner witness does not decompose span(C) as a direct sum");
    if (!v_inside_c(c, inner.V))
        throw std::invalid_argument("inner V has a nonzero vector outside C");
    if (!w_avoids_c(c, inner.W))
        throw std::invalid_argument("inner W meets C");
    return CCAWitness{inner.V, subspace_sum(inner.W, standard_complement(b))};
}

Vec project(const Vec& x, const CCAWitness& w) {
    const FieldSpec& f = w.V.field;
    if (!is_direct_sum(w.V, w.W))
        throw std::invalid_argument("projection requires V + W = whole space");
    const int d = f.d;
    const int p = f.p;
    // Solve M a = x where the columns of M are the V basis then the W basis.
    std::vector<Vec> m(d, Vec(d + 1, 0));
    for (int r = 0; r < w.V.dim(); ++r)
        for (int row = 0; row < d; ++row) m[row][r] = w.V.basis[r][row];
    for (int r = 0; r < w.W.dim(); ++r)
        for (int row = 0; row < d; ++row)
            m[row][w.V.dim() + r] = w.W.basis[r][row];
    for (int row = 0; row < d; ++row) m[row][d] = x[row];

    for (int col = 0, rank = 0; col < d && rank < d; ++col) {
        int pivot = -1;
        for (int r = rank; r < d; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        int inv = mod_inverse(m[rank][col], p);
        for (int cc = col; cc <= d; ++cc) m[rank][cc] = m[rank][cc] * inv % p;
        for (int r = 0; r < d; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            int factor = m[r][col];
            for (int cc = col; cc <= d; ++cc)
                m[r][cc] = (m[r][cc] - factor * m[rank][cc] % p + p) % p;
        }
        ++rank;
    }

    Vec g = zero_vector(f);
    for (int r = 0; r < w.V.dim(); ++r) {
        int coeff = m[r][d];  // column r is pivotal since M is invertible
        if (coeff != 0) g = add(f, g, scale(f, coeff, w.V.basis[r]));
    }
    return g;
}

}  // namespace ccg

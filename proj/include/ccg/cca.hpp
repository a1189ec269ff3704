#pragma once

#include "ccg/cayley.hpp"
#include "ccg/gfp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccg {

/// Sharp degree threshold: 5 for p = 2, 12 for p = 3, 2 for p >= 5.
int kappa(int p);

/// Claimed decomposition (V, W). The axiom holds for a connection set C when
/// V + W is a direct sum of the whole space, every nonzero element of V lies
/// in C, and W avoids C entirely.
struct CCAWitness {
    Subspace V;
    Subspace W;
};

struct CcaResult {
    bool ok = false;
    char failed_clause = 0;  // 'a' direct sum, 'b' V not inside C, 'c' W meets C
    Vec offending;           // lexicographically least offending vector

    std::string reason() const;
};

CcaResult cca_check(const ConnectionSet& c, const CCAWitness& w);

struct WitnessSearchResult {
    std::optional<CCAWitness> witness;
    // Coverage counts; a "none" answer is exhaustive over these candidates.
    long long v_candidates = 0;
    long long pairs_checked = 0;
};

/// Exhaustive, deterministic witness search. Among all valid witnesses the
/// result has V of maximum dimension, ties broken by lexicographic order of
/// (V basis, W basis).
WitnessSearchResult find_witness(const ConnectionSet& c, long long cap = 4096);

/// Same search restricted to subspaces of B; requires C ⊆ B. Used to build
/// inner witnesses for section lifting.
WitnessSearchResult find_witness_within(const ConnectionSet& c,
                                        const Subspace& b,
                                        long long cap = 4096);

/// Every valid witness pair, in search order.
std::vector<CCAWitness> all_witnesses(const ConnectionSet& c,
                                      long long cap = 4096);

/// Swap the summands: a witness for C becomes a witness for the complement.
CCAWitness dual_witness(const ConnectionSet& c, const CCAWitness& w);

/// Extend a witness valid inside span(C) to the ambient space by summing W
/// with the standard complement of span(C).
CCAWitness lift_witness(const ConnectionSet& c, const CCAWitness& inner);

/// The unique g in V with x = g + h, h in W.
Vec project(const Vec& x, const CCAWitness& w);

}  // namespace ccg

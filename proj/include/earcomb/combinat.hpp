#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace earcomb {

/// Permutation of {1..d} in one-line notation: word[i] = sigma(i+1).
using Perm = std::vector<int>;

/// A subset of the ranks {1..d-1} inside an ambient [d].
struct RankSet {
    int d = 1;
    std::vector<int> members;  // sorted, unique, each in [1, d-1]

    RankSet() = default;
    RankSet(int d_, std::vector<int> members_);

    bool contains(int i) const;
    RankSet complement() const;  // [d-1] \ members
    bool operator==(const RankSet& o) const { return d == o.d && members == o.members; }
    bool operator<(const RankSet& o) const {
        if (d != o.d) return d < o.d;
        return members < o.members;
    }
};

std::vector<Perm> all_perms(int d);

RankSet descent_set(const Perm& p);

/// D_S^d: all permutations of {1..d} with descent set exactly S, in lex order.
std::vector<Perm> descent_class(const RankSet& S);

/// Weak order via inversion-set containment (equivalent to switch
/// reachability; the BFS below is the definitional ground truth and the
/// equivalence is checked exhaustively for d <= 5 in the test suite).
bool weak_leq(const Perm& p, const Perm& q);

/// Weak order by BFS over single switches (interchange adjacent ascending
/// entries). Exponential; intended for small d and as an oracle.
bool weak_leq_switches(const Perm& p, const Perm& q);

struct DominanceResult {
    bool dominates = false;
    // witness injection D_T^d -> D_S^d, sigma strictly below phi(sigma)
    std::vector<std::pair<Perm, Perm>> witness;
};

/// Does S dominate T (strict injection of descent classes, Def-style)?
/// Deterministic: vertices are iterated in lex order of one-line notation.
DominanceResult dominates(const RankSet& T, const RankSet& S);

/// Reflexive variant: true when S == T or dominates(T, S).
bool dominates_or_equal(const RankSet& T, const RankSet& S);

/// w(S) = { i : exactly one of i, i+1 lies in S }.
RankSet w_set(const RankSet& S);

/// Macaulay pseudopower m^{<i>}.
long long macaulay_pseudopower(long long m, int i);

/// Is v the degree sequence of an order ideal of monomials (an M-vector /
/// O-sequence)? Empty vector counts as true; otherwise v[0] must be 1.
bool is_m_vector(const std::vector<long long>& v);

}  // namespace earcomb

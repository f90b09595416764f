#include "earcomb/combinat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace earcomb {

RankSet::RankSet(int d_, std::vector<int> members_) : d(d_), members(std::move(members_)) {
    if (d < 1) throw std::invalid_argument("RankSet: d must be positive");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int i : members)
        if (i < 1 || i > d - 1) throw std::invalid_argument("RankSet: member outside [1, d-1]");
}

bool RankSet::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

RankSet RankSet::complement() const {
    std::vector<int> out;
    for (int i = 1; i <= d - 1; ++i)
        if (!contains(i)) out.push_back(i);
    return RankSet(d, std::move(out));
}

std::vector<Perm> all_perms(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

RankSet descent_set(const Perm& p) {
    std::vector<int> des;
    for (int i = 0; i + 1 < (int)p.size(); ++i)
        if (p[i] > p[i + 1]) des.push_back(i + 1);
    return RankSet((int)p.size(), std::move(des));
}

std::vector<Perm> descent_class(const RankSet& S) {
    std::vector<Perm> out;
    for (const Perm& p : all_perms(S.d))
        if (descent_set(p) == S) out.push_back(p);
    return out;  // next_permutation enumerates in lex order already
}

namespace {

// Inversion set as a sorted list of value pairs (a, b), a < b, with b
// written before a.
std::vector<std::pair<int, int>> inversions(const Perm& p) {
    std::vector<std::pair<int, int>> inv;
    for (int i = 0; i < (int)p.size(); ++i)
        for (int j = i + 1; j < (int)p.size(); ++j)
            if (p[i] > p[j]) inv.emplace_back(p[j], p[i]);
    std::sort(inv.begin(), inv.end());
    return inv;
}

}  // namespace

bool weak_leq(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("weak_leq: size mismatch");
    auto ip = inversions(p), iq = inversions(q);
    return std::includes(iq.begin(), iq.end(), ip.begin(), ip.end());
}

bool weak_leq_switches(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("weak_leq: size mismatch");
    if (p == q) return true;
    std::set<Perm> seen{p};
    std::queue<Perm> todo;
    todo.push(p);
    while (!todo.empty()) {
        Perm cur = todo.front();
        todo.pop();
        for (int i = 0; i + 1 < (int)cur.size(); ++i) {
            if (cur[i] < cur[i + 1]) {
                Perm nxt = cur;
                std::swap(nxt[i], nxt[i + 1]);
                if (nxt == q) return true;
                if (seen.insert(nxt).second) todo.push(nxt);
            }
        }
    }
    return false;
}

namespace {

// Kuhn augmenting-path matching, deterministic by construction order.
bool try_augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_left,
                 std::vector<int>& match_right, std::vector<char>& used) {
    for (int v : adj[u]) {
        if (used[v]) continue;
        used[v] = 1;
        if (match_right[v] < 0 ||
            try_augment(match_right[v], adj, match_left, match_right, used)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

DominanceResult dominates(const RankSet& T, const RankSet& S) {
    if (T.d != S.d) throw std::invalid_argument("dominates: mismatched d");
    DominanceResult res;
    std::vector<Perm> dt = descent_class(T), ds = descent_class(S);
    std::vector<std::vector<int>> adj(dt.size());
    for (int u = 0; u < (int)dt.size(); ++u)
        for (int v = 0; v < (int)ds.size(); ++v)
            if (dt[u] != ds[v] && weak_leq(dt[u], ds[v])) adj[u].push_back(v);
    std::vector<int> match_left(dt.size(), -1), match_right(ds.size(), -1);
    int matched = 0;
    for (int u = 0; u < (int)dt.size(); ++u) {
        std::vector<char> used(ds.size(), 0);
        if (try_augment(u, adj, match_left, match_right, used)) ++matched;
    }
    if (matched == (int)dt.size()) {
        res.dominates = true;
        for (int u = 0; u < (int)dt.size(); ++u)
            res.witness.emplace_back(dt[u], ds[match_left[u]]);
    }
    return res;
}

bool dominates_or_equal(const RankSet& T, const RankSet& S) {
    return T == S || dominates(T, S).dominates;
}

RankSet w_set(const RankSet& S) {
    std::vector<int> out;
    for (int i = 1; i <= S.d - 1; ++i) {
        int hits = (S.contains(i) ? 1 : 0) + (S.contains(i + 1) ? 1 : 0);
        if (hits == 1) out.push_back(i);
    }
    return RankSet(S.d, std::move(out));
}

long long macaulay_pseudopower(long long m, int i) {
    if (m == 0) return 0;
    if (i < 1) throw std::invalid_argument("macaulay_pseudopower: i must be >= 1");
    // Binomial expansion of m with respect to i: m = C(a_i,i) + ... + C(a_j,j).
    std::vector<std::pair<long long, int>> rep;  // (a_k, k)
    long long rem = m;
    int k = i;
    while (rem > 0 && k >= 1) {
        // largest a with C(a, k) <= rem
        long long a = k - 1, binom = 0;
        auto choose = [](long long n, int r) {
            if (n < r) return 0LL;
            long long c = 1;
            for (int t = 1; t <= r; ++t) c = c * (n - r + t) / t;
            return c;
        };
        while (choose(a + 1, k) <= rem) ++a;
        binom = choose(a, k);
        rep.emplace_back(a, k);
        rem -= binom;
        --k;
    }
    long long out = 0;
    for (auto [a, kk] : rep) {
        long long c = 1;
        for (int t = 1; t <= kk + 1; ++t) c = c * (a + 1 - (kk + 1) + t) / t;
        out += c;
    }
    return out;
}

bool is_m_vector(const std::vector<long long>& v) {
    if (v.empty()) return true;
    if (v[0] != 1) return false;
    for (long long x : v)
        if (x < 0) return false;
    for (int i = 1; i + 1 < (int)v.size(); ++i)
        if (v[i + 1] > macaulay_pseudopower(v[i], i)) return false;
    return true;
}

}  // namespace earcomb

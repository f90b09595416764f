#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "earcomb/combinat.hpp"

using namespace earcomb;

namespace {

// independent oracle: is v the degree sequence of an order ideal of monomials?
// Enumerates downward-closed sets of exponent vectors in v[1] variables.
bool order_ideal_oracle(const std::vector<long long>& v) {
    if (v.empty()) return true;
    if (v[0] != 1) return false;
    if (v.size() == 1) return true;
    long long n = v[1];
    if (n < 0) return false;
    if (n == 0) return std::all_of(v.begin() + 1, v.end(), [](long long x) { return x == 0; });
    int maxdeg = (int)v.size() - 1;

    // all monomials of degree <= maxdeg in n variables, as exponent vectors
    std::vector<std::vector<int>> monos;
    std::vector<int> cur((size_t)n, 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == (int)n) {
            monos.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, maxdeg);

    auto deg = [](const std::vector<int>& m) {
        int s = 0;
        for (int e : m) s += e;
        return s;
    };
    auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };

    // grow ideals degree by degree, counting choices that match v
    std::vector<std::vector<std::vector<int>>> by_deg(maxdeg + 1);
    for (const auto& m : monos) by_deg[deg(m)].push_back(m);
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] > (long long)by_deg[i].size()) return false;

    std::vector<std::vector<int>> chosen;  // monomials picked so far
    auto closed_under_division = [&](const std::vector<int>& m, int d) {
        // every divisor of m of degree d-1 must be chosen
        for (const auto& c : by_deg[d - 1]) {
            if (divides(c, m)) {
                bool found = false;
                for (const auto& x : chosen)
                    if (x == c) found = true;
                if (!found && d - 1 > 0) return false;
            }
        }
        return true;
    };
    auto search = [&](auto&& self, int d) -> bool {
        if (d >= (int)v.size()) return true;
        long long want = v[d];
        // choose `want` monomials of degree d whose divisors are all present
        std::vector<int> idx;
        std::vector<std::vector<int>> ok;
        for (const auto& m : by_deg[d])
            if (closed_under_division(m, d)) ok.push_back(m);
        if ((long long)ok.size() < want) return false;
        std::vector<size_t> pick((size_t)want);
        auto comb = [&](auto&& cself, size_t pos, size_t start) -> bool {
            if (pos == (size_t)want) {
                size_t base = chosen.size();
                for (size_t k = 0; k < (size_t)want; ++k) chosen.push_back(ok[pick[k]]);
                bool good = self(self, d + 1);
                chosen.resize(base);
                return good;
            }
            for (size_t k = start; k < ok.size(); ++k) {
                pick[pos] = k;
                if (cself(cself, pos + 1, k + 1)) return true;
            }
            return false;
        };
        return comb(comb, 0, 0);
    };
    return search(search, 1);
}

}  // namespace

TEST_CASE("descent sets") {
    CHECK(descent_set({1, 2, 3, 4}).members.empty());
    CHECK(descent_set({2, 1, 3, 4}).members == std::vector<int>{1});
    int count = 0;
    for (const Perm& p : all_perms(4))
        if (descent_set(p).members == std::vector<int>{1, 3}) ++count;
    CHECK(count == 5);
}

TEST_CASE("descent classes") {
    CHECK(descent_class(RankSet(3, {1, 2})) == std::vector<Perm>{{3, 2, 1}});
    CHECK(descent_class(RankSet(3, {})) == std::vector<Perm>{{1, 2, 3}});
    CHECK(descent_class(RankSet(4, {1})) ==
          std::vector<Perm>{{2, 1, 3, 4}, {3, 1, 2, 4}, {4, 1, 2, 3}});
}

TEST_CASE("descent classes partition the symmetric group") {
    for (int d = 1; d <= 6; ++d) {
        long long total = 0;
        for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
            std::vector<int> mem;
            for (int i = 1; i < d; ++i)
                if (mask & (1u << (i - 1))) mem.push_back(i);
            total += (long long)descent_class(RankSet(d, mem)).size();
        }
        long long fact = 1;
        for (int i = 2; i <= d; ++i) fact *= i;
        CHECK(total == fact);
    }
}

TEST_CASE("weak order point values") {
    CHECK(weak_leq({1, 2, 3, 4}, {2, 1, 3, 4}));
    CHECK_FALSE(weak_leq({2, 1, 3, 4}, {1, 2, 3, 4}));
    CHECK_FALSE(weak_leq({3, 1, 2}, {2, 3, 1}));
}

TEST_CASE("weak order fast path equals switch BFS, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        auto perms = all_perms(d);
        for (const Perm& p : perms)
            for (const Perm& q : perms) CHECK(weak_leq(p, q) == weak_leq_switches(p, q));
    }
}

TEST_CASE("weak order is a partial order with minimum the identity") {
    for (int d = 2; d <= 4; ++d) {
        auto perms = all_perms(d);
        Perm id = perms[0];
        for (const Perm& p : perms) {
            CHECK(weak_leq(p, p));
            CHECK(weak_leq(id, p));
            for (const Perm& q : perms) {
                if (p != q) CHECK_FALSE((weak_leq(p, q) && weak_leq(q, p)));
                for (const Perm& r : perms)
                    if (weak_leq(p, q) && weak_leq(q, r)) CHECK(weak_leq(p, r));
            }
        }
    }
}

TEST_CASE("dominance point values") {
    CHECK(dominates(RankSet(4, {1}), RankSet(4, {1, 3})).dominates);
    CHECK(dominates(RankSet(5, {1}), RankSet(5, {1, 2})).dominates);
    CHECK_FALSE(dominates(RankSet(3, {1}), RankSet(3, {2})).dominates);
    CHECK_FALSE(dominates(RankSet(3, {2}), RankSet(3, {1})).dominates);
    CHECK_FALSE(dominates(RankSet(4, {1}), RankSet(4, {1})).dominates);
    CHECK(dominates_or_equal(RankSet(4, {1}), RankSet(4, {1})));
}

TEST_CASE("dominance witnesses are strict injections") {
    for (int d = 2; d <= 5; ++d) {
        std::vector<std::vector<int>> subsets;
        for (unsigned mask = 1; mask < (1u << (d - 1)); ++mask) {
            std::vector<int> mem;
            for (int i = 1; i < d; ++i)
                if (mask & (1u << (i - 1))) mem.push_back(i);
            subsets.push_back(mem);
        }
        for (const auto& T : subsets)
            for (const auto& S : subsets) {
                DominanceResult r = dominates(RankSet(d, T), RankSet(d, S));
                if (!r.dominates) continue;
                CHECK(descent_class(RankSet(d, T)).size() <= descent_class(RankSet(d, S)).size());
                std::set<Perm> images;
                for (const auto& [sigma, tau] : r.witness) {
                    CHECK(sigma != tau);
                    CHECK(weak_leq(sigma, tau));
                    CHECK(descent_set(sigma).members == T);
                    CHECK(descent_set(tau).members == S);
                    CHECK(images.insert(tau).second);
                }
                CHECK(r.witness.size() == descent_class(RankSet(d, T)).size());
            }
    }
}

TEST_CASE("w_set") {
    CHECK(w_set(RankSet(4, {2, 3})).members == std::vector<int>{1, 3});
    CHECK(w_set(RankSet(4, {1, 2})).members == std::vector<int>{2});
    CHECK(w_set(RankSet(4, {1})).members == std::vector<int>{1});
    CHECK(w_set(RankSet(4, {})).members.empty());
}

TEST_CASE("macaulay pseudopowers") {
    CHECK(macaulay_pseudopower(3, 1) == 6);   // 3 = C(3,1) -> C(4,2)
    CHECK(macaulay_pseudopower(4, 2) == 5);   // 4 = C(3,2)+C(1,1) -> C(4,3)+C(1,1)
    CHECK(macaulay_pseudopower(0, 3) == 0);
}

TEST_CASE("m-vector point values") {
    CHECK(is_m_vector({}));
    CHECK(is_m_vector({1}));
    CHECK_FALSE(is_m_vector({1, 0, 1}));
    CHECK(is_m_vector({1, 2, 3}));
    CHECK_FALSE(is_m_vector({2, 1}));
}

TEST_CASE("m-vector test agrees with the order-ideal oracle") {
    // all vectors with entries <= 4 and length <= 4
    for (int len = 0; len <= 4; ++len) {
        std::vector<long long> v((size_t)len, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == len) {
                CHECK(is_m_vector(v) == order_ideal_oracle(v));
                return;
            }
            for (long long x = 0; x <= 4; ++x) {
                v[(size_t)pos] = x;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
}

#include "earcomb/poset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "earcomb/errors.hpp"

namespace earcomb {

RankedPoset RankedPoset::from_covers(const std::map<int, int>& rank_of,
                                     const std::vector<std::pair<int, int>>& covers) {
    RankedPoset P;
    for (auto& [id, r] : rank_of) {
        P.idx_[id] = (int)P.ids_.size();
        P.ids_.push_back(id);
        P.rank_.push_back(r);
    }
    size_t n = P.ids_.size();
    P.up_.resize(n);
    P.down_.resize(n);
    for (auto& [a, b] : covers) {
        if (!P.idx_.count(a) || !P.idx_.count(b))
            throw std::invalid_argument("cover references unknown element");
        int ia = P.idx_[a], ib = P.idx_[b];
        if (P.rank_[ib] != P.rank_[ia] + 1)
            throw std::invalid_argument("cover must raise rank by exactly 1");
        P.up_[ia].push_back(ib);
        P.down_[ib].push_back(ia);
    }
    for (auto& v : P.up_) std::sort(v.begin(), v.end());
    for (auto& v : P.down_) std::sort(v.begin(), v.end());

    int rmin = 0, rmax = 0;
    if (n) {
        rmin = *std::min_element(P.rank_.begin(), P.rank_.end());
        rmax = *std::max_element(P.rank_.begin(), P.rank_.end());
    }
    P.top_rank_ = rmax;
    // gradedness: minimal elements sit at rmin, maximal at rmax
    for (size_t i = 0; i < n; ++i) {
        if (P.down_[i].empty() && P.rank_[i] != rmin)
            throw std::invalid_argument("not graded: minimal element above minimum rank");
        if (P.up_[i].empty() && P.rank_[i] != rmax)
            throw std::invalid_argument("not graded: maximal element below maximum rank");
    }
    // transitive closure, by decreasing rank
    P.leq_.assign(n, std::vector<char>(n, 0));
    std::vector<int> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return P.rank_[a] > P.rank_[b]; });
    for (int i : order) {
        P.leq_[i][i] = 1;
        for (int u : P.up_[i])
            for (size_t j = 0; j < n; ++j)
                if (P.leq_[u][j]) P.leq_[i][j] = 1;
    }
    // bounds
    std::vector<int> mins, maxs;
    for (size_t i = 0; i < n; ++i) {
        if (P.down_[i].empty()) mins.push_back((int)i);
        if (P.up_[i].empty()) maxs.push_back((int)i);
    }
    if (mins.size() == 1) P.bottom_ = P.ids_[mins[0]];
    if (maxs.size() == 1) P.top_ = P.ids_[maxs[0]];
    return P;
}

std::vector<int> RankedPoset::covers_above(int id) const {
    std::vector<int> out;
    for (int j : up_[idx_.at(id)]) out.push_back(ids_[j]);
    return out;
}

std::vector<int> RankedPoset::covers_below(int id) const {
    std::vector<int> out;
    for (int j : down_[idx_.at(id)]) out.push_back(ids_[j]);
    return out;
}

bool RankedPoset::leq(int a, int b) const { return leq_[idx_.at(a)][idx_.at(b)]; }

std::vector<Chain> RankedPoset::maximal_chains() const {
    std::vector<Chain> out;
    Chain cur;
    std::function<void(int)> dfs = [&](int id) {
        cur.push_back(id);
        auto ups = covers_above(id);
        if (ups.empty())
            out.push_back(cur);
        else
            for (int u : ups) dfs(u);
        cur.pop_back();
    };
    for (int id : ids_)
        if (covers_below(id).empty()) dfs(id);
    return out;
}

std::vector<Chain> RankedPoset::saturated_chains(int x, int y) const {
    std::vector<Chain> out;
    Chain cur;
    std::function<void(int)> dfs = [&](int id) {
        cur.push_back(id);
        if (id == y)
            out.push_back(cur);
        else
            for (int u : covers_above(id))
                if (leq(u, y)) dfs(u);
        cur.pop_back();
    };
    if (leq(x, y)) dfs(x);
    return out;
}

long long FlagVector::get(const std::vector<int>& S) const {
    auto it = at.find(S);
    return it == at.end() ? 0 : it->second;
}

std::vector<std::vector<int>> subsets_of_interval(int d) {
    std::vector<std::vector<int>> out;
    int m = d - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::vector<int>> subsets_of(const std::vector<int>& S) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << S.size()); ++mask) {
        std::vector<int> t;
        for (size_t i = 0; i < S.size(); ++i)
            if (mask & (1u << i)) t.push_back(S[i]);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

FlagVector flag_f_to_h(const FlagVector& f) {
    FlagVector h;
    h.d = f.d;
    for (const auto& S : subsets_of_interval(f.d)) {
        long long acc = 0;
        for (const auto& T : subsets_of(S))
            acc += ((S.size() - T.size()) % 2 == 0 ? 1 : -1) * f.get(T);
        h.at[S] = acc;
    }
    return h;
}

FlagVector flag_h_to_f(const FlagVector& h) {
    FlagVector f;
    f.d = h.d;
    for (const auto& S : subsets_of_interval(h.d)) {
        long long acc = 0;
        for (const auto& T : subsets_of(S)) acc += h.get(T);
        f.at[S] = acc;
    }
    return f;
}

std::vector<long long> refinement(const FlagVector& v) {
    std::vector<long long> out(v.d, 0);
    for (const auto& [S, val] : v.at) out[S.size()] += val;
    return out;
}

LabeledPoset boolean_lattice(int d) {
    if (d < 1) throw std::invalid_argument("boolean_lattice: d must be >= 1");
    LabeledPoset out;
    std::map<int, int> rank_of;
    std::vector<std::pair<int, int>> covers;
    for (int mask = 0; mask < (1 << d); ++mask) {
        rank_of[mask] = __builtin_popcount((unsigned)mask);
        for (int i = 0; i < d; ++i) {
            if (!(mask & (1 << i))) {
                covers.emplace_back(mask, mask | (1 << i));
                out.labeling[{mask, mask | (1 << i)}] = i + 1;
            }
        }
    }
    out.poset = RankedPoset::from_covers(rank_of, covers);
    return out;
}

RankedPoset rank_select(const RankedPoset& P, const RankSet& S) {
    if (!P.is_bounded()) throw std::invalid_argument("rank_select: poset must be bounded");
    if (S.members.empty()) throw EmptyRankSetError("rank_select: S must be nonempty");
    if (S.d != P.top_rank())
        throw std::invalid_argument("rank_select: S ambient d must equal poset rank");
    std::vector<int> keep_ranks = {0};
    keep_ranks.insert(keep_ranks.end(), S.members.begin(), S.members.end());
    keep_ranks.push_back(P.top_rank());
    std::map<int, int> new_rank_of_old;
    for (size_t i = 0; i < keep_ranks.size(); ++i) new_rank_of_old[keep_ranks[i]] = (int)i;

    std::map<int, int> rank_of;
    std::vector<int> kept;
    for (int id : P.elements()) {
        auto it = new_rank_of_old.find(P.rank_of(id));
        if (it != new_rank_of_old.end()) {
            rank_of[id] = it->second;
            kept.push_back(id);
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (int a : kept)
        for (int b : kept)
            if (rank_of[b] == rank_of[a] + 1 && P.leq(a, b)) covers.emplace_back(a, b);
    return RankedPoset::from_covers(rank_of, covers);
}

SimplicialComplex order_complex(const RankedPoset& P) {
    std::vector<Face> facets;
    for (Chain c : P.maximal_chains()) {
        Face f;
        for (int id : c) {
            if (P.bottom() && id == *P.bottom()) continue;
            if (P.top() && id == *P.top()) continue;
            f.push_back(id);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<int> chain_label(const Chain& c, const EdgeLabeling& lab) {
    std::vector<int> word;
    for (size_t i = 0; i + 1 < c.size(); ++i) word.push_back(lab.at({c[i], c[i + 1]}));
    return word;
}

namespace {

bool strictly_increasing(const std::vector<int>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] >= w[i + 1]) return false;
    return true;
}

}  // namespace

bool verify_el_labeling(const RankedPoset& P, const EdgeLabeling& lab) {
    if (!P.is_bounded()) return false;
    for (int x : P.elements()) {
        for (int y : P.elements()) {
            if (x == y || !P.leq(x, y)) continue;
            auto chains = P.saturated_chains(x, y);
            std::vector<int> inc_label;
            int inc_count = 0;
            for (const Chain& c : chains) {
                auto w = chain_label(c, lab);
                if (strictly_increasing(w)) {
                    ++inc_count;
                    inc_label = w;
                }
            }
            if (inc_count != 1) return false;
            for (const Chain& c : chains) {
                auto w = chain_label(c, lab);
                if (w != inc_label && !(inc_label < w)) return false;
                if (w == inc_label && !strictly_increasing(w)) return false;
            }
        }
    }
    return true;
}

bool is_sd_el(const RankedPoset& P, const EdgeLabeling& lab) {
    if (!verify_el_labeling(P, lab)) return false;
    std::set<int> alphabet;
    for (const auto& [e, l] : lab) alphabet.insert(l);
    int d = P.top_rank();
    if ((int)alphabet.size() != d) return false;
    for (const Chain& c : P.maximal_chains()) {
        auto w = chain_label(c, lab);
        std::set<int> used(w.begin(), w.end());
        if ((int)w.size() != d || used != alphabet) return false;
    }
    return true;
}

Chain upsilon(const RankedPoset& P, const EdgeLabeling& lab, const Chain& e) {
    if (!P.is_bounded()) throw std::invalid_argument("upsilon: poset must be bounded");
    Chain base = e;
    if (base.empty() || base.front() != *P.bottom()) base.insert(base.begin(), *P.bottom());
    if (base.back() != *P.top()) base.push_back(*P.top());
    Chain out;
    for (size_t i = 0; i + 1 < base.size(); ++i) {
        int x = base[i], y = base[i + 1];
        if (!P.leq(x, y)) throw std::invalid_argument("upsilon: input is not a chain");
        out.push_back(x);
        if (P.rank_of(y) == P.rank_of(x) + 1) continue;
        auto chains = P.saturated_chains(x, y);
        const Chain* inc = nullptr;
        int count = 0;
        for (const Chain& c : chains) {
            if (strictly_increasing(chain_label(c, lab))) {
                ++count;
                inc = &c;
            }
        }
        if (count != 1)
            throw NotELLabelingError("upsilon: interval lacks a unique increasing chain");
        for (size_t k = 1; k + 1 < inc->size(); ++k) out.push_back((*inc)[k]);
    }
    out.push_back(base.back());
    return out;
}

FlagVector flag_f(const RankedPoset& P) {
    if (!P.is_bounded()) throw std::invalid_argument("flag_f: poset must be bounded");
    int d = P.top_rank();
    FlagVector f;
    f.d = d;
    auto chains = P.maximal_chains();
    for (const auto& S : subsets_of_interval(d)) {
        std::set<Chain> restricted;
        for (const Chain& c : chains) {
            Chain r;
            for (int id : c) {
                int rk = P.rank_of(id);
                if (rk == 0 || rk == d ||
                    std::binary_search(S.begin(), S.end(), rk))
                    r.push_back(id);
            }
            restricted.insert(std::move(r));
        }
        f.at[S] = (long long)restricted.size();
    }
    return f;
}

FlagVector flag_h(const RankedPoset& P) { return flag_f_to_h(flag_f(P)); }

FlagVector flag_h_by_descents(const RankedPoset& P, const EdgeLabeling& lab) {
    if (!verify_el_labeling(P, lab))
        throw NotELLabelingError("flag_h_by_descents: labeling is not EL");
    int d = P.top_rank();
    FlagVector h;
    h.d = d;
    for (const auto& S : subsets_of_interval(d)) h.at[S] = 0;
    for (const Chain& c : P.maximal_chains()) {
        auto w = chain_label(c, lab);
        std::vector<int> des;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) des.push_back((int)i + 1);
        h.at[des] += 1;
    }
    return h;
}

FlagVector flag_f_of_complex(const SimplicialComplex& K, const std::map<int, int>& color,
                             int d) {
    FlagVector f;
    f.d = d;
    for (const auto& S : subsets_of_interval(d)) f.at[S] = 0;
    if (K.is_empty_complex()) return f;
    for (const Face& face : K.faces()) {
        std::set<int> cols;
        for (int v : face) {
            if (!cols.insert(color.at(v)).second)
                throw ImproperColoringError("flag_f_of_complex: repeated color in a face");
        }
        f.at[std::vector<int>(cols.begin(), cols.end())] += 1;
    }
    return f;
}

FlagVector flag_h_of_complex(const SimplicialComplex& K, const std::map<int, int>& color,
                             int d) {
    return flag_f_to_h(flag_f_of_complex(K, color, d));
}

}  // namespace earcomb

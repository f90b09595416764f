#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "earcomb/combinat.hpp"
#include "earcomb/complex.hpp"

namespace earcomb {

/// A chain, bottom-up: element ids in strictly increasing rank order.
using Chain = std::vector<int>;

/// Cover-relation labeling, (lower, upper) -> integer label.
using EdgeLabeling = std::map<std::pair<int, int>, int>;

/// Finite graded poset with integer element ids. Covers must raise rank by
/// exactly one; gradedness (all maximal chains run from the minimum rank to
/// the maximum rank) is validated at construction.
class RankedPoset {
  public:
    RankedPoset() = default;

    static RankedPoset from_covers(const std::map<int, int>& rank_of,
                                   const std::vector<std::pair<int, int>>& covers);

    const std::vector<int>& elements() const { return ids_; }
    bool contains(int id) const { return idx_.count(id) > 0; }
    int rank_of(int id) const { return rank_[idx_.at(id)]; }
    int top_rank() const { return top_rank_; }

    std::vector<int> covers_above(int id) const;
    std::vector<int> covers_below(int id) const;
    bool leq(int a, int b) const;  // reflexive order relation

    std::optional<int> bottom() const { return bottom_; }
    std::optional<int> top() const { return top_; }
    bool is_bounded() const { return bottom_ && top_; }

    /// All maximal chains, bottom-up, in lexicographic id order.
    std::vector<Chain> maximal_chains() const;

    /// Saturated chains from x to y (inclusive), x <= y.
    std::vector<Chain> saturated_chains(int x, int y) const;

  private:
    std::vector<int> ids_;
    std::map<int, int> idx_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> up_, down_;  // indices
    std::vector<std::vector<char>> leq_;
    std::optional<int> bottom_, top_;
    int top_rank_ = 0;
};

/// Flag vector over subsets of [d-1].
struct FlagVector {
    int d = 1;
    std::map<std::vector<int>, long long> at;  // key: sorted subset of [d-1]

    long long get(const std::vector<int>& S) const;
    bool operator==(const FlagVector& o) const { return d == o.d && at == o.at; }
};

std::vector<std::vector<int>> subsets_of_interval(int d);  // all S subseteq [d-1]

/// Inclusion-exclusion h_S = sum_{T subseteq S} (-1)^{|S-T|} f_T, and back.
FlagVector flag_f_to_h(const FlagVector& f);
FlagVector flag_h_to_f(const FlagVector& h);

/// Refinement sums: entry i is the sum over |S| = i.
std::vector<long long> refinement(const FlagVector& v);

struct LabeledPoset {
    RankedPoset poset;
    EdgeLabeling labeling;
};

/// B_d with its standard labeling lambda(x, x+{i}) = i. Element ids are the
/// subset bitmasks.
LabeledPoset boolean_lattice(int d);

/// P restricted to ranks S + {0, d}, re-graded to rank |S|+1.
RankedPoset rank_select(const RankedPoset& P, const RankSet& S);

/// Chains in P minus its bounds; pure of dimension rank(P) - 2.
SimplicialComplex order_complex(const RankedPoset& P);

std::vector<int> chain_label(const Chain& c, const EdgeLabeling& lab);

bool verify_el_labeling(const RankedPoset& P, const EdgeLabeling& lab);
bool is_sd_el(const RankedPoset& P, const EdgeLabeling& lab);

/// Completion: fill every gap of e (bounds added if absent) with the unique
/// increasing chain of that interval. Throws NotELLabelingError when an
/// interval has no unique increasing chain.
Chain upsilon(const RankedPoset& P, const EdgeLabeling& lab, const Chain& e);

FlagVector flag_f(const RankedPoset& P);
FlagVector flag_h(const RankedPoset& P);

/// Descent-count flag h under an EL-labeling (Bjorner-Wachs route).
FlagVector flag_h_by_descents(const RankedPoset& P, const EdgeLabeling& lab);

/// Flag f-vector of a balanced complex: f_S counts faces with color set S
/// (colors in [1, d-1]; the empty face contributes f_{} = 1).
FlagVector flag_f_of_complex(const SimplicialComplex& K, const std::map<int, int>& color, int d);
FlagVector flag_h_of_complex(const SimplicialComplex& K, const std::map<int, int>& color, int d);

}  // namespace earcomb

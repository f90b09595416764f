#pragma once

#include <stdexcept>
#include <string>

namespace earcomb {

struct NotPureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadDimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImproperColoringError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAShellingError : std::runtime_error {
    int k, j;  // 1-based positions of the first violated facet pair
    NotAShellingError(int k_, int j_)
        : std::runtime_error("not a shelling: facet pair (" + std::to_string(j_) + ", " +
                             std::to_string(k_) + ") violates the shelling condition"),
          k(k_),
          j(j_) {}
};

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotABallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotELLabelingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyRankSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSimpleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAMatroidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotABasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadRestrictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisViolation : std::runtime_error {
    int hypothesis;  // which hypothesis of the decomposition theorem failed
    std::string witness;
    HypothesisViolation(int h, std::string w)
        : std::runtime_error("decomposition hypothesis " + std::to_string(h) +
                             " violated, witness chain: " + w),
          hypothesis(h),
          witness(std::move(w)) {}
};

}  // namespace earcomb

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "splitkit/errors.hpp"

namespace splitkit {

// Multiset of line-bundle degrees, stored sorted ascending.
class BundleSum {
  public:
    BundleSum() = default;
    explicit BundleSum(std::vector<int> degrees) : d_(std::move(degrees)) {
        std::sort(d_.begin(), d_.end());
    }

    static BundleSum uniform(int degree, int count) {
        return BundleSum(std::vector<int>(count, degree));
    }

    const std::vector<int>& degrees() const { return d_; }
    int rank() const { return static_cast<int>(d_.size()); }
    bool empty() const { return d_.empty(); }
    long long degree() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }
    int min() const { return require_nonempty(), d_.front(); }
    int max() const { return require_nonempty(), d_.back(); }

    BundleSum twisted(int t) const {
        std::vector<int> v = d_;
        for (int& x : v) x += t;
        return BundleSum(std::move(v));
    }

    BundleSum negated() const {
        std::vector<int> v = d_;
        for (int& x : v) x = -x;
        return BundleSum(std::move(v));
    }

    BundleSum concat(const BundleSum& o) const {
        std::vector<int> v = d_;
        v.insert(v.end(), o.d_.begin(), o.d_.end());
        return BundleSum(std::move(v));
    }

    bool operator==(const BundleSum& o) const { return d_ == o.d_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < d_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d_[i]);
        }
        return s + "]";
    }

  private:
    bool require_nonempty() const {
        if (d_.empty()) throw input_error("empty bundle sum");
        return true;
    }
    std::vector<int> d_;
};

using SplittingType = BundleSum;

inline bool is_balanced(const BundleSum& s) { return s.max() - s.min() <= 1; }

inline int imbalance(const BundleSum& s) { return s.max() - s.min(); }

// total gap of the sub-top summands below (top - 1)
inline int indentation(const BundleSum& s) {
    int top = s.max();
    int acc = 0;
    for (int a : s.degrees())
        if (a < top) acc += top - 1 - a;
    return acc;
}

inline long long h1_end(const BundleSum& s) {
    if (s.empty()) throw input_error("empty bundle sum");
    long long acc = 0;
    for (int a : s.degrees())
        for (int b : s.degrees())
            if (a - b - 1 > 0) acc += a - b - 1;
    return acc;
}

// floor/ceil division toward -infinity, exact integers only
inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// the unique balanced multiset of the given rank and total degree
inline BundleSum balanced_type(int rank, long long degree) {
    if (rank <= 0) throw input_error("balanced_type: non-positive rank");
    long long q = floor_div(degree, rank);
    int rem = static_cast<int>(degree - q * rank);
    std::vector<int> v;
    v.reserve(rank);
    for (int i = 0; i < rank - rem; ++i) v.push_back(static_cast<int>(q));
    for (int i = 0; i < rem; ++i) v.push_back(static_cast<int>(q) + 1);
    return BundleSum(std::move(v));
}

}  // namespace splitkit

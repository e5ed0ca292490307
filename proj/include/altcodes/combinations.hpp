#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace altcodes {

/// Streams the k-element subsets of {0, ..., n-1} in lexicographic order of
/// their sorted index lists, holding only the current subset in memory.
class CombinationCursor {
public:
    CombinationCursor(std::size_t n, std::size_t k) : n_(n), indices_(k), valid_(k <= n) {
        std::iota(indices_.begin(), indices_.end(), std::size_t{0});
    }

    bool valid() const noexcept { return valid_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

    void next() {
        const std::size_t k = indices_.size();
        std::size_t i = k;
        while (i > 0 && indices_[i - 1] == n_ - k + (i - 1)) --i;
        if (i == 0) {
            valid_ = false;
            return;
        }
        ++indices_[i - 1];
        for (std::size_t j = i; j < k; ++j) indices_[j] = indices_[j - 1] + 1;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> indices_;
    bool valid_;
};

template <class T>
std::vector<T> select(const std::vector<T>& items, const std::vector<std::size_t>& indices) {
    std::vector<T> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(items[i]);
    return out;
}

}  // namespace altcodes

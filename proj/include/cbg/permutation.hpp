#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cbg {

// A bijection of {1, ..., n}; images are 1-based.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        int n = static_cast<int>(img_.size());
        std::vector<char> seen(n + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a bijection of 1..n");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    int n() const { return static_cast<int>(img_.size()); }

    int operator()(int i) const {
        if (i < 1 || i > n()) throw std::out_of_range("permutation argument outside 1..n");
        return img_[i - 1];
    }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 1; i <= n(); ++i) inv[img_[i - 1] - 1] = i;
        return Permutation(std::move(inv));
    }

    // +1 for even, -1 for odd, by cycle decomposition.
    int sign() const {
        int nn = n();
        std::vector<char> seen(nn + 1, 0);
        int transpositions = 0;
        for (int i = 1; i <= nn; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j - 1]) {
                seen[j] = 1;
                ++len;
            }
            transpositions += len - 1;
        }
        return transpositions % 2 == 0 ? 1 : -1;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

  private:
    std::vector<int> img_;
};

// Calls fn once per permutation of {1..n}, in lexicographic order of images.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        fn(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace cbg

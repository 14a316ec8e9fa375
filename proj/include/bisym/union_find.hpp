#pragma once

#include <numeric>
#include <vector>

namespace bisym {

// Path-compressing union-find over [0, n); smaller root joins larger.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t p) {
        std::size_t root = p;
        while (root != parent_[root])
            root = parent_[root];
        while (p != root) {
            std::size_t next = parent_[p];
            parent_[p] = root;
            p = next;
        }
        return root;
    }

    void merge(std::size_t a, std::size_t b) {
        std::size_t ra = find(a), rb = find(b);
        if (ra == rb)
            return;
        if (size_[ra] < size_[rb])
            std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
    }

    bool connected(std::size_t a, std::size_t b) { return find(a) == find(b); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace bisym

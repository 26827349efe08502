#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace actalab {

  // Merge-find over 0..n-1 with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    // Returns false if x and y were already in the same block.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
      return true;
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    // Block ids numbered 0,1,2,... in order of first occurrence.
    std::vector<std::size_t> canonical_labels() {
      std::vector<std::size_t> root_label(_parent.size(), npos);
      std::vector<std::size_t> out(_parent.size());
      std::size_t              next = 0;
      for (std::size_t i = 0; i < _parent.size(); ++i) {
        std::size_t r = find(i);
        if (root_label[r] == npos) {
          root_label[r] = next++;
        }
        out[i] = root_label[r];
      }
      return out;
    }

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t>     _parent;
    std::vector<std::size_t>     _size;
  };

}  // namespace actalab

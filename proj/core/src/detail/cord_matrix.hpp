#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "treelasso/cords.hpp"
#include "treelasso/errors.hpp"

namespace treelasso::detail {

/// Dense symmetric membership matrix of a cord set over a sorted taxon list.
class CordMatrix {
 public:
  CordMatrix(const std::vector<Taxon>& taxa, const CordSet& cords)
      : n_(taxa.size()), bits_(n_ * n_, 0) {
    for (const auto& cord : cords) set(index_of(taxa, cord.first()), index_of(taxa, cord.second()));
  }

  std::size_t size() const noexcept { return n_; }
  bool has(std::size_t a, std::size_t b) const { return bits_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b) {
    bits_[a * n_ + b] = 1;
    bits_[b * n_ + a] = 1;
  }
  std::size_t count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)) / 2;
  }

  static std::size_t index_of(const std::vector<Taxon>& taxa, const Taxon& label) {
    auto it = std::lower_bound(taxa.begin(), taxa.end(), label);
    if (it == taxa.end() || *it != label) {
      throw InputError("cord mentions taxon '" + label + "' which is not in the tree");
    }
    return static_cast<std::size_t>(it - taxa.begin());
  }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

}  // namespace treelasso::detail

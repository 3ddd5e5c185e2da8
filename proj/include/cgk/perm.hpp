#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgk {

/// Permutation of {0..d-1} in one-line notation: i maps to images[i].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Perm: not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i); }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// this after other: result(i) = this(other(i)).
  Perm compose(const Perm& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("Perm: degree mismatch");
    std::vector<int> im(img_.size());
    for (int i = 0; i < degree(); ++i) im[i] = img_[other.img_[i]];
    Perm p;
    p.img_ = std::move(im);
    return p;
  }

  Perm inverse() const {
    std::vector<int> im(img_.size());
    for (int i = 0; i < degree(); ++i) im[img_[i]] = i;
    Perm p;
    p.img_ = std::move(im);
    return p;
  }

  int order() const {
    int n = 1;
    Perm p = *this;
    while (!p.is_identity()) {
      p = p.compose(*this);
      ++n;
    }
    return n;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace cgk

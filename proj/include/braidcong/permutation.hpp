#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace braidcong {

/// Element of the symmetric group S_n. Composition is in word order:
/// compose(p, q) applies p first, then q. This matches the matrix product
/// convention used by the representations (perm_rep(compose(p,q)) =
/// perm_rep(p) * perm_rep(q)).
class Permutation {
public:
  explicit Permutation(int n) : img_(static_cast<size_t>(n)) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    for (int i = 0; i < n; ++i) img_[static_cast<size_t>(i)] = i;
  }

  // one-based adjacent transposition (i, i+1), i in [1, n-1]
  static Permutation transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
    Permutation p(n);
    std::swap(p.img_[static_cast<size_t>(i - 1)], p.img_[static_cast<size_t>(i)]);
    return p;
  }

  static Permutation from_one_based_images(const std::vector<int>& images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (size_t i = 0; i < images.size(); ++i) {
      int v = images[i];
      if (v < 1 || static_cast<size_t>(v) > images.size() || seen[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("images do not form a permutation");
      seen[static_cast<size_t>(v - 1)] = true;
      p.img_[i] = v - 1;
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  // zero-based application
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  std::vector<int> one_based_images() const {
    std::vector<int> out(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("permutation degree mismatch");
    Permutation r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img_[static_cast<size_t>(i)] = q(p(i));
    return r;
  }

  friend Permutation inverse(const Permutation& p) {
    Permutation r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img_[static_cast<size_t>(p(i))] = i;
    return r;
  }

private:
  std::vector<int> img_; // img_[x] = image of x, zero-based
};

/// +1 for even permutations, -1 for odd.
inline int sign(const Permutation& p) {
  std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
  int s = 1;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

inline std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  out += ']';
  return out;
}

} // namespace braidcong

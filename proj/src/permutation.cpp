#include "symbez/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symbez {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("permutation images must be a bijection of 0..n-1");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) { return cycle(n, {a, b}); }

Permutation Permutation::cycle(int n, std::initializer_list<int> letters) {
  return from_cycles(n, {std::vector<int>(letters)});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0 || c[k] >= n) throw std::invalid_argument("cycle letter out of range");
      im[static_cast<size_t>(c[k])] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = images_[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::string Permutation::to_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) continue;
    s += "(";
    for (int j = i; !seen[static_cast<size_t>(j)]; j = images_[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      if (j != i) s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> im(a.images_.size());
  for (int i = 0; i < a.size(); ++i) im[static_cast<size_t>(i)] = a(b(i));
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace symbez

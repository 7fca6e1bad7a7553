#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace symbez {

/// Bijection of {0, ..., n-1}. Composition (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// Cycle a0 -> a1 -> ... -> a0 on n letters.
  static Permutation cycle(int n, std::initializer_list<int> letters);
  /// Product of disjoint cycles, e.g. {{0, 1}, {2, 3}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  /// Cycle lengths (including fixed points), sorted in decreasing order.
  std::vector<int> cycle_type() const;
  /// Cycle notation on 0-based letters, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their image sequences.
std::vector<Permutation> all_permutations(int n);

}  // namespace symbez

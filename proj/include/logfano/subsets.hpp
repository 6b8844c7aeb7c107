#pragma once

// Small subsets of the index set {1, ..., ambient}, bit-packed. Ambient sizes
// here are n+3 <= 15 for the weight-space walls and join labels, so a 32-bit
// mask is plenty; the constructor enforces ambient <= 31.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace logfano {

class SubsetIndex {
 public:
  SubsetIndex() = default;
  SubsetIndex(std::initializer_list<int> members, int ambient);
  SubsetIndex(const std::vector<int>& members, int ambient);
  static SubsetIndex empty_set(int ambient) { return SubsetIndex({}, ambient); }
  static SubsetIndex full_set(int ambient);
  static SubsetIndex from_bits(std::uint32_t bits, int ambient);

  int ambient() const { return ambient_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int i) const;
  std::uint32_t bits() const { return bits_; }

  SubsetIndex complement() const;
  SubsetIndex set_union(const SubsetIndex& other) const;
  SubsetIndex set_intersection(const SubsetIndex& other) const;
  bool disjoint_from(const SubsetIndex& other) const;
  bool subset_of(const SubsetIndex& other) const;

  // Cardinality of the symmetric difference |I ^ J|.
  int distance(const SubsetIndex& other) const;

  // Ascending member list, 1-based.
  std::vector<int> members() const;

  // "{1,3,4}" or "{}" (display form).
  std::string to_string() const;

  bool operator==(const SubsetIndex&) const = default;
  // Orders by ambient, then size, then mask: a stable total order for maps.
  bool operator<(const SubsetIndex& other) const;

 private:
  int ambient_ = 0;
  std::uint32_t bits_ = 0;

  void check_ambient_match(const SubsetIndex& other) const;
};

// All subsets of {1..ambient} with the given cardinality, in mask order.
std::vector<SubsetIndex> subsets_of_size(int ambient, int card);

}  // namespace logfano

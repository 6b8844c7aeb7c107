#include "logfano/subsets.hpp"

#include <bit>

namespace logfano {
namespace {

void check_ambient(int ambient) {
  if (ambient < 0 || ambient > 31)
    throw std::invalid_argument("subset ambient size must lie in 0..31");
}

}  // namespace

SubsetIndex::SubsetIndex(std::initializer_list<int> members, int ambient)
    : SubsetIndex(std::vector<int>(members), ambient) {}

SubsetIndex::SubsetIndex(const std::vector<int>& members, int ambient) : ambient_(ambient) {
  check_ambient(ambient);
  for (int m : members) {
    if (m < 1 || m > ambient)
      throw std::out_of_range("subset member " + std::to_string(m) + " outside 1.." +
                              std::to_string(ambient));
    bits_ |= (1u << (m - 1));
  }
}

SubsetIndex SubsetIndex::full_set(int ambient) {
  check_ambient(ambient);
  SubsetIndex s;
  s.ambient_ = ambient;
  s.bits_ = ambient == 0 ? 0u : ((1u << ambient) - 1u);
  return s;
}

SubsetIndex SubsetIndex::from_bits(std::uint32_t bits, int ambient) {
  check_ambient(ambient);
  if ((bits >> ambient) != 0)
    throw std::out_of_range("subset mask has bits outside the ambient set");
  SubsetIndex s;
  s.ambient_ = ambient;
  s.bits_ = bits;
  return s;
}

int SubsetIndex::size() const { return std::popcount(bits_); }

bool SubsetIndex::contains(int i) const {
  if (i < 1 || i > ambient_) return false;
  return (bits_ >> (i - 1)) & 1u;
}

void SubsetIndex::check_ambient_match(const SubsetIndex& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("subset operation across different ambient sets");
}

SubsetIndex SubsetIndex::complement() const {
  return from_bits(full_set(ambient_).bits_ & ~bits_, ambient_);
}

SubsetIndex SubsetIndex::set_union(const SubsetIndex& other) const {
  check_ambient_match(other);
  return from_bits(bits_ | other.bits_, ambient_);
}

SubsetIndex SubsetIndex::set_intersection(const SubsetIndex& other) const {
  check_ambient_match(other);
  return from_bits(bits_ & other.bits_, ambient_);
}

bool SubsetIndex::disjoint_from(const SubsetIndex& other) const {
  check_ambient_match(other);
  return (bits_ & other.bits_) == 0;
}

bool SubsetIndex::subset_of(const SubsetIndex& other) const {
  check_ambient_match(other);
  return (bits_ & ~other.bits_) == 0;
}

int SubsetIndex::distance(const SubsetIndex& other) const {
  check_ambient_match(other);
  return std::popcount(bits_ ^ other.bits_);
}

std::vector<int> SubsetIndex::members() const {
  std::vector<int> out;
  for (int i = 1; i <= ambient_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SubsetIndex::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

bool SubsetIndex::operator<(const SubsetIndex& other) const {
  if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
  if (size() != other.size()) return size() < other.size();
  return bits_ < other.bits_;
}

std::vector<SubsetIndex> subsets_of_size(int ambient, int card) {
  check_ambient(ambient);
  std::vector<SubsetIndex> out;
  if (card < 0 || card > ambient) return out;
  const std::uint32_t limit = ambient == 31 ? 0x7fffffffu : (1u << ambient);
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) == card) out.push_back(SubsetIndex::from_bits(mask, ambient));
  return out;
}

}  // namespace logfano

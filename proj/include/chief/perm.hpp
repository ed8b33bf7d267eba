#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chief {

using Point = uint16_t;

/// A permutation of the points {0, ..., degree-1}, stored as an image table.
///
/// Products act left to right: (p * q) maps x to q[p[x]], so conjugation is
/// p^g = g.inverse() * p * g. Cycle notation at the text boundary is 1-based;
/// everything programmatic is 0-based.
class Perm {
public:
  explicit Perm(unsigned degree);              // identity
  explicit Perm(std::vector<Point> images);    // validates a bijection

  // Parses "(a b c)(d e)" with 1-based points. Cycles need not be disjoint;
  // they multiply left to right. "()" is the identity.
  static Perm parse(std::string_view cycles, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](unsigned point) const { return images_[point]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  uint64_t order() const;  // lcm of cycle lengths

  // Canonical disjoint cycle form: cycles sorted by least moved point, each
  // cycle starting at its least point, fixed points omitted. Identity: "()".
  std::string str() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<Point> images_;
};

// p^g = g^{-1} p g
Perm conjugate(const Perm& p, const Perm& g);
// [a, b] = a^{-1} b^{-1} a b
Perm commutator(const Perm& a, const Perm& b);

std::ostream& operator<<(std::ostream& os, const Perm& p);

} // namespace chief

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primcover {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Products follow the left-to-right convention: `p * q` applies p first and
/// then q, so `(p * q)(i) == q(p(i))`. Text I/O uses 1-based cycle notation
/// such as "(1,2,3)(4,5)"; the identity is written "()".
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// Validates that `images` is a bijection of {0, ..., images.size()-1}.
  static Permutation from_images(std::vector<Point> images);
  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Parses 1-based cycle notation; see the grammar in the README.
  static Permutation parse(std::string_view text, std::size_t degree);
  /// Builds a permutation from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Number of points fixed.
  std::size_t fixed_points() const noexcept;
  /// Number of cycles, fixed points included.
  std::size_t cycle_count() const noexcept;

  /// 1-based cycle notation, cycles ordered by smallest point.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation& p, const Permutation& q);
};

/// "Apply p first, then q". Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// p^e for any integer e (negative powers use the inverse).
Permutation power(const Permutation& p, std::int64_t e);

/// h^-1 * g * h.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Multiset of cycle lengths (fixed points included), sorted descending.
struct CycleType {
  std::vector<std::size_t> parts;

  std::size_t degree() const noexcept;
  std::string to_string() const;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

/// Least m >= 1 with p^m = 1, i.e. the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

bool is_even(const Permutation& p) noexcept;

/// Left-to-right product of a sequence; the identity of `degree` when empty.
Permutation product(std::span<const Permutation> factors, std::size_t degree);

std::size_t hash_value(const Permutation& p) noexcept;

}  // namespace primcover

template <>
struct std::hash<primcover::Permutation> {
  std::size_t operator()(const primcover::Permutation& p) const noexcept {
    return primcover::hash_value(p);
  }
};

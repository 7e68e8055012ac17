#pragma once

#include <map>
#include <vector>

namespace sigma_spectra {

using Colour = int;

/// Colour multiplicities within one class. Colours with zero count are absent.
struct ClassProfile {
  std::map<Colour, int> counts;
  int total = 0;

  static ClassProfile from_colours(const std::vector<Colour>& colours);

  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

/// A colouring of n classes of q vertices. Vertices inside a class are
/// interchangeable, so each class is kept sorted.
class Colouring {
 public:
  Colouring() = default;
  /// Throws DimensionMismatch when the classes are ragged or empty, DomainError
  /// on a negative colour.
  explicit Colouring(std::vector<std::vector<Colour>> classes);

  int n() const noexcept { return static_cast<int>(classes_.size()); }
  int q() const noexcept { return classes_.empty() ? 0 : static_cast<int>(classes_.front().size()); }
  const std::vector<std::vector<Colour>>& classes() const noexcept { return classes_; }
  const std::vector<Colour>& class_colours(int i) const { return classes_.at(i); }

  int colour_count() const;
  Colour max_colour() const;
  bool class_is_monochromatic(int i) const;
  int monochromatic_class_count() const;
  /// Number of classes other than `i` in which colour `c` occurs.
  int occurrences_outside(int i, Colour c) const;

  /// Same class order; colours renumbered 0..k-1 by first appearance.
  Colouring normalized() const;
  /// Representative of the orbit under colour relabelling and class
  /// permutation: the lexicographically least class-major sequence.
  Colouring canonical() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<std::vector<Colour>> classes_;
};

/// Throws IndexOutOfRange when class_index is not in [0, n).
ClassProfile profile_of(const Colouring& colouring, int class_index);

}  // namespace sigma_spectra

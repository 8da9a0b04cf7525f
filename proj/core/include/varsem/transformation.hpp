#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace varsem {

//! A total map on {1..n}, stored as its list of images.
//!
//! Points are 1-based and functions are written to the right of their
//! argument, so composition is left-to-right: x(fg) = (xf)g.  Values are
//! immutable after construction and validated on entry.
class Transformation {
 public:
  //! Construct from the image list [1f, 2f, ..., nf] (entries in {1..n}).
  explicit Transformation(std::vector<int> images);

  static Transformation identity(int degree);
  static Transformation constant_map(int degree, int value);

  int degree() const { return static_cast<int>(images_.size()); }

  //! Image of the point x (1-based).
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  const std::vector<int>& images() const { return images_; }

  //! Number of distinct image values.
  int rank() const;

  //! Sorted list of distinct image values.
  std::vector<int> image() const;

  //! Partition of {1..n} into blocks of equal image value, blocks ordered
  //! by ascending minimum element.
  std::vector<std::vector<int>> kernel() const;

  bool is_idempotent() const;
  bool is_permutation() const { return rank() == degree(); }

  //! Group inverse; requires a permutation.
  Transformation inverse() const;

  //! Text form "[2,3,1]".
  std::string to_string() const;

  //! Parse the text form; whitespace between tokens is accepted.
  static Transformation parse(std::string_view text);

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  struct unchecked_tag {};
  Transformation(std::vector<int> images, unchecked_tag) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend std::vector<Transformation> enumerate_all(int, int);
};

//! x(fg) = (xf)g; degrees must agree.
Transformation compose(const Transformation& f, const Transformation& g);

//! Convenience for triple products x·y·z (left-to-right).
Transformation compose(const Transformation& x, const Transformation& y, const Transformation& z);

//! Conjugate q^{-1}·f·q by a permutation q; preserves rank and idempotency.
Transformation conjugate(const Transformation& f, const Transformation& q);

std::ostream& operator<<(std::ostream& os, const Transformation& f);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

//! The (blocks / points) presentation of a transformation: blocks A_1..A_r
//! partition {1..n}, point a_i is the common image of A_i.  Normal form has
//! blocks ordered by ascending minimum element; to_tabular always emits the
//! normal form, so equality of tabular forms is direct comparison.
struct TabularForm {
  std::vector<std::vector<int>> blocks;
  std::vector<int> points;

  friend bool operator==(const TabularForm&, const TabularForm&) = default;
};

TabularForm to_tabular(const Transformation& f);

//! Decode a tabular form; rejects malformed partitions and repeated points.
Transformation from_tabular(const TabularForm& t);

inline constexpr int kDefaultEnumerationBound = 7;

//! n^n; n must be small enough for the product to fit in 64 bits.
std::uint64_t tn_size(int n);

//! All n^n transformations on {1..n} in lexicographic order of image lists.
//! Rejects n > bound.
std::vector<Transformation> enumerate_all(int n, int bound = kDefaultEnumerationBound);

//! Position of f in enumerate_all order (mixed-radix value of the images).
std::uint64_t lex_index(const Transformation& f);

//! Deterministic per seed.
Transformation sample(int n, std::uint64_t seed);

}  // namespace varsem

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "varsem/transformation.hpp"

namespace varsem {

//! The multiplication carried by a FiniteSemigroup: either plain composition
//! x·y or the sandwich operation x ⋆_a y = x·a·y for a fixed element a.
class ProductRule {
 public:
  static ProductRule plain() { return ProductRule{}; }
  static ProductRule sandwich(Transformation a);

  bool is_sandwich() const { return sandwich_.has_value(); }
  const Transformation& sandwich_element() const;

  Transformation apply(const Transformation& x, const Transformation& y) const;

  //! x for the plain rule, x·a for the sandwich rule; composing the result
  //! with y on the right gives apply(x, y).  Useful in pair loops.
  Transformation left_partial(const Transformation& x) const;

  friend bool operator==(const ProductRule&, const ProductRule&) = default;

 private:
  ProductRule() = default;
  std::optional<Transformation> sandwich_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

//! Thrown when a closure grows past its cap; carries the partial count.
class closure_cap_exceeded : public std::runtime_error {
 public:
  closure_cap_exceeded(std::size_t cap, std::size_t partial)
      : std::runtime_error("closure aborted: size cap " + std::to_string(cap) +
                           " exceeded after " + std::to_string(partial) + " elements"),
        partial_count(partial) {}
  std::size_t partial_count;
};

//! An explicit product-closed set of transformations of one degree, with an
//! index for element lookup.  Elements are in a canonical order, so derived
//! artifacts (witnesses, diagrams) are stable across runs.
class FiniteSemigroup {
 public:
  //! Build from an explicit element list; sorts, deduplicates and verifies
  //! closure under the rule (exhaustively for small sets, sampled above
  //! 2048 elements).
  static FiniteSemigroup from_elements(std::vector<Transformation> elements,
                                       ProductRule rule);

  int size() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }
  const std::vector<Transformation>& elements() const { return elements_; }
  const Transformation& element(int i) const {
    return elements_[static_cast<std::size_t>(i)];
  }
  const ProductRule& rule() const { return rule_; }

  std::optional<int> index_of(const Transformation& t) const;
  bool contains(const Transformation& t) const { return index_of(t).has_value(); }

  Transformation product(const Transformation& x, const Transformation& y) const {
    return rule_.apply(x, y);
  }

  //! Index of element(i) ⋆ element(j); the product is in the set by closure.
  int product_index(int i, int j) const;

  //! True when the carrier is all of T_degree.
  bool is_full_tn() const { return full_tn_; }

  //! Two-sided identity under the rule, if one exists.
  std::optional<Transformation> identity_element() const;
  bool is_monoid() const { return identity_element().has_value(); }

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.rule_ == b.rule_ && a.elements_ == b.elements_;
  }

 private:
  enum class Trust { verify, closed };
  FiniteSemigroup(std::vector<Transformation> elements, ProductRule rule, Trust trust);

  void verify_closure() const;

  std::vector<Transformation> elements_;
  ProductRule rule_;
  int degree_ = 0;
  bool full_tn_ = false;  // index arithmetically via lex rank, no hash table
  std::unordered_map<Transformation, int, TransformationHash> index_;

  friend FiniteSemigroup closure(std::vector<Transformation>, ProductRule, std::size_t);
  friend FiniteSemigroup full_tn(int, int);
  friend FiniteSemigroup variant(const FiniteSemigroup&, const Transformation&);
  friend FiniteSemigroup local_subsemigroup(const FiniteSemigroup&, const Transformation&);
  friend FiniteSemigroup variant_transported(const FiniteSemigroup&, const Transformation&);
};

//! Smallest product-closed set containing the generators.  Element order is
//! canonical: breadth-first layers of generator words, each layer sorted
//! lexicographically by image list.
FiniteSemigroup closure(std::vector<Transformation> generators, ProductRule rule,
                        std::size_t cap = kDefaultClosureCap);

//! The full transformation semigroup T_n under plain composition.
FiniteSemigroup full_tn(int n, int bound = kDefaultEnumerationBound);

//! Same carrier as S, multiplication x ⋆_a y = x·a·y.  Requires plain S and
//! a ∈ S (any a of matching degree when S is all of T_n).
FiniteSemigroup variant(const FiniteSemigroup& S, const Transformation& a);

//! Variant of a semigroup that may itself carry a sandwich rule; the two
//! sandwich layers collapse into one (x ⋆_a c ⋆_a y = x·(aca)·y).  Requires
//! c ∈ S.
FiniteSemigroup variant_transported(const FiniteSemigroup& S, const Transformation& c);

//! The set aSa = {a·x·a : x ∈ S} under plain composition.
FiniteSemigroup local_subsemigroup(const FiniteSemigroup& S, const Transformation& a);

}  // namespace varsem

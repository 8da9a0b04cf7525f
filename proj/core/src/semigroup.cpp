#include "varsem/semigroup.hpp"

#include <algorithm>
#include <random>

namespace varsem {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

ProductRule ProductRule::sandwich(Transformation a) {
  ProductRule r;
  r.sandwich_ = std::move(a);
  return r;
}

const Transformation& ProductRule::sandwich_element() const {
  if (!sandwich_) {
    fail("ProductRule: plain rule has no sandwich element");
  }
  return *sandwich_;
}

Transformation ProductRule::apply(const Transformation& x, const Transformation& y) const {
  if (sandwich_) {
    return compose(compose(x, *sandwich_), y);
  }
  return compose(x, y);
}

Transformation ProductRule::left_partial(const Transformation& x) const {
  if (sandwich_) {
    return compose(x, *sandwich_);
  }
  return x;
}

FiniteSemigroup::FiniteSemigroup(std::vector<Transformation> elements, ProductRule rule,
                                 Trust trust)
    : elements_(std::move(elements)), rule_(std::move(rule)) {
  if (elements_.empty()) {
    fail("FiniteSemigroup: element set must be nonempty");
  }
  degree_ = elements_.front().degree();
  for (const auto& t : elements_) {
    if (t.degree() != degree_) {
      fail("FiniteSemigroup: mixed degrees in element set");
    }
  }
  if (rule_.is_sandwich() && rule_.sandwich_element().degree() != degree_) {
    fail("FiniteSemigroup: sandwich element degree mismatch");
  }
  full_tn_ = degree_ <= 15 &&
             static_cast<std::uint64_t>(elements_.size()) == tn_size(degree_) &&
             std::is_sorted(elements_.begin(), elements_.end()) &&
             std::adjacent_find(elements_.begin(), elements_.end()) == elements_.end();
  if (!full_tn_) {
    index_.reserve(elements_.size() * 2);
    for (int i = 0; i < size(); ++i) {
      auto [it, inserted] = index_.emplace(elements_[static_cast<std::size_t>(i)], i);
      if (!inserted) {
        fail("FiniteSemigroup: duplicate element " + it->first.to_string());
      }
    }
  }
  if (trust == Trust::verify) {
    verify_closure();
  }
}

void FiniteSemigroup::verify_closure() const {
  const int n = size();
  const std::uint64_t total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  if (total <= 2048ull * 2048ull) {
    for (int i = 0; i < n; ++i) {
      const Transformation left = rule_.left_partial(element(i));
      for (int j = 0; j < n; ++j) {
        if (!contains(compose(left, element(j)))) {
          fail("FiniteSemigroup: not closed, " + element(i).to_string() + " * " +
               element(j).to_string() + " escapes the set");
        }
      }
    }
  } else {
    // spot-check on a fixed seeded sample
    std::mt19937_64 gen(0x5eed'c105u);
    for (int k = 0; k < 100000; ++k) {
      const int i = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
      const int j = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
      if (!contains(product(element(i), element(j)))) {
        fail("FiniteSemigroup: not closed (sampled pair escapes the set)");
      }
    }
  }
}

FiniteSemigroup FiniteSemigroup::from_elements(std::vector<Transformation> elements,
                                               ProductRule rule) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSemigroup(std::move(elements), std::move(rule), Trust::verify);
}

std::optional<int> FiniteSemigroup::index_of(const Transformation& t) const {
  if (t.degree() != degree_) {
    return std::nullopt;
  }
  if (full_tn_) {
    return static_cast<int>(lex_index(t));
  }
  auto it = index_.find(t);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

int FiniteSemigroup::product_index(int i, int j) const {
  const Transformation p = product(element(i), element(j));
  auto idx = index_of(p);
  if (!idx) {
    throw std::logic_error("FiniteSemigroup: product escaped a supposedly closed set");
  }
  return *idx;
}

std::optional<Transformation> FiniteSemigroup::identity_element() const {
  for (const auto& e : elements_) {
    bool ok = true;
    for (const auto& x : elements_) {
      if (product(e, x) != x || product(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

FiniteSemigroup closure(std::vector<Transformation> generators, ProductRule rule,
                        std::size_t cap) {
  if (generators.empty()) {
    fail("closure: generator list must be nonempty");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<Transformation> elements;
  std::unordered_map<Transformation, int, TransformationHash> seen;
  auto add = [&](const Transformation& t) {
    auto [it, inserted] = seen.emplace(t, static_cast<int>(elements.size()));
    if (inserted) {
      elements.push_back(t);
    }
    return inserted;
  };
  for (const auto& g : generators) {
    add(g);
  }
  // breadth-first over generator words; every element of the generated
  // semigroup is word·g for a shorter word, so right multiplication suffices
  std::vector<Transformation> layer = elements;
  while (!layer.empty()) {
    std::vector<Transformation> next;
    for (const auto& w : layer) {
      const Transformation left = rule.left_partial(w);
      for (const auto& g : generators) {
        const Transformation p = compose(left, g);
        if (seen.find(p) == seen.end()) {
          next.push_back(p);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const auto& t : next) {
      add(t);
      if (elements.size() > cap) {
        throw closure_cap_exceeded(cap, elements.size());
      }
    }
    layer = std::move(next);
  }
  return FiniteSemigroup(std::move(elements), std::move(rule),
                         FiniteSemigroup::Trust::closed);
}

FiniteSemigroup full_tn(int n, int bound) {
  return FiniteSemigroup(enumerate_all(n, bound), ProductRule::plain(),
                         FiniteSemigroup::Trust::closed);
}

FiniteSemigroup variant(const FiniteSemigroup& S, const Transformation& a) {
  if (S.rule().is_sandwich()) {
    fail("variant: base semigroup must carry the plain rule");
  }
  if (a.degree() != S.degree()) {
    fail("variant: sandwich element degree mismatch");
  }
  if (!S.is_full_tn() && !S.contains(a)) {
    fail("variant: sandwich element not in the carrier");
  }
  // x·a·y is a product of elements of S (or of T_n), so the carrier is closed
  return FiniteSemigroup(S.elements(), ProductRule::sandwich(a),
                         FiniteSemigroup::Trust::closed);
}

FiniteSemigroup variant_transported(const FiniteSemigroup& S, const Transformation& c) {
  if (!S.contains(c)) {
    fail("variant_transported: element not in the carrier");
  }
  const Transformation s = S.rule().is_sandwich()
                               ? compose(S.rule().sandwich_element(), c,
                                         S.rule().sandwich_element())
                               : c;
  return FiniteSemigroup(S.elements(), ProductRule::sandwich(s),
                         FiniteSemigroup::Trust::closed);
}

FiniteSemigroup local_subsemigroup(const FiniteSemigroup& S, const Transformation& a) {
  if (S.rule().is_sandwich()) {
    fail("local_subsemigroup: base semigroup must carry the plain rule");
  }
  if (a.degree() != S.degree()) {
    fail("local_subsemigroup: degree mismatch");
  }
  std::vector<Transformation> elements;
  elements.reserve(S.elements().size());
  for (const auto& x : S.elements()) {
    elements.push_back(compose(a, x, a));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  // (axa)(aya) = a(xa²y)a lands back in aSa when S is closed; verified anyway
  return FiniteSemigroup(std::move(elements), ProductRule::plain(),
                         FiniteSemigroup::Trust::verify);
}

}  // namespace varsem

#include "varsem/transformation.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace varsem {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Transformation::Transformation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) {
    fail("Transformation: image list must be nonempty");
  }
  const int n = degree();
  for (int v : images_) {
    if (v < 1 || v > n) {
      fail("Transformation: image value " + std::to_string(v) + " out of range 1.." +
           std::to_string(n));
    }
  }
}

Transformation Transformation::identity(int degree) {
  if (degree < 1) {
    fail("Transformation::identity: degree must be positive");
  }
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    img[static_cast<std::size_t>(i)] = i + 1;
  }
  return Transformation(std::move(img), unchecked_tag{});
}

Transformation Transformation::constant_map(int degree, int value) {
  if (degree < 1 || value < 1 || value > degree) {
    fail("Transformation::constant_map: bad degree/value");
  }
  return Transformation(std::vector<int>(static_cast<std::size_t>(degree), value),
                        unchecked_tag{});
}

int Transformation::rank() const { return static_cast<int>(image().size()); }

std::vector<int> Transformation::image() const {
  std::vector<int> im = images_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

std::vector<std::vector<int>> Transformation::kernel() const {
  const int n = degree();
  // seen[v] = index of the block with image value v, or -1
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    const int v = (*this)(x);
    if (seen[static_cast<std::size_t>(v)] < 0) {
      seen[static_cast<std::size_t>(v)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(seen[static_cast<std::size_t>(v)])].push_back(x);
  }
  // scanning x ascending already orders blocks by minimum element
  return blocks;
}

bool Transformation::is_idempotent() const {
  const int n = degree();
  for (int x = 1; x <= n; ++x) {
    const int v = (*this)(x);
    if ((*this)(v) != v) {
      return false;
    }
  }
  return true;
}

Transformation Transformation::inverse() const {
  if (!is_permutation()) {
    fail("Transformation::inverse: not a permutation");
  }
  const int n = degree();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    inv[static_cast<std::size_t>((*this)(x)-1)] = x;
  }
  return Transformation(std::move(inv), unchecked_tag{});
}

std::string Transformation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Transformation Transformation::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail("Transformation::parse: expected '" + std::string(1, c) + "' in \"" +
           std::string(text) + "\"");
    }
    ++pos;
  };
  expect('[');
  std::vector<int> images;
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) {
      fail("Transformation::parse: expected integer in \"" + std::string(text) + "\"");
    }
    images.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (pos != text.size()) {
    fail("Transformation::parse: trailing characters in \"" + std::string(text) + "\"");
  }
  return Transformation(std::move(images));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    fail("compose: degree mismatch (" + std::to_string(f.degree()) + " vs " +
         std::to_string(g.degree()) + ")");
  }
  const int n = f.degree();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    img[static_cast<std::size_t>(x - 1)] = g(f(x));
  }
  return Transformation(std::move(img));
}

Transformation compose(const Transformation& x, const Transformation& y,
                       const Transformation& z) {
  return compose(compose(x, y), z);
}

Transformation conjugate(const Transformation& f, const Transformation& q) {
  if (!q.is_permutation()) {
    fail("conjugate: q is not a permutation");
  }
  if (f.degree() != q.degree()) {
    fail("conjugate: degree mismatch");
  }
  const int n = f.degree();
  const Transformation qi = q.inverse();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    img[static_cast<std::size_t>(x - 1)] = q(f(qi(x)));
  }
  return Transformation(std::move(img));
}

std::ostream& operator<<(std::ostream& os, const Transformation& f) {
  return os << f.to_string();
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  // FNV-1a over the image values
  std::size_t h = 1469598103934665603ull;
  for (int v : t.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

TabularForm to_tabular(const Transformation& f) {
  TabularForm t;
  t.blocks = f.kernel();
  t.points.reserve(t.blocks.size());
  for (const auto& block : t.blocks) {
    t.points.push_back(f(block.front()));
  }
  return t;
}

Transformation from_tabular(const TabularForm& t) {
  if (t.blocks.empty() || t.blocks.size() != t.points.size()) {
    fail("from_tabular: block/point count mismatch");
  }
  std::size_t n = 0;
  for (const auto& block : t.blocks) {
    if (block.empty()) {
      fail("from_tabular: empty block");
    }
    n += block.size();
  }
  std::vector<int> img(n, 0);
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    const int p = t.points[i];
    if (p < 1 || p > static_cast<int>(n)) {
      fail("from_tabular: point out of range");
    }
    for (int x : t.blocks[i]) {
      if (x < 1 || x > static_cast<int>(n)) {
        fail("from_tabular: block element out of range");
      }
      if (img[static_cast<std::size_t>(x - 1)] != 0) {
        fail("from_tabular: blocks are not disjoint");
      }
      img[static_cast<std::size_t>(x - 1)] = p;
    }
  }
  std::vector<int> pts = t.points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    fail("from_tabular: repeated points");
  }
  // blocks disjoint with total size n and no zero left => they partition {1..n}
  return Transformation(std::move(img));
}

std::uint64_t tn_size(int n) {
  if (n < 1 || n > 15) {
    fail("tn_size: n out of supported range 1..15");
  }
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= static_cast<std::uint64_t>(n);
  }
  return r;
}

std::vector<Transformation> enumerate_all(int n, int bound) {
  if (n < 1) {
    fail("enumerate_all: n must be positive");
  }
  if (n > bound) {
    fail("enumerate_all: degree " + std::to_string(n) + " exceeds enumeration bound " +
         std::to_string(bound) + " (raise the bound explicitly to enumerate " +
         std::to_string(n) + "^" + std::to_string(n) + " elements)");
  }
  const std::uint64_t total = tn_size(n);
  std::vector<Transformation> out;
  out.reserve(total);
  std::vector<int> img(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(Transformation(img, Transformation::unchecked_tag{}));
    // odometer: lexicographic successor
    int i = n - 1;
    while (i >= 0 && img[static_cast<std::size_t>(i)] == n) {
      img[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++img[static_cast<std::size_t>(i)];
  }
  return out;
}

std::uint64_t lex_index(const Transformation& f) {
  std::uint64_t idx = 0;
  const std::uint64_t n = static_cast<std::uint64_t>(f.degree());
  for (int v : f.images()) {
    idx = idx * n + static_cast<std::uint64_t>(v - 1);
  }
  return idx;
}

Transformation sample(int n, std::uint64_t seed) {
  if (n < 1) {
    fail("sample: n must be positive");
  }
  std::mt19937_64 gen(seed);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (auto& v : img) {
    // modulo keeps the stream identical across standard library implementations
    v = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(n));
  }
  return Transformation(std::move(img));
}

}  // namespace varsem

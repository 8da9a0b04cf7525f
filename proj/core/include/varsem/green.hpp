#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "varsem/semigroup.hpp"

namespace varsem {

inline constexpr std::size_t kDefaultGreenCap = 10'000;

//! Green's R/L/H/D partitions of a FiniteSemigroup.  Class ids are dense and
//! assigned in order of each class's smallest element index.
struct GreenStructure {
  struct Cell {
    int r;
    int l;
    int h;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  std::vector<int> r_of, l_of, h_of, d_of;  // per element index
  std::vector<int> r_size, l_size, h_size, d_size;
  std::vector<char> h_is_group;             // H-class contains an idempotent
  std::vector<std::vector<Cell>> d_cells;   // per D id, sorted by (r, l)

  int num_r() const { return static_cast<int>(r_size.size()); }
  int num_l() const { return static_cast<int>(l_size.size()); }
  int num_h() const { return static_cast<int>(h_size.size()); }
  int num_d() const { return static_cast<int>(d_size.size()); }
};

//! Compute the structure from the definitional pre-orders: x ≤_L y iff x = y
//! or x = u⋆y for some u in S (dually for R), evaluated as reachability on
//! the left/right Cayley graphs over the full element set; mutually reachable
//! strongly-connected groups are the classes.  H = R ∧ L; D = join of R and L.
GreenStructure green_structure(const FiniteSemigroup& S,
                               std::size_t cap = kDefaultGreenCap);

//! The egg-box presentation: one grid per D-class, rows R-classes, columns
//! L-classes, cells H-classes.  D-classes are ordered by decreasing element
//! rank, then decreasing size, then smallest element index.
struct EggBox {
  struct HCell {
    int h_id;
    int size;
    bool is_group;
  };
  struct DClass {
    int d_id;
    int rank;   // common rank of the class's elements
    int size;
    std::vector<int> r_ids, l_ids;          // row / column order
    std::vector<std::vector<HCell>> grid;   // r_ids.size() x l_ids.size()
  };

  int degree = 0;
  int semigroup_size = 0;
  std::vector<DClass> classes;
};

EggBox egg_box(const FiniteSemigroup& S, std::size_t cap = kDefaultGreenCap);

//! One subgraph cluster per D-class, one box node per H-class labelled
//! "size" or "size|G" for group H-classes; rows aligned with rank=same.
std::string to_dot(const EggBox& box);

//! Plain-text grids, one block per D-class; group cells are starred.
std::string to_text(const EggBox& box);

//! Shape summary of one D-class used for structural comparisons.
struct DClassProfile {
  int rank;
  int n_r;
  int n_l;
  int h_size;    // common cell size within the class
  int n_groups;  // number of group cells
  int size;

  friend bool operator==(const DClassProfile&, const DClassProfile&) = default;
  friend auto operator<=>(const DClassProfile&, const DClassProfile&) = default;
};

//! Profiles of all D-classes, sorted; equal profiles mean the two egg-boxes
//! have the same rank/grid/cell-size structure.
std::vector<DClassProfile> green_profile(const EggBox& box);

}  // namespace varsem

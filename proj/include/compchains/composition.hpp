#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compchains {

/// A finite sequence of positive integers. The empty composition is a
/// regular value of width 0 and prints as "()".
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  /// Accepts "3,4,1,2", "(3,4,1,2)", "()" or the empty string.
  static Composition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int width() const { return static_cast<int>(parts_.size()); }
  int height() const;
  int weight() const;
  bool empty() const { return parts_.empty(); }
  bool all_ones() const;

  std::string str() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

struct Measures {
  int width = 0;
  int height = 0;
  int weight = 0;
  friend bool operator==(const Measures&, const Measures&) = default;
};

Measures measures(const Composition& p);

/// Weakly decreasing sequence of positive integers. Doubles as a finitely
/// supported vector of N^omega with trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Cells (column, row), both 1-based; column i holds rows 1..p_i.
struct Diagram {
  std::vector<std::pair<int, int>> cells;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram diagram(const Composition& p);

/// Sum of f_{p_i} where f_j = e_1 + ... + e_j; component m counts parts >= m.
Partition multiweight(const Composition& p);

/// Decreasing reordering of the parts.
Partition mw_star(const Composition& p);

Partition conjugate(const Partition& lambda);

/// True when mu is obtained from lambda by adding exactly one cell.
bool young_covers(const Partition& mu, const Partition& lambda);

struct DescentSet {
  int n = 0;
  std::vector<int> elements;  // strictly increasing, each in 1..n-1
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

DescentSet descent_set(const Composition& p);
Composition composition_from_descents(const DescentSet& d);

/// All compositions of n in lexicographic order of their parts.
std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_of_width(int n, int k);
std::vector<Partition> partitions_of(int n);

}  // namespace compchains

template <>
struct std::hash<compchains::Composition> {
  std::size_t operator()(const compchains::Composition& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int p : c.parts()) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ull;
    return h ^ static_cast<std::size_t>(c.width());
  }
};

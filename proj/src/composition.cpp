#include "compchains/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace compchains {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unbalanced parenthesis in composition");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad composition part: '" + std::string(item) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in composition");
  }
  return Composition(std::move(parts));
}

int Composition::height() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::all_ones() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string Composition::str() const {
  if (parts_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Measures measures(const Composition& p) { return {p.width(), p.height(), p.weight()}; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  if (parts_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Diagram diagram(const Composition& p) {
  Diagram d;
  for (int i = 0; i < p.width(); ++i)
    for (int j = 1; j <= p[i]; ++j) d.cells.emplace_back(i + 1, j);
  return d;
}

Partition multiweight(const Composition& p) {
  std::vector<int> v(p.height(), 0);
  for (int part : p.parts())
    for (int m = 0; m < part; ++m) ++v[m];
  return Partition(std::move(v));
}

Partition mw_star(const Composition& p) {
  std::vector<int> v(p.parts().begin(), p.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.length() == 0) return {};
  std::vector<int> out(lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

bool young_covers(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight() + 1) return false;
  if (mu.length() < lambda.length() || mu.length() > lambda.length() + 1) return false;
  int diff = 0;
  for (int i = 0; i < mu.length(); ++i) {
    int a = mu[i];
    int b = i < lambda.length() ? lambda[i] : 0;
    if (a < b) return false;
    diff += a - b;
  }
  return diff == 1;
}

DescentSet descent_set(const Composition& p) {
  DescentSet d;
  d.n = p.weight();
  int acc = 0;
  for (int i = 0; i + 1 < p.width(); ++i) {
    acc += p[i];
    d.elements.push_back(acc);
  }
  return d;
}

Composition composition_from_descents(const DescentSet& d) {
  if (d.n == 0) {
    if (!d.elements.empty()) throw std::invalid_argument("descents of n=0 must be empty");
    return {};
  }
  std::vector<int> parts;
  int prev = 0;
  for (int s : d.elements) {
    if (s <= prev || s >= d.n) throw std::invalid_argument("invalid descent set");
    parts.push_back(s - prev);
    prev = s;
  }
  parts.push_back(d.n - prev);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) return {};
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Composition> compositions_of_width(int n, int k) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n))
    if (c.width() == k) out.push_back(std::move(c));
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace compchains

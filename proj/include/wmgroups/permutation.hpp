#pragma once

#include "wmgroups/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wm {

/// A finitely supported permutation of the positive integers.
///
/// Stored as the sorted list of (point, image) pairs for moved points only,
/// so structural equality is equality of permutations. Products follow the
/// convention (p * q)(x) = p(q(x)).
class Permutation {
 public:
  using Point = std::uint32_t;
  using Pair = std::pair<Point, Point>;

  Permutation() = default;

  /// Builds from images of 1..n: images[i] is the image of i + 1.
  static Permutation from_images(const std::vector<Point>& images) {
    std::vector<bool> hit(images.size() + 1, false);
    Permutation p;
    for (std::size_t i = 0; i < images.size(); ++i) {
      const Point x = static_cast<Point>(i + 1);
      const Point y = images[i];
      if (y == 0 || y > images.size() || hit[y])
        throw PreconditionError("image list is not a permutation of 1..n");
      hit[y] = true;
      if (x != y) p.map_.emplace_back(x, y);
    }
    return p;
  }

  /// Product of the given cycles, rightmost applied first.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles) {
    Permutation result;
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
      result = cycle(*it) * result;
    return result;
  }

  static Permutation cycle(const std::vector<Point>& points) {
    std::vector<Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("repeated point in cycle");
    Permutation p;
    if (points.size() < 2) return p;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i] == 0) throw PreconditionError("points are positive integers");
      p.map_.emplace_back(points[i], points[(i + 1) % points.size()]);
    }
    std::sort(p.map_.begin(), p.map_.end());
    return p;
  }

  Point operator()(Point x) const {
    auto it = std::lower_bound(map_.begin(), map_.end(), Pair{x, 0},
                               [](const Pair& a, const Pair& b) { return a.first < b.first; });
    if (it != map_.end() && it->first == x) return it->second;
    return x;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    std::vector<Point> points;
    points.reserve(p.map_.size() + q.map_.size());
    for (const auto& [x, _] : p.map_) points.push_back(x);
    for (const auto& [x, _] : q.map_) points.push_back(x);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Permutation r;
    for (Point x : points) {
      const Point y = p(q(x));
      if (y != x) r.map_.emplace_back(x, y);
    }
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.map_.reserve(map_.size());
    for (const auto& [x, y] : map_) r.map_.emplace_back(y, x);
    std::sort(r.map_.begin(), r.map_.end());
    return r;
  }

  bool is_identity() const { return map_.empty(); }

  /// Moved points with their images, sorted by point.
  const std::vector<Pair>& support() const { return map_; }

  Point largest_moved_point() const { return map_.empty() ? 0 : map_.back().first; }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<Point> seen;
    for (const auto& [start, _] : map_) {
      if (std::binary_search(seen.begin(), seen.end(), start)) continue;
      std::vector<Point> c{start};
      for (Point x = (*this)(start); x != start; x = (*this)(x)) c.push_back(x);
      seen.insert(seen.end(), c.begin(), c.end());
      std::sort(seen.begin(), seen.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  bool is_even() const {
    std::size_t transpositions = 0;
    for (const auto& c : cycles()) transpositions += c.size() - 1;
    return transpositions % 2 == 0;
  }

  std::string to_string() const {
    if (map_.empty()) return "()";
    std::string s;
    for (const auto& c : cycles()) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  /// Parses disjoint or overlapping cycle notation, e.g. "(1 2)(3 4 5)" or
  /// "(1,2)". "()" is the identity.
  static Permutation parse(std::string_view text) {
    std::size_t pos = 0;
    Permutation p = parse_prefix(text, pos);
    skip_space(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after permutation", pos);
    return p;
  }

  /// Parses a maximal run of cycles starting at `pos`; advances `pos`.
  static Permutation parse_prefix(std::string_view text, std::size_t& pos) {
    std::vector<std::vector<Point>> cycles;
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    while (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<Point> c;
      for (;;) {
        skip_space(text, pos);
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        if (pos < text.size() && text[pos] == ',' && !c.empty()) {
          ++pos;
          continue;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
          throw ParseError("expected point or ')'", pos);
        std::uint64_t v = 0;
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
          if (v > 0xffffffffu) throw ParseError("point out of range", start);
          ++pos;
        }
        if (v == 0) throw ParseError("points are positive integers", start);
        c.push_back(static_cast<Point>(v));
      }
      try {
        cycles.push_back(std::move(c));
        (void)cycle(cycles.back());
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), pos);
      }
      const std::size_t save = pos;
      skip_space(text, pos);
      if (pos >= text.size() || text[pos] != '(') {
        pos = save;
        break;
      }
    }
    return from_cycles(cycles);
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  static void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  std::vector<Pair> map_;
};

}  // namespace wm

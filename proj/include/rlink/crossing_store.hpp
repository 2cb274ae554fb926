#pragma once

// Report-and-remove orthogonal crossing structure.
//
// Stores segments of one axis. A query with a segment of the other axis
// returns every stored segment it crosses and deletes them. Layout: a segment
// tree over the running axis whose leaves alternate between endpoint
// coordinates and the open gaps between them; every node keeps the segments
// canonically assigned to it in a set ordered by fixed coordinate.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rlink/graph.hpp"

namespace rlink {

struct StoredSegment {
  Segment seg;
  RectId  owner = 0;
};

class CrossingStore {
 public:
  explicit CrossingStore(Axis axis) : axis_(axis) {}

  CrossingStore(Axis axis, const std::vector<StoredSegment>& segments) : axis_(axis) {
    reset(segments);
  }

  [[nodiscard]] Axis        axis() const { return axis_; }
  [[nodiscard]] std::size_t size() const { return live_.size(); }
  [[nodiscard]] bool        empty() const { return live_.empty(); }

  /// Replaces the contents with `segments`; the coordinate universe becomes
  /// their endpoints.
  void reset(const std::vector<StoredSegment>& segments) {
    live_.clear();
    coords_.clear();
    for (const auto& s : segments) {
      check(s);
      coords_.push_back(s.seg.lo);
      coords_.push_back(s.seg.hi);
    }
    rebuild_tree();
    for (const auto& s : segments) insert(s);
  }

  /// Adds a segment. Throws on an axis mismatch, an empty interval or a
  /// duplicate owner.
  void insert(const StoredSegment& s) {
    check(s);
    if (live_.contains(s.owner)) throw std::invalid_argument("duplicate owner id in crossing store");
    if (!in_universe(s.seg.lo) || !in_universe(s.seg.hi)) {
      coords_.push_back(s.seg.lo);
      coords_.push_back(s.seg.hi);
      auto keep = std::move(live_);
      live_.clear();
      rebuild_tree();
      for (const auto& [id, t] : keep) place(t);
    }
    place(s);
  }

  /// Removes and returns every stored segment crossed by q (closed test).
  std::vector<StoredSegment> pop_crossing(const Segment& q) {
    if (q.axis == axis_) throw std::invalid_argument("query must be orthogonal to the store axis");
    std::vector<StoredSegment> found;
    if (live_.empty()) return found;
    const auto leaf = leaf_of(q.fixed);
    if (leaf < 0) return found;

    std::size_t node = 1;
    std::size_t lo = 0;
    std::size_t hi = leaves_ - 1;
    while (true) {
      auto& bucket = tree_[node];
      for (auto it = bucket.lower_bound({q.lo, 0}); it != bucket.end() && it->first <= q.hi; ++it) {
        found.push_back(live_.at(it->second));
      }
      if (lo == hi) break;
      const std::size_t mid = (lo + hi) / 2;
      if (static_cast<std::size_t>(leaf) <= mid) {
        node = 2 * node;
        hi = mid;
      } else {
        node = 2 * node + 1;
        lo = mid + 1;
      }
    }
    for (const auto& s : found) erase(s);
    std::sort(found.begin(), found.end(),
              [](const StoredSegment& a, const StoredSegment& b) { return a.owner < b.owner; });
    return found;
  }

 private:
  void check(const StoredSegment& s) const {
    if (s.seg.axis != axis_) throw std::invalid_argument("segment axis does not match the store");
    if (s.seg.lo >= s.seg.hi) throw std::invalid_argument("segment with lo >= hi");
  }

  [[nodiscard]] bool in_universe(Coord c) const {
    return std::binary_search(coords_.begin(), coords_.end(), c);
  }

  void rebuild_tree() {
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
    leaves_ = coords_.empty() ? 1 : 2 * coords_.size() - 1;
    tree_.assign(4 * leaves_, {});
  }

  // Leaf 2k is coordinate k, leaf 2k+1 is the gap after it; -1 when outside.
  [[nodiscard]] long leaf_of(Coord c) const {
    if (coords_.empty() || c < coords_.front() || c > coords_.back()) return -1;
    const auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
    const auto k = static_cast<long>(it - coords_.begin());
    return *it == c ? 2 * k : 2 * k - 1;
  }

  template <typename Fn>
  void for_canonical(std::size_t node, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b,
                     Fn&& fn) {
    if (b < lo || hi < a) return;
    if (a <= lo && hi <= b) {
      fn(tree_[node]);
      return;
    }
    const std::size_t mid = (lo + hi) / 2;
    for_canonical(2 * node, lo, mid, a, b, fn);
    for_canonical(2 * node + 1, mid + 1, hi, a, b, fn);
  }

  void place(const StoredSegment& s) {
    live_.emplace(s.owner, s);
    const auto a = static_cast<std::size_t>(leaf_of(s.seg.lo));
    const auto b = static_cast<std::size_t>(leaf_of(s.seg.hi));
    for_canonical(1, 0, leaves_ - 1, a, b,
                  [&](Bucket& bucket) { bucket.emplace(s.seg.fixed, s.owner); });
  }

  void erase(const StoredSegment& s) {
    const auto a = static_cast<std::size_t>(leaf_of(s.seg.lo));
    const auto b = static_cast<std::size_t>(leaf_of(s.seg.hi));
    for_canonical(1, 0, leaves_ - 1, a, b,
                  [&](Bucket& bucket) { bucket.erase({s.seg.fixed, s.owner}); });
    live_.erase(s.owner);
  }

  using Bucket = std::set<std::pair<Coord, RectId>>;

  Axis                                      axis_;
  std::vector<Coord>                        coords_;
  std::size_t                               leaves_ = 1;
  std::vector<Bucket>                       tree_{4};
  std::unordered_map<RectId, StoredSegment> live_;
};

}  // namespace rlink

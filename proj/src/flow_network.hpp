#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace kempe::detail {

// Residual network with Edmonds-Karp augmentation. Arcs are scanned in
// insertion order, so callers control tie-breaking by the order in which
// they add arcs.
class FlowNetwork {
 public:
  using cap_t = std::int64_t;
  static constexpr cap_t kInfinite = std::numeric_limits<cap_t>::max() / 4;

  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  std::size_t size() const { return out_.size(); }

  // Returns the id of the forward arc; its reverse is id ^ 1.
  std::size_t add_arc(std::size_t from, std::size_t to, cap_t cap, cap_t back_cap = 0) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, cap, cap});
    arcs_.push_back({from, back_cap, back_cap});
    out_[from].push_back(id);
    out_[to].push_back(id + 1);
    return id;
  }

  std::size_t head(std::size_t arc) const { return arcs_[arc].to; }
  std::size_t tail(std::size_t arc) const { return arcs_[arc ^ 1].to; }
  const std::vector<std::size_t>& out_arcs(std::size_t node) const { return out_[node]; }

  // Net flow pushed along `arc` (negative when pushed along its reverse).
  cap_t flow(std::size_t arc) const { return arcs_[arc].cap - arcs_[arc].residual; }

  cap_t max_flow(std::size_t source, std::size_t sink, cap_t limit = kInfinite) {
    cap_t total = 0;
    std::vector<std::size_t> via(size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), kNone);
      std::queue<std::size_t> queue;
      queue.push(source);
      via[source] = kRoot;
      while (!queue.empty() && via[sink] == kNone) {
        const std::size_t x = queue.front();
        queue.pop();
        for (std::size_t a : out_[x]) {
          const std::size_t y = arcs_[a].to;
          if (arcs_[a].residual > 0 && via[y] == kNone) {
            via[y] = a;
            queue.push(y);
          }
        }
      }
      if (via[sink] == kNone) break;
      cap_t push = limit - total;
      for (std::size_t y = sink; y != source; y = tail(via[y])) {
        push = std::min(push, arcs_[via[y]].residual);
      }
      for (std::size_t y = sink; y != source; y = tail(via[y])) {
        arcs_[via[y]].residual -= push;
        arcs_[via[y] ^ 1].residual += push;
      }
      total += push;
    }
    return total;
  }

  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t a : out_[x]) {
        const std::size_t y = arcs_[a].to;
        if (arcs_[a].residual > 0 && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kRoot = kNone - 1;

  struct Arc {
    std::size_t to;
    cap_t residual;
    cap_t cap;
  };

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace kempe::detail

#include "kempe/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "kempe/errors.hpp"
#include "solver_internal.hpp"

namespace kempe {

namespace {

constexpr int kUnassigned = -1;

class Search {
 public:
  Search(const Multigraph& h, const EdgeSet& t, const OracleBudget& budget)
      : t_(t), budget_(budget), k_(static_cast<int>(t.size())), pin_index_(t.size()) {
    std::vector<std::int32_t> slot(h.fresh_vertex().value, -1);
    for (std::size_t i = 0; i < h.num_vertices(); ++i) {
      slot[h.vertices()[i].value] = static_cast<std::int32_t>(i);
    }
    for (const EdgeRecord& e : h.edges()) {
      ids_.push_back(e.id);
      ends_.push_back((std::uint64_t{1} << slot[e.u.value]) | (std::uint64_t{1} << slot[e.v.value]));
      const auto pinned = std::find(t.begin(), t.end(), e.id);
      if (pinned != t.end()) {
        assignment_.push_back(static_cast<int>(pinned - t.begin()));
        pin_index_[pinned - t.begin()] = assignment_.size() - 1;
      } else {
        assignment_.push_back(kUnassigned);
        free_.push_back(assignment_.size() - 1);
      }
    }
  }

  OracleResult run() {
    OracleResult result;
    if (feasible_so_far()) {
      switch (descend(0)) {
        case Outcome::Found: {
          result.status = OracleStatus::Found;
          BagSystem bags;
          bags.bags.resize(t_.size());
          for (std::size_t e = 0; e < ids_.size(); ++e) {
            if (assignment_[e] >= 0 && assignment_[e] < k_) bags.bags[assignment_[e]].push_back(ids_[e]);
          }
          result.bags = std::move(bags);
          break;
        }
        case Outcome::Exhausted: result.status = OracleStatus::Infeasible; break;
        case Outcome::OutOfBudget: result.status = OracleStatus::BudgetExceeded; break;
      }
    }
    result.explored = explored_;
    return result;
  }

 private:
  enum class Outcome { Found, Exhausted, OutOfBudget };

  Outcome descend(std::size_t next) {
    if (next == free_.size()) return Outcome::Found;
    const std::size_t e = free_[next];
    // bags first, "unused" (= k) last
    for (int choice = 0; choice <= k_; ++choice) {
      if (++explored_ > budget_.max_assignments) return Outcome::OutOfBudget;
      assignment_[e] = choice;
      if (feasible_so_far()) {
        const Outcome inner = descend(next + 1);
        if (inner != Outcome::Exhausted) return inner;
      }
    }
    assignment_[e] = kUnassigned;
    return Outcome::Exhausted;
  }

  // Every bag must still be completable to a connected set through
  // unassigned edges, and any two bags must still be able to meet.
  bool feasible_so_far() {
    reach_.assign(k_, 0);
    for (int bag = 0; bag < k_; ++bag) {
      std::uint64_t reach = ends_[pin_index_[bag]];
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t e = 0; e < ids_.size(); ++e) {
          const int owner = assignment_[e];
          if (owner != bag && owner != kUnassigned) continue;
          if ((ends_[e] & reach) != 0 && (ends_[e] & ~reach) != 0) {
            reach |= ends_[e];
            grew = true;
          }
        }
      }
      for (std::size_t e = 0; e < ids_.size(); ++e) {
        if (assignment_[e] == bag && (ends_[e] & ~reach) != 0) return false;
      }
      reach_[bag] = reach;
    }
    for (int a = 0; a < k_; ++a) {
      for (int b = a + 1; b < k_; ++b) {
        if ((reach_[a] & reach_[b]) == 0) return false;
      }
    }
    return true;
  }

  const EdgeSet& t_;
  const OracleBudget& budget_;
  int k_;
  std::vector<std::size_t> pin_index_;
  std::vector<EdgeId> ids_;
  std::vector<std::uint64_t> ends_;
  std::vector<int> assignment_;
  std::vector<std::size_t> free_;
  std::vector<std::uint64_t> reach_;
  std::uint64_t explored_ = 0;
};

}  // namespace

OracleResult oracle_solve(const Multigraph& h, const EdgeSet& t, const OracleBudget& budget) {
  if (t.empty()) throw InvalidInput("oracle needs a nonempty T");
  if (normalized(t) != t) throw InvalidInput("T must be sorted and duplicate-free");
  for (EdgeId e : t) {
    if (!h.has_edge(e)) throw InvalidInput("T edge " + to_string(e) + " is not in H");
  }
  if (h.num_vertices() > 64) throw InvalidInput("oracle handles at most 64 vertices");
  if (h.num_edges() > budget.max_edges) {
    OracleResult over;
    over.status = OracleStatus::BudgetExceeded;
    return over;
  }

  OracleResult result = Search(h, t, budget).run();
  if (result.bags) {
    const Verdict verdict = verify_bags(h, t, *result.bags);
    detail::require(verdict.accepted(), "oracle bags verify");
  }
  return result;
}

}  // namespace kempe

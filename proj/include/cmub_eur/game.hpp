#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cmub_eur/mub.hpp"
#include "cmub_eur/qstate.hpp"

namespace cmub {

// Assignment of each basis of a complete MUB set to one of n memories.
// Every basis appears exactly once and every memory gets at least one basis;
// violations throw ValidationError("partition").
class Partition {
 public:
  // groups[t] lists the 0-based basis indices announced to memory t.
  Partition(std::vector<std::vector<int>> groups, int num_bases);

  // Text form: groups separated by '|', 1-based basis indices separated by
  // ',' within a group. "1|2,3" sends basis 1 to the first memory and bases
  // 2 and 3 to the second.
  static Partition parse(std::string_view text, int num_bases);
  // All bases announced to a single memory.
  static Partition single(int num_bases);
  // Basis i announced to memory i.
  static Partition singletons(int num_bases);

  int num_memories() const { return static_cast<int>(groups_.size()); }
  int num_bases() const { return static_cast<int>(owner_.size()); }
  const std::vector<int>& group(int t) const { return groups_.at(t); }
  const std::vector<std::vector<int>>& groups() const { return groups_; }
  int cardinality(int t) const { return static_cast<int>(group(t).size()); }
  int memory_of(int basis) const { return owner_.at(basis); }

  std::string to_string() const;

 private:
  std::vector<std::vector<int>> groups_;
  std::vector<int> owner_;
};

// Everything one evaluation of the uncertainty game needs: the shared state,
// which subsystem Alice measures, the memory held by each Bob, the complete
// MUB set and which Bob is told about which basis.
class GameScenario {
 public:
  GameScenario(QuantumState state, std::string measured, LabelSet memories,
               MubSet mubs, Partition partition);

  const QuantumState& state() const { return state_; }
  const std::string& measured() const { return measured_; }
  const LabelSet& memories() const { return memories_; }
  const MubSet& mubs() const { return mubs_; }
  const Partition& partition() const { return partition_; }
  int dim() const { return mubs_.dim(); }

 private:
  QuantumState state_;
  std::string measured_;
  LabelSet memories_;
  MubSet mubs_;
  Partition partition_;
};

}  // namespace cmub

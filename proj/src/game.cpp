#include "cmub_eur/game.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "cmub_eur/errors.hpp"

namespace cmub {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<std::vector<int>> groups, int num_bases)
    : groups_(std::move(groups)), owner_(static_cast<std::size_t>(num_bases), -1) {
  if (num_bases < 1) throw ValidationError("partition", "no bases to assign");
  if (groups_.empty()) throw ValidationError("partition", "no memories given");
  for (std::size_t t = 0; t < groups_.size(); ++t) {
    if (groups_[t].empty()) {
      throw ValidationError("partition", "memory " + std::to_string(t + 1) +
                                             " receives no basis");
    }
    for (int b : groups_[t]) {
      if (b < 0 || b >= num_bases) {
        throw ValidationError("partition",
                              "basis " + std::to_string(b + 1) +
                                  " is out of range 1.." +
                                  std::to_string(num_bases));
      }
      if (owner_[static_cast<std::size_t>(b)] != -1) {
        throw ValidationError("partition", "basis " + std::to_string(b + 1) +
                                               " is assigned twice");
      }
      owner_[static_cast<std::size_t>(b)] = static_cast<int>(t);
    }
  }
  for (int b = 0; b < num_bases; ++b) {
    if (owner_[static_cast<std::size_t>(b)] == -1) {
      throw ValidationError("partition", "basis " + std::to_string(b + 1) +
                                             " is not assigned to any memory");
    }
  }
}

Partition Partition::parse(std::string_view text, int num_bases) {
  std::vector<std::vector<int>> groups;
  for (std::string_view part : split(text, '|')) {
    std::vector<int> group;
    part = trim(part);
    if (part.empty()) {
      throw ValidationError("partition", "empty group in '" +
                                             std::string(text) + "'");
    }
    for (std::string_view tok : split(part, ',')) {
      tok = trim(tok);
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ValidationError("partition", "cannot parse basis index '" +
                                               std::string(tok) + "'");
      }
      group.push_back(value - 1);
    }
    groups.push_back(std::move(group));
  }
  return Partition(std::move(groups), num_bases);
}

Partition Partition::single(int num_bases) {
  std::vector<int> all(static_cast<std::size_t>(num_bases));
  for (int i = 0; i < num_bases; ++i) all[static_cast<std::size_t>(i)] = i;
  return Partition({all}, num_bases);
}

Partition Partition::singletons(int num_bases) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < num_bases; ++i) groups.push_back({i});
  return Partition(std::move(groups), num_bases);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < groups_.size(); ++t) {
    if (t) os << '|';
    for (std::size_t k = 0; k < groups_[t].size(); ++k) {
      if (k) os << ',';
      os << groups_[t][k] + 1;
    }
  }
  return os.str();
}

GameScenario::GameScenario(QuantumState state, std::string measured,
                           LabelSet memories, MubSet mubs, Partition partition)
    : state_(std::move(state)),
      measured_(std::move(measured)),
      memories_(std::move(memories)),
      mubs_(std::move(mubs)),
      partition_(std::move(partition)) {
  if (!state_.has_label(measured_)) {
    throw ValidationError("scenario", "measured subsystem '" + measured_ +
                                          "' is not in the state");
  }
  if (state_.dim_of(measured_) != mubs_.dim()) {
    throw ValidationError(
        "scenario", "measured subsystem has dimension " +
                        std::to_string(state_.dim_of(measured_)) +
                        " but the MUB set has dimension " +
                        std::to_string(mubs_.dim()));
  }
  std::set<std::string> seen;
  for (const auto& m : memories_) {
    if (m == measured_) {
      throw ValidationError("scenario",
                            "memory '" + m + "' is the measured subsystem");
    }
    if (!state_.has_label(m)) {
      throw ValidationError("scenario", "memory '" + m + "' is not in the state");
    }
    if (!seen.insert(m).second) {
      throw ValidationError("scenario", "memory '" + m + "' listed twice");
    }
  }
  if (partition_.num_memories() != static_cast<int>(memories_.size())) {
    throw ValidationError(
        "partition", "partition has " +
                         std::to_string(partition_.num_memories()) +
                         " groups but the scenario has " +
                         std::to_string(memories_.size()) + " memories");
  }
  if (partition_.num_bases() != static_cast<int>(mubs_.size())) {
    throw ValidationError(
        "partition", "partition covers " +
                         std::to_string(partition_.num_bases()) +
                         " bases but the MUB set has " +
                         std::to_string(mubs_.size()));
  }
}

}  // namespace cmub

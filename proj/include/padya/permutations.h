#pragma once

// Word orders for the composer: the given order first, then arrangements by
// increasing number of swaps away from it. Repeated words are treated as
// interchangeable, so each distinct arrangement appears once.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace padya {

// Index permutation of the original words. Among equal words the earliest
// original index takes the earliest slot.
using Arrangement = std::vector<std::size_t>;

struct PermutationLevel {
  int swaps = 0;
  std::vector<Arrangement> arrangements;  // lexicographic
};

class PermutationOrder {
 public:
  // `keys` identify equal words (e.g. their surfaces). At most `limit`
  // arrangements are ever produced, which keeps the last level bounded.
  explicit PermutationOrder(const std::vector<std::string>& keys,
                            std::size_t limit = static_cast<std::size_t>(-1));

  // Next arrangement, or false once every arrangement has been produced.
  bool next(Arrangement& out);
  // Swap distance of the arrangement last returned.
  int current_swaps() const { return level_.swaps; }
  std::size_t produced() const { return produced_; }

  // Number of distinct arrangements (n! / Π multiplicity!).
  static double total(const std::vector<std::string>& keys);

 private:
  void advance_level();

  std::vector<std::size_t> class_of_;  // word index → equality class
  std::size_t limit_;
  PermutationLevel previous_;
  PermutationLevel level_;
  std::size_t cursor_ = 0;
  std::size_t produced_ = 0;
  bool done_ = false;
};

// The first `limit` arrangements in order.
std::vector<Arrangement> first_arrangements(const std::vector<std::string>& keys, std::size_t limit);

}  // namespace padya

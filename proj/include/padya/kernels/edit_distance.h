#pragma once

// Bit-parallel (Myers/Hyyrö) global edit distance between one query pāda
// and every template in a packed bank. Unit costs; '*' on either side
// matches both l and g at zero cost. Templates are at most 32 symbols.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padya/phonology.h"

namespace padya::kernels {

inline constexpr std::size_t kMaxTemplateLength = 32;
inline constexpr std::size_t kLaneWidth = 8;

// Structure-of-arrays template storage, padded to a multiple of kLaneWidth.
class TemplateBank {
 public:
  // Returns the slot index. Throws kInvalidArgument for empty or >32 symbols.
  std::size_t add(const LgPattern& pattern);

  std::size_t size() const { return count_; }
  std::size_t padded_size() const { return length_.size(); }

  const std::uint32_t* eq_laghu() const { return eq_l_.data(); }
  const std::uint32_t* eq_guru() const { return eq_g_.data(); }
  const std::uint32_t* lengths() const { return length_.data(); }

 private:
  std::vector<std::uint32_t> eq_l_;
  std::vector<std::uint32_t> eq_g_;
  std::vector<std::uint32_t> length_;
  std::size_t count_ = 0;
};

enum class Isa { kScalar, kAvx2 };

const char* to_string(Isa isa);

// `out` must hold bank.size() entries.
void edit_distances_scalar(std::span<const Symbol> query, const TemplateBank& bank,
                           std::span<std::int32_t> out);
void edit_distances_avx2(std::span<const Symbol> query, const TemplateBank& bank,
                         std::span<std::int32_t> out);

// Runtime-selected variant.
void edit_distances(std::span<const Symbol> query, const TemplateBank& bank,
                    std::span<std::int32_t> out);

bool isa_available(Isa isa);
Isa active_isa();
// Pins the dispatcher to one variant (nullopt restores auto-detection).
// PADYA_FORCE_SCALAR=1 in the environment has the same effect at startup.
void force_isa(std::optional<Isa> isa);

}  // namespace padya::kernels

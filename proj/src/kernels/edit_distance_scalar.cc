#include "padya/error.h"
#include "padya/kernels/edit_distance.h"

namespace padya::kernels {

std::size_t TemplateBank::add(const LgPattern& pattern) {
  if (pattern.empty() || pattern.size() > kMaxTemplateLength) {
    throw Error(ErrorCode::kInvalidArgument, "template length out of range: " + pattern.str());
  }
  std::uint32_t eq_l = 0;
  std::uint32_t eq_g = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const std::uint32_t bit = 1u << i;
    if (pattern[i] != Symbol::kGuru) eq_l |= bit;
    if (pattern[i] != Symbol::kLaghu) eq_g |= bit;
  }

  const std::size_t slot = count_++;
  if (slot == length_.size()) {
    // Padding lanes hold a one-symbol template; their results are dropped.
    eq_l_.resize(slot + kLaneWidth, 1u);
    eq_g_.resize(slot + kLaneWidth, 1u);
    length_.resize(slot + kLaneWidth, 1u);
  }
  eq_l_[slot] = eq_l;
  eq_g_[slot] = eq_g;
  length_[slot] = static_cast<std::uint32_t>(pattern.size());
  return slot;
}

const char* to_string(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void edit_distances_scalar(std::span<const Symbol> query, const TemplateBank& bank,
                           std::span<std::int32_t> out) {
  const std::uint32_t* eq_l = bank.eq_laghu();
  const std::uint32_t* eq_g = bank.eq_guru();
  const std::uint32_t* len = bank.lengths();

  for (std::size_t t = 0; t < bank.size(); ++t) {
    const std::uint32_t top = len[t] - 1;
    std::uint32_t pv = ~0u;
    std::uint32_t mv = 0;
    std::int32_t score = static_cast<std::int32_t>(len[t]);
    for (Symbol s : query) {
      const std::uint32_t eq = s == Symbol::kLaghu ? eq_l[t] : s == Symbol::kGuru ? eq_g[t] : ~0u;
      const std::uint32_t xv = eq | mv;
      const std::uint32_t xh = (((eq & pv) + pv) ^ pv) | eq;
      std::uint32_t ph = mv | ~(xh | pv);
      std::uint32_t mh = pv & xh;
      score += static_cast<std::int32_t>((ph >> top) & 1u);
      score -= static_cast<std::int32_t>((mh >> top) & 1u);
      ph = (ph << 1) | 1u;
      mh <<= 1;
      pv = mh | ~(xv | ph);
      mv = ph & xv;
    }
    out[t] = score;
  }
}

}  // namespace padya::kernels

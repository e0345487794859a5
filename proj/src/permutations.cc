#include "padya/permutations.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace padya {
namespace {

// Re-labels equal words so that, within each class, original indices appear
// in increasing position order.
void canonicalize(Arrangement& a, const std::vector<std::size_t>& class_of) {
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t idx : a) members[class_of[idx]].push_back(idx);
  for (auto& [cls, idx] : members) std::sort(idx.begin(), idx.end());
  std::map<std::size_t, std::size_t> next;
  for (std::size_t& idx : a) {
    const std::size_t cls = class_of[idx];
    idx = members[cls][next[cls]++];
  }
}

}  // namespace

PermutationOrder::PermutationOrder(const std::vector<std::string>& keys, std::size_t limit)
    : limit_(limit) {
  std::map<std::string, std::size_t> ids;
  for (const auto& k : keys) class_of_.push_back(ids.emplace(k, ids.size()).first->second);
  Arrangement identity(keys.size());
  std::iota(identity.begin(), identity.end(), 0);
  level_.arrangements.push_back(std::move(identity));
  if (limit_ == 0) done_ = true;
}

void PermutationOrder::advance_level() {
  const std::size_t remaining = limit_ - produced_;
  const std::set<Arrangement> seen_prev(previous_.arrangements.begin(), previous_.arrangements.end());
  const std::set<Arrangement> seen_cur(level_.arrangements.begin(), level_.arrangements.end());
  std::set<Arrangement> next;
  const std::size_t n = class_of_.size();
  for (const Arrangement& a : level_.arrangements) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (class_of_[a[i]] == class_of_[a[j]]) continue;
        Arrangement b = a;
        std::swap(b[i], b[j]);
        canonicalize(b, class_of_);
        if (seen_prev.count(b) || seen_cur.count(b)) continue;
        // Only the `remaining` smallest survive; they are all that can be used.
        if (next.size() == remaining && !(b < *next.rbegin())) continue;
        if (next.insert(std::move(b)).second && next.size() > remaining) next.erase(std::prev(next.end()));
      }
    }
  }
  previous_ = std::move(level_);
  level_.swaps = previous_.swaps + 1;
  level_.arrangements.assign(next.begin(), next.end());
  cursor_ = 0;
}

bool PermutationOrder::next(Arrangement& out) {
  if (done_) return false;
  if (cursor_ == level_.arrangements.size()) {
    advance_level();
    if (level_.arrangements.empty()) {
      done_ = true;
      return false;
    }
  }
  out = level_.arrangements[cursor_++];
  if (++produced_ >= limit_) done_ = true;
  return true;
}

double PermutationOrder::total(const std::vector<std::string>& keys) {
  std::map<std::string, int> mult;
  for (const auto& k : keys) ++mult[k];
  double t = std::tgamma(static_cast<double>(keys.size()) + 1.0);
  for (const auto& [k, m] : mult) t /= std::tgamma(m + 1.0);
  return std::round(t);
}

std::vector<Arrangement> first_arrangements(const std::vector<std::string>& keys, std::size_t limit) {
  PermutationOrder order(keys, limit);
  std::vector<Arrangement> out;
  Arrangement a;
  while (order.next(a)) out.push_back(a);
  return out;
}

}  // namespace padya

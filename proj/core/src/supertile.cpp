#include "tam/supertile.hpp"

#include <array>
#include <atomic>

namespace tam {
namespace {
constexpr std::uint64_t kMaxGridArea = 1u << 22;
}  // namespace

// 0 = unknown, 1 = unstable, 2 = stable; indexed by temperature.
struct Supertile::StabilityCache {
  std::array<std::atomic<std::int8_t>, 16> verdicts{};
};

Supertile::Supertile(const Assembly& a)
    : canonical_(canonicalize(a).assembly), stability_(std::make_shared<StabilityCache>()) {
  const auto& box = canonical_.bounds();
  width_ = box.width();
  height_ = box.height();
  auto area = static_cast<std::uint64_t>(width_) * static_cast<std::uint64_t>(height_);
  if (area <= kMaxGridArea) grid_.assign(area, -1);

  key_.reserve(canonical_.size() * 8);
  for (const auto& p : canonical_.placements()) {
    if (!grid_.empty()) {
      grid_[static_cast<std::size_t>(p.pos.y) * width_ + p.pos.x] = static_cast<std::int32_t>(p.tile);
    }
    key_ += std::to_string(p.pos.x);
    key_ += ',';
    key_ += std::to_string(p.pos.y);
    key_ += ',';
    key_ += std::to_string(p.tile);
    key_ += ';';
  }
  key_.pop_back();
}

std::optional<bool> Supertile::cached_stability(int tau) const {
  if (tau < 0 || static_cast<std::size_t>(tau) >= stability_->verdicts.size()) return std::nullopt;
  auto v = stability_->verdicts[tau].load(std::memory_order_relaxed);
  if (v == 0) return std::nullopt;
  return v == 2;
}

void Supertile::cache_stability(int tau, bool stable) const {
  if (tau < 0 || static_cast<std::size_t>(tau) >= stability_->verdicts.size()) return;
  stability_->verdicts[tau].store(stable ? 2 : 1, std::memory_order_relaxed);
}

}  // namespace tam

#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace minorlab {

// Hop-count distance with an explicit unreachable sentinel.  The sentinel
// behaves like +infinity: it absorbs addition, compares greater than every
// finite value and survives decrement.  The raw representation never leaks.
class Dist {
 public:
  constexpr Dist() : v_(0) {}

  static constexpr Dist finite(int hops) {
    assert(hops >= 0);
    return Dist(hops);
  }
  static constexpr Dist unreachable() { return Dist(kUnreachable); }

  constexpr bool is_unreachable() const { return v_ == kUnreachable; }
  constexpr bool is_finite() const { return v_ != kUnreachable; }

  constexpr int hops() const {
    assert(is_finite());
    return v_;
  }

  friend constexpr Dist operator+(Dist a, Dist b) {
    if (a.is_unreachable() || b.is_unreachable()) return unreachable();
    return Dist(a.v_ + b.v_);
  }

  friend constexpr bool operator==(Dist a, Dist b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Dist a, Dist b) { return a.v_ != b.v_; }

  friend constexpr bool operator<(Dist a, Dist b) {
    if (a.is_unreachable()) return false;
    if (b.is_unreachable()) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(Dist a, Dist b) { return a < b || a == b; }
  friend constexpr bool operator>(Dist a, Dist b) { return b < a; }
  friend constexpr bool operator>=(Dist a, Dist b) { return b <= a; }

  static constexpr Dist min(Dist a, Dist b) { return a < b ? a : b; }

  // One hop shorter; the sentinel stays put.
  constexpr Dist minus_one() const {
    if (is_unreachable()) return *this;
    assert(v_ >= 1);
    return Dist(v_ - 1);
  }

  std::string str() const {
    return is_unreachable() ? "inf" : std::to_string(v_);
  }

 private:
  static constexpr std::int32_t kUnreachable = -1;
  explicit constexpr Dist(std::int32_t raw) : v_(raw) {}
  std::int32_t v_;
};

}  // namespace minorlab

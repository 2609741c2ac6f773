#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace spanlift {

// Exact value in (1/2)Z. Stored as twice the value so genus and linking
// arithmetic never touches floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt{twice}; }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }

  // Accepts "k", "-k" or "k/2".
  static std::optional<HalfInt> parse(std::string_view text) {
    auto to_int = [](std::string_view s) -> std::optional<std::int64_t> {
      if (s.empty()) return std::nullopt;
      std::size_t i = 0;
      bool neg = false;
      if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) return std::nullopt;
      std::int64_t v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        v = v * 10 + (s[i] - '0');
      }
      return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      auto v = to_int(text);
      if (!v) return std::nullopt;
      return from_int(*v);
    }
    if (text.substr(slash + 1) != "2") return std::nullopt;
    auto num = to_int(text.substr(0, slash));
    if (!num) return std::nullopt;
    return from_twice(*num);
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr std::int64_t as_integer() const { return twice_ / 2; }

  // Numerator over the reduced denominator (1 or 2).
  constexpr std::int64_t numerator() const { return is_integer() ? twice_ / 2 : twice_; }
  constexpr std::int64_t denominator() const { return is_integer() ? 1 : 2; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return HalfInt{-twice_}; }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice_ + o.twice_}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice_ - o.twice_}; }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace spanlift

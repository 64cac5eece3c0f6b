#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kfk/error.hpp"

namespace kfk {

/// A letter of the free group on x, y.
enum class Letter : std::uint8_t { x, X, y, Y };

constexpr Letter inverse(Letter l) noexcept {
  switch (l) {
    case Letter::x: return Letter::X;
    case Letter::X: return Letter::x;
    case Letter::y: return Letter::Y;
    case Letter::Y: return Letter::y;
  }
  return l;
}

constexpr char to_char(Letter l) noexcept {
  constexpr char table[] = {'x', 'X', 'y', 'Y'};
  return table[static_cast<int>(l)];
}

/// Exponent of x (resp. y) carried by one letter.
constexpr int x_exponent(Letter l) noexcept { return l == Letter::x ? 1 : l == Letter::X ? -1 : 0; }
constexpr int y_exponent(Letter l) noexcept { return l == Letter::y ? 1 : l == Letter::Y ? -1 : 0; }

/// A word in x^{+-1}, y^{+-1}. Serialized compactly: X = x^-1, Y = y^-1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'x': letters.push_back(Letter::x); break;
        case 'X': letters.push_back(Letter::X); break;
        case 'y': letters.push_back(Letter::y); break;
        case 'Y': letters.push_back(Letter::Y); break;
        default:
          throw Error(ErrorCode::InvalidInput, std::string("bad letter '") + c + "' in word");
      }
    }
    return Word(std::move(letters));
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  Word inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = kfk::inverse(l);
    return Word(std::move(out));
  }

  bool is_freely_reduced() const noexcept {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i] == kfk::inverse(letters_[i - 1])) return false;
    return true;
  }

  bool is_cyclically_reduced() const noexcept {
    if (!is_freely_reduced()) return false;
    return letters_.size() < 2 || letters_.front() != kfk::inverse(letters_.back());
  }

  std::int64_t x_sum() const noexcept {
    std::int64_t s = 0;
    for (auto l : letters_) s += x_exponent(l);
    return s;
  }
  std::int64_t y_sum() const noexcept {
    std::int64_t s = 0;
    for (auto l : letters_) s += y_exponent(l);
    return s;
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) s.push_back(to_char(l));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

 private:
  std::vector<Letter> letters_;
};

/// Free reduction (stack cancellation of adjacent inverse pairs).
inline Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

/// Free reduction followed by stripping conjugating letters from both ends.
/// The result is conjugate to the input. Throws TrivialRelator if nothing
/// survives.
inline Word cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  const auto& l = reduced.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == inverse(l[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo >= hi) throw Error(ErrorCode::TrivialRelator, "word reduces to the identity");
  return Word(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(lo),
                                  l.begin() + static_cast<std::ptrdiff_t>(hi)));
}

}  // namespace kfk

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <vector>

#include "permtest/caps.hpp"

namespace permtest {

/// A generator index (1-based) with an exponent of +1 or -1.
struct Letter {
  std::uint32_t generator = 1;
  int sign = 1;

  constexpr Letter inverse() const noexcept { return Letter{generator, -sign}; }
  constexpr bool positive() const noexcept { return sign > 0; }

  friend constexpr bool operator==(Letter, Letter) = default;
  /// Orders by generator, then the positive letter before its inverse.
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

/// A freely reduced word over s_1^{±1}, ..., s_d^{±1}.
///
/// The letters are stored left to right. Acting on a point, the rightmost
/// letter is applied first. Words compare by length, then lexicographically
/// by Letter order, so the empty word is the least element.
class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary letter sequence.
  static Word from_letters(std::span<const Letter> letters);
  static Word from_letters(std::initializer_list<Letter> letters);
  static Word generator(std::uint32_t index, int sign = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  /// Largest generator index that occurs, or 0 for the empty word.
  std::uint32_t max_generator() const noexcept;
  bool has_negative_letter() const noexcept;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other);
  Word power(int exponent) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// Free reduction of a letter sequence.
Word reduce(std::span<const Letter> letters);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Duplicate-free word collection that remembers insertion order.
class WordSet {
 public:
  WordSet() = default;
  WordSet(std::initializer_list<Word> words);

  bool insert(const Word& w);
  bool contains(const Word& w) const { return index_.count(w) != 0; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  /// Words sorted in canonical order.
  std::vector<Word> sorted() const;
  /// Sum of word lengths.
  std::size_t total_length() const;

  WordSet& merge(const WordSet& other);

 private:
  std::vector<Word> words_;
  std::unordered_set<Word, WordHash> index_;
};

/// All reduced words of length at most `radius` over d generators, in canonical order.
///
/// Throws InfeasibleError when the count exceeds `caps.words`.
WordSet ball(std::uint32_t d, std::size_t radius, const Caps& caps = {});

/// Number of reduced words of length at most `radius` over d generators.
std::uint64_t ball_size(std::uint32_t d, std::size_t radius);

}  // namespace permtest

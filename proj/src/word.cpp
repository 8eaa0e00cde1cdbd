#include "permtest/word.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "permtest/errors.hpp"

namespace permtest {

Word reduce(std::span<const Letter> letters) { return Word::from_letters(letters); }

Word Word::from_letters(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.generator == 0 || (l.sign != 1 && l.sign != -1)) {
      throw ValidationError("invalid letter (generator " + std::to_string(l.generator) + ", sign " +
                            std::to_string(l.sign) + ")");
    }
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word Word::from_letters(std::initializer_list<Letter> letters) {
  return from_letters(std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::generator(std::uint32_t index, int sign) { return from_letters({Letter{index, sign}}); }

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

std::uint32_t Word::max_generator() const noexcept {
  std::uint32_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

bool Word::has_negative_letter() const noexcept {
  return std::any_of(letters_.begin(), letters_.end(), [](const Letter& l) { return !l.positive(); });
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  for (const Letter& l : b.letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word& Word::operator*=(const Word& other) {
  *this = *this * other;
  return *this;
}

Word Word::power(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  int count = exponent < 0 ? -exponent : exponent;
  Word out;
  for (int i = 0; i < count; ++i) out *= base;
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.length();
  for (const Letter& l : w.letters()) {
    std::size_t v = (static_cast<std::size_t>(l.generator) << 1) | (l.sign > 0 ? 0U : 1U);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

WordSet::WordSet(std::initializer_list<Word> words) {
  for (const Word& w : words) insert(w);
}

bool WordSet::insert(const Word& w) {
  if (!index_.insert(w).second) return false;
  words_.push_back(w);
  return true;
}

std::vector<Word> WordSet::sorted() const {
  std::vector<Word> out = words_;
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t WordSet::total_length() const {
  std::size_t total = 0;
  for (const Word& w : words_) total += w.length();
  return total;
}

WordSet& WordSet::merge(const WordSet& other) {
  for (const Word& w : other.words_) insert(w);
  return *this;
}

std::uint64_t ball_size(std::uint32_t d, std::size_t radius) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (d == 0) return 1;
  std::uint64_t total = 1;
  std::uint64_t layer = 2ULL * d;
  for (std::size_t k = 1; k <= radius; ++k) {
    if (total > kMax - layer) return kMax;
    total += layer;
    if (layer > kMax / (2ULL * d - 1)) {
      layer = kMax;
    } else {
      layer *= (2ULL * d - 1);
    }
  }
  return total;
}

WordSet ball(std::uint32_t d, std::size_t radius, const Caps& caps) {
  std::uint64_t expected = ball_size(d, radius);
  if (expected > caps.words) {
    throw InfeasibleError("ball of radius " + std::to_string(radius) + " over " + std::to_string(d) +
                          " generators has " + std::to_string(expected) + " words, above the word cap " +
                          std::to_string(caps.words));
  }
  std::vector<Letter> alphabet;
  for (std::uint32_t g = 1; g <= d; ++g) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  WordSet out;
  std::vector<Word> layer{Word()};
  out.insert(Word());
  for (std::size_t k = 1; k <= radius; ++k) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (const Letter& l : alphabet) {
        if (!w.empty() && w.letters().back() == l.inverse()) continue;
        next.push_back(w * Word::from_letters({l}));
      }
    }
    for (const Word& w : next) out.insert(w);
    layer = std::move(next);
  }
  return out;
}

}  // namespace permtest

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace braidlex {

// Generator index; value r denotes a_r.
using Letter = int;

// A positive braid word over the generators a_1..a_n.
class Word {
 public:
  Word() = default;
  Word(int n, std::vector<Letter> letters);
  Word(int n, std::initializer_list<Letter> letters)
      : Word(n, std::vector<Letter>(letters)) {}

  static Word empty(int n) { return Word(n, std::vector<Letter>{}); }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t pos) const { return letters_[pos]; }

  Word prefix(std::size_t len) const;
  Word suffix_from(std::size_t pos) const;
  Word concat(const Word& other) const;

  // "a2a1a2"; the empty word prints as "e".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic on letters with a_1 < a_2 < ... < a_n.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int n_ = 1;
  std::vector<Letter> letters_;
};

}  // namespace braidlex

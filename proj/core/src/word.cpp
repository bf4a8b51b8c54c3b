#include "braidlex/word.hpp"

#include <algorithm>
#include <string>

#include "braidlex/errors.hpp"

namespace braidlex {

Word::Word(int n, std::vector<Letter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n_ < 1) {
    throw MalformedWord("generator count must be positive, got " +
                        std::to_string(n_));
  }
  for (Letter r : letters_) {
    if (r < 1 || r > n_) {
      throw MalformedWord("letter " + std::to_string(r) + " outside [1, " +
                          std::to_string(n_) + "]");
    }
  }
}

Word Word::prefix(std::size_t len) const {
  len = std::min(len, letters_.size());
  return Word(n_, std::vector<Letter>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix_from(std::size_t pos) const {
  pos = std::min(pos, letters_.size());
  return Word(n_, std::vector<Letter>(letters_.begin() + pos, letters_.end()));
}

Word Word::concat(const Word& other) const {
  if (other.n_ != n_) throw MalformedWord("concatenating words over different n");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  Word w;
  w.n_ = n_;
  w.letters_ = std::move(out);
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (Letter r : letters_) {
    out += 'a';
    out += std::to_string(r);
  }
  return out;
}

}  // namespace braidlex

#pragma once

// Freely reduced words over an abstract generator alphabet.  Letters are
// (generator index, exponent +/-1); adjacent inverse pairs cancel on
// construction and under append, so a GroupWord is always reduced.

#include <cstddef>
#include <string>
#include <vector>

namespace picard {

struct Letter {
  int gen;  // generator index, >= 0
  int exp;  // +1 or -1

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);  // freely reduces

  static GroupWord single(int gen, int exp = 1) { return GroupWord({Letter{gen, exp}}); }

  void append(int gen, int exp);  // cancels against the tail
  void append(const GroupWord& w);

  GroupWord inverse() const;
  GroupWord pow(int e) const;  // e may be negative or zero

  bool empty() const { return letters_.size() == 0; }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Highest generator index used, or -1 for the empty word.
  int max_generator() const;

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.append(b);
    return r;
  }

  // Render with the given generator names, e.g. "t u^-1 t".
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

}  // namespace picard

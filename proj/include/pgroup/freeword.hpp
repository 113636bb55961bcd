#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pgroup {

// One syllable of a free-group word: generator index and a nonzero exponent.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group on indexed generators.
// Adjacent letters always carry distinct generator indices and no letter
// has exponent zero; every constructor re-establishes that form.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int gen, std::int64_t exp = 1);
  static FreeWord from_letters(const std::vector<Letter>& letters);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Total letter count with exponents expanded, |e1| + |e2| + ...
  std::int64_t length() const;

  FreeWord inverse() const;
  FreeWord pow(std::int64_t k) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord& operator*=(const FreeWord& b);

  // [u, v] = u^-1 v^-1 u v
  static FreeWord commutator(const FreeWord& u, const FreeWord& v);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push_reduced(int gen, std::int64_t exp);

  std::vector<Letter> letters_;
};

// Normalizes an arbitrary letter sequence into freely reduced form.
FreeWord free_reduce(const std::vector<Letter>& letters);

}  // namespace pgroup

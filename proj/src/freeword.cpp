#include "pgroup/freeword.hpp"

#include <cstdlib>

#include "pgroup/errors.hpp"

namespace pgroup {

void FreeWord::push_reduced(int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

FreeWord FreeWord::generator(int gen, std::int64_t exp) {
  FreeWord w;
  w.push_reduced(gen, exp);
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<Letter>& letters) {
  FreeWord w;
  for (const Letter& l : letters) w.push_reduced(l.gen, l.exp);
  return w;
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const Letter& l : letters_) n += std::llabs(l.exp);
  return n;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  FreeWord r;
  for (std::int64_t i = 0; i < k; ++i) r *= *this;
  return r;
}

FreeWord& FreeWord::operator*=(const FreeWord& b) {
  for (const Letter& l : b.letters_) push_reduced(l.gen, l.exp);
  return *this;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r *= b;
  return r;
}

FreeWord FreeWord::commutator(const FreeWord& u, const FreeWord& v) {
  return u.inverse() * v.inverse() * u * v;
}

FreeWord free_reduce(const std::vector<Letter>& letters) {
  return FreeWord::from_letters(letters);
}

}  // namespace pgroup

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgroup/freeword.hpp"

namespace pgroup {

struct Relation {
  FreeWord lhs;
  FreeWord rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// A finite group presentation over named generators, with a prime attached.
// Immutable once validated; words are stored freely reduced with commutator
// syntax already expanded ([u,v] = u^-1 v^-1 u v).
struct Presentation {
  std::string name;
  std::int64_t prime = 2;
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  int gen_index(std::string_view name) const;  // -1 when absent

  // Checks generator-name uniqueness, letter ranges and primality of p.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

bool is_prime(std::int64_t n);

// One relator lhs * rhs^-1 per relation, in source order.
std::vector<FreeWord> relators(const Presentation& pres);

// Parses the .pgp DSL.  Grammar (one statement per line, '#' comments):
//   file    := header relline*
//   header  := "group" NAME NL "p" INT NL "gens" NAME+ NL
//   relline := "rel" word "=" word
//   word    := term+ | "1"
//   term    := NAME ("^" SINT)? | "[" word "," word "]" ("^" SINT)?
Presentation parse_presentation(std::string_view text);

// Emits exactly the grammar above; parse(serialize(p)) == p.
std::string serialize(const Presentation& pres);

std::string word_to_string(const FreeWord& w, const Presentation& pres);

// Parses a standalone word over the presentation's generators.
FreeWord parse_word(std::string_view text, const Presentation& pres);

}  // namespace pgroup

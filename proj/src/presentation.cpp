#include "pgroup/presentation.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "pgroup/errors.hpp"

namespace pgroup {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int Presentation::gen_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

void Presentation::validate() const {
  if (!valid_name(name)) throw Error("invalid group name '" + name + "'");
  if (!is_prime(prime)) throw Error("p = " + std::to_string(prime) + " is not prime");
  if (generators.empty()) throw Error("presentation has no generators");
  std::set<std::string> seen;
  for (const std::string& g : generators) {
    if (!valid_name(g)) throw Error("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error("duplicate generator name '" + g + "'");
  }
  const int ng = static_cast<int>(generators.size());
  for (const Relation& rel : relations)
    for (const FreeWord* w : {&rel.lhs, &rel.rhs})
      for (const Letter& l : w->letters())
        if (l.gen < 0 || l.gen >= ng)
          throw Error("relation references generator index " + std::to_string(l.gen) +
                      " outside 0.." + std::to_string(ng - 1));
}

std::vector<FreeWord> relators(const Presentation& pres) {
  std::vector<FreeWord> out;
  out.reserve(pres.relations.size());
  for (const Relation& rel : pres.relations) out.push_back(rel.lhs * rel.rhs.inverse());
  return out;
}

namespace {

enum class Tok { Name, Int, Caret, LBracket, RBracket, Comma, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  int line = 0;
  int col = 0;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int lineno) : line_(line), lineno_(lineno) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(lineno_, tok_.col, msg);
  }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    tok_ = {Tok::End, "", 0, lineno_, static_cast<int>(pos_) + 1};
    if (pos_ >= line_.size() || line_[pos_] == '#') return;
    char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
        ++pos_;
      tok_.kind = Tok::Name;
      tok_.text = std::string(line_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < line_.size() &&
         std::isdigit(static_cast<unsigned char>(line_[pos_ + 1])))) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      std::string_view digits = line_.substr(start, pos_ - start);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError(lineno_, static_cast<int>(start) + 1,
                         "integer literal out of range: '" + std::string(digits) + "'");
      tok_.kind = Tok::Int;
      tok_.text = std::string(digits);
      tok_.value = v;
      return;
    }
    switch (c) {
      case '^': tok_.kind = Tok::Caret; break;
      case '[': tok_.kind = Tok::LBracket; break;
      case ']': tok_.kind = Tok::RBracket; break;
      case ',': tok_.kind = Tok::Comma; break;
      case '=': tok_.kind = Tok::Equals; break;
      default:
        throw ParseError(lineno_, static_cast<int>(pos_) + 1,
                         std::string("unexpected character '") + c + "'");
    }
    tok_.text = std::string(1, c);
    ++pos_;
  }

  std::string_view line_;
  int lineno_;
  std::size_t pos_ = 0;
  Token tok_;
};

// Compound terms such as [u,v]^e expand by repetition; cap the blow-up.
constexpr std::int64_t kMaxCompoundExp = 4096;

class WordParser {
 public:
  WordParser(LineLexer& lex, const Presentation& pres) : lex_(lex), pres_(pres) {}

  FreeWord parse_word() {
    if (lex_.peek().kind == Tok::Int && lex_.peek().value == 1) {
      lex_.next();
      return FreeWord();
    }
    FreeWord w = parse_term();
    while (lex_.peek().kind == Tok::Name || lex_.peek().kind == Tok::LBracket)
      w *= parse_term();
    return w;
  }

 private:
  FreeWord parse_term() {
    Token t = lex_.next();
    if (t.kind == Tok::Name) {
      int g = pres_.gen_index(t.text);
      if (g < 0) throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
      std::int64_t e = parse_exponent();
      return FreeWord::generator(g, e);
    }
    if (t.kind == Tok::LBracket) {
      FreeWord u = parse_word();
      expect(Tok::Comma, "','");
      FreeWord v = parse_word();
      expect(Tok::RBracket, "']'");
      FreeWord w = FreeWord::commutator(u, v);
      std::int64_t e = parse_exponent();
      if (e == 1) return w;
      if (e > kMaxCompoundExp || e < -kMaxCompoundExp)
        throw ParseError(t.line, t.col, "exponent on bracketed term out of range");
      return w.pow(e);
    }
    throw ParseError(t.line, t.col, "expected generator or '[' in word");
  }

  std::int64_t parse_exponent() {
    if (lex_.peek().kind != Tok::Caret) return 1;
    lex_.next();
    Token t = lex_.next();
    if (t.kind != Tok::Int) throw ParseError(t.line, t.col, "expected integer exponent after '^'");
    if (t.value == 0) throw ParseError(t.line, t.col, "exponent 0 is not allowed");
    return t.value;
  }

  void expect(Tok kind, const char* what) {
    Token t = lex_.next();
    if (t.kind != kind) throw ParseError(t.line, t.col, std::string("expected ") + what);
  }

  LineLexer& lex_;
  const Presentation& pres_;
};

struct SourceLine {
  std::string text;
  int lineno;
};

std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++lineno;
    std::size_t hash = line.find('#');
    std::string_view body = hash == std::string_view::npos ? line : line.substr(0, hash);
    bool blank = true;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back({std::string(line), lineno});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

Token expect_keyword(LineLexer& lex, const char* kw) {
  Token t = lex.next();
  if (t.kind != Tok::Name || t.text != kw)
    throw ParseError(t.line, t.col, std::string("expected '") + kw + "'");
  return t;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<SourceLine> lines = significant_lines(text);
  if (lines.size() < 3) throw ParseError(1, 1, "incomplete header: need group, p and gens lines");

  Presentation pres;
  {
    LineLexer lex(lines[0].text, lines[0].lineno);
    expect_keyword(lex, "group");
    Token t = lex.next();
    if (t.kind != Tok::Name) throw ParseError(t.line, t.col, "expected group name");
    pres.name = t.text;
    if (lex.peek().kind != Tok::End) lex.fail("trailing tokens after group name");
  }
  {
    LineLexer lex(lines[1].text, lines[1].lineno);
    expect_keyword(lex, "p");
    Token t = lex.next();
    if (t.kind != Tok::Int) throw ParseError(t.line, t.col, "expected prime after 'p'");
    if (!is_prime(t.value))
      throw ParseError(t.line, t.col, "p = " + t.text + " is not prime");
    pres.prime = t.value;
    if (lex.peek().kind != Tok::End) lex.fail("trailing tokens after prime");
  }
  {
    LineLexer lex(lines[2].text, lines[2].lineno);
    expect_keyword(lex, "gens");
    while (lex.peek().kind == Tok::Name) pres.generators.push_back(lex.next().text);
    if (pres.generators.empty()) {
      Token t = lex.peek();
      throw ParseError(t.line, t.col, "expected at least one generator name");
    }
    if (lex.peek().kind != Tok::End) lex.fail("trailing tokens after generator list");
  }

  for (std::size_t i = 3; i < lines.size(); ++i) {
    LineLexer lex(lines[i].text, lines[i].lineno);
    expect_keyword(lex, "rel");
    WordParser wp(lex, pres);
    Relation rel;
    rel.lhs = wp.parse_word();
    {
      Token t = lex.next();
      if (t.kind != Tok::Equals) throw ParseError(t.line, t.col, "expected '=' in relation");
    }
    rel.rhs = wp.parse_word();
    if (lex.peek().kind != Tok::End) lex.fail("trailing tokens after relation");
    pres.relations.push_back(std::move(rel));
  }

  pres.validate();
  return pres;
}

FreeWord parse_word(std::string_view text, const Presentation& pres) {
  LineLexer lex(text, 1);
  WordParser wp(lex, pres);
  FreeWord w = wp.parse_word();
  if (lex.peek().kind != Tok::End) lex.fail("trailing tokens after word");
  return w;
}

std::string word_to_string(const FreeWord& w, const Presentation& pres) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << pres.generators.at(static_cast<std::size_t>(l.gen));
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

std::string serialize(const Presentation& pres) {
  std::ostringstream os;
  os << "group " << pres.name << '\n';
  os << "p " << pres.prime << '\n';
  os << "gens";
  for (const std::string& g : pres.generators) os << ' ' << g;
  os << '\n';
  for (const Relation& rel : pres.relations)
    os << "rel " << word_to_string(rel.lhs, pres) << " = " << word_to_string(rel.rhs, pres)
       << '\n';
  return os.str();
}

}  // namespace pgroup

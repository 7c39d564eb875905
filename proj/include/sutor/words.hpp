#pragma once

#include "sutor/error.hpp"
#include "sutor/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sutor {

inline bool is_identifier(std::string_view s) {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (s.empty() || !alpha(s.front())) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c) && c != '_') return false;
  return true;
}

struct Generator {
  std::string name;
  std::size_t index = 0;
};

/// Ordered list of generator names. Lookup is case-sensitive; with duplicate
/// names (which `engine::validate` reports) lookup resolves to the first.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i]))
        throw Error(ErrorCode::Syntax, "invalid generator name '" + names_[i] + "'");
      index_.emplace(names_[i], i);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  Generator generator(std::size_t i) const { return {names_.at(i), i}; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> duplicates() const {
    std::vector<std::string> out;
    std::map<std::string, int> seen;
    for (const auto& n : names_)
      if (++seen[n] == 2) out.push_back(n);
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

struct Letter {
  std::size_t gen = 0;
  Integer exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of the free group on an alphabet, stored as a letter sequence.
/// Every algebraic operation returns freely reduced words; `Word::unreduced`
/// exists only to carry raw user input through validation.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static Word reduce(AlphabetPtr alphabet, const std::vector<Letter>& letters) {
    Word w(std::move(alphabet));
    w.check_letters(letters);
    for (const auto& l : letters) {
      if (l.exp == 0) continue;
      if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
        w.letters_.back().exp += l.exp;
        if (w.letters_.back().exp == 0) w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    return w;
  }

  static Word unreduced(AlphabetPtr alphabet, std::vector<Letter> letters) {
    Word w(std::move(alphabet));
    w.check_letters(letters);
    w.letters_ = std::move(letters);
    return w;
  }

  static Word letter(AlphabetPtr alphabet, std::size_t gen, Integer exp = 1) {
    return reduce(std::move(alphabet), {Letter{gen, std::move(exp)}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }

  bool is_identity() const { return letters_.empty(); }

  bool is_reduced() const {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].exp == 0) return false;
      if (i > 0 && letters_[i - 1].gen == letters_[i].gen) return false;
    }
    return true;
  }

  Word reduced() const { return reduce(alphabet_, letters_); }

  /// Sum of absolute exponents.
  Integer length() const {
    Integer n = 0;
    for (const auto& l : letters_) n += sutor::abs(l.exp);
    return n;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return same_alphabet(a, b) && a.letters_ == b.letters_;
  }

  friend bool same_alphabet(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_;
  }

 private:
  void check_letters(const std::vector<Letter>& letters) const {
    for (const auto& l : letters)
      if (l.gen >= alphabet_->size())
        throw Error(ErrorCode::AlphabetMismatch,
                    "generator index " + std::to_string(l.gen) + " outside alphabet");
  }

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

inline Word free_reduce(AlphabetPtr alphabet, const std::vector<Letter>& letters) {
  return Word::reduce(std::move(alphabet), letters);
}

inline Word concat(const Word& u, const Word& v) {
  if (!same_alphabet(u, v)) throw Error(ErrorCode::AlphabetMismatch, "concat of words over different alphabets");
  std::vector<Letter> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(u.alphabet_ptr(), all);
}

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back({it->gen, -it->exp});
  return Word::reduce(w.alphabet_ptr(), out);
}

/// w^k; negative k inverts first.
inline Word power(const Word& w, const Integer& k) {
  Word base = k < 0 ? invert(w) : w.reduced();
  Integer n = sutor::abs(k);
  if (n == 0 || base.is_identity()) return Word(w.alphabet_ptr());
  if (base.letters().size() == 1) return Word::letter(w.alphabet_ptr(), base.letters()[0].gen, base.letters()[0].exp * n);
  std::vector<Letter> out;
  for (Integer i = 0; i < n; ++i) out.insert(out.end(), base.letters().begin(), base.letters().end());
  return Word::reduce(w.alphabet_ptr(), out);
}

/// Rewrites `w` over `target`, which must extend w's alphabet as a prefix.
inline Word rebase(const Word& w, AlphabetPtr target) {
  const auto& src = w.alphabet().names();
  if (src.size() > target->size() || !std::equal(src.begin(), src.end(), target->names().begin()))
    throw Error(ErrorCode::AlphabetMismatch, "target alphabet does not extend the word's alphabet");
  return Word::unreduced(std::move(target), w.letters());
}

namespace detail {

/// Recursive-descent parser for the word grammar. Produces the raw letter
/// sequence: powers of parenthesized groups are expanded, nothing is merged.
class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  std::vector<Letter> parse() {
    auto letters = parse_word();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return letters;
  }

 private:
  static bool is_ws(char c) { return c == ' ' || c == '\t'; }
  static bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }

  bool at_atom_start() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return is_alpha(c) || c == '(' || c == '1';
  }

  std::vector<Letter> parse_word() {
    std::vector<Letter> out;
    skip_ws();
    while (at_atom_start()) {
      auto f = parse_factor();
      out.insert(out.end(), f.begin(), f.end());
      skip_ws();
    }
    return out;
  }

  std::vector<Letter> parse_factor() {
    std::size_t start = pos_;
    bool single = false;
    auto atom = parse_atom(single);
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      Integer k = parse_int();
      if (single) {
        atom[0].exp *= k;
        return atom;
      }
      return expand_power(atom, k, start);
    }
    return atom;
  }

  std::vector<Letter> expand_power(const std::vector<Letter>& base, const Integer& k, std::size_t start) {
    std::vector<Letter> unit = base;
    if (k < 0) {
      unit.clear();
      for (auto it = base.rbegin(); it != base.rend(); ++it) unit.push_back({it->gen, -it->exp});
    }
    Integer n = sutor::abs(k);
    if (n * unit.size() > 10'000'000) throw SyntaxError(start, "power expands beyond 10^7 letters");
    std::vector<Letter> out;
    for (Integer i = 0; i < n; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::vector<Letter> parse_atom(bool& single) {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_word();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      single = false;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && (is_digit(text_[pos_]) || is_alpha(text_[pos_]))) fail("unexpected digit");
      single = false;
      return {};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = alphabet_.find(name);
    if (!idx) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
    single = true;
    return {Letter{*idx, 1}};
  }

  Integer parse_int() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ == digits) fail("expected integer exponent");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word_unreduced(std::string_view text, AlphabetPtr alphabet) {
  auto letters = detail::WordParser(text, *alphabet).parse();
  return Word::unreduced(std::move(alphabet), std::move(letters));
}

inline Word parse_word(std::string_view text, AlphabetPtr alphabet) {
  return parse_word_unreduced(text, std::move(alphabet)).reduced();
}

inline std::string render(const Word& w) {
  if (w.letters().empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet().name(l.gen);
    if (l.exp != 1) out += "^" + l.exp.str();
  }
  return out;
}

}  // namespace sutor

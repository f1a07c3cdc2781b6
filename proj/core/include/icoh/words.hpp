#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace icoh {

/// A finite word over the alphabet {1, ..., m}. Symbols are stored 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet) : alphabet_(alphabet) {}
  Word(int alphabet, std::vector<int> symbols);
  Word(int alphabet, std::initializer_list<int> symbols)
      : Word(alphabet, std::vector<int>(symbols)) {}

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<int>& symbols() const { return symbols_; }

  /// Lexicographic rank among all words of the same length, 0-based.
  std::uint64_t index() const;
  static Word from_index(int alphabet, std::size_t length, std::uint64_t index);

  /// Appends one symbol. Throws InputError when out of range.
  Word extended(int symbol) const;

  /// "123" when m <= 9, otherwise "1.10.3".
  std::string to_string() const;
  static Word parse(int alphabet, std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  int alphabet_ = 1;
  std::vector<int> symbols_;
};

/// Eventually periodic infinite word: preperiod · period · period · ...
class Address {
 public:
  Address(Word preperiod, Word period);

  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }
  int alphabet() const { return period_.alphabet(); }

  /// Symbol at 0-based position i of the infinite word.
  int at(std::size_t i) const;

  /// "1(2)" style: preperiod followed by the parenthesised period.
  std::string to_string() const;

  friend bool operator==(const Address&, const Address&) = default;

 private:
  Word preperiod_;
  Word period_;
};

Word truncate(const Word& w, std::size_t length);
Word truncate(const Address& a, std::size_t length);

Word reverse(const Word& w);

Word concat(const Word& w, const Word& t);
Address concat(const Word& w, const Address& t);

/// Default cap on m^k for enumerate_words.
inline constexpr std::uint64_t kDefaultWordCap = 1'000'000;

/// Checked m^k; throws ResourceError if it exceeds cap.
std::uint64_t word_count(int m, std::size_t k, std::uint64_t cap = kDefaultWordCap);

/// All m^k words of length k in lexicographic order.
std::vector<Word> enumerate_words(int m, std::size_t k,
                                  std::uint64_t cap = kDefaultWordCap);

}  // namespace icoh

#include "icoh/words.hpp"

#include <algorithm>
#include <charconv>

#include "icoh/errors.hpp"

namespace icoh {

namespace {

void check_symbol(int alphabet, int s) {
  if (s < 1 || s > alphabet) {
    throw InputError("symbol " + std::to_string(s) + " outside 1.." +
                     std::to_string(alphabet));
  }
}

void check_alphabet(int a, int b) {
  if (a != b) {
    throw InputError("alphabet mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

}  // namespace

Word::Word(int alphabet, std::vector<int> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (alphabet_ < 1) throw InputError("alphabet size must be >= 1");
  for (int s : symbols_) check_symbol(alphabet_, s);
}

std::uint64_t Word::index() const {
  std::uint64_t idx = 0;
  for (int s : symbols_) idx = idx * static_cast<std::uint64_t>(alphabet_) + (s - 1);
  return idx;
}

Word Word::from_index(int alphabet, std::size_t length, std::uint64_t index) {
  std::vector<int> syms(length);
  for (std::size_t i = length; i-- > 0;) {
    syms[i] = static_cast<int>(index % alphabet) + 1;
    index /= alphabet;
  }
  Word w(alphabet);
  w.symbols_ = std::move(syms);
  return w;
}

Word Word::extended(int symbol) const {
  check_symbol(alphabet_, symbol);
  Word w = *this;
  w.symbols_.push_back(symbol);
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (alphabet_ > 9 && i > 0) out += '.';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Word Word::parse(int alphabet, std::string_view text) {
  std::vector<int> syms;
  if (alphabet <= 9 && text.find('.') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw InputError("bad word '" + std::string(text) + "'");
      syms.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto dot = text.find('.', pos);
      if (dot == std::string_view::npos) dot = text.size();
      auto part = text.substr(pos, dot - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc{} || p != part.data() + part.size() || part.empty()) {
        throw InputError("bad word '" + std::string(text) + "'");
      }
      syms.push_back(v);
      pos = dot + 1;
    }
  }
  return Word(alphabet, std::move(syms));
}

Address::Address(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InputError("address period must be nonempty");
  check_alphabet(preperiod_.alphabet(), period_.alphabet());
}

int Address::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::string Address::to_string() const {
  return preperiod_.to_string() + "(" + period_.to_string() + ")";
}

Word truncate(const Word& w, std::size_t length) {
  if (length > w.size()) {
    throw InputError("cannot truncate word of length " + std::to_string(w.size()) +
                     " to " + std::to_string(length));
  }
  return Word(w.alphabet(), std::vector<int>(w.symbols().begin(),
                                             w.symbols().begin() + length));
}

Word truncate(const Address& a, std::size_t length) {
  std::vector<int> syms(length);
  for (std::size_t i = 0; i < length; ++i) syms[i] = a.at(i);
  return Word(a.alphabet(), std::move(syms));
}

Word reverse(const Word& w) {
  std::vector<int> syms(w.symbols().rbegin(), w.symbols().rend());
  return Word(w.alphabet(), std::move(syms));
}

Word concat(const Word& w, const Word& t) {
  check_alphabet(w.alphabet(), t.alphabet());
  std::vector<int> syms = w.symbols();
  syms.insert(syms.end(), t.symbols().begin(), t.symbols().end());
  return Word(w.alphabet(), std::move(syms));
}

Address concat(const Word& w, const Address& t) {
  check_alphabet(w.alphabet(), t.alphabet());
  return Address(concat(w, t.preperiod()), t.period());
}

std::uint64_t word_count(int m, std::size_t k, std::uint64_t cap) {
  if (m < 1) throw InputError("alphabet size must be >= 1");
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > cap / static_cast<std::uint64_t>(m)) {
      throw ResourceError(std::to_string(m) + "^" + std::to_string(k) +
                          " words exceed the cap of " + std::to_string(cap));
    }
    n *= m;
  }
  if (n > cap) throw ResourceError("word count exceeds cap");
  return n;
}

std::vector<Word> enumerate_words(int m, std::size_t k, std::uint64_t cap) {
  if (k < 1) throw InputError("word length must be >= 1");
  const auto n = word_count(m, k, cap);
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Word::from_index(m, k, i));
  return out;
}

}  // namespace icoh

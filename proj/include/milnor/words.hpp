#ifndef MILNOR_WORDS_HPP
#define MILNOR_WORDS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

// One letter x_k^{+1} or x_k^{-1}; generator indices are 1-based.
struct Letter {
  int generator = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group on `rank` generators x_1..x_r.
//
// Values are immutable once built: every constructor path reduces, so no
// adjacent pair x_k x_k^{-1} or x_k^{-1} x_k is ever stored.
class FreeWord {
 public:
  explicit FreeWord(int rank);

  // Freely reduces `letters`. Throws InputError on a bad generator index or sign.
  FreeWord(int rank, std::vector<Letter> letters);

  static FreeWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Space-separated `x<k>` / `x<k>^-1` tokens; the empty word is "".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

FreeWord parse_word(std::string_view text, int rank);

FreeWord word_product(const FreeWord& lhs, const FreeWord& rhs);
FreeWord word_inverse(const FreeWord& word);

// w^n for any integer n (negative powers use the inverse).
FreeWord word_power(const FreeWord& word, std::int64_t n);

std::int64_t exponent_sum(const FreeWord& word, int index);

// Convention: [a,b] = a b a^-1 b^-1.
// The literature also uses a^-1 b^-1 a b. Both agree in F_2/F_3 but their
// Magnus expansions differ from degree 3 on.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

inline FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) { return word_product(lhs, rhs); }

}  // namespace milnor

#endif  // MILNOR_WORDS_HPP

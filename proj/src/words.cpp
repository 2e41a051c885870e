#include "milnor/words.hpp"

#include <cctype>
#include <charconv>

#include "milnor/errors.hpp"

namespace milnor {
namespace {

void check_rank(int rank) {
  if (rank < 1) throw InputError("rank must be positive, got " + std::to_string(rank));
}

void require_same_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) {
    throw InputError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

// Appends onto a reduced stack; cancels against the top when possible.
void push_reduced(std::vector<Letter>& stack, const Letter& letter) {
  if (!stack.empty() && stack.back().generator == letter.generator && stack.back().sign == -letter.sign) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.generator < 1 || l.generator > rank) {
      throw InputError("generator index " + std::to_string(l.generator) + " out of range 1.." +
                       std::to_string(rank));
    }
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int rank, int index, int sign) { return FreeWord(rank, {Letter{index, sign}}); }

std::string FreeWord::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_word(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    int sign = 1;
    std::string_view body = token;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      sign = -1;
      body.remove_suffix(3);
    }
    if (body.size() < 2 || body[0] != 'x') throw InputError("malformed token '" + std::string(token) + "'");
    int index = 0;
    auto digits = body.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits[0] == '0') {
      throw InputError("malformed token '" + std::string(token) + "'");
    }
    if (index < 1 || index > rank) {
      throw InputError("index out of range in '" + std::string(token) + "' (rank " + std::to_string(rank) + ")");
    }
    letters.push_back({index, sign});
  }
  return FreeWord(rank, std::move(letters));
}

FreeWord word_product(const FreeWord& lhs, const FreeWord& rhs) {
  require_same_rank(lhs, rhs);
  std::vector<Letter> letters(lhs.letters().begin(), lhs.letters().end());
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return FreeWord(lhs.rank(), std::move(letters));
}

FreeWord word_inverse(const FreeWord& word) {
  std::vector<Letter> letters;
  letters.reserve(word.length());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    letters.push_back({it->generator, -it->sign});
  }
  return FreeWord(word.rank(), std::move(letters));
}

FreeWord word_power(const FreeWord& word, std::int64_t n) {
  const FreeWord base = n < 0 ? word_inverse(word) : word;
  FreeWord result(word.rank());
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) result = word_product(result, base);
  return result;
}

std::int64_t exponent_sum(const FreeWord& word, int index) {
  if (index < 1 || index > word.rank()) {
    throw InputError("generator index " + std::to_string(index) + " out of range 1.." +
                     std::to_string(word.rank()));
  }
  std::int64_t sum = 0;
  for (const Letter& l : word.letters()) {
    if (l.generator == index) sum += l.sign;
  }
  return sum;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  require_same_rank(a, b);
  return a * b * word_inverse(a) * word_inverse(b);
}

}  // namespace milnor

#include "milnor/magnus.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor {
namespace {

void check_cap(int degree_cap) {
  if (degree_cap < 1) throw InputError("degree cap must be >= 1, got " + std::to_string(degree_cap));
}

// s * phi(letter), specialised so phi never builds the inverse series.
MagnusSeries times_letter(const MagnusSeries& s, const Letter& letter) {
  MagnusSeries out(s.rank(), s.degree_cap());
  for (const auto& [mono, c] : s.terms()) {
    const int room = s.degree_cap() - static_cast<int>(mono.size());
    Monomial m = mono;
    if (letter.sign > 0) {
      out.add_term(m, c);
      if (room >= 1) {
        m.push_back(letter.generator);
        out.add_term(m, c);
      }
    } else {
      for (int k = 0; k <= room; ++k) {
        out.add_term(m, (k % 2 == 0) ? c : Integer(-c));
        m.push_back(letter.generator);
      }
    }
  }
  return out;
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int degree_cap) : rank_(rank), degree_cap_(degree_cap) {
  if (rank < 1) throw InputError("rank must be positive");
  check_cap(degree_cap);
}

MagnusSeries MagnusSeries::one(int rank, int degree_cap) {
  MagnusSeries s(rank, degree_cap);
  s.add_term({}, 1);
  return s;
}

void MagnusSeries::add_term(const Monomial& m, const Integer& c) {
  if (static_cast<int>(m.size()) > degree_cap_ || c == 0) return;
  for (int v : m) {
    if (v < 1 || v > rank_) throw InputError("variable index " + std::to_string(v) + " out of range");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string MagnusSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += milnor::to_string(abs(c));
    if (!mono.empty()) {
      out += " *";
      for (int v : mono) out += " a_" + std::to_string(v);
    }
  }
  return out;
}

MagnusSeries series_mul(const MagnusSeries& lhs, const MagnusSeries& rhs) {
  if (lhs.rank() != rhs.rank() || lhs.degree_cap() != rhs.degree_cap()) {
    throw InputError("series_mul: rank or degree cap mismatch");
  }
  MagnusSeries out(lhs.rank(), lhs.degree_cap());
  for (const auto& [m1, c1] : lhs.terms()) {
    for (const auto& [m2, c2] : rhs.terms()) {
      if (m1.size() + m2.size() > static_cast<std::size_t>(lhs.degree_cap())) continue;
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

MagnusSeries phi(const FreeWord& word, int degree_cap) {
  check_cap(degree_cap);
  MagnusSeries s = MagnusSeries::one(word.rank(), degree_cap);
  for (const Letter& l : word.letters()) s = times_letter(s, l);
  return s;
}

Integer coefficient(const MagnusSeries& series, const Monomial& monomial) {
  if (static_cast<int>(monomial.size()) > series.degree_cap()) {
    throw InputError("monomial of length " + std::to_string(monomial.size()) + " exceeds degree cap " +
                     std::to_string(series.degree_cap()));
  }
  for (int v : monomial) {
    if (v < 1 || v > series.rank()) throw InputError("variable index " + std::to_string(v) + " out of range");
  }
  auto it = series.terms().find(monomial);
  return it == series.terms().end() ? Integer(0) : it->second;
}

Integer mu123(const FreeWord& lambda3, int degree_cap) {
  if (lambda3.rank() != 3) throw InputError("mu123 needs a rank-3 word, got rank " + std::to_string(lambda3.rank()));
  if (degree_cap < 2) throw InputError("mu123 needs degree cap >= 2");
  for (int i = 1; i <= 3; ++i) {
    if (exponent_sum(lambda3, i) != 0) {
      throw PreconditionError("nonzero exponent sum for generator " + std::to_string(i));
    }
  }
  return coefficient(phi(lambda3, degree_cap), {1, 2});
}

int lcs_depth(const FreeWord& word, int kmax) {
  if (kmax < 1) throw InputError("kmax must be >= 1");
  const MagnusSeries s = phi(word, kmax);
  int lowest = kmax;
  for (const auto& [mono, c] : s.terms()) {
    if (!mono.empty()) lowest = std::min(lowest, static_cast<int>(mono.size()));
  }
  return lowest;
}

}  // namespace milnor

#include "milnor/nilpotent.hpp"

#include "milnor/errors.hpp"
#include "milnor/magnus.hpp"

namespace milnor {
namespace {

void require_rank3(const FreeWord& w) {
  if (w.rank() != 3) throw InputError("expected a rank-3 word, got rank " + std::to_string(w.rank()));
}

}  // namespace

CommutatorClass CommutatorClass::operator+(const CommutatorClass& other) const {
  CommutatorClass out;
  for (int i = 0; i < 3; ++i) out.coords[i] = coords[i] + other.coords[i];
  return out;
}

CommutatorClass CommutatorClass::operator-() const {
  CommutatorClass out;
  for (int i = 0; i < 3; ++i) out.coords[i] = -coords[i];
  return out;
}

CommutatorClass commutator_class(const FreeWord& w1, const FreeWord& w2) {
  require_rank3(w1);
  require_rank3(w2);
  std::array<Integer, 3> n, m;
  for (int i = 0; i < 3; ++i) {
    n[i] = Integer(static_cast<long>(exponent_sum(w1, i + 1)));
    m[i] = Integer(static_cast<long>(exponent_sum(w2, i + 1)));
  }
  CommutatorClass c;
  c.coords[0] = n[0] * m[1] - n[1] * m[0];
  c.coords[1] = n[0] * m[2] - n[2] * m[0];
  c.coords[2] = n[1] * m[2] - n[2] * m[1];
  return c;
}

CommutatorClass class_of(const FreeWord& w) {
  require_rank3(w);
  for (int i = 1; i <= 3; ++i) {
    if (exponent_sum(w, i) != 0) {
      throw PreconditionError("nonzero exponent sum for generator " + std::to_string(i));
    }
  }
  const MagnusSeries s = phi(w, 2);
  CommutatorClass c;
  c.coords[0] = coefficient(s, {1, 2});
  c.coords[1] = coefficient(s, {1, 3});
  c.coords[2] = coefficient(s, {2, 3});
  return c;
}

}  // namespace milnor

#include "setmeans/generator.hpp"

#include <random>

namespace setmeans {

namespace {

// Rational in [0, 1] with bounded denominator.
Rat rand_unit(std::mt19937_64& rng, long den_bound) {
  long den = std::uniform_int_distribution<long>(1, den_bound)(rng);
  long num = std::uniform_int_distribution<long>(0, den)(rng);
  return Rat(num, den);
}

}  // namespace

CanonicalSet gen_random_set(unsigned long long seed, const GenProfile& p) {
  std::mt19937_64 rng(seed);
  std::vector<Atom> atoms;
  long slot = 0;
  auto slot_base = [&]() { return p.origin + 4 * slot++; };

  for (int i = 0; i < p.intervals; ++i) {
    Rat base = slot_base();
    Rat lo = base + rand_unit(rng, p.den_bound);
    Rat hi = lo + 1 + rand_unit(rng, p.den_bound);
    atoms.emplace_back(Interval{lo, hi});
  }
  for (int i = 0; i < p.seqs; ++i) {
    Rat base = slot_base();
    Seq s;
    s.limit = base + 1 + rand_unit(rng, p.den_bound);
    int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    s.kind = static_cast<SeqKind>(kind);
    int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    s.c = sign * (Rat(1, 2) + rand_unit(rng, p.den_bound) / 2);
    if (s.kind != SeqKind::Harmonic) {
      long qd = std::uniform_int_distribution<long>(2, p.den_bound + 1)(rng);
      long qn = std::uniform_int_distribution<long>(1, qd - 1)(rng);
      s.q = Rat(qn, qd);
    }
    if (s.kind == SeqKind::HarmonicGeometric)
      s.c2 = sign * (Rat(1, 3) + rand_unit(rng, p.den_bound) / 3);
    s.start = std::uniform_int_distribution<long>(1, 3)(rng);
    atoms.emplace_back(s);
  }
  for (int i = 0; i < p.cantors; ++i) {
    Rat base = slot_base();
    Rat offset = base + rand_unit(rng, p.den_bound);
    Rat width;
    if (p.shared_cantor_base) {
      long k = std::uniform_int_distribution<long>(0, 2)(rng);
      width = 2 / pow_rat(Rat(3), k);
    } else {
      width = 1 + rand_unit(rng, p.den_bound);
    }
    atoms.emplace_back(CantorPiece{offset, width, 0});
  }
  for (int i = 0; i < p.points; ++i) {
    Rat base = slot_base();
    atoms.emplace_back(FinitePoints{{base + rand_unit(rng, p.den_bound)}});
  }
  return CanonicalSet::canonicalize(std::move(atoms));
}

}  // namespace setmeans

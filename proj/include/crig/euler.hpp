#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crig/finite_group.hpp"
#include "crig/representation.hpp"
#include "crig/rotation.hpp"

namespace crig {

inline constexpr std::int64_t kMaxIterations = 1000000;

struct EulerNumber {
  CertifiedInterval value;
  /// The unique admissible value in the interval (integer for surface
  /// groups, rational for orbifolds); empty when not isolated.
  std::optional<Rational> isolated;
  std::int64_t iterations = 0;
  std::string method;
};

/// Oriented triples (x, y, z) of words with x y z freely trivial; one per
/// pair of pants.
struct PantsDecomposition {
  std::vector<std::array<Word, 3>> pants;
};

/// Chain decomposition: for each handle i the pants ([a_i,b_i], b_i a_i b_i^-1, a_i^-1),
/// and for k = 2..g-1 the pants (P_k, c_k^-1, P_{k-1}^-1) where c_k = [a_k,b_k]
/// and P_k = c_1 ... c_k. 2g - 2 pants in total.
PantsDecomposition canonical_pants(int genus);

/// Throws InputError unless there are 2g - 2 triples, each freely trivial.
void validate_pants(const PantsDecomposition& pants, int genus);

/// Lifted surface relator [a_1,b_1]...[a_g,b_g] is translation by t; eu = -t.
/// Throws InvalidRepresentationError if the relator does not act trivially,
/// PrecisionError if t is not within max(1e-6, tolerance) of an integer.
EulerNumber euler_relator(const SurfaceGroupRep& rep);

struct PantsTerm {
  CertifiedInterval tau;
};

/// Sum over pants (x, y, z) of tau(rho(x), rho(y)). Iterations start at n and
/// grow x10 up to kMaxIterations until a unique integer is isolated; throws
/// IsolationError otherwise. Per-pants terms are computed on `jobs` threads.
EulerNumber euler_pants(const SurfaceGroupRep& rep, const PantsDecomposition& pants,
                        std::int64_t n = kDefaultIterations, int jobs = 1,
                        std::vector<PantsTerm>* terms = nullptr);

/// Both methods; throws CrossValidationError if they disagree.
struct EulerComparison {
  EulerNumber relator;
  EulerNumber pants;
};
EulerComparison euler_both(const SurfaceGroupRep& rep, const PantsDecomposition& pants,
                           std::int64_t n = kDefaultIterations, int jobs = 1);

/// eu = m + sum rot(rho(q_i)), where the canonical lifts of the q_i and of the
/// handle generators make the long relator a translation by -m. Each q_i
/// must have finite order dividing m_i (PrecisionError otherwise).
EulerNumber euler_orbifold(const OrbifoldRep& rep);

struct OrbifoldEulerDetail {
  std::int64_t relator_translation = 0;  // -m
  std::vector<Rational> cone_rotations;  // rot(rho(q_i))
};
EulerNumber euler_orbifold(const OrbifoldRep& rep, OrbifoldEulerDetail* detail);

/// |e| <= 2g - 2.
Certificate check_milnor_wood(const Rational& e, int genus);
/// |k * orbifold_eu| == |surface_eu| as rationals.
Certificate check_multiplicativity(const Rational& orbifold_eu, std::int64_t index, const Rational& surface_eu);

/// e = k/3 + m/4 with 0 <= m < 4. Throws InputError unless 12 e is an integer.
struct ThirdsQuarters {
  std::int64_t k = 0;
  std::int64_t m = 0;
};
ThirdsQuarters split_thirds_quarters(const Rational& e);

}  // namespace crig

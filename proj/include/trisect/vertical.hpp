#pragma once

// Vertical 3-manifolds. Each V_ij has a genus-1 Heegaard splitting with
// meridian slopes given by a pair of torus classes, so it is S3, S1xS2 or a
// lens space L(p,q).

#include "trisect/diagram.hpp"

#include <array>
#include <optional>
#include <string>

namespace trisect {

enum class Orientation { Unoriented, Oriented };

class LensSpace {
 public:
  enum class Kind { S3, S1xS2, Lens };

  /// Normalizes: p < 0 -> (-p, -q), p = 0 -> S1xS2, p = 1 -> S3, q reduced
  /// into (0, p). Throws std::invalid_argument if gcd(p, q) != 1 for p >= 2.
  static LensSpace make(const Integer& p, const Integer& q);
  static LensSpace s3() { return LensSpace(Kind::S3, 1, 0); }
  static LensSpace s1xs2() { return LensSpace(Kind::S1xS2, 0, 1); }

  Kind kind() const { return kind_; }
  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  /// Orientation reversal: L(p,q) -> L(p,-q).
  LensSpace mirror() const;

  std::string str() const;  // S3, S1xS2, L(p,q)

  bool operator==(const LensSpace& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && q_ == other.q_;
  }

 private:
  LensSpace(Kind kind, Integer p, Integer q) : kind_(kind), p_(std::move(p)), q_(std::move(q)) {}

  Kind kind_;
  Integer p_;
  Integer q_;
};

/// Genus-1 splitting with meridian slopes v, w: p = |v.w|, and after the
/// completion M = sl2_complete(v) sends v to (1,0), w goes to (m, v.w) and
/// the result is L(p, m mod p). Throws LatticeError on non-primitive input.
LensSpace lens_from_pair(const Vector2i& v, const Vector2i& w);

/// L(p,q) ~ L(p,q') iff q' = q^{+-1} (oriented) or +-q^{+-1} (unoriented) mod p.
bool lens_equivalent(const LensSpace& first, const LensSpace& second,
                     Orientation orientation = Orientation::Unoriented);

enum class Vertical { AA = 0, BB, CC, BA, CB, AC };

const char* vertical_name(Vertical label);  // V_aa, ...

/// (V_aa, V_bb, V_cc; V_ba, V_cb, V_ac)
struct SixTuple {
  std::array<LensSpace, 6> entries = {LensSpace::s3(), LensSpace::s3(), LensSpace::s3(),
                                      LensSpace::s3(), LensSpace::s3(), LensSpace::s3()};

  const LensSpace& operator[](Vertical label) const { return entries[static_cast<int>(label)]; }
  LensSpace& operator[](Vertical label) { return entries[static_cast<int>(label)]; }

  std::string str() const;     // (S3, L(9,4), L(4,3); L(2,1), L(5,4), S3)
  std::string matrix() const;  // two aligned rows

  bool operator==(const SixTuple& other) const { return entries == other.entries; }
};

bool tuples_equivalent(const SixTuple& first, const SixTuple& second,
                       Orientation orientation = Orientation::Unoriented);

/// Slope pairs: V_aa = (a2, mu^ a2), V_bb = (b2, mu^ b2), V_cc = (c2, mu^ c2),
/// V_ba = (b2, mu^ a2), V_cb = (c2, b2), V_ac = (a2, mu^ c2), mu^ = mu1^{-1}.
SixTuple six_tuple(const TorusDiagram& diagram);

/// (A,B,C; X,Y,Z) -> mirror of (A,C,B; Z,Y,X).
SixTuple reflect(const SixTuple& tuple);
/// (A,B,C; X,Y,Z) -> (C,A,B; Z,X,Y).
SixTuple rotate(const SixTuple& tuple);

/// The five tuples of the classification theorem. q is used by family 2 only
/// (q != 1), epsilon by families 2-5.
SixTuple family_template(int family, const Integer& q = 0, int epsilon = 1);

struct FamilyMatch {
  int family = 0;
  std::optional<Integer> q;     // family 2
  std::optional<int> epsilon;   // families 2-5
  bool epsilon_ambiguous = false;
  bool reflected = false;
  int rotations = 0;  // template matched rotate^rotations(reflect^reflected(T))

  std::string str() const;  // "family 3, ε=+1"
};

/// Searches rotate^0..2 of T, then of reflect(T), against families 1..5
/// (epsilon +1 before -1) and returns the first match.
std::optional<FamilyMatch> classify(const SixTuple& tuple, Orientation orientation = Orientation::Unoriented);

}  // namespace trisect

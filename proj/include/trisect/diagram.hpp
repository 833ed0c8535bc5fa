#pragma once

// Homological models of simplified (2,0)-trisection diagrams.
//
// Genus2Diagram holds the six vanishing-cycle classes on the central fiber.
// TorusDiagram holds the second-tier classes after surgery along a1, together
// with the monodromy mu1 of the surgered torus (identity or t_d^k).

#include "trisect/lattice.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisect {

struct Twist {
  Vector2i core;  // class of d on the surgered torus
  int exponent = 1;

  bool operator==(const Twist& other) const { return core == other.core && exponent == other.exponent; }
};

/// mu1: either the identity or t_d^k with k in {-4, -1, 1, 4}.
struct MonodromySpec {
  std::optional<Twist> twist;

  static MonodromySpec identity() { return {}; }
  static MonodromySpec twisted(Vector2i core, int exponent) { return {Twist{std::move(core), exponent}}; }

  bool is_identity() const { return !twist.has_value(); }
  int exponent() const { return twist ? twist->exponent : 0; }

  /// mu1^{-1} applied to a torus class.
  Vector2i apply_inverse(const Vector2i& x) const {
    return twist ? transvection(twist->core, Integer(-twist->exponent), x) : x;
  }
  /// mu1 applied to a torus class.
  Vector2i apply(const Vector2i& x) const {
    return twist ? transvection(twist->core, Integer(twist->exponent), x) : x;
  }

  bool operator==(const MonodromySpec& other) const { return twist == other.twist; }
};

enum class Slot { A2 = 0, B2 = 1, C2 = 2 };

inline const char* slot_name(Slot slot) {
  switch (slot) {
    case Slot::A2: return "a2";
    case Slot::B2: return "b2";
    case Slot::C2: return "c2";
  }
  return "?";
}

struct TorusDiagram {
  Vector2i a2, b2, c2;
  MonodromySpec monodromy;
  int sign = 1;  // (a1.b1)(b1.c1)(c1.a1) of the genus-1 configuration

  const Vector2i& operator[](Slot slot) const;
  Vector2i& operator[](Slot slot);

  bool operator==(const TorusDiagram& other) const {
    return a2 == other.a2 && b2 == other.b2 && c2 == other.c2 && monodromy == other.monodromy &&
           sign == other.sign;
  }
};

struct Genus2Diagram {
  Vector4i a1, b1, c1, a2, b2, c2;
  int exponent = 0;  // 0 encodes identity monodromy

  const Vector4i& operator[](Slot slot) const;
  Vector4i& operator[](Slot slot);

  /// Twist core of mu1 lifted to the central fiber.
  Vector4i core() const { return a1 + b1 + c1; }
  /// Common sign of a1.b1, b1.c1, c1.a1 on a valid diagram.
  int sign() const { return sign_of(intersection(a1, b1)); }

  bool operator==(const Genus2Diagram& other) const {
    return a1 == other.a1 && b1 == other.b1 && c1 == other.c1 && a2 == other.a2 && b2 == other.b2 &&
           c2 == other.c2 && exponent == other.exponent;
  }
};

/// I(V): absolute intersections of b1 + c1 with a2, b2, c2.
struct InvariantVector {
  std::array<Integer, 3> entries;

  /// Entry i of the result is entry (i + n) mod 3 of this vector.
  InvariantVector rotated(int n) const;
  std::string str() const;  // "(1, 1, 2)"

  bool operator==(const InvariantVector& other) const { return entries == other.entries; }
  bool operator!=(const InvariantVector& other) const { return !(*this == other); }
};

enum class IssueCode {
  NonPrimitive,
  NonPrimitiveA1,
  TriplePairingInvalid,
  A2NotDisjoint,
  BadExponent,
  IdentityCaseViolation,
  SignMismatch,  // genus-2 document: declared sign disagrees with a1.b1
};

const char* issue_name(IssueCode code);

struct Issue {
  IssueCode code;
  std::string detail;
};

/// Every violated invariant; empty iff the diagram is valid.
std::vector<Issue> validate(const TorusDiagram& diagram);
std::vector<Issue> validate(const Genus2Diagram& diagram);

enum class DiagramErrorKind { InvalidDiagram, ExponentCoreMismatch };

class DiagramError : public std::domain_error {
 public:
  DiagramError(DiagramErrorKind kind, const std::string& what, std::vector<Issue> issues = {})
      : std::domain_error(what), kind_(kind), issues_(std::move(issues)) {}
  DiagramErrorKind kind() const { return kind_; }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  DiagramErrorKind kind_;
  std::vector<Issue> issues_;
};

void require_valid(const TorusDiagram& diagram);
void require_valid(const Genus2Diagram& diagram);

/// Surgery along a1: projects a2, b2, c2 and the twist core a1+b1+c1 onto the
/// surgered torus through symplectic_reduce(a1).
TorusDiagram surgery_project(const Genus2Diagram& diagram);

/// Standard lift: a1 = alpha1, b1 = s*beta1, c1 = -alpha1 - s*beta1 + (0,0,d),
/// second-tier classes in the (alpha2, beta2) block. s is diagram.sign.
Genus2Diagram embed_torus(const TorusDiagram& diagram);

InvariantVector invariant(const TorusDiagram& diagram);
InvariantVector invariant(const Genus2Diagram& diagram);

/// Upper-triangular handle-slide over a1: target -> target + sign * a1.
Genus2Diagram handle_slide(const Genus2Diagram& diagram, Slot target, int sign);

struct TheoremHypotheses {
  bool monodromy_nontrivial = false;
  bool b2_c2_not_parallel = false;
  bool a2_muinv_c2_not_parallel = false;

  bool all() const { return monodromy_nontrivial && b2_c2_not_parallel && a2_muinv_c2_not_parallel; }
};

TheoremHypotheses theorem_hypotheses(const TorusDiagram& diagram);

}  // namespace trisect

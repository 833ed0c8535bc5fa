#include "trisect/diagram.hpp"

namespace trisect {

namespace {

template <typename Diagram, typename Vector>
Vector& slot_ref(Diagram& d, Slot slot) {
  switch (slot) {
    case Slot::A2: return d.a2;
    case Slot::B2: return d.b2;
    case Slot::C2: return d.c2;
  }
  throw std::invalid_argument("unknown slot");
}

bool allowed_twist_exponent(int k) { return k == -4 || k == -1 || k == 1 || k == 4; }

std::string describe(const std::vector<Issue>& issues) {
  std::string out = "invalid diagram";
  for (const auto& issue : issues) out += std::string("; ") + issue_name(issue.code) + ": " + issue.detail;
  return out;
}

constexpr std::array<Slot, 3> kSlots = {Slot::A2, Slot::B2, Slot::C2};

}  // namespace

const Vector2i& TorusDiagram::operator[](Slot slot) const {
  return slot_ref<const TorusDiagram, const Vector2i>(*this, slot);
}
Vector2i& TorusDiagram::operator[](Slot slot) { return slot_ref<TorusDiagram, Vector2i>(*this, slot); }
const Vector4i& Genus2Diagram::operator[](Slot slot) const {
  return slot_ref<const Genus2Diagram, const Vector4i>(*this, slot);
}
Vector4i& Genus2Diagram::operator[](Slot slot) { return slot_ref<Genus2Diagram, Vector4i>(*this, slot); }

InvariantVector InvariantVector::rotated(int n) const {
  const int shift = ((n % 3) + 3) % 3;
  InvariantVector out;
  for (int i = 0; i < 3; ++i) out.entries[i] = entries[(i + shift) % 3];
  return out;
}

std::string InvariantVector::str() const {
  return "(" + entries[0].str() + ", " + entries[1].str() + ", " + entries[2].str() + ")";
}

const char* issue_name(IssueCode code) {
  switch (code) {
    case IssueCode::NonPrimitive: return "NonPrimitive";
    case IssueCode::NonPrimitiveA1: return "NonPrimitiveA1";
    case IssueCode::TriplePairingInvalid: return "TriplePairingInvalid";
    case IssueCode::A2NotDisjoint: return "A2NotDisjoint";
    case IssueCode::BadExponent: return "BadExponent";
    case IssueCode::IdentityCaseViolation: return "IdentityCaseViolation";
    case IssueCode::SignMismatch: return "SignMismatch";
  }
  return "Unknown";
}

std::vector<Issue> validate(const TorusDiagram& diagram) {
  std::vector<Issue> issues;
  for (Slot slot : kSlots) {
    if (!is_primitive(diagram[slot]))
      issues.push_back({IssueCode::NonPrimitive,
                        std::string(slot_name(slot)) + " = " + format_vector(diagram[slot]) + " is not primitive"});
  }
  if (diagram.monodromy.twist) {
    const auto& twist = *diagram.monodromy.twist;
    if (!is_primitive(twist.core))
      issues.push_back({IssueCode::NonPrimitive, "core d = " + format_vector(twist.core) + " is not primitive"});
    if (!allowed_twist_exponent(twist.exponent))
      issues.push_back({IssueCode::BadExponent,
                        "exponent " + std::to_string(twist.exponent) + " not in {-4, -1, 1, 4}"});
  } else {
    const std::array<std::pair<Slot, Slot>, 3> pairs = {
        {{Slot::A2, Slot::B2}, {Slot::B2, Slot::C2}, {Slot::C2, Slot::A2}}};
    for (auto [s, t] : pairs) {
      const Integer p = intersection(diagram[s], diagram[t]);
      if (abs_value(p) != 1)
        issues.push_back({IssueCode::IdentityCaseViolation, std::string("identity monodromy requires |") +
                                                                slot_name(s) + "." + slot_name(t) +
                                                                "| = 1, got " + p.str()});
    }
  }
  if (diagram.sign != 1 && diagram.sign != -1)
    issues.push_back({IssueCode::TriplePairingInvalid, "sign must be +1 or -1"});
  return issues;
}

std::vector<Issue> validate(const Genus2Diagram& diagram) {
  std::vector<Issue> issues;
  const bool a1_primitive = is_primitive(diagram.a1);
  if (!a1_primitive)
    issues.push_back({IssueCode::NonPrimitiveA1, "a1 = " + format_vector(diagram.a1) + " is not primitive"});

  const Integer ab = intersection(diagram.a1, diagram.b1);
  const Integer bc = intersection(diagram.b1, diagram.c1);
  const Integer ca = intersection(diagram.c1, diagram.a1);
  const bool triple_ok = abs_value(ab) == 1 && ab == bc && bc == ca;
  if (!triple_ok)
    issues.push_back({IssueCode::TriplePairingInvalid, "a1.b1, b1.c1, c1.a1 = " + ab.str() + ", " + bc.str() +
                                                           ", " + ca.str() + " (need a common sign of modulus 1)"});

  bool disjoint = true;
  for (Slot slot : kSlots) {
    const Integer p = intersection(diagram.a1, diagram[slot]);
    if (p != 0) {
      disjoint = false;
      issues.push_back(
          {IssueCode::A2NotDisjoint, std::string("a1.") + slot_name(slot) + " = " + p.str() + " (must be 0)"});
    }
  }

  const int k = diagram.exponent;
  if (k != 0 && !allowed_twist_exponent(k))
    issues.push_back({IssueCode::BadExponent, "exponent " + std::to_string(k) + " not in {0, -4, -1, 1, 4}"});

  if (k == 0 && a1_primitive && disjoint) {
    const auto basis = symplectic_reduce(diagram.a1);
    const std::array<Vector2i, 3> projected = {basis.project(diagram.a2), basis.project(diagram.b2),
                                               basis.project(diagram.c2)};
    for (int i = 0; i < 3; ++i) {
      const Integer p = intersection(projected[i], projected[(i + 1) % 3]);
      if (abs_value(p) != 1)
        issues.push_back({IssueCode::IdentityCaseViolation,
                          std::string("identity monodromy requires |") + slot_name(kSlots[i]) + "'." +
                              slot_name(kSlots[(i + 1) % 3]) + "'| = 1 on the surgered torus, got " + p.str()});
    }
  }
  return issues;
}

void require_valid(const TorusDiagram& diagram) {
  auto issues = validate(diagram);
  if (!issues.empty()) throw DiagramError(DiagramErrorKind::InvalidDiagram, describe(issues), std::move(issues));
}

void require_valid(const Genus2Diagram& diagram) {
  auto issues = validate(diagram);
  if (!issues.empty()) throw DiagramError(DiagramErrorKind::InvalidDiagram, describe(issues), std::move(issues));
}

TorusDiagram surgery_project(const Genus2Diagram& diagram) {
  require_valid(diagram);
  const auto basis = symplectic_reduce(diagram.a1);
  TorusDiagram out;
  out.a2 = basis.project(diagram.a2);
  out.b2 = basis.project(diagram.b2);
  out.c2 = basis.project(diagram.c2);
  out.sign = diagram.sign();
  const Vector2i core = basis.project(diagram.core());
  if (diagram.exponent == 0) {
    if (!is_zero(core))
      throw DiagramError(DiagramErrorKind::ExponentCoreMismatch,
                         "identity exponent but the projected core " + format_vector(core) + " is nonzero");
    out.monodromy = MonodromySpec::identity();
  } else {
    if (is_zero(core))
      throw DiagramError(DiagramErrorKind::ExponentCoreMismatch,
                         "twist exponent " + std::to_string(diagram.exponent) + " but the projected core is zero");
    out.monodromy = MonodromySpec::twisted(core, diagram.exponent);
  }
  require_valid(out);
  return out;
}

Genus2Diagram embed_torus(const TorusDiagram& diagram) {
  require_valid(diagram);
  const Integer s = diagram.sign;
  const Vector2i d = diagram.monodromy.twist ? diagram.monodromy.twist->core : Vector2i::Zero().eval();
  auto second_block = [](const Vector2i& v) {
    Vector4i out;
    out << 0, 0, v(0), v(1);
    return out;
  };
  Genus2Diagram out;
  out.a1 << 1, 0, 0, 0;
  out.b1 << 0, s, 0, 0;
  out.c1 << -1, -s, d(0), d(1);
  out.a2 = second_block(diagram.a2);
  out.b2 = second_block(diagram.b2);
  out.c2 = second_block(diagram.c2);
  out.exponent = diagram.monodromy.exponent();
  return out;
}

InvariantVector invariant(const TorusDiagram& diagram) {
  require_valid(diagram);
  InvariantVector out{{Integer(0), Integer(0), Integer(0)}};
  if (!diagram.monodromy.twist) return out;
  const auto& d = diagram.monodromy.twist->core;
  for (int i = 0; i < 3; ++i) out.entries[i] = abs_value(intersection(d, diagram[kSlots[i]]));
  return out;
}

InvariantVector invariant(const Genus2Diagram& diagram) {
  require_valid(diagram);
  const Vector4i sum = diagram.b1 + diagram.c1;
  InvariantVector out;
  for (int i = 0; i < 3; ++i) out.entries[i] = abs_value(intersection(sum, diagram[kSlots[i]]));
  return out;
}

Genus2Diagram handle_slide(const Genus2Diagram& diagram, Slot target, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("handle_slide: sign must be +1 or -1");
  require_valid(diagram);
  Genus2Diagram out = diagram;
  out[target] += Integer(sign) * diagram.a1;
  return out;
}

TheoremHypotheses theorem_hypotheses(const TorusDiagram& diagram) {
  require_valid(diagram);
  TheoremHypotheses h;
  h.monodromy_nontrivial = !diagram.monodromy.is_identity();
  h.b2_c2_not_parallel = intersection(diagram.b2, diagram.c2) != 0;
  h.a2_muinv_c2_not_parallel = intersection(diagram.a2, diagram.monodromy.apply_inverse(diagram.c2)) != 0;
  return h;
}

}  // namespace trisect

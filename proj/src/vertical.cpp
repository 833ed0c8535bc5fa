#include "trisect/vertical.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisect {

LensSpace LensSpace::make(const Integer& p_in, const Integer& q_in) {
  Integer p = p_in, q = q_in;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (p == 0) return s1xs2();
  if (p == 1) return s3();
  q = floor_mod(q, p);
  if (gcd(p, q) != 1) throw std::invalid_argument("L(" + p.str() + "," + q_in.str() + "): p and q must be coprime");
  return LensSpace(Kind::Lens, p, q);
}

LensSpace LensSpace::mirror() const {
  if (kind_ != Kind::Lens) return *this;
  return make(p_, -q_);
}

std::string LensSpace::str() const {
  switch (kind_) {
    case Kind::S3: return "S3";
    case Kind::S1xS2: return "S1xS2";
    case Kind::Lens: break;
  }
  return "L(" + p_.str() + "," + q_.str() + ")";
}

LensSpace lens_from_pair(const Vector2i& v, const Vector2i& w) {
  if (!is_primitive(v) || !is_primitive(w))
    throw LatticeError(LatticeErrorKind::NonPrimitive,
                       "lens_from_pair: slopes " + format_vector(v) + ", " + format_vector(w) + " must be primitive");
  const Integer p = abs_value(intersection(v, w));
  if (p <= 1) return LensSpace::make(p, 0);
  const Matrix2i m = sl2_complete(v);
  const Integer first = m(0, 0) * w(0) + m(0, 1) * w(1);
  return LensSpace::make(p, first);
}

bool lens_equivalent(const LensSpace& first, const LensSpace& second, Orientation orientation) {
  if (first.kind() != second.kind()) return false;
  if (first.kind() != LensSpace::Kind::Lens) return true;
  if (first.p() != second.p()) return false;
  const Integer& p = first.p();
  const Integer q = first.q();
  const Integer q_inverse = mod_inverse(q, p);
  std::vector<Integer> allowed = {q, q_inverse};
  if (orientation == Orientation::Unoriented) {
    allowed.push_back(floor_mod(Integer(-q), p));
    allowed.push_back(floor_mod(Integer(-q_inverse), p));
  }
  return std::find(allowed.begin(), allowed.end(), second.q()) != allowed.end();
}

const char* vertical_name(Vertical label) {
  switch (label) {
    case Vertical::AA: return "V_aa";
    case Vertical::BB: return "V_bb";
    case Vertical::CC: return "V_cc";
    case Vertical::BA: return "V_ba";
    case Vertical::CB: return "V_cb";
    case Vertical::AC: return "V_ac";
  }
  return "?";
}

std::string SixTuple::str() const {
  std::string out = "(";
  for (int i = 0; i < 6; ++i) {
    if (i == 3)
      out += "; ";
    else if (i)
      out += ", ";
    out += entries[i].str();
  }
  return out + ")";
}

std::string SixTuple::matrix() const {
  std::array<std::string, 6> cells;
  std::array<std::size_t, 3> width{};
  for (int i = 0; i < 6; ++i) {
    cells[i] = entries[i].str();
    width[i % 3] = std::max(width[i % 3], cells[i].size());
  }
  std::string out;
  for (int row = 0; row < 2; ++row) {
    out += "[ ";
    for (int col = 0; col < 3; ++col) {
      const std::string& cell = cells[row * 3 + col];
      out += cell + std::string(width[col] - cell.size(), ' ');
      out += col < 2 ? "  " : " ]\n";
    }
  }
  return out;
}

bool tuples_equivalent(const SixTuple& first, const SixTuple& second, Orientation orientation) {
  for (int i = 0; i < 6; ++i)
    if (!lens_equivalent(first.entries[i], second.entries[i], orientation)) return false;
  return true;
}

SixTuple six_tuple(const TorusDiagram& diagram) {
  require_valid(diagram);
  const auto& mu = diagram.monodromy;
  SixTuple t;
  t[Vertical::AA] = lens_from_pair(diagram.a2, mu.apply_inverse(diagram.a2));
  t[Vertical::BB] = lens_from_pair(diagram.b2, mu.apply_inverse(diagram.b2));
  t[Vertical::CC] = lens_from_pair(diagram.c2, mu.apply_inverse(diagram.c2));
  t[Vertical::BA] = lens_from_pair(diagram.b2, mu.apply_inverse(diagram.a2));
  t[Vertical::CB] = lens_from_pair(diagram.c2, diagram.b2);
  t[Vertical::AC] = lens_from_pair(diagram.a2, mu.apply_inverse(diagram.c2));
  return t;
}

SixTuple reflect(const SixTuple& t) {
  const auto& e = t.entries;
  SixTuple out;
  out.entries = {e[0].mirror(), e[2].mirror(), e[1].mirror(), e[5].mirror(), e[4].mirror(), e[3].mirror()};
  return out;
}

SixTuple rotate(const SixTuple& t) {
  const auto& e = t.entries;
  SixTuple out;
  out.entries = {e[2], e[0], e[1], e[5], e[3], e[4]};
  return out;
}

SixTuple family_template(int family, const Integer& q, int epsilon) {
  const Integer e = epsilon;
  const LensSpace s3 = LensSpace::s3();
  const LensSpace s1xs2 = LensSpace::s1xs2();
  SixTuple t;
  switch (family) {
    case 1:
      t.entries = {s1xs2, s1xs2, s1xs2, s3, s3, s3};
      break;
    case 2:
      if (q == 1) throw std::invalid_argument("family 2 requires q != 1");
      t.entries = {s3,    s3, LensSpace::make((q - 1) * (q - 1), e * q), s1xs2, LensSpace::make(q - 2, e),
                   LensSpace::make(q, -e)};
      break;
    case 3:
      t.entries = {s3, LensSpace::make(9, 2 * e), LensSpace::make(4, e), LensSpace::make(2, 1), LensSpace::make(5, e),
                   s3};
      break;
    case 4:
      t.entries = {s1xs2, LensSpace::make(4, 1), LensSpace::make(4, 1), s3, LensSpace::make(4 + e, 1), s3};
      break;
    case 5:
      t.entries = {s1xs2, s3, s3, s3, LensSpace::make(1 + e, 1), s3};
      break;
    default:
      throw std::invalid_argument("family must be in 1..5");
  }
  return t;
}

std::string FamilyMatch::str() const {
  std::string out = "family " + std::to_string(family);
  if (q) out += ", q=" + q->str();
  if (epsilon) out += std::string(", ε=") + (*epsilon > 0 ? "+1" : "-1");
  return out;
}

std::optional<FamilyMatch> classify(const SixTuple& tuple, Orientation orientation) {
  auto matches = [&](const SixTuple& image, int family, const Integer& q, int epsilon) {
    return tuples_equivalent(image, family_template(family, q, epsilon), orientation);
  };
  for (int reflected = 0; reflected < 2; ++reflected) {
    SixTuple image = reflected ? reflect(tuple) : tuple;
    for (int rotations = 0; rotations < 3; ++rotations, image = rotate(image)) {
      if (matches(image, 1, 0, 1)) return FamilyMatch{1, std::nullopt, std::nullopt, false, bool(reflected), rotations};
      for (int family = 2; family <= 5; ++family) {
        // V_ac = L(q, -eps) pins |q| for family 2.
        std::vector<Integer> candidates = {Integer(0)};
        if (family == 2) {
          const Integer p = image[Vertical::AC].p();
          candidates = {p, Integer(-p)};
        }
        for (const Integer& q : candidates) {
          if (family == 2 && q == 1) continue;
          for (int epsilon : {1, -1}) {
            if (!matches(image, family, q, epsilon)) continue;
            FamilyMatch match;
            match.family = family;
            if (family == 2) match.q = q;
            match.epsilon = epsilon;
            match.epsilon_ambiguous = epsilon == 1 && matches(image, family, q, -1);
            match.reflected = reflected;
            match.rotations = rotations;
            return match;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace trisect

#pragma once

// Case tables of the five published configurations and random generators.

#include "oracles.hpp"

#include "trisect/diagram.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace support {

using trisect::Genus2Diagram;
using trisect::Integer;
using trisect::Matrix2i;
using trisect::MonodromySpec;
using trisect::TorusDiagram;
using trisect::Vector2i;
using trisect::Vector4i;

inline Vector2i v2(long long x, long long y) {
  Vector2i v;
  v << x, y;
  return v;
}

inline Vector4i v4(long long a, long long b, long long c, long long d) {
  Vector4i v;
  v << a, b, c, d;
  return v;
}

inline TorusDiagram torus(Vector2i a2, Vector2i b2, Vector2i c2, MonodromySpec mu, int sign = 1) {
  TorusDiagram d;
  d.a2 = std::move(a2);
  d.b2 = std::move(b2);
  d.c2 = std::move(c2);
  d.monodromy = std::move(mu);
  d.sign = sign;
  return d;
}

inline TorusDiagram twisted(Vector2i c2, Vector2i core, int k) {
  return torus(v2(1, 0), v2(0, 1), std::move(c2), MonodromySpec::twisted(std::move(core), k));
}

inline TorusDiagram standard_identity() { return torus(v2(1, 0), v2(0, 1), v2(1, 1), MonodromySpec::identity()); }

inline oracle::V2 plain(const Vector2i& v) { return {static_cast<long long>(v(0)), static_cast<long long>(v(1))}; }
inline oracle::V4 plain(const Vector4i& v) {
  return {static_cast<long long>(v(0)), static_cast<long long>(v(1)), static_cast<long long>(v(2)),
          static_cast<long long>(v(3))};
}

/// One diagram of the published case tables with the values the paper
/// states for it. s = +1 is the upper sign, s = -1 the lower one.
struct Case {
  std::string name;
  int table;            // 1..5, the order of the paper's case analysis
  int s;                // published sign choice
  long long parameter;  // q' (table 1) or r (table 2), else 0
  TorusDiagram diagram;
  std::array<long long, 3> expected_invariant;
  int expected_family;
  int expected_epsilon;  // 0 where the family has no epsilon or it is not pinned
};

/// Table 1, family parameter q' in [-10,10] \ {1}. The case vectors use
/// q = s*q': c2 = (s q - 2, s), d = (-s, 1), k = s. Paper: I = (1, 1, |1 -+ q|).
inline Case table1(long long qp, int s) {
  const long long q = s * qp;
  Case c{"table1 q'=" + std::to_string(qp) + " s=" + std::to_string(s), 1, s, qp,
         twisted(v2(s * q - 2, s), v2(-s, 1), s),
         {1, 1, std::llabs(1 - s * q)}, 2, 0};
  return c;
}

/// Table 2: c2 = (5, -s), d = (r, 1), r = -3s (or the alternative -2s), k = s.
/// Paper: I = (1, |r|, 5 - |r|).
inline Case table2(int s, long long r) {
  return {"table2 s=" + std::to_string(s) + " r=" + std::to_string(r), 2, s, r, twisted(v2(5, -s), v2(r, 1), s),
          {1, std::llabs(r), 5 - std::llabs(r)}, 3, 0};
}

/// Table 3 (t_d^{+-4}): c2 = (-1 + 4 s e, e), d = (1, 0), k = 4s; epsilon = -s e.
inline Case table3(int s, int e) {
  return {"table3 s=" + std::to_string(s) + " e=" + std::to_string(e), 3, s, e,
          twisted(v2(-1 + 4 * s * e, e), v2(1, 0), 4 * s), {0, 1, 1}, 4, -s * e};
}

/// Table 4: c2 = (0, s), d = (1, 0), k = s. b2 || c2, excluded by the theorem.
inline Case table4(int s) {
  return {"table4 s=" + std::to_string(s), 4, s, 0, twisted(v2(0, s), v2(1, 0), s), {0, 1, 1}, 5, -1};
}

/// Table 5: c2 = (-2, -s), d = (1, 0), k = s.
inline Case table5(int s) {
  return {"table5 s=" + std::to_string(s), 5, s, 0, twisted(v2(-2, -s), v2(1, 0), s), {0, 1, 1}, 5, 1};
}

/// Every published case: table 1 over q' in [-10,10] \ {1}, table 2 with
/// r = -3s (and, if requested, the alternative r = -2s), tables 3-5.
inline std::vector<Case> all_cases(bool include_r2 = false) {
  std::vector<Case> out;
  for (int s : {1, -1}) {
    for (long long qp = -10; qp <= 10; ++qp)
      if (qp != 1) out.push_back(table1(qp, s));
    out.push_back(table2(s, -3 * s));
    if (include_r2) out.push_back(table2(s, -2 * s));
    for (int e : {1, -1}) out.push_back(table3(s, e));
    out.push_back(table4(s));
    out.push_back(table5(s));
  }
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(engine_); }
  int sign() { return uniform(0, 1) ? 1 : -1; }

  Vector2i primitive2(long long bound) {
    for (;;) {
      const long long x = uniform(-bound, bound), y = uniform(-bound, bound);
      if (oracle::gcd(x, y) == 1) return v2(x, y);
    }
  }

  Vector4i primitive4(long long bound) {
    for (;;) {
      const long long a = uniform(-bound, bound), b = uniform(-bound, bound), c = uniform(-bound, bound),
                      d = uniform(-bound, bound);
      if (oracle::gcd(oracle::gcd(a, b), oracle::gcd(c, d)) == 1) return v4(a, b, c, d);
    }
  }

  Vector4i vector4(long long bound) {
    return v4(uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound));
  }

  /// Product of random elementary shears, entries bounded by `bound`.
  Matrix2i sl2(long long bound = 20) {
    for (;;) {
      Matrix2i m = Matrix2i::Identity();
      const int steps = static_cast<int>(uniform(1, 6));
      for (int i = 0; i < steps; ++i) {
        Matrix2i e = Matrix2i::Identity();
        if (uniform(0, 1))
          e(0, 1) = uniform(-3, 3);
        else
          e(1, 0) = uniform(-3, 3);
        m = (e * m).eval();
      }
      if (uniform(0, 1)) m = (-m).eval();
      bool small = true;
      for (int i = 0; i < 4; ++i) small = small && trisect::abs_value(Integer(m(i))) <= bound;
      if (small) return m;
    }
  }

  int exponent() {
    static constexpr int ks[] = {-4, -1, 1, 4};
    return ks[uniform(0, 3)];
  }

  TorusDiagram twisted_torus(long long bound = 12) {
    return torus(primitive2(bound), primitive2(bound), primitive2(bound),
                 MonodromySpec::twisted(primitive2(bound), exponent()), sign());
  }

  /// Image of the standard identity triple under a random SL(2,Z) matrix and
  /// random per-class signs.
  TorusDiagram identity_torus() {
    const Matrix2i m = sl2();
    return torus(Vector2i(Integer(sign()) * (m * v2(1, 0))), Vector2i(Integer(sign()) * (m * v2(0, 1))),
                 Vector2i(Integer(sign()) * (m * v2(1, 1))), MonodromySpec::identity(), sign());
  }

  TorusDiagram torus_diagram() { return uniform(0, 9) == 0 ? identity_torus() : twisted_torus(); }

  /// embed_torus of a random torus diagram, moved by a random product of
  /// symplectic transvections (so a1 is in general position).
  Genus2Diagram genus2_diagram(int twists = 3);

 private:
  std::mt19937_64 engine_;
};

inline Genus2Diagram Random::genus2_diagram(int twists) {
  Genus2Diagram g = trisect::embed_torus(torus_diagram());
  for (int i = 0; i < twists; ++i) {
    const Vector4i core = vector4(1);
    const Integer k = sign();
    for (Vector4i* w : {&g.a1, &g.b1, &g.c1, &g.a2, &g.b2, &g.c2}) *w = trisect::transvection(core, k, *w);
  }
  return g;
}

}  // namespace support

#include "trisect/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace trisect {

Move inverse(Move move) {
  switch (move) {
    case Move::Delta1: return Move::Delta1Inverse;
    case Move::Delta1Inverse: return Move::Delta1;
    case Move::Delta2: return Move::Delta2Inverse;
    case Move::Delta2Inverse: return Move::Delta2;
  }
  return move;
}

const char* move_token(Move move) {
  switch (move) {
    case Move::Delta1: return "D1";
    case Move::Delta1Inverse: return "D1'";
    case Move::Delta2: return "D2";
    case Move::Delta2Inverse: return "D2'";
  }
  return "?";
}

MoveWord MoveWord::parse(std::string_view text) {
  std::vector<Move> letters;
  std::string token;
  auto flush = [&](bool final) {
    if (token.empty()) {
      if (final && letters.empty()) return;
      throw MoveWordParseError("empty token in move word");
    }
    if (token == "D1")
      letters.push_back(Move::Delta1);
    else if (token == "D1'")
      letters.push_back(Move::Delta1Inverse);
    else if (token == "D2")
      letters.push_back(Move::Delta2);
    else if (token == "D2'")
      letters.push_back(Move::Delta2Inverse);
    else
      throw MoveWordParseError("unknown move token '" + token + "' (expected D1, D1', D2 or D2')");
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == ',') {
      flush(false);
      continue;
    }
    token.push_back(ch);
  }
  flush(true);
  return MoveWord(std::move(letters));
}

MoveWord MoveWord::rotation() { return MoveWord({Move::Delta1, Move::Delta1, Move::Delta1}); }

bool MoveWord::uses_delta1() const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](Move m) { return m == Move::Delta1 || m == Move::Delta1Inverse; });
}

MoveWord MoveWord::reduced() const {
  std::vector<Move> stack;
  for (Move m : letters_) {
    if (!stack.empty() && stack.back() == trisect::inverse(m))
      stack.pop_back();
    else
      stack.push_back(m);
  }
  return MoveWord(std::move(stack));
}

MoveWord MoveWord::inverse() const {
  std::vector<Move> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(trisect::inverse(*it));
  return MoveWord(std::move(out));
}

MoveWord MoveWord::operator*(const MoveWord& other) const {
  std::vector<Move> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return MoveWord(std::move(out));
}

std::string MoveWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ",";
    out += move_token(letters_[i]);
  }
  return out;
}

Genus2Diagram apply_sigma1(const Genus2Diagram& diagram) {
  require_valid(diagram);
  // second tier is twisted along t_{a1}(b1)
  const Vector4i axis = transvection(diagram.a1, Integer(1), diagram.b1);
  Genus2Diagram out;
  out.a1 = diagram.b1;
  out.b1 = diagram.c1;
  out.c1 = diagram.a1;
  out.a2 = transvection(axis, Integer(1), diagram.a2);
  out.b2 = transvection(axis, Integer(1), diagram.b2);
  out.c2 = transvection(axis, Integer(1), diagram.c2);
  out.exponent = diagram.exponent;
  return out;
}

Genus2Diagram apply_sigma1_inverse(const Genus2Diagram& diagram) {
  require_valid(diagram);
  Genus2Diagram out;
  out.a1 = diagram.c1;
  out.b1 = diagram.a1;
  out.c1 = diagram.b1;
  const Vector4i axis = transvection(out.a1, Integer(1), out.b1);
  out.a2 = transvection(axis, Integer(-1), diagram.a2);
  out.b2 = transvection(axis, Integer(-1), diagram.b2);
  out.c2 = transvection(axis, Integer(-1), diagram.c2);
  out.exponent = diagram.exponent;
  return out;
}

TorusDiagram apply_sigma2(const TorusDiagram& diagram) {
  require_valid(diagram);
  TorusDiagram out = diagram;
  out.a2 = diagram.b2;
  out.b2 = diagram.monodromy.apply_inverse(diagram.c2);
  out.c2 = diagram.a2;
  return out;
}

Genus2Diagram apply_sigma2(const Genus2Diagram& diagram) {
  require_valid(diagram);
  Genus2Diagram out = diagram;
  out.a2 = diagram.b2;
  out.b2 = transvection(diagram.core(), Integer(-diagram.exponent), diagram.c2);
  out.c2 = diagram.a2;
  return out;
}

TorusDiagram apply_sigma2_inverse(const TorusDiagram& diagram) {
  require_valid(diagram);
  TorusDiagram out = diagram;
  out.a2 = diagram.c2;
  out.b2 = diagram.a2;
  out.c2 = diagram.monodromy.apply(diagram.b2);
  return out;
}

Genus2Diagram apply_sigma2_inverse(const Genus2Diagram& diagram) {
  require_valid(diagram);
  Genus2Diagram out = diagram;
  out.a2 = diagram.c2;
  out.b2 = diagram.a2;
  out.c2 = transvection(diagram.core(), Integer(diagram.exponent), diagram.b2);
  return out;
}

Matrix2i sigma2_cubed_witness(const TorusDiagram& diagram) {
  require_valid(diagram);
  if (!diagram.monodromy.twist) return Matrix2i::Identity();
  const auto& twist = *diagram.monodromy.twist;
  return transvection_matrix(twist.core, Integer(-twist.exponent));
}

TorusDiagram transform(const TorusDiagram& diagram, const Matrix2i& m) {
  TorusDiagram out = diagram;
  out.a2 = m * diagram.a2;
  out.b2 = m * diagram.b2;
  out.c2 = m * diagram.c2;
  if (out.monodromy.twist) out.monodromy.twist->core = m * diagram.monodromy.twist->core;
  return out;
}

namespace {

template <typename Diagram>
Diagram apply_move(const Diagram& diagram, Move move) {
  switch (move) {
    case Move::Delta1:
      if constexpr (std::is_same_v<Diagram, Genus2Diagram>) return apply_sigma1(diagram);
      break;
    case Move::Delta1Inverse:
      if constexpr (std::is_same_v<Diagram, Genus2Diagram>) return apply_sigma1_inverse(diagram);
      break;
    case Move::Delta2: return apply_sigma2(diagram);
    case Move::Delta2Inverse: return apply_sigma2_inverse(diagram);
  }
  throw MoveError("sigma1 requires genus2 model");
}

Vector2i sign_normalized(const Vector2i& v) {
  if (v(0) < 0 || (v(0) == 0 && v(1) < 0)) return -v;
  return v;
}

}  // namespace

Genus2Diagram apply_word(const Genus2Diagram& diagram, const MoveWord& word) {
  Genus2Diagram current = diagram;
  for (Move m : word.letters()) current = apply_move(current, m);
  return current;
}

TorusDiagram apply_word(const TorusDiagram& diagram, const MoveWord& word) {
  if (word.uses_delta1()) throw MoveError("sigma1 requires genus2 model");
  TorusDiagram current = diagram;
  for (Move m : word.letters()) current = apply_move(current, m);
  return current;
}

CanonicalForm canonical_form(const TorusDiagram& diagram) {
  require_valid(diagram);
  Matrix2i m = sl2_complete(sign_normalized(diagram.a2));
  TorusDiagram moved = transform(diagram, m);

  std::vector<Vector2i> rest = {moved.b2, moved.c2};
  if (moved.monodromy.twist) rest.push_back(moved.monodromy.twist->core);
  for (const auto& v : rest) {
    if (v(1) == 0) continue;
    const Vector2i w = v(1) < 0 ? Vector2i(-v) : v;
    const Integer shift = -floor_div(Integer(w(0)), Integer(w(1)));
    const Matrix2i shear = upper_shear(shift);
    m = (shear * m).eval();
    moved = transform(moved, shear);
    break;
  }

  moved.a2 = sign_normalized(moved.a2);
  moved.b2 = sign_normalized(moved.b2);
  moved.c2 = sign_normalized(moved.c2);
  if (moved.monodromy.twist) moved.monodromy.twist->core = sign_normalized(moved.monodromy.twist->core);
  return {moved, m};
}

std::string canonical_key(const TorusDiagram& diagram) {
  const TorusDiagram c = canonical_form(diagram).diagram;
  std::string key = "a2=" + format_vector(c.a2) + " b2=" + format_vector(c.b2) + " c2=" + format_vector(c.c2);
  if (c.monodromy.twist)
    key += " d=" + format_vector(c.monodromy.twist->core) + " k=" + std::to_string(c.monodromy.twist->exponent);
  else
    key += " identity";
  key += " s=" + std::to_string(c.sign);
  return key;
}

std::optional<EquivalenceWitness> equivalent(const TorusDiagram& first, const TorusDiagram& second) {
  require_valid(first);
  require_valid(second);
  if (first.sign != second.sign || first.monodromy.exponent() != second.monodromy.exponent()) return std::nullopt;

  std::vector<Vector2i> source = {first.a2, first.b2, first.c2};
  std::vector<Vector2i> target = {second.a2, second.b2, second.c2};
  if (first.monodromy.twist) {
    source.push_back(first.monodromy.twist->core);
    target.push_back(second.monodromy.twist->core);
  }

  auto verify = [&](const Matrix2i& m) -> std::optional<EquivalenceWitness> {
    if (determinant(m) != 1) return std::nullopt;
    EquivalenceWitness witness{m, {1, 1, 1, 1}};
    for (std::size_t l = 0; l < source.size(); ++l) {
      const Vector2i image = m * source[l];
      if (image == target[l])
        witness.signs[l] = 1;
      else if (image == -target[l])
        witness.signs[l] = -1;
      else
        return std::nullopt;
    }
    return witness;
  };

  // Two independent labels pin M down; otherwise every class is ± one
  // primitive class and any M carrying it across will do.
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = i + 1; j < source.size(); ++j) {
      const Integer det = intersection(source[i], source[j]);
      if (det == 0) continue;
      Matrix2i adjugate;
      adjugate << source[j](1), -source[j](0), -source[i](1), source[i](0);
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Matrix2i w;
          w.col(0) = Integer(si) * target[i];
          w.col(1) = Integer(sj) * target[j];
          const Matrix2i numerator = w * adjugate;
          bool divisible = true;
          Matrix2i m;
          for (int r = 0; r < 2 && divisible; ++r)
            for (int c = 0; c < 2 && divisible; ++c) {
              if (numerator(r, c) % det != 0)
                divisible = false;
              else
                m(r, c) = numerator(r, c) / det;
            }
          if (!divisible) continue;
          if (auto witness = verify(m)) return witness;
        }
      }
      return std::nullopt;
    }
  }
  const Matrix2i from = sl2_complete(source[0]);
  for (int s : {1, -1}) {
    const Matrix2i to = sl2_complete(Vector2i(Integer(s) * target[0]));
    if (auto witness = verify(unimodular_inverse(to) * from)) return witness;
  }
  return std::nullopt;
}

namespace {

template <typename State>
OrbitGraph breadth_first_orbit(const State& start, std::size_t depth, const std::vector<Move>& generators,
                               const std::function<TorusDiagram(const State&)>& project) {
  OrbitGraph graph;
  std::map<std::string, std::size_t> index;
  std::vector<State> states;

  auto add_node = [&](const std::string& key, const State& state, std::size_t level) {
    const TorusDiagram projected = project(state);
    index.emplace(key, graph.nodes.size());
    graph.nodes.push_back({key, projected, invariant(projected), level});
    states.push_back(state);
    return graph.nodes.size() - 1;
  };

  add_node(canonical_key(project(start)), start, 0);
  std::vector<std::size_t> frontier = {0};
  for (std::size_t level = 1; level <= depth && !frontier.empty(); ++level) {
    struct PendingEdge {
      std::size_t from;
      std::string key;
      Move move;
    };
    std::vector<PendingEdge> pending_edges;
    std::map<std::string, State> discovered;
    for (std::size_t id : frontier) {
      const State current = states[id];
      for (Move move : generators) {
        const State next = apply_move(current, move);
        std::string key = canonical_key(project(next));
        if (!index.count(key)) discovered.emplace(key, next);
        pending_edges.push_back({id, std::move(key), move});
      }
    }
    frontier.clear();
    for (const auto& [key, state] : discovered) frontier.push_back(add_node(key, state, level));
    for (const auto& e : pending_edges) graph.edges.push_back({e.from, index.at(e.key), e.move});
  }
  return graph;
}

}  // namespace

OrbitGraph orbit(const TorusDiagram& diagram, std::size_t depth) {
  require_valid(diagram);
  return breadth_first_orbit<TorusDiagram>(diagram, depth, {Move::Delta2, Move::Delta2Inverse},
                                           [](const TorusDiagram& d) { return d; });
}

OrbitGraph orbit(const Genus2Diagram& diagram, std::size_t depth) {
  require_valid(diagram);
  return breadth_first_orbit<Genus2Diagram>(
      diagram, depth, {Move::Delta1, Move::Delta1Inverse, Move::Delta2, Move::Delta2Inverse},
      [](const Genus2Diagram& d) { return surgery_project(d); });
}

}  // namespace trisect

#pragma once

// Reference-path moves. A Delta1-move induces sigma1 (genus-2 model only),
// a Delta2-move induces sigma2 (both models). Words over the four generators
// act left to right.

#include "trisect/diagram.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisect {

enum class Move { Delta1, Delta1Inverse, Delta2, Delta2Inverse };

Move inverse(Move move);
const char* move_token(Move move);  // D1, D1', D2, D2'

class MoveWordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MoveWord {
 public:
  MoveWord() = default;
  explicit MoveWord(std::vector<Move> letters) : letters_(std::move(letters)) {}

  /// Comma-separated tokens D1, D1', D2, D2' (whitespace ignored, empty word allowed).
  static MoveWord parse(std::string_view text);
  /// Rotation of the target disk, realized as three successive Delta1-moves.
  static MoveWord rotation();

  const std::vector<Move>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  bool uses_delta1() const;

  /// Cancels adjacent inverse pairs.
  MoveWord reduced() const;
  MoveWord inverse() const;
  MoveWord operator*(const MoveWord& other) const;  // concatenation

  std::string str() const;
  bool operator==(const MoveWord& other) const { return letters_ == other.letters_; }

 private:
  std::vector<Move> letters_;
};

class MoveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Genus2Diagram apply_sigma1(const Genus2Diagram& diagram);
Genus2Diagram apply_sigma1_inverse(const Genus2Diagram& diagram);

TorusDiagram apply_sigma2(const TorusDiagram& diagram);
Genus2Diagram apply_sigma2(const Genus2Diagram& diagram);
TorusDiagram apply_sigma2_inverse(const TorusDiagram& diagram);
Genus2Diagram apply_sigma2_inverse(const Genus2Diagram& diagram);

/// Matrix of mu1^{-1}; sigma2^3 applies it to every second-tier class.
Matrix2i sigma2_cubed_witness(const TorusDiagram& diagram);

/// Applies a unimodular matrix to every class (including the twist core).
TorusDiagram transform(const TorusDiagram& diagram, const Matrix2i& m);

Genus2Diagram apply_word(const Genus2Diagram& diagram, const MoveWord& word);
/// Throws MoveError if the word contains a Delta1 generator.
TorusDiagram apply_word(const TorusDiagram& diagram, const MoveWord& word);

struct CanonicalForm {
  TorusDiagram diagram;
  Matrix2i basis_change;  // classes of the input, mapped by this, equal ± the canonical classes
};

/// Normal form under SL(2,Z) and per-class sign: a2 -> (1,0), then the upper
/// shear fixing (1,0) reduces the first class not parallel to a2 to (x, y)
/// with y > 0 and 0 <= x < y. Every class is signed so its first nonzero
/// coordinate is positive.
CanonicalForm canonical_form(const TorusDiagram& diagram);

/// Text key of the canonical form; equal keys iff equivalent diagrams.
std::string canonical_key(const TorusDiagram& diagram);

struct EquivalenceWitness {
  Matrix2i matrix;
  std::array<int, 4> signs{1, 1, 1, 1};  // a2, b2, c2, twist core
};

/// Looks for M in SL(2,Z) with M w1 = ±w2 for each label (a2, b2, c2, d).
/// Exponent and configuration sign must agree.
std::optional<EquivalenceWitness> equivalent(const TorusDiagram& first, const TorusDiagram& second);

struct OrbitNode {
  std::string key;
  TorusDiagram diagram;  // projected representative
  InvariantVector invariant;
  std::size_t depth = 0;
};

struct OrbitEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Move move = Move::Delta2;
};

struct OrbitGraph {
  std::vector<OrbitNode> nodes;
  std::vector<OrbitEdge> edges;
};

/// Breadth-first closure under sigma2 and its inverse, nodes identified by
/// canonical form.
OrbitGraph orbit(const TorusDiagram& diagram, std::size_t depth);
/// Same, also closing under sigma1 and its inverse. Nodes are keyed by the
/// canonical form of the surgered diagram.
OrbitGraph orbit(const Genus2Diagram& diagram, std::size_t depth);

}  // namespace trisect

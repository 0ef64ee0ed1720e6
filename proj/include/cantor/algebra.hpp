#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cantor/core_space.hpp"

namespace cantor {

/*
 * Cayley table of a binary operation on a finite alphabet. The table must
 * be total; a declared identity or inverse map is checked against the
 * axioms at construction. Associativity is NOT required here — broken
 * tables are constructible so validate_op_table can report on them.
 */
class OpTable {
public:
  OpTable(Alphabet alphabet, std::vector<std::vector<Symbol>> table,
          std::optional<Symbol> identity = std::nullopt,
          std::optional<std::vector<Symbol>> inverse = std::nullopt);

  // Cyclic group Z/n under addition, identity 0 (also the basepoint).
  static OpTable cyclic(int n);
  static OpTable xor2() { return cyclic(2); }

  const Alphabet& alphabet() const { return alphabet_; }
  Symbol apply(Symbol a, Symbol b) const;

  std::optional<Symbol> declared_identity() const { return identity_; }
  // Two-sided identity found by search (declared one agrees when present).
  std::optional<Symbol> find_identity() const;
  // Two-sided inverse of `a`, from the declared map or by table search.
  std::optional<Symbol> inverse_of(Symbol a) const;

private:
  Alphabet alphabet_;
  std::vector<Symbol> table_;  // row-major size*size
  std::optional<Symbol> identity_;
  std::optional<std::vector<Symbol>> inverse_;
};

struct OpTableReport {
  bool associative = false;
  bool has_identity = false;
  bool is_group = false;
  std::optional<Symbol> identity;
  // Witness (a,b,c) with (a.b).c != a.(b.c) when associativity fails.
  std::optional<std::array<Symbol, 3>> failing_triple;
  // A symbol with no two-sided inverse when is_group fails despite identity.
  std::optional<Symbol> missing_inverse;
};

// Brute force over all |E|^3 triples for associativity; identity and
// inverses by exhaustive search.
OpTableReport validate_op_table(const OpTable& t);

/*
 * Per-level operation tables, cycled like a LevelSystem: level l uses
 * tables[(l-1) mod tables.size()]. One table = homogeneous structure.
 */
class TermwiseStructure {
public:
  explicit TermwiseStructure(OpTable table);
  explicit TermwiseStructure(std::vector<OpTable> tables);

  const OpTable& table_at(int level) const;  // level >= 1
  int cycle_length() const { return static_cast<int>(tables_.size()); }
  LevelSystem level_system() const;
  bool is_homogeneous() const;

private:
  std::vector<OpTable> tables_;
};

// z with z_l = table_l(x_l, y_l); eventually periodic with preperiod
// max(|pre_x|, |pre_y|) and period dividing lcm of the input periods (and
// of the table cycle).
SequenceDescriptor termwise_op(const SequenceDescriptor& x, const SequenceDescriptor& y,
                               const TermwiseStructure& s);

// Termwise inverse; requires every table involved to be a group table
// (throws Error{domain} otherwise).
SequenceDescriptor termwise_inverse(const SequenceDescriptor& x,
                                    const TermwiseStructure& s);

// Termwise operation on doubly-infinite sequences over one table. When the
// basepoint is the identity this keeps left-basepoint sequences closed
// under the operation.
BiSequenceDescriptor termwise_op(const BiSequenceDescriptor& x,
                                 const BiSequenceDescriptor& y, const OpTable& table);

/*
 * Cylinder-level statement of continuity of the termwise operation: the
 * depth-m prefix of x.y depends only on the depth-m prefixes of x and y.
 * Verified exhaustively over all depth-m prefix pairs and all one-level
 * tail extensions. Homogeneous structures with |E| <= 4 and m <= 4 only
 * (the check is exponential by design).
 */
bool locality_check(const TermwiseStructure& s, int m);

}  // namespace cantor

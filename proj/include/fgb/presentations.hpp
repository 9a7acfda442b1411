// Symbolic presentations of the y-conjugating automorphism groups and their
// tuple-group extensions: generator/relation enumeration, soundness
// verification against the executable groups, and H1 via integer Smith
// normal form.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgb/boundary.hpp"
#include "fgb/endos.hpp"
#include "fgb/snf.hpp"

namespace fgb {

// conj: the automorphism group, elements realized as endomorphisms.
// bdy: the tuple-group extension, elements realized as boundary tuples.
enum class Group { conj, bdy };
std::string group_name(Group g);
std::optional<Group> parse_group(const std::string& s);

enum class Schema { Q1, Q2, Q3_1, Q3_2, Q4_1, Q4_2, Q5, Q2p, Q5p, Z1, Z2, Z3 };
std::string schema_name(Schema s);
std::optional<Schema> parse_schema(const std::string& s);

// Presentation generator symbols.
//   P(i,j)        swap of x_i and x_j (stored with i < j)
//   I(i)          inversion of x_i
//   XMove(i,eps,z)  x_i -> x_i z (eps=+1) or z^-1 x_i (eps=-1)
//   YMove(i,z)    y_i -> z^-1 y_i z
//   YSelf(i)      conjugation of y_i by itself; a tuple-group generator only
struct GenSymbol {
  enum class Type { P, I, XMove, YMove, YSelf };
  Type type = Type::P;
  int i = 0;
  int j = 0;    // P only
  int eps = 1;  // XMove only
  Gen z{};      // XMove / YMove target letter (positive)

  auto operator<=>(const GenSymbol&) const = default;
};

GenSymbol sym_p(int i, int j);
GenSymbol sym_i(int i);
GenSymbol sym_xmove(int i, int eps, Gen z);
GenSymbol sym_ymove(int i, Gen z);
GenSymbol sym_yself(int i);
std::string to_string(const GenSymbol& s);

bool symbol_wellformed(const GenSymbol& s, int n, int k, Group group);

// A symbol or its inverse; relation sides are words in these.
struct SignedSymbol {
  GenSymbol sym;
  int pow = 1;
};
using SymbolWord = std::vector<SignedSymbol>;
std::string to_string(const SymbolWord& w);

struct RelationInstance {
  Schema schema;
  std::string params;  // deterministic parameter binding, for reports
  SymbolWord lhs, rhs;
};

// Exact duplicate-free enumerations.  Counts per the presentation tables:
// P: n(n-1)/2, I: n, XMove: 2n(n+k-1), YMove: k(n+k-1), plus YSelf: k for
// the tuple group.
std::vector<GenSymbol> enumerate_generators(int n, int k, Group group);
std::vector<RelationInstance> enumerate_relations(int n, int k, Group group);

Endomorphism realize_conj(const GenSymbol& s, int pow, int n, int k);
BoundaryElement realize_bdy(const GenSymbol& s, int pow, int n, int k);
Endomorphism evaluate_conj(const SymbolWord& w, int n, int k);
BoundaryElement evaluate_bdy(const SymbolWord& w, int n, int k);

// Left-to-right evaluation of lhs and rhs; equal iff the relation holds.
// On failure a witness (first generator with differing images) is written.
bool verify_relation(const RelationInstance& r, int n, int k, Group group,
                     std::string* witness = nullptr);

struct RelationFailure {
  Schema schema;
  std::string params;
  std::string witness;
};

struct SchemaSummary {
  Schema schema;
  long long instances = 0;
  long long failed = 0;
};

struct VerifyReport {
  int n = 0;
  int k = 0;
  Group group = Group::conj;
  std::vector<SchemaSummary> schemas;
  std::vector<RelationFailure> failures;

  long long total_instances() const;
  long long total_failed() const;
  bool ok() const { return total_failed() == 0; }
};

// Soundness suite.  The serial driver is the reference implementation; the
// parallel driver shards instances across OpenMP threads and produces a
// byte-identical report.
VerifyReport verify_relations_serial(int n, int k, Group group,
                                     const std::vector<Schema>& only = {});
VerifyReport verify_relations_parallel(int n, int k, Group group,
                                       const std::vector<Schema>& only = {});
VerifyReport verify_relations(int n, int k, Group group,
                              const std::vector<Schema>& only = {},
                              bool parallel = true);

// Whitehead-relation suite R1..R10 over the cycle-preserving automorphism
// class at rank n+k (letter sets of the form X ∪ {y-pairs} ∪ {a}), each
// instance checked as an automorphism identity.
struct McCoolReport {
  int n = 0;
  int k = 0;
  std::vector<std::pair<std::string, long long>> counts;          // per schema
  std::vector<std::pair<std::string, std::string>> failures;      // (instance, witness)
  bool ok() const { return failures.empty(); }
  long long total_instances() const;
};
McCoolReport verify_mccool_R(int n, int k, bool parallel = true);

// Row per relation instance, column per generator; entries are exponent sums
// of the generator in lhs * rhs^-1.
std::vector<std::vector<long long>> abelianized_relation_matrix(int n, int k, Group group);

// Cokernel of the abelianized relation matrix.
AbelianGroupShape h1(int n, int k, Group group);

// Full enumeration is bounded by default; larger parameters need an explicit
// override at the CLI.
inline constexpr int kPresentationBudget = 5;  // cap on n + k
void check_presentation_budget(int n, int k, int budget = kPresentationBudget);

}  // namespace fgb

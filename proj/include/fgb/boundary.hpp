// The tuple groups of automorphisms with marked boundary cycles: elements
// <nu, w> recording images of the x generators and explicit conjugators for
// the y generators, the projection to the y-conjugating automorphism group,
// the central Z^k, the order-3 marker rotations and the embedding into the
// extended automorphism group, and the boundary-word subgroup test.

#pragma once

#include <optional>
#include <vector>

#include "fgb/endos.hpp"
#include "fgb/words.hpp"

namespace fgb {

struct NotAnAutomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAMember : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct OddRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct KZero : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Element <nu, w> of the tuple group at rank (n, k).  Construction verifies
// that the induced endomorphism is an automorphism unless the caller is a
// trusted operation whose formula preserves the invariant.
struct BoundaryElement {
  Rank rank;                // non-extended (n, k)
  std::vector<Word> nu;     // images of x_1..x_n
  std::vector<Word> w;      // conjugators for y_1..y_k

  bool operator==(const BoundaryElement&) const = default;
};

BoundaryElement make_boundary_element(int n, int k, std::vector<Word> nu,
                                      std::vector<Word> w);
BoundaryElement unit_element(int n, int k);

// x_i -> nu_i, y_j -> w_j^-1 y_j w_j.
Endomorphism induced_automorphism(const BoundaryElement& e);

// <nu,w> . <nu',w'> = < A[nu], w'_j * A[w_j] > with A the automorphism
// induced by the right factor.  induced_automorphism is then a homomorphism.
BoundaryElement multiply(const BoundaryElement& a, const BoundaryElement& b);
BoundaryElement inverse(const BoundaryElement& e);
BoundaryElement element_power(const BoundaryElement& e, int m);

// The central Z^k: z -> (x_1,...,x_n, y_1^{z_1},...,y_k^{z_k}).
BoundaryElement central_inclusion(int n, int k, const std::vector<long long>& z);

// Recovers z with e == central_inclusion(z) iff the induced automorphism is
// the identity; nullopt otherwise.
std::optional<std::vector<long long>> kernel_check(const BoundaryElement& e);

// Membership in the y-conjugating automorphism group: e is an automorphism
// sending each y_j to a conjugate of y_j.
bool is_y_conjugating(const Endomorphism& e);

// Canonical set-section of induced_automorphism: conjugators are the
// deterministic witnesses produced by are_conjugate.  Sends the identity to
// the unit element.
BoundaryElement section_lift(const Endomorphism& e);

// Order-3 rotation of the marker letters: u_j -> v_j, v_j -> v_j^-1 u_j^-1,
// everything else fixed.  Lives at the extended rank (n, k, extended).
Endomorphism theta_generator(int j, int n, int k);

// Tuple element together with a permutation of the cycle labels.
struct SigmaBoundaryElement {
  std::vector<int> sigma;   // sigma[j-1] = image of label j, 1-based values
  BoundaryElement element;

  bool operator==(const SigmaBoundaryElement&) const = default;
};

SigmaBoundaryElement make_sigma_element(std::vector<int> sigma, BoundaryElement e);
SigmaBoundaryElement sigma_unit(int n, int k);
SigmaBoundaryElement sigma_multiply(const SigmaBoundaryElement& a,
                                    const SigmaBoundaryElement& b);
SigmaBoundaryElement sigma_inverse(const SigmaBoundaryElement& s);

// Embedding into the automorphism group of the extended free group:
// x_i -> nu_i, and y/u/v_j -> w_j^-1 (y/u/v)_{sigma(j)} w_j.
Endomorphism marker_embedding(const SigmaBoundaryElement& s);

// If conjugation by e permutes the marker rotations theta_1..theta_k
// (e o theta_l o e^-1 == theta_{sigma(l)} as endomorphisms), returns sigma;
// nullopt otherwise.  Throws NotInvertible when e is not an automorphism.
std::optional<std::vector<int>> normalizing_permutation(const Endomorphism& e);

// c = [x1,x2]...[x_{2g-1},x_{2g}] y_1...y_k at rank (2g, k).
Word boundary_word(int genus, int k);

// Whether the induced automorphism fixes the boundary word letter-exactly;
// the mapping-class subgroup test.  Requires n == 2*genus.
bool fixes_boundary_word(const BoundaryElement& e, int genus);

// 2n+2k-1 pairwise commuting elements of infinite order: n sending
// x_i -> x_i y_k, n sending x_i -> y_k x_i, k conjugating y_j by y_k, and
// k-1 conjugating y_j by y_j.  Requires k >= 1.
std::vector<BoundaryElement> commuting_witness_family(int n, int k);

}  // namespace fgb

#include "fgb/boundary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fgb {

namespace {

BoundaryElement trusted(Rank r, std::vector<Word> nu, std::vector<Word> w) {
  return BoundaryElement{r, std::move(nu), std::move(w)};
}

void check_shape(int n, int k, const std::vector<Word>& nu, const std::vector<Word>& w) {
  Rank r{n, k, false};
  if (static_cast<int>(nu.size()) != n || static_cast<int>(w.size()) != k) {
    throw std::invalid_argument("tuple must have n x-images and k conjugators");
  }
  for (const Word& v : nu) {
    if (v.rank != r) throw RankMismatch("tuple word in wrong rank context");
  }
  for (const Word& v : w) {
    if (v.rank != r) throw RankMismatch("tuple word in wrong rank context");
  }
}

}  // namespace

BoundaryElement make_boundary_element(int n, int k, std::vector<Word> nu,
                                      std::vector<Word> w) {
  check_shape(n, k, nu, w);
  BoundaryElement e{Rank{n, k, false}, std::move(nu), std::move(w)};
  if (!is_automorphism(induced_automorphism(e))) {
    throw NotAnAutomorphism("tuple does not induce an automorphism");
  }
  return e;
}

BoundaryElement unit_element(int n, int k) {
  Rank r{n, k, false};
  std::vector<Word> nu, w;
  for (int i = 1; i <= n; ++i) nu.push_back(word_gen(r, gen_x(i)));
  for (int j = 1; j <= k; ++j) w.push_back(word_identity(r));
  return trusted(r, std::move(nu), std::move(w));
}

Endomorphism induced_automorphism(const BoundaryElement& e) {
  const Rank& r = e.rank;
  Endomorphism a{r, {}};
  a.images.reserve(r.total());
  for (int i = 0; i < r.n; ++i) a.images.push_back(e.nu[i]);
  for (int j = 0; j < r.k; ++j) {
    Word y = word_gen(r, gen_y(j + 1));
    a.images.push_back(conjugate(y, e.w[j]));
  }
  return a;
}

BoundaryElement multiply(const BoundaryElement& a, const BoundaryElement& b) {
  if (a.rank != b.rank) throw RankMismatch("multiply: tuple ranks differ");
  Endomorphism rb = induced_automorphism(b);
  std::vector<Word> nu, w;
  nu.reserve(a.nu.size());
  w.reserve(a.w.size());
  for (const Word& v : a.nu) nu.push_back(apply(rb, v));
  for (int j = 0; j < a.rank.k; ++j) {
    w.push_back(multiply(b.w[j], apply(rb, a.w[j])));
  }
  return trusted(a.rank, std::move(nu), std::move(w));
}

BoundaryElement inverse(const BoundaryElement& e) {
  auto inv = is_automorphism(induced_automorphism(e));
  if (!inv) throw NotAnAutomorphism("tuple does not induce an automorphism");
  std::vector<Word> nu, w;
  for (int i = 0; i < e.rank.n; ++i) {
    nu.push_back(apply(*inv, word_gen(e.rank, gen_x(i + 1))));
  }
  for (int j = 0; j < e.rank.k; ++j) {
    w.push_back(invert(apply(*inv, e.w[j])));
  }
  return trusted(e.rank, std::move(nu), std::move(w));
}

BoundaryElement element_power(const BoundaryElement& e, int m) {
  BoundaryElement base = m >= 0 ? e : inverse(e);
  BoundaryElement acc = unit_element(e.rank.n, e.rank.k);
  for (int i = 0; i < std::abs(m); ++i) acc = multiply(acc, base);
  return acc;
}

BoundaryElement central_inclusion(int n, int k, const std::vector<long long>& z) {
  if (static_cast<int>(z.size()) != k) {
    throw std::invalid_argument("central vector must have length k");
  }
  Rank r{n, k, false};
  std::vector<Word> nu, w;
  for (int i = 1; i <= n; ++i) nu.push_back(word_gen(r, gen_x(i)));
  for (int j = 1; j <= k; ++j) {
    w.push_back(word_gen(r, gen_y(j), static_cast<int>(z[j - 1])));
  }
  return trusted(r, std::move(nu), std::move(w));
}

std::optional<std::vector<long long>> kernel_check(const BoundaryElement& e) {
  for (int i = 0; i < e.rank.n; ++i) {
    if (!(e.nu[i] == word_gen(e.rank, gen_x(i + 1)))) return std::nullopt;
  }
  std::vector<long long> z;
  for (int j = 0; j < e.rank.k; ++j) {
    long long exp = 0;
    for (const Letter& l : e.w[j].letters) {
      if (!(l.gen == gen_y(j + 1))) return std::nullopt;
      exp += l.sign;
    }
    z.push_back(exp);  // reduced all-y_j words are exactly the powers of y_j
  }
  return z;
}

bool is_y_conjugating(const Endomorphism& e) {
  if (e.rank.extended) return false;
  if (!is_automorphism(e)) return false;
  for (int j = 1; j <= e.rank.k; ++j) {
    Word y = word_gen(e.rank, gen_y(j));
    if (!are_conjugate(y, e.image(gen_y(j)))) return false;
  }
  return true;
}

BoundaryElement section_lift(const Endomorphism& e) {
  if (!is_y_conjugating(e)) {
    throw NotAMember("endomorphism is not a y-conjugating automorphism");
  }
  std::vector<Word> nu, w;
  for (int i = 1; i <= e.rank.n; ++i) nu.push_back(e.image(gen_x(i)));
  for (int j = 1; j <= e.rank.k; ++j) {
    Word y = word_gen(e.rank, gen_y(j));
    w.push_back(*are_conjugate(y, e.image(gen_y(j))));
  }
  return trusted(e.rank, std::move(nu), std::move(w));
}

Endomorphism theta_generator(int j, int n, int k) {
  if (j < 1 || j > k) throw IndexOutOfRange("marker rotation index out of range");
  Rank r{n, k, true};
  Endomorphism e = identity_endo(r);
  Word u = word_gen(r, gen_u(j));
  Word v = word_gen(r, gen_v(j));
  e.images[slot_of(r, gen_u(j))] = v;
  e.images[slot_of(r, gen_v(j))] = multiply(invert(v), invert(u));
  return e;
}

namespace {
Endomorphism twisted_automorphism(const SigmaBoundaryElement& b);
}

SigmaBoundaryElement make_sigma_element(std::vector<int> sigma, BoundaryElement e) {
  const int k = e.rank.k;
  if (static_cast<int>(sigma.size()) != k) {
    throw std::invalid_argument("permutation must have length k");
  }
  std::vector<int> seen(k, 0);
  for (int v : sigma) {
    if (v < 1 || v > k) throw std::invalid_argument("permutation entries must be 1..k");
    seen[v - 1] += 1;
  }
  for (int c : seen) {
    if (c != 1) throw std::invalid_argument("not a permutation");
  }
  SigmaBoundaryElement s{std::move(sigma), std::move(e)};
  // The composite x_i -> nu_i, y_j -> w_j^-1 y_{sigma(j)} w_j must be an
  // automorphism; that is not implied by the tuple alone once sigma twists
  // the targets.
  if (!is_automorphism(twisted_automorphism(s))) {
    throw NotAnAutomorphism("permutation and tuple do not combine to an automorphism");
  }
  return s;
}

SigmaBoundaryElement sigma_unit(int n, int k) {
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 1);
  return SigmaBoundaryElement{std::move(sigma), unit_element(n, k)};
}

namespace {

// Restriction of marker_embedding(b) to the base rank: x_i -> nu_i,
// y_j -> w_j^-1 y_{sigma(j)} w_j.  Image words stay inside the base letters.
Endomorphism twisted_automorphism(const SigmaBoundaryElement& b) {
  const Rank& r = b.element.rank;
  Endomorphism a{r, {}};
  for (int i = 0; i < r.n; ++i) a.images.push_back(b.element.nu[i]);
  for (int j = 0; j < r.k; ++j) {
    Word y = word_gen(r, gen_y(b.sigma[j]));
    a.images.push_back(conjugate(y, b.element.w[j]));
  }
  return a;
}

}  // namespace

SigmaBoundaryElement sigma_multiply(const SigmaBoundaryElement& a,
                                    const SigmaBoundaryElement& b) {
  if (a.element.rank != b.element.rank) throw RankMismatch("sigma_multiply: ranks differ");
  const int k = a.element.rank.k;
  Endomorphism tw = twisted_automorphism(b);
  std::vector<int> sigma(k);
  std::vector<Word> nu, w;
  for (int j = 0; j < k; ++j) sigma[j] = b.sigma[a.sigma[j] - 1];
  for (const Word& v : a.element.nu) nu.push_back(apply(tw, v));
  for (int j = 0; j < k; ++j) {
    w.push_back(multiply(b.element.w[a.sigma[j] - 1], apply(tw, a.element.w[j])));
  }
  return SigmaBoundaryElement{std::move(sigma),
                              trusted(a.element.rank, std::move(nu), std::move(w))};
}

SigmaBoundaryElement sigma_inverse(const SigmaBoundaryElement& s) {
  const Rank& r = s.element.rank;
  const int k = r.k;
  auto inv = is_automorphism(twisted_automorphism(s));
  if (!inv) throw NotAnAutomorphism("tuple does not induce an automorphism");
  std::vector<int> tau(k);
  for (int j = 0; j < k; ++j) tau[s.sigma[j] - 1] = j + 1;
  std::vector<Word> nu, w;
  for (int i = 1; i <= r.n; ++i) nu.push_back(apply(*inv, word_gen(r, gen_x(i))));
  for (int j = 1; j <= k; ++j) {
    // the inverse sends y_j to a conjugate of y_{tau(j)}
    Word target = word_gen(r, gen_y(tau[j - 1]));
    auto witness = are_conjugate(target, apply(*inv, word_gen(r, gen_y(j))));
    if (!witness) throw std::logic_error("sigma_inverse: conjugator extraction failed");
    w.push_back(*witness);
  }
  SigmaBoundaryElement out{std::move(tau), trusted(r, std::move(nu), std::move(w))};
  if (!(sigma_multiply(s, out) == sigma_unit(r.n, k)) ||
      !(sigma_multiply(out, s) == sigma_unit(r.n, k))) {
    throw std::logic_error("sigma_inverse: verification failed");
  }
  return out;
}

Endomorphism marker_embedding(const SigmaBoundaryElement& s) {
  const Rank base = s.element.rank;
  const Rank ext = base.extend();
  Endomorphism e{ext, {}};
  e.images.reserve(ext.total());
  for (int i = 0; i < base.n; ++i) e.images.push_back(extend(s.element.nu[i]));
  auto conj_slot = [&](Gen target, int j) {
    Word t = word_gen(ext, target);
    return conjugate(t, extend(s.element.w[j]));
  };
  for (int j = 0; j < base.k; ++j) e.images.push_back(conj_slot(gen_y(s.sigma[j]), j));
  for (int j = 0; j < base.k; ++j) e.images.push_back(conj_slot(gen_u(s.sigma[j]), j));
  for (int j = 0; j < base.k; ++j) e.images.push_back(conj_slot(gen_v(s.sigma[j]), j));
  return e;
}

std::optional<std::vector<int>> normalizing_permutation(const Endomorphism& e) {
  if (!e.rank.extended) throw std::invalid_argument("expected an extended-rank endomorphism");
  auto inv = is_automorphism(e);
  if (!inv) throw NotInvertible("endomorphism is not an automorphism");
  const int n = e.rank.n;
  const int k = e.rank.k;
  std::vector<Endomorphism> thetas;
  for (int j = 1; j <= k; ++j) thetas.push_back(theta_generator(j, n, k));
  std::vector<int> sigma(k, 0);
  std::vector<int> hit(k, 0);
  for (int l = 0; l < k; ++l) {
    Endomorphism conj = compose(compose(*inv, thetas[l]), e);  // e o theta_l o e^-1
    for (int m = 0; m < k; ++m) {
      if (conj == thetas[m]) {
        sigma[l] = m + 1;
        hit[m] += 1;
        break;
      }
    }
    if (sigma[l] == 0) return std::nullopt;
  }
  for (int c : hit) {
    if (c != 1) return std::nullopt;
  }
  return sigma;
}

Word boundary_word(int genus, int k) {
  Rank r{2 * genus, k, false};
  Word c = word_identity(r);
  for (int g = 1; g <= genus; ++g) {
    Word a = word_gen(r, gen_x(2 * g - 1));
    Word b = word_gen(r, gen_x(2 * g));
    c = multiply(c, multiply(multiply(a, b), multiply(invert(a), invert(b))));
  }
  for (int j = 1; j <= k; ++j) c = multiply(c, word_gen(r, gen_y(j)));
  return c;
}

bool fixes_boundary_word(const BoundaryElement& e, int genus) {
  if (e.rank.n != 2 * genus) {
    throw OddRank("boundary word requires n == 2*genus");
  }
  Word c = boundary_word(genus, e.rank.k);
  return apply(induced_automorphism(e), c) == c;
}

std::vector<BoundaryElement> commuting_witness_family(int n, int k) {
  if (k < 1) throw KZero("witness family requires k >= 1");
  Rank r{n, k, false};
  std::vector<BoundaryElement> out;
  Word yk = word_gen(r, gen_y(k));
  for (int i = 1; i <= n; ++i) {
    BoundaryElement e = unit_element(n, k);
    e.nu[i - 1] = multiply(word_gen(r, gen_x(i)), yk);
    out.push_back(make_boundary_element(n, k, e.nu, e.w));
  }
  for (int i = 1; i <= n; ++i) {
    BoundaryElement e = unit_element(n, k);
    e.nu[i - 1] = multiply(yk, word_gen(r, gen_x(i)));
    out.push_back(make_boundary_element(n, k, e.nu, e.w));
  }
  for (int j = 1; j <= k; ++j) {
    BoundaryElement e = unit_element(n, k);
    e.w[j - 1] = yk;
    out.push_back(make_boundary_element(n, k, e.nu, e.w));
  }
  for (int j = 1; j < k; ++j) {
    BoundaryElement e = unit_element(n, k);
    e.w[j - 1] = word_gen(r, gen_y(j));
    out.push_back(make_boundary_element(n, k, e.nu, e.w));
  }
  return out;
}

}  // namespace fgb

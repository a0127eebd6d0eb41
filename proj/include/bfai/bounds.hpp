#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bfai/affine.hpp"
#include "bfai/annihilator.hpp"
#include "bfai/families.hpp"
#include "bfai/orbits.hpp"
#include "bfai/walsh.hpp"

namespace bfai {

/* ---- Theorem-level primitives ------------------------------------------ */

struct theorem2_result {
  bool unbounded = false;  // wt(f) = 2^n: f has no nonzero annihilator at all
  int degree = 0;          // otherwise: every annihilator of f has degree >= this
};

/* Largest d with wt(f) >= 2^n - 2^(n-d). Weight <= 2^(n-1) certifies
 * nothing (degree 0, vacuous), which is exactly why restrictions to
 * subspaces are needed for balanced functions. */
inline theorem2_result theorem2_degree_bound(const boolean_function& f) {
  const std::uint64_t size = f.size();
  const std::uint64_t wt = f.weight();
  if (wt == size) return {true, 0};
  if (wt <= size / 2) return {false, 0};
  return {false, f.num_vars() - ceil_log2(size - wt)};
}

enum class dichotomy_side { function, complement };

/* One Theorem-3 instance: if the restricted support of the side is large
 * enough on L, its minimal annihilators either have degree >= d or vanish
 * identically on L. */
struct subspace_dichotomy {
  affine_subspace subspace;
  side which = side::function;
  int level = 0;
  std::uint64_t restricted_weight = 0;
  std::uint64_t threshold = 0;  // 2^t - 2^(t-d), t = dim L
  bool condition_met = false;
};

inline subspace_dichotomy theorem3_dichotomy(const boolean_function& f, const affine_subspace& L,
                                             side which, int d) {
  if (d < 0 || d > L.dim()) fail(errc::out_of_range, "level must satisfy 0 <= d <= dim L");
  const int t = L.dim();
  const std::uint64_t w = (which == side::function)
                              ? restricted_support_count(f, L)
                              : restricted_support_count(f.complemented(), L);
  const std::uint64_t threshold = (std::uint64_t{1} << t) - (std::uint64_t{1} << (t - d));
  return {L, which, d, w, threshold, w >= threshold};
}

/* ---- Weight windows ----------------------------------------------------- */

/* NL(f) >= 2 sum_{i=0}^{ai-2} C(n-1, i); empty when ai <= 1. */
inline std::uint64_t nl_bound_from_ai(int n, int ai) {
  if (ai < 0 || ai > (n + 1) / 2) fail(errc::out_of_range, "ai outside 0..ceil(n/2)");
  return 2 * binomial_sum(n - 1, ai - 2);
}

/* AI(f) > d forces sum_{i<=d} C(n,i) <= wt(f) <= sum_{i<=n-d-1} C(n,i). */
inline bool weight_window_check(const boolean_function& f, int d) {
  const std::uint64_t wt = f.weight();
  const int n = f.num_vars();
  return binomial_sum(n, d) <= wt && wt <= binomial_sum(n, n - (d + 1));
}

/* With AI(f) = d+1 and codim(L) = r:
 * sum_{i<=d-r} C(n-r,i) <= wt(f|L) <= sum_{i<=n-d-1} C(n-r,i). */
inline bool restricted_weight_window_check(const boolean_function& f, const affine_subspace& L,
                                           int ai) {
  if (ai < 1) fail(errc::invalid_argument, "window needs ai >= 1");
  const int n = f.num_vars();
  const int d = ai - 1;
  const int r = L.codim();
  const std::uint64_t w = restricted_support_count(f, L);
  return binomial_sum(n - r, d - r) <= w && w <= binomial_sum(n - r, n - (d + 1));
}

/* Any nonzero g vanishing at every point of weight <= k has all ANF
 * coefficients of popcount <= k equal to zero, hence degree >= k+1; the
 * monomial x_1...x_(k+1) shows tightness. */
struct vanishing_bound {
  int min_degree;
  anf_polynomial witness;
};

inline vanishing_bound low_weight_vanishing_bound(int n, int k) {
  if (k < 0 || k >= n) fail(errc::out_of_range, "need 0 <= k < n");
  anf_polynomial witness(n);
  witness.set((std::uint32_t{1} << (k + 1)) - 1, true);
  return {k + 1, std::move(witness)};
}

/* ---- Certificates ------------------------------------------------------- */

enum class bound_method { theorem2, corollary1, corollary4, corollary5, coverage };

inline const char* bound_method_name(bound_method m) {
  switch (m) {
    case bound_method::theorem2: return "THEOREM2";
    case bound_method::corollary1: return "COROLLARY1";
    case bound_method::corollary4: return "COROLLARY4";
    case bound_method::corollary5: return "COROLLARY5";
    case bound_method::coverage: return "COVERAGE";
  }
  return "?";
}

enum class symmetry_mode { generic, symmetric, rotation };

struct theorem2_evidence {
  std::uint64_t weight = 0;
  theorem2_result side_f;
  theorem2_result side_complement;
  std::string note;
};

struct corollary1_evidence {
  std::uint64_t distance = 0;
  int level = 0;
  std::string outcome;
  bool f_side_divisible = false;
  bool complement_side_divisible = false;
  std::optional<int> exact_ai_value;
};

struct corollary4_evidence {
  std::uint64_t u_value = 0;
  std::uint64_t sum_low_ones = 0;    // weights <= ceil(n/2) with v_i = 1
  std::uint64_t sum_high_zeros = 0;  // weights >= floor(n/2) with v_i = 0
  int level = -1;                    // largest d with U > 2^t - 2^(t-d); -1 when none
  std::uint64_t threshold = 0;
  bool v0 = false;  // weight-0 value, since it feeds the first sum
};

struct corollary5_evidence {
  std::uint64_t h_size = 0;
  int log2_ceil = 0;
};

struct coverage_evidence {
  symmetry_mode mode = symmetry_mode::generic;
  int t = 0;                             // dimension of every subspace in the family
  std::uint64_t subspaces_per_family = 0;
  std::uint64_t min_weight_side_f = 0;   // min over T of wt(f | x_T = 0)
  std::uint64_t min_weight_side_c = 0;   // min over T of wt((1+f) | x_T = 1)
  std::uint64_t max_defect = 0;          // 2^t minus the smaller of the two
  std::vector<subspace_dichotomy> worst;
};

using certificate_evidence = std::variant<theorem2_evidence, corollary1_evidence,
                                          corollary4_evidence, corollary5_evidence,
                                          coverage_evidence>;

/* A certified lower bound AI(f) >= bound, with enough recorded evidence to
 * re-check the claim. Bounds never exceed ceil(n/2). */
struct ai_certificate {
  bound_method method = bound_method::theorem2;
  int bound = 0;
  int n = 0;
  certificate_evidence evidence;
};

/* ---- Theorem 2 as an AI certificate ------------------------------------- */

/* AI needs both sides, and at most one side can clear weight 2^(n-1), so
 * this certificate is 0 for everything except constants; kept because it
 * documents why the subspace method exists. */
inline ai_certificate theorem2_certificate(const boolean_function& f) {
  const auto df = theorem2_degree_bound(f);
  const auto dc = theorem2_degree_bound(f.complemented());
  int bound;
  if (df.unbounded)
    bound = dc.degree;
  else if (dc.unbounded)
    bound = df.degree;
  else
    bound = std::min(df.degree, dc.degree);
  bound = std::min(bound, (f.num_vars() + 1) / 2);
  theorem2_evidence ev{f.weight(), df, dc, ""};
  if (f.balanced()) ev.note = "vacuous for balanced input";
  return {bound_method::theorem2, bound, f.num_vars(), ev};
}

/* ---- Corollary 4 (symmetric functions) ---------------------------------- */

/* U = min( sum_{v_i=1, i<=ceil(n/2)} C(ceil(n/2), i),
 *          sum_{v_i=0, i>=floor(n/2)} C(ceil(n/2), i - floor(n/2)) );
 * U > 2^t - 2^(t-d) certifies AI >= d+1. The search caps d at t-1 so the
 * bound stays within ceil(n/2). */
inline ai_certificate corollary4_bound(const simplified_value_vector& v) {
  const int n = v.n;
  const int t = (n + 1) / 2;
  const int fl = n / 2;
  corollary4_evidence ev;
  ev.v0 = v.at(0);
  for (int i = 0; i <= t; ++i)
    if (v.at(i)) ev.sum_low_ones += binomial(t, i);
  for (int i = fl; i <= n; ++i)
    if (!v.at(i)) ev.sum_high_zeros += binomial(t, i - fl);
  ev.u_value = std::min(ev.sum_low_ones, ev.sum_high_zeros);

  const std::uint64_t full = std::uint64_t{1} << t;
  int bound = 0;
  for (int d = t - 1; d >= 0; --d) {
    const std::uint64_t threshold = full - (full >> d);
    if (ev.u_value > threshold) {
      ev.level = d;
      ev.threshold = threshold;
      bound = d + 1;
      break;
    }
  }
  return {bound_method::corollary4, bound, n, ev};
}

/* ---- Corollary 5 (orbit swaps) ------------------------------------------ */

/* AI(f') > ceil(n/2) - ceil(log2 |H|), read as >= that value plus one and
 * capped at ceil(n/2) (the |H| = 1 edge). When |H| is an exact power of two
 * the strict restricted-count inequality can fail by one point, so the
 * coverage certificate on the concrete function is the authoritative one;
 * the closed form is still reported as stated. */
inline ai_certificate corollary5_bound(int n, std::uint64_t h_size) {
  if (n % 2 == 0) fail(errc::invalid_argument, "closed form is for odd n");
  if (h_size < 1) fail(errc::invalid_argument, "need |H| >= 1");
  const int t = (n + 1) / 2;
  const int d = ceil_log2(h_size);
  int bound = t - d + 1;
  if (bound > t) bound = t;
  if (bound < 0) bound = 0;
  return {bound_method::corollary5, bound, n, corollary5_evidence{h_size, d}};
}

/* ---- Coverage certifier -------------------------------------------------- */

/* Restriction weights over the two coordinate-fixing families:
 * L0(T) = {x_i = 0, i in T} and L1(T) = {x_i = 1, i in T} for every
 * floor(n/2)-subset T. The L0 family covers all points of weight <=
 * ceil(n/2) and the L1 family all points of weight >= floor(n/2), so an
 * annihilator vanishing on a whole family needs degree >= ceil(n/2)+1 —
 * impossible for a minimal witness. Otherwise some restriction is nonzero
 * and Theorem 2 on that subspace bounds its degree via the worst defect D:
 * a nonzero restriction of degree e has weight >= 2^(t-e), and weight <= D,
 * so e >= t - floor(log2 D). Symmetric inputs need one T per family;
 * rotation-symmetric inputs only the necklace representatives. */
inline ai_certificate coverage_certifier(const boolean_function& f, symmetry_mode mode,
                                         std::uint64_t budget = default_work_budget) {
  const int n = f.num_vars();
  if (n < 2) fail(errc::invalid_argument, "coverage certifier needs n >= 2");
  const int t = (n + 1) / 2;
  const int fix = n / 2;

  std::vector<std::uint32_t> subsets;
  switch (mode) {
    case symmetry_mode::symmetric:
      if (!is_symmetric(f)) fail(errc::not_symmetric, "symmetric mode on a non-symmetric function");
      subsets.push_back((std::uint32_t{1} << fix) - 1);
      break;
    case symmetry_mode::rotation:
      if (!is_rotation_symmetric(f))
        fail(errc::not_rotation_symmetric, "rotation mode on a non-rotation-symmetric function");
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        if (popcount(mask) == fix && orbit_representative(n, mask) == mask) subsets.push_back(mask);
      }
      break;
    case symmetry_mode::generic:
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (popcount(static_cast<std::uint32_t>(m)) == fix)
          subsets.push_back(static_cast<std::uint32_t>(m));
      break;
  }

  const std::uint64_t work = subsets.size() * 2 * (std::uint64_t{1} << t);
  if (work > budget)
    fail(errc::cost_limit, "coverage enumeration over " + std::to_string(subsets.size()) +
                               " subsets exceeds the work budget");

  const boolean_function fc = f.complemented();
  coverage_evidence ev;
  ev.mode = mode;
  ev.t = t;
  ev.subspaces_per_family = subsets.size();
  ev.min_weight_side_f = ~std::uint64_t{0};
  ev.min_weight_side_c = ~std::uint64_t{0};
  std::uint32_t worst0 = subsets.front(), worst1 = subsets.front();
  for (auto T : subsets) {
    const auto L0 = affine_subspace::fix_coordinates(n, T, false);
    const auto L1 = affine_subspace::fix_coordinates(n, T, true);
    const std::uint64_t w0 = restricted_support_count(f, L0);
    const std::uint64_t w1 = restricted_support_count(fc, L1);
    if (w0 < ev.min_weight_side_f) {
      ev.min_weight_side_f = w0;
      worst0 = T;
    }
    if (w1 < ev.min_weight_side_c) {
      ev.min_weight_side_c = w1;
      worst1 = T;
    }
  }

  const std::uint64_t full = std::uint64_t{1} << t;
  ev.max_defect = full - std::min(ev.min_weight_side_f, ev.min_weight_side_c);
  const int bound = ev.max_defect == 0 ? t : t - floor_log2(ev.max_defect);

  /* worst dichotomies recorded at the largest level whose >= condition still
   * holds everywhere; the emitted bound adds one more via the strict margin
   * unless the defect is an exact power of two */
  const int met_level = ev.max_defect == 0 ? t : t - ceil_log2(ev.max_defect);
  ev.worst.push_back(theorem3_dichotomy(f, affine_subspace::fix_coordinates(n, worst0, false),
                                        side::function, met_level));
  ev.worst.push_back(theorem3_dichotomy(f, affine_subspace::fix_coordinates(n, worst1, true),
                                        side::complement, met_level));
  return {bound_method::coverage, bound, n, ev};
}

/* ---- Corollary 1 (balanced f, one affine form) --------------------------- */

enum class corollary1_outcome { ai_at_least_d, divisible, unresolved };

struct corollary1_result {
  int level = 0;  // d with d(f,l) >= 2^n - 2^(n-d)
  corollary1_outcome outcome = corollary1_outcome::unresolved;
  std::uint64_t distance = 0;
  std::optional<int> exact_ai_value;
  bool f_side_divisible = false;           // minimal f-annihilators vanish on {l = 0}
  bool complement_side_divisible = false;  // minimal (1+f)-annihilators vanish on {l = 1}
};

namespace detail {

struct minimal_kernel {
  int degree = 0;
  std::vector<anf_polynomial> basis;
};

inline std::optional<minimal_kernel> minimal_annihilator_space(const boolean_function& f,
                                                               std::uint64_t budget,
                                                               std::uint64_t& spent) {
  const int n = f.num_vars();
  const auto points = f.support();
  for (int d = 0; d <= n; ++d) {
    const auto monomials = monomial_basis(n, d);
    spent += points.size() * monomials.size();
    if (spent > budget) return std::nullopt;
    row_reducer red(monomials.size());
    std::vector<std::uint64_t> row((monomials.size() + 63) / 64);
    for (auto p : points) {
      fill_monomial_row(row, p, monomials);
      red.insert(row);
      if (red.full_column_rank()) break;
    }
    if (red.full_column_rank()) continue;
    minimal_kernel out;
    out.degree = d;
    for (auto& v : red.kernel_basis()) out.basis.push_back(anf_from_kernel_vector(n, monomials, v));
    return out;
  }
  return std::nullopt;  // f = 1 has no annihilator at any degree
}

inline bool vanishes_on_hyperplane(const anf_polynomial& g, const affine_form& l, bool l_value) {
  const boolean_function table = table_from_anf(g);
  for (std::uint64_t x = 0; x < table.size(); ++x)
    if (l.evaluate(static_cast<std::uint32_t>(x)) == l_value && table.get(x)) return false;
  return true;
}

}  // namespace detail

/* d(f,l) >= 2^n - 2^(n-d) forces, for balanced f: AI(f) >= d, or every
 * minimal annihilator of f vanishes on {l=0} (has l as a factor), or every
 * minimal annihilator of 1+f vanishes on {l=1} (has l+1 as a factor). The
 * dichotomy is resolved by the exact engine when the budget allows. */
inline corollary1_result corollary1_analyze(const boolean_function& f, const affine_form& l,
                                            std::uint64_t budget = default_work_budget) {
  if (l.degenerate()) fail(errc::degenerate_form, "need a non-degenerate affine form");
  if (!f.balanced()) fail(errc::not_balanced, "Corollary 1 needs a balanced function");
  corollary1_result out;
  out.distance = distance_to_affine(f, l);
  const std::uint64_t size = f.size();
  if (out.distance == size)
    out.level = f.num_vars();
  else if (out.distance <= size / 2)
    out.level = 0;
  else
    out.level = f.num_vars() - ceil_log2(size - out.distance);

  std::uint64_t spent = 0;
  const auto ker_f = detail::minimal_annihilator_space(f, budget, spent);
  if (!ker_f && spent > budget) return out;  // unresolved
  const auto ker_c = detail::minimal_annihilator_space(f.complemented(), budget, spent);
  if (!ker_c && spent > budget) return out;

  int ai = f.num_vars() + 1;
  if (ker_f) ai = std::min(ai, ker_f->degree);
  if (ker_c) ai = std::min(ai, ker_c->degree);
  out.exact_ai_value = ai;
  if (ai >= out.level) {
    out.outcome = corollary1_outcome::ai_at_least_d;
    return out;
  }

  if (ker_f && ker_f->degree < out.level) {
    out.f_side_divisible = true;
    for (const auto& g : ker_f->basis)
      if (!detail::vanishes_on_hyperplane(g, l, false)) out.f_side_divisible = false;
    if (!out.f_side_divisible)
      fail(errc::invalid_argument, "internal: Corollary 1 dichotomy violated on the f side");
  }
  if (ker_c && ker_c->degree < out.level) {
    out.complement_side_divisible = true;
    for (const auto& g : ker_c->basis)
      if (!detail::vanishes_on_hyperplane(g, l, true)) out.complement_side_divisible = false;
    if (!out.complement_side_divisible)
      fail(errc::invalid_argument, "internal: Corollary 1 dichotomy violated on the 1+f side");
  }
  out.outcome = corollary1_outcome::divisible;
  return out;
}

inline ai_certificate corollary1_certificate(const corollary1_result& r, int n) {
  const int bound = r.outcome == corollary1_outcome::ai_at_least_d
                        ? std::min(r.level, (n + 1) / 2)
                        : 0;
  corollary1_evidence ev;
  ev.distance = r.distance;
  ev.level = r.level;
  switch (r.outcome) {
    case corollary1_outcome::ai_at_least_d: ev.outcome = "AI_AT_LEAST_D"; break;
    case corollary1_outcome::divisible: ev.outcome = "DIVISIBLE"; break;
    case corollary1_outcome::unresolved: ev.outcome = "UNRESOLVED"; break;
  }
  ev.f_side_divisible = r.f_side_divisible;
  ev.complement_side_divisible = r.complement_side_divisible;
  ev.exact_ai_value = r.exact_ai_value;
  return {bound_method::corollary1, bound, n, ev};
}

/* ---- Corollary 3 (symmetric parity tails are never maximal) -------------- */

struct corollary3_check {
  bool non_maximal = false;
  int exact_ai_value = 0;
  std::uint64_t distance_to_parity = 0;         // d(f, x_1+...+x_n)
  std::uint64_t distance_to_parity_offset = 0;  // d(f, x_1+...+x_n+1)
  std::uint64_t restricted_weight = 0;          // wt(f) on the tail-killing parity hyperplane
  std::uint64_t window_lower = 0;               // Corollary-2 lower bound if AI were maximal
};

inline corollary3_check corollary3_nonmax_check(const boolean_function& f, parity_tail tail) {
  const int n = f.num_vars();
  const auto v = derive_value_vector(f);
  if (!v) fail(errc::not_symmetric, "Corollary 3 applies to symmetric functions");
  const int threshold = parity_tail_threshold(n);
  for (int w = threshold; w <= n; ++w) {
    const bool odd = (w % 2) == 1;
    const bool expected = (tail == parity_tail::odd_weights) == odd;
    if (v->at(w) != expected)
      fail(errc::pattern_mismatch, "tail values do not match the requested parity case");
  }

  corollary3_check out;
  const affine_form parity_form{(std::uint32_t{1} << n) - 1, false};
  out.distance_to_parity = distance_to_affine(f, parity_form);
  out.distance_to_parity_offset = f.size() - out.distance_to_parity;

  /* On the hyperplane of the opposite parity the tail vanishes, so the
   * Corollary-2 window for AI = ceil(n/2) fails at the lower end. */
  const bool kill_value = tail == parity_tail::odd_weights ? false : true;
  const auto L =
      affine_subspace::make(n, {affine_form{(std::uint32_t{1} << n) - 1, kill_value}});
  out.restricted_weight = restricted_support_count(f, L);
  const int d = (n + 1) / 2 - 1;
  out.window_lower = binomial_sum(n - 1, d - 1);

  out.exact_ai_value = exact_ai(f).ai;
  out.non_maximal = out.exact_ai_value < (n + 1) / 2;
  return out;
}

/* ---- Orbit swap with its paired certificate ------------------------------ */

inline std::pair<orbit_swap_result, ai_certificate> orbit_swap_certified(
    int n, const std::vector<std::uint32_t>& h_reps, const std::vector<std::uint32_t>& h_prime_reps,
    std::uint64_t budget = default_work_budget) {
  orbit_swap_result r = orbit_swap_construction(n, h_reps, h_prime_reps);
  ai_certificate cert = r.h_size > 0 ? corollary5_bound(n, r.h_size)
                                     : coverage_certifier(r.f, symmetry_mode::rotation, budget);
  return {std::move(r), std::move(cert)};
}

}  // namespace bfai

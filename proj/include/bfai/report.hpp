#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfai/anf.hpp"
#include "bfai/annihilator.hpp"
#include "bfai/bounds.hpp"
#include "bfai/families.hpp"
#include "bfai/io.hpp"
#include "bfai/walsh.hpp"

namespace bfai {

using nlohmann::json;

inline json to_json(const subspace_dichotomy& d) {
  json cs = json::array();
  for (const auto& c : d.subspace.constraints())
    cs.push_back({{"mask", c.mask}, {"value", c.value ? 1 : 0}});
  return json{{"constraints", cs},
              {"side", side_name(d.which)},
              {"level", d.level},
              {"restricted_weight", d.restricted_weight},
              {"threshold", d.threshold},
              {"condition_met", d.condition_met}};
}

inline json evidence_to_json(const certificate_evidence& ev) {
  json j;
  if (const auto* t2 = std::get_if<theorem2_evidence>(&ev)) {
    j["weight"] = t2->weight;
    j["side_f_degree"] = t2->side_f.unbounded ? json("UNBOUNDED") : json(t2->side_f.degree);
    j["side_complement_degree"] =
        t2->side_complement.unbounded ? json("UNBOUNDED") : json(t2->side_complement.degree);
    if (!t2->note.empty()) j["note"] = t2->note;
  } else if (const auto* c1 = std::get_if<corollary1_evidence>(&ev)) {
    j["distance"] = c1->distance;
    j["level"] = c1->level;
    j["outcome"] = c1->outcome;
    j["f_side_divisible"] = c1->f_side_divisible;
    j["complement_side_divisible"] = c1->complement_side_divisible;
    if (c1->exact_ai_value) j["exact_ai"] = *c1->exact_ai_value;
  } else if (const auto* c4 = std::get_if<corollary4_evidence>(&ev)) {
    j["U"] = c4->u_value;
    j["sum_low_ones"] = c4->sum_low_ones;
    j["sum_high_zeros"] = c4->sum_high_zeros;
    j["level"] = c4->level;
    j["threshold"] = c4->threshold;
    j["v0"] = c4->v0 ? 1 : 0;
  } else if (const auto* c5 = std::get_if<corollary5_evidence>(&ev)) {
    j["h_size"] = c5->h_size;
    j["log2_ceil"] = c5->log2_ceil;
  } else if (const auto* cov = std::get_if<coverage_evidence>(&ev)) {
    switch (cov->mode) {
      case symmetry_mode::generic: j["symmetry"] = "GENERIC"; break;
      case symmetry_mode::symmetric: j["symmetry"] = "SYMMETRIC"; break;
      case symmetry_mode::rotation: j["symmetry"] = "ROTATION"; break;
    }
    j["t"] = cov->t;
    j["subspaces_per_family"] = cov->subspaces_per_family;
    j["min_weight_side_f"] = cov->min_weight_side_f;
    j["min_weight_side_complement"] = cov->min_weight_side_c;
    j["max_defect"] = cov->max_defect;
    json dich = json::array();
    for (const auto& d : cov->worst) dich.push_back(to_json(d));
    j["dichotomies"] = dich;
  }
  return j;
}

inline json to_json(const ai_certificate& c) {
  return json{{"method", bound_method_name(c.method)},
              {"bound", c.bound},
              {"n", c.n},
              {"evidence", evidence_to_json(c.evidence)}};
}

/* ---- the analyze report --------------------------------------------------
 * Keys are fixed: n, weight, balanced, degree, nonlinearity, delta,
 * pc_order, rotation_symmetric, symmetric, ai_exact (omitted when the work
 * budget trips), ai_lower_bounds. */

struct analysis_report {
  int n = 0;
  std::uint64_t weight = 0;
  bool balanced = false;
  std::optional<int> degree;  // nullopt = the zero function
  std::uint64_t nonlinearity = 0;
  std::uint64_t delta = 0;
  int pc_order = 0;
  bool rotation_symmetric = false;
  bool symmetric = false;
  std::optional<int> ai_exact;
  bool ai_requested = false;
  std::optional<std::string> witness_anf;  // minimal annihilator, text reports only
  std::optional<std::string> witness_side;
  std::vector<ai_certificate> lower_bounds;
};

inline json to_json(const analysis_report& r) {
  json j;
  j["n"] = r.n;
  j["weight"] = r.weight;
  j["balanced"] = r.balanced;
  j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
  j["nonlinearity"] = r.nonlinearity;
  j["delta"] = r.delta;
  j["pc_order"] = r.pc_order;
  j["rotation_symmetric"] = r.rotation_symmetric;
  j["symmetric"] = r.symmetric;
  if (r.ai_exact) j["ai_exact"] = *r.ai_exact;
  json bounds = json::array();
  for (const auto& c : r.lower_bounds) bounds.push_back(to_json(c));
  j["ai_lower_bounds"] = bounds;
  return j;
}

struct analysis_options {
  bool exact_ai = false;
  std::optional<int> exact_ai_max_d;
  std::uint64_t budget = default_work_budget;
  std::vector<std::string> certify;  // thm2, cor4, coverage
  std::optional<symmetry_mode> symmetry;
};

inline analysis_report analyze(const boolean_function& f, const analysis_options& opt = {}) {
  analysis_report r;
  r.n = f.num_vars();
  r.weight = f.weight();
  r.balanced = f.balanced();
  r.degree = algebraic_degree(f);
  r.nonlinearity = nonlinearity(f);
  const auto prof = autocorrelation_profile_of(f);
  r.delta = prof.delta;
  r.pc_order = prof.pc_order;
  r.rotation_symmetric = is_rotation_symmetric(f);
  r.symmetric = is_symmetric(f);

  if (opt.exact_ai) {
    r.ai_requested = true;
    if (opt.exact_ai_max_d) {
      const auto hit = min_annihilator_degree(f, *opt.exact_ai_max_d);
      const auto hit_c = min_annihilator_degree(f.complemented(), *opt.exact_ai_max_d);
      std::optional<int> ai;
      if (hit) ai = hit->first;
      if (hit_c && (!ai || hit_c->first < *ai)) ai = hit_c->first;
      r.ai_exact = ai;  // stays empty when nothing shows up by max_d
    } else if (auto res = exact_ai_within(f, opt.budget)) {
      r.ai_exact = res->ai;
      r.witness_anf = anf_to_string(res->witness.g);
      r.witness_side = side_name(res->witness.which);
    }
  }

  for (const auto& method : opt.certify) {
    if (method == "thm2") {
      r.lower_bounds.push_back(theorem2_certificate(f));
    } else if (method == "cor4") {
      const auto v = derive_value_vector(f);
      if (!v) fail(errc::not_symmetric, "cor4 requires a symmetric function");
      r.lower_bounds.push_back(corollary4_bound(*v));
    } else if (method == "coverage") {
      symmetry_mode mode;
      if (opt.symmetry)
        mode = *opt.symmetry;
      else if (r.symmetric)
        mode = symmetry_mode::symmetric;
      else if (r.rotation_symmetric)
        mode = symmetry_mode::rotation;
      else
        mode = symmetry_mode::generic;
      r.lower_bounds.push_back(coverage_certifier(f, mode, opt.budget));
    } else {
      fail(errc::invalid_argument, "unknown certify method: " + method);
    }
  }
  return r;
}

}  // namespace bfai

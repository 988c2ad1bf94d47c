#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "json.hpp"

#include "domlocal/base.hpp"

namespace domlocal {

// Parameter bundle driving every phase. nabla1 is the promised bound on the
// depth-1 topological density of the input; nabla0 bounds the subgraph edge
// density; nn bounds the bipartite variant from above strictly (the
// algorithm's threshold 2*nn-1 comes from it); K_{s,t} is promised absent as
// a subgraph. Derived constants are computed exactly in integers.
struct ClassParams {
  int nabla1 = 3;
  int nabla0 = 3;
  int nn = 2;
  int s = 3;
  int t = 3;
  double epsilon = 1.0;

  int kappa() const { return std::max(2 * nabla0, 2 * nn); }

  long long mu() const {
    long long k = kappa();
    return 2 * k * k;
  }

  long long nu() const {
    long long k = kappa();
    return 2 * k * k * k;
  }

  // Max residual degree after phase 2 (general variant).
  long long delta_r() const {
    long long k = kappa(), p = 1;
    for (int i = 0; i < s - 1; ++i) {
      p *= k;
      if (p > (1LL << 50)) throw contract_error("delta_r overflow; params too large");
    }
    return p * (t + s - 1 + static_cast<long long>(s - 1) * nu());
  }

  // Degree cutoff for the high-degree removal step, given the residual cap
  // the preceding phases guarantee.
  double gamma_cap(long long residual_cap) const {
    double pow4 = std::pow(4.0, nabla1);
    return 4.0 * nabla1 * (pow4 + 2.0 * nabla1) * (static_cast<double>(residual_cap) + 1.0) /
           epsilon;
  }

  nlohmann::json to_json() const {
    return {{"nabla1", nabla1}, {"nabla0", nabla0}, {"nn", nn},
            {"s", s},           {"t", t},           {"epsilon", epsilon}};
  }

  static ClassParams from_json(const nlohmann::json& j) {
    ClassParams p;
    p.nabla1 = j.at("nabla1").get<int>();
    p.nabla0 = j.at("nabla0").get<int>();
    p.nn = j.at("nn").get<int>();
    p.s = j.at("s").get<int>();
    p.t = j.at("t").get<int>();
    if (j.contains("epsilon")) p.epsilon = j["epsilon"].get<double>();
    p.validate();
    return p;
  }

  void validate() const {
    if (nabla1 < 1 || nabla0 < 1 || nabla0 > nabla1 || nn < 1 || nn > nabla1 + 1 || s < 1 ||
        s > t || epsilon <= 0)
      throw parse_error("invalid class params");
  }
};

// A named graph class: its parameter bundle, the phase-2 variant it uses, and
// the constants its analysis guarantees.
struct ClassPreset {
  std::string name;
  ClassParams params;
  // Common-residual-neighbor threshold of the specialized phase 2.
  // nullopt means that phase is skipped (D2 = {}) unless use_general_phase2.
  std::optional<int> common_neighbor_threshold;
  // Guaranteed max residual degree entering phase 3.
  long long residual_cap = 0;
  // Fixed orientation out-degree for the rounding factor 2d+1; nullopt means
  // measure it on the reduced instance.
  std::optional<int> orientation_degree;
  // The analysis splits epsilon before handing it to the LP solver: restricted
  // classes use eps/5, the general pipeline eps/2.
  double lp_epsilon_divisor = 5.0;
  bool use_general_phase2 = false;
  // Size guarantee factor = guarantee_base + guarantee_eps_coeff * epsilon.
  double guarantee_base = 0.0;
  double guarantee_eps_coeff = 0.0;

  double guarantee_factor() const {
    return guarantee_base + guarantee_eps_coeff * params.epsilon;
  }
  double gamma_cap() const { return params.gamma_cap(residual_cap); }
};

inline ClassPreset preset_planar(double eps = 1.0) {
  ClassPreset p;
  p.name = "planar";
  p.params = {3, 3, 2, 3, 3, eps};
  p.common_neighbor_threshold = (2 * 2 - 1) * 3 + 1;  // 10
  p.residual_cap = 30;
  p.orientation_degree = 3;
  p.guarantee_base = 11;
  p.guarantee_eps_coeff = 1;
  return p;
}

inline ClassPreset preset_triangle_free_planar(double eps = 1.0) {
  ClassPreset p;
  p.name = "triangle_free_planar";
  p.params = {3, 2, 2, 3, 3, eps};
  p.common_neighbor_threshold = 7;
  p.residual_cap = 18;
  p.orientation_degree = 2;
  p.guarantee_base = 8;
  p.guarantee_eps_coeff = 1;
  return p;
}

inline ClassPreset preset_bipartite_planar(double eps = 1.0) {
  ClassPreset p = preset_triangle_free_planar(eps);
  p.name = "bipartite_planar";
  p.guarantee_base = 7;
  p.guarantee_eps_coeff = 1;
  return p;
}

inline ClassPreset preset_girth5_planar(double eps = 1.0) {
  ClassPreset p;
  p.name = "girth5_planar";
  p.params = {3, 2, 2, 3, 3, eps};
  p.common_neighbor_threshold = std::nullopt;  // D2 = {}
  p.residual_cap = 3;
  p.orientation_degree = 2;
  p.guarantee_base = 7;
  p.guarantee_eps_coeff = 0;
  return p;
}

inline ClassPreset preset_outerplanar(double eps = 1.0) {
  ClassPreset p;
  p.name = "outerplanar";
  p.params = {2, 2, 2, 2, 3, eps};
  p.common_neighbor_threshold = std::nullopt;  // D2 = {}
  p.residual_cap = 9;
  p.orientation_degree = 2;
  p.guarantee_base = 8;
  p.guarantee_eps_coeff = 1;
  return p;
}

// K_{3,t}-free with promised nabla1; unless a tighter bound is supplied, the
// bipartite depth-1 density is only known to satisfy nn <= nabla1 + 1.
inline ClassPreset preset_k3t_free(int nabla1, int t, double eps = 1.0,
                                   std::optional<int> nn_override = std::nullopt) {
  ClassPreset p;
  p.name = "k3t:" + std::to_string(nabla1) + ":" + std::to_string(t);
  int nn = nn_override.value_or(nabla1 + 1);
  p.params = {nabla1, nabla1, nn, 3, t, eps};
  long long b = 2LL * nn - 1;
  p.common_neighbor_threshold = static_cast<int>(b * t + 1);
  p.residual_cap = b * b * t + b;
  p.orientation_degree = std::nullopt;  // measure on the reduced instance
  // factor (2*nabla1+1)*(2+eps); 6*nabla1+3 at eps = 1
  p.guarantee_base = 2.0 * (2 * nabla1 + 1);
  p.guarantee_eps_coeff = 2 * nabla1 + 1;
  return p;
}

// Fully general pipeline for promised nabla1 only: s = t = 2*nabla0 + 1
// always holds, and phase 2 runs the pseudo-cover machinery.
inline ClassPreset preset_general_be(int nabla1, double eps = 1.0) {
  ClassPreset p;
  p.name = "general:" + std::to_string(nabla1);
  int nabla0 = nabla1, st = 2 * nabla0 + 1;
  p.params = {nabla1, nabla0, nabla1 + 1, st, st, eps};
  p.common_neighbor_threshold = std::nullopt;
  p.use_general_phase2 = true;
  p.residual_cap = p.params.delta_r();
  p.orientation_degree = std::nullopt;
  p.lp_epsilon_divisor = 2.0;
  // factor 2*(nabla0+1)*(kappa^(2*s*kappa) + 2): astronomically loose, kept
  // for reporting only.
  double k = p.params.kappa();
  p.guarantee_base =
      2.0 * (nabla0 + 1) * (std::pow(k, 2.0 * p.params.s * k) + 2.0);
  p.guarantee_eps_coeff = 0;
  return p;
}

// Custom preset from an explicit parameter bundle; runs the general pipeline.
inline ClassPreset preset_custom(const ClassParams& params) {
  ClassPreset p;
  p.name = "custom";
  p.params = params;
  p.common_neighbor_threshold = std::nullopt;
  p.use_general_phase2 = true;
  p.residual_cap = params.delta_r();
  p.orientation_degree = std::nullopt;
  p.lp_epsilon_divisor = 2.0;
  double k = params.kappa();
  p.guarantee_base =
      2.0 * (params.nabla0 + 1) * (std::pow(k, 2.0 * params.s * k) + 2.0);
  p.guarantee_eps_coeff = 0;
  return p;
}

// "planar", "triangle_free_planar", "bipartite_planar", "girth5_planar",
// "outerplanar", "k3t:<nabla1>:<t>", "general:<nabla1>".
inline ClassPreset preset_by_name(const std::string& spec, double eps = 1.0) {
  if (spec == "planar") return preset_planar(eps);
  if (spec == "triangle_free_planar") return preset_triangle_free_planar(eps);
  if (spec == "bipartite_planar") return preset_bipartite_planar(eps);
  if (spec == "girth5_planar") return preset_girth5_planar(eps);
  if (spec == "outerplanar") return preset_outerplanar(eps);
  try {
    if (spec.rfind("k3t:", 0) == 0) {
      auto rest = spec.substr(4);
      auto c = rest.find(':');
      if (c == std::string::npos) throw parse_error("");
      return preset_k3t_free(std::stoi(rest.substr(0, c)), std::stoi(rest.substr(c + 1)), eps);
    }
    if (spec.rfind("general:", 0) == 0) return preset_general_be(std::stoi(spec.substr(8)), eps);
  } catch (const std::exception&) {
    throw parse_error("malformed preset spec: " + spec);
  }
  throw parse_error("unknown preset: " + spec);
}

}  // namespace domlocal

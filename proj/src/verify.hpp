#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derived.hpp"
#include "report.hpp"

namespace hsg {

struct CheckOptions {
  std::uint64_t seed = 0;
  std::optional<std::pair<int, int>> window;
  int nmax = 3;
  int bound = 64;
  bool timing = false;
};

const std::vector<std::string>& suite_names();

inline constexpr int wild_sample_cap = 24;

/// Standard sample set: all indecomposables for Dynkin quivers; otherwise tau-orbits of
/// length 4 from the projectives and injectives plus homogeneous regulars (R_0, R_1,
/// R_inf on the Kronecker quiver, random modules of the null root on other Euclidean quivers).
/// On wild quivers an orbit stops once the total dimension exceeds wild_sample_cap.
std::vector<Representation> sample_modules(QuiverPtr q, PrimeField field, std::uint64_t seed = 0);
std::vector<Representation> non_projective(const std::vector<Representation>& mods);

/// Homogeneous regular (1,1) module x -> (x, lambda x); lambda < 0 stands for infinity.
Representation kronecker_regular(QuiverPtr q, PrimeField field, int lambda);
bool is_kronecker(const Quiver& q);

Report serre_duality_check(DerivedContext& ctx, const std::vector<Representation>& mods);
Report serre_inverse_check(DerivedContext& ctx, const std::vector<Representation>& mods);
/// Instances whose Phi images have a summand of total dimension above size_cap (if positive)
/// are counted as skipped.
Report phi_faithfulness_check(DerivedContext& ctx, const std::vector<Representation>& mods, int max_level,
                              int size_cap = 0);
Report phi_density_check(DerivedContext& ctx, const std::vector<Representation>& mods, int max_shift, int bound);
Report sc0_suite_check(DerivedContext& ctx, const std::vector<Representation>& mods, const std::vector<int>& powers);
/// dim Hom(M,N) - dim Ext^1(M,N) = <dim M, dim N> on random pairs.
Report euler_check(QuiverPtr q, PrimeField field, std::uint64_t seed, int pairs);
/// Ext^1(M,N) = D stable Hom(tau^-1 N, M) = D costable Hom(N, tau M) on all pairs.
Report ar_duality_check(const std::vector<Representation>& mods);
Report classification_check(const std::vector<Representation>& mods, int bound, std::uint64_t seed);

/// Runs one named suite; throws Error(invalid_argument) for an unknown suite.
std::vector<Report> run_suite(const std::string& suite, QuiverPtr q, PrimeField field, const CheckOptions& opts);

/// JSON array of reports with fixed key order.
std::string reports_to_json(const std::vector<Report>& reports, int indent = 2);

}  // namespace hsg

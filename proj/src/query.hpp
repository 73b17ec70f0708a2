#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiver.hpp"
#include "representation.hpp"

namespace hsg {

/// Module specification: P<v>, I<v>, S<v>, K<n> (n-th knitted indecomposable of a Dynkin
/// quiver, 1-based) or a path to a module file.
Representation resolve_module(QuiverPtr q, const std::string& spec, PrimeField field);

/// Name of a module up to isomorphism: the first of S<v>, P<v>, I<v>, K<n> that matches,
/// otherwise its dimension vector.
std::string module_label(const Representation& m, std::uint64_t seed = 0);

struct QueryArgs {
  std::string from;
  std::string to;
  std::string module;
  int bound = 64;
  std::uint64_t seed = 0;
};

/// Answers a query of kind hom, ext, tau, tau-inverse, classify or indec as a JSON object
/// with a "text" field holding the human-readable answer.
std::string run_query(const std::string& kind, QuiverPtr q, PrimeField field, const QueryArgs& args);

}  // namespace hsg

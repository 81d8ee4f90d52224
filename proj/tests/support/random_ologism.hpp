#pragma once

#include <random>
#include <string>

#include "ologism/core.hpp"

namespace gen {

// Random is-only ologism: up to `max_types` types named T0.., up to
// `max_premisses` premisses of uniformly chosen form and terms.
inline ologism::Ologism random_is_only(std::mt19937_64& rng, int max_types = 5,
                                       int max_premisses = 8) {
  using namespace ologism;
  std::uniform_int_distribution<int> n_types(1, max_types);
  std::uniform_int_distribution<int> n_prem(0, max_premisses);
  std::uniform_int_distribution<int> form(0, 3);
  Ologism o;
  o.name = "random";
  int t = n_types(rng);
  for (int k = 0; k < t; ++k) add_type(o, "T" + std::to_string(k), "a thing of kind " + std::to_string(k));
  std::uniform_int_distribution<int> term(0, t - 1);
  int n = n_prem(rng);
  for (int k = 0; k < n; ++k) {
    Form f = static_cast<Form>(form(rng));
    auto s = "T" + std::to_string(term(rng));
    auto p = "T" + std::to_string(term(rng));
    if (f == Form::A && s == p) continue;  // identities are implicit
    add_premiss(o, Proposition{f, s, p});
  }
  return o;
}

}  // namespace gen

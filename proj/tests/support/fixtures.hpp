#pragma once

#include "ologism/core.hpp"

namespace fixtures {

using namespace ologism;

inline Proposition P(Form f, const char* s, const char* p) { return {f, s, p}; }

inline Ologism animals() {
  Ologism o;
  o.name = "animals";
  add_type(o, "B", "a bird");
  add_type(o, "V", "a vertebrate");
  add_type(o, "M", "a mammal");
  add_type(o, "A", "an animal that is able to fly");
  add_premiss(o, P(Form::A, "B", "V"));
  add_premiss(o, P(Form::A, "M", "V"));
  add_premiss(o, P(Form::E, "B", "M"));
  add_premiss(o, P(Form::I, "M", "A"));
  add_premiss(o, P(Form::O, "B", "A"));
  return o;
}

inline Ologism custodian() {
  Ologism o;
  o.name = "custodian";
  add_type(o, "C", "a custodian");
  add_type(o, "I", "an inspector");
  add_type(o, "H", "a helper");
  add_aspect(o, Aspect{"has", "C", "H"});
  add_premiss(o, P(Form::I, "C", "C"));
  add_premiss(o, P(Form::I, "I", "I"));
  add_premiss(o, P(Form::E, "C", "I"));
  add_premiss(o, P(Form::A, "I", "H"));
  return o;
}

inline Ologism has_mother() {
  Ologism o;
  o.name = "has-mother";
  add_type(o, "P", "a person");
  add_type(o, "Pair", "a pair (w,m) where w is a woman and m is a man");
  add_type(o, "W", "a woman");
  Aspect parents{"hasAsParents", "P", "Pair"};
  Aspect w{"w", "Pair", "W"};
  Aspect mother{"hasAsMother", "P", "W"};
  add_aspect(o, parents);
  add_aspect(o, w);
  add_aspect(o, mother);
  o.facts.push_back(Fact{"mother", PathWord::of(mother),
                         PathWord("P", "W", {parents, w})});
  add_premiss(o, P(Form::I, "P", "W"));
  return o;
}

}  // namespace fixtures

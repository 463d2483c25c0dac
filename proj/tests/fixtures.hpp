#pragma once

#include <string>
#include <vector>

#include "morita/constructions.hpp"
#include "morita/isg.hpp"

namespace fixtures {

struct Entry {
  std::string name;
  morita::InverseSemigroup S;
};

inline morita::InverseSemigroup get(const std::string& expr) {
  return morita::build_from_expression(expr);
}

// The named catalog used by the property suites and the acceptance runner.
inline const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v;
    for (const char* expr :
         {"triv", "SL2", "Z2", "chain3", "vee", "Z3", "br(Z2)", "chain4",
          "diamond", "claw", "broom", "tallvee", "Z4", "V4", "Z5",
          "brandt(triv,2)", "adjone(brandt(triv,2))", "Z6", "S3",
          "sdp(pfinZ2,Z2,shift)", "sym(2)", "Z7", "sdp(diamond,Z2,swap)",
          "brandt(Z2,2)", "mat(SL2z,2)", "br(Z3)"})
      v.push_back({expr, get(expr)});
    return v;
  }();
  return entries;
}

// All semilattices of size <= 4, up to isomorphism (9 of them).
inline const std::vector<Entry>& small_semilattices() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v;
    for (const char* expr : {"triv", "chain2", "chain3", "vee", "chain4",
                             "diamond", "claw", "broom", "tallvee"})
      v.push_back({expr, get(expr)});
    return v;
  }();
  return entries;
}

}  // namespace fixtures

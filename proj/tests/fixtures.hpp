#pragma once

#include <string>

#include <gtest/gtest.h>

#include "cosetkit/cosetkit.hpp"

namespace fixtures {

inline cosetkit::CayleyGraph cayley(const std::string& entry) {
  return cosetkit::make_cayley(cosetkit::catalog::make_entry(entry));
}

inline cosetkit::CayleyGraph s3_all() { return cayley("symmetric_transpositions(3)"); }
inline cosetkit::CayleyGraph s3_two() { return cayley("symmetric_adjacent(3)"); }
inline cosetkit::CayleyGraph z2() { return cayley("elementary_abelian(1)"); }
inline cosetkit::CayleyGraph z2sq() { return cayley("elementary_abelian(2)"); }
inline cosetkit::CayleyGraph d4() { return cayley("dihedral_reflections(4)"); }

inline cosetkit::GenMask mask(const cosetkit::CayleyGraph& g, std::initializer_list<std::string> labels) {
  return g.group().parse_mask(std::vector<std::string>(labels));
}

inline cosetkit::Vertex at(const cosetkit::CayleyGraph& g, std::string_view word) { return g.group().eval_word(word); }

}  // namespace fixtures

#define EXPECT_ERROR(stmt, expected)                                      \
  do {                                                                    \
    try {                                                                 \
      stmt;                                                               \
      ADD_FAILURE() << "expected " << cosetkit::to_string(expected);      \
    } catch (const cosetkit::Error& e) {                                  \
      EXPECT_EQ(e.code(), expected) << e.what();                          \
    }                                                                     \
  } while (0)

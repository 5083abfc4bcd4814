#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string_view>
#include <utility>

#include "filcat/errors.hpp"
#include "filcat/germcat.hpp"

namespace filcat {

inline void PrintTo(const Atom& a, std::ostream* os) { *os << a.to_string(); }
inline void PrintTo(const GroundSet& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Subset& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const Filter& F, std::ostream* os) { *os << F.to_string(); }
inline void PrintTo(const PartialFn& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const FilArrow& a, std::ostream* os) {
  *os << a.rep().to_string() << " : " << a.source().to_string() << " -> " << a.target().to_string();
}

}  // namespace filcat

namespace filcat::test {

using Labels = std::initializer_list<std::string_view>;
using Graph = std::initializer_list<std::pair<std::string_view, std::string_view>>;

inline GroundSet set(Labels labels) { return GroundSet::of_labels(labels); }
inline Subset sub(const GroundSet& S, Labels labels) { return Subset::of_labels(S, labels); }
inline Filter filt(const GroundSet& S, Labels core) { return Filter(S, sub(S, core)); }

inline PartialFn pf(const GroundSet& S, const GroundSet& T, Graph graph) {
  PartialFn f(S, T);
  for (const auto& [k, v] : graph)
    f.set(S.require_index(Atom::label(std::string(k))), T.require_index(Atom::label(std::string(v))));
  return f;
}

inline Atom lab(std::string_view s) { return Atom::label(std::string(s)); }

}  // namespace filcat::test

#define EXPECT_ERRC(stmt, errc)                                          \
  do {                                                                   \
    try {                                                                \
      (void)(stmt);                                                      \
      ADD_FAILURE() << "expected " << ::filcat::errc_code(errc);         \
    } catch (const ::filcat::Error& e) {                                 \
      EXPECT_EQ(::filcat::errc_code(e.code()), ::filcat::errc_code(errc)) \
          << e.what();                                                   \
    }                                                                    \
  } while (0)

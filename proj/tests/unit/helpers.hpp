#pragma once

#include <initializer_list>

#include "zdext/cantor.hpp"
#include "zdext/zlba.hpp"

namespace testutil {

inline zdext::Point pt(const char* pre, const char* per) {
  return zdext::Point(zdext::Word::from_string(pre), zdext::Word::from_string(per));
}

inline zdext::ClopenSet cs(std::initializer_list<const char*> ws) {
  std::vector<zdext::Word> out;
  for (const char* w : ws) out.push_back(zdext::Word::from_string(w));
  return zdext::ClopenSet::from_words(out);
}

inline zdext::World w0() { return zdext::World(); }
inline zdext::World w1() { return zdext::World({pt("", "0")}); }
inline zdext::World w2() { return zdext::World({pt("", "0"), pt("", "1")}); }
inline zdext::World w3() { return zdext::World({pt("", "0"), pt("", "1"), pt("", "01")}); }

inline zdext::Zlba glued(const zdext::World& w, bool filled) {
  return zdext::Zlba(w, {w.all()}, {filled});
}

}  // namespace testutil

/*
 * Copyright 2026 The gkring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gk/builtins.hpp"

#include <gtest/gtest.h>

#include "gk/errors.hpp"
#include "gk/geom.hpp"
#include "gk/kring.hpp"

namespace gk {
namespace {

// Each named set's symbolic class must evaluate to its enumerated count.
TEST(Builtins, ClassMatchesEnumeration) {
  const std::vector<std::string> names{"affine:2", "omega:1",  "omega:2", "omega:3",
                                       "xk:1",     "xk:4",     "xk:6",    "ykm:2:3",
                                       "ykm:1:4",  "spec:1",   "spec:4",  "curvefam:1",
                                       "curvecomp:1", "spec:2*spec:2", "omega:1*xk:2"};
  for (std::uint64_t q : {2u, 3u, 4u}) {
    for (const auto& name : names) {
      const auto set = builtin_set(q, name);
      const auto cls = builtin_class(q, name);
      for (unsigned n = 1; n <= 4; ++n) {
        if (ipow(q, n * set.ambient_dim()) > (1u << 20)) continue;
        EXPECT_EQ(kring::evaluate(cls, kring::counting_measure(q, n)),
                  Rational(geom::count_points(set, n)))
            << name << " q=" << q << " n=" << n;
      }
    }
  }
}

TEST(Builtins, UnknownNames) {
  for (const char* bad : {"", "omega", "omega:x", "blob:2", "xk:0", "ykm:4:2", "spec:2*"}) {
    EXPECT_THROW(builtin_set(2, bad), Error) << bad;
  }
  EXPECT_FALSE(builtin_usage().empty());
}

}  // namespace
}  // namespace gk

// Copyright 2026 The polylat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reduce a small lattice over F_3 and show that the sorted row norms of the
// result sum to the covolume.

#include <cstdio>

#include "polylat/encoding.hpp"
#include "polylat/reduce.hpp"

int main() {
  using namespace polylat;

  const FieldSpec f3(3);
  auto p = [&](std::initializer_list<std::uint32_t> c) {
    return Poly::from_coeffs(f3, std::vector<std::uint32_t>(c));
  };

  const PolyBasis basis({PolyVec{p({1, 0, 2, 1}), p({0, 2, 1})},
                         PolyVec{p({2, 1, 0, 1}), p({1, 1, 2})}});
  std::printf("covolume: %s, defect before: %lld\n", basis.covol().str().c_str(),
              static_cast<long long>(od(basis)));

  const ReduceResult rr = reduce(basis);
  std::printf("defect after: %lld, steps: %lld\n",
              static_cast<long long>(od(rr.reduced.basis())),
              static_cast<long long>(rr.stats.steps));

  long long sum = 0;
  for (Degree d : rr.reduced.minima()) {
    std::printf("minimum: %s\n", d.str().c_str());
    sum += d.value();
  }
  std::printf("sum of minima = %lld = covolume\n", sum);

  for (std::size_t i = 0; i < rr.reduced.basis().dim(); ++i) {
    const PolyVec& row = rr.reduced.basis().row(i);
    std::printf("row %zu: (%s | %s)\n", i, encode_sparse(row[0]).c_str(),
                encode_sparse(row[1]).c_str());
  }
  return 0;
}

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

// Generate a key pair whose components have atypically low degree, then
// recover an equivalent sparse pair from the public key alone.

#include <cstdio>

#include "polylat/bike.hpp"
#include "polylat/encoding.hpp"

int main() {
  using namespace polylat;

  const BikeParams params = check_params(101, 7);
  Rng rng(2024);
  const BikeKeyPair key = keygen(params, rng, /*degree_cap=*/(params.r - 1) / 2);

  std::printf("r = %lld, v = %lld\n", static_cast<long long>(params.r),
              static_cast<long long>(params.v));
  std::printf("secret h1 = %s\n", encode_sparse(key.h1).c_str());
  std::printf("secret h2 = %s\n", encode_sparse(key.h2).c_str());
  std::printf("public h  = %s\n", encode_dense_hex(key.h).c_str());

  const AttackResult res = attack(key.h, params.r, AttackConfig(/*B=*/2, /*w_max=*/params.v));
  std::printf("reduced row norms: %s, %s\n", res.d1.str().c_str(), res.d2.str().c_str());
  if (!res.found) {
    std::printf("no sparse pair within reach (pairs tested: %llu)\n",
                static_cast<unsigned long long>(res.pairs_tested));
    return 1;
  }
  std::printf("found h1' = %s\n", encode_sparse(res.found->h1p).c_str());
  std::printf("found h2' = %s\n", encode_sparse(res.found->h2p).c_str());
  std::printf("pairs tested: %llu\n", static_cast<unsigned long long>(res.pairs_tested));
  std::printf("verifies: %s\n",
              verify(key.h, res.found->h1p, res.found->h2p, params.r, params.v) ? "yes" : "no");
  return 0;
}

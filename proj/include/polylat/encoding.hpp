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

#pragma once

#include <string>
#include <string_view>

#include "polylat/poly.hpp"

namespace polylat {

enum class Encoding { dense, sparse };

inline std::string encoding_name(Encoding e) { return e == Encoding::dense ? "dense" : "sparse"; }

inline Encoding encoding_from_name(std::string_view s) {
  if (s == "dense") return Encoding::dense;
  if (s == "sparse") return Encoding::sparse;
  throw ParamError("unknown polynomial encoding: " + std::string(s));
}

/// Binary-only hex form: the coefficient bitstring c0 c1 c2 ... packed four
/// per hex digit, least-significant coefficient first within each nibble,
/// low-degree nibble first in the string. x^5 + x^2 + 1 -> "52".
inline std::string encode_dense_hex(const Poly& p) {
  if (!p.field().binary()) throw ParamError("dense hex encoding is defined for q = 2 only");
  if (p.is_zero()) return "0";
  const std::int64_t deg = p.degree().value();
  const std::int64_t nibbles = deg / 4 + 1;
  std::string out;
  out.reserve(static_cast<std::size_t>(nibbles));
  for (std::int64_t n = 0; n < nibbles; ++n) {
    unsigned v = 0;
    for (int b = 0; b < 4; ++b) v |= p.coeff(4 * n + b) << b;
    out.push_back("0123456789abcdef"[v]);
  }
  return out;
}

inline Poly decode_dense_hex(FieldSpec f, std::string_view s) {
  if (!f.binary()) throw ParamError("dense hex encoding is defined for q = 2 only");
  Poly p(f);
  for (std::size_t n = 0; n < s.size(); ++n) {
    char c = s[n];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else
      throw ParamError("invalid hex digit in polynomial encoding");
    for (int b = 0; b < 4; ++b)
      if (v & (1u << b)) p.set_coeff(static_cast<std::int64_t>(4 * n + b), 1);
  }
  return p;
}

/// Exponent-list form: "0,2,5" for x^5 + x^2 + 1 (ascending, q = 2), and
/// "exp:coeff" pairs for larger fields. The zero polynomial is "".
inline std::string encode_sparse(const Poly& p) {
  std::string out;
  for (std::int64_t e : p.support()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(e);
    if (!p.field().binary()) {
      out.push_back(':');
      out += std::to_string(p.coeff(e));
    }
  }
  return out;
}

inline Poly decode_sparse(FieldSpec f, std::string_view s) {
  Poly p(f);
  std::int64_t prev = -1;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    std::string_view item = s.substr(i, j - i);
    std::string_view exps = item;
    std::uint32_t coeff = 1;
    if (std::size_t colon = item.find(':'); colon != std::string_view::npos) {
      if (f.binary()) throw ParamError("exp:coeff pairs are for q > 2");
      exps = item.substr(0, colon);
      coeff = static_cast<std::uint32_t>(std::stoul(std::string(item.substr(colon + 1))));
      if (coeff == 0 || coeff >= f.q()) throw ParamError("sparse coefficient out of range");
    } else if (!f.binary()) {
      throw ParamError("q > 2 sparse encoding needs exp:coeff pairs");
    }
    std::int64_t e = std::stoll(std::string(exps));
    if (e <= prev) throw ParamError("sparse exponents must be strictly increasing");
    prev = e;
    p.set_coeff(e, coeff);
    i = j + 1;
  }
  return p;
}

inline std::string encode_poly(const Poly& p, Encoding e) {
  return e == Encoding::dense ? encode_dense_hex(p) : encode_sparse(p);
}

inline Poly decode_poly(FieldSpec f, std::string_view s, Encoding e) {
  return e == Encoding::dense ? decode_dense_hex(f, s) : decode_sparse(f, s);
}

}  // namespace polylat

// Copyright 2026-present the vqsd project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsd/pauli.hpp"

#include <stdexcept>

namespace vqsd {

namespace {

constexpr char kLetterChars[] = {'I', 'X', 'Y', 'Z'};

}  // namespace

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters.size());
  for (auto l : letters) s.push_back(kLetterChars[static_cast<int>(l)]);
  return s;
}

PauliString PauliString::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("PauliString: empty word");
  PauliString p;
  p.letters.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'I': p.letters.push_back(PauliLetter::I); break;
      case 'X': p.letters.push_back(PauliLetter::X); break;
      case 'Y': p.letters.push_back(PauliLetter::Y); break;
      case 'Z': p.letters.push_back(PauliLetter::Z); break;
      default:
        throw std::invalid_argument(std::string("PauliString: bad letter '") +
                                    c + "'");
    }
  }
  return p;
}

std::vector<PauliString> enumerate_pauli_group(std::size_t n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("enumerate_pauli_group: n must be in [1,6]");
  const std::size_t total = (std::size_t{1} << (2 * n));  // 4^n
  std::vector<PauliString> out;
  out.reserve(total - 1);
  for (std::size_t code = 1; code < total; ++code) {
    PauliString p;
    p.letters.resize(n);
    std::size_t c = code;
    for (std::size_t q = n; q-- > 0;) {
      p.letters[q] = static_cast<PauliLetter>(c & 3);
      c >>= 2;
    }
    out.push_back(std::move(p));
  }
  return out;
}

const ComplexMatrix& pauli_letter_matrix(PauliLetter l) {
  static const ComplexMatrix mats[4] = {
      ComplexMatrix::identity(2),
      ComplexMatrix(2, 2, {cd{0, 0}, cd{1, 0}, cd{1, 0}, cd{0, 0}}),
      ComplexMatrix(2, 2, {cd{0, 0}, cd{0, -1}, cd{0, 1}, cd{0, 0}}),
      ComplexMatrix(2, 2, {cd{1, 0}, cd{0, 0}, cd{0, 0}, cd{-1, 0}})};
  return mats[static_cast<int>(l)];
}

ComplexMatrix pauli_to_matrix(const PauliString& p) {
  ComplexMatrix m = pauli_letter_matrix(p.letters.front());
  for (std::size_t q = 1; q < p.letters.size(); ++q)
    m = kron(m, pauli_letter_matrix(p.letters[q]));
  return m;
}

ComplexMatrix build_generator(const std::vector<double>& thetas,
                              const std::vector<PauliString>& strings) {
  if (thetas.size() != strings.size())
    throw std::invalid_argument("build_generator: weight/string length mismatch");
  if (strings.empty())
    throw std::invalid_argument("build_generator: empty term list");
  const std::size_t dim = std::size_t{1} << strings.front().n_qubits();
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (thetas[i] == 0.0) continue;
    g.add_scaled(thetas[i], pauli_to_matrix(strings[i]));
  }
  return g;
}

}  // namespace vqsd

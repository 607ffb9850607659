// Copyright 2026 The qentropy Authors
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

#ifndef QENTROPY_RANDOM_HPP
#define QENTROPY_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "qentropy/matrixcore.hpp"

namespace qent {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
Seed mix_seed(Seed x);

/// Child seed for a (master, index...) path. Stable across runs and platforms.
Seed derive_seed(Seed master, std::initializer_list<std::uint64_t> path);

inline Rng make_rng(Seed seed) { return Rng(mix_seed(seed)); }

/// Matrix with i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
CMat complex_gaussian(Index rows, Index cols, Rng& rng);

/// Uniform point on the probability simplex (Dirichlet(1, ..., 1)).
std::vector<double> dirichlet_uniform(std::size_t k, Rng& rng);

/// Dense pure-state sampler shared by the channel and Haar modules.
Vec normalized_gaussian_vector(Index n, Rng& rng);

}  // namespace qent

#endif  // QENTROPY_RANDOM_HPP

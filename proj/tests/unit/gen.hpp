#pragma once

// Hand-rolled generators for property tests. Every test seeds its own engine.

#include <random>
#include <vector>

#include "workbench/freelie.hpp"
#include "workbench/matrix.hpp"
#include "workbench/words.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

inline workbench::FreeWord word(Rng& rng, int rank, int max_len) {
  std::vector<workbench::Letter> letters;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    const int g = uniform(rng, 1, rank);
    letters.push_back(rng() % 2 ? g : -g);
  }
  return workbench::FreeWord::reduce(letters, rank);
}

inline workbench::Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound, int zero_percent = 0) {
  workbench::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (uniform(rng, 1, 100) > zero_percent) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

inline workbench::LieElement lie(Rng& rng, const workbench::BasisContext& ctx, int degree, int terms = 2) {
  workbench::LieElement out(ctx, degree);
  for (int t = 0; t < terms; ++t) {
    workbench::IndexWord idx;
    for (int i = 0; i < degree; ++i) idx.push_back(uniform(rng, 1, ctx.rank()));
    out += workbench::left_normed(ctx, idx) * workbench::Integer(uniform(rng, -3, 3));
  }
  return out;
}

inline workbench::GradedDerivation derivation(Rng& rng, const workbench::BasisContext& ctx, int degree) {
  std::vector<workbench::LieElement> images;
  for (int i = 0; i < ctx.rank(); ++i) images.push_back(lie(rng, ctx, degree + 1));
  return workbench::GradedDerivation(ctx, degree, std::move(images));
}

}  // namespace gen

#pragma once

#include <random>
#include <vector>

#include "fibcalc/invariants/invariants.hpp"
#include "fibcalc/mcg/mcg.hpp"

namespace fibcalc::testing {

inline std::vector<int> random_letters(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution inv(0.5);
  std::vector<int> out(static_cast<std::size_t>(len(rng)));
  for (auto& l : out) l = inv(rng) ? -gen(rng) : gen(rng);
  return out;
}

inline FreeWord random_word(std::mt19937& rng, int rank, int max_len) {
  const auto letters = random_letters(rng, rank, max_len);
  return FreeWord(rank, std::span<const int>(letters));
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, Int bound) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Curves used for random monodromies: a1, b1 on genus 1; a1, b1, a2, b2, d1 on genus 2.
inline std::vector<CurveSpec> twist_curves(int genus) {
  std::vector<CurveSpec> out;
  for (const char* n : {"a1", "b1"}) out.push_back(standard_curve(genus, n));
  if (genus == 2)
    for (const char* n : {"a2", "b2", "d1"}) out.push_back(standard_curve(genus, n));
  return out;
}

inline TwistWord random_twist_word(std::mt19937& rng, int genus, int max_len) {
  const auto curves = twist_curves(genus);
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, curves.size() - 1);
  std::uniform_int_distribution<int> exp(1, 2);
  std::bernoulli_distribution neg(0.5);
  TwistWord w;
  for (int i = len(rng); i > 0; --i) w.push_back({curves[pick(rng)], neg(rng) ? -exp(rng) : exp(rng)});
  return w;
}

// Naive free reduction: repeatedly delete adjacent inverse pairs.
inline std::vector<int> naive_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Counts homomorphisms by trying every tuple of images.
inline std::uint64_t brute_force_homs(const GroupPresentation& p, const FiniteGroupTable& g) {
  const int n = p.rank();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int acc = g.identity();
      for (int l : r.letters()) {
        const int x = img[static_cast<std::size_t>(std::abs(l) - 1)];
        acc = g.multiply(acc, l > 0 ? x : g.inverse(x));
      }
      if (acc != g.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < n && ++img[static_cast<std::size_t>(i)] == g.order()) img[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

// Coefficient lists (t^0 first).
inline std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// det(tI - A) for 2x2 A: t^2 - tr(A) t + det(A), as {c0, c1, c2}.
inline std::vector<Int> char_poly_2x2(const IntMatrix& a) {
  return {a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0), -(a(0, 0) + a(1, 1)), 1};
}

}  // namespace fibcalc::testing

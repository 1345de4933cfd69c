#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibcalc/algebra/checked.hpp"
#include "fibcalc/algebra/int_matrix.hpp"

namespace fibcalc {

// An element of the free group F_n, stored freely reduced.
//
// Letters are nonzero ints: +i is generator x_i, -i its inverse (1-indexed).
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}

  // Reduces `letters`; throws MalformedInput if a letter is 0 or exceeds rank.
  FreeWord(int rank, std::span<const int> letters);
  FreeWord(int rank, std::initializer_list<int> letters)
      : FreeWord(rank, std::span<const int>(letters.begin(), letters.size())) {}

  static FreeWord generator(int rank, int index);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord pow(Int n) const;

  // Same letters, viewed in the free group of larger rank.
  FreeWord embed(int new_rank, int offset = 0) const;

  // Exponent-sum vector, length rank.
  std::vector<Int> exponent_sums() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

// Free reduction of an arbitrary letter sequence.
FreeWord reduce(int rank, std::span<const int> letters);

// Image of w under the homomorphism F_{w.rank()} -> F_{target_rank} sending
// generator i to images[i-1].
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images, int target_rank);

// An endomorphism of F_n given by generator images, optionally with a witness
// of invertibility. A witness, when present, is verified at construction.
class FreeGroupMap {
 public:
  FreeGroupMap() = default;
  FreeGroupMap(std::vector<FreeWord> images,
               std::optional<std::vector<FreeWord>> inverse_images = std::nullopt);

  static FreeGroupMap identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const std::optional<std::vector<FreeWord>>& inverse_images() const { return inverse_images_; }
  bool has_inverse() const { return inverse_images_.has_value(); }

  FreeWord apply(const FreeWord& w) const;
  const FreeWord& image(int generator) const { return images_.at(generator - 1); }

  // Throws PreconditionError when no witness is carried.
  FreeGroupMap inverse() const;

  bool is_identity() const;

  // Acts as *this on generators [offset+1, offset+rank] of F_{new_rank}, and
  // fixes every other generator.
  FreeGroupMap embed(int new_rank, int offset) const;

  friend bool operator==(const FreeGroupMap&, const FreeGroupMap&) = default;

 private:
  std::vector<FreeWord> images_;
  std::optional<std::vector<FreeWord>> inverse_images_;
};

FreeWord apply_map(const FreeGroupMap& f, const FreeWord& w);

// (f o g)(x) = f(g(x)).
FreeGroupMap compose(const FreeGroupMap& f, const FreeGroupMap& g);

// Exponent-sum matrix: column j is the exponent vector of images[j].
IntMatrix abelianize(const FreeGroupMap& f);

// Generator naming for the text syntax. Lowercase is the generator,
// capitalized first character is its inverse.
std::vector<std::string> surface_generator_names(int genus);     // a1 b1 a2 b2 ...
std::vector<std::string> handlebody_generator_names(int genus);  // x1 x2 ...

std::string format_word(const FreeWord& w, std::span<const std::string> names);
FreeWord parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace fibcalc

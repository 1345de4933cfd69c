#include "fibcalc/algebra/free_group.hpp"

#include <cctype>
#include <sstream>

namespace fibcalc {

namespace {

void check_letter(int rank, int letter) {
  if (letter == 0 || letter > rank || letter < -rank) {
    throw MalformedInput("generator index " + std::to_string(letter) + " out of range for rank " +
                         std::to_string(rank));
  }
}

}  // namespace

FreeWord reduce(int rank, std::span<const int> letters) { return FreeWord(rank, letters); }

FreeWord::FreeWord(int rank, std::span<const int> letters) : rank_(rank) {
  if (rank < 0) throw MalformedInput("negative free group rank");
  letters_.reserve(letters.size());
  for (int l : letters) {
    check_letter(rank, l);
    if (!letters_.empty() && letters_.back() == -l) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::generator(int rank, int index) {
  const int l[] = {index};
  return FreeWord(rank, std::span<const int>(l));
}

FreeWord FreeWord::inverse() const {
  FreeWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  if (rank_ != rhs.rank_) throw RankMismatch("word product across ranks " + std::to_string(rank_) +
                                             " and " + std::to_string(rhs.rank_));
  FreeWord out = *this;
  for (int l : rhs.letters_) {
    if (!out.letters_.empty() && out.letters_.back() == -l) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

FreeWord FreeWord::pow(Int n) const {
  const FreeWord base = n < 0 ? inverse() : *this;
  FreeWord out(rank_);
  for (Int i = 0; i < checked::abs(n); ++i) out = out * base;
  return out;
}

FreeWord FreeWord::embed(int new_rank, int offset) const {
  if (offset < 0 || offset + rank_ > new_rank) throw RankMismatch("word embedding does not fit");
  FreeWord out(new_rank);
  out.letters_.reserve(letters_.size());
  for (int l : letters_) out.letters_.push_back(l > 0 ? l + offset : l - offset);
  return out;
}

std::vector<Int> FreeWord::exponent_sums() const {
  std::vector<Int> e(static_cast<std::size_t>(rank_), 0);
  for (int l : letters_) {
    if (l > 0) {
      ++e[l - 1];
    } else {
      --e[-l - 1];
    }
  }
  return e;
}

FreeGroupMap::FreeGroupMap(std::vector<FreeWord> images,
                           std::optional<std::vector<FreeWord>> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const int n = rank();
  for (const auto& w : images_)
    if (w.rank() != n) throw RankMismatch("image word rank differs from map rank");
  if (!inverse_images_) return;
  if (static_cast<int>(inverse_images_->size()) != n) throw RankMismatch("inverse witness has wrong length");
  for (const auto& w : *inverse_images_)
    if (w.rank() != n) throw RankMismatch("inverse witness word rank differs from map rank");

  const FreeGroupMap forward(images_);
  const FreeGroupMap backward(*inverse_images_);
  for (int i = 1; i <= n; ++i) {
    const FreeWord x = FreeWord::generator(n, i);
    if (forward.apply(backward.apply(x)) != x || backward.apply(forward.apply(x)) != x) {
      throw InvariantViolation("inverse witness does not invert the map at generator " + std::to_string(i));
    }
  }
}

FreeGroupMap FreeGroupMap::identity(int rank) {
  std::vector<FreeWord> gens;
  gens.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) gens.push_back(FreeWord::generator(rank, i));
  return FreeGroupMap(gens, gens);
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images, int target_rank) {
  if (static_cast<int>(images.size()) != w.rank()) throw RankMismatch("substitution needs one image per generator");
  FreeWord out(target_rank);
  for (int l : w.letters()) {
    const FreeWord& img = images[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    out = out * (l > 0 ? img : img.inverse());
  }
  return out;
}

FreeWord FreeGroupMap::apply(const FreeWord& w) const {
  if (w.rank() != rank()) throw RankMismatch("applying a rank-" + std::to_string(rank()) +
                                             " map to a rank-" + std::to_string(w.rank()) + " word");
  return substitute(w, images_, rank());
}

FreeGroupMap FreeGroupMap::inverse() const {
  if (!inverse_images_) throw PreconditionError("map carries no inverse witness");
  return FreeGroupMap(*inverse_images_, images_);
}

bool FreeGroupMap::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (images_[i - 1] != FreeWord::generator(rank(), i)) return false;
  return true;
}

FreeGroupMap FreeGroupMap::embed(int new_rank, int offset) const {
  if (offset < 0 || offset + rank() > new_rank) throw RankMismatch("map embedding does not fit");
  auto lift = [&](const std::vector<FreeWord>& words) {
    std::vector<FreeWord> out;
    for (int i = 1; i <= new_rank; ++i) {
      if (i > offset && i <= offset + rank()) {
        out.push_back(words[i - offset - 1].embed(new_rank, offset));
      } else {
        out.push_back(FreeWord::generator(new_rank, i));
      }
    }
    return out;
  };
  if (inverse_images_) return FreeGroupMap(lift(images_), lift(*inverse_images_));
  return FreeGroupMap(lift(images_));
}

FreeWord apply_map(const FreeGroupMap& f, const FreeWord& w) { return f.apply(w); }

FreeGroupMap compose(const FreeGroupMap& f, const FreeGroupMap& g) {
  if (f.rank() != g.rank()) throw RankMismatch("composing maps of ranks " + std::to_string(f.rank()) +
                                               " and " + std::to_string(g.rank()));
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (const auto& w : g.images()) images.push_back(f.apply(w));
  if (f.has_inverse() && g.has_inverse()) {
    // (f o g)^{-1} = g^{-1} o f^{-1}
    const FreeGroupMap finv(*f.inverse_images());
    const FreeGroupMap ginv(*g.inverse_images());
    std::vector<FreeWord> inv;
    for (const auto& w : finv.images()) inv.push_back(ginv.apply(w));
    return FreeGroupMap(std::move(images), std::move(inv));
  }
  return FreeGroupMap(std::move(images));
}

IntMatrix abelianize(const FreeGroupMap& f) {
  const int n = f.rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const auto e = f.images()[j].exponent_sums();
    for (int i = 0; i < n; ++i) m(i, j) = e[i];
  }
  return m;
}

std::vector<std::string> surface_generator_names(int genus) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

std::vector<std::string> handlebody_generator_names(int genus) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

std::string format_word(const FreeWord& w, std::span<const std::string> names) {
  if (static_cast<int>(names.size()) != w.rank()) throw RankMismatch("name list does not match word rank");
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    const std::string& n = names[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    out += l > 0 ? n : capitalize(n);
  }
  return out;
}

FreeWord parse_word(std::string_view text, std::span<const std::string> names) {
  const int rank = static_cast<int>(names.size());
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int found = 0;
    for (int i = 0; i < rank && !found; ++i) {
      if (tok == names[i]) {
        found = i + 1;
      } else if (tok == capitalize(names[i])) {
        found = -(i + 1);
      }
    }
    if (!found) throw MalformedInput("unknown generator token '" + tok + "'");
    letters.push_back(found);
  }
  return FreeWord(rank, letters);
}

}  // namespace fibcalc

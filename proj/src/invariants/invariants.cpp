#include "fibcalc/invariants/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "fibcalc/algebra/int_matrix.hpp"

namespace fibcalc {

GroupRingElement ring_element(const FreeWord& w, Int coeff) {
  if (coeff == 0) return {};
  return {{w, coeff}};
}

GroupRingElement ring_add(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out = x;
  for (const auto& [w, c] : y) {
    const Int s = checked::add(out[w], c);
    if (s == 0) out.erase(w);
    else out[w] = s;
  }
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) out = ring_add(out, ring_element(u * v, checked::mul(a, b)));
  return out;
}

std::string to_string(const GroupRingElement& x, std::span<const std::string> names) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Int a = checked::abs(c);
    const std::string word = w.empty() ? "1" : format_word(w, names);
    if (a != 1) out += std::to_string(a) + (w.empty() ? "" : "*" + word);
    else out += word;
  }
  return out;
}

GroupRingElement fox_derivative(const FreeWord& w, int j) {
  if (j < 1 || j > w.rank()) throw RankMismatch("no generator " + std::to_string(j) + " in rank " + std::to_string(w.rank()));
  GroupRingElement out;
  FreeWord prefix(w.rank());
  for (int letter : w.letters()) {
    const FreeWord x(w.rank(), {letter});
    if (letter == j) out = ring_add(out, ring_element(prefix));
    if (letter == -j) out = ring_add(out, ring_element(prefix * x, -1));
    prefix = prefix * x;
  }
  return out;
}

bool fox_identity_holds(const FreeWord& w) {
  const int n = w.rank();
  const FreeWord one(n);
  GroupRingElement lhs;
  for (int j = 1; j <= n; ++j) {
    const GroupRingElement xj_minus_1 = ring_add(ring_element(FreeWord::generator(n, j)), ring_element(one, -1));
    lhs = ring_add(lhs, ring_multiply(fox_derivative(w, j), xj_minus_1));
  }
  return lhs == ring_add(ring_element(w), ring_element(one, -1));
}

FoxMatrix fox_matrix(const GroupPresentation& p) {
  p.validate();
  FoxMatrix m;
  for (const auto& r : p.relators) {
    std::vector<GroupRingElement> row;
    for (int j = 1; j <= p.rank(); ++j) row.push_back(fox_derivative(r, j));
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPoly abelianize_element(const GroupRingElement& x, const std::vector<Int>& assignment) {
  LaurentPoly out;
  for (const auto& [w, c] : x) {
    if (static_cast<int>(assignment.size()) != w.rank()) throw RankMismatch("assignment length differs from rank");
    const auto sums = w.exponent_sums();
    Int e = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) e = checked::add(e, checked::mul(sums[i], assignment[i]));
    out += LaurentPoly::monomial(c, e);
  }
  return out;
}

namespace {

// n x m: column r holds the exponent sums of relator r.
IntMatrix relation_matrix(const GroupPresentation& p) {
  IntMatrix m(p.rank(), static_cast<int>(p.relators.size()));
  for (int r = 0; r < m.cols(); ++r) {
    const auto sums = p.relators[static_cast<std::size_t>(r)].exponent_sums();
    for (int i = 0; i < m.rows(); ++i) m(i, r) = sums[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace

std::vector<Int> h1(const GroupPresentation& p) {
  p.validate();
  const int n = p.rank();
  const int m = static_cast<int>(p.relators.size());
  std::vector<Int> out;
  if (n == 0) return out;
  std::vector<Int> diag;
  if (m > 0) diag = smith_normal_form(relation_matrix(p)).diagonal();
  diag.resize(static_cast<std::size_t>(n), 0);
  for (Int d : diag)
    if (d != 1) out.push_back(d);
  return out;
}

std::vector<Int> abelianization_assignment(const GroupPresentation& p) {
  if (h1(p) != std::vector<Int>{0}) throw PreconditionError("abelianization of the presentation is not Z");
  const int n = p.rank();
  if (p.relators.empty()) return {1};
  const SmithForm f = smith_normal_form(relation_matrix(p));
  const auto diag = f.diagonal();
  int k = -1;
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(diag.size()) || diag[static_cast<std::size_t>(i)] == 0) k = i;
  std::vector<Int> e;
  for (int j = 0; j < n; ++j) e.push_back(f.u(k, j));
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it == 0) continue;
    if (*it < 0)
      for (auto& x : e) x = checked::neg(x);
    break;
  }
  return e;
}

LaurentPoly alexander_from_presentation(const GroupPresentation& p, const std::optional<std::vector<Int>>& assignment) {
  const std::vector<Int> e = assignment ? *assignment : abelianization_assignment(p);
  const int n = p.rank();
  if (static_cast<int>(e.size()) != n) throw RankMismatch("assignment needs one exponent per generator");
  if (assignment) {
    if (h1(p) != std::vector<Int>{0}) throw PreconditionError("abelianization of the presentation is not Z");
    Int g = 0;
    for (Int x : e) g = checked::gcd(g, x);
    if (g != 1) throw PreconditionError("assignment is not onto Z");
    for (const auto& r : p.relators) {
      const auto sums = r.exponent_sums();
      Int s = 0;
      for (int i = 0; i < n; ++i) s = checked::add(s, checked::mul(sums[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]));
      if (s != 0) throw PreconditionError("assignment does not kill relator " + format_word(r, p.generator_names));
    }
  }
  int col = -1;
  for (int j = 0; j < n; ++j) {
    const Int a = checked::abs(e[static_cast<std::size_t>(j)]);
    if (a != 0 && (col < 0 || a < checked::abs(e[static_cast<std::size_t>(col)]))) col = j;
  }
  const FoxMatrix fox = fox_matrix(p);
  const int m = static_cast<int>(fox.size());
  LaurentMatrix a(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < n; ++j)
      if (j != col) a[static_cast<std::size_t>(r)].push_back(abelianize_element(fox[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], e));
  const int size = n - 1;
  LaurentPoly delta;
  if (size == 0) {
    delta = LaurentPoly::monomial(1, 0);
  } else if (m >= size) {
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      LaurentMatrix minor;
      for (int r = 0; r < m; ++r)
        if (pick[static_cast<std::size_t>(r)]) minor.push_back(a[static_cast<std::size_t>(r)]);
      delta = gcd(delta, determinant(minor));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  const Int k = checked::abs(e[static_cast<std::size_t>(col)]);
  if (k > 1) {
    LaurentPoly cyclotomic_sum;
    for (Int i = 0; i < k; ++i) cyclotomic_sum += LaurentPoly::monomial(1, i);
    delta = exact_divide(delta, cyclotomic_sum);
  }
  return normalize_alexander(delta);
}

GroupPresentation trefoil_two_bridge_presentation() {
  return {{"a", "b"}, {FreeWord(2, {1, 2, 1, -2, -1, -2})}};
}

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::string> element_names, std::vector<int> table)
    : name_(std::move(name)), n_(static_cast<int>(element_names.size())), names_(std::move(element_names)),
      table_(std::move(table)) {
  const auto n = static_cast<std::size_t>(n_);
  if (n == 0) throw InvariantViolation("group '" + name_ + "' is empty");
  if (table_.size() != n * n) throw MalformedInput("multiplication table of '" + name_ + "' has the wrong size");
  for (int v : table_)
    if (v < 0 || v >= n_) throw InvariantViolation("table of '" + name_ + "' is not closed");
  identity_ = -1;
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = multiply(e, x) == x && multiply(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvariantViolation("group '" + name_ + "' has no identity");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
          throw InvariantViolation("group '" + name_ + "' is not associative");
  inverse_.assign(n, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (multiply(x, y) == identity_ && multiply(y, x) == identity_) inverse_[static_cast<std::size_t>(x)] = y;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw InvariantViolation("group '" + name_ + "' has an element without inverse");
}

FiniteGroupTable FiniteGroupTable::from_permutations(std::string name, int degree,
                                                     const std::vector<std::vector<int>>& generators) {
  using Perm = std::vector<int>;
  for (const auto& g : generators) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    Perm expect(static_cast<std::size_t>(degree));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw MalformedInput("generator of '" + name + "' is not a permutation of degree " + std::to_string(degree));
  }
  auto mul = [](const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Perm q = mul(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  const std::vector<Perm> elements(seen.begin(), seen.end());
  const auto n = elements.size();
  std::vector<std::string> names;
  for (const auto& p : elements) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    names.push_back(s + "]");
  }
  std::vector<int> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = std::lower_bound(elements.begin(), elements.end(), mul(elements[i], elements[j]));
      table[i * n + j] = static_cast<int>(it - elements.begin());
    }
  return FiniteGroupTable(std::move(name), std::move(names), std::move(table));
}

std::vector<std::string> catalog_group_names() {
  std::vector<std::string> out;
  for (int k = 1; k <= 12; ++k) out.push_back("Z" + std::to_string(k));
  for (const char* s : {"S3", "S4", "A4", "D4"}) out.emplace_back(s);
  return out;
}

FiniteGroupTable catalog_group(const std::string& name) {
  if (name == "S3") return FiniteGroupTable::from_permutations(name, 3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "S4") return FiniteGroupTable::from_permutations(name, 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  if (name == "A4") return FiniteGroupTable::from_permutations(name, 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  if (name == "D4") return FiniteGroupTable::from_permutations(name, 4, {{1, 2, 3, 0}, {2, 1, 0, 3}});
  if (name.size() >= 2 && name[0] == 'Z' && std::all_of(name.begin() + 1, name.end(), ::isdigit) && name.size() <= 3) {
    const int k = std::stoi(name.substr(1));
    if (k >= 1 && k <= 12 && name == "Z" + std::to_string(k)) {
      std::vector<int> cycle(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % k;
      return FiniteGroupTable::from_permutations(name, k, {cycle});
    }
  }
  throw UnknownName("no catalog group '" + name + "'");
}

std::uint64_t default_hom_budget() {
  const char* env = std::getenv("FIBCALC_HOM_BUDGET");
  if (!env) return HomCountOptions{}.budget;
  const std::string s(env);
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw MalformedInput("FIBCALC_HOM_BUDGET must be a nonnegative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw MalformedInput("FIBCALC_HOM_BUDGET is out of range");
  }
}

namespace {

struct Letter {
  int slot;  // position in the search order
  bool inverse;
};

class HomSearch {
 public:
  HomSearch(const GroupPresentation& p, const FiniteGroupTable& g) : g_(g), n_(p.rank()) {
    std::vector<int> order;
    for (int i = 0; i < n_; ++i)
      if (p.generator_names[static_cast<std::size_t>(i)] == "t") order.push_back(i);
    for (int i = 0; i < n_; ++i)
      if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    std::vector<int> slot(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) slot[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] = s;
    checks_.resize(static_cast<std::size_t>(std::max(n_, 1)));
    for (const auto& r : p.relators) {
      if (r.empty()) continue;
      std::vector<Letter> letters;
      int last = 0;
      for (int l : r.letters()) {
        const int s = slot[static_cast<std::size_t>(std::abs(l) - 1)];
        letters.push_back({s, l < 0});
        last = std::max(last, s);
      }
      checks_[static_cast<std::size_t>(last)].push_back(std::move(letters));
    }
  }

  int rank() const { return n_; }

  // Counts completions with slot 0 fixed to `first`; `nodes` counts assignments.
  template <class OnNode>
  std::uint64_t count_from(int first, OnNode&& on_node) const {
    std::vector<int> images(static_cast<std::size_t>(n_));
    images[0] = first;
    on_node();
    if (!consistent(0, images)) return 0;
    return descend(1, images, on_node);
  }

 private:
  bool consistent(int slot, const std::vector<int>& images) const {
    for (const auto& rel : checks_[static_cast<std::size_t>(slot)]) {
      int acc = g_.identity();
      for (const auto& l : rel) {
        const int x = images[static_cast<std::size_t>(l.slot)];
        acc = g_.multiply(acc, l.inverse ? g_.inverse(x) : x);
      }
      if (acc != g_.identity()) return false;
    }
    return true;
  }

  template <class OnNode>
  std::uint64_t descend(int slot, std::vector<int>& images, OnNode& on_node) const {
    if (slot == n_) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < g_.order(); ++v) {
      on_node();
      images[static_cast<std::size_t>(slot)] = v;
      if (consistent(slot, images)) total += descend(slot + 1, images, on_node);
    }
    return total;
  }

  const FiniteGroupTable& g_;
  int n_;
  std::vector<std::vector<std::vector<Letter>>> checks_;
};

}  // namespace

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroupTable& g, const HomCountOptions& options) {
  p.validate();
  if (p.rank() == 0) {
    for (const auto& r : p.relators)
      if (!r.empty()) throw MalformedInput("nonempty relator in a rank-0 presentation");
    return 1;
  }
  const HomSearch search(p, g);
  const std::uint64_t budget = options.budget;
  const std::string what = "homomorphism search into " + g.name() + " exceeded the budget of " + std::to_string(budget) + " nodes";
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<int> next_first{0};
  std::atomic<std::uint64_t> total{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    std::uint64_t local = 0;
    auto flush = [&] {
      const std::uint64_t seen = nodes.fetch_add(local) + local;
      local = 0;
      if (seen > budget) {
        abort = true;
        throw BudgetExceeded(budget, what);
      }
    };
    auto on_node = [&] {
      if (++local >= 4096) flush();
      if (abort) throw BudgetExceeded(budget, what);
    };
    try {
      for (int first = next_first++; first < g.order() && !abort; first = next_first++)
        total += search.count_from(first, on_node);
      flush();
    } catch (...) {
      abort = true;
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(g.order())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded(budget, what);
    }
  }
  if (nodes > budget) throw BudgetExceeded(budget, what);
  return total;
}

}  // namespace fibcalc

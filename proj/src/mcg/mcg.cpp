#include "fibcalc/mcg/mcg.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace fibcalc {

IntMatrix symplectic_form(int genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Int intersection_pairing(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw RankMismatch("pairing needs equal even-length vectors");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); i += 2) {
    s = checked::add(s, checked::sub(checked::mul(x[i], y[i + 1]), checked::mul(x[i + 1], y[i])));
  }
  return s;
}

bool is_symplectic(const IntMatrix& a) {
  if (!a.square() || a.rows() % 2 != 0) return false;
  const IntMatrix j = symplectic_form(a.rows() / 2);
  return a.transpose() * j * a == j;
}

IntMatrix transvection(const std::vector<Int>& c, Int multiplier) {
  if (c.size() % 2 != 0) throw MalformedInput("homology class must have even length");
  const int n = static_cast<int>(c.size());
  IntMatrix t = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Int> e(static_cast<std::size_t>(n), 0);
    e[j] = 1;
    const Int k = checked::mul(multiplier, intersection_pairing(e, c));
    for (int i = 0; i < n; ++i) t(i, j) = checked::add(t(i, j), checked::mul(k, c[i]));
  }
  return t;
}

IntMatrix transvection(const CurveSpec& c) {
  if (static_cast<int>(c.homology_class.size()) != 2 * c.genus)
    throw MalformedInput("curve '" + c.name + "' has a class of length " +
                         std::to_string(c.homology_class.size()) + ", expected " + std::to_string(2 * c.genus));
  return transvection(c.homology_class);
}

void CurveSpec::validate() const {
  if (genus < 0) throw MalformedInput("curve '" + name + "' has negative genus");
  if (static_cast<int>(homology_class.size()) != 2 * genus)
    throw MalformedInput("curve '" + name + "' has a class of length " + std::to_string(homology_class.size()) +
                         ", expected " + std::to_string(2 * genus));
  if (flags.bounds_disk_in_handlebody) {
    for (int i = 0; i < genus; ++i)
      if (homology_class[2 * i] != 0)
        throw InvariantViolation("curve '" + name +
                                 "' is flagged as bounding a disk in the handlebody but its class leaves "
                                 "the standard Lagrangian span{b_i}");
  }
  if (pi1_payload) {
    if (pi1_payload->rank() != 2 * genus) throw RankMismatch("curve '" + name + "' payload has the wrong rank");
    if (!pi1_payload->has_inverse())
      throw InvariantViolation("curve '" + name + "' payload carries no inverse witness");
    if (abelianize(*pi1_payload) != transvection(homology_class))
      throw InvariantViolation("curve '" + name + "' payload does not abelianize to its transvection");
  }
}

std::optional<FreeGroupMap> algebraic_twist_payload(int genus, const std::vector<Int>& c) {
  if (static_cast<int>(c.size()) != 2 * genus) throw MalformedInput("homology class has the wrong length");
  const int n = 2 * genus;
  bool has_a = false, has_b = false;
  for (int i = 0; i < genus; ++i) {
    has_a = has_a || c[2 * i] != 0;
    has_b = has_b || c[2 * i + 1] != 0;
  }
  if (has_a && has_b) return std::nullopt;
  if (!has_a && !has_b) return FreeGroupMap::identity(n);

  // w realizes the class; it involves only the fixed family of generators.
  FreeWord w(n);
  const int fixed_parity = has_a ? 0 : 1;
  for (int i = 0; i < genus; ++i) w = w * FreeWord::generator(n, 2 * i + fixed_parity + 1).pow(c[2 * i + fixed_parity]);

  std::vector<FreeWord> fwd, bwd;
  for (int i = 0; i < genus; ++i) {
    const FreeWord a = FreeWord::generator(n, 2 * i + 1);
    const FreeWord b = FreeWord::generator(n, 2 * i + 2);
    if (has_a) {
      // b_j -> b_j + <b_j,c> c = b_j - c_{a_j} c
      fwd.push_back(a);
      fwd.push_back(b * w.pow(checked::neg(c[2 * i])));
      bwd.push_back(a);
      bwd.push_back(b * w.pow(c[2 * i]));
    } else {
      // a_j -> a_j + <a_j,c> c = a_j + c_{b_j} c
      fwd.push_back(a * w.pow(c[2 * i + 1]));
      fwd.push_back(b);
      bwd.push_back(a * w.pow(checked::neg(c[2 * i + 1])));
      bwd.push_back(b);
    }
  }
  return FreeGroupMap(std::move(fwd), std::move(bwd));
}

CurveSpec make_curve(std::string name, int genus, std::vector<Int> homology_class, CurveFlags flags,
                     std::optional<FreeGroupMap> payload) {
  CurveSpec c{std::move(name), genus, std::move(homology_class), std::move(payload), flags};
  if (static_cast<int>(c.homology_class.size()) == 2 * genus && !c.pi1_payload)
    c.pi1_payload = algebraic_twist_payload(genus, c.homology_class);
  c.validate();
  return c;
}

CurveSpec standard_curve(int genus, const std::string& name) {
  static const std::regex pattern("^([abd])([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw UnknownName("unknown standard curve '" + name + "'");
  const int i = std::stoi(m[2].str());
  const char kind = m[1].str()[0];
  const int needed = kind == 'd' ? i + 1 : i;
  if (i < 1 || needed > genus)
    throw UnknownName("standard curve '" + name + "' does not exist on a genus-" + std::to_string(genus) + " surface");
  std::vector<Int> cls(static_cast<std::size_t>(2 * genus), 0);
  if (kind == 'a') cls[2 * (i - 1)] = 1;
  if (kind == 'b') cls[2 * (i - 1) + 1] = 1;
  if (kind == 'd') {
    cls[2 * (i - 1)] = 1;
    cls[2 * i] = -1;
  }
  return make_curve(name, genus, std::move(cls));
}

TwistWord reduce_twist_word(const TwistWord& word) {
  TwistWord out;
  for (const auto& step : word) {
    if (step.exponent == 0) continue;
    if (!out.empty() && out.back().curve == step.curve) {
      out.back().exponent = checked::add(out.back().exponent, step.exponent);
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(step);
    }
  }
  return out;
}

TwistWord inverse_twist_word(const TwistWord& word) {
  TwistWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back({it->curve, checked::neg(it->exponent)});
  return out;
}

namespace {

std::string describe(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace

SurfaceMonodromy::SurfaceMonodromy(Unchecked, int genus, IntMatrix action, std::optional<FreeGroupMap> pi1,
                                   std::optional<TwistWord> word)
    : genus_(genus), action_(std::move(action)), pi1_(std::move(pi1)), word_(std::move(word)) {}

SurfaceMonodromy::SurfaceMonodromy(int genus, IntMatrix homological_action, std::optional<FreeGroupMap> pi1_action,
                                   std::optional<TwistWord> twist_word)
    : genus_(genus), action_(std::move(homological_action)), pi1_(std::move(pi1_action)), word_(std::move(twist_word)) {
  if (genus_ < 0) throw MalformedInput("negative genus");
  if (action_.rows() != 2 * genus_ || action_.cols() != 2 * genus_)
    throw RankMismatch("homological action must be " + std::to_string(2 * genus_) + "x" + std::to_string(2 * genus_));
  if (!is_symplectic(action_)) throw InvariantViolation("homological action " + describe(action_) + " is not symplectic");
  if (pi1_) {
    if (pi1_->rank() != 2 * genus_) throw RankMismatch("pi_1 action has the wrong rank");
    if (abelianize(*pi1_) != action_)
      throw InvariantViolation("pi_1 action abelianizes to " + describe(abelianize(*pi1_)) +
                               ", not the homological action " + describe(action_));
  }
  if (word_) {
    IntMatrix product = IntMatrix::identity(2 * genus_);
    bool all_payloads = true;
    FreeGroupMap pi1_product = FreeGroupMap::identity(2 * genus_);
    for (const auto& step : *word_) {
      if (step.curve.genus != genus_) throw RankMismatch("twist word curve '" + step.curve.name + "' has the wrong genus");
      step.curve.validate();
      product = product * transvection(step.curve.homology_class, step.exponent);
      if (step.curve.pi1_payload && all_payloads) {
        const FreeGroupMap& p = *step.curve.pi1_payload;
        const FreeGroupMap base = step.exponent < 0 ? p.inverse() : p;
        for (Int k = 0; k < checked::abs(step.exponent); ++k) pi1_product = compose(pi1_product, base);
      } else {
        all_payloads = false;
      }
    }
    if (product != action_) throw InvariantViolation("twist word does not multiply out to the homological action");
    if (pi1_ && all_payloads && pi1_product.images() != pi1_->images())
      throw InvariantViolation("twist word does not multiply out to the pi_1 action");
  }
}

SurfaceMonodromy SurfaceMonodromy::identity(int genus) {
  return SurfaceMonodromy(Unchecked{}, genus, IntMatrix::identity(2 * genus), FreeGroupMap::identity(2 * genus),
                          TwistWord{});
}

SurfaceMonodromy SurfaceMonodromy::from_twist_word(int genus, const TwistWord& word) {
  SurfaceMonodromy m = identity(genus);
  for (const auto& step : word) {
    if (step.curve.genus != genus) throw RankMismatch("twist word curve '" + step.curve.name + "' has the wrong genus");
    m = compose_monodromy(m, twist_monodromy(step.curve, step.exponent));
  }
  return m;
}

SurfaceMonodromy twist_monodromy(const CurveSpec& c, Int m) {
  c.validate();
  std::optional<FreeGroupMap> pi1;
  if (c.pi1_payload) {
    const FreeGroupMap base = m < 0 ? c.pi1_payload->inverse() : *c.pi1_payload;
    FreeGroupMap acc = FreeGroupMap::identity(2 * c.genus);
    for (Int k = 0; k < checked::abs(m); ++k) acc = compose(acc, base);
    pi1 = std::move(acc);
  }
  return SurfaceMonodromy(c.genus, transvection(c.homology_class, m), std::move(pi1),
                          reduce_twist_word({TwistStep{c, m}}));
}

SurfaceMonodromy compose_monodromy(const SurfaceMonodromy& m1, const SurfaceMonodromy& m2) {
  if (m1.genus() != m2.genus())
    throw RankMismatch("composing monodromies of genus " + std::to_string(m1.genus()) + " and " +
                       std::to_string(m2.genus()));
  std::optional<FreeGroupMap> pi1;
  if (m1.pi1_action() && m2.pi1_action()) pi1 = compose(*m1.pi1_action(), *m2.pi1_action());
  std::optional<TwistWord> word;
  if (m1.twist_word() && m2.twist_word()) {
    TwistWord w = *m1.twist_word();
    w.insert(w.end(), m2.twist_word()->begin(), m2.twist_word()->end());
    word = reduce_twist_word(w);
  }
  return SurfaceMonodromy(SurfaceMonodromy::Unchecked{}, m1.genus(),
                          m1.homological_action() * m2.homological_action(), std::move(pi1), std::move(word));
}

namespace {

IntMatrix orientation_reversal(int genus) {
  std::vector<Int> d;
  for (int i = 0; i < genus; ++i) {
    d.push_back(1);
    d.push_back(-1);
  }
  return IntMatrix::diagonal(d);
}

// b_i -> b_i^{-1}; an involution.
FreeGroupMap orientation_reversal_pi1(int genus) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= 2 * genus; ++i) images.push_back(FreeWord::generator(2 * genus, i % 2 == 1 ? i : -i));
  return FreeGroupMap(images, images);
}

std::string toggle_mirror_name(const std::string& name) {
  if (name.size() > 3 && name.rfind("m(", 0) == 0 && name.back() == ')') return name.substr(2, name.size() - 3);
  return "m(" + name + ")";
}

}  // namespace

CurveSpec mirror_curve(const CurveSpec& c) {
  CurveSpec out = c;
  out.name = toggle_mirror_name(c.name);
  for (int i = 0; i < c.genus; ++i) out.homology_class[2 * i + 1] = checked::neg(c.homology_class[2 * i + 1]);
  if (c.pi1_payload) {
    // R tau_c R = tau_{Rc}^{-1}, so the mirrored curve carries (r tau_c r)^{-1}.
    const FreeGroupMap r = orientation_reversal_pi1(c.genus);
    out.pi1_payload = compose(r, compose(*c.pi1_payload, r)).inverse();
  }
  return out;
}

SurfaceMonodromy mirror(const SurfaceMonodromy& m) {
  const int g = m.genus();
  const IntMatrix r = orientation_reversal(g);
  std::optional<FreeGroupMap> pi1;
  if (m.pi1_action()) {
    const FreeGroupMap rp = orientation_reversal_pi1(g);
    pi1 = compose(rp, compose(*m.pi1_action(), rp));
  }
  std::optional<TwistWord> word;
  if (m.twist_word()) {
    TwistWord w;
    for (const auto& step : *m.twist_word()) w.push_back({mirror_curve(step.curve), checked::neg(step.exponent)});
    word = std::move(w);
  }
  return SurfaceMonodromy(g, r * m.homological_action() * r, std::move(pi1), std::move(word));
}

CurveSpec embed_curve(const CurveSpec& c, int total_genus, int handle_offset) {
  if (handle_offset < 0 || handle_offset + c.genus > total_genus) throw RankMismatch("curve embedding does not fit");
  CurveSpec out = c;
  out.genus = total_genus;
  out.homology_class.assign(static_cast<std::size_t>(2 * total_genus), 0);
  std::copy(c.homology_class.begin(), c.homology_class.end(), out.homology_class.begin() + 2 * handle_offset);
  if (c.pi1_payload) out.pi1_payload = c.pi1_payload->embed(2 * total_genus, 2 * handle_offset);
  return out;
}

SurfaceMonodromy boundary_connected_sum(const SurfaceMonodromy& m1, const SurfaceMonodromy& m2) {
  const int g = m1.genus() + m2.genus();
  std::optional<FreeGroupMap> pi1;
  if (m1.pi1_action() && m2.pi1_action())
    pi1 = compose(m1.pi1_action()->embed(2 * g, 0), m2.pi1_action()->embed(2 * g, 2 * m1.genus()));
  std::optional<TwistWord> word;
  if (m1.twist_word() && m2.twist_word()) {
    TwistWord w;
    for (const auto& s : *m1.twist_word()) w.push_back({embed_curve(s.curve, g, 0), s.exponent});
    for (const auto& s : *m2.twist_word()) w.push_back({embed_curve(s.curve, g, m1.genus()), s.exponent});
    word = std::move(w);
  }
  return SurfaceMonodromy(g, IntMatrix::block_diagonal(m1.homological_action(), m2.homological_action()),
                          std::move(pi1), std::move(word));
}

void BasisChange::validate() const {
  if (matrix.rows() != 2 * genus || matrix.cols() != 2 * genus) throw RankMismatch("basis change has the wrong size");
  if (!is_symplectic(matrix)) throw InvariantViolation("basis change is not symplectic");
  if (pi1.rank() != 2 * genus || !pi1.has_inverse()) throw InvariantViolation("basis change needs an invertible pi_1 map");
  if (abelianize(pi1) != matrix) throw InvariantViolation("basis change pi_1 map does not abelianize to its matrix");
}

CurveSpec transport(const CurveSpec& c, const BasisChange& change) {
  if (c.genus != change.genus) throw RankMismatch("transporting a curve across genera");
  CurveSpec out = c;
  out.homology_class = change.matrix.unimodular_inverse() * c.homology_class;
  if (c.pi1_payload) out.pi1_payload = compose(change.pi1.inverse(), compose(*c.pi1_payload, change.pi1));
  return out;
}

SurfaceMonodromy transport(const SurfaceMonodromy& m, const BasisChange& change) {
  if (m.genus() != change.genus) throw RankMismatch("transporting a monodromy across genera");
  const IntMatrix inv = change.matrix.unimodular_inverse();
  std::optional<FreeGroupMap> pi1;
  if (m.pi1_action()) pi1 = compose(change.pi1.inverse(), compose(*m.pi1_action(), change.pi1));
  std::optional<TwistWord> word;
  if (m.twist_word()) {
    TwistWord w;
    for (const auto& s : *m.twist_word()) w.push_back({transport(s.curve, change), s.exponent});
    word = std::move(w);
  }
  return SurfaceMonodromy(m.genus(), inv * m.homological_action() * change.matrix, std::move(pi1), std::move(word));
}

BasisChange half_spin_basis(int genus) {
  const int total = 2 * genus;
  const int n = 2 * total;
  auto a = [](int handle) { return 2 * handle - 1; };  // generator index of a_handle
  auto b = [](int handle) { return 2 * handle; };
  IntMatrix p(n, n);
  std::vector<FreeWord> fwd(static_cast<std::size_t>(n), FreeWord(n));
  std::vector<FreeWord> bwd(static_cast<std::size_t>(n), FreeWord(n));
  auto gen = [n](int index) { return FreeWord::generator(n, index); };
  for (int k = 1; k <= genus; ++k) {
    const int mk = genus + k;  // mirror handle
    const int odd = 2 * k - 1, even = 2 * k;
    // A_odd = a_k; B_odd = b_k + b'_k; A_even = -b'_k; B_even = -a_k + a'_k.
    p(a(k) - 1, a(odd) - 1) = 1;
    p(b(k) - 1, b(odd) - 1) = 1;
    p(b(mk) - 1, b(odd) - 1) = 1;
    p(b(mk) - 1, a(even) - 1) = -1;
    p(a(k) - 1, b(even) - 1) = -1;
    p(a(mk) - 1, b(even) - 1) = 1;
    fwd[a(odd) - 1] = gen(a(k));
    fwd[b(odd) - 1] = gen(b(k)) * gen(b(mk));
    fwd[a(even) - 1] = gen(-b(mk));
    fwd[b(even) - 1] = gen(-a(k)) * gen(a(mk));
    bwd[a(k) - 1] = gen(a(odd));
    bwd[b(mk) - 1] = gen(-a(even));
    bwd[b(k) - 1] = gen(b(odd)) * gen(a(even));
    bwd[a(mk) - 1] = gen(a(odd)) * gen(b(even));
  }
  BasisChange change{total, std::move(p), FreeGroupMap(std::move(fwd), std::move(bwd))};
  change.validate();
  return change;
}

IntMatrix standard_lagrangian(int genus) {
  IntMatrix l(genus, 2 * genus);
  for (int i = 0; i < genus; ++i) l(i, 2 * i + 1) = 1;
  return l;
}

IntMatrix standard_quotient(int genus) {
  IntMatrix q(genus, 2 * genus);
  for (int i = 0; i < genus; ++i) q(i, 2 * i) = 1;
  return q;
}

namespace {

bool all_unit_diagonal(const IntMatrix& m) {
  const auto d = smith_normal_form(m).diagonal();
  return std::all_of(d.begin(), d.end(), [](Int x) { return x == 1; });
}

// An identification Z^{2g} -> Z^g whose kernel is span(L), for primitive L.
IntMatrix derived_quotient(const IntMatrix& l) {
  const SmithForm s = smith_normal_form(l);
  const int g = l.rows();
  IntMatrix q(g, 2 * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < 2 * g; ++j) q(i, j) = s.v(j, g + i);
  return q;
}

}  // namespace

CgReport cg_compatibility(const IntMatrix& s, const IntMatrix& l, const IntMatrix& a,
                          const std::optional<IntMatrix>& identification) {
  if (!s.square() || s.rows() % 2 != 0) throw RankMismatch("S must be 2g x 2g");
  const int g = s.rows() / 2;
  if (l.rows() != g || l.cols() != 2 * g) throw RankMismatch("L must be g x 2g");
  if (a.rows() != g || a.cols() != g) throw RankMismatch("A must be g x g");
  if (!is_symplectic(s)) throw PreconditionError("S is not symplectic");

  CgReport report;
  const bool isotropic = (l * symplectic_form(g) * l.transpose()).is_zero();
  const bool primitive = all_unit_diagonal(l);
  if (!isotropic || !primitive) {
    report.detail = !isotropic ? "L is not isotropic" : "L is not a primitive rank-g summand";
    return report;
  }
  IntMatrix q;
  if (identification) {
    q = *identification;
  } else {
    q = l == standard_lagrangian(g) ? standard_quotient(g) : derived_quotient(l);
  }
  if (q.rows() != g || q.cols() != 2 * g) throw RankMismatch("identification must be g x 2g");
  if (!(q * l.transpose()).is_zero() || !all_unit_diagonal(q)) {
    report.detail = "identification does not have kernel span(L)";
    return report;
  }
  report.lagrangian = true;
  report.preserved = (q * s * l.transpose()).is_zero();
  if (!report.preserved) {
    report.detail = "S does not preserve span(L)";
    return report;
  }
  report.quotient_matches = q * s == a * q;
  if (!report.quotient_matches) report.detail = "induced quotient action differs from A";
  return report;
}

HandlebodyMonodromy::HandlebodyMonodromy(FreeGroupMap pi1_action, SurfaceMonodromy boundary)
    : pi1_(std::move(pi1_action)), boundary_(std::move(boundary)) {
  const int g = boundary_.genus();
  if (pi1_.rank() != g) throw RankMismatch("handlebody pi_1 action rank differs from boundary genus");
  if (!pi1_.has_inverse()) throw InvariantViolation("handlebody pi_1 action carries no inverse witness");
  const CgReport r = cg_compatibility(boundary_.homological_action(), standard_lagrangian(g), abelianize(pi1_));
  if (!r.ok()) throw InvariantViolation("boundary monodromy does not extend over the handlebody: " + r.detail);
}

HandlebodyMonodromy HandlebodyMonodromy::identity(int genus) {
  return HandlebodyMonodromy(FreeGroupMap::identity(genus), SurfaceMonodromy::identity(genus));
}

std::optional<bool> HandlebodyMonodromy::pi1_quotient_compatible() const {
  if (!boundary_.pi1_action()) return std::nullopt;
  const int g = genus();
  std::vector<FreeWord> q;
  for (int i = 1; i <= g; ++i) {
    q.push_back(FreeWord::generator(g, i));
    q.emplace_back(g);
  }
  for (int z = 1; z <= 2 * g; ++z) {
    const FreeWord lhs = substitute(boundary_.pi1_action()->image(z), q, g);
    const FreeWord rhs = pi1_.apply(substitute(FreeWord::generator(2 * g, z), q, g));
    if (lhs != rhs) return false;
  }
  return true;
}

CurveSpec half_spin_stallings_curve(int genus, const std::string& dual_to) {
  static const std::regex pattern("^([ab])([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(dual_to, m, pattern)) throw UnknownName("arc must be dual to a<k> or b<k>, got '" + dual_to + "'");
  const int k = std::stoi(m[2].str());
  if (k < 1 || k > genus) throw UnknownName("no handle " + std::to_string(k) + " on a genus-" + std::to_string(genus) + " fiber");
  std::vector<Int> cls(static_cast<std::size_t>(4 * genus), 0);
  const int mk = genus + k;
  if (m[1].str() == "b") {
    // arc crossing b_k: a_k - a'_k
    cls[2 * (k - 1)] = 1;
    cls[2 * (mk - 1)] = -1;
  } else {
    // arc crossing a_k: b_k + b'_k
    cls[2 * (k - 1) + 1] = 1;
    cls[2 * (mk - 1) + 1] = 1;
  }
  CurveFlags flags;
  flags.fiber_framing_zero = true;
  flags.unknotted_in_ambient = true;
  return make_curve("stallings(" + dual_to + ")", 2 * genus, std::move(cls), flags);
}

CurveSpec half_spin_disk_curve(int genus, const std::string& dual_to) {
  CurveSpec c = transport(half_spin_stallings_curve(genus, dual_to), half_spin_basis(genus));
  c.name = "disk(" + dual_to + ")";
  c.flags.bounds_disk_in_handlebody = true;
  c.validate();
  return c;
}

namespace {

SurfaceMonodromy word_monodromy(int genus, std::initializer_list<std::pair<const char*, Int>> steps) {
  TwistWord w;
  for (const auto& [name, e] : steps) w.push_back({standard_curve(genus, name), e});
  return SurfaceMonodromy::from_twist_word(genus, w);
}

SurfaceMonodromy trefoil_right() { return word_monodromy(1, {{"a1", 1}, {"b1", 1}}); }

}  // namespace

std::vector<std::string> curated_monodromy_names() {
  return {"unknot", "trefoil_R", "trefoil_L", "figure8", "square_knot", "granny_knot", "cinquefoil"};
}

std::vector<std::string> curated_curve_names() {
  return {"a1", "b1", "a1_g2", "b1_g2", "a2_g2", "b2_g2", "d1_g2",
          "square_knot_stallings_c1", "square_knot_stallings_c2", "halfspin_disk_c1", "halfspin_disk_c2"};
}

CuratedPayload curated_payload(const std::string& name) {
  if (name == "unknot") return SurfaceMonodromy::identity(0);
  if (name == "trefoil_R") return trefoil_right();
  if (name == "trefoil_L") return mirror(trefoil_right());
  if (name == "figure8") return word_monodromy(1, {{"a1", 1}, {"b1", -1}});
  if (name == "square_knot") return boundary_connected_sum(trefoil_right(), mirror(trefoil_right()));
  if (name == "granny_knot") return boundary_connected_sum(trefoil_right(), trefoil_right());
  if (name == "cinquefoil") return word_monodromy(2, {{"a1", 1}, {"b1", 1}, {"d1", 1}, {"b2", 1}});

  if (name == "square_knot_stallings_c1") return half_spin_stallings_curve(1, "b1");
  if (name == "square_knot_stallings_c2") return half_spin_stallings_curve(1, "a1");
  if (name == "halfspin_disk_c1") return half_spin_disk_curve(1, "b1");
  if (name == "halfspin_disk_c2") return half_spin_disk_curve(1, "a1");

  static const std::regex standard("^([abd][0-9]+)(?:_g([0-9]+))?$");
  std::smatch m;
  if (std::regex_match(name, m, standard)) {
    const std::string base = m[1].str();
    int genus = m[2].matched ? std::stoi(m[2].str()) : 0;
    if (!m[2].matched) {
      const int i = std::stoi(base.substr(1));
      genus = base[0] == 'd' ? i + 1 : i;
    }
    return standard_curve(genus, base);
  }
  throw UnknownName("unknown catalog entry '" + name + "'");
}

}  // namespace fibcalc

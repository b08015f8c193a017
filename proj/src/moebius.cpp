#include "picard/moebius.hpp"

#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace picard {

// === GroupWord ===

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const Letter& l : letters) append(l.gen, l.exp);
}

void GroupWord::append(int gen, int exp) {
  if (gen < 0) throw std::invalid_argument("GroupWord: negative generator index");
  if (exp != 1 && exp != -1) throw std::invalid_argument("GroupWord: exponent must be +1 or -1");
  if (!letters_.empty() && letters_.back().gen == gen && letters_.back().exp == -exp) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(Letter{gen, exp});
}

void GroupWord::append(const GroupWord& w) {
  for (const Letter& l : w.letters_) append(l.gen, l.exp);
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(Letter{it->gen, -it->exp});
  return r;
}

GroupWord GroupWord::pow(int e) const {
  GroupWord base = e < 0 ? inverse() : *this;
  int n = e < 0 ? -e : e;
  GroupWord r;
  for (int k = 0; k < n; ++k) r.append(base);
  return r;
}

int GroupWord::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_)
    if (l.gen > m) m = l.gen;
  return m;
}

std::string GroupWord::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << " ";
    first = false;
    if (l.gen < static_cast<int>(names.size()))
      os << names[l.gen];
    else
      os << "x" << l.gen;
    if (l.exp == -1) os << "^-1";
  }
  return os.str();
}

// === MoebiusElement ===

namespace {

GaussianInteger det_of(const std::array<GaussianInteger, 4>& e) {
  return e[0] * e[3] - e[1] * e[2];
}

}  // namespace

MoebiusElement::MoebiusElement(std::array<GaussianInteger, 4> entries) : e_(std::move(entries)) {
  det_ = det_of(e_);
  if (det_.norm() != 1)
    throw std::invalid_argument("MoebiusElement: determinant " + det_.str() + " is not a unit");
  // scale so the first nonzero entry is a canonical associate
  for (const GaussianInteger& z : e_) {
    if (!z.is_zero()) {
      GaussianInteger u = canonical_unit(z);
      if (!(u == GaussianInteger(1, 0)))
        for (GaussianInteger& w : e_) w = u * w;
      break;
    }
  }
  det_ = det_of(e_);
}

MoebiusElement MoebiusElement::identity() {
  return MoebiusElement(GaussianInteger(1, 0), GaussianInteger(0, 0), GaussianInteger(0, 0),
                        GaussianInteger(1, 0));
}

bool MoebiusElement::is_identity() const {
  return e_[0] == GaussianInteger(1, 0) && e_[1].is_zero() && e_[2].is_zero() &&
         e_[3] == GaussianInteger(1, 0);
}

MoebiusElement MoebiusElement::inverse() const {
  // det is a unit, so inv(det) = conj(det) and adj(M)*conj(det) is integral
  GaussianInteger d = det_.conj();
  return MoebiusElement(d * e_[3], d * (-e_[1]), d * (-e_[2]), d * e_[0]);
}

MoebiusElement operator*(const MoebiusElement& a, const MoebiusElement& b) {
  return MoebiusElement(a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
                        a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]);
}

bool operator<(const MoebiusElement& a, const MoebiusElement& b) {
  for (int k = 0; k < 4; ++k) {
    if (a.e_[k] != b.e_[k]) return a.e_[k] < b.e_[k];
  }
  return false;
}

std::string MoebiusElement::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MoebiusElement& g) {
  os << "[[" << g.entry(0, 0) << ", " << g.entry(0, 1) << "], [" << g.entry(1, 0) << ", "
     << g.entry(1, 1) << "]]";
  return os;
}

TraceClass::TraceClass(const GaussianInteger& t) : value(t) {
  if (value.re < 0 || (value.re == 0 && value.im < 0)) value = -value;
}

TraceClass trace_class(const MoebiusElement& g) {
  if (!g.in_psl())
    throw std::domain_error("trace_class: element is not in PSL(2, Z[i])");
  // scale the representative to determinant +1 before reading the trace
  GaussianInteger tr = g.entry(0, 0) + g.entry(1, 1);
  if (g.det_unit() == GaussianInteger(-1, 0)) tr = GaussianInteger(0, 1) * tr;
  return TraceClass(tr);
}

bool is_parabolic(const MoebiusElement& g) {
  return trace_class(g) == TraceClass(GaussianInteger(2, 0)) && !g.is_identity();
}

bool in_principal_congruence(const MoebiusElement& g, const GaussianIdeal& ideal) {
  if (!g.in_psl())
    throw std::domain_error("in_principal_congruence: element is not in PSL(2, Z[i])");
  const GaussianInteger one(1, 0);
  const GaussianInteger units[4] = {
      GaussianInteger(1, 0), GaussianInteger(-1, 0), GaussianInteger(0, 1), GaussianInteger(0, -1)};
  for (const auto& u : units) {
    if (congruent_mod(u * g.entry(0, 0), one, ideal) && congruent_mod(u * g.entry(0, 1), {}, ideal) &&
        congruent_mod(u * g.entry(1, 0), {}, ideal) && congruent_mod(u * g.entry(1, 1), one, ideal))
      return true;
  }
  return false;
}

MoebiusElement evaluate_word(const std::vector<MoebiusElement>& generators, const GroupWord& w) {
  MoebiusElement acc = MoebiusElement::identity();
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(generators.size()))
      throw std::out_of_range("evaluate_word: letter indexes generator " + std::to_string(l.gen) +
                              " but only " + std::to_string(generators.size()) + " provided");
    acc = acc * (l.exp == 1 ? generators[l.gen] : generators[l.gen].inverse());
  }
  return acc;
}

// === Picard group constants ===

MoebiusElement picard_alpha() {
  return MoebiusElement(GaussianInteger(0, 0), GaussianInteger(1, 0), GaussianInteger(-1, 0),
                        GaussianInteger(0, 0));
}

MoebiusElement picard_l() {
  return MoebiusElement(GaussianInteger(0, 1), GaussianInteger(0, 0), GaussianInteger(0, 0),
                        GaussianInteger(0, -1));
}

MoebiusElement picard_t() {
  return MoebiusElement(GaussianInteger(1, 0), GaussianInteger(1, 0), GaussianInteger(0, 0),
                        GaussianInteger(1, 0));
}

MoebiusElement picard_u() {
  return MoebiusElement(GaussianInteger(1, 0), GaussianInteger(0, 1), GaussianInteger(0, 0),
                        GaussianInteger(1, 0));
}

const std::array<MoebiusElement, 6>& transport_reps() {
  static const std::array<MoebiusElement, 6> reps = {
      MoebiusElement::identity(),
      MoebiusElement(GaussianInteger(0, 0), GaussianInteger(1, 0), GaussianInteger(-1, 0),
                     GaussianInteger(0, 0)),
      MoebiusElement(GaussianInteger(1, 0), GaussianInteger(-1, 0), GaussianInteger(0, 0),
                     GaussianInteger(1, 0)),
      MoebiusElement(GaussianInteger(1, 0), GaussianInteger(0, 0), GaussianInteger(-1, 0),
                     GaussianInteger(1, 0)),
      MoebiusElement(GaussianInteger(1, 0), GaussianInteger(1, 0), GaussianInteger(-1, 0),
                     GaussianInteger(0, 0)),
      MoebiusElement(GaussianInteger(0, 0), GaussianInteger(-1, 0), GaussianInteger(1, 0),
                     GaussianInteger(1, 0)),
  };
  return reps;
}

// === CongruenceQuotient ===

namespace {

// Canonical residues mod the Z-lattice spanned by g and i*g, via the Hermite
// form [[s, 0], [k, t]] of that lattice: representatives satisfy
// 0 <= re < s, 0 <= im < t.
class ResidueRing {
 public:
  explicit ResidueRing(const GaussianInteger& g) {
    // lattice rows: (g.re, g.im) and (-g.im, g.re)
    BigInt a = g.re, b = g.im, c = -g.im, d = g.re;
    // second column gcd via extended Euclid: t = x*b + y*d
    BigInt x, y;
    BigInt t = ext_gcd(b, d, x, y);
    if (t == 0) {
      // g is real: lattice is diagonal already
      k_ = 0;
      t_ = abs_int(d);
      s_ = abs_int(a);
    } else {
      k_ = x * a + y * c;
      t_ = t;
      // combinations with zero second coordinate
      BigInt r1 = a - (b / t) * k_;
      BigInt r2 = c - (d / t) * k_;
      s_ = boost::multiprecision::gcd(abs_int(r1), abs_int(r2));
      k_ = ((k_ % s_) + s_) % s_;
    }
    if (s_ == 0 || t_ == 0) throw std::invalid_argument("ResidueRing: degenerate lattice");
  }

  GaussianInteger reduce(const GaussianInteger& z) const {
    BigInt re = z.re, im = z.im;
    BigInt q = floor_div(im, t_);
    re -= q * k_;
    im -= q * t_;
    re -= floor_div(re, s_) * s_;
    return {re, im};
  }

 private:
  static BigInt ext_gcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
    if (a < 0 || b < 0) {
      BigInt sa = a < 0 ? -1 : 1, sb = b < 0 ? -1 : 1;
      BigInt g = ext_gcd(abs_int(a), abs_int(b), x, y);
      x *= sa;
      y *= sb;
      return g;
    }
    if (b == 0) {
      x = 1;
      y = 0;
      return a;
    }
    BigInt x1, y1;
    BigInt g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
  }

  BigInt s_, t_, k_;
};

using ResidueKey = std::array<BigInt, 8>;

}  // namespace

struct CongruenceQuotient::Impl {
  ResidueRing ring;
  std::size_t cap;
  std::vector<ResidueKey> elements;       // element id -> key
  std::map<ResidueKey, std::size_t> ids;  // key -> element id
  std::vector<std::size_t> inverse;       // element id -> id of inverse

  explicit Impl(const GaussianIdeal& ideal, std::size_t max_order)
      : ring(ideal.generator), cap(max_order) {}

  // Key of the image of g: reduce a determinant-one representative mod the
  // ideal and normalize the sign.
  ResidueKey key_of(const MoebiusElement& g) const {
    std::array<GaussianInteger, 4> m = g.entries();
    if (g.det_unit() == GaussianInteger(-1, 0))
      for (auto& z : m) z = GaussianInteger(0, 1) * z;  // now det = +1
    std::array<GaussianInteger, 4> r, rneg;
    for (int k = 0; k < 4; ++k) {
      r[k] = ring.reduce(m[k]);
      rneg[k] = ring.reduce(-m[k]);
    }
    auto pack = [](const std::array<GaussianInteger, 4>& v) {
      return ResidueKey{v[0].re, v[0].im, v[1].re, v[1].im, v[2].re, v[2].im, v[3].re, v[3].im};
    };
    ResidueKey a = pack(r), b = pack(rneg);
    return a < b ? a : b;
  }

  ResidueKey mul(const ResidueKey& a, const ResidueKey& b) const {
    auto unpack = [](const ResidueKey& k) {
      return std::array<GaussianInteger, 4>{
          GaussianInteger(k[0], k[1]), GaussianInteger(k[2], k[3]), GaussianInteger(k[4], k[5]),
          GaussianInteger(k[6], k[7])};
    };
    auto x = unpack(a), y = unpack(b);
    std::array<GaussianInteger, 4> p = {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                        x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    std::array<GaussianInteger, 4> r, rneg;
    for (int k = 0; k < 4; ++k) {
      r[k] = ring.reduce(p[k]);
      rneg[k] = ring.reduce(-p[k]);
    }
    auto pack = [](const std::array<GaussianInteger, 4>& v) {
      return ResidueKey{v[0].re, v[0].im, v[1].re, v[1].im, v[2].re, v[2].im, v[3].re, v[3].im};
    };
    ResidueKey ra = pack(r), rb = pack(rneg);
    return ra < rb ? ra : rb;
  }

  // Closure of seeds under right multiplication by the images of mults.
  std::set<ResidueKey> close(const std::vector<ResidueKey>& seeds,
                             const std::vector<ResidueKey>& mults) const {
    std::set<ResidueKey> seen;
    std::deque<ResidueKey> frontier;
    for (const auto& s : seeds)
      if (seen.insert(s).second) frontier.push_back(s);
    while (!frontier.empty()) {
      ResidueKey cur = frontier.front();
      frontier.pop_front();
      for (const auto& m : mults) {
        ResidueKey nxt = mul(cur, m);
        if (seen.insert(nxt).second) {
          if (seen.size() > cap) throw std::runtime_error("congruence quotient exceeds cap");
          frontier.push_back(nxt);
        }
      }
    }
    return seen;
  }

  void build() {
    ResidueKey id = key_of(MoebiusElement::identity());
    std::vector<ResidueKey> gens = {key_of(picard_alpha()), key_of(picard_l()), key_of(picard_t()),
                                    key_of(picard_u())};
    std::set<ResidueKey> all = close({id}, gens);
    elements.assign(all.begin(), all.end());
    for (std::size_t k = 0; k < elements.size(); ++k) ids[elements[k]] = k;
    // inverse table: brute force is fine at this size
    inverse.assign(elements.size(), 0);
    std::vector<bool> found(elements.size(), false);
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (found[k]) continue;
      for (std::size_t j = k; j < elements.size(); ++j) {
        if (mul(elements[k], elements[j]) == id) {
          inverse[k] = j;
          inverse[j] = k;
          found[k] = found[j] = true;
          break;
        }
      }
      if (!found[k]) throw std::logic_error("congruence quotient: inverse not found");
    }
  }

  std::set<ResidueKey> subgroup(const std::vector<MoebiusElement>& gens, bool normal_closure) const {
    ResidueKey id = key_of(MoebiusElement::identity());
    std::vector<ResidueKey> imgs;
    for (const auto& g : gens) {
      if (!g.in_psl())
        throw std::domain_error("congruence quotient: generator is not in PSL(2, Z[i])");
      imgs.push_back(key_of(g));
    }
    std::set<ResidueKey> sub =
        imgs.empty() ? std::set<ResidueKey>{id} : close({id}, imgs);
    if (!normal_closure) return sub;
    // grow the generating set with missing conjugates until stable
    std::vector<ResidueKey> conjugators = {key_of(picard_alpha()), key_of(picard_l()),
                                           key_of(picard_t()), key_of(picard_u())};
    {
      std::vector<ResidueKey> invs;
      for (const auto& c : conjugators) invs.push_back(elements[inverse.at(ids.at(c))]);
      conjugators.insert(conjugators.end(), invs.begin(), invs.end());
    }
    std::vector<ResidueKey> sgens = imgs;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& s : sub) {
        for (const auto& c : conjugators) {
          ResidueKey cinv = elements[inverse.at(ids.at(c))];
          ResidueKey t = mul(mul(c, s), cinv);
          if (!sub.count(t)) {
            sgens.push_back(t);
            grew = true;
          }
        }
      }
      if (grew) sub = close({id}, sgens);
    }
    return sub;
  }
};

CongruenceQuotient::CongruenceQuotient(const GaussianIdeal& ideal, std::size_t max_order)
    : impl_(std::make_unique<Impl>(ideal, max_order)) {
  impl_->build();
}

CongruenceQuotient::~CongruenceQuotient() = default;
CongruenceQuotient::CongruenceQuotient(CongruenceQuotient&&) noexcept = default;

std::size_t CongruenceQuotient::order() const { return impl_->elements.size(); }

std::size_t CongruenceQuotient::subgroup_order(const std::vector<MoebiusElement>& gens,
                                               bool normal_closure) const {
  return impl_->subgroup(gens, normal_closure).size();
}

bool CongruenceQuotient::element_normalizes_subgroup(const MoebiusElement& h,
                                                     const std::vector<MoebiusElement>& gens) const {
  auto sub = impl_->subgroup(gens, false);
  ResidueKey hk = impl_->key_of(h);
  ResidueKey hk_inv = impl_->elements[impl_->inverse.at(impl_->ids.at(hk))];
  for (const auto& s : sub) {
    if (!sub.count(impl_->mul(impl_->mul(hk, s), hk_inv))) return false;
  }
  return true;
}

std::size_t congruence_quotient_index(const std::vector<MoebiusElement>& gens,
                                      const GaussianIdeal& ideal, bool normal_closure,
                                      std::size_t max_order) {
  CongruenceQuotient q(ideal, max_order);
  std::size_t sub = q.subgroup_order(gens, normal_closure);
  if (q.order() % sub != 0)
    throw std::logic_error("congruence_quotient_index: subgroup order does not divide group order");
  return q.order() / sub;
}

}  // namespace picard

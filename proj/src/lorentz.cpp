#include "picard/lorentz.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace picard {

LorentzMatrix LorentzMatrix::identity() {
  LorentzMatrix m;
  for (int k = 0; k < 4; ++k) m.entry(k, k) = 1;
  return m;
}

LorentzMatrix LorentzMatrix::transpose() const {
  LorentzMatrix t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t.entry(i, j) = entry(j, i);
  return t;
}

LorentzMatrix operator*(const LorentzMatrix& x, const LorentzMatrix& y) {
  LorentzMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      BigInt s = 0;
      for (int k = 0; k < 4; ++k) s += x.entry(i, k) * y.entry(k, j);
      r.entry(i, j) = s;
    }
  return r;
}

std::string LorentzMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LorentzMatrix& m) {
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << m.entry(i, j);
    os << "]";
  }
  return os << "]";
}

bool is_lorentz_plus(const LorentzMatrix& m) {
  // J = diag(1,1,1,-1); check m^T J m == J
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      BigInt s = 0;
      for (int k = 0; k < 4; ++k) {
        BigInt term = m.entry(k, i) * m.entry(k, j);
        s += k == 3 ? -term : term;
      }
      BigInt want = i != j ? 0 : (i == 3 ? -1 : 1);
      if (s != want) return false;
    }
  }
  return m.entry(3, 3) >= 1;
}

const std::array<LorentzMatrix, 4>& coxeter_generators() {
  auto mk = [](std::initializer_list<int> v) {
    std::array<BigInt, 16> e;
    int k = 0;
    for (int x : v) e[k++] = x;
    return LorentzMatrix(e);
  };
  static const std::array<LorentzMatrix, 4> gens = {
      mk({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
      mk({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}),
      mk({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1}),
      mk({0, -1, -1, 1, -1, 0, -1, 1, -1, -1, 0, 1, -1, -1, -1, 2}),
  };
  return gens;
}

namespace {

// r_1..r_6 as words over the Coxeter letters a..d = 0..3
const std::vector<int>& reflection_coxeter_word(int i) {
  static const std::vector<int> words[6] = {
      {0, 1, 2, 1, 0},           // r1 = abcba
      {1, 2, 1},                 // r2 = bcb
      {2},                       // r3 = c
      {0, 1, 3, 2, 3, 1, 0},     // r4 = abdcdba
      {1, 3, 2, 3, 1},           // r5 = bdcdb
      {3, 2, 3},                 // r6 = dcd
  };
  if (i < 1 || i > 6) throw std::out_of_range("reflection index must be 1..6");
  return words[i - 1];
}

LorentzMatrix evaluate_coxeter_word(const std::vector<int>& letters) {
  LorentzMatrix m = LorentzMatrix::identity();
  for (int l : letters) {
    if (l < 0 || l > 3) throw std::out_of_range("Coxeter letter must be 0..3");
    m = m * coxeter_generators()[l];
  }
  return m;
}

}  // namespace

const std::array<LorentzMatrix, 6>& level_two_reflections() {
  static const std::array<LorentzMatrix, 6> refs = [] {
    std::array<LorentzMatrix, 6> r;
    for (int i = 1; i <= 6; ++i) r[i - 1] = evaluate_coxeter_word(reflection_coxeter_word(i));
    return r;
  }();
  return refs;
}

ReflectionWord::ReflectionWord(std::vector<int> letters) {
  for (int l : letters) {
    if (l < 1 || l > 6)
      throw std::invalid_argument("ReflectionWord: letter " + std::to_string(l) + " not in 1..6");
    if (!letters_.empty() && letters_.back() == l)
      letters_.pop_back();  // r_i r_i = 1
    else
      letters_.push_back(l);
  }
}

std::string ReflectionWord::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? " " : "") << "r" << letters_[k];
  return os.str();
}

LorentzMatrix evaluate_reflection_word(const ReflectionWord& w) {
  LorentzMatrix m = LorentzMatrix::identity();
  for (int l : w.letters()) m = m * level_two_reflections()[l - 1];
  return m;
}

bool in_level_two(const LorentzMatrix& m) {
  if (!is_lorentz_plus(m))
    throw std::domain_error("in_level_two: matrix is not in O+(3,1;Z)");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      BigInt want = i == j ? 1 : 0;
      if ((m.entry(i, j) - want) % 2 != 0) return false;
    }
  return true;
}

MoebiusElement coxeter_pair_image(int j) {
  switch (j) {
    case 1:  // ab
      return MoebiusElement(GaussianInteger(1, 0), GaussianInteger(-1, 0), GaussianInteger(1, 0),
                            GaussianInteger(0, 0));
    case 2:  // ac
      return MoebiusElement(GaussianInteger(0, 0), GaussianInteger(1, 0), GaussianInteger(0, -1),
                            GaussianInteger(0, 0));
    case 3:  // ad
      return MoebiusElement(GaussianInteger(0, 0), GaussianInteger(1, 0), GaussianInteger(1, 0),
                            GaussianInteger(0, 0));
    default:
      throw std::out_of_range("coxeter_pair_image: index must be 1..3");
  }
}

MoebiusElement r1rj_image(int j) {
  switch (j) {
    case 1:
      return MoebiusElement::identity();
    case 2:
      return MoebiusElement(GaussianInteger(-1, 0), GaussianInteger(1, 1), GaussianInteger(-1, 1),
                            GaussianInteger(1, 0));
    case 3:
      return MoebiusElement(GaussianInteger(0, -1), GaussianInteger(-1, 1), GaussianInteger(0, 0),
                            GaussianInteger(0, 1));
    case 4:
      return MoebiusElement(GaussianInteger(0, -1), GaussianInteger(0, 2), GaussianInteger(0, 0),
                            GaussianInteger(0, 1));
    case 5:
      return MoebiusElement(GaussianInteger(2, -1), GaussianInteger(-1, 1), GaussianInteger(1, -1),
                            GaussianInteger(0, 1));
    case 6:
      return MoebiusElement(GaussianInteger(1, 0), GaussianInteger(1, 1), GaussianInteger(0, 0),
                            GaussianInteger(1, 0));
    default:
      throw std::out_of_range("r1rj_image: index must be 1..6");
  }
}

MoebiusElement transport_to_psl(const ReflectionWord& w) {
  const auto& letters = w.letters();
  if (letters.size() % 2 != 0)
    throw std::invalid_argument("transport_to_psl: word has odd reduced length (not orientation-preserving)");
  MoebiusElement acc = MoebiusElement::identity();
  for (std::size_t k = 0; k < letters.size(); k += 2) {
    // r_i r_j = (r_1 r_i)^{-1} (r_1 r_j) since the r's are involutions
    acc = acc * r1rj_image(letters[k]).inverse() * r1rj_image(letters[k + 1]);
  }
  return acc;
}

MoebiusElement even_coxeter_transport(const std::vector<int>& letters) {
  // reduce with respect to x x = 1
  std::vector<int> red;
  for (int l : letters) {
    if (l < 0 || l > 3) throw std::out_of_range("even_coxeter_transport: letter must be 0..3");
    if (!red.empty() && red.back() == l)
      red.pop_back();
    else
      red.push_back(l);
  }
  if (red.size() % 2 != 0)
    throw std::invalid_argument("even_coxeter_transport: word has odd reduced length");
  auto image_a_then = [](int x) {
    // image of the pair a x, with a a = 1
    return x == 0 ? MoebiusElement::identity() : coxeter_pair_image(x);
  };
  MoebiusElement acc = MoebiusElement::identity();
  for (std::size_t k = 0; k < red.size(); k += 2) {
    // x y = (a x)^{-1} (a y) since the letters are involutions
    acc = acc * image_a_then(red[k]).inverse() * image_a_then(red[k + 1]);
  }
  return acc;
}

std::vector<int> r1rj_coxeter_word(int j) {
  std::vector<int> w = reflection_coxeter_word(1);
  const auto& rj = reflection_coxeter_word(j);
  w.insert(w.end(), rj.begin(), rj.end());
  return w;
}

}  // namespace picard

// Brute-force reducibility of unramified principal series, written from the
// definitions with nothing taken from the engine.
//
// Lattice: the coroot lattice with basis a_1^vee..a_r^vee. A character lam
// is given by its values on that basis, q^{q_i} exp(2 pi i t_i). Cartan
// entries use cartan[i][j] = <a_j, a_i^vee>, Bourbaki numbering, and a short
// second simple root in G2 (the same labelling the engine reads).
//
// Irreducible iff no coroot c has lam(c) = q^{+-1}, and the stabilizer W_lam
// is generated by the reflections s_c with lam(c) = 1.

#ifndef RELWEYL_TESTS_MULLER_BRUTEFORCE_HPP_
#define RELWEYL_TESTS_MULLER_BRUTEFORCE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mat = std::vector<std::vector<long>>;
using Vec = std::vector<long>;

inline Mat cartan_matrix(char family, int rank) {
  Mat c(rank, Vec(rank, 0));
  for (int i = 0; i < rank; ++i)
    c[i][i] = 2;
  auto edge = [&](int i, int j, long cij, long cji) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (family) {
  case 'A':
    for (int i = 0; i + 1 < rank; ++i)
      edge(i, i + 1, -1, -1);
    break;
  case 'B': // a_n short
    for (int i = 0; i + 1 < rank; ++i)
      edge(i, i + 1, -1, -1);
    c[rank - 1][rank - 2] = -2;
    break;
  case 'C': // a_n long
    for (int i = 0; i + 1 < rank; ++i)
      edge(i, i + 1, -1, -1);
    c[rank - 2][rank - 1] = -2;
    break;
  case 'G': // a_2 short: <a_1, a_2^vee> = -3
    edge(0, 1, -1, -3);
    break;
  default:
    throw std::invalid_argument("oracle covers A, B, C, G only");
  }
  return c;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Vec act(const Mat& a, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] += a[i][j] * v[j];
  return out;
}

// Closure of a generating set of matrices under multiplication.
inline std::set<Mat> generate(const std::vector<Mat>& gens, std::size_t n) {
  Mat one(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    one[i][i] = 1;
  std::set<Mat> seen{one};
  std::vector<Mat> todo{one};
  while (!todo.empty()) {
    Mat x = todo.back();
    todo.pop_back();
    for (const Mat& g : gens) {
      Mat y = multiply(x, g);
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return seen;
}

struct Character {
  std::vector<mpq_class> q; // exponents on a_i^vee
  std::vector<mpq_class> t; // phases on a_i^vee
};

struct Value {
  mpq_class q;
  mpq_class t; // in [0, 1)
  bool trivial() const { return q == 0 && t == 0; }
  bool wall() const { return t == 0 && (q == 1 || q == -1); }
  bool operator==(const Value& o) const { return q == o.q && t == o.t; }
};

inline mpq_class frac(mpq_class x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - mpq_class(f);
}

inline Value evaluate(const Character& lam, const Vec& cochar) {
  Value v{0, 0};
  for (std::size_t i = 0; i < cochar.size(); ++i) {
    v.q += lam.q[i] * cochar[i];
    v.t += lam.t[i] * cochar[i];
  }
  v.t = frac(v.t);
  return v;
}

struct Verdict {
  bool reducible = false;
  bool wall = false;
  std::size_t w_order = 0;
  std::size_t stab_order = 0;
  std::size_t stab0_order = 0;
  std::size_t r_order() const { return stab_order / stab0_order; }
};

class Evaluator {
public:
  Evaluator(char family, int rank) : n_(std::size_t(rank)) {
    Mat c = cartan_matrix(family, rank);
    // s_i on cocharacters: u -> u - <a_i, u> a_i^vee, <a_i, a_j^vee> = c[j][i].
    for (std::size_t i = 0; i < n_; ++i) {
      Mat s(n_, Vec(n_, 0));
      for (std::size_t k = 0; k < n_; ++k)
        s[k][k] = 1;
      for (std::size_t j = 0; j < n_; ++j)
        s[i][j] -= c[j][i];
      simple_.push_back(s);
    }
    group_ = generate(simple_, n_);
    // Coroots with their reflections: c = w a_i^vee, s_c = w s_i w^{-1}.
    for (const Mat& w : group_) {
      Mat winv = inverse(w);
      for (std::size_t i = 0; i < n_; ++i) {
        Vec e(n_, 0);
        e[i] = 1;
        Vec cr = act(w, e);
        if (!reflection_.count(cr))
          reflection_[cr] = multiply(multiply(w, simple_[i]), winv);
      }
    }
  }

  std::size_t order() const { return group_.size(); }
  std::size_t num_coroots() const { return reflection_.size(); }

  Verdict decide(const Character& lam) const {
    Verdict v;
    v.w_order = group_.size();
    std::vector<Mat> gens0;
    for (const auto& [cr, s] : reflection_) {
      Value x = evaluate(lam, cr);
      if (x.wall())
        v.wall = true;
      if (x.trivial())
        gens0.push_back(s);
    }
    std::vector<Value> base;
    for (std::size_t i = 0; i < n_; ++i) {
      Vec e(n_, 0);
      e[i] = 1;
      base.push_back(evaluate(lam, e));
    }
    for (const Mat& w : group_) {
      bool fixes = true;
      for (std::size_t i = 0; i < n_ && fixes; ++i) {
        Vec e(n_, 0);
        e[i] = 1;
        fixes = evaluate(lam, act(w, e)) == base[i];
      }
      v.stab_order += fixes;
    }
    v.stab0_order = generate(gens0, n_).size();
    v.reducible = v.wall || v.stab_order != v.stab0_order;
    return v;
  }

private:
  Mat inverse(const Mat& w) const {
    // Finite order: w^{-1} = w^{k-1}.
    Mat p = w, prev = w;
    Mat one(n_, Vec(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      one[i][i] = 1;
    while (p != one) {
      prev = p;
      p = multiply(p, w);
    }
    return prev;
  }

  std::size_t n_;
  std::vector<Mat> simple_;
  std::set<Mat> group_;
  std::map<Vec, Mat> reflection_;
};

} // namespace oracle

#endif // RELWEYL_TESTS_MULLER_BRUTEFORCE_HPP_

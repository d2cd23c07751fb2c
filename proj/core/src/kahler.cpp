#include "holonomy/kahler.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "holonomy/characters.hpp"
#include "holonomy/error.hpp"
#include "holonomy/modp.hpp"

namespace holo {

CycMatrix cyc_mat_zero(const CycField& f, std::size_t rows, std::size_t cols) {
  CycMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(rows * cols, CycRat(f.degree));
  return m;
}

CycMatrix cyc_mat_identity(const CycField& f, std::size_t n) {
  CycMatrix m = cyc_mat_zero(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i)[0] = 1;
  return m;
}

CycMatrix cyc_mat_mul(const CycField& f, const CycMatrix& a,
                      const CycMatrix& b) {
  check(a.cols == b.rows, ErrorKind::validation, "matrix shape mismatch");
  CycMatrix c = cyc_mat_zero(f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (cycr_is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) =
            cycr_add(c.at(i, j), cycr_mul(f, a.at(i, k), b.at(k, j)));
    }
  return c;
}

bool cyc_mat_eq(const CycMatrix& a, const CycMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

CycRat cyc_mat_trace(const CycField& f, const CycMatrix& a) {
  check(a.rows == a.cols, ErrorKind::validation, "trace of non-square matrix");
  CycRat t(f.degree);
  for (std::size_t i = 0; i < a.rows; ++i) t = cycr_add(t, a.at(i, i));
  return t;
}

ComplexAffine complex_affine_mul(const CycField& f, const ComplexAffine& x,
                                 const ComplexAffine& y) {
  ComplexAffine z;
  z.linear = cyc_mat_mul(f, x.linear, y.linear);
  z.translation = x.translation;
  for (std::size_t i = 0; i < z.translation.size(); ++i) {
    CycRat acc = z.translation[i];
    for (std::size_t j = 0; j < y.translation.size(); ++j)
      acc = cycr_add(acc, cycr_mul(f, x.linear.at(i, j), y.translation[j]));
    z.translation[i] = acc;
  }
  return z;
}

std::pair<Rat, Rat> cyc_real_imag(const CycField& f, const CycRat& z) {
  CycRat zbar = cycr_conj(f, z);
  CycRat re = cycr_scale(Rat(1, 2), cycr_add(z, zbar));
  check(cycr_is_rational(re), ErrorKind::validation,
        "entry has irrational real part");
  CycRat w = cycr_sub(z, re);  // pure imaginary remainder
  if (cycr_is_zero(w)) return {re[0], Rat(0)};
  check(f.order % 4 == 0, ErrorKind::validation,
        "field has no square root of -1; entry is not Gaussian rational");
  CycRat iota = cycr_from_int(cyc_root_power(f, f.order / 4));
  std::size_t j = 0;
  while (j < iota.size() && iota[j] == 0) ++j;
  check_internal(j < iota.size(), "zero root of unity");
  Rat b = w[j] / iota[j];
  check(w == cycr_scale(b, iota), ErrorKind::validation,
        "entry has irrational imaginary part");
  return {re[0], b};
}

RatMatrix realify_matrix(const CycField& f, const CycMatrix& a) {
  std::size_t n = a.rows;
  check(a.cols == n, ErrorKind::validation, "realify needs a square matrix");
  RatMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [re, im] = cyc_real_imag(f, a.at(i, j));
      m.at(i, j) = re;
      m.at(i, j + n) = -im;
      m.at(i + n, j) = im;
      m.at(i + n, j + n) = re;
    }
  return m;
}

AffinePair realify_affine(const CycField& f, const ComplexAffine& x) {
  std::size_t n = x.translation.size();
  check(x.linear.rows == n && x.linear.cols == n, ErrorKind::validation,
        "affine pair shape mismatch");
  AffinePair out;
  out.linear = realify_matrix(f, x.linear);
  out.translation.assign(2 * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    auto [re, im] = cyc_real_imag(f, x.translation[i]);
    out.translation[i] = re;
    out.translation[i + n] = im;
  }
  return out;
}

ComplexRep complex_rep(GroupPtr g, const CycField& f, std::size_t degree,
                       const std::vector<CycMatrix>& gen_images) {
  check(gen_images.size() == g->generators().size(), ErrorKind::validation,
        "one matrix per distinguished generator expected");
  for (const CycMatrix& m : gen_images)
    check(m.rows == degree && m.cols == degree, ErrorKind::validation,
          "generator image has the wrong shape");

  std::size_t n = g->order();
  std::vector<CycMatrix> mats(n);
  std::vector<bool> have(n, false);
  mats[0] = cyc_mat_identity(f, degree);
  have[0] = true;
  // Breadth-first extension along the Cayley table.
  for (std::size_t a = 0; a < n; ++a) {
    check_internal(have[a], "group enumeration is not generator-connected");
    for (std::size_t j = 0; j < gen_images.size(); ++j) {
      int b = g->mul(static_cast<int>(a), g->generators()[j]);
      CycMatrix prod = cyc_mat_mul(f, mats[a], gen_images[j]);
      if (!have[b]) {
        mats[b] = std::move(prod);
        have[b] = true;
      } else {
        check(cyc_mat_eq(mats[b], prod), ErrorKind::validation,
              "generator assignment does not respect the relations");
      }
    }
  }
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        check(cyc_mat_eq(mats[g->mul(static_cast<int>(a),
                                     static_cast<int>(b))],
                         cyc_mat_mul(f, mats[a], mats[b])),
              ErrorKind::validation, "assignment is not a homomorphism");
  }
  return ComplexRep{std::move(g), f, degree, std::move(mats)};
}

ComplexRep direct_sum(const ComplexRep& a, const ComplexRep& b) {
  check(a.group == b.group && a.field.order == b.field.order,
        ErrorKind::validation, "direct sum needs matching group and field");
  ComplexRep s;
  s.group = a.group;
  s.field = a.field;
  s.degree = a.degree + b.degree;
  s.matrices.reserve(a.matrices.size());
  for (std::size_t e = 0; e < a.matrices.size(); ++e) {
    CycMatrix m = cyc_mat_zero(a.field, s.degree, s.degree);
    for (std::size_t i = 0; i < a.degree; ++i)
      for (std::size_t j = 0; j < a.degree; ++j)
        m.at(i, j) = a.matrices[e].at(i, j);
    for (std::size_t i = 0; i < b.degree; ++i)
      for (std::size_t j = 0; j < b.degree; ++j)
        m.at(a.degree + i, a.degree + j) = b.matrices[e].at(i, j);
    s.matrices.push_back(std::move(m));
  }
  return s;
}

RealifiedRep realify_rep(const ComplexRep& phi) {
  RealifiedRep r;
  r.group = phi.group;
  r.degree = 2 * phi.degree;
  r.matrices.reserve(phi.matrices.size());
  for (const CycMatrix& m : phi.matrices)
    r.matrices.push_back(realify_matrix(phi.field, m));
  return r;
}

std::vector<CycRat> complex_character(const ComplexRep& phi) {
  const FiniteGroup& g = *phi.group;
  std::vector<CycRat> chi;
  chi.reserve(g.num_classes());
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    chi.push_back(
        cyc_mat_trace(phi.field, phi.matrices[g.class_rep(static_cast<int>(c))]));
  return chi;
}

std::size_t c_homogeneity(const ComplexRep& phi, std::uint64_t seed) {
  CharacterTable t =
      character_table(phi.group, seed, phi.field.order, phi.degree);
  check_internal(t.big_order % phi.field.order == 0,
                 "table modulus misses the entry conductor");
  std::uint64_t root_e =
      powmod(t.big_root, t.big_order / phi.field.order, t.ell);

  std::vector<CycRat> chi = complex_character(phi);
  std::vector<std::uint64_t> values(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) {
    CycInt coords(phi.field.degree);
    for (std::size_t j = 0; j < phi.field.degree; ++j) {
      check(chi[c][j].get_den() == 1, ErrorKind::validation,
            "character value is not an algebraic integer");
      coords[j] = chi[c][j].get_num();
    }
    values[c] = cyc_reduce_mod(phi.field, coords, root_e, t.ell);
  }
  auto decomposition = multiplicities_modl(t, values, Int(phi.degree));
  return decomposition.size();
}

namespace {

std::string cyc_mat_key(const CycMatrix& m) {
  std::ostringstream os;
  for (const CycRat& e : m.entries)
    for (const Rat& c : e) os << c.get_str() << ',';
  return os.str();
}

// Closure of the complex linear parts: the point group with its matrices,
// index-aligned.
std::pair<GroupPtr, std::vector<CycMatrix>> complex_point_group(
    const CycField& f, const std::vector<CycMatrix>& gens, std::size_t cap) {
  std::vector<CycMatrix> elems{cyc_mat_identity(f, gens[0].rows)};
  std::map<std::string, int> index{{cyc_mat_key(elems[0]), 0}};
  std::vector<int> gen_idx;
  for (std::size_t qi = 0; qi < elems.size(); ++qi)
    for (const CycMatrix& g : gens) {
      CycMatrix prod = cyc_mat_mul(f, elems[qi], g);
      std::string key = cyc_mat_key(prod);
      if (!index.count(key)) {
        check(elems.size() < cap, ErrorKind::cap,
              "point group exceeds the order cap");
        index.emplace(key, static_cast<int>(elems.size()));
        elems.push_back(std::move(prod));
      }
    }
  for (const CycMatrix& g : gens) {
    int i = index.at(cyc_mat_key(g));
    if (i != 0 &&
        std::find(gen_idx.begin(), gen_idx.end(), i) == gen_idx.end())
      gen_idx.push_back(i);
  }
  std::size_t n = elems.size();
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      cayley[a][b] = index.at(cyc_mat_key(cyc_mat_mul(f, elems[a], elems[b])));
  auto group = std::make_shared<const FiniteGroup>(std::move(cayley),
                                                   std::move(gen_idx));
  return {group, std::move(elems)};
}

}  // namespace

KahlerVerdict kahler_theorem_check(const CycField& f,
                                   const std::vector<ComplexAffine>& gens,
                                   std::size_t order_cap, std::size_t h2_cap,
                                   std::uint64_t seed) {
  check(!gens.empty(), ErrorKind::validation, "no generators given");
  std::vector<AffinePair> real_gens;
  real_gens.reserve(gens.size());
  for (const ComplexAffine& g : gens)
    real_gens.push_back(realify_affine(f, g));

  ExtractedData data = extract_data(real_gens, order_cap, h2_cap);
  CrystalGroup gamma = build_extension(data.lattice, data.cocycle);
  check(!torsion_search(gamma).has_value(), ErrorKind::validation,
        "realified group has torsion");

  std::vector<CycMatrix> linear_parts;
  linear_parts.reserve(gens.size());
  for (const ComplexAffine& g : gens) linear_parts.push_back(g.linear);
  auto [cgroup, cmats] = complex_point_group(f, linear_parts, order_cap);
  check_internal(cgroup->order() == data.point_group->order(),
                 "complex and realified point groups disagree");
  ComplexRep phi{cgroup, f, linear_parts[0].rows, std::move(cmats)};

  KahlerVerdict v;
  v.group_order = cgroup->order();
  v.c_components = c_homogeneity(phi, seed);

  CharacterTable t =
      character_table(data.point_group, seed, 1, data.lattice.rank());
  v.real_report = homogeneity_test(data.lattice, t, galois_orbits(t));

  v.consistent = v.c_components != 1 || v.real_report.homogeneous;
  v.theorem_holds = v.group_order == 1 ||
                    (v.c_components >= 2 && v.real_report.component_count >= 2);
  return v;
}

}  // namespace holo
